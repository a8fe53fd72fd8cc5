#pragma once

// Generator-count series for free Omega_*-modules (Z_P-local, X = point):
// partitions, products of BU(k), W-orbit counts of permuted monomial bases
// by Burnside's lemma, and the dihedral certification.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ekt/group.hpp"

namespace ekt {

// Truncated series in t indexed by topological degree 0..max_degree.
class PowerSeries {
 public:
  explicit PowerSeries(int max_degree = 0);
  static PowerSeries one(int max_degree);
  // t^degree (zero if degree > max_degree)
  static PowerSeries monomial(int degree, int max_degree);
  // 1 / (1 - t^step), step > 0
  static PowerSeries geometric(int step, int max_degree);

  int max_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }
  const mpz_class& operator[](int n) const { return coeffs_[n]; }
  mpz_class& operator[](int n) { return coeffs_[n]; }

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator*=(const PowerSeries& o);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator*(PowerSeries a, const PowerSeries& b) { return a *= b; }
  // Throws Inconsistent unless every coefficient is divisible by k.
  PowerSeries& divide_exact(long k);

  bool odd_part_vanishes() const;
  bool nonnegative() const;
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<mpz_class> coeffs_;
};

// Coefficient 2k is the number of partitions of k. Needs max_degree <= 200.
PowerSeries omega_generator_series(int max_degree);

// Degrees |rho| of a set of irreducibles, with a group of permutations of the
// index set (one entry per group element, so repeats are allowed).
struct RankProfile {
  std::vector<int> dims;
  std::vector<std::vector<int>> action;
};

// Irr(A) minus the trivial character (or all of it), acted on by elements of
// a.parent(), which must normalize a. Index i is table row i + 1 (or i).
RankProfile rank_profile(const Subgroup& a, bool exclude_trivial = true);
// Same indices with only the identity acting.
RankProfile rank_profile_trivial_action(const Subgroup& a, bool exclude_trivial = true);

// All (n_i) with sum n_i dims_i = k, in lexicographic order.
std::vector<std::vector<int>> enumerate_arrays(const RankProfile& profile, int k);
// coefficient of t^k in prod_i 1/(1 - t^dims_i), for k = 0..max_k
std::vector<mpz_class> array_count_series(const RankProfile& profile, int max_k);

// prod over ranks n of prod_{i=1}^{n} 1/(1 - t^{2i})
PowerSeries bu_generator_series(const std::vector<int>& ranks, int max_degree);

// (1/|W|) sum_w prod over cycles of w of S(t^{2 l |rho|}, t^{2 l}), where
// S(u, v) = sum_n u^n prod_{i=1}^{n} 1/(1 - v^i).
PowerSeries burnside_series(const RankProfile& profile, int max_degree);

// W = G/A acting on Irr(A) minus the trivial character. Throws NotNormal.
PowerSeries adjacent_family_series(const Subgroup& a, int max_degree);

struct ClassContribution {
  Subgroup representative;
  int class_size = 0;
  int normalizer_order = 0;
  PowerSeries series;
};

struct GlobalSeries {
  PowerSeries total;
  std::vector<ClassContribution> classes;
};

// Sum over conjugacy classes (A) of subgroups of the N_A/A-invariant series.
GlobalSeries global_generator_series(const GroupPtr& g, int max_degree);

struct FamilyRecord {
  std::string name;
  std::vector<Subgroup> members;
  bool closed = false;  // under subgroups and conjugation
};

struct AdjacentPair {
  std::string larger;
  std::string smaller;
  std::string difference;  // name of the conjugacy class the families differ by
  Subgroup representative;
  int class_size = 0;
  int weyl_order = 0;  // |N_A / A|
  PowerSeries series;
};

struct D2pReport {
  int p = 0;
  int max_degree = 0;
  std::string localization = "Z_P-local";
  std::vector<FamilyRecord> families;
  std::vector<AdjacentPair> pairs;
  int swap_pairs = 0;   // orbits of size 2 of W on Irr(Z/p) minus the trivial character
  int fixed_characters = 0;
  GlobalSeries global;
  bool families_ok = false;
  bool adjacency_ok = false;
  bool pairs_ok = false;
  bool odd_vanishing = false;
  bool nonnegative = false;
  bool sum_matches = false;  // global total = sum of the pair series plus the F0 part
  bool ok = false;
};

// Throws NotPrime, NotOdd; InvalidArgument unless p <= 13 and 0 <= max_degree <= 60.
D2pReport d2p_certify(int p, int max_degree);

}  // namespace ekt

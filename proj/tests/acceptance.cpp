// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "ekt/bordism.hpp"
#include "ekt/bundle.hpp"
#include "ekt/catalog.hpp"
#include "ekt/character.hpp"
#include "ekt/clifford.hpp"
#include "ekt/error.hpp"
#include "ekt/io.hpp"
#include "ekt/rep_matrices.hpp"
#include "oracle.hpp"

using namespace ekt;

namespace {

// Pinned budgets and tolerances. Character and series checks are exact.
constexpr double kTableSeconds = 30.0;
constexpr double kBundleSeconds = 60.0;
constexpr double kConstructionTol = 1e-8;
constexpr double kSnapTol = 1e-6;
constexpr int kBundlesPerPair = 100;
constexpr int kBurnsideDegree = 20;
constexpr int kD2pDegree = 40;
constexpr int kArrayDegree = 30;
constexpr int kPartitionK = 100;
constexpr long kEnumerationLimit = 200000;  // explicit array enumeration up to this many arrays

struct Result {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CliffordOptions pinned_options() {
  CliffordOptions o;
  o.rep.tol = kConstructionTol;
  o.rep.snap_tol = kSnapTol;
  return o;
}

struct Pair {
  std::string name;
  GroupPtr g;
  Subgroup a;
};

// every catalog group with each of its normal subgroups
std::vector<Pair> catalog_pairs() {
  std::vector<Pair> out;
  for (const auto& e : catalog()) {
    auto g = build(e.spec);
    for (auto& a : normal_subgroups(g)) out.push_back({e.spec.name, g, std::move(a)});
  }
  return out;
}

std::string pair_name(const Pair& p) { return p.name + "/" + std::to_string(p.a.order()); }

Result orthogonality() {
  Result r;
  const auto t0 = std::chrono::steady_clock::now();
  int groups = 0;
  for (const auto& e : catalog()) {
    auto g = build(e.spec);
    const auto t = character_table(g);
    ++groups;
    const int k = g->num_classes();
    if (t.size() != k) r.fail(e.spec.name + ": row count differs from class count");
    if (t.size() != e.num_classes) r.fail(e.spec.name + ": class count differs from the catalog");
    long sum_sq = 0;
    for (int d : t.degrees) sum_sq += static_cast<long>(d) * d;
    if (sum_sq != g->order()) r.fail(e.spec.name + ": sum of squared degrees is not |G|");
    for (int i = 0; i < t.size(); ++i)
      for (int j = 0; j < t.size(); ++j)
        if (inner_product(t.rows[i], t.rows[j]) != Cyclotomic(i == j ? 1 : 0))
          r.fail(e.spec.name + ": rows " + std::to_string(i) + ", " + std::to_string(j) + " not orthonormal");
    for (int c = 0; c < k; ++c)
      for (int d = 0; d < k; ++d) {
        Cyclotomic s;
        for (const auto& row : t.rows) s += row[c] * row[d].conj();
        if (s != Cyclotomic(c == d ? g->centralizer_order(c) : 0))
          r.fail(e.spec.name + ": columns " + std::to_string(c) + ", " + std::to_string(d) + " not orthogonal");
      }
  }
  const double secs = seconds_since(t0);
  if (secs >= kTableSeconds) r.fail("took " + std::to_string(secs) + " s");
  if (r.ok) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%d groups, exact, %.2f s (budget %.0f s)", groups, secs, kTableSeconds);
    r.detail = buf;
  }
  return r;
}

Result d8_example() {
  Result r;
  const auto spec = dihedral_spec(4);
  auto g = build(spec);
  auto a = distinguished_normal(g, spec);
  const auto ta = character_table(a.group());
  if (a.order() != 4 || ta.size() != 4) {
    r.fail("Z/4 does not have four irreducibles");
    return r;
  }
  const int ga = g->generators()[0], gb = g->generators()[1];
  const Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  // index of rho^k, the character with rho^k(a) = i^k
  std::vector<int> power(4, -1);
  for (int k = 0; k < 4; ++k)
    for (int row = 0; row < 4; ++row)
      if (ta.rows[row].at(a.local(ga)) == Cyclotomic::root_of_unity(4, k)) power[k] = row;
  for (int k = 0; k < 4; ++k)
    if (power[k] < 0) r.fail("no character sends a to i^" + std::to_string(k));
  if (!r.ok) return r;
  for (int k = 0; k < 4; ++k)
    for (int e = 0; e < 4; ++e) {
      Cyclotomic want = Cyclotomic::root_of_unity(4, static_cast<long long>(k) * e);
      if (ta.rows[power[k]].at(a.local(g->pow(ga, e))) != want) r.fail("rho^k is not the k-th power of rho");
    }
  if (ta.rows[power[1]].at(a.local(ga)) != i) r.fail("rho(a) != i");
  if (irr_action(a, ta, gb, power[1]) != power[3] || irr_action(a, ta, gb, power[3]) != power[1])
    r.fail("b does not swap rho and rho^3");
  if (irr_action(a, ta, gb, power[0]) != power[0] || irr_action(a, ta, gb, power[2]) != power[2])
    r.fail("b moves 1 or rho^2");

  const auto orbits = orbit_decomposition(a, pinned_options());
  std::vector<std::vector<int>> got;
  for (const auto& o : orbits) got.push_back(o.orbit);
  std::vector<std::vector<int>> want{{power[0]}, {power[2]}, {std::min(power[1], power[3]), std::max(power[1], power[3])}};
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want) r.fail("orbits are not {1}, {rho^2}, {rho, rho^3}");

  const auto f = io::load_bundle(std::string(EKT_DATA_DIR) + "/bundles/d8_rho.json");
  const auto fiber = fiber_character(f.bundle, 0);
  const int fa = f.group->generators()[0];
  if (!(fiber.stabilizer == f.normal) || f.normal.order() != 4 || !f.normal.contains(fa))
    r.fail("shipped bundle: stabilizer of the base coset is not <a>");
  else if (fiber.character.at(fiber.stabilizer.local(fa)) != i || fiber.character.degree() != Cyclotomic(1))
    r.fail("shipped bundle: fiber over the base coset is not rho");
  const auto rep = verify_decomposition(f.bundle, f.normal, pinned_options());
  if (!rep.ok) r.fail("shipped bundle fails verify_decomposition");
  if (r.ok)
    r.detail = "Irr(Z/4) = {1, rho, rho^2, rho^3}, rho(a) = i; b swaps rho, rho^3; orbits {1}, {rho^2}, "
               "{rho, rho^3}; shipped bundle verified at " + std::to_string(rep.points.size()) + " points";
  return r;
}

Result rank_identity(const std::vector<Pair>& pairs) {
  Result r;
  bool d8 = false, q8 = false;
  for (const auto& p : pairs) {
    const auto rep = k_decomposition_report(p.a, pinned_options());
    int lying = 0, regular = 0;
    std::vector<int> counts;
    for (const auto& o : rep.orbits) {
      lying += static_cast<int>(o.lying_over.size());
      regular += o.regular_count;
      counts.push_back(o.twisted_count);
      if (o.twisted_count != o.regular_count)
        r.fail(pair_name(p) + ": |lying_over| != omega-regular count for orbit of " + std::to_string(o.representative));
    }
    if (lying != rep.total_irr || regular != rep.total_irr) r.fail(pair_name(p) + ": counts do not sum to |Irr(G)|");
    if (!rep.partition_ok) r.fail(pair_name(p) + ": lying-over sets do not partition Irr(G)");
    std::sort(counts.begin(), counts.end());
    if (p.name == "D8" && p.a.order() == 4 && p.a.is_subgroup_of(Subgroup::generated(p.g, {p.g->generators()[0]})))
      d8 = rep.total_irr == 5 && counts == std::vector<int>{1, 2, 2};
    if (p.name == "Q8" && p.a == center(p.g)) q8 = rep.total_irr == 5 && counts == std::vector<int>{1, 4};
  }
  if (!d8) r.fail("D8/Z4 is not 5 = 2+2+1");
  if (!q8) r.fail("Q8/center is not 5 = 4+1");
  if (r.ok) r.detail = std::to_string(pairs.size()) + " pairs; D8/Z4: 5 = 2+2+1, Q8/Z(Q8): 5 = 4+1";
  return r;
}

Result triviality(const std::vector<Pair>& pairs) {
  Result r;
  int records = 0, nontrivial = 0;
  bool q8 = false;
  for (const auto& p : pairs) {
    for (const auto& o : orbit_decomposition(p.a, pinned_options())) {
      const auto& ob = o.obstruction;
      const FiniteGroup& q = *ob.quotient.group();
      ++records;
      if (!ob.trivial) ++nontrivial;
      if (ob.max_snap_distance > kSnapTol || ob.max_scalar_residual > kSnapTol)
        r.fail(pair_name(p) + ": snapping outside tolerance");
      if (!is_normalized_cocycle(q, ob.omega, ob.root_order)) r.fail(pair_name(p) + ": not a cocycle");
      if (is_coboundary(q, ob.omega, ob.root_order) != ob.trivial)
        r.fail(pair_name(p) + ": character criterion and cocycle class disagree");
      if ((o.regular_count == q.num_classes()) != ob.trivial)
        r.fail(pair_name(p) + ": omega-regular count disagrees with the character criterion");
      if (p.name == "Q8" && p.a == center(p.g) && !ob.trivial) {
        bool v4 = q.order() == 4 && q.exponent() == 2;
        q8 = v4 && o.regular_count == 1 && !is_coboundary(q, ob.omega, ob.root_order);
      }
    }
  }
  if (!q8) r.fail("Q8/center: no nontrivial class with one omega-regular class on Z/2 x Z/2");
  if (r.ok)
    r.detail = std::to_string(records) + " orbit records, " + std::to_string(nontrivial) +
               " nontrivial; Q8/Z(Q8): nontrivial, 1 omega-regular class on Z/2 x Z/2";
  return r;
}

Result random_bundles(const std::vector<Pair>& pairs) {
  Result r;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(0xB0D1E5);
  long checked = 0, points = 0;
  for (const auto& p : pairs) {
    const auto orbits = orbit_decomposition(p.a, pinned_options());
    BundleSampler sampler(p.a);
    for (int trial = 0; trial < kBundlesPerPair; ++trial) {
      const auto e = sampler.sample(rng);
      const auto rep = verify_decomposition(e, orbits);
      ++checked;
      points += static_cast<long>(rep.points.size());
      if (!rep.ok) r.fail(pair_name(p) + ": bundle " + std::to_string(trial) + " fails");
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= kBundleSeconds) r.fail("took " + std::to_string(secs) + " s");
  if (r.ok) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%ld bundles over %zu pairs, %ld points, exact, %.2f s (budget %.0f s)", checked,
                  pairs.size(), points, secs, kBundleSeconds);
    r.detail = buf;
  }
  return r;
}

Result burnside() {
  Result r;
  std::vector<std::pair<std::string, Subgroup>> cases;
  for (int p : {3, 5, 7}) {
    const auto spec = dihedral_spec(p);
    auto g = build(spec);
    cases.emplace_back(spec.name + "/Z" + std::to_string(p), distinguished_normal(g, spec));
  }
  auto z4 = build(cyclic_spec(4));
  cases.emplace_back("Z4/Z2", Subgroup::generated(z4, {z4->pow(z4->generators()[0], 2)}));
  for (const auto& [name, a] : cases) {
    const auto s = adjacent_family_series(a, kBurnsideDegree);
    if (s.coefficients() != oracle::orbit_counts(rank_profile(a), kBurnsideDegree))
      r.fail(name + ": series differs from explicit orbit enumeration");
  }
  if (r.ok) r.detail = "D6/Z3, D10/Z5, D14/Z7, Z4/Z2 agree in every degree <= " + std::to_string(kBurnsideDegree);
  return r;
}

Result d2p() {
  Result r;
  for (int p : {3, 5, 7, 11}) {
    const auto rep = d2p_certify(p, kD2pDegree);
    const std::string name = "D" + std::to_string(2 * p);
    const auto& s = rep.global.total;
    for (int n = 1; n <= kD2pDegree; n += 2)
      if (s[n] != 0) r.fail(name + ": nonzero coefficient in degree " + std::to_string(n));
    if (!s.nonnegative()) r.fail(name + ": negative coefficient");
    const auto classes = subgroup_classes(build(dihedral_spec(p)));
    if (s[0] != 4 || classes.size() != 4) r.fail(name + ": degree-0 coefficient is not 4");
    if (!rep.ok) r.fail(name + ": certification checks fail");
  }
  if (r.ok)
    r.detail = "p = 3, 5, 7, 11 to degree " + std::to_string(kD2pDegree) +
               ": odd degrees vanish, even coefficients >= 0, degree 0 = 4 subgroup classes";
  return r;
}

// number of (n_i) with sum n_i dims_i = k, by recursion over the irreducibles
mpz_class count_arrays(const std::vector<int>& dims, std::size_t i, int k,
                       std::map<std::pair<std::size_t, int>, mpz_class>& memo) {
  if (i == dims.size()) return k == 0 ? 1 : 0;
  auto key = std::make_pair(i, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  mpz_class c = 0;
  for (int n = 0; n * dims[i] <= k; ++n) c += count_arrays(dims, i + 1, k - n * dims[i], memo);
  return memo[key] = c;
}

Result generating_functions() {
  Result r;
  int groups = 0;
  long enumerated = 0;
  for (const auto& e : catalog()) {
    auto g = build(e.spec);
    const auto prof = rank_profile_trivial_action(Subgroup::whole(g));
    ++groups;
    // prod over nontrivial rho of 1 / (1 - t^{|rho|})
    std::vector<mpz_class> gf(kArrayDegree + 1, 0);
    gf[0] = 1;
    for (int d : prof.dims)
      for (int k = d; k <= kArrayDegree; ++k) gf[k] += gf[k - d];
    std::map<std::pair<std::size_t, int>, mpz_class> memo;
    for (int k = 0; k <= kArrayDegree; ++k) {
      mpz_class count;
      if (gf[k] <= kEnumerationLimit) {
        count = static_cast<unsigned long>(enumerate_arrays(prof, k).size());
        ++enumerated;
      } else {
        count = count_arrays(prof.dims, 0, k, memo);
      }
      if (count != gf[k]) r.fail(e.spec.name + ": array count differs at k = " + std::to_string(k));
    }
  }
  const auto omega = omega_generator_series(2 * kPartitionK);
  const auto p = oracle::partitions(kPartitionK);
  for (int k = 0; k <= kPartitionK; ++k)
    if (omega[2 * k] != p[k]) r.fail("Omega rank in degree " + std::to_string(2 * k) + " differs from p(k)");
  if (!omega.odd_part_vanishes()) r.fail("Omega has odd-degree generators");
  if (r.ok)
    r.detail = std::to_string(groups) + " groups, k <= " + std::to_string(kArrayDegree) + " (" +
               std::to_string(enumerated) + " by explicit enumeration); p(k) for k <= " + std::to_string(kPartitionK);
  return r;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int n, const char* name, const std::function<Result()>& f) {
    Result r;
    try {
      r = f();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s [%d] %s: %s\n", r.ok ? "PASS" : "FAIL", n, name, r.detail.c_str());
    std::fflush(stdout);
    if (!r.ok) ++failures;
  };
  report(1, "character tables exact", orthogonality);
  const auto pairs = catalog_pairs();
  report(2, "D8 over Z/4", d8_example);
  report(3, "rank identity both ways", [&] { return rank_identity(pairs); });
  report(4, "obstruction triviality", [&] { return triviality(pairs); });
  report(5, "random bundles decompose", [&] { return random_bundles(pairs); });
  report(6, "Burnside against enumeration", burnside);
  report(7, "dihedral generator counts", d2p);
  report(8, "generating functions", generating_functions);
  return failures == 0 ? 0 : 1;
}

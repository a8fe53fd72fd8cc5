#pragma once

// Explicit unitary irreducible representations (numeric, double precision)
// and the scalar 2-cocycle measuring the failure of a stabilized irreducible
// of a normal subgroup to extend.

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <vector>

#include "ekt/character.hpp"
#include "ekt/group.hpp"

namespace ekt {

using Matrix = Eigen::MatrixXcd;

struct RepOptions {
  double tol = 1e-8;       // construction residuals
  double snap_tol = 1e-6;  // distance allowed when snapping scalars to roots of unity
  std::uint64_t seed = 0x5EED;
  int max_order = 256;
  int max_retries = 20;
};

struct MatrixRep {
  GroupPtr group;
  int dimension = 0;
  std::vector<Matrix> images;  // indexed by element
  ClassFunction character;
  int index = -1;  // row in the group's character table

  const Matrix& operator()(int g) const { return images[g]; }
};

// One unitary representation per row of the character table, in table order.
// Throws CapExceeded above opts.max_order, SplitFailure if the eigenspaces of
// the random commutant elements never separate.
std::vector<MatrixRep> matrix_irreps(const GroupPtr& g, const RepOptions& opts = {});
std::vector<MatrixRep> matrix_irreps(const CharacterTable& table, const RepOptions& opts = {});

// Operator-norm residuals of the representation axioms.
double homomorphism_residual(const MatrixRep& rep);
double unitarity_residual(const MatrixRep& rep);
// max |trace M(g) - chi(g)|
double trace_residual(const MatrixRep& rep);

// The representation y -> rep(x y x^-1) of the same group, for an automorphism
// given as the element map y -> image[y].
MatrixRep twist(const MatrixRep& rep, const std::vector<int>& image);

// Unitary U with U r1(g) U^-1 = r2(g) for every g, or nothing when the
// characters differ. Throws GroupMismatch, NumericalDegeneracy.
std::optional<Matrix> intertwiner(const MatrixRep& r1, const MatrixRep& r2,
                                  const RepOptions& opts = {});

// The stabilizer G_rho of rho (an irreducible of the normal subgroup A) and
// Q = G_rho / A. With s_q the section of q and U_q intertwining
// rho(y) -> rho(s_q y s_q^-1) with det U_q = 1 (U_0 = I),
//   U_{q1} U_{q2} = omega(q1, q2) U_{q1 q2} rho(a),   s_{q1} s_{q2} = s_{q1 q2} a.
// omega^d = det rho(a)^-1, so its values lie in mu_N for N = d * exp(A);
// they are stored as exponents k meaning exp(2 pi i k / N).
struct ObstructionRecord {
  MatrixRep rho;
  Subgroup normal;          // A in G
  Subgroup stabilizer;      // G_rho in G
  Subgroup normal_in_stabilizer;  // A inside stabilizer.group()
  QuotientGroup quotient;   // stabilizer.group() / A
  int root_order = 1;       // N
  std::vector<std::vector<int>> omega;
  std::vector<Matrix> intertwiners;  // U_q, indexed by q
  double max_snap_distance = 0;
  double max_scalar_residual = 0;
  bool trivial = false;     // an extension of rho to G_rho exists (character test)

  int quotient_order() const { return quotient.group()->order(); }
};

// Throws NotNormal, SnapFailure, NonScalar, InvalidCocycle.
ObstructionRecord obstruction_cocycle(const Subgroup& a, const MatrixRep& rho,
                                      const RepOptions& opts = {});

// Exact check of the normalized 2-cocycle identity in mu_N.
bool is_normalized_cocycle(const FiniteGroup& q, const std::vector<std::vector<int>>& omega,
                           int root_order);

// Whether the class of omega in H^2(Q, C^x) vanishes. A trivializing f can be
// taken with values in mu_M, M = N exp(Q), so this is a linear system over Z/M,
// decided exactly by diagonal reduction.
bool is_coboundary(const FiniteGroup& q, const std::vector<std::vector<int>>& omega, int root_order);

}  // namespace ekt

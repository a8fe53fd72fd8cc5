#pragma once

// Equivariant vector bundles over finite G-sets, described up to isomorphism
// by one stabilizer character per orbit, and the fiberwise check that E is
// the sum of its induced isotypic pieces over a base on which A acts trivially.

#include <map>
#include <random>
#include <vector>

#include "ekt/character.hpp"
#include "ekt/clifford.hpp"
#include "ekt/group.hpp"

namespace ekt {

class GSet {
 public:
  GSet() = default;
  // action[g][x] for every element g; throws InvalidArgument unless it is a left action.
  static GSet from_action(GroupPtr g, std::vector<std::vector<int>> action);
  // images[k] is the permutation of the points by the k-th generator of g.
  static GSet from_generator_images(GroupPtr g, int points, const std::vector<std::vector<int>>& images);
  // G/H; point i is the coset with the i-th smallest minimal element, point 0 is H.
  static GSet cosets(const Subgroup& h);
  static GSet disjoint_union(const std::vector<GSet>& parts);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int size() const { return points_; }
  int act(int g, int x) const { return action_[g][x]; }
  const std::vector<std::vector<int>>& action() const { return action_; }

  // Orbits sorted by minimal point; the representative is that minimum.
  int num_orbits() const { return static_cast<int>(orbits_.size()); }
  const std::vector<int>& orbit(int o) const { return orbits_[o]; }
  int orbit_of(int x) const { return orbit_of_[x]; }
  int orbit_rep(int o) const { return orbits_[o].front(); }
  // the smallest g with g . rep = x
  int transporter(int x) const { return transporter_[x]; }
  const Subgroup& rep_stabilizer(int o) const { return rep_stabilizers_[o]; }
  Subgroup stabilizer(int x) const;

  bool fixed_by(const Subgroup& a) const;

 private:
  void finish();

  GroupPtr group_;
  int points_ = 0;
  std::vector<std::vector<int>> action_;
  std::vector<std::vector<int>> orbits_;
  std::vector<int> orbit_of_;
  std::vector<int> transporter_;
  std::vector<Subgroup> rep_stabilizers_;
};

class EquivariantBundle {
 public:
  EquivariantBundle() = default;
  // fibers[o] is a character of base.rep_stabilizer(o).group(); throws
  // InvalidArgument unless each is a nonnegative integer combination of irreducibles.
  EquivariantBundle(GSet base, std::vector<ClassFunction> fibers);
  static EquivariantBundle from_multiplicities(GSet base, const std::vector<std::vector<long>>& mults);

  const GSet& base() const { return base_; }
  const ClassFunction& orbit_fiber(int o) const { return fibers_[o]; }
  int rank(int x) const;

  // character value at x of k in Stab(x), transported from the orbit representative
  const Cyclotomic& fiber_value(int x, int k) const;

  // A claimed fiber character at some point, checked by verify_decomposition
  // against the decomposition but never used to build it.
  void declare(int x, const ClassFunction& chi);
  const std::map<int, ClassFunction>& declared() const { return declared_; }

 private:
  GSet base_;
  std::vector<ClassFunction> fibers_;
  std::map<int, ClassFunction> declared_;
};

struct FiberCharacter {
  Subgroup stabilizer;
  ClassFunction character;  // on stabilizer.group()
};

FiberCharacter fiber_character(const EquivariantBundle& e, int x);

// <Res_A fiber(x), rho>; throws NotATrivial unless A fixes every point.
long isotypic_rank(const EquivariantBundle& e, const Subgroup& a, const ClassFunction& rho, int x);

// Character at x of the piece for one orbit of G on Irr(A): coset sum over
// G/G_rho of the rho-isotypic parts at the translated points.
FiberCharacter induction_piece_character(const EquivariantBundle& e, const IrrOrbitRecord& orbit, int x);

struct PointCheck {
  int point = 0;
  bool declared = false;  // fiber taken from a declaration rather than transported orbit data
  bool ok = false;
  ClassFunction fiber;
  ClassFunction sum;                   // sum of the pieces
  std::vector<ClassFunction> pieces;   // one per orbit record
};

struct VerificationReport {
  bool ok = false;
  std::vector<PointCheck> points;  // one per base point
};

VerificationReport verify_decomposition(const EquivariantBundle& e,
                                        const std::vector<IrrOrbitRecord>& orbits);
VerificationReport verify_decomposition(const EquivariantBundle& e, const Subgroup& a,
                                        const CliffordOptions& opts = {});

// Rank of Hom_A(V_rho, E) at each point, for one orbit record.
struct TwistedPiece {
  int representative = -1;
  std::vector<long> ranks;
};
std::vector<TwistedPiece> twisted_pieces(const EquivariantBundle& e,
                                         const std::vector<IrrOrbitRecord>& orbits);

// Random bundles over unions of G/H with A <= H, so the base is A-trivial.
class BundleSampler {
 public:
  explicit BundleSampler(const Subgroup& a);
  EquivariantBundle sample(std::mt19937_64& rng, int max_orbits = 3, int max_multiplicity = 2) const;

 private:
  Subgroup a_;
  std::vector<Subgroup> candidates_;
  std::vector<CharacterTable> tables_;
};

}  // namespace ekt

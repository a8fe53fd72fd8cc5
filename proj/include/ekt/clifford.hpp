#pragma once

// Clifford theory for a normal subgroup A of G: the conjugation action of G
// on Irr(A), orbits, stabilizers, the irreducibles of G lying over each
// orbit, and twisted counts via omega-regular classes.

#include <string>
#include <vector>

#include "ekt/character.hpp"
#include "ekt/group.hpp"
#include "ekt/rep_matrices.hpp"

namespace ekt {

// x -> chi(g^-1 x g) for chi on a.group() and g in a.parent().
ClassFunction conjugate_character(const ClassFunction& chi, const Subgroup& a, int g);

// Index of g.tau in table_a (the table of a.group()).
int irr_action(const Subgroup& a, const CharacterTable& table_a, int g, int tau);
// action[g][tau] for every element g of the parent.
std::vector<std::vector<int>> irr_action_table(const Subgroup& a, const CharacterTable& table_a);

// {g in G : g.chi = chi}
Subgroup irr_stabilizer(const Subgroup& a, const ClassFunction& chi);

// Some irreducible of the stabilizer has degree chi(1) and restricts to chi.
// a and stabilizer are subgroups of the same parent with a inside stabilizer.
// Throws NotStabilized if the stabilizer moves chi.
bool extension_exists(const Subgroup& stabilizer, const Subgroup& a, const ClassFunction& chi);

// Classes of q whose representative x has omega(x, c) = omega(c, x) for every
// c commuting with x. Throws InvalidCocycle unless omega is a normalized cocycle.
int omega_regular_count(const FiniteGroup& q, const std::vector<std::vector<int>>& omega,
                        int root_order);

struct IrrOrbitRecord {
  int representative = -1;  // index into Irr(A)
  std::vector<int> orbit;   // sorted
  Subgroup stabilizer;
  ObstructionRecord obstruction;
  std::vector<int> lying_over;  // indices into Irr(G)
  int twisted_count = 0;        // |lying_over|
  int regular_count = 0;        // omega-regular classes of the quotient
};

struct CliffordOptions {
  RepOptions rep;
  std::size_t max_order = kDefaultMaxOrder;
};

// One record per orbit of G on Irr(A), ordered by representative, where the
// representative is the orbit's smallest table index.
std::vector<IrrOrbitRecord> orbit_decomposition(const Subgroup& a, const CliffordOptions& opts = {});

struct DecompositionReport {
  GroupPtr group;
  Subgroup normal;
  CharacterTable table_g;
  CharacterTable table_a;
  std::vector<IrrOrbitRecord> orbits;
  int total_irr = 0;
  int sum_of_counts = 0;          // sum of |lying_over|
  int sum_of_regular_counts = 0;  // sum of omega-regular counts
  bool partition_ok = false;      // lying_over sets partition Irr(G)
  bool consistent = false;
  std::vector<std::string> warnings;
};

DecompositionReport k_decomposition_report(const Subgroup& a, const CliffordOptions& opts = {});

}  // namespace ekt

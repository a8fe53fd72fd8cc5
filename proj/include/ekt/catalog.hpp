#pragma once

#include <string>
#include <vector>

#include "ekt/group.hpp"

namespace ekt {

// Permutation data for a group, as carried by group files.
struct GroupSpec {
  std::string name;
  int degree = 1;
  std::vector<Permutation> generators;
  // indices into generators spanning the distinguished normal subgroup
  std::vector<int> normal_generators;
};

GroupSpec cyclic_spec(int n);
// D_{2n}: symmetries of the n-gon, generators a = rotation, b = reflection i -> -i
GroupSpec dihedral_spec(int n);
// generalized quaternion Q_{4n} in its left regular representation
GroupSpec quaternion_spec(int n);
GroupSpec symmetric_spec(int n);
GroupSpec alternating4_spec();
GroupSpec klein_four_spec();
// Z/p x| Z/q acting on Z/p by an element of multiplicative order q; needs q | p-1
GroupSpec semidirect_spec(int p, int q);
GroupSpec trivial_spec();

GroupPtr build(const GroupSpec& spec, std::size_t max_order = kDefaultMaxOrder);
// Subgroup generated by spec.normal_generators (trivial if none).
Subgroup distinguished_normal(const GroupPtr& g, const GroupSpec& spec);

struct CatalogEntry {
  GroupSpec spec;
  int order = 0;
  int num_classes = 0;
  int num_subgroup_classes = 0;  // 0 when not documented
};

// Z/n (n<=16), D_2n (3<=n<=13), Q8, Q16, S3, S4, A4, Z/2xZ/2, Z/7x|Z/3, Z/5x|Z/4,
// Z/11x|Z/5, and the trivial group.
const std::vector<CatalogEntry>& catalog();
// Throws InvalidArgument for unknown names.
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace ekt

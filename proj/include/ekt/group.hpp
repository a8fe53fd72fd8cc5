#pragma once

// Finite groups stored by dense multiplication table, plus subgroups and
// quotients by normal subgroups. Element 0 is always the identity.

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ekt {

using Permutation = std::vector<int>;

constexpr std::size_t kDefaultMaxOrder = 10000;

class FiniteGroup;
class Subgroup;
class QuotientGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

class FiniteGroup {
 public:
  // Validates the table (identity at 0, Latin square, associativity; the
  // associativity check is exhaustive up to order 512 and sampled above).
  static GroupPtr from_table(std::string name, std::vector<std::vector<int>> table);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int identity() const { return 0; }
  int exponent() const { return exponent_; }

  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int pow(int a, long long k) const;
  // g * x * g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inverse_[g]); }
  int element_order(int a) const { return element_order_[a]; }

  // Conjugacy classes sorted by minimal element; the identity class is first.
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  int class_of(int g) const { return class_of_[g]; }
  int class_size(int c) const { return static_cast<int>(classes_[c].size()); }
  int class_rep(int c) const { return classes_[c].front(); }
  int centralizer_order(int c) const { return order_ / class_size(c); }

  // Identical order and multiplication table.
  bool same_table(const FiniteGroup& o) const { return order_ == o.order_ && table_ == o.table_; }

  // Permutation images when the group came from generators; empty otherwise.
  const std::vector<Permutation>& permutations() const { return permutations_; }
  // Element indices of the generators used at construction (may be empty).
  const std::vector<int>& generators() const { return generators_; }

 private:
  friend GroupPtr group_from_generators(int, const std::vector<Permutation>&, std::size_t,
                                        std::string);
  friend class Subgroup;
  friend QuotientGroup quotient(const Subgroup& normal);

  FiniteGroup() = default;
  void finish();  // inverses, element orders, exponent, classes

  std::string name_;
  int order_ = 0;
  int exponent_ = 1;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> element_order_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<Permutation> permutations_;
  std::vector<int> generators_;
};

// Closure of permutation generators on {0..degree-1}. Product convention:
// (g*h)(x) = g(h(x)). Elements are numbered in breadth-first discovery order.
GroupPtr group_from_generators(int degree, const std::vector<Permutation>& generators,
                               std::size_t max_order = kDefaultMaxOrder,
                               std::string name = "");

// A subgroup of a parent group, with its own table as a standalone group.
// Local element i corresponds to parent element members()[i]; since members
// are sorted and the parent identity is 0, local identity is 0 as well.
class Subgroup {
 public:
  Subgroup() = default;
  static Subgroup generated(GroupPtr parent, const std::vector<int>& generators);
  // Throws NotSubgroup unless members form a subgroup.
  static Subgroup from_members(GroupPtr parent, std::vector<int> members);
  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  const FiniteGroup& parent() const { return *parent_; }
  const GroupPtr& parent_ptr() const { return parent_; }
  const std::vector<int>& members() const { return members_; }
  const std::vector<int>& generators() const { return generators_; }
  int order() const { return static_cast<int>(members_.size()); }
  bool contains(int g) const { return local_of_[g] >= 0; }
  // Parent index -> local index, or -1.
  int local(int g) const { return local_of_[g]; }
  int global(int local_index) const { return members_[local_index]; }

  const GroupPtr& group() const { return local_; }

  bool is_normal() const;
  bool is_subgroup_of(const Subgroup& other) const;
  bool operator==(const Subgroup& other) const {
    return parent_ == other.parent_ && members_ == other.members_;
  }

 private:
  void build_local();

  GroupPtr parent_;
  std::vector<int> members_;
  std::vector<int> generators_;
  std::vector<int> local_of_;
  GroupPtr local_;
};

// G/A for a normal subgroup A. Coset 0 is A; cosets are numbered by their
// minimal element, and section(q) is that minimal element.
class QuotientGroup {
 public:
  const GroupPtr& group() const { return quotient_; }
  int project(int g) const { return projection_[g]; }
  int section(int q) const { return section_[q]; }
  const std::vector<int>& projection() const { return projection_; }
  const std::vector<int>& sections() const { return section_; }

 private:
  friend QuotientGroup quotient(const Subgroup& normal);
  GroupPtr quotient_;
  std::vector<int> projection_;
  std::vector<int> section_;
};

// Throws NotNormal if A is not normal in its parent.
QuotientGroup quotient(const Subgroup& normal);

Subgroup normalizer(const Subgroup& h);
Subgroup center(const GroupPtr& g);
// g H g^-1
Subgroup conjugate(const Subgroup& h, int g);

// Every subgroup, sorted by (order, members). Intended for small groups.
std::vector<Subgroup> all_subgroups(const GroupPtr& g);
// Conjugacy classes of subgroups; each class sorted, classes ordered by
// their first member's (order, members).
std::vector<std::vector<Subgroup>> subgroup_classes(const GroupPtr& g);
std::vector<Subgroup> normal_subgroups(const GroupPtr& g);

}  // namespace ekt

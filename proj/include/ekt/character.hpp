#pragma once

#include <cstddef>
#include <vector>

#include "ekt/cyclotomic.hpp"
#include "ekt/group.hpp"

namespace ekt {

// A class function: one exact value per conjugacy class of its group.
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(GroupPtr group, std::vector<Cyclotomic> values);

  static ClassFunction constant(GroupPtr group, long value);
  static ClassFunction zero(GroupPtr group) { return constant(std::move(group), 0); }
  static ClassFunction trivial(GroupPtr group) { return constant(std::move(group), 1); }
  static ClassFunction regular(GroupPtr group);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

  const Cyclotomic& operator[](int cls) const { return values_[cls]; }
  const Cyclotomic& at(int element) const { return values_[group_->class_of(element)]; }
  const Cyclotomic& degree() const { return values_[0]; }

  ClassFunction conj() const;

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(long k);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, long k) { return a *= k; }
  // pointwise product (character of the tensor product)
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);

  bool is_zero() const;
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);
  friend bool operator!=(const ClassFunction& a, const ClassFunction& b) { return !(a == b); }

 private:
  void require_same_group(const ClassFunction& o) const;

  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> rows;
  std::vector<int> degrees;

  int size() const { return static_cast<int>(rows.size()); }
  // index of the row equal to chi, or -1
  int find(const ClassFunction& chi) const;
  int trivial_index() const { return 0; }
};

struct CharacterOptions {
  std::size_t max_order = kDefaultMaxOrder;
};

// Dixon-Schneider over F_q (q prime, q = 1 mod exponent, q > 2 sqrt|G|)
// with exact lifting of the modular values to Q(zeta_e). Rows are sorted by
// degree, then by values in class order (see compare_values); the trivial
// character is row 0.
CharacterTable character_table(const GroupPtr& g, const CharacterOptions& opts = {});

// (1/|G|) sum_g a(g) conj(b(g)); throws GroupMismatch.
Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b);
// <chi, irreducible> as an integer; throws Inconsistent if it is not one.
long multiplicity(const ClassFunction& chi, const ClassFunction& irreducible);
// Multiplicities against every row; the inverse of combine().
std::vector<long> decompose(const ClassFunction& chi, const CharacterTable& table);
ClassFunction combine(const CharacterTable& table, const std::vector<long>& multiplicities);

// chi lives on h.parent(); the result lives on h.group().
ClassFunction restrict(const ClassFunction& chi, const Subgroup& h);
// chi lives on h.group(); the result lives on h.parent().
ClassFunction induce(const ClassFunction& chi, const Subgroup& h);

// The class of g^k for every class and every k modulo the class element order.
std::vector<std::vector<int>> power_maps(const FiniteGroup& g);

}  // namespace ekt

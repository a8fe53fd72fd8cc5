#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "ekt/catalog.hpp"
#include "ekt/error.hpp"
#include "ekt/group.hpp"

using namespace ekt;

namespace {

Permutation compose(const Permutation& g, const Permutation& h) {
  Permutation r(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) r[i] = g[h[i]];
  return r;
}

Permutation inverse(const Permutation& g) {
  Permutation r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[g[i]] = static_cast<int>(i);
  return r;
}

// Class sizes computed directly on permutations, independent of the table.
std::multiset<int> brute_class_sizes(const std::vector<Permutation>& elems) {
  std::set<Permutation> seen;
  std::multiset<int> sizes;
  for (const auto& x : elems) {
    if (seen.count(x)) continue;
    std::set<Permutation> cls;
    for (const auto& g : elems) cls.insert(compose(compose(g, x), inverse(g)));
    seen.insert(cls.begin(), cls.end());
    sizes.insert(static_cast<int>(cls.size()));
  }
  return sizes;
}

std::multiset<int> class_sizes(const FiniteGroup& g) {
  std::multiset<int> s;
  for (const auto& c : g.classes()) s.insert(static_cast<int>(c.size()));
  return s;
}

int element_of(const FiniteGroup& g, const Permutation& p) {
  const auto& perms = g.permutations();
  auto it = std::find(perms.begin(), perms.end(), p);
  REQUIRE(it != perms.end());
  return static_cast<int>(it - perms.begin());
}

}  // namespace

TEST_CASE("group_from_generators builds the expected groups") {
  auto z4 = group_from_generators(4, {{1, 2, 3, 0}});
  CHECK(z4->order() == 4);
  CHECK(z4->exponent() == 4);
  CHECK(z4->num_classes() == 4);

  auto d8 = group_from_generators(4, {{1, 2, 3, 0}, {0, 3, 2, 1}});
  CHECK(d8->order() == 8);
  CHECK(d8->num_classes() == 5);
  CHECK(class_sizes(*d8) == std::multiset<int>{1, 1, 2, 2, 2});
  CHECK(brute_class_sizes(d8->permutations()) == class_sizes(*d8));

  for (int p : {3, 5, 7, 11, 13}) {
    auto d = build(dihedral_spec(p));
    CHECK(d->order() == 2 * p);
  }

  auto trivial = group_from_generators(3, {});
  CHECK(trivial->order() == 1);
  CHECK(trivial->num_classes() == 1);
}

TEST_CASE("element 0 is the identity and the table is a group") {
  for (const auto& entry : catalog()) {
    auto g = build(entry.spec);
    CAPTURE(entry.spec.name);
    const int n = g->order();
    for (int a = 0; a < n; ++a) {
      CHECK(g->mul(0, a) == a);
      CHECK(g->mul(a, g->inv(a)) == 0);
      CHECK(g->pow(a, g->exponent()) == 0);
      CHECK(g->permutations()[g->mul(a, 1 % n)] ==
            compose(g->permutations()[a], g->permutations()[1 % n]));
    }
    CHECK(n % g->exponent() == 0);
  }
}

TEST_CASE("closure errors") {
  CHECK_THROWS_AS(group_from_generators(3, {{0, 0, 1}}), Error);
  try {
    group_from_generators(3, {{0, 0, 1}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidPermutation);
  }
  try {
    group_from_generators(5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, 50);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ClosureOverflow);
  }
  CHECK_NOTHROW(group_from_generators(5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, 120));
}

TEST_CASE("conjugacy classes") {
  auto z4 = build(cyclic_spec(4));
  CHECK(class_sizes(*z4) == std::multiset<int>{1, 1, 1, 1});
  auto s3 = build(dihedral_spec(3));
  CHECK(class_sizes(*s3) == std::multiset<int>{1, 2, 3});

  for (const auto& entry : catalog()) {
    auto g = build(entry.spec);
    CAPTURE(entry.spec.name);
    CHECK(g->order() == entry.order);
    CHECK(g->num_classes() == entry.num_classes);
    int total = 0;
    int prev_min = -1;
    for (const auto& c : g->classes()) {
      total += static_cast<int>(c.size());
      CHECK(g->order() % static_cast<int>(c.size()) == 0);
      CHECK(c.front() > prev_min);
      prev_min = c.front();
    }
    CHECK(total == g->order());
    CHECK(g->classes().front() == std::vector<int>{0});
    if (g->order() <= 24) CHECK(brute_class_sizes(g->permutations()) == class_sizes(*g));
  }
}

TEST_CASE("normalizer") {
  auto d8 = build(dihedral_spec(4));
  auto a = Subgroup::generated(d8, {d8->generators()[0]});
  CHECK(normalizer(a).order() == 8);

  for (int p : {3, 5, 7}) {
    auto d = build(dihedral_spec(p));
    auto b = Subgroup::generated(d, {d->generators()[1]});
    auto n = normalizer(b);
    CHECK(n.order() == 2);
    CHECK(n == b);
  }

  auto s4 = build(symmetric_spec(4));
  auto t = Subgroup::generated(s4, {element_of(*s4, {1, 0, 2, 3})});
  auto n = normalizer(t);
  // brute force on permutations: g (0 1) g^-1 == (0 1)
  int count = 0;
  for (const auto& g : s4->permutations())
    if (compose(compose(g, Permutation{1, 0, 2, 3}), inverse(g)) == Permutation{1, 0, 2, 3}) ++count;
  CHECK(count == 4);
  CHECK(n.order() == 4);

  for (const auto& entry : catalog()) {
    auto g = build(entry.spec);
    if (g->order() > 24) continue;
    for (const auto& h : all_subgroups(g)) {
      auto nh = normalizer(h);
      CHECK(h.is_subgroup_of(nh));
      auto inside = Subgroup::generated(nh.group(), [&] {
        std::vector<int> l;
        for (int x : h.members()) l.push_back(nh.local(x));
        return l;
      }());
      CHECK(inside.is_normal());
    }
  }
}

TEST_CASE("quotients") {
  auto d8 = build(dihedral_spec(4));
  auto a = distinguished_normal(d8, dihedral_spec(4));
  auto q = quotient(a);
  CHECK(q.group()->order() == 2);
  CHECK(q.section(0) == 0);

  auto whole = quotient(Subgroup::whole(d8));
  CHECK(whole.group()->order() == 1);

  auto q8 = build(quaternion_spec(2));
  auto z = center(q8);
  CHECK(z.order() == 2);
  auto k = quotient(z);
  CHECK(k.group()->order() == 4);
  CHECK(k.group()->exponent() == 2);
  CHECK(k.group()->num_classes() == 4);

  auto s3 = build(symmetric_spec(3));
  auto t = Subgroup::generated(s3, {s3->generators()[1]});
  try {
    quotient(t);
    FAIL("expected NotNormal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNormal);
  }

  for (const auto& entry : catalog()) {
    auto g = build(entry.spec);
    for (const auto& nsub : normal_subgroups(g)) {
      auto qq = quotient(nsub);
      CHECK(qq.group()->order() * nsub.order() == g->order());
      for (int x = 0; x < g->order(); ++x)
        for (int y = 0; y < g->order(); ++y)
          CHECK_EQ(qq.project(g->mul(x, y)), qq.group()->mul(qq.project(x), qq.project(y)));
      for (int c = 0; c < qq.group()->order(); ++c) CHECK(qq.project(qq.section(c)) == c);
      for (int x = 0; x < g->order(); ++x) CHECK((qq.project(x) == 0) == nsub.contains(x));
    }
  }
}

TEST_CASE("subgroup enumeration") {
  for (const auto& entry : catalog()) {
    if (entry.num_subgroup_classes == 0) continue;
    auto g = build(entry.spec);
    CAPTURE(entry.spec.name);
    CHECK(static_cast<int>(subgroup_classes(g).size()) == entry.num_subgroup_classes);
    for (const auto& h : all_subgroups(g)) CHECK(g->order() % h.order() == 0);
  }
  // D6: {1}, <a>, three reflections, D6
  auto d6 = build(dihedral_spec(3));
  CHECK(all_subgroups(d6).size() == 6);
}

TEST_CASE("from_table validates") {
  auto z2 = FiniteGroup::from_table("Z2", {{0, 1}, {1, 0}});
  CHECK(z2->order() == 2);
  CHECK_THROWS_AS(FiniteGroup::from_table("bad", {{0, 1}, {0, 1}}), Error);
  CHECK_THROWS_AS(FiniteGroup::from_table("bad", {{1, 0}, {0, 1}}), Error);
  // Latin square that is not associative (a loop of order 5)
  std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 4, 0, 1, 3},
                                        {3, 2, 4, 0, 1},
                                        {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_table("loop", loop), Error);
}

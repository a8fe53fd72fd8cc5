#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "ekt/catalog.hpp"
#include "ekt/clifford.hpp"
#include "ekt/error.hpp"

using namespace ekt;

namespace {

// index of lambda^l, the character of Z/p sending the rotation a to zeta_p^l
int power_character(const CharacterTable& t, int a_local, int p, int l) {
  for (int i = 0; i < t.size(); ++i)
    if (t.rows[i].at(a_local) == Cyclotomic::root_of_unity(p, l)) return i;
  return -1;
}

std::multiset<std::tuple<int, int, int>> shape(const Subgroup& a) {
  std::multiset<std::tuple<int, int, int>> s;
  for (const auto& o : orbit_decomposition(a))
    s.insert({static_cast<int>(o.orbit.size()), o.obstruction.quotient_order(), o.twisted_count});
  return s;
}

// The same group with its elements renumbered by a random permutation fixing 0.
std::pair<GroupPtr, std::vector<int>> relabel(const FiniteGroup& g, std::mt19937& rng) {
  const int n = g.order();
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::shuffle(pi.begin() + 1, pi.end(), rng);
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[pi[x]][pi[y]] = pi[g.mul(x, y)];
  return {FiniteGroup::from_table(g.name() + "'", table), pi};
}

}  // namespace

TEST_CASE("D8 acting on Irr(Z/4)") {
  auto spec = dihedral_spec(4);
  auto d8 = build(spec);
  auto a = distinguished_normal(d8, spec);
  auto ta = character_table(a.group());
  const int b = d8->generators()[1];
  CHECK(irr_action(a, ta, b, 1) == 3);
  CHECK(irr_action(a, ta, b, 3) == 1);
  CHECK(irr_action(a, ta, b, 2) == 2);
  CHECK(irr_action(a, ta, b, 0) == 0);
  for (int x : a.members())
    for (int t = 0; t < 4; ++t) CHECK(irr_action(a, ta, x, t) == t);
}

TEST_CASE("D2p: the reflection sends lambda^l to lambda^(p-l)") {
  for (int p : {3, 5, 7, 11}) {
    auto spec = dihedral_spec(p);
    auto g = build(spec);
    auto a = distinguished_normal(g, spec);
    auto ta = character_table(a.group());
    const int rot = a.local(g->generators()[0]);
    const int b = g->generators()[1];
    for (int l = 0; l < p; ++l) {
      const int from = power_character(ta, rot, p, l);
      const int to = power_character(ta, rot, p, (p - l) % p);
      REQUIRE(from >= 0);
      CHECK(irr_action(a, ta, b, from) == to);
    }
    CHECK(orbit_decomposition(a).size() == static_cast<std::size_t>(1 + (p - 1) / 2));
  }
}

TEST_CASE("action axioms") {
  for (const auto& entry : catalog()) {
    if (entry.order > 32) continue;
    CAPTURE(entry.spec.name);
    auto g = build(entry.spec);
    for (const auto& a : normal_subgroups(g)) {
      auto ta = character_table(a.group());
      auto act = irr_action_table(a, ta);
      for (int t = 0; t < ta.size(); ++t) CHECK(act[0][t] == t);
      for (int x = 0; x < g->order(); ++x)
        for (int y = 0; y < g->order(); ++y)
          for (int t = 0; t < ta.size(); ++t) CHECK_EQ(act[x][act[y][t]], act[g->mul(x, y)][t]);
    }
  }
}

TEST_CASE("orbits") {
  auto spec = dihedral_spec(4);
  auto d8 = build(spec);
  auto a = distinguished_normal(d8, spec);
  auto orbits = orbit_decomposition(a);
  REQUIRE(orbits.size() == 3);
  CHECK(orbits[0].orbit == std::vector<int>{0});
  CHECK(orbits[1].orbit == std::vector<int>{1, 3});
  CHECK(orbits[2].orbit == std::vector<int>{2});
  CHECK(orbits[1].stabilizer == a);
  CHECK(orbits[2].stabilizer.order() == 8);

  auto s4 = build(symmetric_spec(4));
  auto whole = Subgroup::whole(s4);
  auto singles = orbit_decomposition(whole);
  CHECK(singles.size() == 5);
  for (const auto& o : singles) {
    CHECK(o.orbit.size() == 1);
    CHECK(o.obstruction.quotient_order() == 1);
    CHECK(o.twisted_count == 1);
  }
  auto s3 = build(symmetric_spec(3));
  CHECK_THROWS_AS(orbit_decomposition(Subgroup::generated(s3, {s3->generators()[1]})), Error);
}

TEST_CASE("extension test") {
  auto spec = dihedral_spec(4);
  auto d8 = build(spec);
  auto a = distinguished_normal(d8, spec);
  auto ta = character_table(a.group());
  auto whole = Subgroup::whole(d8);
  CHECK(extension_exists(whole, a, ta.rows[0]));
  CHECK(extension_exists(whole, a, ta.rows[2]));
  try {
    extension_exists(whole, a, ta.rows[1]);
    FAIL("expected NotStabilized");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotStabilized);
  }
  CHECK(extension_exists(a, a, ta.rows[1]));

  auto q8 = build(quaternion_spec(2));
  auto z = center(q8);
  auto tz = character_table(z.group());
  CHECK_FALSE(extension_exists(Subgroup::whole(q8), z, tz.rows[1]));
  CHECK(extension_exists(Subgroup::whole(q8), z, tz.rows[0]));
}

TEST_CASE("omega-regular classes") {
  auto v4 = build(klein_four_spec());
  const std::vector<std::vector<int>> zero(4, std::vector<int>(4, 0));
  CHECK(omega_regular_count(*v4, zero, 1) == 4);

  auto q8 = build(quaternion_spec(2));
  auto z = center(q8);
  auto rec = obstruction_cocycle(z, matrix_irreps(z.group())[1]);
  CHECK(rec.quotient.group()->num_classes() == 4);
  CHECK(omega_regular_count(*rec.quotient.group(), rec.omega, rec.root_order) == 1);

  // Z/2: every normalized cocycle with values in mu_4 leaves both classes regular
  auto z2 = build(cyclic_spec(2));
  for (int k = 0; k < 4; ++k) CHECK(omega_regular_count(*z2, {{0, 0}, {0, k}}, 4) == 2);

  try {
    omega_regular_count(*z2, {{0, 1}, {0, 0}}, 2);
    FAIL("expected InvalidCocycle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidCocycle);
  }
}

TEST_CASE("decomposition reports") {
  auto spec = dihedral_spec(4);
  auto d8 = build(spec);
  auto r = k_decomposition_report(distinguished_normal(d8, spec));
  CHECK(r.total_irr == 5);
  CHECK(r.sum_of_counts == 5);
  REQUIRE(r.orbits.size() == 3);
  CHECK(r.orbits[0].twisted_count == 2);
  CHECK(r.orbits[1].twisted_count == 1);
  CHECK(r.orbits[2].twisted_count == 2);
  CHECK(r.consistent);

  auto q8 = build(quaternion_spec(2));
  auto rq = k_decomposition_report(center(q8));
  REQUIRE(rq.orbits.size() == 2);
  CHECK(rq.orbits[0].twisted_count == 4);
  CHECK(rq.orbits[1].twisted_count == 1);
  CHECK(rq.orbits[1].regular_count == 1);
  CHECK_FALSE(rq.orbits[1].obstruction.trivial);
  CHECK(rq.consistent);
  CHECK(rq.warnings.empty());

  auto s4 = build(symmetric_spec(4));
  auto rt = k_decomposition_report(Subgroup::trivial(s4));
  REQUIRE(rt.orbits.size() == 1);
  CHECK(rt.orbits[0].twisted_count == 5);
}

TEST_CASE("Clifford correspondence across the catalog") {
  for (const auto& entry : catalog()) {
    if (entry.order > 32) continue;
    CAPTURE(entry.spec.name);
    auto g = build(entry.spec);
    for (const auto& a : normal_subgroups(g)) {
      CAPTURE(a.order());
      auto r = k_decomposition_report(a);
      CHECK(r.partition_ok);
      CHECK(r.consistent);
      CHECK(r.sum_of_counts == r.total_irr);
      CHECK(r.sum_of_regular_counts == r.total_irr);
      CHECK(r.warnings.empty());
      for (const auto& o : r.orbits) {
        CHECK(static_cast<int>(o.orbit.size()) * o.stabilizer.order() == g->order());
        CHECK(o.twisted_count == o.regular_count);
      }
    }
  }
}

TEST_CASE("decomposition shape does not depend on element labels") {
  std::mt19937 rng(11);
  for (const char* name : {"D8", "Q8", "S4", "A4", "D12", "Z7xZ3"}) {
    CAPTURE(name);
    const auto& entry = catalog_entry(name);
    auto g = build(entry.spec);
    auto [h, pi] = relabel(*g, rng);
    for (const auto& a : normal_subgroups(g)) {
      std::vector<int> image;
      for (int x : a.members()) image.push_back(pi[x]);
      std::sort(image.begin(), image.end());
      auto b = Subgroup::from_members(h, image);
      CHECK(shape(a) == shape(b));
    }
  }
}

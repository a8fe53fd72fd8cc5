#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ekt/bordism.hpp"
#include "ekt/catalog.hpp"
#include "ekt/error.hpp"
#include "oracle.hpp"

using namespace ekt;

namespace {

std::vector<mpz_class> ints(std::initializer_list<long> v) {
  std::vector<mpz_class> r;
  for (long x : v) r.emplace_back(x);
  return r;
}

std::vector<mpz_class> even_part(const PowerSeries& s) {
  std::vector<mpz_class> r;
  for (int n = 0; n <= s.max_degree(); n += 2) r.push_back(s[n]);
  return r;
}

}  // namespace

TEST_CASE("series arithmetic") {
  std::mt19937 rng(5);
  auto random_series = [&](int m) {
    PowerSeries s(m);
    for (int i = 0; i <= m; ++i) s[i] = static_cast<long>(rng() % 7);
    return s;
  };
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_series(12), b = random_series(12), c = random_series(12);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * PowerSeries::one(12) == a);
  }
  // truncation: (1 - t) * 1/(1 - t) = 1
  auto g = PowerSeries::geometric(1, 10);
  PowerSeries one_minus_t = PowerSeries::one(10);
  one_minus_t[1] = -1;
  CHECK(g * one_minus_t == PowerSeries::one(10));
  PowerSeries odd = PowerSeries::monomial(3, 10);
  CHECK_FALSE(odd.odd_part_vanishes());
  CHECK_THROWS_AS(odd.divide_exact(2), Error);
}

TEST_CASE("omega series: partitions in even degrees") {
  auto s = omega_generator_series(200);
  const auto p = oracle::partitions(100);
  for (int k = 0; k <= 100; ++k) CHECK(s[2 * k] == p[k]);
  CHECK(s.odd_part_vanishes());
  CHECK(even_part(omega_generator_series(8)) == ints({1, 1, 2, 3, 5}));
  CHECK(s[1] == 0);
  CHECK(s[20] == 42);
  CHECK_THROWS_AS(omega_generator_series(202), Error);
}

TEST_CASE("arrays") {
  auto z4 = build(cyclic_spec(4));
  auto p4 = rank_profile(Subgroup::whole(z4));
  CHECK(p4.dims == std::vector<int>{1, 1, 1});
  CHECK(enumerate_arrays(p4, 1).size() == 3);
  CHECK(enumerate_arrays(p4, 2).size() == 6);
  CHECK(enumerate_arrays(p4, 0) == std::vector<std::vector<int>>{{0, 0, 0}});
  auto arr = enumerate_arrays(p4, 2);
  CHECK(std::is_sorted(arr.begin(), arr.end()));

  auto q8 = build(quaternion_spec(2));
  auto pq = rank_profile(Subgroup::whole(q8));
  CHECK(pq.dims == std::vector<int>{1, 1, 1, 2});
  CHECK(enumerate_arrays(pq, 2).size() == 7);

  auto with_trivial = rank_profile(Subgroup::whole(q8), false);
  CHECK(with_trivial.dims.size() == 5);

  for (const auto& entry : catalog()) {
    if (entry.order > 24) continue;
    CAPTURE(entry.spec.name);
    auto g = build(entry.spec);
    auto prof = rank_profile_trivial_action(Subgroup::whole(g));
    const auto counts = array_count_series(prof, 12);
    for (int k = 0; k <= 12; ++k) CHECK(counts[k] == static_cast<long>(enumerate_arrays(prof, k).size()));
  }
}

TEST_CASE("BU generator series") {
  CHECK(bu_generator_series({0}, 10) == PowerSeries::one(10));
  auto one = bu_generator_series({1}, 10);
  for (int n = 0; n <= 10; ++n) CHECK(one[n] == (n % 2 == 0 ? 1 : 0));
  CHECK(even_part(bu_generator_series({2}, 8)) == ints({1, 1, 2, 2, 3}));
  // compare with explicit partitions of k with at most 2 + 3 parts split over two factors
  auto both = bu_generator_series({2, 3}, 24);
  for (int k = 0; k <= 12; ++k) {
    long count = 0;
    for (int j = 0; j <= k; ++j)
      count += static_cast<long>(oracle::partitions_into(j, 2).size() * oracle::partitions_into(k - j, 3).size());
    CHECK(both[2 * k] == count);
  }
}

TEST_CASE("Burnside series against explicit orbit enumeration") {
  struct Case {
    const char* name;
    int max_degree;
  };
  for (const Case c : {Case{"D6", 20}, Case{"D10", 20}, Case{"D14", 16}, Case{"Z4", 20}, Case{"Q8", 16},
                       Case{"S3", 16}, Case{"A4", 14}}) {
    CAPTURE(c.name);
    const auto& entry = catalog_entry(c.name);
    auto g = build(entry.spec);
    for (const auto& a : normal_subgroups(g)) {
      CAPTURE(a.order());
      auto prof = rank_profile(a);
      auto s = adjacent_family_series(a, c.max_degree);
      CHECK(s.coefficients() == oracle::orbit_counts(prof, c.max_degree));
      CHECK(s.odd_part_vanishes());
    }
  }
}

TEST_CASE("Z/2: labels (n, lambda) with lambda having at most n parts") {
  auto z2 = build(cyclic_spec(2));
  auto s = adjacent_family_series(Subgroup::whole(z2), 20);
  for (int k = 0; k <= 10; ++k) {
    long count = 0;
    for (int n = 0; n <= k; ++n) count += static_cast<long>(oracle::partitions_into(k - n, n).size());
    CHECK(s[2 * k] == count);
  }
  auto s3 = build(symmetric_spec(3));
  CHECK(adjacent_family_series(Subgroup::trivial(s3), 20) == PowerSeries::one(20));
  CHECK_THROWS_AS(adjacent_family_series(Subgroup::generated(s3, {s3->generators()[1]}), 10), Error);
}

TEST_CASE("trivial action reduces to a sum of BU series") {
  for (const char* name : {"Q8", "Z5", "S3"}) {
    CAPTURE(name);
    auto g = build(catalog_entry(name).spec);
    auto a = Subgroup::whole(g);
    auto prof = rank_profile_trivial_action(a);
    const int m = 18;
    PowerSeries expected(m);
    for (int k = 0; 2 * k <= m; ++k)
      for (const auto& arr : enumerate_arrays(prof, k)) {
        auto term = bu_generator_series(arr, m) * PowerSeries::monomial(2 * k, m);
        expected += term;
      }
    CHECK(burnside_series(prof, m) == expected);
  }
}

TEST_CASE("global series") {
  auto one = build(trivial_spec());
  CHECK(global_generator_series(one, 12).total == PowerSeries::one(12));
  auto z2 = build(cyclic_spec(2));
  CHECK(global_generator_series(z2, 12).total[0] == 2);
  for (const auto& entry : catalog()) {
    if (entry.num_subgroup_classes == 0 || entry.order > 24) continue;
    CAPTURE(entry.spec.name);
    auto gs = global_generator_series(build(entry.spec), 10);
    CHECK(gs.total[0] == entry.num_subgroup_classes);
    CHECK(gs.total.odd_part_vanishes());
    CHECK(gs.total.nonnegative());
  }
  // independent count for D2p: each class through its own normalizer, by enumeration
  for (int p : {3, 5}) {
    auto g = build(dihedral_spec(p));
    auto gs = global_generator_series(g, 14);
    std::vector<mpz_class> expected(15, 0);
    for (const auto& cls : subgroup_classes(g)) {
      auto n = normalizer(cls.front());
      std::vector<int> local;
      for (int x : cls.front().members()) local.push_back(n.local(x));
      auto counts = oracle::orbit_counts(rank_profile(Subgroup::from_members(n.group(), local)), 14);
      for (int i = 0; i <= 14; ++i) expected[i] += counts[i];
    }
    CHECK(gs.total.coefficients() == expected);
    CHECK(gs.classes.size() == 4);
  }
}

TEST_CASE("dihedral certification") {
  auto r = d2p_certify(3, 20);
  REQUIRE(r.families.size() == 4);
  CHECK(r.families[0].members.size() == 1);
  CHECK(r.families[1].members.size() == 2);
  CHECK(r.families[2].members.size() == 5);
  CHECK(r.families[3].members.size() == 6);
  CHECK(r.pairs[0].weyl_order == 2);
  CHECK(r.pairs[1].weyl_order == 1);
  CHECK(r.pairs[2].weyl_order == 1);
  CHECK(r.pairs[1].class_size == 3);
  CHECK(r.swap_pairs == 1);
  CHECK(r.ok);
  CHECK(r.localization == "Z_P-local");

  for (int p : {5, 7, 11, 13}) {
    auto rp = d2p_certify(p, 40);
    CHECK(rp.ok);
    CHECK(rp.swap_pairs == (p - 1) / 2);
    CHECK(rp.global.total[0] == 4);
  }
  CHECK(d2p_certify(3, 0).global.total.coefficients() == ints({4}));

  auto code = [](int p, int m) {
    try {
      d2p_certify(p, m);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Inconsistent;
  };
  CHECK(code(25, 10) == ErrorCode::NotPrime);
  CHECK(code(1, 10) == ErrorCode::NotPrime);
  CHECK(code(2, 10) == ErrorCode::NotOdd);
  CHECK(code(17, 10) == ErrorCode::InvalidArgument);
  CHECK(code(3, 62) == ErrorCode::InvalidArgument);
}

#include "ekt/catalog.hpp"

#include <numeric>

#include "ekt/error.hpp"

namespace ekt {

namespace {

int divisor_count(int n) {
  int c = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) ++c;
  return c;
}

Permutation cycle_perm(int n, int shift) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = (i + shift) % n;
  return p;
}

}  // namespace

GroupSpec trivial_spec() { return {"1", 1, {}, {}}; }

GroupSpec cyclic_spec(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclic group needs n >= 1");
  if (n == 1) return {"Z1", 1, {}, {}};
  return {"Z" + std::to_string(n), n, {cycle_perm(n, 1)}, {}};
}

GroupSpec dihedral_spec(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "dihedral group needs n >= 2");
  Permutation refl(n);
  for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
  if (n == 2)  // D4 = Z/2 x Z/2 on 4 points
    return {"D4", 4, {{1, 0, 3, 2}, {2, 3, 0, 1}}, {0}};
  return {"D" + std::to_string(2 * n), n, {cycle_perm(n, 1), refl}, {0}};
}

GroupSpec quaternion_spec(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "quaternion group needs n >= 2");
  // element a^i b^j stored at index i + 2n j
  const int m = 2 * n;
  auto idx = [m](int i, int j) { return ((i % m) + m) % m + m * j; };
  auto mul = [&](int x, int y) {
    const int i = x % m, j = x / m, k = y % m, l = y / m;
    if (j == 0) return idx(i + k, l);
    if (l == 0) return idx(i - k, 1);
    return idx(i - k + n, 0);  // b^2 = a^n
  };
  Permutation a(2 * m), b(2 * m);
  for (int x = 0; x < 2 * m; ++x) {
    a[x] = mul(idx(1, 0), x);
    b[x] = mul(idx(0, 1), x);
  }
  return {"Q" + std::to_string(4 * n), 2 * m, {a, b}, {0}};
}

GroupSpec symmetric_spec(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "symmetric group needs n >= 2");
  Permutation t(n);
  std::iota(t.begin(), t.end(), 0);
  std::swap(t[0], t[1]);
  GroupSpec s{"S" + std::to_string(n), n, {cycle_perm(n, 1), t}, {}};
  if (n == 2) s.generators.pop_back();
  return s;
}

GroupSpec alternating4_spec() {
  // (0 1 2) and (0 1)(2 3); V4 is generated by the double transpositions
  return {"A4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}}, {1, 2}};
}

GroupSpec klein_four_spec() { return {"V4", 4, {{1, 0, 3, 2}, {2, 3, 0, 1}}, {0}}; }

GroupSpec semidirect_spec(int p, int q) {
  if ((p - 1) % q != 0) throw Error(ErrorCode::InvalidArgument, "need q | p - 1");
  int r = 0;
  for (int c = 2; c < p; ++c) {
    int x = 1, ord = 0;
    do {
      x = x * c % p;
      ++ord;
    } while (x != 1);
    if (ord == q) {
      r = c;
      break;
    }
  }
  if (r == 0) throw Error(ErrorCode::InvalidArgument, "no element of the requested order");
  Permutation mult(p);
  for (int i = 0; i < p; ++i) mult[i] = i * r % p;
  return {"Z" + std::to_string(p) + "xZ" + std::to_string(q), p, {cycle_perm(p, 1), mult}, {0}};
}

GroupPtr build(const GroupSpec& spec, std::size_t max_order) {
  return group_from_generators(spec.degree, spec.generators, max_order, spec.name);
}

Subgroup distinguished_normal(const GroupPtr& g, const GroupSpec& spec) {
  std::vector<int> gens;
  for (int i : spec.normal_generators) {
    if (i < 0 || i >= static_cast<int>(g->generators().size()))
      throw Error(ErrorCode::ParseError, "normal subgroup generator index out of range");
    gens.push_back(g->generators()[i]);
  }
  return Subgroup::generated(g, gens);
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    v.push_back({trivial_spec(), 1, 1, 1});
    for (int n = 2; n <= 16; ++n) v.push_back({cyclic_spec(n), n, n, divisor_count(n)});
    for (int n = 3; n <= 13; ++n) {
      const int classes = n % 2 ? (n + 3) / 2 : n / 2 + 3;
      const int sub_classes =
          n % 2 ? 2 * divisor_count(n) : 2 * divisor_count(n) + divisor_count(n / 2);
      v.push_back({dihedral_spec(n), 2 * n, classes, sub_classes});
    }
    v.push_back({quaternion_spec(2), 8, 5, 6});
    v.push_back({quaternion_spec(4), 16, 7, 0});
    auto s3 = symmetric_spec(3);
    s3.normal_generators = {0};
    v.push_back({s3, 6, 3, 4});
    auto s4 = symmetric_spec(4);
    v.push_back({s4, 24, 5, 11});
    v.push_back({alternating4_spec(), 12, 4, 5});
    v.push_back({klein_four_spec(), 4, 4, 5});
    v.push_back({semidirect_spec(7, 3), 21, 5, 4});
    v.push_back({semidirect_spec(5, 4), 20, 5, 6});
    v.push_back({semidirect_spec(11, 5), 55, 7, 4});
    return v;
  }();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.spec.name == name) return e;
  throw Error(ErrorCode::InvalidArgument, "unknown catalog group '" + name + "'");
}

}  // namespace ekt

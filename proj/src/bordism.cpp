#include "ekt/bordism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ekt/catalog.hpp"
#include "ekt/character.hpp"
#include "ekt/clifford.hpp"
#include "ekt/error.hpp"

namespace ekt {

// PowerSeries

PowerSeries::PowerSeries(int max_degree) {
  if (max_degree < 0) throw Error(ErrorCode::InvalidArgument, "negative truncation degree");
  coeffs_.assign(static_cast<std::size_t>(max_degree) + 1, 0);
}

PowerSeries PowerSeries::one(int max_degree) { return monomial(0, max_degree); }

PowerSeries PowerSeries::monomial(int degree, int max_degree) {
  PowerSeries s(max_degree);
  if (degree >= 0 && degree <= max_degree) s.coeffs_[degree] = 1;
  return s;
}

PowerSeries PowerSeries::geometric(int step, int max_degree) {
  if (step <= 0) throw Error(ErrorCode::InvalidArgument, "geometric series needs a positive step");
  PowerSeries s(max_degree);
  for (int n = 0; n <= max_degree; n += step) s.coeffs_[n] = 1;
  return s;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  if (o.max_degree() != max_degree()) throw Error(ErrorCode::InvalidArgument, "truncation degrees differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& o) {
  if (o.max_degree() != max_degree()) throw Error(ErrorCode::InvalidArgument, "truncation degrees differ");
  const int m = max_degree();
  std::vector<mpz_class> r(coeffs_.size(), 0);
  for (int i = 0; i <= m; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= m; ++j)
      if (o.coeffs_[j] != 0) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  return *this;
}

PowerSeries& PowerSeries::divide_exact(long k) {
  for (auto& c : coeffs_) {
    if (c % k != 0) throw Error(ErrorCode::Inconsistent, "orbit count is not an integer");
    c /= k;
  }
  return *this;
}

bool PowerSeries::odd_part_vanishes() const {
  for (std::size_t i = 1; i < coeffs_.size(); i += 2)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool PowerSeries::nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c >= 0; });
}

PowerSeries omega_generator_series(int max_degree) {
  if (max_degree > 200) throw Error(ErrorCode::InvalidArgument, "omega series is capped at degree 200");
  PowerSeries s = PowerSeries::one(max_degree);
  for (int j = 2; j <= max_degree; j += 2) s *= PowerSeries::geometric(j, max_degree);
  return s;
}

// Profiles and arrays

RankProfile rank_profile(const Subgroup& a, bool exclude_trivial) {
  const auto table = character_table(a.group());
  const auto act = irr_action_table(a, table);
  const int skip = exclude_trivial ? 1 : 0;
  RankProfile p;
  for (int i = skip; i < table.size(); ++i) p.dims.push_back(table.degrees[i]);
  for (const auto& row : act) {
    std::vector<int> perm;
    for (int i = skip; i < table.size(); ++i) perm.push_back(row[i] - skip);
    p.action.push_back(std::move(perm));
  }
  return p;
}

RankProfile rank_profile_trivial_action(const Subgroup& a, bool exclude_trivial) {
  const auto table = character_table(a.group());
  const int skip = exclude_trivial ? 1 : 0;
  RankProfile p;
  for (int i = skip; i < table.size(); ++i) p.dims.push_back(table.degrees[i]);
  std::vector<int> id(p.dims.size());
  std::iota(id.begin(), id.end(), 0);
  p.action.push_back(std::move(id));
  return p;
}

namespace {

void arrays_from(const RankProfile& p, std::size_t i, int left, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if (i == p.dims.size()) {
    if (left == 0) out.push_back(cur);
    return;
  }
  for (int n = 0; n * p.dims[i] <= left; ++n) {
    cur[i] = n;
    arrays_from(p, i + 1, left - n * p.dims[i], cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<std::vector<int>> enumerate_arrays(const RankProfile& profile, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0) return out;
  std::vector<int> cur(profile.dims.size(), 0);
  arrays_from(profile, 0, k, cur, out);
  return out;
}

std::vector<mpz_class> array_count_series(const RankProfile& profile, int max_k) {
  PowerSeries s = PowerSeries::one(max_k);
  for (int d : profile.dims) s *= PowerSeries::geometric(d, max_k);
  return s.coefficients();
}

PowerSeries bu_generator_series(const std::vector<int>& ranks, int max_degree) {
  PowerSeries s = PowerSeries::one(max_degree);
  for (int n : ranks)
    for (int i = 1; i <= n && 2 * i <= max_degree; ++i) s *= PowerSeries::geometric(2 * i, max_degree);
  return s;
}

namespace {

// S(t^a, t^b) = sum_n t^{a n} prod_{i=1}^{n} 1/(1 - t^{b i})
PowerSeries kernel(int a, int b, int max_degree) {
  PowerSeries total = PowerSeries::one(max_degree);
  PowerSeries term = PowerSeries::one(max_degree);
  for (int n = 1; a * n <= max_degree; ++n) {
    term *= PowerSeries::monomial(a, max_degree);
    if (b * n <= max_degree) term *= PowerSeries::geometric(b * n, max_degree);
    total += term;
  }
  return total;
}

}  // namespace

PowerSeries burnside_series(const RankProfile& profile, int max_degree) {
  if (profile.action.empty()) throw Error(ErrorCode::InvalidArgument, "profile has no acting elements");
  std::map<std::vector<int>, long> counts;
  for (const auto& w : profile.action) ++counts[w];
  std::map<std::pair<int, int>, PowerSeries> kernels;
  PowerSeries sum(max_degree);
  const std::size_t m = profile.dims.size();
  for (const auto& [w, count] : counts) {
    PowerSeries prod = PowerSeries::one(max_degree);
    std::vector<bool> seen(m, false);
    for (std::size_t i = 0; i < m; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(w[j])) {
        seen[j] = true;
        ++len;
      }
      if (profile.dims[w[i]] != profile.dims[i])
        throw Error(ErrorCode::InvalidArgument, "action does not preserve degrees");
      const std::pair<int, int> key{2 * len * profile.dims[i], 2 * len};
      auto it = kernels.find(key);
      if (it == kernels.end()) it = kernels.emplace(key, kernel(key.first, key.second, max_degree)).first;
      prod *= it->second;
    }
    for (int n = 0; n <= max_degree; ++n) prod[n] *= count;
    sum += prod;
  }
  return sum.divide_exact(static_cast<long>(profile.action.size()));
}

PowerSeries adjacent_family_series(const Subgroup& a, int max_degree) {
  if (!a.is_normal()) throw Error(ErrorCode::NotNormal, "adjacent family series needs a normal subgroup");
  return burnside_series(rank_profile(a), max_degree);
}

GlobalSeries global_generator_series(const GroupPtr& g, int max_degree) {
  GlobalSeries out{PowerSeries(max_degree), {}};
  for (const auto& cls : subgroup_classes(g)) {
    const Subgroup& a = cls.front();
    const Subgroup n = normalizer(a);
    std::vector<int> local;
    for (int x : a.members()) local.push_back(n.local(x));
    const auto inner = Subgroup::from_members(n.group(), std::move(local));
    ClassContribution c{a, static_cast<int>(cls.size()), n.order(), adjacent_family_series(inner, max_degree)};
    out.total += c.series;
    out.classes.push_back(std::move(c));
  }
  return out;
}

// Dihedral certification

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool closed_family(const std::vector<Subgroup>& fam, const std::vector<Subgroup>& all) {
  auto member = [&](const Subgroup& h) { return std::find(fam.begin(), fam.end(), h) != fam.end(); };
  for (const auto& h : fam) {
    for (const auto& k : all)
      if (k.is_subgroup_of(h) && !member(k)) return false;
    for (int x = 0; x < h.parent().order(); ++x)
      if (!member(conjugate(h, x))) return false;
  }
  return true;
}

}  // namespace

D2pReport d2p_certify(int p, int max_degree) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) throw Error(ErrorCode::NotOdd, "p must be odd");
  if (p > 13) throw Error(ErrorCode::InvalidArgument, "p is capped at 13");
  if (max_degree < 0 || max_degree > 60)
    throw Error(ErrorCode::InvalidArgument, "max degree must lie in 0..60");

  const auto g = group_from_generators(p, dihedral_spec(p).generators, kDefaultMaxOrder,
                                       "D" + std::to_string(2 * p));
  const int a_elem = g->generators()[0];
  const int b_elem = g->generators()[1];
  const auto all = all_subgroups(g);
  const Subgroup one = Subgroup::trivial(g);
  const Subgroup rot = Subgroup::generated(g, {a_elem});
  const Subgroup refl = Subgroup::generated(g, {b_elem});
  const Subgroup whole = Subgroup::whole(g);

  D2pReport r;
  r.p = p;
  r.max_degree = max_degree;

  std::vector<Subgroup> f0{one};
  std::vector<Subgroup> f1{one, rot};
  std::vector<Subgroup> f2;
  for (const auto& h : all)
    if (!(h == whole)) f2.push_back(h);
  std::vector<Subgroup> f3 = all;
  r.families = {{"F0", f0, false}, {"F1", f1, false}, {"F2", f2, false}, {"F3", f3, false}};
  r.families_ok = static_cast<int>(f2.size()) == p + 2 && static_cast<int>(f3.size()) == p + 3;
  for (auto& f : r.families) {
    f.closed = closed_family(f.members, all);
    r.families_ok = r.families_ok && f.closed;
  }

  struct Step {
    std::size_t larger;
    const Subgroup* rep;
    const char* name;
    int expected_weyl;
  };
  const Step steps[] = {{1, &rot, "<a>", 2}, {2, &refl, "<b>", 1}, {3, &whole, "D2p", 1}};
  r.adjacency_ok = true;
  PowerSeries pair_sum = PowerSeries::one(max_degree);  // the F0 = {1} part
  for (const auto& s : steps) {
    const auto& big = r.families[s.larger].members;
    const auto& small = r.families[s.larger - 1].members;
    std::vector<Subgroup> diff;
    for (const auto& h : big)
      if (std::find(small.begin(), small.end(), h) == small.end()) diff.push_back(h);
    std::vector<Subgroup> cls;
    for (int x = 0; x < g->order(); ++x) {
      auto c = conjugate(*s.rep, x);
      if (std::find(cls.begin(), cls.end(), c) == cls.end()) cls.push_back(c);
    }
    std::sort(cls.begin(), cls.end(), [](const Subgroup& u, const Subgroup& v) { return u.members() < v.members(); });
    std::sort(diff.begin(), diff.end(), [](const Subgroup& u, const Subgroup& v) { return u.members() < v.members(); });
    const Subgroup n = normalizer(*s.rep);
    AdjacentPair pair;
    pair.larger = r.families[s.larger].name;
    pair.smaller = r.families[s.larger - 1].name;
    pair.difference = s.name;
    pair.representative = *s.rep;
    pair.class_size = static_cast<int>(cls.size());
    pair.weyl_order = n.order() / s.rep->order();
    std::vector<int> local;
    for (int x : s.rep->members()) local.push_back(n.local(x));
    pair.series = adjacent_family_series(Subgroup::from_members(n.group(), std::move(local)), max_degree);
    r.adjacency_ok = r.adjacency_ok && diff == cls && pair.weyl_order == s.expected_weyl;
    pair_sum += pair.series;
    r.pairs.push_back(std::move(pair));
  }

  // W_<a> = Z/2 on the nontrivial characters of Z/p
  {
    const auto profile = rank_profile(rot);
    std::vector<bool> seen(profile.dims.size(), false);
    for (std::size_t i = 0; i < profile.dims.size(); ++i) {
      if (seen[i]) continue;
      std::vector<int> orbit;
      for (const auto& w : profile.action)
        if (!seen[w[i]]) {
          seen[w[i]] = true;
          orbit.push_back(w[i]);
        }
      if (orbit.size() == 2) ++r.swap_pairs;
      if (orbit.size() == 1) ++r.fixed_characters;
    }
    r.pairs_ok = r.swap_pairs == (p - 1) / 2 && r.fixed_characters == 0;
  }

  r.global = global_generator_series(g, max_degree);
  r.odd_vanishing = r.global.total.odd_part_vanishes();
  r.nonnegative = r.global.total.nonnegative();
  r.sum_matches = r.global.total == pair_sum;
  for (const auto& pr : r.pairs) r.odd_vanishing = r.odd_vanishing && pr.series.odd_part_vanishes();
  r.ok = r.families_ok && r.adjacency_ok && r.pairs_ok && r.odd_vanishing && r.nonnegative &&
         r.sum_matches && r.global.total[0] == 4;
  return r;
}

}  // namespace ekt

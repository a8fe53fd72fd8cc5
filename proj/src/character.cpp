#include "ekt/character.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "ekt/error.hpp"

namespace ekt {

namespace {

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a && b && a->same_table(*b));
}

// ------------------------------------------------------------ F_q helpers

using u64 = std::uint64_t;

struct Field {
  u64 q;
  u64 add(u64 a, u64 b) const { return (a + b) % q; }
  u64 sub(u64 a, u64 b) const { return (a + q - b) % q; }
  u64 mul(u64 a, u64 b) const { return (a * b) % q; }
  u64 pow(u64 a, u64 k) const {
    u64 r = 1;
    a %= q;
    while (k) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, q - 2); }
  u64 from(long long v) const {
    long long m = v % static_cast<long long>(q);
    if (m < 0) m += static_cast<long long>(q);
    return static_cast<u64>(m);
  }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

u64 primitive_root(const Field& f) {
  std::vector<u64> factors;
  u64 m = f.q - 1;
  for (u64 p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    factors.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < f.q; ++g) {
    bool ok = true;
    for (u64 p : factors)
      if (f.pow(g, (f.q - 1) / p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;  // q = 2
}

using Mat = std::vector<std::vector<u64>>;

// Characteristic polynomial via reduction to Hessenberg form; coefficients
// low degree first, monic of degree n.
std::vector<u64> char_poly(Mat h, const Field& f) {
  const int n = static_cast<int>(h.size());
  for (int k = 0; k + 2 < n; ++k) {
    int p = k + 1;
    while (p < n && h[p][k] == 0) ++p;
    if (p == n) continue;
    if (p != k + 1) {
      std::swap(h[p], h[k + 1]);
      for (int i = 0; i < n; ++i) std::swap(h[i][p], h[i][k + 1]);
    }
    const u64 piv_inv = f.inv(h[k + 1][k]);
    for (int i = k + 2; i < n; ++i) {
      if (h[i][k] == 0) continue;
      const u64 u = f.mul(h[i][k], piv_inv);
      for (int j = 0; j < n; ++j) h[i][j] = f.sub(h[i][j], f.mul(u, h[k + 1][j]));
      for (int j = 0; j < n; ++j) h[j][k + 1] = f.add(h[j][k + 1], f.mul(u, h[j][i]));
    }
  }
  // p[m] = char poly of leading m x m block
  std::vector<std::vector<u64>> p(n + 1);
  p[0] = {1};
  for (int m = 1; m <= n; ++m) {
    // (x - h[m-1][m-1]) p[m-1]
    std::vector<u64> cur(m + 1, 0);
    for (int i = 0; i < m; ++i) {
      cur[i + 1] = f.add(cur[i + 1], p[m - 1][i]);
      cur[i] = f.sub(cur[i], f.mul(h[m - 1][m - 1], p[m - 1][i]));
    }
    u64 t = 1;
    for (int i = 1; i < m; ++i) {
      t = f.mul(t, h[m - i][m - i - 1]);
      const u64 c = f.mul(t, h[m - i - 1][m - 1]);
      if (c == 0) continue;
      for (std::size_t j = 0; j < p[m - i - 1].size(); ++j)
        cur[j] = f.sub(cur[j], f.mul(c, p[m - i - 1][j]));
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat& rows, const Field& f) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int cols = static_cast<int>(rows[0].size());
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const u64 inv = f.inv(rows[r][c]);
    for (auto& v : rows[r]) v = f.mul(v, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const u64 factor = rows[i][c];
      for (int j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis (as row vectors) of the null space of the square matrix a.
Mat null_space(Mat a, const Field& f) {
  const int n = static_cast<int>(a.size());
  const std::vector<int> pivots = rref(a, f);
  std::vector<char> is_pivot(n, 0);
  for (int c : pivots) is_pivot[c] = 1;
  Mat basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.sub(0, a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

struct Space {
  Mat basis;  // rows, in RREF
  std::vector<int> pivots;
};

// Split an invariant subspace into eigenspaces of m.
std::vector<Space> split(const Space& s, const Mat& m, const Field& f) {
  const int dim = static_cast<int>(s.basis.size());
  const int r = static_cast<int>(m.size());
  Mat x(dim, std::vector<u64>(dim, 0));
  for (int i = 0; i < dim; ++i) {
    std::vector<u64> img(r, 0);
    for (int k = 0; k < r; ++k) {
      u64 acc = 0;
      for (int l = 0; l < r; ++l)
        if (m[k][l] && s.basis[i][l]) acc = f.add(acc, f.mul(m[k][l], s.basis[i][l]));
      img[k] = acc;
    }
    for (int t = 0; t < dim; ++t) x[t][i] = img[s.pivots[t]];
  }
  const std::vector<u64> poly = char_poly(x, f);
  std::vector<u64> roots;
  for (u64 lambda = 0; lambda < f.q; ++lambda) {
    u64 v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = f.add(f.mul(v, lambda), poly[i]);
    if (v == 0) roots.push_back(lambda);
  }
  if (roots.size() == 1) return {s};

  std::vector<Space> out;
  int total = 0;
  for (u64 lambda : roots) {
    Mat shifted = x;
    for (int i = 0; i < dim; ++i) shifted[i][i] = f.sub(shifted[i][i], lambda);
    const Mat coords = null_space(shifted, f);
    Space piece;
    for (const auto& y : coords) {
      std::vector<u64> v(r, 0);
      for (int i = 0; i < dim; ++i)
        if (y[i])
          for (int l = 0; l < r; ++l) v[l] = f.add(v[l], f.mul(y[i], s.basis[i][l]));
      piece.basis.push_back(std::move(v));
    }
    piece.pivots = rref(piece.basis, f);
    total += static_cast<int>(piece.basis.size());
    out.push_back(std::move(piece));
  }
  if (total != dim)
    throw Error(ErrorCode::Inconsistent, "class matrix is not diagonalizable over F_" +
                                             std::to_string(f.q));
  return out;
}

}  // namespace

// ------------------------------------------------------------ ClassFunction

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != group_->num_classes())
    throw Error(ErrorCode::InvalidArgument, "class function needs one value per class");
}

ClassFunction ClassFunction::constant(GroupPtr group, long value) {
  const int r = group->num_classes();
  return ClassFunction(std::move(group), std::vector<Cyclotomic>(r, Cyclotomic(value)));
}

ClassFunction ClassFunction::regular(GroupPtr group) {
  std::vector<Cyclotomic> v(group->num_classes(), Cyclotomic(0L));
  v[0] = Cyclotomic(static_cast<long>(group->order()));
  return ClassFunction(std::move(group), std::move(v));
}

void ClassFunction::require_same_group(const ClassFunction& o) const {
  if (!same_group(group_, o.group_))
    throw Error(ErrorCode::GroupMismatch, "class functions live on different groups");
}

ClassFunction ClassFunction::conj() const {
  ClassFunction r = *this;
  for (auto& v : r.values_) v = v.conj();
  return r;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  require_same_group(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  require_same_group(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(long k) {
  const mpq_class s(k);
  for (auto& v : values_) v *= s;
  return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  a.require_same_group(b);
  ClassFunction r = a;
  for (std::size_t i = 0; i < r.values_.size(); ++i) r.values_[i] *= b.values_[i];
  return r;
}

bool ClassFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Cyclotomic& v) { return v.is_zero(); });
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return same_group(a.group_, b.group_) && a.values_ == b.values_;
}

int CharacterTable::find(const ClassFunction& chi) const {
  for (int i = 0; i < size(); ++i)
    if (rows[i] == chi) return i;
  return -1;
}

// ------------------------------------------------------------ arithmetic

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (!same_group(a.group_ptr(), b.group_ptr()))
    throw Error(ErrorCode::GroupMismatch, "inner product of class functions on different groups");
  const FiniteGroup& g = a.group();
  Cyclotomic sum;
  for (int c = 0; c < g.num_classes(); ++c) {
    if (a[c].is_zero() || b[c].is_zero()) continue;
    sum += (a[c] * b[c].conj()) * mpq_class(g.class_size(c));
  }
  return sum / mpq_class(g.order());
}

long multiplicity(const ClassFunction& chi, const ClassFunction& irreducible) {
  const Cyclotomic ip = inner_product(chi, irreducible);
  if (!ip.is_rational() || ip.rational_value().get_den() != 1)
    throw Error(ErrorCode::Inconsistent, "multiplicity is not an integer: " + ip.to_string());
  return ip.rational_value().get_num().get_si();
}

std::vector<long> decompose(const ClassFunction& chi, const CharacterTable& table) {
  std::vector<long> m;
  m.reserve(table.rows.size());
  for (const auto& row : table.rows) m.push_back(multiplicity(chi, row));
  return m;
}

ClassFunction combine(const CharacterTable& table, const std::vector<long>& multiplicities) {
  if (multiplicities.size() != table.rows.size())
    throw Error(ErrorCode::InvalidArgument, "need one multiplicity per irreducible");
  ClassFunction sum = ClassFunction::zero(table.group);
  for (std::size_t i = 0; i < multiplicities.size(); ++i)
    if (multiplicities[i] != 0) sum += table.rows[i] * multiplicities[i];
  return sum;
}

ClassFunction restrict(const ClassFunction& chi, const Subgroup& h) {
  if (!same_group(chi.group_ptr(), h.parent_ptr()))
    throw Error(ErrorCode::NotSubgroup, "restriction target is not a subgroup of the character's group");
  const FiniteGroup& local = *h.group();
  std::vector<Cyclotomic> values;
  values.reserve(local.num_classes());
  for (int c = 0; c < local.num_classes(); ++c) values.push_back(chi.at(h.global(local.class_rep(c))));
  return ClassFunction(h.group(), std::move(values));
}

ClassFunction induce(const ClassFunction& chi, const Subgroup& h) {
  if (!same_group(chi.group_ptr(), h.group()))
    throw Error(ErrorCode::NotSubgroup, "induction source is not the subgroup's group");
  const FiniteGroup& g = h.parent();
  std::vector<Cyclotomic> values;
  values.reserve(g.num_classes());
  for (int c = 0; c < g.num_classes(); ++c) {
    // (1/|H|) sum_x chi(x^-1 rep x) = (|C_G(rep)|/|H|) sum over class members in H
    Cyclotomic sum;
    for (int y : g.classes()[c])
      if (h.contains(y)) sum += chi.at(h.local(y));
    mpq_class factor(g.centralizer_order(c), h.order());
    factor.canonicalize();
    sum *= factor;
    values.push_back(std::move(sum));
  }
  return ClassFunction(h.parent_ptr(), std::move(values));
}

std::vector<std::vector<int>> power_maps(const FiniteGroup& g) {
  std::vector<std::vector<int>> out(g.num_classes());
  for (int c = 0; c < g.num_classes(); ++c) {
    const int x = g.class_rep(c);
    const int o = g.element_order(x);
    out[c].resize(o);
    int y = 0;
    for (int k = 0; k < o; ++k) {
      out[c][k] = g.class_of(y);
      y = g.mul(y, x);
    }
  }
  return out;
}

// ------------------------------------------------------------ Dixon-Schneider

namespace {

CharacterTable compute_table(const GroupPtr& gp) {
  const FiniteGroup& g = *gp;
  const int n = g.order();
  const int r = g.num_classes();
  const int e = g.exponent();

  u64 q = static_cast<u64>(e) + 1;
  const double bound = 2.0 * std::sqrt(static_cast<double>(n));
  while (!(static_cast<double>(q) > bound && is_prime(q))) q += static_cast<u64>(e);
  const Field f{q};
  const u64 z = f.pow(primitive_root(f), (q - 1) / static_cast<u64>(e));

  // structure constants: M_j[k][l] = #{(x, y) in C_j x C_k : x y = rep_l}
  std::vector<Mat> cm(r, Mat(r, std::vector<u64>(r, 0)));
  for (int x = 0; x < n; ++x) {
    const int xinv = g.inv(x);
    const int cx = g.class_of(x);
    for (int l = 0; l < r; ++l) {
      const int y = g.mul(xinv, g.class_rep(l));
      cm[cx][g.class_of(y)][l] += 1;
    }
  }
  for (auto& m : cm)
    for (auto& row : m)
      for (auto& v : row) v %= q;

  std::vector<Space> spaces;
  {
    Space whole;
    whole.basis.assign(r, std::vector<u64>(r, 0));
    for (int i = 0; i < r; ++i) whole.basis[i][i] = 1;
    whole.pivots.resize(r);
    std::iota(whole.pivots.begin(), whole.pivots.end(), 0);
    spaces.push_back(std::move(whole));
  }
  for (int j = 1; j < r; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.basis.size() == 1; }))
      break;
    std::vector<Space> next;
    for (const Space& s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& piece : split(s, cm[j], f)) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != r)
    throw Error(ErrorCode::Inconsistent, "class matrices did not split into one-dimensional spaces");

  std::vector<int> inverse_class(r);
  for (int c = 0; c < r; ++c) inverse_class[c] = g.class_of(g.inv(g.class_rep(c)));
  const auto pmap = power_maps(g);

  std::vector<ClassFunction> rows;
  rows.reserve(r);
  for (const Space& s : spaces) {
    std::vector<u64> omega = s.basis[0];
    if (omega[0] == 0) throw Error(ErrorCode::Inconsistent, "central character vanishes at identity");
    const u64 scale = f.inv(omega[0]);
    for (auto& v : omega) v = f.mul(v, scale);

    u64 denom = 0;
    for (int c = 0; c < r; ++c)
      denom = f.add(denom, f.mul(f.mul(omega[c], omega[inverse_class[c]]),
                                 f.inv(static_cast<u64>(g.class_size(c)) % q)));
    const u64 d2 = f.mul(static_cast<u64>(n) % q, f.inv(denom));
    long long degree = -1;
    for (long long d = 1; d * d <= n; ++d)
      if (static_cast<u64>(d * d) % q == d2) {
        degree = d;
        break;
      }
    if (degree < 0) throw Error(ErrorCode::Inconsistent, "no integer degree for a character");

    std::vector<u64> theta(r);
    for (int c = 0; c < r; ++c)
      theta[c] = f.mul(f.mul(static_cast<u64>(degree) % q, omega[c]),
                       f.inv(static_cast<u64>(g.class_size(c)) % q));

    std::vector<Cyclotomic> values;
    values.reserve(r);
    for (int c = 0; c < r; ++c) {
      const int o = static_cast<int>(pmap[c].size());
      const u64 zo = f.pow(z, static_cast<u64>(e / o));
      const u64 zo_inv = f.inv(zo);
      const u64 o_inv = f.inv(static_cast<u64>(o) % q);
      std::vector<mpq_class> coeffs(e);
      for (int k = 0; k < o; ++k) {
        u64 acc = 0;
        const u64 step = f.pow(zo_inv, static_cast<u64>(k));
        u64 w = 1;
        for (int l = 0; l < o; ++l) {
          acc = f.add(acc, f.mul(theta[pmap[c][l]], w));
          w = f.mul(w, step);
        }
        const u64 mk = f.mul(acc, o_inv);
        if (mk > static_cast<u64>(degree))
          throw Error(ErrorCode::Inconsistent, "eigenvalue multiplicity out of range");
        coeffs[static_cast<std::size_t>(k) * (e / o)] = static_cast<long>(mk);
      }
      values.push_back(Cyclotomic::from_exponents(e, coeffs));
    }
    rows.emplace_back(gp, std::move(values));
  }

  std::sort(rows.begin(), rows.end(), [](const ClassFunction& a, const ClassFunction& b) {
    const mpq_class da = a.degree().rational_value();
    const mpq_class db = b.degree().rational_value();
    if (da != db) return da < db;
    for (std::size_t c = 0; c < a.size(); ++c) {
      const int cmp = compare_values(a[c], b[c]);
      if (cmp != 0) return cmp < 0;
    }
    return false;
  });

  CharacterTable table;
  table.group = gp;
  long sum_sq = 0;
  for (const auto& row : rows) {
    const long d = row.degree().rational_value().get_num().get_si();
    table.degrees.push_back(static_cast<int>(d));
    sum_sq += d * d;
  }
  if (sum_sq != n) throw Error(ErrorCode::Inconsistent, "sum of squared degrees differs from |G|");
  table.rows = std::move(rows);
  return table;
}

std::size_t table_hash(const FiniteGroup& g) {
  std::size_t h = static_cast<std::size_t>(g.order());
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) h = h * 1000003u ^ static_cast<std::size_t>(g.mul(a, b));
  return h;
}

// Tables are pure functions of the multiplication table; subgroups and
// quotients rebuild equal tables often, so results are memoized.
struct TableCache {
  std::mutex lock;
  std::unordered_map<std::size_t, std::vector<CharacterTable>> entries;
  std::size_t count = 0;
};

TableCache& table_cache() {
  static TableCache cache;
  return cache;
}

CharacterTable rebind(const CharacterTable& t, const GroupPtr& g) {
  CharacterTable r;
  r.group = g;
  r.degrees = t.degrees;
  for (const auto& row : t.rows) r.rows.emplace_back(g, row.values());
  return r;
}

}  // namespace

CharacterTable character_table(const GroupPtr& gp, const CharacterOptions& opts) {
  const int n = gp->order();
  if (static_cast<std::size_t>(n) > opts.max_order)
    throw Error(ErrorCode::CapExceeded, "group order " + std::to_string(n) + " exceeds cap " +
                                            std::to_string(opts.max_order));
  const std::size_t key = table_hash(*gp);
  auto& cache = table_cache();
  {
    std::lock_guard<std::mutex> guard(cache.lock);
    auto it = cache.entries.find(key);
    if (it != cache.entries.end())
      for (const auto& t : it->second)
        if (t.group->same_table(*gp)) return rebind(t, gp);
  }
  CharacterTable t = compute_table(gp);
  std::lock_guard<std::mutex> guard(cache.lock);
  if (cache.count > 4096) {
    cache.entries.clear();
    cache.count = 0;
  }
  cache.entries[key].push_back(t);
  ++cache.count;
  return t;
}

}  // namespace ekt

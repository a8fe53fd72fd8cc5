#include "ekt/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>

#include "ekt/error.hpp"

namespace ekt {

namespace {

struct FieldData {
  int e = 1;
  int phi = 1;
  // reduction of z^k, k = 0..e-1, in the power basis
  std::vector<std::vector<long>> power;
  // complex value of z^k
  std::vector<std::complex<double>> numeric;
};

using Poly = std::vector<long>;  // low degree first

Poly cyclotomic_poly(int n, std::map<int, Poly>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  // x^n - 1 divided by Phi_d for proper divisors d
  Poly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    const Poly den = cyclotomic_poly(d, memo);
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    Poly q(dn - dd + 1, 0);
    for (int i = dn - dd; i >= 0; --i) {
      const long c = num[i + dd];  // den is monic
      q[i] = c;
      for (int j = 0; j <= dd; ++j) num[i + j] -= c * den[j];
    }
    num = std::move(q);
  }
  memo.emplace(n, num);
  return num;
}

const FieldData& field(int e) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FieldData>> cache;
  static std::map<int, Poly> memo;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(e); it != cache.end()) return *it->second;

  auto f = std::make_unique<FieldData>();
  f->e = e;
  const Poly phi_poly = cyclotomic_poly(e, memo);
  f->phi = static_cast<int>(phi_poly.size()) - 1;
  const int phi = f->phi;
  f->power.assign(e, std::vector<long>(phi, 0));
  for (int k = 0; k < e; ++k) {
    if (k < phi) {
      f->power[k][k] = 1;
      continue;
    }
    // z * z^(k-1), then eliminate z^phi
    const auto& prev = f->power[k - 1];
    std::vector<long> cur(phi, 0);
    const long top = prev[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = prev[i - 1];
    for (int i = 0; i < phi; ++i) cur[i] -= top * phi_poly[i];
    f->power[k] = std::move(cur);
  }
  f->numeric.resize(e);
  for (int k = 0; k < e; ++k) {
    const double t = 2.0 * std::numbers::pi * k / e;
    f->numeric[k] = {std::cos(t), std::sin(t)};
  }
  auto [it, _] = cache.emplace(e, std::move(f));
  return *it->second;
}

// Solve for w in Q(zeta_f) with lift(w) = v; nullopt if v is not in the subfield.
std::optional<Cyclotomic> try_descend(const Cyclotomic& v, int f) {
  const int e = v.order();
  const FieldData& big = field(e);
  const FieldData& small = field(f);
  const int rows = big.phi;
  const int cols = small.phi;
  const int step = e / f;
  // augmented matrix [L | v]
  std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols + 1));
  for (int j = 0; j < cols; ++j) {
    const auto& img = big.power[(static_cast<long long>(j) * step) % e];
    for (int i = 0; i < rows; ++i) m[i][j] = img[i];
  }
  for (int i = 0; i < rows; ++i) m[i][cols] = v.coefficients()[i];

  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const mpq_class inv = 1 / m[r][c];
    for (int j = c; j <= cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class factor = m[i][c];
      for (int j = c; j <= cols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;
  std::vector<mpq_class> w(cols);
  for (int i = 0; i < r; ++i) w[pivot_col[i]] = m[i][cols];
  std::vector<mpq_class> full(f);
  for (int j = 0; j < cols; ++j) full[j] = w[j];
  return Cyclotomic::from_exponents(f, full);
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Cyclotomic::Cyclotomic() : order_(1), coeffs_(1) {}

Cyclotomic::Cyclotomic(long value) : order_(1), coeffs_{mpq_class(value)} {}

Cyclotomic::Cyclotomic(const mpq_class& value, int order) : order_(order) {
  if (order <= 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
  coeffs_.assign(field(order).phi, 0);
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

Cyclotomic Cyclotomic::root_of_unity(int e, long long k) {
  if (e <= 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
  const FieldData& f = field(e);
  long long kk = k % e;
  if (kk < 0) kk += e;
  Cyclotomic r;
  r.order_ = e;
  r.coeffs_.assign(f.phi, 0);
  for (int i = 0; i < f.phi; ++i) r.coeffs_[i] = f.power[kk][i];
  return r;
}

Cyclotomic Cyclotomic::from_exponents(int e, const std::vector<mpq_class>& coeffs) {
  if (e <= 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
  if (static_cast<int>(coeffs.size()) > e)
    throw Error(ErrorCode::InvalidArgument, "more coefficients than the order");
  const FieldData& f = field(e);
  Cyclotomic r;
  r.order_ = e;
  r.coeffs_.assign(f.phi, 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    mpq_class ck = coeffs[k];
    ck.canonicalize();
    if (ck == 0) continue;
    for (int i = 0; i < f.phi; ++i)
      if (f.power[k][i] != 0) r.coeffs_[i] += ck * f.power[k][i];
  }
  return r;
}

std::vector<mpq_class> Cyclotomic::exponent_coefficients() const {
  std::vector<mpq_class> out(order_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
  return out;
}

Cyclotomic Cyclotomic::lift(int target) const {
  if (target == order_) return *this;
  if (target % order_ != 0)
    throw Error(ErrorCode::InvalidArgument, "cannot lift Q(zeta_" + std::to_string(order_) +
                                                ") into Q(zeta_" + std::to_string(target) + ")");
  const FieldData& f = field(target);
  const int step = target / order_;
  Cyclotomic r;
  r.order_ = target;
  r.coeffs_.assign(f.phi, 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const auto& img = f.power[(static_cast<long long>(j) * step) % target];
    for (int i = 0; i < f.phi; ++i)
      if (img[i] != 0) r.coeffs_[i] += coeffs_[j] * img[i];
  }
  return r;
}

Cyclotomic Cyclotomic::reduced() const {
  if (is_rational()) return Cyclotomic(coeffs_[0]);
  for (int f = 2; f < order_; ++f) {
    if (order_ % f) continue;
    if (auto w = try_descend(*this, f)) return *w;
  }
  return *this;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

mpq_class Cyclotomic::rational_value() const {
  if (!is_rational()) throw Error(ErrorCode::InvalidArgument, "value is not rational: " + to_string());
  return coeffs_[0];
}

std::complex<double> Cyclotomic::to_complex() const {
  const FieldData& f = field(order_);
  std::complex<double> z = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) z += coeffs_[i].get_d() * f.numeric[i];
  return z;
}

Cyclotomic Cyclotomic::conj() const {
  const FieldData& f = field(order_);
  Cyclotomic r;
  r.order_ = order_;
  r.coeffs_.assign(f.phi, 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const auto& img = f.power[(order_ - static_cast<int>(j)) % order_];
    for (int i = 0; i < f.phi; ++i)
      if (img[i] != 0) r.coeffs_[i] += coeffs_[j] * img[i];
  }
  return r;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    const int l = std::lcm(order_, o.order_);
    if (l != order_) *this = lift(l);
    if (l != o.order_) return *this += o.lift(l);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.order_ != order_) {
    const int l = std::lcm(order_, o.order_);
    if (l != order_) *this = lift(l);
    if (l != o.order_) return *this *= o.lift(l);
  }
  if (o.is_rational()) return *this *= o.coeffs_[0];
  if (is_rational()) {
    const mpq_class s = coeffs_[0];
    *this = o;
    return *this *= s;
  }
  const FieldData& f = field(order_);
  const int phi = f.phi;
  std::vector<mpq_class> prod(2 * phi - 1);
  for (int i = 0; i < phi; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < phi; ++j)
      if (o.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  std::vector<mpq_class> out(phi);
  for (int k = 0; k < 2 * phi - 1; ++k) {
    if (prod[k] == 0) continue;
    const auto& img = f.power[k % order_];
    for (int i = 0; i < phi; ++i)
      if (img[i] != 0) out[i] += prod[k] * img[i];
  }
  coeffs_ = std::move(out);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const mpq_class& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const mpq_class& q) {
  if (q == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  for (auto& c : coeffs_) c /= q;
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const int l = std::lcm(a.order_, b.order_);
  return a.lift(l).coeffs_ == b.lift(l).coeffs_;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const mpq_class& c = coeffs_[i];
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const mpq_class a = abs(c);
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "z" << order_;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

int compare_values(const Cyclotomic& a, const Cyclotomic& b) {
  if (a == b) return 0;
  if (a.is_zero()) return -1;
  if (b.is_zero()) return 1;
  auto key = [](const Cyclotomic& v) {
    const std::complex<double> z = v.to_complex();
    double t = std::atan2(z.imag(), z.real());
    if (t < 0) t += 2.0 * std::numbers::pi;
    if (2.0 * std::numbers::pi - t < 1e-10) t = 0.0;
    return std::pair<double, double>(t, std::abs(z));
  };
  const auto [ta, ra] = key(a);
  const auto [tb, rb] = key(b);
  if (std::abs(ta - tb) > 1e-9) return ta < tb ? -1 : 1;
  if (std::abs(ra - rb) > 1e-9) return ra < rb ? -1 : 1;
  // numerically indistinguishable but exactly different: fall back to coefficients
  const int l = std::lcm(a.order(), b.order());
  const auto ca = a.lift(l).coefficients();
  const auto cb = b.lift(l).coefficients();
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (ca[i] != cb[i]) return ca[i] < cb[i] ? -1 : 1;
  return 0;
}

}  // namespace ekt

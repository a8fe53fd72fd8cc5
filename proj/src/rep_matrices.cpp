#include "ekt/rep_matrices.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <tuple>
#include <numbers>
#include <random>

#include "ekt/clifford.hpp"
#include "ekt/error.hpp"

namespace ekt {

namespace {

using Complex = std::complex<double>;

// Uniform in [-1, 1) from the raw 64-bit stream, so values do not depend on
// the standard library's distribution implementation.
double uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

Complex random_complex(std::mt19937_64& rng) {
  const double re = uniform(rng);
  return {re, uniform(rng)};
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a && b && a->same_table(*b));
}

std::vector<Complex> numeric_values(const ClassFunction& chi) {
  const FiniteGroup& g = chi.group();
  std::vector<Complex> by_class(chi.size());
  for (std::size_t c = 0; c < chi.size(); ++c) by_class[c] = chi[static_cast<int>(c)].to_complex();
  std::vector<Complex> v(g.order());
  for (int x = 0; x < g.order(); ++x) v[x] = by_class[g.class_of(x)];
  return v;
}

// Orthonormal basis (n x d^2) of the chi-isotypic part of the left regular
// representation, from the central projector applied to a random block.
Matrix isotypic_basis(const FiniteGroup& g, const std::vector<Complex>& chi, int d,
                      std::mt19937_64& rng) {
  const int n = g.order();
  const int m = d * d;
  Matrix p(n, n);
  const double scale = static_cast<double>(d) / n;
  for (int x = 0; x < n; ++x)
    for (int h = 0; h < n; ++h) p(x, h) = scale * std::conj(chi[g.mul(x, g.inv(h))]);
  Matrix z(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) z(i, j) = random_complex(rng);
  Eigen::HouseholderQR<Matrix> qr(p * z);
  return qr.householderQ() * Matrix::Identity(n, m);
}

// (W^* L(g) W) for L the left regular representation, L(g) e_h = e_{gh}.
Matrix restrict_left(const FiniteGroup& g, const Matrix& w, int x) {
  const int n = g.order();
  Matrix lw(n, w.cols());
  for (int h = 0; h < n; ++h) lw.row(g.mul(x, h)) = w.row(h);
  return w.adjoint() * lw;
}

MatrixRep build_irrep(const GroupPtr& gp, const ClassFunction& chi, int index,
                      const RepOptions& opts) {
  const FiniteGroup& g = *gp;
  const int n = g.order();
  const int d = static_cast<int>(chi.degree().rational_value().get_num().get_si());
  const auto values = numeric_values(chi);

  MatrixRep rep;
  rep.group = gp;
  rep.dimension = d;
  rep.character = chi;
  rep.index = index;
  rep.images.resize(n);
  if (d == 1) {
    for (int x = 0; x < n; ++x) rep.images[x] = Matrix::Constant(1, 1, values[x]);
    return rep;
  }

  std::mt19937_64 rng(opts.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(index + 1));
  const Matrix basis = isotypic_basis(g, values, d, rng);
  const int m = d * d;

  for (int attempt = 0; attempt <= opts.max_retries; ++attempt) {
    // Hermitian element sum_g c_g R(g) of the right regular action, which
    // commutes with the left action and preserves the isotypic block.
    std::vector<Complex> c(n);
    for (int x = 0; x < n; ++x) {
      const int xi = g.inv(x);
      if (xi < x) continue;
      c[x] = xi == x ? Complex(uniform(rng), 0.0) : random_complex(rng);
      c[xi] = std::conj(c[x]);
    }
    Matrix hb = Matrix::Zero(n, m);
    for (int h = 0; h < n; ++h)
      for (int x = 0; x < n; ++x) hb.row(g.mul(h, x)) += c[x] * basis.row(h);
    Matrix block = basis.adjoint() * hb;
    block = (block + block.adjoint()).eval() * 0.5;
    Eigen::SelfAdjointEigenSolver<Matrix> es(block);
    const auto& ev = es.eigenvalues();
    const double scale = 1.0 + ev.cwiseAbs().maxCoeff();
    const double spread = ev(d - 1) - ev(0);
    const double gap = ev(d) - ev(d - 1);
    if (spread > opts.tol * scale || gap < 1e-6 * scale) continue;

    const Matrix w = basis * es.eigenvectors().leftCols(d);
    for (int x = 0; x < n; ++x) rep.images[x] = restrict_left(g, w, x);
    if (trace_residual(rep) > opts.snap_tol) continue;
    return rep;
  }
  throw Error(ErrorCode::SplitFailure, "eigenspaces of the commutant did not separate for " +
                                           g.name() + " row " + std::to_string(index));
}

}  // namespace

std::vector<MatrixRep> matrix_irreps(const CharacterTable& table, const RepOptions& opts) {
  const GroupPtr& g = table.group;
  if (g->order() > opts.max_order)
    throw Error(ErrorCode::CapExceeded, "matrix representations need |G| <= " +
                                            std::to_string(opts.max_order));
  std::vector<MatrixRep> reps;
  for (int i = 0; i < table.size(); ++i) reps.push_back(build_irrep(g, table.rows[i], i, opts));
  return reps;
}

std::vector<MatrixRep> matrix_irreps(const GroupPtr& g, const RepOptions& opts) {
  if (g->order() > opts.max_order)
    throw Error(ErrorCode::CapExceeded, "matrix representations need |G| <= " +
                                            std::to_string(opts.max_order));
  return matrix_irreps(character_table(g), opts);
}

// Frobenius norms, which bound the operator norms from above.
double homomorphism_residual(const MatrixRep& rep) {
  const FiniteGroup& g = *rep.group;
  double worst = 0;
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      worst = std::max(worst, (rep(x) * rep(y) - rep(g.mul(x, y))).norm());
  return worst;
}

double unitarity_residual(const MatrixRep& rep) {
  double worst = 0;
  const auto id = Matrix::Identity(rep.dimension, rep.dimension);
  for (const auto& m : rep.images) worst = std::max(worst, (m * m.adjoint() - id).norm());
  return worst;
}

double trace_residual(const MatrixRep& rep) {
  const FiniteGroup& g = *rep.group;
  std::vector<Complex> by_class(rep.character.size());
  for (int c = 0; c < g.num_classes(); ++c) by_class[c] = rep.character[c].to_complex();
  double worst = 0;
  for (int x = 0; x < g.order(); ++x)
    worst = std::max(worst, std::abs(rep(x).trace() - by_class[g.class_of(x)]));
  return worst;
}

MatrixRep twist(const MatrixRep& rep, const std::vector<int>& image) {
  const FiniteGroup& g = *rep.group;
  MatrixRep r;
  r.group = rep.group;
  r.dimension = rep.dimension;
  r.images.resize(g.order());
  for (int y = 0; y < g.order(); ++y) r.images[y] = rep.images[image[y]];
  std::vector<Cyclotomic> values;
  for (int c = 0; c < g.num_classes(); ++c) values.push_back(rep.character.at(image[g.class_rep(c)]));
  r.character = ClassFunction(rep.group, std::move(values));
  return r;
}

std::optional<Matrix> intertwiner(const MatrixRep& r1, const MatrixRep& r2, const RepOptions& opts) {
  if (!same_group(r1.group, r2.group))
    throw Error(ErrorCode::GroupMismatch, "intertwiner between representations of different groups");
  if (r1.character != r2.character) return std::nullopt;
  const FiniteGroup& g = *r1.group;
  const int d = r1.dimension;
  if (d == 1) {
    // characters agree, so the two 1x1 representations coincide
    return Matrix::Identity(1, 1);
  }
  std::mt19937_64 rng(opts.seed);
  for (int attempt = 0; attempt <= opts.max_retries; ++attempt) {
    Matrix r(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) r(i, j) = random_complex(rng);
    Matrix t = Matrix::Zero(d, d);
    for (int x = 0; x < g.order(); ++x) t += r2(x) * r * r1(x).adjoint();
    t /= static_cast<double>(g.order());
    Eigen::JacobiSVD<Matrix> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    if (s(d - 1) < 1e-6 * r.norm()) continue;
    Matrix u = svd.matrixU() * svd.matrixV().adjoint();
    double residual = 0;
    for (int x = 0; x < g.order(); ++x)
      residual = std::max(residual, (u * r1(x) * u.adjoint() - r2(x)).norm());
    if (residual > opts.tol) continue;
    return u;
  }
  throw Error(ErrorCode::NumericalDegeneracy, "averaged intertwiner stayed rank deficient");
}

bool is_normalized_cocycle(const FiniteGroup& q, const std::vector<std::vector<int>>& omega,
                           int root_order) {
  const int n = q.order();
  if (static_cast<int>(omega.size()) != n) return false;
  for (const auto& row : omega)
    if (static_cast<int>(row.size()) != n) return false;
  auto mod = [root_order](long v) { return static_cast<int>(((v % root_order) + root_order) % root_order); };
  for (int x = 0; x < n; ++x)
    if (mod(omega[0][x]) != 0 || mod(omega[x][0]) != 0) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = q.mul(x, y);
      for (int z = 0; z < n; ++z) {
        const long lhs = static_cast<long>(omega[x][y]) + omega[xy][z];
        const long rhs = static_cast<long>(omega[x][q.mul(y, z)]) + omega[y][z];
        if (mod(lhs - rhs) != 0) return false;
      }
    }
  return true;
}

bool is_coboundary(const FiniteGroup& q, const std::vector<std::vector<int>>& omega, int root_order) {
  using i64 = std::int64_t;
  const int n = q.order();
  const i64 m = static_cast<i64>(root_order) * q.exponent();
  auto mod = [m](i64 v) { return ((v % m) + m) % m; };
  // rows (x, y): f(x) + f(y) - f(xy) = omega(x, y) exp(Q), augmented by the right side in column n
  std::vector<std::vector<i64>> a;
  a.reserve(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::vector<i64> row(n + 1, 0);
      row[x] = mod(row[x] + 1);
      row[y] = mod(row[y] + 1);
      row[q.mul(x, y)] = mod(row[q.mul(x, y)] - 1);
      row[n] = mod(static_cast<i64>(omega[x][y]) * q.exponent());
      a.push_back(std::move(row));
    }
  const int rows = static_cast<int>(a.size());
  // Bezout combination of rows r1, r2 (or columns) mapping (p, v) to (g, 0)
  auto combine = [&](std::vector<i64>& r1, std::vector<i64>& r2, i64 p, i64 v, int width) {
    if (v % p == 0) {  // keep the pivot line, or equal pivots would cycle
      for (int c = 0; c < width; ++c) r2[c] = mod(r2[c] - mod((v / p) * r1[c]));
      return;
    }
    i64 s0 = 1, s1 = 0, t0 = 0, t1 = 1, u = p, w = v;
    while (w != 0) {
      const i64 k = u / w;
      std::tie(u, w) = std::make_pair(w, u - k * w);
      std::tie(s0, s1) = std::make_pair(s1, s0 - k * s1);
      std::tie(t0, t1) = std::make_pair(t1, t0 - k * t1);
    }
    const i64 pg = p / u, vg = v / u;
    for (int c = 0; c < width; ++c) {
      const i64 x = r1[c], y = r2[c];
      r1[c] = mod(mod(s0 * x) + mod(t0 * y));
      r2[c] = mod(mod(-vg * x) + mod(pg * y));
    }
  };
  int t = 0;
  for (int col = 0; col < n && t < rows; ++col) {
    // bring some nonzero entry of the remaining block into (t, t)
    int pr = -1, pc = -1;
    for (int c = col; c < n && pr < 0; ++c)
      for (int r = t; r < rows; ++r)
        if (a[r][c] != 0) {
          pr = r;
          pc = c;
          break;
        }
    if (pr < 0) break;
    std::swap(a[t], a[pr]);
    if (pc != col)
      for (auto& row : a) std::swap(row[col], row[pc]);
    for (;;) {
      for (int r = t + 1; r < rows; ++r)
        if (a[r][col] != 0) combine(a[t], a[r], a[t][col], a[r][col], n + 1);
      bool clear = true;
      for (int c = col + 1; c < n; ++c) {
        if (a[t][c] == 0) continue;
        // column operation on columns col and c; only the unknowns change
        std::vector<i64> u(rows), v(rows);
        for (int r = 0; r < rows; ++r) {
          u[r] = a[r][col];
          v[r] = a[r][c];
        }
        combine(u, v, a[t][col], a[t][c], rows);
        for (int r = 0; r < rows; ++r) {
          a[r][col] = u[r];
          a[r][c] = v[r];
          if (r > t && u[r] != 0) clear = false;
        }
      }
      if (clear) break;
    }
    ++t;
  }
  // diagonal d_i y_i = c_i (mod m) for i < t, and 0 = c_i beyond
  for (int r = 0; r < rows; ++r) {
    const i64 c = a[r][n];
    const i64 d = r < t ? a[r][r] : 0;
    if (c % std::gcd(d, m) != 0) return false;
  }
  return true;
}

ObstructionRecord obstruction_cocycle(const Subgroup& a, const MatrixRep& rho, const RepOptions& opts) {
  if (!a.is_normal()) throw Error(ErrorCode::NotNormal, "obstruction needs a normal subgroup");
  if (!same_group(rho.group, a.group()))
    throw Error(ErrorCode::GroupMismatch, "representation does not live on the normal subgroup");
  const FiniteGroup& g = a.parent();
  const FiniteGroup& ag = *a.group();

  ObstructionRecord rec;
  rec.rho = rho;
  rec.normal = a;
  rec.stabilizer = irr_stabilizer(a, rho.character);
  const Subgroup& stab = rec.stabilizer;
  std::vector<int> local_members;
  for (int x : a.members()) local_members.push_back(stab.local(x));
  rec.normal_in_stabilizer = Subgroup::from_members(stab.group(), local_members);
  rec.quotient = quotient(rec.normal_in_stabilizer);
  const FiniteGroup& q = *rec.quotient.group();
  const int nq = q.order();
  const int d = rho.dimension;
  rec.root_order = d * ag.exponent();

  std::vector<int> section(nq);
  for (int i = 0; i < nq; ++i) section[i] = stab.global(rec.quotient.section(i));

  rec.intertwiners.resize(nq);
  for (int i = 0; i < nq; ++i) {
    if (i == 0) {
      rec.intertwiners[0] = Matrix::Identity(d, d);
      continue;
    }
    std::vector<int> image(ag.order());
    for (int y = 0; y < ag.order(); ++y) image[y] = a.local(g.conj(section[i], a.global(y)));
    auto u = intertwiner(rho, twist(rho, image), opts);
    if (!u) throw Error(ErrorCode::Inconsistent, "stabilizer element does not fix the character");
    const Complex det = u->determinant();
    *u *= std::polar(1.0, -std::arg(det) / d);
    rec.intertwiners[i] = *u;
  }

  const int n_root = rec.root_order;
  const double two_pi = 2 * std::numbers::pi;
  rec.omega.assign(nq, std::vector<int>(nq, 0));
  const auto id = Matrix::Identity(d, d);
  for (int i = 0; i < nq; ++i)
    for (int j = 0; j < nq; ++j) {
      const int ij = q.mul(i, j);
      const int elem = g.mul(g.inv(section[ij]), g.mul(section[i], section[j]));
      const Matrix& ra = rho(a.local(elem));
      const Matrix m = rec.intertwiners[i] * rec.intertwiners[j] * ra.adjoint() *
                       rec.intertwiners[ij].adjoint();
      const Complex lambda = m.trace() / static_cast<double>(d);
      const double residual = (m - lambda * id).norm();
      rec.max_scalar_residual = std::max(rec.max_scalar_residual, residual);
      if (residual > opts.snap_tol)
        throw Error(ErrorCode::NonScalar, "intertwiner product is not scalar (residual " +
                                              std::to_string(residual) + ")");
      double turns = std::arg(lambda) / two_pi * n_root;
      long k = std::lround(turns);
      k = ((k % n_root) + n_root) % n_root;
      const double dist = std::abs(lambda - std::polar(1.0, two_pi * k / n_root));
      rec.max_snap_distance = std::max(rec.max_snap_distance, dist);
      if (dist > opts.snap_tol)
        throw Error(ErrorCode::SnapFailure, "scalar is " + std::to_string(dist) +
                                                " from the nearest root of unity of order " +
                                                std::to_string(n_root));
      rec.omega[i][j] = static_cast<int>(k);
    }
  if (!is_normalized_cocycle(q, rec.omega, n_root))
    throw Error(ErrorCode::InvalidCocycle, "snapped scalars fail the cocycle identity");

  rec.trivial = extension_exists(stab, a, rho.character);
  return rec;
}

}  // namespace ekt

#pragma once

// Exact elements of the cyclotomic field Q(zeta_e).
//
// Values are stored in the power basis 1, z, ..., z^(phi(e)-1) of
// Q[z]/Phi_e(z); every operation reduces modulo Phi_e, so two values of the
// same order are equal iff their coefficient vectors are equal. Values of
// different orders are compared and combined in Q(zeta_lcm).

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

namespace ekt {

class Cyclotomic {
 public:
  Cyclotomic();  // zero in Q(zeta_1)
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  explicit Cyclotomic(const mpq_class& value, int order = 1);

  // zeta_e^k
  static Cyclotomic root_of_unity(int e, long long k);
  // sum_k coeffs[k] zeta_e^k for any coefficient vector of length <= e
  static Cyclotomic from_exponents(int e, const std::vector<mpq_class>& coeffs);

  int order() const { return order_; }
  // power-basis coefficients, length phi(order)
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }
  // canonical coefficients against zeta_e^k for k = 0..e-1 (zero past phi(e))
  std::vector<mpq_class> exponent_coefficients() const;

  // Same value in Q(zeta_target); order() must divide target.
  Cyclotomic lift(int target) const;
  // Re-express in the smallest Q(zeta_f) with f | order() containing the value.
  Cyclotomic reduced() const;

  bool is_zero() const;
  bool is_rational() const;
  // Throws InvalidArgument unless rational.
  mpq_class rational_value() const;
  std::complex<double> to_complex() const;

  Cyclotomic conj() const;
  Cyclotomic operator-() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const mpq_class& q);
  Cyclotomic& operator/=(const mpq_class& q);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const mpq_class& q) { return a *= q; }
  friend Cyclotomic operator/(Cyclotomic a, const mpq_class& q) { return a /= q; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  std::string to_string() const;

 private:
  int order_;
  std::vector<mpq_class> coeffs_;
};

// Sort key used for deterministic character table row order: zero first,
// then by argument in [0, 2pi), then by modulus. Equal values compare equal.
int compare_values(const Cyclotomic& a, const Cyclotomic& b);

int euler_phi(int n);

}  // namespace ekt

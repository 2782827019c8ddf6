#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

namespace ansu {

using Rational = mpq_class;

// Parses "p/q" or "p" (base 10) into a canonicalized rational.
Rational rational_from_string(const std::string& s);
// Emits "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& r);

// Exact element of the cyclotomic field Q(zeta_N).
//
// Stored as a length-N coefficient vector for sum_k c_k zeta_N^k, i.e. a
// representative modulo x^N - 1.  Ring operations work in this cheap cyclic
// representation; the canonical form (remainder modulo the N-th cyclotomic
// polynomial Phi_N, higher coefficients zeroed) is computed on demand by
// reduced().  Equality, zero tests and inversion always go through the
// canonical form, so values compare as elements of Q(zeta_N).
//
// Operations between different orders first promote both sides to
// Q(zeta_lcm) via zeta_N = zeta_lcm^{lcm/N}.
//
// Values are immutable; every operation returns a new value.  Safe to share
// across threads.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}
  explicit Cyclotomic(const Rational& r) : order_(1), coeffs_(1, r) {}
  explicit Cyclotomic(long value) : order_(1), coeffs_(1, Rational(value)) {}
  Cyclotomic(long order, std::vector<Rational> coeffs);

  static Cyclotomic zero() { return Cyclotomic(); }
  static Cyclotomic one() { return Cyclotomic(Rational(1)); }
  // zeta_order^exponent (exponent taken mod order, may be negative)
  static Cyclotomic root_of_unity(long order, long exponent);

  long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Canonical representative modulo Phi_N.  Idempotent: applying it to an
  // already-canonical value returns a bitwise-equal vector.
  Cyclotomic reduced() const;

  bool is_zero() const;
  bool is_rational() const;
  Rational to_rational() const;  // requires is_rational()

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);

  // Exact inverse via extended gcd with Phi_N.  Throws ZeroInverse on 0.
  Cyclotomic inverse() const;
  // zeta_N -> zeta_N^{N-1}; complex conjugation on the embedding.
  Cyclotomic conjugate() const;
  // Integer power; negative exponents go through inverse().
  Cyclotomic pow(long e) const;

  bool operator==(const Cyclotomic& other) const;
  bool operator!=(const Cyclotomic& other) const { return !(*this == other); }

  // Numeric value under zeta_N -> exp(2 pi i / N), computed with MPFR at the
  // requested working precision and rounded to double.  Display and float
  // cross-checks only; never used for equality decisions.
  std::complex<double> embed(unsigned precision_bits = 53) const;
  // Sign decisions at finite precision: true when |Im| < tol resp. when
  // additionally Re > margin, evaluated at `precision_bits` working bits.
  bool embeds_to_real(unsigned precision_bits, double imag_tol) const;
  bool embeds_to_positive_real(unsigned precision_bits, double margin) const;

  // Re-express in Q(zeta_new_order); new_order must be a multiple of order().
  Cyclotomic promoted(long new_order) const;

  std::string str() const;

  // Phi_n as a monic coefficient vector (index = degree), cached per order.
  static const std::vector<Rational>& cyclotomic_polynomial(long n);

 private:
  long order_;
  std::vector<Rational> coeffs_;
};

inline Cyclotomic operator*(const Rational& r, const Cyclotomic& x) {
  return Cyclotomic(r) * x;
}

// Spec-facing operation names (thin wrappers over the member API).
inline Cyclotomic cyc_reduce(const Cyclotomic& x) { return x.reduced(); }
inline Cyclotomic cyc_mul(const Cyclotomic& x, const Cyclotomic& y) { return x * y; }
inline Cyclotomic cyc_inv(const Cyclotomic& x) { return x.inverse(); }
inline Cyclotomic cyc_conj(const Cyclotomic& x) { return x.conjugate(); }
inline std::complex<double> cyc_embed(const Cyclotomic& x, unsigned precision_bits) {
  return x.embed(precision_bits);
}

// Exact sqrt(m) for a positive integer m, expressed via quadratic Gauss sums
// in Q(zeta_{lcm(m,4)}) (or smaller).  The result squares to m exactly and
// embeds to the positive real root.
Cyclotomic integer_sqrt_cyclotomic(long m);

}  // namespace ansu

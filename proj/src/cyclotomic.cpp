#include "ansulator/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ansulator/errors.hpp"

namespace ansu {

namespace {

using Poly = std::vector<Rational>;  // index = degree

int degree(const Poly& p) {
  for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d)
    if (p[d] != 0) return d;
  return -1;
}

void trim(Poly& p) { p.resize(static_cast<size_t>(degree(p) + 1)); }

// Exact division with remainder over Q[x]; den must be nonzero.
std::pair<Poly, Poly> divmod(Poly num, const Poly& den) {
  const int dd = degree(den);
  Poly quot(num.size(), Rational(0));
  for (int d = degree(num); d >= dd; d = degree(num)) {
    Rational factor = num[d] / den[dd];
    quot[d - dd] = factor;
    for (int i = 0; i <= dd; ++i) num[d - dd + i] -= factor * den[i];
  }
  trim(quot);
  trim(num);
  return {quot, num};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Extended gcd in Q[x]: returns (g, u) with u*a = g mod b and g = gcd(a, b).
std::pair<Poly, Poly> extended_gcd_mod(const Poly& a, const Poly& b) {
  Poly r0 = b, r1 = a;
  Poly u0 = {}, u1 = {Rational(1)};
  trim(r0);
  trim(r1);
  while (degree(r1) >= 0) {
    auto [q, r] = divmod(r0, r1);
    Poly qu = poly_mul(q, u1);
    Poly u2(std::max(u0.size(), qu.size()), Rational(0));
    for (size_t i = 0; i < u0.size(); ++i) u2[i] = u0[i];
    for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
    trim(u2);
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  return {r0, u0};
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const std::vector<Rational>& Cyclotomic::cyclotomic_polynomial(long n) {
  static std::map<long, Poly> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed by exact division.
  Poly result;
  if (n == 1) {
    result = {Rational(-1), Rational(1)};
  } else {
    Poly num(static_cast<size_t>(n) + 1, Rational(0));
    num[0] = -1;
    num[static_cast<size_t>(n)] = 1;
    for (long d : divisors(n)) {
      if (d == n) continue;
      // recursive fill without re-locking: compute proper divisors first
      if (cache.find(d) == cache.end()) {
        // inline computation, divisors are processed in increasing order so
        // all proper divisors of d are already present
        Poly nd(static_cast<size_t>(d) + 1, Rational(0));
        nd[0] = -1;
        nd[static_cast<size_t>(d)] = 1;
        for (long e : divisors(d)) {
          if (e == d) continue;
          auto [q, r] = divmod(nd, cache.at(e));
          nd = std::move(q);
        }
        cache.emplace(d, std::move(nd));
      }
      auto [q, r] = divmod(num, cache.at(d));
      num = std::move(q);
    }
    result = std::move(num);
  }
  return cache.emplace(n, std::move(result)).first->second;
}

Cyclotomic::Cyclotomic(long order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order_ < 1) throw Error("cyclotomic order must be positive");
  if (coeffs_.size() != static_cast<size_t>(order_))
    throw Error("cyclotomic coefficient count must equal the order");
}

Cyclotomic Cyclotomic::root_of_unity(long order, long exponent) {
  if (order < 1) throw Error("cyclotomic order must be positive");
  long e = exponent % order;
  if (e < 0) e += order;
  std::vector<Rational> c(static_cast<size_t>(order), Rational(0));
  c[static_cast<size_t>(e)] = 1;
  return Cyclotomic(order, std::move(c));
}

Cyclotomic Cyclotomic::reduced() const {
  const Poly& phi = cyclotomic_polynomial(order_);
  const int dphi = static_cast<int>(phi.size()) - 1;
  Poly rem(coeffs_);
  for (int d = degree(rem); d >= dphi; d = degree(rem)) {
    Rational factor = rem[d];  // phi is monic
    for (int i = 0; i <= dphi; ++i) rem[d - dphi + i] -= factor * phi[i];
  }
  rem.resize(static_cast<size_t>(order_), Rational(0));
  return Cyclotomic(order_, std::move(rem));
}

bool Cyclotomic::is_zero() const {
  Cyclotomic r = reduced();
  return std::all_of(r.coeffs_.begin(), r.coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

bool Cyclotomic::is_rational() const {
  Cyclotomic r = reduced();
  for (size_t k = 1; k < r.coeffs_.size(); ++k)
    if (r.coeffs_[k] != 0) return false;
  return true;
}

Rational Cyclotomic::to_rational() const {
  Cyclotomic r = reduced();
  for (size_t k = 1; k < r.coeffs_.size(); ++k)
    if (r.coeffs_[k] != 0) throw Error("value is not rational: " + str());
  return r.coeffs_[0];
}

Cyclotomic Cyclotomic::promoted(long new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0)
    throw Error("cannot promote cyclotomic order " + std::to_string(order_) +
                " to non-multiple " + std::to_string(new_order));
  const long stride = new_order / order_;
  std::vector<Rational> c(static_cast<size_t>(new_order), Rational(0));
  for (long k = 0; k < order_; ++k) c[static_cast<size_t>(k * stride)] = coeffs_[static_cast<size_t>(k)];
  return Cyclotomic(new_order, std::move(c));
}

Cyclotomic Cyclotomic::operator-() const {
  std::vector<Rational> c(coeffs_);
  for (auto& x : c) x = -x;
  return Cyclotomic(order_, std::move(c));
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  const long n = std::lcm(a.order_, b.order_);
  Cyclotomic x = a.promoted(n), y = b.promoted(n);
  for (long k = 0; k < n; ++k) x.coeffs_[static_cast<size_t>(k)] += y.coeffs_[static_cast<size_t>(k)];
  return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  const long n = std::lcm(a.order_, b.order_);
  Cyclotomic x = a.promoted(n), y = b.promoted(n);
  std::vector<Rational> out(static_cast<size_t>(n), Rational(0));
  for (long i = 0; i < n; ++i) {
    const Rational& ci = x.coeffs_[static_cast<size_t>(i)];
    if (ci == 0) continue;
    for (long j = 0; j < n; ++j) {
      const Rational& cj = y.coeffs_[static_cast<size_t>(j)];
      if (cj == 0) continue;
      long k = i + j;
      if (k >= n) k -= n;  // zeta^n = 1
      out[static_cast<size_t>(k)] += ci * cj;
    }
  }
  return Cyclotomic(n, std::move(out));
}

Cyclotomic Cyclotomic::inverse() const {
  Cyclotomic r = reduced();
  if (r.is_zero()) throw ZeroInverse("cannot invert zero");
  // Rational shortcut
  bool rational = true;
  for (size_t k = 1; k < r.coeffs_.size(); ++k)
    if (r.coeffs_[k] != 0) {
      rational = false;
      break;
    }
  if (rational) {
    std::vector<Rational> c(static_cast<size_t>(order_), Rational(0));
    c[0] = 1 / r.coeffs_[0];
    return Cyclotomic(order_, std::move(c));
  }
  // u * r = g (mod Phi_N) with g a nonzero constant since Phi_N is irreducible.
  Poly rp(r.coeffs_);
  trim(rp);
  auto [g, u] = extended_gcd_mod(rp, cyclotomic_polynomial(order_));
  if (degree(g) != 0)
    throw ZeroInverse("element has no inverse (gcd with Phi_N is non-constant)");
  Rational scale = 1 / g[0];
  u.resize(static_cast<size_t>(order_), Rational(0));
  for (auto& c : u) c *= scale;
  return Cyclotomic(order_, std::move(u)).reduced();
}

Cyclotomic Cyclotomic::conjugate() const {
  std::vector<Rational> c(static_cast<size_t>(order_), Rational(0));
  for (long k = 0; k < order_; ++k) {
    long j = (order_ - k) % order_;
    c[static_cast<size_t>(j)] = coeffs_[static_cast<size_t>(k)];
  }
  return Cyclotomic(order_, std::move(c));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result = Cyclotomic::one().promoted(order_);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Cyclotomic::operator==(const Cyclotomic& other) const {
  return (*this - other).is_zero();
}

namespace {

// Accumulates the embedding of `x` into preallocated mpfr re/im.
void embed_mpfr(const Cyclotomic& x, mpfr_t re, mpfr_t im, mpfr_prec_t prec) {
  mpfr_set_zero(re, 1);
  mpfr_set_zero(im, 1);
  mpfr_t two_pi, angle, c, s, coeff, term;
  mpfr_inits2(prec, two_pi, angle, c, s, coeff, term, static_cast<mpfr_ptr>(nullptr));
  mpfr_const_pi(two_pi, MPFR_RNDN);
  mpfr_mul_ui(two_pi, two_pi, 2, MPFR_RNDN);
  const long n = x.order();
  for (long k = 0; k < n; ++k) {
    const Rational& ck = x.coeffs()[static_cast<size_t>(k)];
    if (ck == 0) continue;
    mpfr_mul_si(angle, two_pi, k, MPFR_RNDN);
    mpfr_div_si(angle, angle, n, MPFR_RNDN);
    mpfr_sin_cos(s, c, angle, MPFR_RNDN);
    mpfr_set_q(coeff, ck.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term, coeff, c, MPFR_RNDN);
    mpfr_add(re, re, term, MPFR_RNDN);
    mpfr_mul(term, coeff, s, MPFR_RNDN);
    mpfr_add(im, im, term, MPFR_RNDN);
  }
  mpfr_clears(two_pi, angle, c, s, coeff, term, static_cast<mpfr_ptr>(nullptr));
}

}  // namespace

std::complex<double> Cyclotomic::embed(unsigned precision_bits) const {
  mpfr_prec_t prec = std::max<mpfr_prec_t>(precision_bits, MPFR_PREC_MIN);
  mpfr_t re, im;
  mpfr_inits2(prec, re, im, static_cast<mpfr_ptr>(nullptr));
  embed_mpfr(*this, re, im, prec);
  std::complex<double> out(mpfr_get_d(re, MPFR_RNDN), mpfr_get_d(im, MPFR_RNDN));
  mpfr_clears(re, im, static_cast<mpfr_ptr>(nullptr));
  return out;
}

bool Cyclotomic::embeds_to_real(unsigned precision_bits, double imag_tol) const {
  mpfr_prec_t prec = std::max<mpfr_prec_t>(precision_bits, MPFR_PREC_MIN);
  mpfr_t re, im;
  mpfr_inits2(prec, re, im, static_cast<mpfr_ptr>(nullptr));
  embed_mpfr(*this, re, im, prec);
  mpfr_abs(im, im, MPFR_RNDN);
  bool ok = mpfr_cmp_d(im, imag_tol) < 0;
  mpfr_clears(re, im, static_cast<mpfr_ptr>(nullptr));
  return ok;
}

bool Cyclotomic::embeds_to_positive_real(unsigned precision_bits, double margin) const {
  mpfr_prec_t prec = std::max<mpfr_prec_t>(precision_bits, MPFR_PREC_MIN);
  mpfr_t re, im;
  mpfr_inits2(prec, re, im, static_cast<mpfr_ptr>(nullptr));
  embed_mpfr(*this, re, im, prec);
  mpfr_abs(im, im, MPFR_RNDN);
  bool ok = mpfr_cmp_d(im, margin) < 0 && mpfr_cmp_d(re, margin) > 0;
  mpfr_clears(re, im, static_cast<mpfr_ptr>(nullptr));
  return ok;
}

std::string Cyclotomic::str() const {
  Cyclotomic r = reduced();
  std::ostringstream os;
  bool first = true;
  for (long k = 0; k < r.order_; ++k) {
    const Rational& c = r.coeffs_[static_cast<size_t>(k)];
    if (c == 0) continue;
    Rational a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (k == 0) {
      os << rational_to_string(a);
    } else {
      if (a != 1) os << rational_to_string(a) << "*";
      os << "z" << r.order_;
      if (k != 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw Error("cannot parse rational: '" + s + "'");
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0) throw Error("zero denominator in rational: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) {
  return r.get_str();
}

Cyclotomic integer_sqrt_cyclotomic(long m) {
  if (m < 1) throw Error("integer_sqrt_cyclotomic requires a positive integer");
  if (m == 1) return Cyclotomic::one();
  if (m % 4 == 2) {
    // sqrt(2) * sqrt(m/2)
    Cyclotomic sqrt2 = Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, 7);
    return sqrt2 * integer_sqrt_cyclotomic(m / 2);
  }
  // Quadratic Gauss sum g(m) = sum_t zeta_m^{t^2}:
  //   m = 1 mod 4: g = sqrt(m)
  //   m = 3 mod 4: g = i sqrt(m),      so sqrt(m) = zeta_4^{-1} g
  //   m = 0 mod 4: g = (1+i) sqrt(m),  so sqrt(m) = (1 - zeta_4)/2 g
  if (m % 4 == 1) {
    std::vector<Rational> c(static_cast<size_t>(m), Rational(0));
    for (long t = 0; t < m; ++t) c[static_cast<size_t>((t * t) % m)] += 1;
    return Cyclotomic(m, std::move(c));
  }
  if (m % 4 == 3) {
    const long n = 4 * m;
    std::vector<Rational> c(static_cast<size_t>(n), Rational(0));
    for (long t = 0; t < m; ++t) {
      long k = (4 * ((t * t) % m) - m) % n;
      if (k < 0) k += n;
      c[static_cast<size_t>(k)] += 1;
    }
    return Cyclotomic(n, std::move(c));
  }
  // m = 0 mod 4 (so zeta_4 lives in Q(zeta_m))
  std::vector<Rational> c(static_cast<size_t>(m), Rational(0));
  const Rational half(1, 2);
  for (long t = 0; t < m; ++t) {
    long base = (t * t) % m;
    c[static_cast<size_t>(base)] += half;
    c[static_cast<size_t>((base + m / 4) % m)] -= half;
  }
  return Cyclotomic(m, std::move(c));
}

}  // namespace ansu

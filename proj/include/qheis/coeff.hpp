#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qheis {

/// Raised when an operation leaves its mathematical domain
/// (division by zero, evaluation at a pole, degenerate q).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

using Rational = mpq_class;
using Integer = mpz_class;

/**
 * Univariate polynomial in q with arbitrary-precision rational coefficients.
 *
 * coeffs()[i] is the coefficient of q^i. The top coefficient is never zero;
 * the zero polynomial has an empty coefficient vector and degree -1.
 */
class Poly {
public:
  Poly() = default;
  Poly(const Rational &c);
  Poly(long c) : Poly(Rational(c)) {}
  explicit Poly(std::vector<Rational> coeffs);

  static Poly q_power(unsigned k);
  static Poly variable() { return q_power(1); }

  const std::vector<Rational> &coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational leading() const;
  Rational coeff(std::size_t i) const;
  /// Lowest power with a nonzero coefficient; 0 for the zero polynomial.
  std::size_t order() const;

  Rational eval(const Rational &x) const;
  Poly monic() const;
  Poly operator-() const;
  Poly &operator+=(const Poly &o);
  Poly &operator-=(const Poly &o);
  Poly &operator*=(const Rational &c);

  friend Poly operator+(Poly a, const Poly &b) { return a += b; }
  friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
  friend Poly operator*(const Poly &a, const Poly &b);
  friend Poly operator*(Poly a, const Rational &c) { return a *= c; }
  friend bool operator==(const Poly &a, const Poly &b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws DomainError for a zero divisor.
  static std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b);
  /// Monic gcd; gcd(0, 0) = 0.
  static Poly gcd(Poly a, Poly b);

  /// Least common denominator of the coefficients.
  Integer coeff_denominator() const;
  /// `c0 + c1*q + c2*q^2 + ...`; coefficients shown as exact rationals.
  std::string to_string() const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/**
 * Element of Q(q) kept as a reduced fraction num/den with den monic.
 *
 * Canonical form: gcd(num, den) = 1, den has leading coefficient 1, and zero
 * is 0/1, so two values are equal iff their parts are equal.
 */
class RationalFunction {
public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}
  RationalFunction(const Rational &c) : num_(c), den_(1) {}
  RationalFunction(Poly p) : num_(std::move(p)), den_(1) {}
  /// Throws DomainError when den is zero.
  RationalFunction(Poly num, Poly den);

  static RationalFunction q() { return RationalFunction(Poly::variable()); }

  const Poly &num() const { return num_; }
  const Poly &den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  /// True for elements of Q (no q dependence).
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant element; throws std::logic_error otherwise.
  Rational constant_value() const;

  RationalFunction operator-() const;
  RationalFunction &operator+=(const RationalFunction &o);
  RationalFunction &operator-=(const RationalFunction &o);
  RationalFunction &operator*=(const RationalFunction &o);
  RationalFunction &operator/=(const RationalFunction &o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction &b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction &b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction &b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction &b) { return a /= b; }
  friend bool operator==(const RationalFunction &a, const RationalFunction &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Multiplicative inverse; throws DomainError on zero.
  RationalFunction inverse() const;
  /// Integer power; negative exponents invert (zero base throws).
  RationalFunction pow(long e) const;

  /// Integer-normalized display: `c0 + c1*q + ...` or `(num)/(den)`.
  std::string to_string() const;

private:
  void normalize();
  Poly num_;
  Poly den_;
};

using RF = RationalFunction;

/// Deformation parameter: either the indeterminate q or an exact rational.
class QValue {
public:
  static QValue symbolic() { return QValue(); }
  static QValue rational(const Rational &r) { return QValue(r); }
  /// Parses `symbolic`, `q`, an integer or `p/r`; throws std::invalid_argument.
  static QValue parse(const std::string &text);

  bool is_symbolic() const { return !value_.has_value(); }
  const std::optional<Rational> &value() const { return value_; }
  bool is_value(long v) const { return value_ && *value_ == v; }
  bool is_zero() const { return is_value(0); }
  bool is_one() const { return is_value(1); }
  /// 0, 1 and -1 are outside the generic-q hypotheses.
  bool degenerate_for_generic() const { return is_value(0) || is_value(1) || is_value(-1); }

  /// q as an element of the coefficient field.
  RationalFunction as_rf() const;
  std::string to_string() const;

  friend bool operator==(const QValue &a, const QValue &b) { return a.value_ == b.value_; }

private:
  QValue() = default;
  explicit QValue(Rational r) : value_(std::move(r)) { value_->canonicalize(); }
  std::optional<Rational> value_;
};

/// {n}_z = 1 + z + ... + z^{n-1}; 0 when n <= 0.
RationalFunction q_int(long n, const RationalFunction &z);
/// {n}_z! = {1}_z {2}_z ... {n}_z; 1 when n <= 0.
RationalFunction q_factorial(long n, const RationalFunction &z);
/// Gaussian binomial; throws std::invalid_argument unless 0 <= i <= n.
RationalFunction q_binomial(long n, long i, const RationalFunction &z);

/// Ordinary binomial coefficient as a rational (0 outside 0 <= i <= n).
Rational binomial(long n, long i);
/// n choose 2 for any integer n.
inline long choose2(long n) { return n * (n - 1) / 2; }

/// Evaluation homomorphism Q(q) -> Q at q = q0; throws DomainError at a pole.
Rational specialize(const RationalFunction &f, const Rational &q0);

} // namespace qheis

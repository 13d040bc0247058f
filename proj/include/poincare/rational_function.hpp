#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "poincare/rational.hpp"

namespace poincare {

/// Dense univariate polynomial in the indeterminate q with rational
/// coefficients. Trailing zero coefficients are never stored, so the zero
/// polynomial has an empty coefficient vector and degree -1.
class QPolynomial {
public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Rational> coeffs);
  QPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)

  /// The indeterminate q itself.
  static QPolynomial indeterminate();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  const Rational& leading() const;

  QPolynomial operator-() const;
  friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) = default;

  QPolynomial scaled(const Rational& c) const;
  QPolynomial monic() const;
  /// Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& divisor) const;
  Rational eval(const Rational& v) const;

  std::string to_string(std::string_view var = "q") const;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
QPolynomial gcd(QPolynomial a, QPolynomial b);

/// Element of Q(q) kept in lowest terms with a monic denominator, so equal
/// values have identical representations.
class RationalFunction {
public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(const Rational& constant);  // NOLINT(google-explicit-constructor)
  RationalFunction(QPolynomial poly);          // NOLINT(google-explicit-constructor)
  RationalFunction(QPolynomial num, QPolynomial den);

  static RationalFunction indeterminate();

  /// Parses an arithmetic expression in q built from integers, + - * / ^ and
  /// parentheses, e.g. "(q^2+1)/(q-1)" or "1/2*q^3-q".
  static RationalFunction parse(std::string_view text);

  const QPolynomial& numerator() const { return num_; }
  const QPolynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant function; InvalidArgument otherwise.
  Rational constant_value() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  RationalFunction inverse() const;
  RationalFunction pow(std::int64_t k) const;

  /// Exact value at q = v; PoleAtEvaluationPoint if the reduced
  /// denominator vanishes there.
  Rational eval_at(const Rational& v) const;

  std::string to_string() const;

private:
  void normalize();
  QPolynomial num_;
  QPolynomial den_;
};

std::ostream& operator<<(std::ostream& os, const QPolynomial& p);
std::ostream& operator<<(std::ostream& os, const RationalFunction& r);

}  // namespace poincare

#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "poincare/field.hpp"

namespace poincare {

/// Exact univariate polynomial in x over a coefficient field. The leading
/// coefficient is nonzero; the zero polynomial has no coefficients and
/// degree -1.
class Polynomial {
public:
  explicit Polynomial(Field field = Field::Q) : field_(field) {}
  Polynomial(Field field, std::vector<FieldElement> coeffs);

  static Polynomial from_rationals(Field field, const std::vector<Rational>& coeffs);
  static Polynomial constant(const FieldElement& c);
  /// c * x^k
  static Polynomial monomial(const FieldElement& c, int k);
  static Polynomial x(Field field) { return monomial(FieldElement::one(field), 1); }

  Field field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k; zero outside 0..degree.
  FieldElement coeff(int k) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  Polynomial scaled(const FieldElement& c) const;

  /// Horner evaluation at v.
  FieldElement eval(const FieldElement& v) const;

  std::string to_string(std::string_view var = "x") const;

private:
  void trim();
  Field field_;
  std::vector<FieldElement> coeffs_;
};

/// Polynomial in x and 1/x: coefficients for exponents low()..high(). Both
/// end coefficients are nonzero unless the polynomial is zero.
class LaurentPolynomial {
public:
  explicit LaurentPolynomial(Field field = Field::Q) : field_(field) {}
  LaurentPolynomial(Field field, int low, std::vector<FieldElement> coeffs);
  /// x^shift * p
  LaurentPolynomial(const Polynomial& p, int shift);

  Field field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  /// Coefficient at exponent e (any integer); zero outside low..high.
  FieldElement coeff(int e) const;

  /// Exact value at v; ZeroAtNegativeExponent when v = 0 and low() < 0.
  FieldElement eval(const FieldElement& v) const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) = default;

  std::string to_string(std::string_view var = "x") const;

private:
  void normalize();
  Field field_;
  int low_ = 0;
  std::vector<FieldElement> coeffs_;
};

FieldElement poly_eval(const Polynomial& g, const FieldElement& v);
FieldElement poly_eval(const LaurentPolynomial& g, const FieldElement& v);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p);

}  // namespace poincare

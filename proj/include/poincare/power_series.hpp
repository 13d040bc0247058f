#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "poincare/field.hpp"
#include "poincare/polynomial.hpp"

namespace poincare {

/// Formal power series truncated at an explicit precision N: coefficients
/// c_0..c_N are known, everything above N is unknown (not zero).
class PowerSeries {
public:
  /// Precision is coeffs.size() - 1; coeffs must be non-empty.
  PowerSeries(Field field, std::vector<FieldElement> coeffs);

  static PowerSeries zero(Field field, int precision);
  static PowerSeries constant(const FieldElement& c, int precision);
  /// The series x.
  static PowerSeries x(Field field, int precision);
  /// p truncated (or zero-padded) to the given precision.
  static PowerSeries from_polynomial(const Polynomial& p, int precision);
  static PowerSeries from_rationals(Field field, const std::vector<Rational>& coeffs);

  Field field() const { return field_; }
  int precision() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  /// Coefficient j; PrecisionTooLow for j above the precision.
  const FieldElement& coeff(int j) const;
  const FieldElement& operator[](int j) const { return coeff(j); }

  bool is_zero() const;
  /// Index of the first nonzero coefficient, if any within the precision.
  std::optional<int> valuation() const;

  PowerSeries truncated(int precision) const;
  PowerSeries scaled(const FieldElement& c) const;

  PowerSeries operator-() const;
  friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g);
  friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g);
  friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

  std::string to_string(std::string_view var = "x") const;

private:
  Field field_;
  std::vector<FieldElement> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const PowerSeries& f);

PowerSeries ps_add(const PowerSeries& f, const PowerSeries& g);
PowerSeries ps_mul(const PowerSeries& f, const PowerSeries& g);

/// f∘g for a series f; requires g_0 = 0 (NonzeroInnerConstantTerm otherwise).
/// Precision is min(prec f, prec g).
PowerSeries compose(const PowerSeries& f, const PowerSeries& g);
/// p∘g for a polynomial p; any g is admissible. Precision is prec g.
PowerSeries compose(const Polynomial& p, const PowerSeries& g);

/// Compositional inverse by order-by-order coefficient matching on f∘g = x.
/// Requires f_0 = 0 and f_1 != 0 (NotInvertible otherwise).
PowerSeries revert(const PowerSeries& f);

/// Coefficient j of the result is c^j * f_j, i.e. f∘(c x).
PowerSeries scale_arg(const PowerSeries& f, const FieldElement& c);

/// Shifts coefficients down by n; NotDivisibleByXn if some f_m, m < n, is
/// nonzero. Result precision is prec f - n.
PowerSeries div_xn(const PowerSeries& f, int n);

/// Coefficients of the powers s, s^2, ..., s^L of a series s with s_0 = 0,
/// filled in while the coefficients of s are still being discovered.
///
/// The coefficient (s^l)_k for l >= 2 depends only on s_1..s_{k-l+1}, so once
/// s_1..s_{k-1} have been pushed every (s^l)_k with l >= 2 is final. Solvers
/// use this to isolate the unknown s_k, which enters degree k only through
/// the l = 1 term.
class OnlinePowers {
public:
  OnlinePowers(Field field, int max_power, int precision);

  /// Index of the next coefficient to push (starts at 1).
  int next_index() const { return known_ + 1; }
  /// (s^l)_k for 1 <= l <= max_power, k <= next_index(); for k == next_index()
  /// only l >= 2 is available.
  const FieldElement& power_coeff(int l, int k) const;
  /// Records s_{next_index()} and prepares the next column.
  void push(const FieldElement& coeff);

private:
  void fill_column(int k);

  Field field_;
  int max_power_;
  int precision_;
  int known_ = 0;
  // table_[l][k] = (s^l)_k, l in 0..max_power.
  std::vector<std::vector<FieldElement>> table_;
};

}  // namespace poincare

#pragma once

// Shared helpers for the test suites: seeded generators for random exact
// inputs, and brute-force oracles that never go through the library's
// series/composition code.

#include <cstdint>
#include <cstddef>
#include <random>
#include <vector>

#include "poincare/field.hpp"
#include "poincare/polynomial.hpp"
#include "poincare/power_series.hpp"
#include "poincare/rational.hpp"

namespace poincare::testing {

class Gen {
public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Small rational a/b with |a| <= max_num, 1 <= b <= max_den.
  Rational rational(int max_num = 5, int max_den = 4) {
    return {integer(-max_num, max_num), integer(1, max_den)};
  }

  Rational nonzero_rational(int max_num = 5, int max_den = 4) {
    for (;;) {
      Rational r = rational(max_num, max_den);
      if (!r.is_zero()) return r;
    }
  }

  FieldElement element(Field field) { return FieldElement::from_rational(field, rational()); }

  PowerSeries series(Field field, int precision) {
    std::vector<FieldElement> c;
    for (int k = 0; k <= precision; ++k) c.push_back(element(field));
    return {field, std::move(c)};
  }

  /// Series with f_0 = 0 and f_1 != 0.
  PowerSeries invertible_series(Field field, int precision) {
    PowerSeries f = series(field, precision);
    std::vector<FieldElement> c = f.coeffs();
    c[0] = FieldElement::zero(field);
    if (precision >= 1) c[1] = FieldElement::from_rational(field, nonzero_rational());
    return {field, std::move(c)};
  }

  /// Polynomial with p_0 = 0, p_1 = lead1 and random p_2..p_degree.
  Polynomial map(const Rational& lead1, int degree) {
    std::vector<Rational> c{Rational(0), lead1};
    for (int k = 2; k <= degree; ++k) c.push_back(rational(3, 3));
    return Polynomial::from_rationals(Field::Q, c);
  }

  Polynomial polynomial(Field field, int degree) {
    std::vector<Rational> c;
    for (int k = 0; k <= degree; ++k) c.push_back(rational());
    return Polynomial::from_rationals(field, c);
  }

  std::mt19937& engine() { return rng_; }

private:
  std::mt19937 rng_;
};

namespace oracle {

using Dense = std::vector<Rational>;

/// Untruncated product of dense rational polynomials.
inline Dense multiply(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) out[i + k] += a[i] * b[k];
  }
  return out;
}

inline Dense truncate(Dense a, std::size_t limit) {
  if (a.size() > limit + 1) a.resize(limit + 1);
  return a;
}

/// Composition a(b(x)) by expanding every power of b; terms above x^limit are
/// dropped (the default keeps everything).
inline Dense compose(const Dense& a, const Dense& b, std::size_t limit = SIZE_MAX - 1) {
  Dense out{Rational(0)};
  Dense power{Rational(1)};
  for (std::size_t l = 0; l < a.size(); ++l) {
    if (l > 0) power = truncate(multiply(power, b), limit);
    if (out.size() < power.size()) out.resize(power.size(), Rational(0));
    for (std::size_t k = 0; k < power.size(); ++k) out[k] += a[l] * power[k];
  }
  return out;
}

/// n-fold composition p∘...∘p; p^0 = x.
inline Dense iterate(const Dense& p, int n, std::size_t limit = SIZE_MAX - 1) {
  Dense out{Rational(0), Rational(1)};
  for (int i = 0; i < n; ++i) out = compose(p, out, limit);
  return out;
}

inline Rational coeff(const Dense& a, int k) {
  return k < static_cast<int>(a.size()) ? a[static_cast<std::size_t>(k)] : Rational(0);
}

inline Rational factorial(int n) {
  Rational out(1);
  for (int k = 2; k <= n; ++k) out *= Rational(k);
  return out;
}

/// Generalized binomial coefficient C(a, k) for rational a.
inline Rational binomial(const Rational& a, int k) {
  Rational out(1);
  for (int i = 0; i < k; ++i) out *= (a - Rational(i)) / Rational(i + 1);
  return out;
}

inline Dense to_dense(const Polynomial& p) {
  Dense out;
  for (const auto& c : p.coeffs()) out.push_back(c.as_rational());
  return out;
}

inline Dense to_dense(const PowerSeries& f) {
  Dense out;
  for (const auto& c : f.coeffs()) out.push_back(c.as_rational());
  return out;
}

}  // namespace oracle

inline PowerSeries series_q(const std::vector<Rational>& c) { return PowerSeries::from_rationals(Field::Q, c); }
inline Polynomial poly_q(const std::vector<Rational>& c) { return Polynomial::from_rationals(Field::Q, c); }
inline FieldElement q_elem(const Rational& r) { return r; }

}  // namespace poincare::testing

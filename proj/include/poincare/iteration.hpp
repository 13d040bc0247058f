#pragma once

#include <vector>

#include "poincare/functional_equation.hpp"
#include "poincare/polynomial.hpp"
#include "poincare/power_series.hpp"

namespace poincare {

/// p^{∘n} truncated at the given precision; p^{∘0} = x. Negative n iterate the
/// reversion of p (NotInvertible when p_1 = 0). p_0 must be 0.
PowerSeries iterate_integer(const Polynomial& p, int n, int precision);

/// n -> (p^{∘n})_j as a polynomial of degree <= j-1 in the iteration count,
/// for p tangent to the identity. Stored in the monomial basis c_0..c_{j-1}.
class IterateCoefficientPolynomial {
public:
  IterateCoefficientPolynomial(int j, Polynomial in_n);

  int degree_index() const { return j_; }
  /// c_l, zero past the stored degree.
  FieldElement coeff(int l) const { return poly_.coeff(l); }
  const Polynomial& as_polynomial() const { return poly_; }
  FieldElement eval(const FieldElement& n) const { return poly_.eval(n); }

private:
  int j_;
  Polynomial poly_;
};

/// Newton forward-difference interpolation of (p^{∘n})_j on n = 0..j-1,
/// checked against direct composition at n = j and n = j+1
/// (InternalInvariant on mismatch). Requires p_0 = 0 and p_1 = 1
/// (NotTangentToIdentity).
IterateCoefficientPolynomial iterate_coefficient_polynomial(const Polynomial& p, int j);

/// Interpolation from precomputed node values v_0..v_{m}: the unique
/// polynomial of degree <= m through (k, v_k).
Polynomial newton_forward_interpolate(Field field, const std::vector<FieldElement>& values);

/// Continuous iterates p^{∘t} of a tangent-to-identity polynomial p. The
/// per-degree coefficient polynomials are computed once at construction.
class ContinuousIterator {
public:
  ContinuousIterator(Polynomial p, int precision);

  int precision() const { return static_cast<int>(coefficients_.size()); }
  const Polynomial& p() const { return p_; }
  /// Coefficient polynomial for degree j, 1 <= j <= precision.
  const IterateCoefficientPolynomial& coefficient(int j) const;
  PowerSeries at(const FieldElement& t) const;

private:
  Polynomial p_;
  std::vector<IterateCoefficientPolynomial> coefficients_;
};

PowerSeries iterate_continuous(const Polynomial& p, const FieldElement& t, int precision);

/// f∘(lambda x)∘f^{∘-1} where f solves the instance's Poincaré equation at
/// the given precision; lambda = q^m reproduces p^{∘m}.
PowerSeries iterate_by_conjugation(const PoincareInstance& inst, const FieldElement& lambda, int precision);

/// Both sides of the iterate recurrence
///   (p^{∘n})_j = ({q^j}_{n-j,j} / ({q}_{n-j,j})_n) *
///       ( sum_{l=n-j-1}^{n-1} ({q}_{n-j-1,j})_l / {q^j}_{n-j-1,j} (p^{∘l})_j
///       - sum_{l=n-j}^{n-1}   ({q}_{n-j,j})_l   / {q^j}_{n-j,j}   (p^{∘l})_j ),
/// where {q}_{m,j} = x^m prod_{i<j} (x - q^i) and {a}_{m,j} is its value at a.
struct RecurrenceCheck {
  FieldElement lhs;
  FieldElement rhs;
  FieldElement residual() const { return lhs - rhs; }
};

RecurrenceCheck evaluate_iterate_recurrence(const Polynomial& p, const FieldElement& q, int n, int j, int precision);

/// lhs - rhs of the recurrence above; requires p_1 = q, j > n, precision >= j.
FieldElement verify_iterate_recurrence(const Polynomial& p, const FieldElement& q, int n, int j, int precision);

/// sum_{l=0..j} C(j,l) (-1)^l (p^{∘(n-l)})_j, which vanishes because
/// (p^{∘n})_j has degree <= j-1 in n. Requires p tangent to the identity.
FieldElement verify_q1_difference_identity(const Polynomial& p, int n, int j);

}  // namespace poincare

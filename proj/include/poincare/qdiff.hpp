#pragma once

#include "poincare/polynomial.hpp"
#include "poincare/power_series.hpp"

namespace poincare {

/// Least n >= 0 with g(q^n) != 0, the q-difference order of g.
///
/// Under the root-of-unity exclusion the points q^0..q^deg(g) are pairwise
/// distinct, so a nonzero g cannot vanish on all of them and the result is at
/// most deg(g). bound must be at least deg(g) + 1; q must not be a root of
/// unity of order <= bound (RootOfUnityBase) and must be nonzero (ZeroBase).
int qdiff_order(const Polynomial& g, const FieldElement& q, int bound);

/// Homogeneous q-difference operator f -> x^{-n} * sum_i g_i f(q^i x), where
/// n is the q-difference order of g. The order is computed eagerly.
class QDiffOperator {
public:
  QDiffOperator(Polynomial g, FieldElement q);
  QDiffOperator(Polynomial g, FieldElement q, int bound);

  /// Test hook: builds an operator that claims an arbitrary order without
  /// checking it, so the vanishing check in apply() can be exercised.
  static QDiffOperator with_claimed_order(Polynomial g, FieldElement q, int order);

  const Polynomial& g() const { return g_; }
  const FieldElement& q() const { return q_; }
  int order() const { return order_; }

  /// Precision of the result is prec(f) - order(). The low coefficients of
  /// sum_i g_i f(q^i x) are always checked to vanish; a nonzero one raises
  /// NotDivisibleByXn.
  PowerSeries apply(const PowerSeries& f) const;

private:
  QDiffOperator(Polynomial g, FieldElement q, int order, bool);

  Polynomial g_;
  FieldElement q_;
  int order_;
};

PowerSeries qdiff_apply(const QDiffOperator& op, const PowerSeries& f);

/// f_j recovered as (D_{g_j;q} f)[0] / g_j(q^j). OrderMismatch unless g_j has
/// q-difference order exactly j.
FieldElement maclaurin_coefficient(const PowerSeries& f, int j, const Polynomial& g_j, const FieldElement& q);

/// prod_{i=0}^{j-1} (x - q^i), expanded; its q-difference order is j.
Polynomial canonical_order_poly(int j, const FieldElement& q);

/// x^n * prod_{i=0}^{j-1} (x - q^i) for any integer n.
LaurentPolynomial laurent_q_pochhammer(int n, int j, const FieldElement& q);

}  // namespace poincare

#include "poincare/qdiff.hpp"

#include <algorithm>

#include "poincare/error.hpp"

namespace poincare {
namespace {

void require_admissible_base(const FieldElement& q, int bound) {
  if (is_root_of_unity_up_to(q, bound)) {
    throw Error(ErrorCode::RootOfUnityBase,
                "q = " + q.to_string() + " is a root of unity of order <= " + std::to_string(bound));
  }
}

}  // namespace

int qdiff_order(const Polynomial& g, const FieldElement& q, int bound) {
  if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "q-difference order of the zero polynomial");
  require_same_field(g.field(), q.field(), "q-difference order");
  if (bound < g.degree() + 1) {
    throw Error(ErrorCode::InvalidArgument, "bound " + std::to_string(bound) + " is below deg(g) + 1 = " +
                                                std::to_string(g.degree() + 1));
  }
  require_admissible_base(q, bound);
  FieldElement point = FieldElement::one(q.field());
  for (int n = 0; n <= g.degree(); ++n) {
    if (!g.eval(point).is_zero()) return n;
    point *= q;
  }
  throw Error(ErrorCode::InternalInvariant, "nonzero polynomial vanishes at deg + 1 distinct points");
}

QDiffOperator::QDiffOperator(Polynomial g, FieldElement q)
    : QDiffOperator(g, q, qdiff_order(g, q, g.degree() + 1), true) {}

QDiffOperator::QDiffOperator(Polynomial g, FieldElement q, int bound)
    : QDiffOperator(g, q, qdiff_order(g, q, bound), true) {}

QDiffOperator::QDiffOperator(Polynomial g, FieldElement q, int order, bool)
    : g_(std::move(g)), q_(std::move(q)), order_(order) {}

QDiffOperator QDiffOperator::with_claimed_order(Polynomial g, FieldElement q, int order) {
  return {std::move(g), std::move(q), order, true};
}

PowerSeries QDiffOperator::apply(const PowerSeries& f) const {
  require_same_field(f.field(), q_.field(), "q-difference operator");
  if (f.precision() < order_) {
    throw Error(ErrorCode::PrecisionTooLow, "operator of order " + std::to_string(order_) +
                                                " applied to a series of precision " + std::to_string(f.precision()));
  }
  PowerSeries sum = PowerSeries::zero(f.field(), f.precision());
  FieldElement scale = FieldElement::one(f.field());
  for (int i = 0; i <= g_.degree(); ++i) {
    if (!g_.coeff(i).is_zero()) sum = sum + scale_arg(f, scale).scaled(g_.coeff(i));
    scale *= q_;
  }
  // sum_m = g(q^m) f_m, which vanishes below the order.
  return div_xn(sum, order_);
}

PowerSeries qdiff_apply(const QDiffOperator& op, const PowerSeries& f) { return op.apply(f); }

FieldElement maclaurin_coefficient(const PowerSeries& f, int j, const Polynomial& g_j, const FieldElement& q) {
  if (j < 0) throw Error(ErrorCode::InvalidArgument, "negative coefficient index");
  const QDiffOperator op(g_j, q, std::max(g_j.degree(), j) + 1);
  if (op.order() != j) {
    throw Error(ErrorCode::OrderMismatch, "g has q-difference order " + std::to_string(op.order()) +
                                              ", expected " + std::to_string(j));
  }
  const PowerSeries shifted = op.apply(f);
  return shifted.coeff(0) / g_j.eval(q.pow(j));
}

Polynomial canonical_order_poly(int j, const FieldElement& q) {
  if (j < 0) throw Error(ErrorCode::InvalidArgument, "negative order");
  require_admissible_base(q, j);
  const Field field = q.field();
  Polynomial out = Polynomial::constant(FieldElement::one(field));
  FieldElement root = FieldElement::one(field);
  for (int i = 0; i < j; ++i) {
    out = out * Polynomial(field, {-root, FieldElement::one(field)});
    root *= q;
  }
  return out;
}

LaurentPolynomial laurent_q_pochhammer(int n, int j, const FieldElement& q) {
  return {canonical_order_poly(j, q), n};
}

}  // namespace poincare

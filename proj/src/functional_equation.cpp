#include "poincare/functional_equation.hpp"

#include <algorithm>

#include "poincare/error.hpp"
#include "poincare/iteration.hpp"
#include "poincare/qdiff.hpp"

namespace poincare {

PoincareInstance::PoincareInstance(Polynomial p, int precision)
    : p_(std::move(p)), q_(p_.coeff(1)), precision_(precision) {
  if (precision_ < 1) throw Error(ErrorCode::InvalidInstance, "precision must be >= 1");
  if (!p_.coeff(0).is_zero()) throw Error(ErrorCode::InvalidInstance, "p_0 must be 0");
  if (q_.is_zero()) throw Error(ErrorCode::InvalidInstance, "q = p_1 must be nonzero");
  if (is_root_of_unity_up_to(q_, precision_)) {
    throw Error(ErrorCode::InvalidInstance, "q = " + q_.to_string() + " is a root of unity");
  }
}

PowerSeries solve_poincare_recursive(const PoincareInstance& inst) {
  const Field field = inst.field();
  const int n = inst.precision();
  const auto& p = inst.p();
  const auto& q = inst.q();

  std::vector<FieldElement> f(static_cast<std::size_t>(n) + 1, FieldElement::zero(field));
  f[1] = FieldElement::one(field);
  OnlinePowers powers(field, std::min(p.degree(), n), n);
  powers.push(f[1]);
  FieldElement q_power = q;
  for (int j = 2; j <= n; ++j) {
    q_power *= q;
    FieldElement sum = FieldElement::zero(field);
    for (int l = 2; l <= std::min(j, p.degree()); ++l) {
      if (!p.coeff(l).is_zero()) sum += p.coeff(l) * powers.power_coeff(l, j);
    }
    const FieldElement denom = q_power - q;
    if (denom.is_zero()) {
      throw Error(ErrorCode::RootOfUnityDivisor, "q^" + std::to_string(j) + " - q vanishes");
    }
    f[static_cast<std::size_t>(j)] = sum / denom;
    powers.push(f[static_cast<std::size_t>(j)]);
  }
  return {field, std::move(f)};
}

PowerSeries solve_poincare_nonrecursive(const PoincareInstance& inst) {
  std::vector<Polynomial> g;
  g.reserve(static_cast<std::size_t>(inst.precision()));
  for (int j = 1; j <= inst.precision(); ++j) g.push_back(canonical_order_poly(j, inst.q()));
  return solve_poincare_nonrecursive(inst, g);
}

PowerSeries solve_poincare_nonrecursive(const PoincareInstance& inst, std::span<const Polynomial> g) {
  const Field field = inst.field();
  const int n = inst.precision();
  const auto& q = inst.q();
  if (g.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(n) + " polynomials g_1..g_N, got " +
                                                std::to_string(g.size()));
  }
  int max_degree = 0;
  for (int j = 1; j <= n; ++j) {
    const Polynomial& gj = g[static_cast<std::size_t>(j - 1)];
    const int order = qdiff_order(gj, q, std::max(gj.degree() + 1, n));
    if (order != j) {
      throw Error(ErrorCode::OrderMismatch, "g_" + std::to_string(j) + " has q-difference order " +
                                                std::to_string(order));
    }
    max_degree = std::max(max_degree, gj.degree());
  }

  // p^{∘0}, ..., p^{∘max_degree}, shared by every j.
  std::vector<PowerSeries> iterates;
  iterates.reserve(static_cast<std::size_t>(max_degree) + 1);
  iterates.push_back(PowerSeries::x(field, n));
  for (int i = 1; i <= max_degree; ++i) iterates.push_back(compose(inst.p(), iterates.back()));

  std::vector<FieldElement> f(static_cast<std::size_t>(n) + 1, FieldElement::zero(field));
  for (int j = 1; j <= n; ++j) {
    const Polynomial& gj = g[static_cast<std::size_t>(j - 1)];
    FieldElement sum = FieldElement::zero(field);
    for (int i = 0; i <= gj.degree(); ++i) {
      if (!gj.coeff(i).is_zero()) sum += gj.coeff(i) * iterates[static_cast<std::size_t>(i)].coeff(j);
    }
    f[static_cast<std::size_t>(j)] = sum / gj.eval(q.pow(j));
  }
  return {field, std::move(f)};
}

PowerSeries solve_schroder(const PoincareInstance& inst) { return revert(solve_poincare_recursive(inst)); }

PoincareResidual verify_poincare(const PowerSeries& f, const PoincareInstance& inst) {
  const int n = inst.precision();
  if (f.precision() < n) {
    throw Error(ErrorCode::PrecisionTooLow, "series precision " + std::to_string(f.precision()) +
                                                " is below the instance precision " + std::to_string(n));
  }
  require_same_field(f.field(), inst.field(), "verify_poincare");
  const PowerSeries fn = f.truncated(n);
  const auto& q = inst.q();
  PoincareResidual out{scale_arg(fn, q) - compose(inst.p(), fn), std::nullopt};
  if (fn.coeff(0).is_zero()) {
    const PowerSeries p_inverse = revert(PowerSeries::from_polynomial(inst.p(), n));
    out.inverse_form = scale_arg(fn, q.pow(-1)) - compose(p_inverse, fn);
  }
  return out;
}

}  // namespace poincare

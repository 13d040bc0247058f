#pragma once

#include <optional>
#include <span>
#include <vector>

#include "poincare/polynomial.hpp"
#include "poincare/power_series.hpp"

namespace poincare {

/// A polynomial map p together with a working precision N for the equation
/// f∘(qx) = p∘f. Construction enforces p_0 = 0, q = p_1 != 0, and that q is
/// not a root of unity of order <= N; otherwise InvalidInstance.
class PoincareInstance {
public:
  PoincareInstance(Polynomial p, int precision);

  const Polynomial& p() const { return p_; }
  const FieldElement& q() const { return q_; }
  int precision() const { return precision_; }
  Field field() const { return p_.field(); }

  PoincareInstance with_precision(int precision) const { return {p_, precision}; }

private:
  Polynomial p_;
  FieldElement q_;
  int precision_;
};

/// Normalized solution (f_0 = 0, f_1 = 1) by coefficient matching:
///   (q^j - q) f_j = sum_{l=2..j} p_l (f^l)_j.
PowerSeries solve_poincare_recursive(const PoincareInstance& inst);

/// Normalized solution from the closed form
///   f_j = (1 / g_j(q^j)) * sum_i g_{j,i} (p^{∘i})_j
/// with g_j = prod_{i<j} (x - q^i).
PowerSeries solve_poincare_nonrecursive(const PoincareInstance& inst);

/// Same closed form with caller-chosen g_1..g_N (g[j-1] is g_j). Each g_j must
/// have q-difference order exactly j (OrderMismatch otherwise).
PowerSeries solve_poincare_nonrecursive(const PoincareInstance& inst, std::span<const Polynomial> g);

/// The Schröder solution sigma = f^{∘-1}, satisfying q sigma = sigma∘p.
PowerSeries solve_schroder(const PoincareInstance& inst);

struct PoincareResidual {
  /// f∘(qx) - p∘f through N.
  PowerSeries direct;
  /// f∘(x/q) - p^{∘-1}∘f through N; absent when f_0 != 0 (composition with
  /// the series p^{∘-1} is then undefined).
  std::optional<PowerSeries> inverse_form;

  bool is_zero() const { return direct.is_zero() && (!inverse_form || inverse_form->is_zero()); }
  /// Both forms agree on whether f solves the equation.
  bool consistent() const { return !inverse_form || direct.is_zero() == inverse_form->is_zero(); }
};

/// Residuals of f against the instance; f must have precision >= N.
PoincareResidual verify_poincare(const PowerSeries& f, const PoincareInstance& inst);

}  // namespace poincare

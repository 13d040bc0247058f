#include "poincare/iteration.hpp"

#include <algorithm>
#include <map>

#include "poincare/error.hpp"
#include "poincare/qdiff.hpp"

namespace poincare {
namespace {

void require_zero_constant(const Polynomial& p) {
  if (!p.coeff(0).is_zero()) throw Error(ErrorCode::InvalidArgument, "p_0 must be 0 for iteration");
}

void require_tangent_to_identity(const Polynomial& p) {
  require_zero_constant(p);
  if (!p.coeff(1).is_one()) {
    throw Error(ErrorCode::NotTangentToIdentity, "p_1 = " + p.coeff(1).to_string() + ", expected 1");
  }
}

// p^{∘l} for every l in [lo, hi], keyed by l.
std::map<int, PowerSeries> iterate_range(const Polynomial& p, int lo, int hi, int precision) {
  require_zero_constant(p);
  std::map<int, PowerSeries> out;
  PowerSeries current = PowerSeries::x(p.field(), precision);
  out.emplace(0, current);
  for (int l = 1; l <= hi; ++l) {
    current = compose(p, current);
    out.emplace(l, current);
  }
  if (lo < 0) {
    if (p.coeff(1).is_zero()) throw Error(ErrorCode::NotInvertible, "negative iterate of p with p_1 = 0");
    const PowerSeries inverse = revert(PowerSeries::from_polynomial(p, precision));
    current = PowerSeries::x(p.field(), precision);
    for (int l = -1; l >= lo; --l) {
      current = compose(inverse, current);
      out.emplace(l, current);
    }
  }
  return out;
}

// Interpolates on nodes 0..j-1 and checks the extrapolation to j and j+1.
// values must hold (p^{∘n})_j for n = 0..j+1.
IterateCoefficientPolynomial interpolate_checked(Field field, int j, const std::vector<FieldElement>& values) {
  const std::vector<FieldElement> nodes(values.begin(), values.begin() + j);
  Polynomial poly = newton_forward_interpolate(field, nodes);
  for (int n = j; n <= j + 1; ++n) {
    const FieldElement predicted = poly.eval(FieldElement::from_rational(field, Rational(n)));
    if (predicted != values[static_cast<std::size_t>(n)]) {
      throw Error(ErrorCode::InternalInvariant,
                  "interpolated coefficient " + std::to_string(j) + " predicts " + predicted.to_string() +
                      " at n = " + std::to_string(n) + ", direct composition gives " +
                      values[static_cast<std::size_t>(n)].to_string());
    }
  }
  return {j, std::move(poly)};
}

}  // namespace

PowerSeries iterate_integer(const Polynomial& p, int n, int precision) {
  if (precision < 0) throw Error(ErrorCode::InvalidArgument, "negative precision");
  auto all = iterate_range(p, std::min(n, 0), std::max(n, 0), std::max(precision, n < 0 ? 1 : 0));
  return all.at(n).truncated(precision);
}

IterateCoefficientPolynomial::IterateCoefficientPolynomial(int j, Polynomial in_n)
    : j_(j), poly_(std::move(in_n)) {
  if (poly_.degree() > std::max(j_ - 1, 0)) {
    throw Error(ErrorCode::InternalInvariant, "iterate coefficient polynomial of degree " +
                                                  std::to_string(poly_.degree()) + " for j = " + std::to_string(j_));
  }
}

Polynomial newton_forward_interpolate(Field field, const std::vector<FieldElement>& values) {
  // Newton form: sum_k (Δ^k v)_0 * n(n-1)...(n-k+1) / k!
  std::vector<FieldElement> diffs = values;
  Polynomial result(field);
  Polynomial falling = Polynomial::constant(FieldElement::one(field));
  Rational factorial(1);
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) {
      for (std::size_t i = 0; i + k < values.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
      factorial *= Rational(static_cast<std::int64_t>(k));
      const auto shift = FieldElement::from_rational(field, Rational(static_cast<std::int64_t>(k) - 1));
      falling = falling * Polynomial(field, {-shift, FieldElement::one(field)});
    }
    if (!diffs[0].is_zero()) {
      result = result + falling.scaled(diffs[0] / FieldElement::from_rational(field, factorial));
    }
  }
  return result;
}

IterateCoefficientPolynomial iterate_coefficient_polynomial(const Polynomial& p, int j) {
  require_tangent_to_identity(p);
  if (j < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  const auto iterates = iterate_range(p, 0, j + 1, j);
  std::vector<FieldElement> values;
  for (int n = 0; n <= j + 1; ++n) values.push_back(iterates.at(n).coeff(j));
  return interpolate_checked(p.field(), j, values);
}

ContinuousIterator::ContinuousIterator(Polynomial p, int precision) : p_(std::move(p)) {
  require_tangent_to_identity(p_);
  if (precision < 0) throw Error(ErrorCode::InvalidArgument, "negative precision");
  const auto iterates = iterate_range(p_, 0, precision + 1, precision);
  coefficients_.reserve(static_cast<std::size_t>(precision));
  for (int j = 1; j <= precision; ++j) {
    std::vector<FieldElement> values;
    for (int n = 0; n <= j + 1; ++n) values.push_back(iterates.at(n).coeff(j));
    coefficients_.push_back(interpolate_checked(p_.field(), j, values));
  }
}

const IterateCoefficientPolynomial& ContinuousIterator::coefficient(int j) const {
  if (j < 1 || j > precision()) {
    throw Error(ErrorCode::PrecisionTooLow, "no coefficient polynomial for degree " + std::to_string(j));
  }
  return coefficients_[static_cast<std::size_t>(j - 1)];
}

PowerSeries ContinuousIterator::at(const FieldElement& t) const {
  require_same_field(p_.field(), t.field(), "continuous iteration");
  std::vector<FieldElement> out{FieldElement::zero(p_.field())};
  for (const auto& c : coefficients_) out.push_back(c.eval(t));
  return {p_.field(), std::move(out)};
}

PowerSeries iterate_continuous(const Polynomial& p, const FieldElement& t, int precision) {
  return ContinuousIterator(p, precision).at(t);
}

PowerSeries iterate_by_conjugation(const PoincareInstance& inst, const FieldElement& lambda, int precision) {
  require_same_field(inst.field(), lambda.field(), "conjugation");
  const PowerSeries f = solve_poincare_recursive(inst.with_precision(precision));
  return compose(scale_arg(f, lambda), revert(f));
}

RecurrenceCheck evaluate_iterate_recurrence(const Polynomial& p, const FieldElement& q, int n, int j, int precision) {
  require_same_field(p.field(), q.field(), "iterate recurrence");
  require_zero_constant(p);
  if (p.coeff(1) != q) {
    throw Error(ErrorCode::InvalidArgument, "p_1 = " + p.coeff(1).to_string() + " differs from q = " + q.to_string());
  }
  if (j <= n) throw Error(ErrorCode::InvalidArgument, "the recurrence needs j > n");
  if (j < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  if (precision < j) throw Error(ErrorCode::PrecisionTooLow, "precision must be >= j");
  if (is_root_of_unity_up_to(q, std::max(j, precision))) {
    throw Error(ErrorCode::RootOfUnityBase, "q = " + q.to_string() + " is a root of unity");
  }

  const Field field = p.field();
  const auto iterates = iterate_range(p, n - j - 1, std::max(n, 0), precision);
  auto it = [&](int l) { return iterates.at(l).coeff(j); };

  const FieldElement qj = q.pow(j);
  const LaurentPolynomial outer = laurent_q_pochhammer(n - j - 1, j, q);
  const LaurentPolynomial inner = laurent_q_pochhammer(n - j, j, q);
  const FieldElement outer_at = outer.eval(qj);
  const FieldElement inner_at = inner.eval(qj);

  FieldElement first = FieldElement::zero(field);
  for (int l = n - j - 1; l <= n - 1; ++l) first += outer.coeff(l) / outer_at * it(l);
  FieldElement second = FieldElement::zero(field);
  for (int l = n - j; l <= n - 1; ++l) second += inner.coeff(l) / inner_at * it(l);

  const FieldElement rhs = inner_at / inner.coeff(n) * (first - second);
  return {it(n), rhs};
}

FieldElement verify_iterate_recurrence(const Polynomial& p, const FieldElement& q, int n, int j, int precision) {
  return evaluate_iterate_recurrence(p, q, n, j, precision).residual();
}

FieldElement verify_q1_difference_identity(const Polynomial& p, int n, int j) {
  require_tangent_to_identity(p);
  if (j < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  const Field field = p.field();
  const auto iterates = iterate_range(p, std::min(n - j, 0), std::max(n, 0), std::max(j, 1));
  FieldElement sum = FieldElement::zero(field);
  for (int l = 0; l <= j; ++l) {
    Rational weight = binomial(j, l);
    if (l % 2 == 1) weight = -weight;
    sum += FieldElement::from_rational(field, weight) * iterates.at(n - l).coeff(j);
  }
  return sum;
}

}  // namespace poincare

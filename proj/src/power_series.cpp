#include "poincare/power_series.hpp"

#include <algorithm>

#include "poincare/error.hpp"

namespace poincare {

PowerSeries::PowerSeries(Field field, std::vector<FieldElement> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "power series needs at least c_0");
  for (const auto& c : coeffs_) require_same_field(field_, c.field(), "series coefficient");
}

PowerSeries PowerSeries::zero(Field field, int precision) {
  if (precision < 0) throw Error(ErrorCode::InvalidArgument, "negative precision");
  return {field, std::vector<FieldElement>(static_cast<std::size_t>(precision) + 1, FieldElement::zero(field))};
}

PowerSeries PowerSeries::constant(const FieldElement& c, int precision) {
  PowerSeries out = zero(c.field(), precision);
  out.coeffs_[0] = c;
  return out;
}

PowerSeries PowerSeries::x(Field field, int precision) {
  PowerSeries out = zero(field, precision);
  if (precision >= 1) out.coeffs_[1] = FieldElement::one(field);
  return out;
}

PowerSeries PowerSeries::from_polynomial(const Polynomial& p, int precision) {
  PowerSeries out = zero(p.field(), precision);
  for (int k = 0; k <= std::min(p.degree(), precision); ++k) out.coeffs_[static_cast<std::size_t>(k)] = p.coeff(k);
  return out;
}

PowerSeries PowerSeries::from_rationals(Field field, const std::vector<Rational>& coeffs) {
  std::vector<FieldElement> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(FieldElement::from_rational(field, c));
  return {field, std::move(out)};
}

const FieldElement& PowerSeries::coeff(int j) const {
  if (j < 0 || j > precision()) {
    throw Error(ErrorCode::PrecisionTooLow, "coefficient " + std::to_string(j) +
                                                " requested from a series of precision " +
                                                std::to_string(precision()));
  }
  return coeffs_[static_cast<std::size_t>(j)];
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_zero(); });
}

std::optional<int> PowerSeries::valuation() const {
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (!coeffs_[j].is_zero()) return static_cast<int>(j);
  }
  return std::nullopt;
}

PowerSeries PowerSeries::truncated(int precision) const {
  if (precision < 0 || precision > this->precision()) {
    throw Error(ErrorCode::PrecisionTooLow, "cannot truncate to precision " + std::to_string(precision));
  }
  return {field_, std::vector<FieldElement>(coeffs_.begin(), coeffs_.begin() + precision + 1)};
}

PowerSeries PowerSeries::scaled(const FieldElement& c) const {
  require_same_field(field_, c.field(), "series scaling");
  PowerSeries out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
  require_same_field(f.field_, g.field_, "series addition");
  const int n = std::min(f.precision(), g.precision());
  PowerSeries out = f.truncated(n);
  for (int j = 0; j <= n; ++j) out.coeffs_[static_cast<std::size_t>(j)] += g.coeffs_[static_cast<std::size_t>(j)];
  return out;
}

PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) { return f + (-g); }

PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
  require_same_field(f.field_, g.field_, "series multiplication");
  const int n = std::min(f.precision(), g.precision());
  PowerSeries out = PowerSeries::zero(f.field_, n);
  for (int l = 0; l <= n; ++l) {
    const auto& a = f.coeffs_[static_cast<std::size_t>(l)];
    if (a.is_zero()) continue;
    for (int m = 0; l + m <= n; ++m) {
      const auto& b = g.coeffs_[static_cast<std::size_t>(m)];
      if (!b.is_zero()) out.coeffs_[static_cast<std::size_t>(l + m)] += a * b;
    }
  }
  return out;
}

std::string PowerSeries::to_string(std::string_view var) const {
  std::vector<FieldElement> known = coeffs_;
  std::string body = Polynomial(field_, std::move(known)).to_string(var);
  return body + " + O(" + std::string(var) + "^" + std::to_string(precision() + 1) + ")";
}

std::ostream& operator<<(std::ostream& os, const PowerSeries& f) { return os << f.to_string(); }

PowerSeries ps_add(const PowerSeries& f, const PowerSeries& g) { return f + g; }
PowerSeries ps_mul(const PowerSeries& f, const PowerSeries& g) { return f * g; }

PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
  require_same_field(f.field(), g.field(), "composition");
  if (!g.coeff(0).is_zero()) {
    throw Error(ErrorCode::NonzeroInnerConstantTerm, "series composition needs g_0 = 0");
  }
  const int n = std::min(f.precision(), g.precision());
  const PowerSeries inner = g.truncated(n);
  PowerSeries result = PowerSeries::constant(f.coeff(0), n);
  // g^l has valuation >= l, so only l <= n contributes.
  PowerSeries power = PowerSeries::constant(FieldElement::one(f.field()), n);
  for (int l = 1; l <= n; ++l) {
    power = power * inner;
    if (!f.coeff(l).is_zero()) result = result + power.scaled(f.coeff(l));
  }
  return result;
}

PowerSeries compose(const Polynomial& p, const PowerSeries& g) {
  require_same_field(p.field(), g.field(), "composition");
  const int n = g.precision();
  PowerSeries result = PowerSeries::constant(p.coeff(0), n);
  PowerSeries power = PowerSeries::constant(FieldElement::one(g.field()), n);
  for (int l = 1; l <= p.degree(); ++l) {
    power = power * g;
    if (!p.coeff(l).is_zero()) result = result + power.scaled(p.coeff(l));
  }
  return result;
}

PowerSeries revert(const PowerSeries& f) {
  const int n = f.precision();
  if (n < 1) throw Error(ErrorCode::PrecisionTooLow, "reversion needs precision >= 1");
  if (!f.coeff(0).is_zero() || f.coeff(1).is_zero()) {
    throw Error(ErrorCode::NotInvertible, "reversion needs f_0 = 0 and f_1 != 0");
  }
  const Field field = f.field();
  const FieldElement inv_lead = FieldElement::one(field) / f.coeff(1);
  std::vector<FieldElement> g(static_cast<std::size_t>(n) + 1, FieldElement::zero(field));
  g[1] = inv_lead;
  OnlinePowers powers(field, n, n);
  powers.push(g[1]);
  // Degree k of f∘g: f_1 g_k + sum_{l=2..k} f_l (g^l)_k = 0.
  for (int k = 2; k <= n; ++k) {
    FieldElement rest = FieldElement::zero(field);
    for (int l = 2; l <= k; ++l) {
      if (!f.coeff(l).is_zero()) rest += f.coeff(l) * powers.power_coeff(l, k);
    }
    g[static_cast<std::size_t>(k)] = -rest * inv_lead;
    powers.push(g[static_cast<std::size_t>(k)]);
  }
  return {field, std::move(g)};
}

PowerSeries scale_arg(const PowerSeries& f, const FieldElement& c) {
  require_same_field(f.field(), c.field(), "argument scaling");
  std::vector<FieldElement> out = f.coeffs();
  FieldElement factor = FieldElement::one(f.field());
  for (auto& x : out) {
    x *= factor;
    factor *= c;
  }
  return {f.field(), std::move(out)};
}

PowerSeries div_xn(const PowerSeries& f, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative shift");
  if (n > f.precision()) {
    throw Error(ErrorCode::PrecisionTooLow, "cannot divide a series of precision " +
                                                std::to_string(f.precision()) + " by x^" + std::to_string(n));
  }
  for (int m = 0; m < n; ++m) {
    if (!f.coeff(m).is_zero()) {
      throw Error(ErrorCode::NotDivisibleByXn,
                  "coefficient " + std::to_string(m) + " is nonzero, cannot divide by x^" + std::to_string(n));
    }
  }
  return {f.field(), std::vector<FieldElement>(f.coeffs().begin() + n, f.coeffs().end())};
}

// ---------------------------------------------------------------------------
// OnlinePowers

OnlinePowers::OnlinePowers(Field field, int max_power, int precision)
    : field_(field), max_power_(std::max(max_power, 1)), precision_(precision) {
  table_.assign(static_cast<std::size_t>(max_power_) + 1,
                std::vector<FieldElement>(static_cast<std::size_t>(precision_) + 1, FieldElement::zero(field_)));
  table_[0][0] = FieldElement::one(field_);
}

const FieldElement& OnlinePowers::power_coeff(int l, int k) const {
  if (l < 0 || l > max_power_ || k < 0 || k > precision_ || k > next_index() ||
      (k == next_index() && l == 1)) {
    throw Error(ErrorCode::InternalInvariant, "power coefficient (" + std::to_string(l) + ", " +
                                                  std::to_string(k) + ") is not available yet");
  }
  return table_[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)];
}

void OnlinePowers::push(const FieldElement& coeff) {
  require_same_field(field_, coeff.field(), "online powers");
  const int k = next_index();
  if (k > precision_) throw Error(ErrorCode::PrecisionTooLow, "online powers are full");
  table_[1][static_cast<std::size_t>(k)] = coeff;
  ++known_;
  if (k + 1 <= precision_) fill_column(k + 1);
}

void OnlinePowers::fill_column(int k) {
  const auto& s = table_[1];
  for (int l = 2; l <= std::min(max_power_, k); ++l) {
    const auto& prev = table_[static_cast<std::size_t>(l - 1)];
    FieldElement acc = FieldElement::zero(field_);
    // (s^l)_k = sum_i s_i (s^{l-1})_{k-i}; (s^{l-1})_m = 0 for m < l-1.
    for (int i = 1; i <= k - l + 1; ++i) {
      const auto& a = s[static_cast<std::size_t>(i)];
      if (!a.is_zero()) acc += a * prev[static_cast<std::size_t>(k - i)];
    }
    table_[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)] = std::move(acc);
  }
}

}  // namespace poincare

#include "poincare/polynomial.hpp"

#include <algorithm>

#include "poincare/error.hpp"

namespace poincare {
namespace {

// Appends "c*x^k" to a sum being rendered in descending order.
void append_term(std::string& out, const FieldElement& c, int k, std::string_view var) {
  std::string cs = c.to_string();
  bool compound = false;
  if (c.field() == Field::Qq) {
    compound = cs.find_first_of("+-/", 1) != std::string::npos;
  }
  bool negative = false;
  if (!compound && cs.front() == '-') {
    negative = true;
    cs.erase(0, 1);
  }
  if (!out.empty()) {
    out += negative ? " - " : " + ";
  } else if (negative) {
    out += "-";
  }
  if (compound && k != 0) cs = "(" + cs + ")";
  if (k == 0) {
    out += cs;
    return;
  }
  if (cs != "1") out += cs + "*";
  out += var;
  if (k != 1) out += "^" + std::to_string(k);
}

}  // namespace

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(Field field, std::vector<FieldElement> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) require_same_field(field_, c.field(), "polynomial coefficient");
  trim();
}

Polynomial Polynomial::from_rationals(Field field, const std::vector<Rational>& coeffs) {
  std::vector<FieldElement> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(FieldElement::from_rational(field, c));
  return {field, std::move(out)};
}

Polynomial Polynomial::constant(const FieldElement& c) { return {c.field(), {c}}; }

Polynomial Polynomial::monomial(const FieldElement& c, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent in polynomial");
  std::vector<FieldElement> out(static_cast<std::size_t>(k) + 1, FieldElement::zero(c.field()));
  out.back() = c;
  return {c.field(), std::move(out)};
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return FieldElement::zero(field_);
  return coeffs_[static_cast<std::size_t>(k)];
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field_, b.field_, "polynomial addition");
  std::vector<FieldElement> out(std::max(a.coeffs_.size(), b.coeffs_.size()), FieldElement::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return {a.field_, std::move(out)};
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field_, b.field_, "polynomial multiplication");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  std::vector<FieldElement> out(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElement::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[i + k] += a.coeffs_[i] * b.coeffs_[k];
  }
  return {a.field_, std::move(out)};
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  require_same_field(field_, c.field(), "polynomial scaling");
  Polynomial out = *this;
  for (auto& x : out.coeffs_) x *= c;
  out.trim();
  return out;
}

FieldElement Polynomial::eval(const FieldElement& v) const {
  require_same_field(field_, v.field(), "polynomial evaluation");
  FieldElement acc = FieldElement::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

std::string Polynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const auto& c = coeffs_[static_cast<std::size_t>(k)];
    if (!c.is_zero()) append_term(out, c, k, var);
  }
  return out;
}

// ---------------------------------------------------------------------------
// LaurentPolynomial

LaurentPolynomial::LaurentPolynomial(Field field, int low, std::vector<FieldElement> coeffs)
    : field_(field), low_(low), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) require_same_field(field_, c.field(), "Laurent coefficient");
  normalize();
}

LaurentPolynomial::LaurentPolynomial(const Polynomial& p, int shift)
    : LaurentPolynomial(p.field(), shift, p.coeffs()) {}

void LaurentPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  const auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return !c.is_zero(); });
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) low_ = 0;
}

FieldElement LaurentPolynomial::coeff(int e) const {
  if (is_zero() || e < low_ || e > high()) return FieldElement::zero(field_);
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

FieldElement LaurentPolynomial::eval(const FieldElement& v) const {
  require_same_field(field_, v.field(), "Laurent evaluation");
  if (is_zero()) return FieldElement::zero(field_);
  if (v.is_zero()) {
    if (low_ < 0) throw Error(ErrorCode::ZeroAtNegativeExponent, "Laurent polynomial evaluated at 0");
    return coeff(0);
  }
  FieldElement acc = FieldElement::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  return acc * v.pow(low_);
}

std::string LaurentPolynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = high(); e >= low_; --e) {
    const auto c = coeff(e);
    if (!c.is_zero()) append_term(out, c, e, var);
  }
  return out;
}

FieldElement poly_eval(const Polynomial& g, const FieldElement& v) { return g.eval(v); }
FieldElement poly_eval(const LaurentPolynomial& g, const FieldElement& v) { return g.eval(v); }

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }
std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) { return os << p.to_string(); }

}  // namespace poincare

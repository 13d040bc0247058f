#include "poincare/field.hpp"

#include "poincare/error.hpp"

namespace poincare {

std::string_view to_string(Field field) { return field == Field::Q ? "Q" : "Q(q)"; }

Field parse_field(std::string_view tag) {
  if (tag == "Q") return Field::Q;
  if (tag == "Q(q)" || tag == "Qq") return Field::Qq;
  throw Error(ErrorCode::ParseError, "unknown field '" + std::string(tag) + "'");
}

void require_same_field(Field a, Field b, std::string_view context) {
  if (a != b) {
    throw Error(ErrorCode::FieldMismatch, std::string(context) + ": " + std::string(to_string(a)) +
                                              " vs " + std::string(to_string(b)));
  }
}

FieldElement FieldElement::from_rational(Field field, const Rational& value) {
  if (field == Field::Q) return FieldElement(value);
  return FieldElement(RationalFunction(value));
}

FieldElement FieldElement::parse(Field field, std::string_view text) {
  if (field == Field::Q) return Rational::parse(text);
  return RationalFunction::parse(text);
}

bool FieldElement::is_zero() const {
  return std::visit([](const auto& v) { return v.is_zero(); }, value_);
}

bool FieldElement::is_one() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->is_one();
  const auto& f = std::get<RationalFunction>(value_);
  return f.is_constant() && f.constant_value().is_one();
}

const Rational& FieldElement::as_rational() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  throw Error(ErrorCode::FieldMismatch, "expected an element of Q");
}

const RationalFunction& FieldElement::as_rational_function() const {
  if (const auto* r = std::get_if<RationalFunction>(&value_)) return *r;
  throw Error(ErrorCode::FieldMismatch, "expected an element of Q(q)");
}

FieldElement FieldElement::operator-() const {
  return std::visit([](const auto& v) { return FieldElement(-v); }, value_);
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  require_same_field(field(), other.field(), "addition");
  if (field() == Field::Q) {
    std::get<Rational>(value_) += std::get<Rational>(other.value_);
  } else {
    auto& f = std::get<RationalFunction>(value_);
    f = f + std::get<RationalFunction>(other.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
  require_same_field(field(), other.field(), "subtraction");
  if (field() == Field::Q) {
    std::get<Rational>(value_) -= std::get<Rational>(other.value_);
  } else {
    auto& f = std::get<RationalFunction>(value_);
    f = f - std::get<RationalFunction>(other.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  require_same_field(field(), other.field(), "multiplication");
  if (field() == Field::Q) {
    std::get<Rational>(value_) *= std::get<Rational>(other.value_);
  } else {
    auto& f = std::get<RationalFunction>(value_);
    f = f * std::get<RationalFunction>(other.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& other) {
  require_same_field(field(), other.field(), "division");
  if (field() == Field::Q) {
    std::get<Rational>(value_) /= std::get<Rational>(other.value_);
  } else {
    auto& f = std::get<RationalFunction>(value_);
    f = f / std::get<RationalFunction>(other.value_);
  }
  return *this;
}

FieldElement FieldElement::pow(std::int64_t k) const {
  return std::visit([k](const auto& v) { return FieldElement(v.pow(k)); }, value_);
}

std::string FieldElement::to_string() const {
  return std::visit([](const auto& v) { return v.to_string(); }, value_);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op) {
  switch (op) {
    case FieldOp::Add: return a + b;
    case FieldOp::Sub: return a - b;
    case FieldOp::Mul: return a * b;
    case FieldOp::Div: return a / b;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown field operation");
}

FieldElement field_pow(const FieldElement& a, std::int64_t k) { return a.pow(k); }

bool is_root_of_unity_up_to(const FieldElement& a, std::int64_t k) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroBase, "root-of-unity test on zero");
  Rational value;
  if (a.field() == Field::Q) {
    value = a.as_rational();
  } else {
    const auto& f = a.as_rational_function();
    if (!f.is_constant()) return false;
    value = f.constant_value();
  }
  // The only rational roots of unity are 1 (order 1) and -1 (order 2).
  if (value.is_one()) return k >= 1;
  if (value == Rational(-1)) return k >= 2;
  return false;
}

Rational ratfun_eval_at(const RationalFunction& r, const Rational& v) { return r.eval_at(v); }

FieldElement substitute_q(const FieldElement& x, const Rational& v) {
  if (x.field() == Field::Q) return x;
  return x.as_rational_function().eval_at(v);
}

}  // namespace poincare

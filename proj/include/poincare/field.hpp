#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "poincare/rational.hpp"
#include "poincare/rational_function.hpp"

namespace poincare {

enum class Field { Q, Qq };

/// "Q" or "Q(q)", the tags used in the JSON encodings.
std::string_view to_string(Field field);
Field parse_field(std::string_view tag);

/// A coefficient drawn from either Q or Q(q). The field is fixed by the
/// alternative held; binary operations on elements of different fields throw
/// FieldMismatch instead of promoting.
class FieldElement {
public:
  FieldElement() = default;
  FieldElement(Rational value) : value_(std::move(value)) {}          // NOLINT
  FieldElement(RationalFunction value) : value_(std::move(value)) {}  // NOLINT

  static FieldElement zero(Field field) { return from_rational(field, Rational(0)); }
  static FieldElement one(Field field) { return from_rational(field, Rational(1)); }
  static FieldElement from_rational(Field field, const Rational& value);
  /// The indeterminate q of Q(q).
  static FieldElement indeterminate() { return RationalFunction::indeterminate(); }

  /// Q elements use the strict "a" / "a/b" syntax; Q(q) elements accept any
  /// arithmetic expression in q.
  static FieldElement parse(Field field, std::string_view text);

  Field field() const { return value_.index() == 0 ? Field::Q : Field::Qq; }
  bool is_zero() const;
  bool is_one() const;

  const Rational& as_rational() const;
  const RationalFunction& as_rational_function() const;

  /// A rational constant in this element's field.
  FieldElement lift(const Rational& value) const { return from_rational(field(), value); }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator/=(const FieldElement& other);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) = default;

  FieldElement pow(std::int64_t k) const;

  std::string to_string() const;

private:
  std::variant<Rational, RationalFunction> value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// Throws FieldMismatch unless both fields agree.
void require_same_field(Field a, Field b, std::string_view context);

enum class FieldOp { Add, Sub, Mul, Div };

FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op);
FieldElement field_pow(const FieldElement& a, std::int64_t k);

/// True iff a^m = 1 for some 1 <= m <= k. A non-constant element of Q(q) is
/// never a root of unity. Throws ZeroBase for a = 0.
bool is_root_of_unity_up_to(const FieldElement& a, std::int64_t k);

Rational ratfun_eval_at(const RationalFunction& r, const Rational& v);

/// Maps an element of Q(q) to Q by substituting q = v; Q elements pass through.
FieldElement substitute_q(const FieldElement& x, const Rational& v);

}  // namespace poincare

#include "poincare/rational_function.hpp"

#include <algorithm>
#include <cctype>

#include "poincare/error.hpp"

namespace poincare {

// ---------------------------------------------------------------------------
// QPolynomial

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial::QPolynomial(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

QPolynomial QPolynomial::indeterminate() { return QPolynomial({Rational(0), Rational(1)}); }

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational QPolynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& QPolynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero");
  return coeffs_.back();
}

QPolynomial QPolynomial::operator-() const { return scaled(Rational(-1)); }

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return QPolynomial(std::move(out));
}

QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) { return a + (-b); }

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[i + k] += a.coeffs_[i] * b.coeffs_[k];
  }
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::scaled(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  for (auto& x : out) x *= c;
  return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::monic() const {
  if (is_zero()) return {};
  return scaled(leading().inverse());
}

std::pair<QPolynomial, QPolynomial> QPolynomial::divmod(const QPolynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (degree() < divisor.degree()) return {QPolynomial(), *this};
  std::vector<Rational> rem = coeffs_;
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - divisor.degree() + 1));
  const Rational inv_lead = divisor.leading().inverse();
  const auto dsize = divisor.coeffs_.size();
  for (auto i = static_cast<std::ptrdiff_t>(quot.size()) - 1; i >= 0; --i) {
    const auto top = static_cast<std::size_t>(i) + dsize - 1;
    const Rational c = rem[top] * inv_lead;
    quot[static_cast<std::size_t>(i)] = c;
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < dsize; ++k) rem[static_cast<std::size_t>(i) + k] -= c * divisor.coeffs_[k];
  }
  return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

Rational QPolynomial::eval(const Rational& v) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

std::string QPolynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    if (k == 0) {
      out += mag.to_string();
      continue;
    }
    if (!mag.is_one()) out += mag.to_string() + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

QPolynomial gcd(QPolynomial a, QPolynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(const Rational& constant)
    : num_(constant), den_(Rational(1)) {}

RationalFunction::RationalFunction(QPolynomial poly) : num_(std::move(poly)), den_(Rational(1)) {}

RationalFunction::RationalFunction(QPolynomial num, QPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  normalize();
}

RationalFunction RationalFunction::indeterminate() { return {QPolynomial::indeterminate()}; }

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = QPolynomial(Rational(1));
    return;
  }
  const QPolynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  const Rational lead = den_.leading();
  if (!lead.is_one()) {
    const Rational inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) {
    throw Error(ErrorCode::InvalidArgument, "'" + to_string() + "' is not a constant");
  }
  return num_.coeff(0) / den_.coeff(0);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return {den_, num_};
}

RationalFunction RationalFunction::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  RationalFunction result(Rational(1));
  RationalFunction base = *this;
  auto e = static_cast<std::uint64_t>(k);
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

Rational RationalFunction::eval_at(const Rational& v) const {
  const Rational d = den_.eval(v);
  if (d.is_zero()) {
    throw Error(ErrorCode::PoleAtEvaluationPoint,
                "'" + to_string() + "' has a pole at q = " + v.to_string());
  }
  return num_.eval(v) / d;
}

std::string RationalFunction::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  auto single_term = [](const QPolynomial& p) {
    int terms = 0;
    for (const auto& c : p.coeffs()) terms += c.is_zero() ? 0 : 1;
    return terms == 1;
  };
  const bool bare_num = single_term(num_) && num_.leading().is_integer() && num_.leading().sign() > 0;
  std::string out = bare_num ? num_.to_string() : "(" + num_.to_string() + ")";
  out += '/';
  out += single_term(den_) ? den_.to_string() : "(" + den_.to_string() + ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.to_string(); }

// ---------------------------------------------------------------------------
// Expression parser for RationalFunction::parse.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ['^' ['-'] integer]
//   atom   := integer | 'q' | '(' expr ')'

namespace {

class ExprParser {
public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  RationalFunction parse_all() {
    RationalFunction value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  RationalFunction expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    RationalFunction value = term();
    if (negate) value = -value;
    for (;;) {
      if (accept('+')) {
        value = value + term();
      } else if (accept('-')) {
        value = value - term();
      } else {
        return value;
      }
    }
  }

  RationalFunction term() {
    RationalFunction value = factor();
    for (;;) {
      if (accept('*')) {
        value = value * factor();
      } else if (accept('/')) {
        value = value / factor();
      } else {
        return value;
      }
    }
  }

  RationalFunction factor() {
    RationalFunction base = atom();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    const std::string exp = digits();
    if (exp.size() > 6) fail("exponent too large");
    const std::int64_t k = std::stoll(exp);
    return base.pow(negative ? -k : k);
  }

  RationalFunction atom() {
    skip_space();
    if (accept('(')) {
      RationalFunction inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (accept('q')) return RationalFunction::indeterminate();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      return RationalFunction(Rational(mpz_class(digits(), 10), mpz_class(1)));
    }
    fail("expected number, 'q' or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction RationalFunction::parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty expression");
  return ExprParser(text).parse_all();
}

}  // namespace poincare

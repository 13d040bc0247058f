#include <gtest/gtest.h>

#include "poincare/error.hpp"
#include "poincare/qdiff.hpp"
#include "support.hpp"

namespace poincare {
namespace {

using testing::Gen;
using testing::poly_q;
using testing::series_q;

template <typename F>
ErrorCode code_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected poincare::Error";
  return ErrorCode::InternalInvariant;
}

const FieldElement two = Rational(2);

TEST(QDiffOrderTest, Examples) {
  EXPECT_EQ(qdiff_order(poly_q({2, -3, 1}), two, 3), 2);
  EXPECT_EQ(qdiff_order(poly_q({1}), two, 1), 0);
  EXPECT_EQ(qdiff_order(poly_q({-1, 1}), two, 2), 1);
}

TEST(QDiffOrderTest, Errors) {
  EXPECT_EQ(code_of([] { (void)qdiff_order(Polynomial(Field::Q), two, 4); }), ErrorCode::ZeroPolynomial);
  EXPECT_EQ(code_of([] { (void)qdiff_order(poly_q({-1, 1}), Rational(-1), 2); }), ErrorCode::RootOfUnityBase);
  EXPECT_EQ(code_of([] { (void)qdiff_order(poly_q({-1, 1}), Rational(1), 2); }), ErrorCode::RootOfUnityBase);
  EXPECT_EQ(code_of([] { (void)qdiff_order(poly_q({-1, 1}), Rational(0), 2); }), ErrorCode::ZeroBase);
  EXPECT_EQ(code_of([] { (void)qdiff_order(poly_q({2, -3, 1}), two, 2); }), ErrorCode::InvalidArgument);
}

TEST(QDiffOrderTest, JacksonOperatorIsFirstOrder) {
  // (1 - x) / (1 - q) with q = 3.
  const Polynomial jackson = poly_q({1, -1}).scaled(FieldElement(Rational(1)) / FieldElement(Rational(1 - 3)));
  EXPECT_EQ(qdiff_order(jackson, Rational(3), 2), 1);
  const Polynomial symbolic(Field::Qq, {FieldElement::one(Field::Qq), -FieldElement::one(Field::Qq)});
  const FieldElement q = FieldElement::indeterminate();
  EXPECT_EQ(QDiffOperator(symbolic.scaled(FieldElement::one(Field::Qq) / (FieldElement::one(Field::Qq) - q)), q).order(), 1);
}

TEST(QDiffApplyTest, Examples) {
  const auto f = series_q({0, 1, 1});
  EXPECT_EQ(QDiffOperator(poly_q({-1, 1}), two).apply(f), series_q({1, 3}));
  EXPECT_TRUE(qdiff_apply(QDiffOperator(poly_q({2, -3, 1}), two), PowerSeries::zero(Field::Q, 5)).is_zero());
  EXPECT_EQ(QDiffOperator(poly_q({2, -3, 1}), two).apply(f), series_q({6}));
}

TEST(QDiffApplyTest, JacksonDerivativeOfMonomials) {
  // D x^m = [m]_q x^{m-1} with [m]_q = (q^m - 1)/(q - 1).
  const Rational q(3);
  const Polynomial jackson = poly_q({Rational(1, 1 - 3), Rational(-1, 1 - 3)});
  const auto d = QDiffOperator(jackson, q).apply(series_q({0, 0, 0, 0, 1, 0}));
  EXPECT_EQ(d, series_q({0, 0, 0, (q.pow(4) - Rational(1)) / (q - Rational(1)), 0}));
}

TEST(QDiffApplyTest, PrecisionAndInvariantErrors) {
  EXPECT_EQ(code_of([] { (void)QDiffOperator(poly_q({2, -3, 1}), two).apply(series_q({0, 1})); }),
            ErrorCode::PrecisionTooLow);
  // An operator claiming order 2 for x - 1 cannot divide out x^2.
  const auto broken = QDiffOperator::with_claimed_order(poly_q({-1, 1}), two, 2);
  EXPECT_EQ(code_of([&] { (void)broken.apply(series_q({0, 1, 1})); }), ErrorCode::NotDivisibleByXn);
}

TEST(MaclaurinTest, Examples) {
  const auto f = series_q({0, 1, 1});
  EXPECT_EQ(maclaurin_coefficient(f, 2, poly_q({2, -3, 1}), two), FieldElement(Rational(1)));
  EXPECT_EQ(maclaurin_coefficient(f, 1, poly_q({-1, 1}), two), FieldElement(Rational(1)));
  const auto g = series_q({Rational(7, 3), 1, 1});
  EXPECT_EQ(maclaurin_coefficient(g, 0, poly_q({1}), two), FieldElement(Rational(7, 3)));
  EXPECT_EQ(code_of([&] { (void)maclaurin_coefficient(f, 2, poly_q({-1, 1}), two); }), ErrorCode::OrderMismatch);
}

TEST(CanonicalPolyTest, Examples) {
  EXPECT_EQ(canonical_order_poly(0, two), poly_q({1}));
  EXPECT_EQ(canonical_order_poly(2, two), poly_q({2, -3, 1}));
  EXPECT_EQ(canonical_order_poly(3, two), poly_q({-8, 14, -7, 1}));
  EXPECT_EQ(code_of([] { (void)canonical_order_poly(3, Rational(-1)); }), ErrorCode::RootOfUnityBase);
}

TEST(CanonicalPolyTest, LaurentPochhammer) {
  EXPECT_EQ(laurent_q_pochhammer(0, 2, two), LaurentPolynomial(poly_q({2, -3, 1}), 0));
  const auto l = laurent_q_pochhammer(-1, 1, two);
  EXPECT_EQ(l.low(), -1);
  EXPECT_EQ(l.coeff(-1), FieldElement(Rational(-1)));
  EXPECT_EQ(l.coeff(0), FieldElement(Rational(1)));
  const auto m = laurent_q_pochhammer(3, 0, two);
  EXPECT_EQ(m.low(), 3);
  EXPECT_EQ(m.high(), 3);
  EXPECT_EQ(m.coeff(3), FieldElement(Rational(1)));
}

// --- properties -------------------------------------------------------------

const std::vector<Rational> kBases = {Rational(2), Rational(3), Rational(-2), Rational(5, 2), Rational(1, 3)};

TEST(QDiffPropertyTest, CanonicalPolynomialHasExactOrder) {
  for (const auto& q : kBases) {
    for (int j = 0; j <= 8; ++j) {
      EXPECT_EQ(qdiff_order(canonical_order_poly(j, q), q, j + 1), j) << q << " " << j;
    }
  }
  const FieldElement sym = FieldElement::indeterminate();
  for (int j = 0; j <= 4; ++j) EXPECT_EQ(qdiff_order(canonical_order_poly(j, sym), sym, j + 1), j);
}

TEST(QDiffPropertyTest, KernelContainsLowMonomials) {
  Gen gen(11);
  for (const auto& q : kBases) {
    for (int j = 1; j <= 6; ++j) {
      const Polynomial g = canonical_order_poly(j, q) * gen.polynomial(Field::Q, gen.integer(0, 2));
      if (g.is_zero() || g.eval(FieldElement(q).pow(j)).is_zero()) continue;
      const QDiffOperator op(g, q);
      ASSERT_EQ(op.order(), j);
      for (int m = 0; m < j; ++m) {
        const auto xm = PowerSeries::from_polynomial(Polynomial::monomial(FieldElement::one(Field::Q), m), j + 3);
        EXPECT_TRUE(op.apply(xm).is_zero()) << "m=" << m << " j=" << j;
      }
    }
  }
}

TEST(QDiffPropertyTest, Linearity) {
  Gen gen(12);
  for (int trial = 0; trial < 60; ++trial) {
    const Rational q = kBases[static_cast<std::size_t>(gen.integer(0, 4))];
    const Polynomial g = gen.polynomial(Field::Q, gen.integer(0, 4));
    if (g.is_zero()) continue;
    const QDiffOperator op(g, q, g.degree() + 1);
    const int n = op.order() + gen.integer(0, 5);
    const auto f = gen.series(Field::Q, n);
    const auto h = gen.series(Field::Q, n);
    const FieldElement a = gen.rational(), b = gen.rational();
    EXPECT_EQ(op.apply(f.scaled(a) + h.scaled(b)), op.apply(f).scaled(a) + op.apply(h).scaled(b));
  }
}

TEST(QDiffPropertyTest, MaclaurinRecoversStoredCoefficients) {
  Gen gen(13);
  for (int trial = 0; trial < 120; ++trial) {
    const Rational q = kBases[static_cast<std::size_t>(gen.integer(0, 4))];
    const int j = gen.integer(0, 8);
    const auto f = gen.series(Field::Q, j + gen.integer(0, 3));
    Polynomial g = canonical_order_poly(j, q);
    if (trial % 2 == 1) {
      const Polynomial h = gen.polynomial(Field::Q, gen.integer(0, 3));
      if (h.is_zero() || h.eval(FieldElement(q).pow(j)).is_zero()) continue;
      g = g * h;
    }
    EXPECT_EQ(maclaurin_coefficient(f, j, g, q), f[j]);
    // Scaling g leaves the quotient unchanged.
    EXPECT_EQ(maclaurin_coefficient(f, j, g.scaled(gen.nonzero_rational()), q), f[j]);
  }
}

}  // namespace
}  // namespace poincare

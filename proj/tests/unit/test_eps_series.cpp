#include <gtest/gtest.h>

#include "painleve/eps_series.hpp"
#include "painleve/errors.hpp"
#include "painleve/expr_io.hpp"

using namespace painleve;

namespace {

EpsSeries S(const char* text, int N) { return series_from_ratfn(parse(text), N); }

// Builds the expected series from "order: coefficient" data.
EpsSeries expected(std::initializer_list<std::pair<int, const char*>> terms, int N) {
  EpsSeries s(N);
  for (const auto& [n, c] : terms) s = s + EpsSeries::monomial(parse(c), n, N);
  return s;
}

}  // namespace

TEST(SeriesFromRatFn, Geometric) {
  EpsSeries s = S("1/(1 + eps*T)", 2);
  EXPECT_TRUE(series_equal(s, expected({{0, "1"}, {1, "-T"}, {2, "T^2"}}, 2)));
  EXPECT_EQ(s.truncation(), 2);
}

TEST(SeriesFromRatFn, Pole) {
  EpsSeries s = S("q/eps", 0);
  EXPECT_EQ(s.valuation(), -1);
  EXPECT_TRUE(series_equal(s, expected({{-1, "q"}}, 0)));
}

TEST(SeriesFromRatFn, ShiftedGeometric) {
  EXPECT_TRUE(series_equal(S("eps/(1 - A2*eps)", 3), expected({{1, "1"}, {2, "A2"}, {3, "A2^2"}}, 3)));
}

TEST(SeriesFromRatFn, PolynomialLeadingDenominator) {
  // 1/(q + eps): coefficients (-1)^k / q^(k+1).
  EpsSeries s = S("1/(q + eps)", 3);
  EXPECT_TRUE(series_equal(s, expected({{0, "1/q"}, {1, "-1/q^2"}, {2, "1/q^3"}, {3, "-1/q^4"}}, 3)));
}

TEST(SeriesArith, Basics) {
  EpsSeries a = S("1/eps", 4);
  EpsSeries b = S("eps", 4);
  EXPECT_TRUE(series_equal(a * b, EpsSeries::constant(RatFn(1), 3)));
  EpsSeries c = S("1 + eps", 4);
  EXPECT_TRUE(series_equal(c / c, EpsSeries::constant(RatFn(1), 4)));
  EXPECT_THROW(c / EpsSeries(4), DivisionByZeroSeries);
}

TEST(SeriesArith, TruncationTracking) {
  // eps^-2 * (1 + O(eps^3)) is known through order 1.
  EpsSeries x = S("1 + eps", 2);
  EpsSeries pole = EpsSeries::monomial(RatFn(1), -2, EpsSeries::kExact);
  EXPECT_EQ((pole * x).truncation(), 0);
  EXPECT_EQ((x / S("eps^2 + eps^3", 5)).truncation(), 0);
}

TEST(SeriesArith, FloorIsEnforced) {
  EpsSeries one = EpsSeries::constant(RatFn(1), 20);
  EpsSeries tiny = EpsSeries::monomial(RatFn(1), 13, 20);
  EXPECT_THROW(one / tiny, NotExpandable);
}

TEST(BinomialSeries, DirectCoefficients) {
  // (1 + 2 A0 eps^2)^(-1/2): binom(-1/2,1) = -1/2, binom(-1/2,2) = 3/8.
  EpsSeries x = S("2*A0*eps^2", 4);
  EpsSeries b = binomial_series(x, mpq_class(-1, 2), 4);
  EXPECT_TRUE(series_equal(b, expected({{0, "1"}, {2, "-A0"}, {4, "3/2*A0^2"}}, 4)));
}

TEST(BinomialSeries, ZeroArgument) {
  EXPECT_TRUE(series_equal(binomial_series(EpsSeries(6), mpq_class(1, 3), 6), EpsSeries::constant(RatFn(1), 6)));
}

TEST(BinomialSeries, SixthRoot) {
  EpsSeries b = binomial_series(S("4*A1*eps^6", 6), mpq_class(-1, 6), 6);
  EXPECT_TRUE(series_equal(b, expected({{0, "1"}, {6, "-2/3*A1"}}, 6)));
}

TEST(BinomialSeries, RejectsNonpositiveValuation) {
  EXPECT_THROW(binomial_series(S("1 + eps", 3), mpq_class(1, 2), 3), NonpositiveValuation);
}

TEST(BinomialSeries, SquareOfHalfPower) {
  // (eps (1 - 2 A2 eps^2)^(-1/2))^2 = eps^2/(1 - 2 A2 eps^2)
  EpsSeries s = S("eps", 9) * binomial_series(S("-2*A2*eps^2", 9), mpq_class(-1, 2), 9);
  EXPECT_TRUE(series_equal(s * s, S("eps^2/(1 - 2*A2*eps^2)", 10)));
}

TEST(Limit, Values) {
  EXPECT_TRUE(ratfn_equal(limit_eps0(S("Q + A2/P + eps*T", 3)), parse("Q + A2/P")));
  EXPECT_TRUE(ratfn_equal(limit_eps0(EpsSeries::constant(parse("q"), 3)), parse("q")));
  try {
    limit_eps0(S("1/eps + T", 2));
    FAIL();
  } catch (const DivergesAtZero& e) {
    EXPECT_EQ(e.order(), -1);
    EXPECT_EQ(e.coefficient(), "1");
  }
}

TEST(Compose, BranchSquare) {
  // S0(eps) for the fourth-to-second arrow, composed with itself, gives eps back.
  EpsSeries e = S("eps", 13) * binomial_series(S("-4*A0*eps^6", 13), mpq_class(-1, 6), 13);
  Substitution flip{{sym::A0, -RatFn::symbol(sym::A0)}};
  EpsSeries twice = compose(e, flip, e);
  EXPECT_TRUE(series_equal(twice, S("eps", twice.truncation())));
  EXPECT_GE(twice.truncation(), 12);
}

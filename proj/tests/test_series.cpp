#include "resline/series.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace resline;

namespace {

RationalSeries series(std::vector<long> c, int prec, int ord = 0)
{
  std::vector<Rational> q;
  for (long v : c)
    q.push_back(Rational(v));
  return rational_series(std::move(q), prec, ord);
}

RationalSeries random_series(std::mt19937_64& rng, int ord, int prec)
{
  std::vector<Rational> c;
  c.push_back(make_rational(1 + static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 3)));
  for (int e = ord + 1; e < prec; ++e)
    c.push_back(make_rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3)));
  return rational_series(std::move(c), prec, ord);
}

} // namespace

TEST(Series, ZeroSeriesHasOrdEqualPrec)
{
  const RationalSeries z(Rational(0), 5);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.ord(), 5);
  const RationalSeries leading_zeros = series({0, 0, 3}, 6);
  EXPECT_EQ(leading_zeros.ord(), 2);
  EXPECT_EQ(leading_zeros.coeff(2), Rational(3));
  EXPECT_EQ(leading_zeros.coeff(0), Rational(0));
}

TEST(Series, CoefficientBeyondPrecisionThrows)
{
  const RationalSeries f = series({1, 2}, 2);
  EXPECT_THROW(f.coeff(2), PrecisionError);
  EXPECT_THROW(rational_series({Rational(1), Rational(1)}, 1), std::invalid_argument);
}

TEST(Series, PrecisionPropagation)
{
  const RationalSeries a = series({1, 1}, 5);     // 1 + t + O(t^5)
  const RationalSeries b = series({1}, 3, 2);     // t^2 + O(t^3)
  EXPECT_EQ((a + b).prec(), 3);
  // min(pa + ob, pb + oa) = min(5 + 2, 3 + 0)
  EXPECT_EQ((a * b).prec(), 3);
  EXPECT_EQ((b * b).prec(), 5);
}

TEST(Series, TextAndJson)
{
  const RationalSeries f = rational_series({Rational(1), make_rational(-1, 2)}, 4, -1);
  EXPECT_EQ(f.str(), "t^-1*(1 - 1/2*t) + O(t^4)");
  const auto j = f.to_json();
  EXPECT_EQ(j["ord"], -1);
  EXPECT_EQ(j["prec"], 4);
  EXPECT_EQ(j["coeffs"], nlohmann::json::array({"1", "-1/2"}));
}

TEST(Compose, SquareOfShiftedVariable)
{
  // f = t^2, g = t + t^2 -> t^2 + 2t^3 + t^4
  const RationalSeries f = series({1}, 8, 2);
  const RationalSeries g = series({1, 1}, 8, 1);
  const RationalSeries h = series_compose(f, g);
  EXPECT_TRUE(h.agrees_with(series({1, 2, 1}, 9, 2)));
  EXPECT_GE(h.prec(), 8);
}

TEST(Compose, IdentityInnerSeries)
{
  std::mt19937_64 rng(2);
  const RationalSeries f = random_series(rng, -2, 10);
  const RationalSeries t = series({1}, 20, 1);
  const RationalSeries h = series_compose(f, t);
  EXPECT_EQ(h.prec(), f.prec());
  EXPECT_TRUE(h.agrees_with(f));
}

TEST(Compose, InverseOfShiftedVariable)
{
  // f = 1/t, g = t + t^2: result times g is 1
  const RationalSeries f = series({1}, 8, -1);
  const RationalSeries g = series({1, 1}, 10, 1);
  const RationalSeries h = series_compose(f, g);
  EXPECT_EQ(h.coeff(-1), Rational(1));
  EXPECT_EQ(h.coeff(0), Rational(-1));
  EXPECT_EQ(h.coeff(1), Rational(1));
  EXPECT_EQ(h.coeff(2), Rational(-1));
  const RationalSeries one = h * g;
  EXPECT_TRUE(one.agrees_with(series({1}, one.prec())));
}

TEST(Compose, Associativity)
{
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const RationalSeries f = random_series(rng, -1, 8);
    const RationalSeries g = random_series(rng, 1, 9);
    const RationalSeries h = random_series(rng, 1, 9);
    const RationalSeries lhs = series_compose(series_compose(f, g), h);
    const RationalSeries rhs = series_compose(f, series_compose(g, h));
    EXPECT_TRUE(lhs.agrees_with(rhs));
  }
}

TEST(Compose, RejectsInnerSeriesWithoutPositiveOrder)
{
  EXPECT_THROW(series_compose(series({1}, 4), series({1, 1}, 4)), std::invalid_argument);
}

TEST(Power, SquareRootOfOnePlusT)
{
  const RationalSeries f = series({1, 1}, 6);
  const RationalSeries r = series_pow_rational(f, make_rational(1, 2));
  EXPECT_EQ(r.coeff(0), Rational(1));
  EXPECT_EQ(r.coeff(1), make_rational(1, 2));
  EXPECT_EQ(r.coeff(2), make_rational(-1, 8));
  EXPECT_TRUE((r * r).agrees_with(f));
  EXPECT_TRUE(series_pow_rational(f, Rational(1)).agrees_with(f));
}

TEST(Power, RationalExponentsCompose)
{
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    auto c = random_series(rng, 0, 9);
    c = c.scaled(Rational(1) / c.leading());
    const Rational a = make_rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4));
    const Rational b = make_rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 4));
    const auto lhs = series_pow_rational(c, a) * series_pow_rational(c, b);
    EXPECT_TRUE(lhs.agrees_with(series_pow_rational(c, a + b)));
  }
}

TEST(Power, FractionalPowerNeedsUnitLeadingCoefficient)
{
  EXPECT_THROW(series_pow_rational(series({2, 1}, 4), make_rational(1, 2)), std::domain_error);
  EXPECT_THROW(series_pow_rational(series({1}, 4, 1), make_rational(1, 2)), std::domain_error);
  const auto inv = series_pow_rational(series({2, 1}, 4), Rational(-1));
  EXPECT_TRUE((inv * series({2, 1}, 4)).agrees_with(series({1}, 4)));
}

TEST(Power, SymbolicCoefficient)
{
  // (1 + c t^2)^(1/2): t^2 coefficient c/2
  const MultiPoly c = MultiPoly::variable(0, 'c');
  const MultiPoly zero('c');
  std::vector<MultiPoly> coeffs = {MultiPoly::constant(1, 'c'), zero, c};
  const TruncatedSeries<MultiPoly> f(0, coeffs, 5, zero);
  const auto r = series_pow_rational(f, make_rational(1, 2));
  EXPECT_EQ(r.coeff(2), c.scaled(make_rational(1, 2)));
  EXPECT_EQ(r.coeff(4), (c * c).scaled(make_rational(-1, 8)));
}

TEST(Residue, SimpleCases)
{
  EXPECT_EQ(residue(series({1}, 3, -1)), Rational(1));
  EXPECT_EQ(residue(series({2, 0, 5, 7}, 1, -3)), Rational(5));
  EXPECT_THROW(residue(series({1}, -1, -3)), PrecisionError);
}

TEST(Residue, LogarithmicDerivativeGivesOrder)
{
  // f = t^3 (1 + t): res(f'/f) = 3
  const RationalSeries f = series({1, 1}, 10, 3);
  const RationalSeries dlog = f.derivative() * f.reciprocal();
  EXPECT_EQ(residue(dlog), Rational(3));
}

TEST(Reciprocal, ProductIsOne)
{
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const RationalSeries f = random_series(rng, -2, 8);
    const RationalSeries prod = f * f.reciprocal();
    EXPECT_TRUE(prod.agrees_with(series({1}, prod.prec())));
    EXPECT_EQ(prod.prec(), f.relative_precision());
  }
}

TEST(CompositionalInverse, BothSides)
{
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const RationalSeries g = random_series(rng, 1, 10);
    const RationalSeries h = compositional_inverse(g);
    const RationalSeries t = series({1}, 10, 1);
    EXPECT_TRUE(series_compose(g, h).agrees_with(t));
    EXPECT_TRUE(series_compose(h, g).agrees_with(t));
  }
}

TEST(Series, FpCoefficients)
{
  PrimeField f(3);
  // (1 + t)^3 = 1 + t^3 over F_3
  const TruncatedSeries<Fp> s(0, {f.one(), f.one()}, 8, f.zero());
  const auto cube = s.pow(3);
  EXPECT_EQ(cube.coeff(1), f.zero());
  EXPECT_EQ(cube.coeff(3), f.one());
}

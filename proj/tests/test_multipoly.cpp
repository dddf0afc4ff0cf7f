#include "resline/multipoly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace resline;

namespace {

MultiPoly x(std::size_t i) { return MultiPoly::variable(i); }
MultiPoly k(long n, long d = 1) { return MultiPoly::constant(make_rational(n, d)); }

MultiPoly random_poly(std::mt19937_64& rng, int vars, int terms)
{
  MultiPoly p;
  for (int t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> e;
    for (int v = 0; v < vars; ++v)
      e.push_back(static_cast<std::uint32_t>(rng() % 3));
    p.add_term(Monomial(e), make_rational(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 3) + 1));
  }
  return p;
}

} // namespace

TEST(MultiPoly, CanonicalText)
{
  const MultiPoly p = k(1, 2) * x(0) * x(2) - k(1, 8) * x(1) * x(1);
  EXPECT_EQ(p.str(), "1/2*x0*x2 - 1/8*x1^2");
  EXPECT_EQ((x(1) - x(0)).str(), "-x0 + x1");
  EXPECT_EQ(MultiPoly().str(), "0");
  EXPECT_EQ(k(-3).str(), "-3");
  EXPECT_EQ((x(0) * x(0) * x(0) + k(2)).str(), "x0^3 + 2");
}

TEST(MultiPoly, GrlexOrderPutsHigherDegreeFirst)
{
  const MultiPoly p = x(2) + x(0) * x(1) + x(1) * x(1) + x(0) * x(0) + k(1);
  EXPECT_EQ(p.str(), "x0^2 + x0*x1 + x1^2 + x2 + 1");
}

TEST(MultiPoly, ParseRoundTrip)
{
  const std::string text = "1/2*x0*x2 - 1/8*x1^2";
  EXPECT_EQ(parse_poly(text).str(), text);
  EXPECT_EQ(parse_poly("x1^2*3 + x0 - x0"), k(3) * x(1) * x(1));
  EXPECT_EQ(parse_poly("-u2 + u1^2", 'u'), MultiPoly::variable(1, 'u') * MultiPoly::variable(1, 'u') -
                                               MultiPoly::variable(2, 'u'));
  EXPECT_THROW(parse_poly(""), std::invalid_argument);
  EXPECT_THROW(parse_poly("x0 x1"), std::invalid_argument);
  EXPECT_THROW(parse_poly("1/0*x0"), std::invalid_argument);
  EXPECT_THROW(parse_poly("y0"), std::invalid_argument);
}

TEST(MultiPoly, RingAxiomsOnRandomPolynomials)
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const MultiPoly a = random_poly(rng, 3, 4);
    const MultiPoly b = random_poly(rng, 3, 4);
    const MultiPoly c = random_poly(rng, 3, 4);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(parse_poly(a.str()), a);
  }
}

TEST(MultiPoly, DerivativeAndAntiderivative)
{
  const MultiPoly p = k(3) * x(0) * x(0) * x(1) + x(1) * x(2);
  EXPECT_EQ(p.derivative(0), k(6) * x(0) * x(1));
  EXPECT_EQ(p.derivative(1), k(3) * x(0) * x(0) + x(2));
  EXPECT_TRUE(p.derivative(5).is_zero());
  EXPECT_EQ(p.antiderivative(2).derivative(2), p);
}

TEST(MultiPoly, EvaluateAndSubstitute)
{
  const MultiPoly p = k(1, 2) * x(0) * x(2) - k(1, 8) * x(1) * x(1);
  const std::vector<Rational> pt = {Rational(2), Rational(4), Rational(3)};
  EXPECT_EQ(p.evaluate(pt), Rational(1));
  const std::vector<MultiPoly> images = {k(1), x(1) + k(1), x(2)};
  EXPECT_EQ(p.substitute(images), k(1, 2) * x(2) - k(1, 8) * (x(1) + k(1)) * (x(1) + k(1)));
}

TEST(MultiPoly, DivideByMonomial)
{
  const MultiPoly p = x(0) * x(0) * x(3) + x(0) * x(1);
  EXPECT_EQ(*p.divide_by(Monomial::variable(0)), x(0) * x(3) + x(1));
  EXPECT_FALSE(p.divide_by(Monomial::variable(0, 2)).has_value());
}

TEST(MultiPoly, JsonForm)
{
  const auto j = (k(1, 2) * x(0) * x(2)).to_json();
  EXPECT_EQ(j["vars"], "x");
  ASSERT_EQ(j["terms"].size(), 1u);
  EXPECT_EQ(j["terms"][0]["coeff"], "1/2");
  EXPECT_EQ(j["terms"][0]["exps"], nlohmann::json::array({1, 0, 1}));
}

TEST(MultiPoly, FpCoefficients)
{
  PrimeField f(5);
  const auto y = BasicPoly<Fp>::variable(0, 'x', f.one());
  const auto p = (y + BasicPoly<Fp>::constant(f.one())).pow(5);
  EXPECT_EQ(p, y.pow(5) + BasicPoly<Fp>::constant(f.one()));
}

TEST(Partitions, EnumerationMatchesCounts)
{
  for (int n = 1; n <= 12; ++n) {
    const auto all = enumerate_partitions(n);
    EXPECT_EQ(Integer(static_cast<unsigned long>(all.size())), partition_count(n));
    for (const auto& pi : all)
      EXPECT_EQ(pi.weight(), n);
  }
  // largest part > 2 among partitions of 4: {4}, {3,1}
  const auto big = enumerate_partitions(4, 2);
  ASSERT_EQ(big.size(), 2u);
  EXPECT_EQ(big[0].parts, std::vector<int>({4}));
  EXPECT_EQ(big[1].parts, std::vector<int>({3, 1}));
}

TEST(Partitions, Multiplicities)
{
  const Partition pi{{3, 1, 1}};
  EXPECT_EQ(pi.multiplicities(), std::vector<int>({2, 0, 1}));
  EXPECT_EQ(pi.length(), 3);
  EXPECT_EQ(pi.largest(), 3);
}

TEST(Multinomial, GeneralTopArgument)
{
  const std::vector<int> mult = {2, 0, 1};
  // (1/2)_3 / (2! 1!) = (3/8) / 2
  EXPECT_EQ(multinomial_general(make_rational(1, 2), mult), make_rational(3, 16));
  const std::vector<int> one = {0, 1};
  EXPECT_EQ(multinomial_general(Rational(7), one), Rational(7));
}

TEST(Determinant, SmallMatrices)
{
  PolyMatrix<Rational> m(2, 2, MultiPoly());
  m(0, 0) = x(0);
  m(0, 1) = x(1);
  m(1, 0) = x(2);
  m(1, 1) = x(3);
  EXPECT_EQ(det_poly(m), x(0) * x(3) - x(1) * x(2));

  // Vandermonde in x0, x1, x2
  PolyMatrix<Rational> v(3, 3, MultiPoly());
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      v(r, c) = x(r).pow(static_cast<unsigned>(c));
  EXPECT_EQ(det_poly(v), (x(1) - x(0)) * (x(2) - x(0)) * (x(2) - x(1)));

  PolyMatrix<Rational> bad(2, 3, MultiPoly());
  EXPECT_THROW(det_poly(bad), std::invalid_argument);
}

TEST(OneForms, PotentialOfGradient)
{
  std::mt19937_64 rng(5);
  const std::vector<std::size_t> vars = {1, 2, 3};
  for (int trial = 0; trial < 20; ++trial) {
    // potential with no monomial free of x1..x3
    MultiPoly p = random_poly(rng, 4, 5);
    MultiPoly stripped;
    for (const auto& [m, c] : p.terms())
      if (m[1] + m[2] + m[3] > 0)
        stripped.add_term(m, c);
    EXPECT_EQ(potential_of_exact_one_form(gradient(stripped, vars)), stripped);
  }
}

TEST(OneForms, RejectsNonClosedForm)
{
  PolyOneForm w;
  w.components.emplace_back(1, x(2));
  w.components.emplace_back(2, k(0) * x(1) - x(1));
  try {
    check_closed(w);
    FAIL() << "expected NotClosedError";
  } catch (const NotClosedError& e) {
    EXPECT_EQ(e.first, 1u);
    EXPECT_EQ(e.second, 2u);
  }
}

TEST(Weights, DegreeAndWeightChecks)
{
  const MultiPoly p = x(0) * x(2) + x(1) * x(1);
  EXPECT_TRUE(weighted_checks(p, 2L, 2).passed);
  EXPECT_FALSE(weighted_checks(p + x(2), 2L, 2).passed);
  EXPECT_EQ(denominator_lcm(k(1, 4) * x(0) + k(1, 6) * x(1)), Integer(12));
}

#include "resline/action.hpp"
#include "resline/pmk.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace resline;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v)
{
  std::vector<Rational> out;
  for (long x : v)
    out.emplace_back(x);
  return out;
}

std::vector<Rational> random_vector(std::mt19937_64& rng, int n)
{
  std::vector<Rational> out;
  out.push_back(make_rational(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 3)));
  for (int i = 1; i < n; ++i)
    out.push_back(make_rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4)));
  return out;
}

Rational eval(const MultiPoly& p, const std::vector<Rational>& x)
{
  return p.evaluate(std::vector<Rational>(x.begin(), x.begin() + static_cast<long>(p.variable_span())));
}

} // namespace

TEST(Automorphism, Construction)
{
  const auto g = Automorphism::make(2, ints({5, 0, 1}), 6);
  EXPECT_EQ(g.series().str(), "t^1*(1 + 5*t^2 + t^4) + O(t^6)");
  EXPECT_THROW(Automorphism::make(0, {}, 4), std::invalid_argument);
  EXPECT_THROW(Automorphism::make(1, ints({1, 1, 1}), 3), std::invalid_argument);
  EXPECT_THROW(Automorphism::from_series(2, rational_series(ints({1, 1}), 4, 1)), std::invalid_argument);
  EXPECT_THROW(Automorphism::from_series(1, rational_series(ints({2}), 4, 1)), std::invalid_argument);
  EXPECT_TRUE(Automorphism::identity(5).is_identity());
}

TEST(Automorphism, InverseComposesToIdentity)
{
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = random_automorphism(1, 8, seed, 9);
    EXPECT_TRUE(g.compose(g.inverse()).is_identity());
    EXPECT_TRUE(g.inverse().compose(g).is_identity());
  }
}

TEST(Act, OracleValues)
{
  // lambda=-2, mu=1/3, g = t + t^2 - t^3 (sympy)
  const TensorField t{Rational(-2), make_rational(1, 3), ints({1, 2, 3, 4})};
  const auto g = Automorphism::make(1, ints({1, -1}), 5);
  const TensorField img = act(g, t);
  const std::vector<Rational> want = {Rational(1), make_rational(19, 3), make_rational(113, 9),
                                      make_rational(1076, 81)};
  EXPECT_EQ(img.coeffs, want);
  EXPECT_EQ(img.lambda, t.lambda);
  EXPECT_EQ(img.mu, t.mu);
}

TEST(Act, IdentityIsTrivial)
{
  std::mt19937_64 rng(1);
  const TensorField t{make_rational(1, 2), make_rational(-5, 3), random_vector(rng, 8)};
  EXPECT_EQ(act(Automorphism::identity(9), t), t);
}

TEST(Act, RightActionOrder)
{
  std::mt19937_64 rng(12);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const TensorField t{Rational(-2), make_rational(2, 5), random_vector(rng, 9)};
    const auto g = random_automorphism(1, 9, seed, 10);
    const auto h = random_automorphism(1, 9, seed + 100, 10);
    EXPECT_EQ(act(g.compose(h), t), act(h, act(g, t)));
  }
}

TEST(Act, InvariantsAtResonantWeight)
{
  std::mt19937_64 rng(3);
  for (const Rational& lambda : {Rational(-2), make_rational(1, 2), Rational(3)})
    for (int m = 0; m <= 2; ++m)
      for (int k = 1; k <= 3; ++k) {
        const MultiPoly p = pmk_partition(PmkSpec::make(m, k, lambda));
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
          const TensorField t{lambda, lambda * (m + k + 1), random_vector(rng, 10)};
          const TensorField img = act(random_automorphism(m + 1, 10, seed, 11), t);
          EXPECT_EQ(eval(p, img.coeffs), eval(p, t.coeffs)) << m << "," << k << " lambda=" << to_string(lambda);
          for (int i = 0; i <= m; ++i)
            EXPECT_EQ(img.coeffs[static_cast<std::size_t>(i)], t.coeffs[static_cast<std::size_t>(i)]);
        }
      }
}

TEST(FractionalResidue, OracleValues)
{
  const TensorField a{make_rational(1, 2), Rational(2),
                      {Rational(2), make_rational(-1, 3), make_rational(5, 2), make_rational(1, 4)}};
  EXPECT_EQ(fractional_residue(a, 3), make_rational(-320, 27));
  for (long c : {-3L, 0L, 7L}) {
    const TensorField b{Rational(-2), Rational(-6), ints({1, 0, c})};
    EXPECT_EQ(fractional_residue(b, 2), make_rational(c, 2));
  }
  EXPECT_EQ(fractional_residue(TensorField{Rational(-2), Rational(-6), ints({1, 1, 1})}, 2), make_rational(3, 8));
}

TEST(FractionalResidue, MatchesInvariant)
{
  std::mt19937_64 rng(5);
  for (const Rational& lambda : {Rational(-2), make_rational(1, 3), Rational(-4)})
    for (int k = 1; k <= 5; ++k) {
      const MultiPoly p = pmk_partition(PmkSpec::make(0, k, lambda));
      const TensorField t{lambda, lambda * (k + 1), random_vector(rng, k + 1)};
      EXPECT_EQ(fractional_residue(t, k), eval(p, t.coeffs));
    }
}

TEST(FractionalResidue, Preconditions)
{
  EXPECT_THROW(fractional_residue(TensorField{Rational(-2), Rational(-5), ints({1, 1, 1})}, 2),
               std::invalid_argument);
  EXPECT_THROW(fractional_residue(TensorField{Rational(-2), Rational(-6), ints({0, 1, 1})}, 2), std::domain_error);
  EXPECT_THROW(fractional_residue(TensorField{Rational(-2), Rational(-6), ints({1, 1})}, 2), PrecisionError);
}

TEST(Pairing, QuadraticDifferentialAgainstVectorFields)
{
  const TensorField quad{Rational(-2), Rational(-3), ints({1, 0})};
  EXPECT_EQ(pairing(quad, TensorField{Rational(1), Rational(1), ints({1, 0})}), Rational(0));
  EXPECT_EQ(pairing(quad, TensorField{Rational(1), Rational(2), ints({1})}), Rational(1));
  EXPECT_THROW(pairing(quad, TensorField{Rational(2), Rational(1), ints({1})}), std::invalid_argument);
  EXPECT_THROW(pairing(quad, TensorField{Rational(1), Rational(4), ints({1})}), std::invalid_argument);
}

TEST(Pairing, BilinearAndInvariant)
{
  std::mt19937_64 rng(21);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Rational lambda = make_rational(static_cast<long>(seed % 5) - 2, 3);
    const Rational mu = make_rational(1, 4);
    const TensorField a{lambda, mu, random_vector(rng, 8)};
    const TensorField b{-1 - lambda, Rational(-5) - mu, random_vector(rng, 8)};
    const TensorField c{-1 - lambda, Rational(-5) - mu, random_vector(rng, 8)};
    TensorField sum = b;
    for (std::size_t i = 0; i < sum.coeffs.size(); ++i)
      sum.coeffs[i] = 2 * b.coeffs[i] - c.coeffs[i];
    EXPECT_EQ(pairing(a, sum), 2 * pairing(a, b) - pairing(a, c));

    const auto g = random_automorphism(1, 8, seed, 9);
    EXPECT_EQ(pairing(act(g, a), act(g, b)), pairing(a, b)) << seed;
  }
}

TEST(NormalForm, GenericFieldReducesToLeadingTerm)
{
  const TensorField t{Rational(1), make_rational(1, 3), ints({1, 1, 1, 1, 1, 1})};
  const NormalForm nf = normal_form(t, 0);
  EXPECT_EQ(nf.canonical.coeffs, ints({1, 0, 0, 0, 0, 0}));
  EXPECT_FALSE(nf.resonant_index.has_value());
  EXPECT_EQ(act(nf.witness, t), nf.canonical);
}

TEST(NormalForm, ResonantCoefficientSurvives)
{
  // mu = 3 lambda: x_2 cannot be cleared and carries P_02
  const TensorField t{Rational(-2), Rational(-6), ints({2, 1, 3, 1, 1})};
  const NormalForm nf = normal_form(t, 0);
  ASSERT_EQ(nf.resonant_index, 2);
  const MultiPoly p = pmk_partition(PmkSpec::make(0, 2, -2));
  EXPECT_EQ(nf.canonical.coeffs[1], Rational(0));
  EXPECT_EQ(nf.canonical.coeffs[3], Rational(0));
  EXPECT_EQ(eval(p, nf.canonical.coeffs), eval(p, t.coeffs));
  EXPECT_EQ(act(nf.witness, t), nf.canonical);
}

TEST(NormalForm, CanonicalInputHasIdentityWitness)
{
  const TensorField t{make_rational(1, 2), make_rational(1, 5), ints({3, 0, 0, 0})};
  const NormalForm nf = normal_form(t, 0);
  EXPECT_TRUE(nf.witness.is_identity());
  EXPECT_EQ(nf.canonical, t);
  EXPECT_THROW(normal_form(TensorField{Rational(1), Rational(0), ints({0, 1})}, 0), std::domain_error);
}

TEST(NormalForm, ExceptionalWeightIsFlagged)
{
  const NormalForm nf = normal_form(TensorField{Rational(0), Rational(-1), ints({1, 2, 3})}, 0);
  EXPECT_TRUE(nf.exceptional);
  EXPECT_FALSE(nf.resonant_index.has_value());
}

TEST(TensorField, Json)
{
  const TensorField t{Rational(-2), make_rational(1, 3), ints({1, -4})};
  const auto j = t.to_json();
  EXPECT_EQ(j["lambda"], "-2");
  EXPECT_EQ(j["mu"], "1/3");
  EXPECT_EQ(j["coeffs"], nlohmann::json::array({"1", "-4"}));
}

TEST(Act, ResidueOfDifferentialFormIsInvariant)
{
  // lambda = -1, mu = -3: h(t) t^-3 dt has residue x_2
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const TensorField t{Rational(-1), Rational(-3), random_vector(rng, 6)};
    const TensorField img = act(random_automorphism(1, 6, seed, 7), t);
    EXPECT_EQ(img.coeffs[2], t.coeffs[2]);
  }
}

TEST(RandomAutomorphism, DeterministicPerSeed)
{
  EXPECT_EQ(random_automorphism(2, 9, 42).series(), random_automorphism(2, 9, 42).series());
  EXPECT_NE(random_automorphism(2, 9, 42).series(), random_automorphism(2, 9, 43).series());
  EXPECT_TRUE(Automorphism::make(3, ints({0, 0, 0}), 8).is_identity());
  EXPECT_THROW(random_automorphism(2, 2, 0), std::invalid_argument);
}

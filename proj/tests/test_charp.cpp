#include "resline/charp.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace resline;

namespace {

// sum of t^e over the listed exponents (plus an optional constant) over F_p
TruncatedSeries<Fp> fp_series(long long p, std::vector<int> exps, int prec, long long constant = 0)
{
  PrimeField f(p);
  std::vector<Fp> c(static_cast<std::size_t>(prec), f.zero());
  c[0] = f(constant);
  for (int e : exps)
    c[static_cast<std::size_t>(e)] += f.one();
  return TruncatedSeries<Fp>(0, std::move(c), prec, f.zero());
}

} // namespace

TEST(PadicDigits, NegativeIntegersHaveMaximalTail)
{
  const auto d = PadicDigits::of(Integer(-1), 3, 2);
  EXPECT_EQ(d.digit(0), 2);
  EXPECT_EQ(d.digit(7), 2);
  const auto e = PadicDigits::of(Integer(11), 3, 1);
  EXPECT_EQ(e.digits, std::vector<long long>({2, 0, 1}));
  EXPECT_EQ(e.tail, 0);
  const auto n = PadicDigits::of(Integer(-4), 2, 1);
  // -4 = ...11100
  EXPECT_EQ(n.digit(0), 0);
  EXPECT_EQ(n.digit(1), 0);
  EXPECT_EQ(n.digit(2), 1);
}

TEST(Lucas, SmallCases)
{
  const auto a = lucas_multinomial(Integer(4), {2, 2}, 3);
  EXPECT_EQ(a.residue, 0);
  EXPECT_FALSE(a.nonzero);
  EXPECT_EQ(exact_multinomial(Integer(4), {2, 2}), Integer(6));
  for (std::uint64_t q = 0; q < 40; ++q)
    EXPECT_TRUE(lucas_multinomial(Integer(-1), {q}, 2).nonzero) << q;
  EXPECT_EQ(lucas_multinomial(Integer(12345), {0, 0}, 7).residue, 1);
}

TEST(Lucas, MatchesExactMultinomial)
{
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const long long p = std::vector<long long>{2, 3, 5, 7}[rng() % 4];
    const Integer k(static_cast<long>(rng() % 2000) - 1000);
    std::vector<std::uint64_t> qs;
    for (std::size_t i = 0, n = 1 + rng() % 4; i < n; ++i)
      qs.push_back(rng() % 6);
    const Integer exact = exact_multinomial(k, qs);
    Integer m = exact % Integer(static_cast<long>(p));
    if (m < 0)
      m += static_cast<long>(p);
    const auto got = lucas_multinomial(k, qs, p);
    EXPECT_EQ(Integer(static_cast<long>(got.residue)), m) << "k=" << k << " p=" << p;
    EXPECT_EQ(got.nonzero, m != 0);
  }
}

TEST(Lucas, HighDigitPeriodicity)
{
  for (long long p : {2LL, 3LL, 5LL})
    for (long k = -20; k <= 20; ++k) {
      const std::vector<std::uint64_t> qs = {3, 1};
      const Integer shift(static_cast<long>(ipow(p, 8)));
      EXPECT_EQ(lucas_multinomial(Integer(k), qs, p).residue, lucas_multinomial(Integer(k) + shift, qs, p).residue)
          << k << " p=" << p;
    }
}

TEST(CharpInvariants, Examples)
{
  const auto a = charp_invariants(fp_series(2, {2, 3}, 8), 2);
  EXPECT_EQ(a.ord0, 2);
  EXPECT_EQ(a.md, 0);
  EXPECT_EQ(a.ord_md, 3);

  const auto b = charp_invariants(fp_series(2, {4, 8}, 12), 2);
  EXPECT_EQ(b.md, 2);
  EXPECT_EQ(b.ord_md, 4);

  const auto c = charp_invariants(fp_series(3, {1}, 6, 5), 3);
  EXPECT_EQ(c.ord0, 1);
  EXPECT_EQ(c.md, 0);
  EXPECT_EQ(c.ord_md, 1);

  const auto flat = charp_invariants(fp_series(3, {}, 6, 1), 3);
  EXPECT_FALSE(flat.certified);
  EXPECT_FALSE(flat.md.has_value());
  EXPECT_THROW(charp_invariants(fp_series(3, {}, 6), 3), PrecisionError);
}

TEST(Width, Examples)
{
  EXPECT_EQ(width(fp_series(2, {2, 3}, 8), 2), 1);
  EXPECT_EQ(width(fp_series(2, {3}, 8), 2), 0);
  EXPECT_EQ(width(fp_series(2, {4, 6, 7}, 10), 2), 1);
  EXPECT_EQ(width(fp_series(3, {3, 9, 10}, 14), 3), 3);
  EXPECT_THROW(width(fp_series(2, {}, 6, 1), 2), PrecisionError);
}

TEST(Width, InvariantUnderSubstitution)
{
  for (long long p : {2LL, 3LL, 5LL}) {
    const auto h = fp_series(p, {static_cast<int>(p), static_cast<int>(p) + 1, 2 * static_cast<int>(p) + 1}, 20);
    const Report rep = width_invariance_test(h, p, 50, 7);
    EXPECT_TRUE(rep.passed()) << rep.to_text();
  }
  // Laurent input
  PrimeField f(3);
  const TruncatedSeries<Fp> laurent(-3, {f.one(), f.zero(), f(2), f.one()}, 8, f.zero());
  EXPECT_TRUE(width_invariance_test(laurent, 3, 30, 11).passed());
}

TEST(Width, RawCoefficientIsNotInvariant)
{
  // over F_2 the t^4 coefficient of h o g is g2^2 + g2 = 0; t^5 picks up g3 + g2
  EXPECT_FALSE(coefficient_moves(fp_series(2, {2, 3}, 10), 2, 4, 50, 3));
  EXPECT_TRUE(coefficient_moves(fp_series(2, {2, 3}, 10), 2, 5, 50, 3));
}

TEST(PolynomialNormalForm, ClearsTailOverFp)
{
  const auto h = fp_series(2, {2, 3, 5, 6, 7, 9, 12}, 16);
  const auto nf = polynomial_normal_form(h, 2, 1);
  EXPECT_EQ(nf.degree_bound, 5);  // d = 3, first usable step j = 2
  EXPECT_EQ(series_compose(h, nf.witness), nf.canonical);
  EXPECT_EQ(nf.canonical.prec(), 16);
  for (int e = 0; e < 5; ++e)
    EXPECT_EQ(nf.canonical.coeff(e), h.coeff(e)) << e;
  for (int e = 5; e < 16; ++e)
    EXPECT_TRUE(nf.canonical.coeff(e).is_zero()) << e;
  EXPECT_EQ(width(nf.canonical, 2), width(h, 2));
}

TEST(PolynomialNormalForm, LevelAndLaurentInputs)
{
  PrimeField f(3);
  std::mt19937_64 rng(5);
  std::vector<Fp> c{f.one(), f.zero(), f(2)};  // t^-3 + 2 t^-1
  for (int e = 0; e < 12; ++e)
    c.push_back(f(static_cast<long long>(rng() % 3)));
  const TruncatedSeries<Fp> h(-3, std::move(c), 12, f.zero());
  for (int level : {1, 3, 6}) {
    const auto nf = polynomial_normal_form(h, 3, level);
    EXPECT_EQ(series_compose(h, nf.witness), nf.canonical);
    for (int e = 2; e <= level; ++e)
      EXPECT_TRUE(nf.witness.coeff(e).is_zero()) << "level " << level << " e " << e;
    for (int e = nf.degree_bound; e < 12; ++e)
      EXPECT_TRUE(nf.canonical.coeff(e).is_zero()) << e;
  }
  EXPECT_EQ(polynomial_normal_form(h, 3, 1).degree_bound, 2);
}

TEST(PolynomialNormalForm, RationalFunctionCoefficients)
{
  const RatFunc c = RatFunc::generator(2);
  const RatFunc one = RatFunc::constant(2, 1);
  const RatFunc zero = RatFunc::constant(2, 0);
  // c t^2 + t^3 + c t^4 + t^6 + c^2 t^7 + t^10
  const TruncatedSeries<RatFunc> h(2, {c, one, c, zero, one, c.pow(2), zero, zero, one, zero}, 12, zero);
  const auto nf = polynomial_normal_form(h, 2, 1);
  EXPECT_EQ(series_compose(h, nf.witness), nf.canonical);
  for (int e = nf.degree_bound; e < 12; ++e)
    EXPECT_TRUE(nf.canonical.coeff(e).is_zero()) << e;
}

TEST(PolynomialNormalForm, RejectsSeriesInFrobeniusImage)
{
  EXPECT_THROW(polynomial_normal_form(fp_series(2, {2, 4, 8}, 12), 2, 1), std::domain_error);
  EXPECT_THROW(polynomial_normal_form(counterexample_series(2, 20), 2, 1), std::domain_error);
  EXPECT_THROW(polynomial_normal_form(fp_series(3, {1}, 6), 3, -1), std::invalid_argument);
}

TEST(Counterexample, FunctionalEquation)
{
  const auto h = counterexample_series(2, 20);
  const RatFunc c = RatFunc::generator(2);
  const RatFunc one = RatFunc::constant(2, 1);
  EXPECT_EQ(h.coeff(2), one);
  EXPECT_EQ(h.coeff(4), c);
  EXPECT_EQ(h.coeff(8), c.pow(3));
  EXPECT_EQ(h.coeff(16), c.pow(7));
  EXPECT_EQ(h.coeff(3), RatFunc::constant(2, 0));

  const auto h3 = counterexample_series(3, 30);
  EXPECT_EQ(h3.coeff(3), RatFunc::constant(3, 1));
  EXPECT_EQ(h3.coeff(9), RatFunc::generator(3));
  EXPECT_EQ(h3.coeff(27), RatFunc::generator(3).pow(4));

  EXPECT_NO_THROW(counterexample_series(5, 125));
  EXPECT_THROW(counterexample_series(3, 8), std::invalid_argument);
}

TEST(Restricted, TruncatedBracketsKillGenerators)
{
  for (auto [m, n, p] : {std::tuple{0, 4, 7LL}, std::tuple{0, 6, 11LL}, std::tuple{1, 4, 11LL}}) {
    const Report rep = restricted_invariance_check(m, n, p);
    EXPECT_TRUE(rep.passed()) << rep.to_text();
  }
  EXPECT_THROW(restricted_invariance_check(0, 4, 2), std::invalid_argument);
  EXPECT_THROW(restricted_invariance_check(0, 6, 7), std::invalid_argument);
}

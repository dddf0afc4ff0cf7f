#ifndef RESLINE_CHARP_HPP
#define RESLINE_CHARP_HPP

// Positive characteristic: the invariants ord_0, md, ord_md and the width of
// a Laurent series over F_p, polynomial normal forms outside f((t^p)),
// Lucas-type multinomial congruences, the imperfect-field series without
// polynomial normal form, and the restricted Lie-algebra check.

#include "resline/multipoly.hpp"
#include "resline/pmk.hpp"
#include "resline/report.hpp"
#include "resline/scalars.hpp"
#include "resline/series.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace resline {

/// Base-p digits of a p-adic integer with an eventually constant tail
/// (tail p-1 for negative integers).
struct PadicDigits {
  long long base = 2;
  std::vector<long long> digits;  // least significant first
  long long tail = 0;

  static PadicDigits of(const Integer& k, long long p, std::size_t min_digits)
  {
    if (p < 2)
      throw std::invalid_argument("PadicDigits: base must be >= 2");
    PadicDigits d{p, {}, k < 0 ? p - 1 : 0};
    Integer rest = k;
    const Integer pp(static_cast<long>(p));
    // floor division keeps the digits in [0, p) for negative k
    while (d.digits.size() < min_digits || rest != (k < 0 ? Integer(-1) : Integer(0))) {
      Integer q;
      Integer r;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), pp.get_mpz_t());
      d.digits.push_back(r.get_si());
      rest = q;
    }
    return d;
  }

  long long digit(std::size_t i) const { return i < digits.size() ? digits[i] : tail; }
};

struct LucasResult {
  long long residue;
  bool nonzero;
};

/// binom(k; q_1, q_2, ...) mod p via the digit-wise product; k may be negative.
inline LucasResult lucas_multinomial(const Integer& k, const std::vector<std::uint64_t>& qs, long long p)
{
  PrimeField field(p);
  std::size_t width = 1;
  for (auto q : qs) {
    std::size_t w = 0;
    for (auto v = q; v != 0; v /= static_cast<std::uint64_t>(p))
      ++w;
    width = std::max(width, w);
  }
  const PadicDigits kd = PadicDigits::of(k, p, width);
  Fp product = field.one();
  bool nonzero = true;
  const std::size_t n = std::max(width, kd.digits.size());
  std::vector<std::uint64_t> rest(qs);
  for (std::size_t i = 0; i < n; ++i) {
    const long long top = kd.digit(i);
    long long sum = 0;
    Fp term = field.one();
    for (auto& q : rest) {
      const long long qi = static_cast<long long>(q % static_cast<std::uint64_t>(p));
      q /= static_cast<std::uint64_t>(p);
      sum += qi;
      term = term / field(static_cast<long long>(factorial(qi).get_ui() % static_cast<unsigned long>(p)));
    }
    if (sum > top) {
      nonzero = false;
      product = field.zero();
      break;
    }
    // top! / (prod q_i! (top - sum)!) with all arguments < p
    term = term * field(static_cast<long long>(factorial(top).get_ui() % static_cast<unsigned long>(p))) /
           field(static_cast<long long>(factorial(top - sum).get_ui() % static_cast<unsigned long>(p)));
    product *= term;
  }
  return {product.value(), nonzero};
}

/// Exact generalized multinomial k (k-1) ... (k-q+1) / prod q_i!, q = sum q_i.
inline Integer exact_multinomial(const Integer& k, const std::vector<std::uint64_t>& qs)
{
  std::uint64_t q = 0;
  Integer denom = 1;
  for (auto v : qs) {
    q += v;
    denom *= factorial(static_cast<long>(v));
  }
  Integer num = 1;
  for (std::uint64_t i = 0; i < q; ++i)
    num *= k - Integer(static_cast<unsigned long>(i));
  if (num % denom != 0)
    throw std::logic_error("exact_multinomial: non-integral result");
  return num / denom;
}

// ---------------------------------------------------------------------------
// invariants of h in f((t))

/// nullopt stands for infinity.
struct CharpInvariants {
  std::optional<int> ord0;
  std::optional<int> md;
  std::optional<int> ord_md;
  bool certified = true;  // false when h is constant to the known precision
};

template <class C>
CharpInvariants charp_invariants(const TruncatedSeries<C>& h, long long p)
{
  if (h.is_zero())
    throw PrecisionError("charp_invariants: series vanishes to precision");
  CharpInvariants inv;
  std::vector<int> support;
  for (int e = h.ord(); e < h.prec(); ++e)
    if (e != 0 && !field_traits<C>::is_zero(h.coeff(e)))
      support.push_back(e);
  if (support.empty()) {
    inv.certified = false;
    return inv;
  }
  inv.ord0 = support.front();
  int md = INT_MAX;
  for (int e : support)
    md = std::min(md, padic_valuation(e, p));
  inv.md = md;
  for (int e : support)
    if (padic_valuation(e, p) == md) {
      inv.ord_md = e;
      break;
    }
  return inv;
}

/// Width: max floor((ord_md - m) / (p^{v(m)} - p^{v(ord_md)})) over nonzero
/// m < ord_md with x_m != 0, when ord_md > ord_0; otherwise 0.
template <class C>
int width(const TruncatedSeries<C>& h, long long p)
{
  const CharpInvariants inv = charp_invariants(h, p);
  if (!inv.certified || !inv.ord_md)
    throw PrecisionError("width: md is not certified within the precision window");
  const int top = *inv.ord_md;
  if (top <= *inv.ord0)
    return 0;
  const long long top_scale = ipow(p, padic_valuation(top, p));
  std::optional<long long> best;
  for (int m = h.ord(); m < top; ++m) {
    if (m == 0 || field_traits<C>::is_zero(h.coeff(m)))
      continue;
    const long long den = ipow(p, padic_valuation(m, p)) - top_scale;
    if (den <= 0)
      throw std::logic_error("width: non-positive denominator at m = " + std::to_string(m));
    const long long num = top - m;
    const long long q = num / den;  // both positive: floor
    best = best ? std::max(*best, q) : q;
  }
  if (!best)
    throw std::logic_error("width: empty candidate set with ord_md > ord_0");
  return static_cast<int>(*best);
}

/// g(t) = c t + sum_{i>=2} g_i t^i over F_p with c in F_p^* (c = 1 when
/// scalings are disabled) and g_i in {-3..3} reduced mod p.
inline TruncatedSeries<Fp> random_fp_substitution(long long p, int prec, std::mt19937_64& rng, bool scaling)
{
  PrimeField f(p);
  std::vector<Fp> c;
  c.push_back(scaling ? f(1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(p - 1))) : f.one());
  for (int i = 2; i < prec; ++i)
    c.push_back(f(static_cast<long long>(rng() % 7) - 3));
  return TruncatedSeries<Fp>(1, std::move(c), prec, f.zero());
}

/// Applies seeded random substitutions h -> h o g and checks that ord_0, md,
/// ord_md and the width do not move.
inline Report width_invariance_test(const TruncatedSeries<Fp>& h, long long p, int trials, std::uint64_t seed,
                                    bool scaling = true)
{
  Report rep("width invariance p=" + std::to_string(p));
  const CharpInvariants base = charp_invariants(h, p);
  const int base_width = width(h, p);
  std::mt19937_64 rng(seed);
  const int gprec = h.prec() - std::min(h.ord(), 0) + 2;
  int failures = 0;
  std::string first;
  for (int trial = 0; trial < trials; ++trial) {
    const auto g = random_fp_substitution(p, gprec, rng, scaling);
    const auto moved = series_compose(h, g);
    const CharpInvariants inv = charp_invariants(moved, p);
    const bool same = inv.ord0 == base.ord0 && inv.md == base.md && inv.ord_md == base.ord_md &&
                      width(moved, p) == base_width;
    if (!same) {
      ++failures;
      if (first.empty())
        first = "trial " + std::to_string(trial) + ": h o g = " + moved.str();
    }
  }
  rep.add("ord0/md/ord_md/width stable over " + std::to_string(trials) + " substitutions", failures == 0, first);
  return rep;
}

/// Whether the raw coefficient x_index changes under some seeded substitution
/// (a probe showing the invariance test can see non-invariants).
inline bool coefficient_moves(const TruncatedSeries<Fp>& h, long long p, int index, int trials, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  const int gprec = h.prec() - std::min(h.ord(), 0) + 2;
  for (int trial = 0; trial < trials; ++trial) {
    const auto moved = series_compose(h, random_fp_substitution(p, gprec, rng, true));
    if (index < moved.prec() && !(moved.coeff(index) == h.coeff(index)))
      return true;
  }
  return false;
}

/// h o witness = canonical, with every coefficient from t^degree_bound up to
/// the precision equal to zero.
template <class C>
struct PolynomialNormalForm {
  TruncatedSeries<C> canonical;
  TruncatedSeries<C> witness;
  int degree_bound;
};

/// Polynomial normal form of h outside f((t^p)) under substitutions
/// t -> t + O(t^{level+1}).  With d = ord_md (md = 0), the step
/// g = t + a t^{j+1} moves x_{d+j} by d x_d a and, once j > d - ord(h), leaves
/// every lower coefficient alone: exponents below d are multiples of p, so
/// their first change lands at e + j p^s > d + j.  Coefficients are then
/// cleared one at a time, each by a linear solve.
template <class C>
PolynomialNormalForm<C> polynomial_normal_form(const TruncatedSeries<C>& h, long long p, int level)
{
  using traits = field_traits<C>;
  if (level < 0)
    throw std::invalid_argument("polynomial_normal_form: level must be >= 0");
  const CharpInvariants inv = charp_invariants(h, p);
  if (!inv.certified || !inv.md || *inv.md != 0)
    throw std::domain_error("polynomial_normal_form: h lies in f((t^p)) to the known precision");
  const int d = *inv.ord_md;
  const C x_d = h.coeff(d);
  const C one = traits::one(x_d);
  const int j0 = std::max({level, 1, d - h.ord() + 1});
  const int gprec = h.prec() - std::min(h.ord(), 0) + 2;
  const C slope_inv = traits::inverse(traits::from_rational(x_d, Rational(d)) * x_d);

  PolynomialNormalForm<C> out{h, TruncatedSeries<C>::monomial(one, 1, gprec), d + j0};
  for (int n = d + j0; n < h.prec(); ++n) {
    const C x = out.canonical.coeff(n);
    if (traits::is_zero(x))
      continue;
    const int j = n - d;
    const C a = traits::zero(x) - x * slope_inv;
    const auto g = TruncatedSeries<C>::monomial(one, 1, gprec) + TruncatedSeries<C>::monomial(a, j + 1, gprec);
    out.canonical = series_compose(out.canonical, g);
    out.witness = series_compose(out.witness, g);
    if (out.canonical.prec() < h.prec() || !traits::is_zero(out.canonical.coeff(n)))
      throw std::logic_error("polynomial_normal_form: step at t^" + std::to_string(n) + " failed");
  }
  out.canonical = out.canonical.truncated(h.prec());
  return out;
}

// ---------------------------------------------------------------------------

/// h = sum_{i>=1} c^{e_i} t^{p^i} with e_1 = 0, e_{i+1} = 1 + p e_i over F_p(c);
/// checks h - c h^p = t^p to O(t^N) before returning.
inline TruncatedSeries<RatFunc> counterexample_series(long long p, int precision)
{
  PrimeField field(p);
  if (precision < p * p)
    throw std::invalid_argument("counterexample_series: need N >= p^2");
  const RatFunc zero = RatFunc::constant(p, 0);
  const RatFunc c = RatFunc::generator(p);
  std::vector<RatFunc> coeffs(static_cast<std::size_t>(precision), zero);
  long long exponent = p;
  std::uint64_t c_power = 0;
  while (exponent < precision) {
    coeffs[static_cast<std::size_t>(exponent)] = c.pow(c_power);
    c_power = 1 + static_cast<std::uint64_t>(p) * c_power;
    exponent *= p;
  }
  TruncatedSeries<RatFunc> h(0, std::move(coeffs), precision, zero);

  TruncatedSeries<RatFunc> hp = TruncatedSeries<RatFunc>::monomial(RatFunc::constant(p, 1), 0, precision);
  for (long long i = 0; i < p; ++i)
    hp = (hp * h).truncated(precision);
  const auto lhs = h - hp.scaled(c);
  const auto rhs = TruncatedSeries<RatFunc>::monomial(RatFunc::constant(p, 1), static_cast<int>(p), precision);
  if (!(lhs - rhs).is_zero() || lhs.prec() < precision)
    throw std::logic_error("counterexample_series: h - c h^p != t^p");
  return h;
}

/// Restricted case: P_{mk} reduced mod p and l_n..l_{n-m} must be killed by
/// L_{m+1,n+1} with brackets truncated at i+j >= n+1 and at i+j >= p-1.
inline Report restricted_invariance_check(int m, int n, long long p)
{
  if (p == 2)
    throw std::invalid_argument("restricted_invariance_check: p must be odd");
  PrimeField field(p);
  if (m < 0 || n < 2 * m + 2 || n > p - 2)
    throw std::invalid_argument("restricted_invariance_check: need 2m+2 <= n <= p-2");
  std::vector<std::pair<std::string, BasicPoly<Fp>>> gens;
  for (const auto& [name, g] : center_generators(m, n))
    gens.emplace_back(name + " mod " + std::to_string(p),
                      g.map_coefficients([&](const Rational& q) { return field.from_rational(q); }, field.one()));
  const auto t = LieTruncation::make(m + 1, n + 1, p);
  return annihilation_report(t, gens,
                             "restricted center of U(" + std::to_string(m + 1) + "," + std::to_string(n + 1) +
                                 ") over F_" + std::to_string(p));
}

} // namespace resline

#endif // RESLINE_CHARP_HPP

#ifndef RESLINE_PMK_HPP
#define RESLINE_PMK_HPP

// The invariant polynomials P_{mk}^{(-1/lambda)}: three independent
// constructions (generating function, partition sum, determinant), the
// gradient formula, the PDE system of the matrix A, and the Lie-algebra
// action used to certify central elements.

#include "resline/multipoly.hpp"
#include "resline/report.hpp"
#include "resline/scalars.hpp"
#include "resline/series.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace resline {

struct PmkSpec {
  int m = 0;
  int k = 1;
  Rational lambda = -2;

  static PmkSpec make(int m, int k, const Rational& lambda)
  {
    if (m < 0)
      throw std::invalid_argument("m must be nonnegative");
    if (k < 1)
      throw std::invalid_argument("k must be positive");
    if (lambda == 0)
      throw std::invalid_argument("lambda must be nonzero");
    return PmkSpec{m, k, lambda};
  }

  /// The exponent -1/lambda.
  Rational alpha() const { return Rational(-1) / lambda; }

  /// n when -1/lambda is a positive integer n.
  std::optional<int> resonance() const
  {
    const Rational a = alpha();
    if (is_integer(a) && a > 0)
      return static_cast<int>(a.get_num().get_si());
    return std::nullopt;
  }

  std::string str() const
  {
    return "m=" + std::to_string(m) + " k=" + std::to_string(k) + " lambda=" + to_string(lambda);
  }
};

inline MultiPoly xvar(std::size_t i) { return MultiPoly::variable(i, 'x'); }

namespace detail {

inline void require_nonzero_lambda(const PmkSpec& s)
{
  if (s.lambda == 0)
    throw std::invalid_argument("lambda must be nonzero");
}

/// 1 + sum_{i=1}^{top} x_i x_0^{i-1} z^i as a z-series of precision prec.
inline TruncatedSeries<MultiPoly> generating_base(int top, int prec)
{
  const MultiPoly zero('x');
  std::vector<MultiPoly> c;
  c.push_back(MultiPoly::constant(1));
  for (int i = 1; i < prec; ++i) {
    if (i <= top)
      c.push_back(MultiPoly::term(1, Monomial::variable(0, static_cast<std::uint32_t>(i - 1)) *
                                         Monomial::variable(static_cast<std::size_t>(i))));
    else
      c.push_back(zero);
  }
  return TruncatedSeries<MultiPoly>(0, std::move(c), prec, zero);
}

} // namespace detail

/// Coefficient of z^{m+k} in ((S)^alpha - (S_m)^alpha) / x_0^m with
/// S = sum_i x_i x_0^{i-1} z^i, S_m its truncation at i <= m, alpha = -1/lambda.
inline MultiPoly pmk_generating(const PmkSpec& s)
{
  detail::require_nonzero_lambda(s);
  const int top = s.m + s.k;
  const int prec = top + 1;
  const auto full = series_pow_rational(detail::generating_base(top, prec), s.alpha());
  const auto head = series_pow_rational(detail::generating_base(s.m, prec), s.alpha());
  const MultiPoly coeff = (full - head).coeff(top);
  auto quotient = coeff.divide_by(Monomial::variable(0, static_cast<std::uint32_t>(s.m)));
  if (!quotient)
    throw std::logic_error("pmk_generating: coefficient not divisible by x0^" + std::to_string(s.m));
  return *quotient;
}

/// Sum over partitions pi of m+k with largest part > m of
/// multinomial(-1/lambda; p_1, p_2, ...) x_0^{k - l(pi)} prod x_i^{p_i}.
inline MultiPoly pmk_partition(const PmkSpec& s)
{
  detail::require_nonzero_lambda(s);
  const Rational alpha = s.alpha();
  MultiPoly result('x');
  for (const auto& pi : enumerate_partitions(s.m + s.k, s.m)) {
    const auto mult = pi.multiplicities();
    const Rational c = multinomial_general(alpha, mult);
    if (c == 0)
      continue;
    std::vector<std::uint32_t> e(mult.size() + 1, 0);
    e[0] = static_cast<std::uint32_t>(s.k - pi.length());
    for (std::size_t i = 0; i < mult.size(); ++i)
      e[i + 1] = static_cast<std::uint32_t>(mult[i]);
    result.add_term(Monomial(std::move(e)), c);
  }
  return result;
}

/// The (k-1) x k matrix A: row r (1-based), column c >= r holds
/// ((k-r) lambda + (c-r)) x_{c-r}.
inline PolyMatrix<Rational> pmk_matrix(const PmkSpec& s)
{
  const int k = s.k;
  PolyMatrix<Rational> a(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(k), MultiPoly('x'));
  for (int r = 1; r < k; ++r)
    for (int c = r; c <= k; ++c) {
      const Rational factor = Rational(k - r) * s.lambda + (c - r);
      a(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)) =
          MultiPoly::term(factor, Monomial::variable(static_cast<std::size_t>(c - r)));
    }
  return a;
}

/// 1 / ((k-1)! (-lambda)^k)
inline Rational pmk_prefactor(const PmkSpec& s)
{
  return Rational(1) / (Rational(factorial(s.k - 1)) * pow(Rational(-s.lambda), s.k));
}

/// Determinant route: det(x over A) for m >= k-1, det(x' over A) for m = 0,
/// otherwise the potential of the one-form det(dx over A).
inline MultiPoly pmk_determinant(const PmkSpec& s)
{
  detail::require_nonzero_lambda(s);
  const PolyMatrix<Rational> a = pmk_matrix(s);
  const int k = s.k;
  std::vector<MultiPoly> row;
  if (s.m >= k - 1) {
    for (int i = 1; i <= k; ++i)
      row.push_back(xvar(static_cast<std::size_t>(s.m + i)));
    return det_poly(a.with_first_row(row)) * pmk_prefactor(s);
  }
  if (s.m == 0) {
    for (int i = 1; i <= k; ++i)
      row.push_back(xvar(static_cast<std::size_t>(i)) * Rational(i));
    return det_poly(a.with_first_row(row)) * (pmk_prefactor(s) / k);
  }
  PolyOneForm w;
  for (int i = 1; i <= k; ++i) {
    MultiPoly cof = det_poly(a.without(std::nullopt, static_cast<std::size_t>(i - 1)));
    if (i % 2 == 0)
      cof = -cof;
    w.components.emplace_back(static_cast<std::size_t>(s.m + i), std::move(cof));
  }
  return potential_of_exact_one_form(w) * pmk_prefactor(s);
}

/// dP/dx_{m+i} = (-1)^{i+1} det A_i (scaled like pmk_determinant), 1 <= i <= k.
inline MultiPoly pmk_gradient(const PmkSpec& s, int i)
{
  detail::require_nonzero_lambda(s);
  if (i < 1 || i > s.k)
    throw std::out_of_range("pmk_gradient: index " + std::to_string(i) + " outside [1, k]");
  MultiPoly cof = det_poly(pmk_matrix(s).without(std::nullopt, static_cast<std::size_t>(i - 1)));
  if (i % 2 == 0)
    cof = -cof;
  return cof * pmk_prefactor(s);
}

/// For every row a_j of A: sum_i a_{ji} dP/dx_{m+i}.
inline std::vector<MultiPoly> pde_residual(const MultiPoly& p, const PmkSpec& s)
{
  const PolyMatrix<Rational> a = pmk_matrix(s);
  std::vector<MultiPoly> out;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    MultiPoly acc('x');
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (!a(r, c).is_zero())
        acc += a(r, c) * p.derivative(static_cast<std::size_t>(s.m) + c + 1);
    out.push_back(std::move(acc));
  }
  return out;
}

/// P^{(n)}_{mk} / x_0^{k-n} at the resonance -1/lambda = n < k.
inline MultiPoly resonant_divisibility(int m, int k, int n)
{
  if (n < 1 || n >= k)
    throw std::invalid_argument("resonant_divisibility: need 1 <= n < k");
  const MultiPoly p = pmk_partition(PmkSpec::make(m, k, Rational(-1, n)));
  auto q = p.divide_by(Monomial::variable(0, static_cast<std::uint32_t>(k - n)));
  if (!q)
    throw std::logic_error("resonant_divisibility: x0^" + std::to_string(k - n) +
                           " does not divide P for m=" + std::to_string(m) + " k=" + std::to_string(k));
  return *q;
}

// ---------------------------------------------------------------------------
// Lie algebras L_{lo,hi}: basis l_lo .. l_{hi-1}, [l_i, l_j] = (j-i) l_{i+j},
// zero once i+j >= hi (and, restricted, once i+j >= p-1).

struct LieTruncation {
  int lo = 0;
  int hi = 1;
  std::optional<long long> restricted_p;

  static LieTruncation make(int lo, int hi, std::optional<long long> p = std::nullopt)
  {
    // with l_{-1} present, l_{>=hi} is no ideal and the quotient breaks Jacobi
    if (lo < 0)
      throw std::invalid_argument("LieTruncation: lower index must be nonnegative");
    if (hi <= lo)
      throw std::invalid_argument("LieTruncation: need hi > lo");
    return LieTruncation{lo, hi, p};
  }

  bool contains(int i) const { return lo <= i && i < hi; }

  /// (coefficient, index) of [l_i, l_j], or nullopt when it vanishes.
  std::optional<std::pair<int, int>> bracket(int i, int j) const
  {
    const int s = i + j;
    if (i == j || s >= hi || (restricted_p && s >= *restricted_p - 1))
      return std::nullopt;
    if (restricted_p && (j - i) % *restricted_p == 0)
      return std::nullopt;
    return std::make_pair(j - i, s);
  }
};

/// Antisymmetry and the Jacobi identity for every triple of basis indices.
inline bool structure_constants_consistent(const LieTruncation& t)
{
  auto br = [&](int i, int j) {
    std::vector<long long> v(static_cast<std::size_t>(t.hi - t.lo), 0);
    if (auto b = t.bracket(i, j))
      v[static_cast<std::size_t>(b->second - t.lo)] = b->first;
    return v;
  };
  // [x, sum_k v_k l_k] by linearity
  auto br_vec = [&](int i, const std::vector<long long>& v) {
    std::vector<long long> out(v.size(), 0);
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] == 0)
        continue;
      const auto w = br(i, t.lo + static_cast<int>(k));
      for (std::size_t q = 0; q < out.size(); ++q)
        out[q] += v[k] * w[q];
    }
    return out;
  };
  for (int i = t.lo; i < t.hi; ++i)
    for (int j = t.lo; j < t.hi; ++j) {
      auto a = br(i, j);
      auto b = br(j, i);
      for (std::size_t q = 0; q < a.size(); ++q)
        if (a[q] + b[q] != 0)
          return false;
      for (int k = t.lo; k < t.hi; ++k) {
        auto x = br_vec(i, br(j, k));
        auto y = br_vec(j, br(k, i));
        auto z = br_vec(k, br(i, j));
        for (std::size_t q = 0; q < x.size(); ++q) {
          long long sum = x[q] + y[q] + z[q];
          if (t.restricted_p)
            sum %= *t.restricted_p;
          if (sum != 0)
            return false;
        }
      }
    }
  return true;
}

/// T(l_i) P = sum_j [l_i, l_j] dP/dl_j for P in the variables l_lo .. l_{hi-1}
/// (variable index = Lie index).
template <class C>
BasicPoly<C> lie_action(const LieTruncation& t, int i, const BasicPoly<C>& p)
{
  if (!t.contains(i))
    throw std::out_of_range("lie_action: l_" + std::to_string(i) + " not in the truncation");
  const auto span = static_cast<int>(p.variable_span());
  for (int j = 0; j < span && j < t.lo; ++j)
    for (const auto& [m, c] : p.terms())
      if (m[static_cast<std::size_t>(j)] != 0)
        throw std::out_of_range("lie_action: polynomial uses l_" + std::to_string(j));
  if (span > t.hi)
    throw std::out_of_range("lie_action: polynomial uses l_" + std::to_string(span - 1));
  BasicPoly<C> result(p.alphabet(), p.unit());
  for (int j = std::max(t.lo, 0); j < span; ++j) {
    const auto b = t.bracket(i, j);
    if (!b)
      continue;
    const BasicPoly<C> d = p.derivative(static_cast<std::size_t>(j));
    if (d.is_zero())
      continue;
    const BasicPoly<C> lb = BasicPoly<C>::variable(static_cast<std::size_t>(b->second), p.alphabet(), p.unit())
                                .scaled(Rational(b->first));
    result += lb * d;
  }
  return result;
}

/// x_i -> l_{n-i}
template <class C>
BasicPoly<C> to_lie_variables(const BasicPoly<C>& p, int n)
{
  return p.relabel([n](std::size_t i) { return static_cast<std::size_t>(n - static_cast<int>(i)); }, 'l');
}

/// The central generators of U_{m+1,n+1} for n >= 2m+2: l_n .. l_{n-m}, and
/// for even n also P_{mk}(l_n, ..., l_{n/2}) with k = n/2 - m.
inline std::vector<std::pair<std::string, MultiPoly>> center_generators(int m, int n)
{
  if (m < 0 || n < 2 * m + 2)
    throw std::invalid_argument("center generators need n >= 2m+2");
  std::vector<std::pair<std::string, MultiPoly>> gens;
  for (int i = n; i >= n - m; --i)
    gens.emplace_back("l" + std::to_string(i), MultiPoly::variable(static_cast<std::size_t>(i), 'l'));
  if (n % 2 == 0) {
    const int k = n / 2 - m;
    const MultiPoly p = pmk_partition(PmkSpec::make(m, k, -2));
    gens.emplace_back("P" + std::to_string(m) + std::to_string(k), to_lie_variables(p, n));
  }
  return gens;
}

template <class C>
Report annihilation_report(const LieTruncation& t,
                           const std::vector<std::pair<std::string, BasicPoly<C>>>& gens,
                           std::string title)
{
  Report rep(std::move(title));
  for (const auto& [name, g] : gens) {
    std::string witness;
    for (int i = t.lo; i < t.hi && witness.empty(); ++i) {
      const auto r = lie_action(t, i, g);
      if (!r.is_zero())
        witness = "T(l" + std::to_string(i) + ") = " + r.str();
    }
    rep.add(name + " annihilated", witness.empty(), witness);
  }
  return rep;
}

/// Checks that every generator of the (claimed) center of U_{m+1,n+1} is
/// killed by all of L_{m+1,n+1}.  Membership only.
inline Report center_invariants_check(int m, int n)
{
  const auto gens = center_generators(m, n);
  const auto t = LieTruncation::make(m + 1, n + 1);
  return annihilation_report(t, gens,
                             "center of U(" + std::to_string(m + 1) + "," + std::to_string(n + 1) + ")");
}

// ---------------------------------------------------------------------------
// closed forms

/// Number of monomials P_{mk} is claimed to have, when a closed form exists
/// (m = 0 or m >= k-1).  At resonance -1/lambda = n < k only partitions of
/// length <= n survive.
inline std::optional<Integer> expected_term_count(const PmkSpec& s)
{
  const auto n = s.resonance();
  const bool resonant = n && *n < s.k;
  if (s.m == 0)
    return resonant ? partition_count(s.k, *n) : partition_count(s.k);
  if (s.m >= s.k - 1) {
    // largest part > m plus a partition of the remainder r < k; at resonance
    // the remainder may use at most n-1 parts.
    Integer total = 0;
    for (int r = 0; r < s.k; ++r)
      total += resonant ? partition_count(r, *n - 1) : partition_count(r);
    return total;
  }
  return std::nullopt;
}

/// Closed-form value at x = (1, ..., 1), when one is known.
inline std::optional<Rational> expected_all_ones(const PmkSpec& s)
{
  const Rational inv = Rational(1) / s.lambda;
  const Rational sign = (s.k % 2 == 0) ? 1 : -1;
  if (s.m == 0)
    return sign * rat_binomial(inv, s.k);
  if (s.m >= s.k - 1)
    return sign / s.lambda * rat_binomial(inv, s.k - 1);
  return std::nullopt;
}

/// Closed-form denominator LCM (lambda = -2 only).
inline std::optional<Integer> expected_denominator_lcm(const PmkSpec& s)
{
  if (s.lambda != -2)
    return std::nullopt;
  const auto k = static_cast<std::uint64_t>(s.k);
  if (s.m == 0)
    return Integer(1) << static_cast<unsigned>(2 * s.k - binary_digit_sum(k));
  const int s_prev = s.k > 1 ? binary_digit_sum(k - 1) : 0;
  return Integer(1) << static_cast<unsigned>(2 * s.k - s_prev - 1);
}

inline Report pmk_properties(const PmkSpec& s)
{
  const MultiPoly p = pmk_partition(s);
  Report rep("properties " + s.str());

  const auto wc = weighted_checks(p, s.k, s.m + s.k);
  rep.add("homogeneous of degree k, weight m+k", wc.passed,
          wc.passed ? "" : "first failing monomial: " + detail::monomial_text(wc.failing.front(), 'x'));

  if (auto expected = expected_all_ones(s)) {
    std::vector<Rational> ones(static_cast<std::size_t>(s.m + s.k + 1), Rational(1));
    const Rational value = p.evaluate(ones);
    rep.add("value at all-ones", value == *expected, "got " + to_string(value) + ", expected " + to_string(*expected));
    if (s.lambda == -2) {
      const Rational dfact = s.m == 0
                                 ? Rational(Rational(double_factorial(2 * s.k - 1)) / Rational(double_factorial(2 * s.k)))
                                 : Rational(Rational(double_factorial(2 * s.k - 3)) /
                                            (Rational(double_factorial(2 * s.k - 2)) * 2));
      rep.add("value at all-ones (double factorial form)", value == dfact,
              "got " + to_string(value) + ", expected " + to_string(dfact));
    }
  }
  if (auto expected = expected_denominator_lcm(s)) {
    const Integer l = denominator_lcm(p);
    rep.add("denominator lcm", l == *expected, "got " + to_string(l) + ", expected " + to_string(*expected));
  }
  if (auto expected = expected_term_count(s)) {
    const Integer count = static_cast<unsigned long>(p.term_count());
    rep.add("term count", count == *expected, "got " + to_string(count) + ", expected " + to_string(*expected));
  }
  return rep;
}

} // namespace resline

#endif // RESLINE_PMK_HPP

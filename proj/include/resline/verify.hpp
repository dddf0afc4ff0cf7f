#ifndef RESLINE_VERIFY_HPP
#define RESLINE_VERIFY_HPP

// Self-verification suites.  Each suite sweeps a parameter range and folds
// its cases into a few named checks; `resline verify` and the acceptance
// binary both run these.

#include "resline/action.hpp"
#include "resline/charp.hpp"
#include "resline/golden.hpp"
#include "resline/multipoly.hpp"
#include "resline/pmk.hpp"
#include "resline/qft.hpp"
#include "resline/report.hpp"
#include "resline/scalars.hpp"
#include "resline/series.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace resline::verify {

/// Counts cases and keeps the first failure as the witness.
class Tally {
 public:
  template <class Detail>
  void record(bool ok, Detail&& detail)
  {
    ++cases_;
    if (!ok && failed_++ == 0)
      first_ = detail();
  }
  void record(bool ok) { record(ok, [] { return std::string(); }); }

  int cases() const { return cases_; }
  bool passed() const { return failed_ == 0 && cases_ > 0; }

  void into(Report& rep, const std::string& name) const
  {
    std::string detail = std::to_string(cases_) + " cases";
    if (failed_ > 0)
      detail += ", " + std::to_string(failed_) + " failed; first: " + first_;
    rep.add(name, passed(), detail);
  }

 private:
  int cases_ = 0;
  int failed_ = 0;
  std::string first_;
};

inline const std::vector<Rational>& sweep_lambdas()
{
  static const std::vector<Rational> v = {Rational(-2),    Rational(-1, 2), Rational(1, 2), Rational(3),
                                          Rational(-1, 3), Rational(5),     Rational(-1)};
  return v;
}

/// num in [-5, 5], den in [1, 4]
inline Rational random_rational(std::mt19937_64& rng)
{
  return make_rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
}

inline Rational random_nonzero_rational(std::mt19937_64& rng)
{
  for (;;) {
    Rational q = random_rational(rng);
    if (q != 0)
      return q;
  }
}

/// x_0 != 0, other coefficients from random_rational.
inline std::vector<Rational> random_coefficients(std::mt19937_64& rng, int n)
{
  std::vector<Rational> c;
  c.push_back(random_nonzero_rational(rng));
  for (int i = 1; i < n; ++i)
    c.push_back(random_rational(rng));
  return c;
}

inline Rational evaluate_prefix(const MultiPoly& p, const std::vector<Rational>& x)
{
  return p.evaluate(std::span<const Rational>(x.data(), std::min(x.size(), p.variable_span())));
}

inline double seconds_since(std::chrono::steady_clock::time_point start)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

inline void add_runtime_check(Report& rep, std::chrono::steady_clock::time_point start, double budget)
{
  const double s = seconds_since(start);
  // the measured time only appears on failure so passing output is reproducible
  rep.add("runtime under " + std::to_string(static_cast<int>(budget)) + " s", s < budget,
          s < budget ? "" : std::to_string(s) + " s");
}

// ---------------------------------------------------------------------------

/// Generating, partition and determinant routes agree.
inline Report cross_construction()
{
  const auto start = std::chrono::steady_clock::now();
  Report rep("cross-construction");
  Tally gen_part;
  Tally det_part;
  for (const Rational& lambda : sweep_lambdas())
    for (int m = 0; m <= 4; ++m)
      for (int k = 1; k <= 6; ++k) {
        const PmkSpec s = PmkSpec::make(m, k, lambda);
        const MultiPoly p = pmk_partition(s);
        const MultiPoly g = pmk_generating(s);
        const MultiPoly d = pmk_determinant(s);
        gen_part.record(g == p, [&] { return s.str() + ": generating " + g.str() + " vs partition " + p.str(); });
        det_part.record(d == p, [&] { return s.str() + ": determinant " + d.str() + " vs partition " + p.str(); });
      }
  gen_part.into(rep, "generating equals partition (m<=4, k<=6)");
  det_part.into(rep, "determinant equals partition (m<=4, k<=6)");
  add_runtime_check(rep, start, 60);
  return rep;
}

/// Published displays against the implementation, at sample lambdas and as
/// polynomials in 1/lambda.
inline Report golden()
{
  Report rep("golden");
  Tally half;
  for (int k = 1; k <= 4; ++k)
    for (int m = 0; m <= 8; ++m) {
      const MultiPoly want = *golden::half_display(m, k);
      const MultiPoly got = pmk_partition(PmkSpec::make(m, k, -2));
      half.record(got == want, [&] {
        return "m=" + std::to_string(m) + " k=" + std::to_string(k) + ": got " + got.str() + ", display " + want.str();
      });
    }
  half.into(rep, "lambda=-2 displays, k<=4, m<=8");

  Tally sampled;
  for (const Rational& lambda : {Rational(1), Rational(1, 2), Rational(-3)})
    for (int k = 1; k <= 4; ++k)
      for (int m = 0; m <= 8; ++m) {
        const MultiPoly want = *golden::lambda_display(m, k, lambda);
        const MultiPoly got = pmk_partition(PmkSpec::make(m, k, lambda));
        sampled.record(got == want, [&] {
          return PmkSpec{m, k, lambda}.str() + ": got " + got.str() + ", display " + want.str();
        });
      }
  sampled.into(rep, "general-lambda displays at lambda in {1, 1/2, -3}");

  // Coefficients are polynomials of degree <= k in nu = 1/lambda; k+1 nodes
  // pin them down, one extra node confirms the degree bound.
  Tally symbolic;
  const std::vector<Rational> nodes = {Rational(1),  Rational(2),    Rational(-1, 3), Rational(1, 5),
                                       Rational(-4), Rational(7, 2), Rational(-2, 9)};
  for (int k = 1; k <= 4; ++k)
    for (int m = 0; m <= 6; ++m) {
      std::vector<Rational> nu(nodes.begin(), nodes.begin() + k + 2);
      std::vector<MultiPoly> got, want;
      for (const Rational& v : nu) {
        got.push_back(pmk_partition(PmkSpec::make(m, k, 1 / v)));
        want.push_back(*golden::lambda_display(m, k, 1 / v));
      }
      std::vector<Monomial> support;
      for (const auto& p : got)
        for (const auto& [mono, c] : p.terms())
          support.push_back(mono);
      for (const auto& p : want)
        for (const auto& [mono, c] : p.terms())
          support.push_back(mono);
      bool ok = true;
      std::string why;
      for (const Monomial& mono : support) {
        auto coeffs = [&](const std::vector<MultiPoly>& ps, std::size_t count) {
          std::vector<Rational> y;
          for (std::size_t i = 0; i < count; ++i)
            y.push_back(ps[i].coefficient(mono));
          return interpolate_coefficients(std::span<const Rational>(nu.data(), count), y);
        };
        const auto a = coeffs(got, static_cast<std::size_t>(k + 1));
        const auto b = coeffs(want, static_cast<std::size_t>(k + 1));
        const auto a_extra = coeffs(got, static_cast<std::size_t>(k + 2));
        if (a != b || a_extra.back() != 0) {
          ok = false;
          why = "m=" + std::to_string(m) + " k=" + std::to_string(k) + " monomial " + detail::monomial_text(mono, 'x');
          break;
        }
      }
      symbolic.record(ok, [&] { return why; });
    }
  symbolic.into(rep, "general-lambda displays as polynomials in 1/lambda, m<=6");
  return rep;
}

/// Closed forms for term count, all-ones value and denominator lcm, k <= 10.
inline Report closed_forms()
{
  Report rep("closed-forms");
  Tally count, ones, lcm, weight;
  for (int k = 1; k <= 10; ++k) {
    std::vector<Rational> lambdas = {Rational(-2), Rational(1, 2), Rational(3), Rational(-1, 3), Rational(5)};
    for (int n = 1; n < k; ++n)
      lambdas.push_back(Rational(-1, n));
    std::vector<int> ms = {0, k - 1, k, k + 2};
    if (k == 1)
      ms = {0, 1, 3};
    for (const Rational& lambda : lambdas)
      for (int m : ms) {
        const PmkSpec s = PmkSpec::make(m, k, lambda);
        const Report r = pmk_properties(s);
        for (const auto& c : r.checks()) {
          auto detail = [&] { return s.str() + ": " + c.detail; };
          if (c.name == "term count")
            count.record(c.passed, detail);
          else if (c.name.rfind("value at all-ones", 0) == 0)
            ones.record(c.passed, detail);
          else if (c.name == "denominator lcm")
            lcm.record(c.passed, detail);
          else
            weight.record(c.passed, detail);
        }
      }
  }
  count.into(rep, "term count (m=0 and m>=k-1, generic and resonant lambda)");
  ones.into(rep, "value at all-ones");
  lcm.into(rep, "denominator lcm at lambda=-2");
  weight.into(rep, "homogeneous of degree k and weight m+k");
  return rep;
}

/// PDE system, gradient formula and Lie-algebra annihilation.
inline Report invariance()
{
  Report rep("invariance");
  Tally pde, grad;
  for (const Rational& lambda : sweep_lambdas())
    for (int m = 0; m <= 4; ++m)
      for (int k = 1; k <= 6; ++k) {
        const PmkSpec s = PmkSpec::make(m, k, lambda);
        const MultiPoly p = pmk_partition(s);
        bool zero = true;
        for (const auto& r : pde_residual(p, s))
          zero = zero && r.is_zero();
        pde.record(zero, [&] { return s.str(); });
        for (int i = 1; i <= k; ++i) {
          const MultiPoly want = p.derivative(static_cast<std::size_t>(m + i));
          const MultiPoly got = pmk_gradient(s, i);
          grad.record(got == want, [&] {
            return s.str() + " i=" + std::to_string(i) + ": " + got.str() + " vs " + want.str();
          });
        }
      }
  pde.into(rep, "A grad P = 0 (m<=4, k<=6)");
  grad.into(rep, "dP/dx_{m+i} equals signed minor");

  Tally lie;
  for (int n = 2; n <= 12; ++n)
    for (int m = 0; 2 * m + 2 <= n; ++m) {
      const Report r = center_invariants_check(m, n);
      lie.record(r.passed(), [&] {
        const auto* f = r.first_failure();
        return r.title() + ": " + f->name + " " + f->detail;
      });
    }
  lie.into(rep, "center generators annihilated by L(m+1,n+1), n<=12");

  // P_{02} in l_4, l_3, l_2 is killed by L(1,5) only after the
  // truncation of brackets at index 5.
  const auto t = LieTruncation::make(1, 5);
  const MultiPoly quadratic = to_lie_variables(pmk_partition(PmkSpec::make(0, 2, -2)), 4);
  Tally c;
  for (int i = 1; i < 5; ++i) {
    const MultiPoly r = lie_action(t, i, quadratic);
    c.record(r.is_zero(), [&] { return "T(l" + std::to_string(i) + ") = " + r.str(); });
  }
  c.into(rep, "l4*l2/2 - l3^2/8 annihilated by L(1,5)");
  const auto untruncated = LieTruncation::make(1, 9);
  rep.add("same element not annihilated without truncation", !lie_action(untruncated, 1, quadratic).is_zero());

  Tally jacobi;
  for (int lo = 1; lo <= 3; ++lo)
    for (int hi = lo + 1; hi <= 13; ++hi)
      jacobi.record(structure_constants_consistent(LieTruncation::make(lo, hi)),
                    [&] { return std::to_string(lo) + "," + std::to_string(hi); });
  jacobi.into(rep, "truncated brackets satisfy antisymmetry and Jacobi");
  return rep;
}

/// G_{m+1} fixes x_0..x_m and fixes P_{mk} exactly at resonance.
inline Report group_action()
{
  Report rep("group-action");
  constexpr int kPrec = kDefaultRelativePrecision;
  const Rational off_resonance(1, 7);
  Tally low, fixed, moved_any, witness, composition;
  for (const Rational& lambda : {Rational(-2), Rational(1, 2)})
    for (int m = 0; m <= 3; ++m) {
      std::vector<MultiPoly> ps;
      for (int k = 1; k <= 4; ++k)
        ps.push_back(pmk_partition(PmkSpec::make(m, k, lambda)));
      std::vector<bool> moved(4, false);
      std::vector<bool> coeff_moved(kPrec, false);
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        std::mt19937_64 rng(seed * 1000003 + static_cast<std::uint64_t>(m));
        const auto x = random_coefficients(rng, kPrec);
        const Automorphism g = random_automorphism(m + 1, kPrec, seed, kPrec + 1);

        const TensorField generic{lambda, off_resonance, x};
        const TensorField image = act(g, generic);
        bool same_low = true;
        for (int i = 0; i <= m; ++i)
          same_low = same_low && image.coeffs[static_cast<std::size_t>(i)] == x[static_cast<std::size_t>(i)];
        low.record(same_low, [&] { return "m=" + std::to_string(m) + " seed=" + std::to_string(seed); });
        for (int j = m + 1; j < kPrec; ++j)
          if (image.coeffs[static_cast<std::size_t>(j)] != x[static_cast<std::size_t>(j)])
            coeff_moved[static_cast<std::size_t>(j)] = true;
        for (int k = 1; k <= 4; ++k)
          if (evaluate_prefix(ps[k - 1], image.coeffs) != evaluate_prefix(ps[k - 1], x))
            moved[k - 1] = true;

        for (int k = 1; k <= 4; ++k) {
          const TensorField res{lambda, lambda * (m + k + 1), x};
          const TensorField res_image = act(g, res);
          const Rational before = evaluate_prefix(ps[k - 1], x);
          const Rational after = evaluate_prefix(ps[k - 1], res_image.coeffs);
          fixed.record(before == after, [&] {
            return PmkSpec{m, k, lambda}.str() + " seed=" + std::to_string(seed) + ": " + to_string(before) +
                   " -> " + to_string(after);
          });
        }
      }
      for (int j = m + 1; j < kPrec; ++j)
        witness.record(coeff_moved[static_cast<std::size_t>(j)], [&] {
          return "lambda=" + to_string(lambda) + " m=" + std::to_string(m) + ": x_" + std::to_string(j) + " never moved";
        });
      for (int k = 1; k <= 4; ++k)
        moved_any.record(moved[k - 1], [&] { return PmkSpec{m, k, lambda}.str() + " never moved at mu=1/7"; });
    }
  low.into(rep, "x_0..x_m fixed by G_{m+1} (100 seeds, precision 24)");
  fixed.into(rep, "P_{mk} fixed at mu=(m+k+1)lambda (m<=3, k<=4)");
  moved_any.into(rep, "P_{mk} moved by some g at non-resonant mu");
  witness.into(rep, "every x_j, j > m, moved by some g at non-resonant mu");

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng(seed + 77);
    const TensorField t{Rational(1, 2), Rational(-3, 2), random_coefficients(rng, 12)};
    const Automorphism g = random_automorphism(1, 12, seed, 13);
    const Automorphism h = random_automorphism(2, 12, seed + 500, 13);
    const TensorField lhs = act(g.compose(h), t);
    const TensorField rhs = act(h, act(g, t));
    composition.record(lhs == rhs, [&] { return "seed=" + std::to_string(seed); });
  }
  composition.into(rep, "act(g o h, T) = act(h, act(g, T))");

  Tally divisible;
  for (int m = 0; m <= 3; ++m)
    for (int k = 2; k <= 5; ++k)
      for (int n = 1; n < k; ++n) {
        bool ok = true;
        std::string why;
        try {
          const MultiPoly q = resonant_divisibility(m, k, n);
          ok = !q.is_zero();
          why = "zero quotient";
        } catch (const std::logic_error& e) {
          ok = false;
          why = e.what();
        }
        divisible.record(ok, [&] { return why; });
      }
  divisible.into(rep, "x0^{k-n} divides P_{mk} at lambda=-1/n, n<k<=5");
  return rep;
}

/// Fractional residue equals P_{0k}.
inline Report fractional_residue_suite()
{
  Report rep("fractional-residue");
  Tally agree;
  std::mt19937_64 rng(20240611);
  for (const Rational& lambda : {Rational(-2), Rational(1, 2), Rational(3), Rational(-1, 3)})
    for (int k = 1; k <= 6; ++k) {
      const MultiPoly p = pmk_partition(PmkSpec::make(0, k, lambda));
      for (int trial = 0; trial < 50; ++trial) {
        const TensorField t{lambda, lambda * (k + 1), random_coefficients(rng, k + 1)};
        const Rational res = fractional_residue(t, k);
        const Rational want = evaluate_prefix(p, t.coeffs);
        agree.record(res == want, [&] {
          return "lambda=" + to_string(lambda) + " k=" + std::to_string(k) + ": " + to_string(res) + " vs " +
                 to_string(want);
        });
      }
    }
  agree.into(rep, "fractional residue equals P_{0k}(x), 50 vectors per k<=6");
  return rep;
}

/// Normal forms: shape, witness, idempotence, invariants.
inline Report normal_form_suite()
{
  Report rep("normal-form");
  struct Case {
    Rational lambda;
    Rational mu;
    int m;
  };
  const std::vector<Case> cases = {
      {Rational(1), Rational(1, 3), 0},      {Rational(-2), Rational(1, 7), 1}, {Rational(1, 2), Rational(-5, 3), 2},
      {Rational(-2), Rational(-6), 0},       {Rational(1, 2), Rational(2), 1},  {Rational(3), Rational(6), 0},
      {Rational(-1, 3), Rational(-4, 3), 1},
  };
  Tally shape, witness, idempotent, low, invariant;
  constexpr int kPrec = 10;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Case& c = cases[seed % cases.size()];
    std::mt19937_64 rng(seed * 31 + 7);
    const TensorField t{c.lambda, c.mu, random_coefficients(rng, kPrec)};
    const NormalForm nf = normal_form(t, c.m);
    const std::string tag = "seed=" + std::to_string(seed);

    bool ok = true;
    for (int j = c.m + 1; j < kPrec; ++j)
      if (nf.canonical.coeffs[static_cast<std::size_t>(j)] != 0 && nf.resonant_index != j)
        ok = false;
    shape.record(ok, [&] { return tag; });

    witness.record(act(nf.witness, t) == nf.canonical, [&] { return tag; });

    const NormalForm again = normal_form(nf.canonical, c.m);
    idempotent.record(again.canonical == nf.canonical && again.witness.is_identity(), [&] { return tag; });

    bool same = true;
    for (int i = 0; i <= c.m; ++i)
      same = same && nf.canonical.coeffs[static_cast<std::size_t>(i)] == t.coeffs[static_cast<std::size_t>(i)];
    low.record(same, [&] { return tag; });

    if (nf.resonant_index) {
      const int k = *nf.resonant_index - c.m;
      const MultiPoly p = pmk_partition(PmkSpec::make(c.m, k, c.lambda));
      invariant.record(evaluate_prefix(p, t.coeffs) == evaluate_prefix(p, nf.canonical.coeffs),
                       [&] { return tag; });
    }
  }
  shape.into(rep, "only x_0..x_m and the resonant coefficient survive");
  witness.into(rep, "witness maps the input to the normal form");
  idempotent.into(rep, "normal form of a normal form is itself");
  low.into(rep, "x_0..x_m preserved");
  invariant.into(rep, "resonant P_{mk} preserved");
  return rep;
}

/// lambda = -2 against an independent square-root extraction.
inline Report lambda_minus_two()
{
  Report rep("lambda-minus-two");
  // y^2 = S with y_0 = 1: y_n = (S_n - sum_{0<i<n} y_i y_{n-i}) / 2
  auto sqrt_coeffs = [](int top, int n) {
    std::vector<MultiPoly> y = {MultiPoly::constant(1)};
    for (int j = 1; j <= n; ++j) {
      MultiPoly acc('x');
      if (j <= top)
        acc = MultiPoly::term(1, Monomial::variable(0, static_cast<std::uint32_t>(j - 1)) *
                                     Monomial::variable(static_cast<std::size_t>(j)));
      for (int i = 1; i < j; ++i)
        acc -= y[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j - i)];
      y.push_back(acc * Rational(1, 2));
    }
    return y;
  };
  Tally agree;
  for (int m = 0; m <= 4; ++m)
    for (int k = 1; k <= 6; ++k) {
      const int n = m + k;
      const MultiPoly diff = sqrt_coeffs(n, n)[static_cast<std::size_t>(n)] - sqrt_coeffs(m, n)[static_cast<std::size_t>(n)];
      const auto q = diff.divide_by(Monomial::variable(0, static_cast<std::uint32_t>(m)));
      const MultiPoly p = pmk_partition(PmkSpec::make(m, k, -2));
      agree.record(q && *q == p, [&] {
        return "m=" + std::to_string(m) + " k=" + std::to_string(k) + ": " + (q ? q->str() : "not divisible") +
               " vs " + p.str();
      });
    }
  agree.into(rep, "P_{mk}^{(1/2)} equals square-root extraction (m<=4, k<=6)");
  return rep;
}

/// Corpus of Laurent series over F_p with nontrivial md/width structure.
inline std::vector<TruncatedSeries<Fp>> charp_corpus(long long p, int count, std::uint64_t seed)
{
  PrimeField f(p);
  std::mt19937_64 rng(seed);
  std::vector<TruncatedSeries<Fp>> out;
  while (static_cast<int>(out.size()) < count) {
    const int md = static_cast<int>(rng() % 2);
    const long long step_md = ipow(p, md);
    const long long step_hi = step_md * p;
    // ord_md = u p^md with p not dividing u; earlier terms have higher valuation
    long long u = 1 + static_cast<long long>(rng() % 6);
    if (u % p == 0)
      ++u;
    const bool laurent = rng() % 3 == 0;
    const long long top = (laurent && rng() % 2 == 0 ? -1 : 1) * u * step_md;
    const long long lowest = laurent ? -2 * step_hi : step_hi;
    std::vector<std::pair<long long, long long>> terms;
    for (long long e = lowest; e < top; e += step_hi)
      if (e != 0 && rng() % 2 == 0)
        terms.emplace_back(e, 1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(p - 1)));
    terms.emplace_back(top, 1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(p - 1)));
    const int prec = static_cast<int>(top) + 14;
    for (long long e = top + 1; e < prec; ++e)
      if (rng() % 3 == 0)
        terms.emplace_back(e, static_cast<long long>(rng() % static_cast<std::uint64_t>(p)));
    const int ord = static_cast<int>(std::min(terms.front().first, top));
    std::vector<Fp> c(static_cast<std::size_t>(prec - ord), f.zero());
    for (const auto& [e, v] : terms)
      c[static_cast<std::size_t>(e - ord)] = f(v);
    TruncatedSeries<Fp> h(ord, std::move(c), prec, f.zero());
    const auto inv = charp_invariants(h, p);
    if (inv.certified && inv.ord_md)
      out.push_back(std::move(h));
  }
  return out;
}

inline Report charp()
{
  Report rep("charp");
  Tally invariant, scaled_only, probe;
  for (const long long p : {2LL, 3LL, 5LL}) {
    const auto corpus = charp_corpus(p, 10, static_cast<std::uint64_t>(p) * 101);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto r = width_invariance_test(corpus[i], p, 100, 9000 + i, true);
      invariant.record(r.passed(), [&] { return "p=" + std::to_string(p) + " series " + corpus[i].str() + ": " +
                                                r.first_failure()->detail; });
      const auto r0 = width_invariance_test(corpus[i], p, 20, 4000 + i, false);
      scaled_only.record(r0.passed(), [&] { return "p=" + std::to_string(p) + " " + r0.first_failure()->detail; });
    }
    // the test must be able to see a change: raw coefficients do move
    const auto& h = corpus.front();
    bool any = false;
    for (int e = h.ord(); e < h.prec() && !any; ++e)
      any = coefficient_moves(h, p, e, 20, 17);
    probe.record(any, [&] { return "p=" + std::to_string(p) + " no coefficient moved"; });
  }
  invariant.into(rep, "ord0, md, ord_md, width invariant under 100 substitutions (30 series, p in {2,3,5})");

  Tally normal;
  for (const long long p : {2LL, 3LL, 5LL})
    for (const auto& h : charp_corpus(p, 10, static_cast<std::uint64_t>(p) * 101)) {
      if (*charp_invariants(h, p).md != 0)
        continue;
      const auto nf = polynomial_normal_form(h, p, 1);
      bool ok = series_compose(h, nf.witness) == nf.canonical;
      for (int e = nf.degree_bound; e < nf.canonical.prec(); ++e)
        ok = ok && nf.canonical.coeff(e).is_zero();
      normal.record(ok, [&] { return "p=" + std::to_string(p) + " " + h.str() + " -> " + nf.canonical.str(); });
    }
  normal.into(rep, "series outside f((t^p)) reach a Laurent polynomial by elimination");
  scaled_only.into(rep, "same invariants under substitutions tangent to identity");
  probe.into(rep, "raw coefficients are not invariant");

  Tally lucas, lucas_negative;
  std::mt19937_64 rng(1729);
  const long long primes[] = {2, 3, 5, 7};
  for (int trial = 0; trial < 1200; ++trial) {
    const long long p = primes[rng() % 4];
    const bool negative = trial >= 1000;
    const Integer k = negative ? Integer(-1 - static_cast<long>(rng() % 1000)) : Integer(static_cast<unsigned long>(rng() % 1000001));
    std::vector<std::uint64_t> qs;
    const int parts = 1 + static_cast<int>(rng() % 3);
    if (trial % 2 == 0) {
      for (int j = 0; j < parts; ++j)
        qs.push_back(rng() % 120);
    } else {
      // split the low three base-p digits of k among the parts: no carries,
      // so the residue is nonzero
      qs.assign(static_cast<std::size_t>(parts), 0);
      const PadicDigits d = PadicDigits::of(k, p, 3);
      std::uint64_t scale = 1;
      for (std::size_t i = 0; i < 3; ++i, scale *= static_cast<std::uint64_t>(p)) {
        long long left = d.digit(i);
        for (auto& q : qs) {
          const long long take = static_cast<long long>(rng() % static_cast<std::uint64_t>(left + 1));
          q += static_cast<std::uint64_t>(take) * scale;
          left -= take;
        }
      }
    }
    const LucasResult got = lucas_multinomial(k, qs, p);
    Integer exact = exact_multinomial(k, qs) % Integer(static_cast<long>(p));
    if (exact < 0)
      exact += static_cast<long>(p);
    const bool ok = got.residue == exact.get_si() && got.nonzero == (exact != 0);
    (negative ? lucas_negative : lucas).record(ok, [&] {
      std::string q;
      for (auto v : qs)
        q += " " + std::to_string(v);
      return "k=" + to_string(k) + " q=" + q + " p=" + std::to_string(p) + ": lucas " +
             std::to_string(got.residue) + ", exact " + to_string(exact);
    });
  }
  lucas.into(rep, "Lucas multinomial matches exact value mod p (1000 cases, 0<=k<=10^6)");
  lucas_negative.into(rep, "Lucas multinomial for negative k");

  for (const long long p : {2LL, 3LL}) {
    const int n = static_cast<int>(ipow(p, 4));
    bool ok = true;
    std::string why;
    try {
      counterexample_series(p, n);
    } catch (const std::exception& e) {
      ok = false;
      why = e.what();
    }
    rep.add("h - c h^p = t^p to O(t^" + std::to_string(n) + ") for p=" + std::to_string(p), ok, why);
  }

  for (const auto& [m, n, p] : {std::tuple{0, 4, 7LL}, std::tuple{0, 6, 11LL}, std::tuple{1, 4, 11LL}}) {
    const Report r = restricted_invariance_check(m, n, p);
    const auto* f = r.first_failure();
    rep.add("restricted center (m,n,p)=(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(p) + ")",
            r.passed(), f ? f->name + " " + f->detail : "");
  }
  return rep;
}

inline Report qft()
{
  const auto start = std::chrono::steady_clock::now();
  Report rep("qft");
  const auto rec = qft_recursion(10);
  Tally agree, weight;
  for (int k = 2; k <= 10; ++k) {
    const Report r = qft_check(k, &rec);
    for (const auto& c : r.checks())
      (c.name == "weight k" ? weight : agree).record(c.passed, [&] { return "k=" + std::to_string(k) + " " + c.detail; });
  }
  agree.into(rep, "recursion equals closed form, 2<=k<=10");
  weight.into(rep, "P_k has weight k");
  add_runtime_check(rep, start, 60);
  return rep;
}

// ---------------------------------------------------------------------------

struct Suite {
  std::string name;
  std::function<Report()> run;
};

inline const std::vector<Suite>& suites()
{
  static const std::vector<Suite> all = {
      {"cross-construction", cross_construction},
      {"golden", golden},
      {"closed-forms", closed_forms},
      {"invariance", invariance},
      {"group-action", group_action},
      {"fractional-residue", fractional_residue_suite},
      {"normal-form", normal_form_suite},
      {"lambda-minus-two", lambda_minus_two},
      {"charp", charp},
      {"qft", qft},
  };
  return all;
}

inline Report run_suite(const std::string& name)
{
  for (const auto& s : suites())
    if (s.name == name)
      return s.run();
  throw std::invalid_argument("unknown suite: " + name);
}

} // namespace resline::verify

#endif // RESLINE_VERIFY_HPP

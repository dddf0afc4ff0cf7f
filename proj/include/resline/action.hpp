#ifndef RESLINE_ACTION_HPP
#define RESLINE_ACTION_HPP

// Automorphisms g(t) = t + O(t^{n+1}) acting on tensor fields
// h(t) t^mu (dt)^{-lambda}, fractional residues, the residue pairing and
// normal forms by order-by-order elimination.

#include "resline/multipoly.hpp"
#include "resline/scalars.hpp"
#include "resline/series.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace resline {

/// sum_k x_k t^{k+mu} (dt)^{-lambda}, known for k < precision().
struct TensorField {
  Rational lambda;
  Rational mu;
  std::vector<Rational> coeffs;

  int precision() const { return static_cast<int>(coeffs.size()); }

  friend bool operator==(const TensorField&, const TensorField&) = default;

  /// Coefficients as a series in t (the t^mu factor stripped).
  RationalSeries series() const { return rational_series(coeffs, precision()); }

  nlohmann::json to_json() const
  {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& v : coeffs)
      c.push_back(to_string(v));
    return {{"lambda", to_string(lambda)}, {"mu", to_string(mu)}, {"coeffs", c}};
  }
};

/// Element of G_n: g(t) = t + sum_{i > n} g_i t^i, known to O(t^prec).
class Automorphism {
 public:
  /// `tail` holds g_{n+1}, g_{n+2}, ...
  static Automorphism make(int level, const std::vector<Rational>& tail, int prec)
  {
    if (level < 1)
      throw std::invalid_argument("Automorphism: level must be >= 1");
    if (prec < 2)
      throw std::invalid_argument("Automorphism: precision must be >= 2");
    std::vector<Rational> c(static_cast<std::size_t>(prec - 1), Rational(0));
    c[0] = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) {
      const std::size_t e = static_cast<std::size_t>(level) + 1 + i;
      if (e >= static_cast<std::size_t>(prec)) {
        if (tail[i] != 0)
          throw std::invalid_argument("Automorphism: coefficient beyond precision");
        continue;
      }
      c[e - 1] = tail[i];
    }
    return Automorphism(level, RationalSeries(1, std::move(c), prec, Rational(0)));
  }

  static Automorphism identity(int prec) { return make(1, {}, prec); }

  /// Validates membership in G_level.
  static Automorphism from_series(int level, RationalSeries g)
  {
    if (g.ord() != 1 || g.leading() != 1)
      throw std::invalid_argument("Automorphism: g(t) must start with t");
    for (int e = 2; e <= level && e < g.prec(); ++e)
      if (g.coeff(e) != 0)
        throw std::invalid_argument("Automorphism: coefficient of t^" + std::to_string(e) +
                                    " must vanish in G_" + std::to_string(level));
    return Automorphism(level, std::move(g));
  }

  int level() const { return level_; }
  int precision() const { return g_.prec(); }
  const RationalSeries& series() const { return g_; }

  /// (this o other)(t) = this(other(t))
  Automorphism compose(const Automorphism& other) const
  {
    return Automorphism(std::min(level_, other.level_), series_compose(g_, other.g_));
  }

  Automorphism inverse() const { return Automorphism(level_, compositional_inverse(g_)); }

  bool is_identity() const
  {
    for (int e = 2; e < g_.prec(); ++e)
      if (g_.coeff(e) != 0)
        return false;
    return true;
  }

  nlohmann::json to_json() const
  {
    nlohmann::json j = g_.to_json();
    j["level"] = level_;
    return j;
  }

 private:
  Automorphism(int level, RationalSeries g) : level_(level), g_(std::move(g)) {}

  int level_;
  RationalSeries g_;
};

/// Pullback: h(t) t^mu (dt)^{-lambda} -> h(g) (g/t)^mu (g')^{-lambda} t^mu (dt)^{-lambda}.
/// As a pullback this composes contravariantly: act(g o h, T) = act(h, act(g, T)).
inline TensorField act(const Automorphism& g, const TensorField& t)
{
  const int n = t.precision();
  if (n == 0)
    return t;
  const RationalSeries gs = g.series().truncated(n + 1);
  const RationalSeries moved = series_compose(t.series(), gs);
  const RationalSeries ratio = gs.shifted(-1);
  const RationalSeries jac = gs.derivative();
  const RationalSeries result =
      moved * series_pow_rational(ratio, t.mu) * series_pow_rational(jac, Rational(-t.lambda));
  if (result.prec() <= 0)
    throw PrecisionError("act: precision exhausted");
  TensorField out{t.lambda, t.mu, {}};
  for (int e = 0; e < std::min(result.prec(), n); ++e)
    out.coeffs.push_back(result.coeff(e));
  return out;
}

/// x_0^k res((h/x_0)^{-1/lambda} t^{-k-1} dt) for a field with mu = (k+1) lambda.
inline Rational fractional_residue(const TensorField& t, int k)
{
  if (t.lambda == 0)
    throw std::invalid_argument("fractional_residue: lambda must be nonzero");
  if (k < 1)
    throw std::invalid_argument("fractional_residue: k must be positive");
  if (t.mu != t.lambda * (k + 1))
    throw std::invalid_argument("fractional_residue: mu must equal (k+1)*lambda");
  if (t.precision() < k + 1)
    throw PrecisionError("fractional_residue: need coefficients x_0..x_k");
  const Rational x0 = t.coeffs[0];
  if (x0 == 0)
    throw std::domain_error("fractional_residue: x0 = 0 is outside the general-position stratum");
  std::vector<Rational> normalized;
  for (int i = 0; i <= k; ++i)
    normalized.push_back(t.coeffs[static_cast<std::size_t>(i)] / x0);
  const RationalSeries h = rational_series(std::move(normalized), k + 1);
  const RationalSeries form = series_pow_rational(h, Rational(-1) / t.lambda).shifted(-k - 1);
  return residue(form) * pow(x0, k);
}

/// res of the product of fields with lambda + lambda' = -1 and mu + mu' a
/// negative integer.
inline Rational pairing(const TensorField& a, const TensorField& b)
{
  if (a.lambda + b.lambda != -1)
    throw std::invalid_argument("pairing: lambda + lambda' must equal -1");
  const Rational shift = a.mu + b.mu;
  if (!is_integer(shift) || shift >= 0)
    throw std::invalid_argument("pairing: mu + mu' must be a negative integer");
  const long s = -shift.get_num().get_si();
  // exponent i + j + mu + mu' = -1
  const long need = s - 1;
  if (a.precision() <= need || b.precision() <= need)
    throw PrecisionError("pairing: residue exponent outside the known coefficients");
  Rational total = 0;
  for (long i = 0; i <= need; ++i)
    total += a.coeffs[static_cast<std::size_t>(i)] * b.coeffs[static_cast<std::size_t>(need - i)];
  return total;
}

struct NormalForm {
  TensorField canonical;
  Automorphism witness;
  std::optional<int> resonant_index;  // m+k when mu = (m+k+1) lambda
  bool exceptional = false;            // lambda = 0 with mu a non-positive integer
};

/// Greedy elimination with G_{m+1}: for j = m+1, m+2, ... the map
/// g = t + a t^{j+1} shifts x_j by a (mu - (j+1) lambda) x_0, so every
/// non-resonant x_j can be cleared in turn.
inline NormalForm normal_form(const TensorField& t, int m)
{
  if (m < 0)
    throw std::invalid_argument("normal_form: m must be nonnegative");
  if (t.precision() == 0 || t.coeffs[0] == 0)
    throw std::domain_error("normal_form: x0 = 0 stratum is not handled");
  const int n = t.precision();
  NormalForm nf{t, Automorphism::identity(n + 1), std::nullopt, false};
  nf.exceptional = t.lambda == 0 && is_integer(t.mu) && t.mu <= 0;
  for (int j = m + 1; j < n; ++j) {
    const Rational factor = t.mu - t.lambda * (j + 1);
    if (factor == 0) {
      if (t.lambda != 0 && !nf.resonant_index)
        nf.resonant_index = j;
      continue;
    }
    const Rational xj = nf.canonical.coeffs[static_cast<std::size_t>(j)];
    if (xj == 0)
      continue;
    const Rational a = -xj / (factor * nf.canonical.coeffs[0]);
    std::vector<Rational> tail(static_cast<std::size_t>(j + 1 - m - 1), Rational(0));
    tail.back() = a;
    const Automorphism step = Automorphism::make(m + 1, tail, n + 1);
    nf.canonical = act(step, nf.canonical);
    nf.witness = nf.witness.compose(step);
    if (nf.canonical.coeffs[static_cast<std::size_t>(j)] != 0)
      throw std::logic_error("normal_form: elimination failed at index " + std::to_string(j));
  }
  return nf;
}

/// Deterministic g in G_n with g_i drawn from {-3..3} for n < i <= depth.
inline Automorphism random_automorphism(int level, int depth, std::uint64_t seed, int prec = 0)
{
  if (level < 1 || depth <= level)
    throw std::invalid_argument("random_automorphism: need level >= 1 and depth > level");
  if (prec <= 0)
    prec = std::max(depth + 1, kDefaultRelativePrecision + 1);
  std::mt19937_64 rng(seed);
  std::vector<Rational> tail;
  for (int i = level + 1; i <= depth; ++i)
    tail.push_back(static_cast<long>(rng() % 7) - 3);
  return Automorphism::make(level, tail, prec);
}

} // namespace resline

#endif // RESLINE_ACTION_HPP

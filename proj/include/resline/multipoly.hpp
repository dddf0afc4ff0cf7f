#ifndef RESLINE_MULTIPOLY_HPP
#define RESLINE_MULTIPOLY_HPP

// Sparse multivariate polynomials with a canonical (graded lexicographic,
// descending) term order, integer partitions, generalized multinomials,
// polynomial determinants and potentials of exact one-forms.

#include "resline/scalars.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace resline {

/// Exponent vector; trailing zero exponents are never stored.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) { trim(); }

  static Monomial variable(std::size_t index, std::uint32_t power = 1)
  {
    std::vector<std::uint32_t> e(index + 1, 0);
    e[index] = power;
    return Monomial(std::move(e));
  }

  std::uint32_t operator[](std::size_t i) const { return i < e_.size() ? e_[i] : 0; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }
  /// One past the largest variable index present.
  std::size_t span() const { return e_.size(); }
  bool is_one() const { return e_.empty(); }

  long degree() const { return std::accumulate(e_.begin(), e_.end(), 0L); }
  /// sum of i * e_i (variable x_i has weight i)
  long weight() const
  {
    long w = 0;
    for (std::size_t i = 0; i < e_.size(); ++i)
      w += static_cast<long>(i) * e_[i];
    return w;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b)
  {
    std::vector<std::uint32_t> r(std::max(a.e_.size(), b.e_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = a[i] + b[i];
    return Monomial(std::move(r));
  }

  bool divides(const Monomial& o) const
  {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o[i])
        return false;
    return true;
  }

  /// o / *this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const
  {
    std::vector<std::uint32_t> r(o.e_);
    for (std::size_t i = 0; i < e_.size(); ++i)
      r[i] -= e_[i];
    return Monomial(std::move(r));
  }

  Monomial with_exponent(std::size_t i, std::uint32_t value) const
  {
    std::vector<std::uint32_t> r(e_);
    if (r.size() <= i)
      r.resize(i + 1, 0);
    r[i] = value;
    return Monomial(std::move(r));
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  void trim()
  {
    while (!e_.empty() && e_.back() == 0)
      e_.pop_back();
  }

  std::vector<std::uint32_t> e_;
};

/// Graded lexicographic order, descending, x0 most significant.  Used as the
/// map comparator so that iteration is already in canonical order.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const
  {
    const long da = a.degree();
    const long db = b.degree();
    if (da != db)
      return da > db;
    const std::size_t n = std::max(a.span(), b.span());
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i])
        return a[i] > b[i];
    return false;
  }
};

template <class C>
class BasicPoly {
 public:
  using coefficient_type = C;
  using traits = field_traits<C>;
  using term_map = std::map<Monomial, C, GrlexDescending>;

  /// `unit` fixes the coefficient field (it matters for F_p); `alphabet` is
  /// the variable letter used when printing.
  explicit BasicPoly(char alphabet = 'x', C unit = C(1)) : one_(traits::one(unit)), alpha_(alphabet) {}

  static BasicPoly constant(const C& c, char alphabet = 'x')
  {
    BasicPoly r(alphabet, c);
    if (!traits::is_zero(c))
      r.terms_.emplace(Monomial(), c);
    return r;
  }
  static BasicPoly variable(std::size_t index, char alphabet = 'x', C unit = C(1))
  {
    BasicPoly r(alphabet, unit);
    r.terms_.emplace(Monomial::variable(index), r.one_);
    return r;
  }
  static BasicPoly term(const C& c, Monomial m, char alphabet = 'x')
  {
    BasicPoly r(alphabet, c);
    if (!traits::is_zero(c))
      r.terms_.emplace(std::move(m), c);
    return r;
  }

  char alphabet() const { return alpha_; }
  const C& unit() const { return one_; }
  C zero_coefficient() const { return traits::zero(one_); }
  const term_map& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

  C coefficient(const Monomial& m) const
  {
    auto it = terms_.find(m);
    return it == terms_.end() ? zero_coefficient() : it->second;
  }
  C constant_term() const { return coefficient(Monomial()); }

  /// One past the largest variable index that occurs.
  std::size_t variable_span() const
  {
    std::size_t s = 0;
    for (const auto& [m, c] : terms_)
      s = std::max(s, m.span());
    return s;
  }

  long total_degree() const
  {
    long d = -1;
    for (const auto& [m, c] : terms_)
      d = std::max(d, m.degree());
    return d;
  }

  void add_term(const Monomial& m, const C& c)
  {
    if (traits::is_zero(c))
      return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (traits::is_zero(it->second))
        terms_.erase(it);
    }
  }

  BasicPoly& operator+=(const BasicPoly& o)
  {
    for (const auto& [m, c] : o.terms_)
      add_term(m, c);
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o)
  {
    for (const auto& [m, c] : o.terms_)
      add_term(m, -c);
    return *this;
  }
  BasicPoly operator-() const
  {
    BasicPoly r(alpha_, one_);
    for (const auto& [m, c] : terms_)
      r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
  }
  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }

  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b)
  {
    BasicPoly r(a.alpha_, a.one_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        r.add_term(ma * mb, ca * cb);
    return r;
  }
  BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

  BasicPoly& operator*=(const C& s)
  {
    if (traits::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_)
      c *= s;
    return *this;
  }
  friend BasicPoly operator*(BasicPoly a, const C& s) { return a *= s; }
  friend BasicPoly operator*(const C& s, BasicPoly a) { return a *= s; }

  /// Multiplication by an exact rational, mapped into the coefficient field.
  BasicPoly scaled(const Rational& q) const
  {
    return *this * traits::from_rational(one_, q);
  }

  BasicPoly pow(unsigned e) const
  {
    BasicPoly r = constant(one_, alpha_);
    for (unsigned i = 0; i < e; ++i)
      r *= *this;
    return r;
  }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) { return a.terms_ == b.terms_; }

  BasicPoly derivative(std::size_t var) const
  {
    BasicPoly r(alpha_, one_);
    for (const auto& [m, c] : terms_) {
      const auto e = m[var];
      if (e == 0)
        continue;
      r.add_term(m.with_exponent(var, e - 1), c * traits::from_rational(one_, Rational(e)));
    }
    return r;
  }

  /// Term-wise antiderivative in `var` with zero integration constant.
  BasicPoly antiderivative(std::size_t var) const
  {
    BasicPoly r(alpha_, one_);
    for (const auto& [m, c] : terms_) {
      const auto e = m[var];
      r.add_term(m.with_exponent(var, e + 1),
                 c * traits::from_rational(one_, Rational(1, e + 1)));
    }
    return r;
  }

  C evaluate(std::span<const C> point) const
  {
    C total = zero_coefficient();
    for (const auto& [m, c] : terms_) {
      C v = c;
      for (std::size_t i = 0; i < m.span(); ++i) {
        if (m[i] == 0)
          continue;
        if (i >= point.size())
          throw std::out_of_range("evaluate: point has too few coordinates");
        for (std::uint32_t j = 0; j < m[i]; ++j)
          v *= point[i];
      }
      total += v;
    }
    return total;
  }

  /// Replaces every variable x_i by the polynomial images[i].
  BasicPoly substitute(std::span<const BasicPoly> images) const
  {
    BasicPoly r(images.empty() ? alpha_ : images.front().alpha_, one_);
    for (const auto& [m, c] : terms_) {
      BasicPoly t = constant(c, r.alpha_);
      for (std::size_t i = 0; i < m.span(); ++i) {
        if (m[i] == 0)
          continue;
        if (i >= images.size())
          throw std::out_of_range("substitute: missing image");
        t *= images[i].pow(m[i]);
      }
      r += t;
    }
    return r;
  }

  /// Renames x_i -> y_{index_map(i)} (an injective relabelling).
  BasicPoly relabel(const std::function<std::size_t(std::size_t)>& index_map, char alphabet) const
  {
    BasicPoly r(alphabet, one_);
    for (const auto& [m, c] : terms_) {
      Monomial out;
      for (std::size_t i = 0; i < m.span(); ++i)
        if (m[i] != 0)
          out = out * Monomial::variable(index_map(i), m[i]);
      r.add_term(out, c);
    }
    return r;
  }

  /// Exact division by a monomial; nullopt if some term is not divisible.
  std::optional<BasicPoly> divide_by(const Monomial& d) const
  {
    BasicPoly r(alpha_, one_);
    for (const auto& [m, c] : terms_) {
      if (!d.divides(m))
        return std::nullopt;
      r.terms_.emplace(d.quotient_of(m), c);
    }
    return r;
  }

  template <class D, class F>
  BasicPoly<D> map_coefficients(F&& fn, const D& unit) const
  {
    BasicPoly<D> r(alpha_, unit);
    for (const auto& [m, c] : terms_)
      r.add_term(m, fn(c));
    return r;
  }

  std::string str() const;
  nlohmann::json to_json() const;

 private:
  term_map terms_;
  C one_;
  char alpha_;
};

using MultiPoly = BasicPoly<Rational>;

template <class C>
struct field_traits<BasicPoly<C>> {
  static constexpr bool exact_rational = false;
  static BasicPoly<C> zero(const BasicPoly<C>& like) { return BasicPoly<C>(like.alphabet(), like.unit()); }
  static BasicPoly<C> one(const BasicPoly<C>& like)
  {
    return BasicPoly<C>::constant(like.unit(), like.alphabet());
  }
  static bool is_zero(const BasicPoly<C>& a) { return a.is_zero(); }
  static bool is_one(const BasicPoly<C>& a) { return a == one(a); }
  static BasicPoly<C> from_rational(const BasicPoly<C>& like, const Rational& q)
  {
    return BasicPoly<C>::constant(field_traits<C>::from_rational(like.unit(), q), like.alphabet());
  }
  /// Only constants are invertible.
  static BasicPoly<C> inverse(const BasicPoly<C>& a)
  {
    if (!a.is_constant() || a.is_zero())
      throw std::domain_error("polynomial is not a unit");
    return BasicPoly<C>::constant(field_traits<C>::inverse(a.constant_term()), a.alphabet());
  }
  static std::string str(const BasicPoly<C>& a) { return a.str(); }
};

// ---------------------------------------------------------------------------
// text and JSON

namespace detail {

inline std::string monomial_text(const Monomial& m, char alphabet)
{
  std::string out;
  for (std::size_t i = 0; i < m.span(); ++i) {
    if (m[i] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += alphabet;
    out += std::to_string(i);
    if (m[i] != 1)
      out += "^" + std::to_string(m[i]);
  }
  return out;
}

/// Joins (coefficient, body) pairs: "c*body" with sign folding for rationals.
template <class C>
std::string join_terms(const std::vector<std::pair<C, std::string>>& items)
{
  if (items.empty())
    return "0";
  std::string out;
  for (const auto& [c, body] : items) {
    if constexpr (std::is_same_v<C, Rational>) {
      const bool negative = c < 0;
      const Rational a = negative ? Rational(-c) : c;
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      if (body.empty())
        out += to_string(a);
      else if (a == 1)
        out += body;
      else
        out += to_string(a) + "*" + body;
    } else {
      if (!out.empty())
        out += " + ";
      const std::string cs = field_traits<C>::str(c);
      if (body.empty())
        out += "(" + cs + ")";
      else if (field_traits<C>::is_one(c))
        out += body;
      else
        out += "(" + cs + ")*" + body;
    }
  }
  return out;
}

} // namespace detail

template <class C>
std::string BasicPoly<C>::str() const
{
  std::vector<std::pair<C, std::string>> items;
  items.reserve(terms_.size());
  for (const auto& [m, c] : terms_)
    items.emplace_back(c, detail::monomial_text(m, alpha_));
  return detail::join_terms(items);
}

template <class C>
nlohmann::json BasicPoly<C>::to_json() const
{
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : terms_)
    terms.push_back({{"coeff", field_traits<C>::str(c)}, {"exps", m.exponents()}});
  return {{"vars", std::string(1, alpha_)}, {"terms", terms}};
}

template <class C>
std::ostream& operator<<(std::ostream& os, const BasicPoly<C>& p)
{
  return os << p.str();
}

/// Parses the canonical text form (any term order is accepted), e.g.
/// "1/2*x0*x2 - 1/8*x1^2".
inline MultiPoly parse_poly(std::string_view text, char alphabet = 'x')
{
  MultiPoly result(alphabet);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("parse_poly: " + why + " at offset " + std::to_string(pos));
  };
  auto read_uint = [&] {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (start == pos)
      fail("expected digits");
    return std::stoul(std::string(text.substr(start, pos - start)));
  };
  skip();
  if (pos == text.size())
    fail("empty input");
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size())
      break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Rational coeff = 1;
    Monomial mono;
    bool have_factor = false;
    while (true) {
      skip();
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        Rational c = Rational(Integer(read_uint()));
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          const auto d = read_uint();
          if (d == 0)
            fail("zero denominator");
          c /= Rational(Integer(d));
        }
        coeff *= c;
      } else if (pos < text.size() && text[pos] == alphabet) {
        ++pos;
        const auto index = read_uint();
        unsigned long power = 1;
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          power = read_uint();
        }
        mono = mono * Monomial::variable(index, static_cast<std::uint32_t>(power));
      } else {
        fail("expected a coefficient or a variable");
      }
      have_factor = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!have_factor)
      fail("empty term");
    result.add_term(mono, sign * coeff);
  }
  return result;
}

// ---------------------------------------------------------------------------
// partitions and multinomials

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive

  int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  int length() const { return static_cast<int>(parts.size()); }
  int largest() const { return parts.empty() ? 0 : parts.front(); }

  /// Multiplicities p_1, p_2, ..., p_{largest}; index 0 holds p_1.
  std::vector<int> multiplicities() const
  {
    std::vector<int> mult(static_cast<std::size_t>(largest()), 0);
    for (int part : parts)
      ++mult[static_cast<std::size_t>(part - 1)];
    return mult;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// All partitions of `weight` whose largest part exceeds `min_largest_exclusive`,
/// in reverse lexicographic order: (n), (n-1,1), ...
inline std::vector<Partition> enumerate_partitions(int weight, int min_largest_exclusive = 0)
{
  if (weight < 1)
    throw std::invalid_argument("enumerate_partitions: weight must be positive");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.push_back(Partition{current});
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  for (int largest = weight; largest > min_largest_exclusive; --largest) {
    current.assign(1, largest);
    rec(weight - largest, largest);
  }
  return out;
}

/// alpha (alpha-1) ... (alpha-l+1) / (p_1! p_2! ...) with l = sum p_i.
inline Rational multinomial_general(const Rational& alpha, std::span<const int> multiplicities)
{
  long length = 0;
  Integer denom = 1;
  for (int p : multiplicities) {
    if (p < 0)
      throw std::invalid_argument("multinomial_general: negative multiplicity");
    length += p;
    denom *= factorial(p);
  }
  Rational r = falling_factorial(alpha, length);
  r /= Rational(denom);
  return r;
}

// ---------------------------------------------------------------------------
// matrices and determinants

template <class C>
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, BasicPoly<C> zero)
      : rows_(rows), cols_(cols), entries_(rows * cols, zero), zero_(std::move(zero))
  {
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const BasicPoly<C>& zero() const { return zero_; }
  BasicPoly<C>& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BasicPoly<C>& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  PolyMatrix without(std::optional<std::size_t> row, std::optional<std::size_t> col) const
  {
    PolyMatrix m(rows_ - (row ? 1 : 0), cols_ - (col ? 1 : 0), zero_);
    for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
      if (row && r == *row)
        continue;
      for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
        if (col && c == *col)
          continue;
        m(rr, cc) = (*this)(r, c);
        ++cc;
      }
      ++rr;
    }
    return m;
  }

  /// New matrix with `row` prepended.
  PolyMatrix with_first_row(const std::vector<BasicPoly<C>>& row) const
  {
    if (row.size() != cols_)
      throw std::invalid_argument("with_first_row: width mismatch");
    PolyMatrix m(rows_ + 1, cols_, zero_);
    for (std::size_t c = 0; c < cols_; ++c)
      m(0, c) = row[c];
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        m(r + 1, c) = (*this)(r, c);
    return m;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BasicPoly<C>> entries_;
  BasicPoly<C> zero_;
};

/// Cofactor expansion, always along the row with the fewest terms.
template <class C>
BasicPoly<C> det_poly(const PolyMatrix<C>& m)
{
  if (m.rows() != m.cols())
    throw std::invalid_argument("det_poly: matrix is " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", not square");
  const std::size_t n = m.rows();
  if (n == 0)
    return field_traits<BasicPoly<C>>::one(m.zero());
  if (n == 1)
    return m(0, 0);
  std::size_t pivot = 0;
  std::size_t best = SIZE_MAX;
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t count = 0;
    for (std::size_t c = 0; c < n; ++c)
      count += m(r, c).term_count();
    if (count < best) {
      best = count;
      pivot = r;
    }
  }
  BasicPoly<C> total = m.zero();
  for (std::size_t c = 0; c < n; ++c) {
    if (m(pivot, c).is_zero())
      continue;
    BasicPoly<C> minor = det_poly(m.without(pivot, c));
    if ((pivot + c) % 2 == 0)
      total += m(pivot, c) * minor;
    else
      total -= m(pivot, c) * minor;
  }
  return total;
}

// ---------------------------------------------------------------------------
// one-forms

template <class C>
struct BasicOneForm {
  std::vector<std::pair<std::size_t, BasicPoly<C>>> components;  // (variable, coefficient)
};

using PolyOneForm = BasicOneForm<Rational>;

class NotClosedError : public std::domain_error {
 public:
  NotClosedError(std::size_t i, std::size_t j)
      : std::domain_error("one-form is not closed in variables " + std::to_string(i) + " and " +
                          std::to_string(j)),
        first(i), second(j)
  {
  }
  std::size_t first;
  std::size_t second;
};

template <class C>
BasicOneForm<C> gradient(const BasicPoly<C>& p, std::span<const std::size_t> vars)
{
  BasicOneForm<C> w;
  for (auto v : vars)
    w.components.emplace_back(v, p.derivative(v));
  return w;
}

template <class C>
void check_closed(const BasicOneForm<C>& w)
{
  const auto& comp = w.components;
  for (std::size_t a = 0; a < comp.size(); ++a)
    for (std::size_t b = a + 1; b < comp.size(); ++b) {
      if (comp[a].first == comp[b].first)
        throw std::invalid_argument("one-form lists variable " + std::to_string(comp[a].first) +
                                    " twice");
      if (!(comp[a].second.derivative(comp[b].first) == comp[b].second.derivative(comp[a].first)))
        throw NotClosedError(comp[a].first, comp[b].first);
    }
}

/// P with dP = w in the listed variables and no monomial free of all of them.
/// Integrates the first component, subtracts its differential and recurses.
template <class C>
BasicPoly<C> potential_of_exact_one_form(const BasicOneForm<C>& w)
{
  check_closed(w);
  if (w.components.empty())
    throw std::invalid_argument("potential_of_exact_one_form: empty one-form");
  auto remaining = w.components;
  BasicPoly<C> potential = field_traits<BasicPoly<C>>::zero(remaining.front().second);
  while (!remaining.empty()) {
    const auto [var, coeff] = remaining.front();
    const BasicPoly<C> piece = coeff.antiderivative(var);
    potential += piece;
    remaining.erase(remaining.begin());
    for (auto& [v, c] : remaining) {
      c -= piece.derivative(v);
      if (c.derivative(var).term_count() != 0)
        throw std::logic_error("potential_of_exact_one_form: residual depends on integrated variable");
    }
  }
  return potential;
}

// ---------------------------------------------------------------------------

struct WeightReport {
  bool passed = true;
  std::vector<Monomial> failing;
};

/// Every monomial must have the given total degree (if any) and weight.
template <class C>
WeightReport weighted_checks(const BasicPoly<C>& p, std::optional<long> degree, long weight)
{
  WeightReport rep;
  for (const auto& [m, c] : p.terms())
    if ((degree && m.degree() != *degree) || m.weight() != weight) {
      rep.passed = false;
      rep.failing.push_back(m);
    }
  return rep;
}

/// Least common multiple of the coefficient denominators.
inline Integer denominator_lcm(const MultiPoly& p)
{
  Integer l = 1;
  for (const auto& [m, c] : p.terms())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

} // namespace resline

#endif // RESLINE_MULTIPOLY_HPP

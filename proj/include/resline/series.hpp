#ifndef RESLINE_SERIES_HPP
#define RESLINE_SERIES_HPP

// Truncated Laurent series with in-band precision.  Coefficients live in any
// type with a field_traits specialization (rationals, F_p, F_p(c), or
// polynomials when only ring operations are needed).

#include "resline/multipoly.hpp"
#include "resline/scalars.hpp"

#include <json.hpp>

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace resline {

/// Working precision used when callers do not choose one: terms kept beyond
/// the leading exponent.
inline constexpr int kDefaultRelativePrecision = 24;

class PrecisionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// sum_{e=ord}^{prec-1} a_e t^e + O(t^prec).  The first and last stored
/// coefficients are nonzero (missing entries below prec are zero); a series
/// that vanishes to precision has ord == prec and no stored coefficients.
template <class C>
class TruncatedSeries {
 public:
  using traits = field_traits<C>;

  /// The zero series O(t^prec); `zero` fixes the coefficient domain.
  TruncatedSeries(C zero, int prec) : ord_(prec), prec_(prec), zero_(traits::zero(zero)) {}

  /// Coefficients for exponents ord, ord+1, ...; everything listed must be
  /// below prec.
  TruncatedSeries(int ord, std::vector<C> coeffs, int prec, C zero)
      : ord_(ord), prec_(prec), c_(std::move(coeffs)), zero_(traits::zero(zero))
  {
    if (ord_ + static_cast<int>(c_.size()) > prec_)
      throw std::invalid_argument("TruncatedSeries: coefficients exceed precision");
    normalize();
  }

  /// Dense constructor from exponent 0.
  static TruncatedSeries from_coefficients(std::vector<C> coeffs, int prec, C zero)
  {
    return TruncatedSeries(0, std::move(coeffs), prec, std::move(zero));
  }

  /// c t^e + O(t^prec)
  static TruncatedSeries monomial(const C& c, int e, int prec)
  {
    if (e >= prec)
      return TruncatedSeries(c, prec);
    return TruncatedSeries(e, {c}, prec, c);
  }

  int ord() const { return ord_; }
  int prec() const { return prec_; }
  /// Number of known coefficients from ord on.
  int relative_precision() const { return prec_ - ord_; }
  bool is_zero() const { return c_.empty(); }
  const C& zero() const { return zero_; }
  C one() const { return traits::one(zero_); }
  const std::vector<C>& stored() const { return c_; }
  const C& leading() const
  {
    if (c_.empty())
      throw std::domain_error("leading coefficient of a zero series");
    return c_.front();
  }

  /// Coefficient at t^e; zero below ord, error at or beyond prec.
  C coeff(int e) const
  {
    if (e >= prec_)
      throw PrecisionError("coefficient t^" + std::to_string(e) + " beyond precision O(t^" +
                           std::to_string(prec_) + ")");
    return at(e - ord_);
  }

  TruncatedSeries truncated(int new_prec) const
  {
    if (new_prec >= prec_)
      return *this;
    std::vector<C> c;
    for (int e = ord_; e < new_prec; ++e)
      c.push_back(coeff(e));
    return TruncatedSeries(std::min(ord_, new_prec), std::move(c), new_prec, zero_);
  }

  /// Multiplication by t^d.
  TruncatedSeries shifted(int d) const
  {
    TruncatedSeries r(*this);
    r.ord_ += d;
    r.prec_ += d;
    return r;
  }

  TruncatedSeries operator-() const
  {
    TruncatedSeries r(*this);
    for (auto& c : r.c_)
      c = -c;
    return r;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
  {
    const int prec = std::min(a.prec_, b.prec_);
    const int ord = std::min(a.ord_, b.ord_);
    std::vector<C> c;
    for (int e = ord; e < prec; ++e) {
      C v = a.ord_ <= e ? a.coeff(e) : a.zero_;
      if (b.ord_ <= e)
        v += b.coeff(e);
      c.push_back(std::move(v));
    }
    return TruncatedSeries(std::min(ord, prec), std::move(c), prec, a.zero_);
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
  {
    if (a.is_zero() || b.is_zero()) {
      const int prec = std::min(a.prec_ + (b.is_zero() ? b.prec_ : b.ord_),
                                b.prec_ + (a.is_zero() ? a.prec_ : a.ord_));
      return TruncatedSeries(a.zero_, prec);
    }
    const int ord = a.ord_ + b.ord_;
    const int prec = std::min(a.prec_ + b.ord_, b.prec_ + a.ord_);
    std::vector<C> c(static_cast<std::size_t>(prec - ord), a.zero_);
    for (std::size_t i = 0; i < a.c_.size() && i < c.size(); ++i) {
      if (traits::is_zero(a.c_[i]))
        continue;
      for (std::size_t j = 0; j < b.c_.size() && i + j < c.size(); ++j)
        c[i + j] += a.c_[i] * b.c_[j];
    }
    return TruncatedSeries(ord, std::move(c), prec, a.zero_);
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  TruncatedSeries scaled(const C& s) const
  {
    TruncatedSeries r(*this);
    for (auto& c : r.c_)
      c *= s;
    r.normalize();
    return r;
  }

  TruncatedSeries scaled(const Rational& q) const
    requires(!std::is_same_v<C, Rational>)
  {
    return scaled(traits::from_rational(zero_, q));
  }

  TruncatedSeries pow(unsigned e) const
  {
    TruncatedSeries r = monomial(one(), 0, INT_MAX / 4);
    for (unsigned i = 0; i < e; ++i)
      r = r * *this;
    return r;
  }

  /// d/dt
  TruncatedSeries derivative() const
  {
    std::vector<C> c;
    for (int e = ord_; e < prec_; ++e)
      c.push_back(coeff(e) * traits::from_rational(zero_, Rational(e)));
    return TruncatedSeries(ord_ - 1, std::move(c), prec_ - 1, zero_);
  }

  /// 1/f for a series with invertible leading coefficient.
  TruncatedSeries reciprocal() const
  {
    if (is_zero())
      throw std::domain_error("reciprocal of a zero series");
    const C inv_lead = traits::inverse(leading());
    const int r = relative_precision();
    std::vector<C> y;
    y.reserve(static_cast<std::size_t>(r));
    y.push_back(inv_lead);
    for (int n = 1; n < r; ++n) {
      C acc = zero_;
      for (int k = 1; k <= n; ++k)
        acc += at(k) * y[static_cast<std::size_t>(n - k)];
      y.push_back(-(acc * inv_lead));
    }
    return TruncatedSeries(-ord_, std::move(y), -ord_ + r, zero_);
  }

  template <class D, class F>
  TruncatedSeries<D> map_coefficients(F&& fn, const D& zero) const
  {
    std::vector<D> c;
    for (const auto& v : c_)
      c.push_back(fn(v));
    return TruncatedSeries<D>(std::min(ord_, prec_), std::move(c), prec_, zero);
  }

  /// Equality of the known coefficients on the common window.
  bool agrees_with(const TruncatedSeries& o) const
  {
    const int prec = std::min(prec_, o.prec_);
    for (int e = std::min(ord_, o.ord_); e < prec; ++e)
      if (!(coeff_or_zero(e) == o.coeff_or_zero(e)))
        return false;
    return true;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
  {
    return a.prec_ == b.prec_ && a.ord_ == b.ord_ && a.c_ == b.c_;
  }

  std::string str() const;
  nlohmann::json to_json() const;

 private:
  C coeff_or_zero(int e) const { return e < ord_ ? zero_ : coeff(e); }

  /// Stored coefficient at offset i from ord, zero outside the stored range.
  C at(int i) const
  {
    if (i < 0 || static_cast<std::size_t>(i) >= c_.size())
      return zero_;
    return c_[static_cast<std::size_t>(i)];
  }

  void normalize()
  {
    while (!c_.empty() && traits::is_zero(c_.back()))
      c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && traits::is_zero(c_[lead]))
      ++lead;
    if (lead == c_.size()) {
      c_.clear();
      ord_ = prec_;
      return;
    }
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
      ord_ += static_cast<int>(lead);
    }
  }

  int ord_;
  int prec_;
  std::vector<C> c_;
  C zero_;
};

template <class C>
std::string TruncatedSeries<C>::str() const
{
  const std::string tail = "O(t^" + std::to_string(prec_) + ")";
  if (c_.empty())
    return tail;
  std::vector<std::pair<C, std::string>> items;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (traits::is_zero(c_[i]))
      continue;
    std::string body;
    if (i == 1)
      body = "t";
    else if (i > 1)
      body = "t^" + std::to_string(i);
    items.emplace_back(c_[i], body);
  }
  return "t^" + std::to_string(ord_) + "*(" + detail::join_terms(items) + ") + " + tail;
}

template <class C>
nlohmann::json TruncatedSeries<C>::to_json() const
{
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : c_)
    coeffs.push_back(traits::str(c));
  return {{"ord", ord_}, {"prec", prec_}, {"coeffs", coeffs}};
}

using RationalSeries = TruncatedSeries<Rational>;

/// Rational series from dense coefficients starting at exponent `ord`.
inline RationalSeries rational_series(std::vector<Rational> coeffs, int prec, int ord = 0)
{
  return RationalSeries(ord, std::move(coeffs), prec, Rational(0));
}

/// f(g(t)) to the largest precision the inputs determine.  Requires ord(g) >= 1;
/// negative powers of g go through its reciprocal, so g's leading coefficient
/// must then be invertible.
template <class C>
TruncatedSeries<C> series_compose(const TruncatedSeries<C>& f, const TruncatedSeries<C>& g)
{
  if (g.is_zero() || g.ord() < 1)
    throw std::invalid_argument("series_compose: inner series must have order >= 1");
  const int og = g.ord();
  const int rg = g.relative_precision();
  // a_i g^i is known to exponent i*og + rg (i != 0); the unknown tail of f
  // starts at exponent prec(f)*og.
  long prec = static_cast<long>(f.prec()) * og;
  for (int i = f.ord(); i < f.prec(); ++i)
    if (i != 0 && !field_traits<C>::is_zero(f.coeff(i)))
      prec = std::min(prec, static_cast<long>(i) * og + rg);
  const int target = static_cast<int>(prec);

  TruncatedSeries<C> result(f.zero(), target);
  if (f.ord() <= 0 && 0 < f.prec())
    result += TruncatedSeries<C>::monomial(f.coeff(0), 0, target);

  if (f.prec() > 1) {
    const TruncatedSeries<C> gt = g.truncated(target);
    TruncatedSeries<C> power = gt;
    for (int i = 1; i < f.prec(); ++i) {
      if (i > 1)
        power = (power * gt).truncated(target);
      if (i >= f.ord() && !field_traits<C>::is_zero(f.coeff(i)))
        result += power.scaled(f.coeff(i));
    }
  }
  if (f.ord() < 0) {
    // no truncation here: products of negative-order factors lose precision
    const TruncatedSeries<C> inv = g.reciprocal();
    TruncatedSeries<C> power = inv;
    for (int i = -1; i >= f.ord(); --i) {
      if (i < -1)
        power = power * inv;
      if (i < f.prec() && !field_traits<C>::is_zero(f.coeff(i)))
        result += power.scaled(f.coeff(i));
    }
  }
  if (result.prec() != target)
    return result.truncated(target);
  return result;
}

/// f^alpha for rational alpha.  Writing f = c t^d (1+u), requires d*alpha to
/// be an integer and, for non-integer alpha, c = 1.
template <class C>
TruncatedSeries<C> series_pow_rational(const TruncatedSeries<C>& f, const Rational& alpha)
{
  using traits = field_traits<C>;
  if (f.is_zero())
    throw std::domain_error("series_pow_rational: zero series");
  const int d = f.ord();
  const Rational shift = alpha * d;
  if (!is_integer(shift))
    throw std::domain_error("series_pow_rational: ord*alpha = " + to_string(shift) +
                            " is not an integer");
  const bool integral = is_integer(alpha);
  const C& c = f.leading();
  if (!integral && !traits::is_one(c))
    throw std::domain_error("series_pow_rational: fractional power needs leading coefficient 1");

  const int r = f.relative_precision();
  TruncatedSeries<C> unit = f.shifted(-d);
  C c_alpha = traits::one(c);
  if (!traits::is_one(c)) {
    const C inv = traits::inverse(c);
    unit = unit.scaled(inv);
    const long e = alpha.get_num().get_si();
    const C base = e >= 0 ? c : inv;
    for (long i = 0; i < (e >= 0 ? e : -e); ++i)
      c_alpha *= base;
  }
  const TruncatedSeries<C> u = unit - TruncatedSeries<C>::monomial(traits::one(c), 0, r);

  TruncatedSeries<C> sum = TruncatedSeries<C>::monomial(traits::one(c), 0, r);
  TruncatedSeries<C> power = TruncatedSeries<C>::monomial(traits::one(c), 0, r);
  for (int j = 1; j < r; ++j) {
    power = (power * u).truncated(r);
    if (power.is_zero())
      break;
    const Rational b = rat_binomial(alpha, j);
    if (b == 0)
      break;
    sum += power.scaled(traits::from_rational(c, b));
  }
  return sum.scaled(c_alpha).shifted(static_cast<int>(shift.get_num().get_si()));
}

/// Coefficient of t^-1.
template <class C>
C residue(const TruncatedSeries<C>& f)
{
  if (f.prec() <= -1)
    throw PrecisionError("residue: precision O(t^" + std::to_string(f.prec()) +
                         ") does not reach t^-1");
  return f.coeff(-1);
}

/// Compositional inverse of g = c t + ..., by order-by-order correction.
template <class C>
TruncatedSeries<C> compositional_inverse(const TruncatedSeries<C>& g)
{
  using traits = field_traits<C>;
  if (g.is_zero() || g.ord() != 1)
    throw std::invalid_argument("compositional_inverse: series must have order exactly 1");
  const int prec = g.prec();
  const C inv_c = traits::inverse(g.leading());
  std::vector<C> h(static_cast<std::size_t>(prec - 1), g.zero());
  h[0] = inv_c;
  for (int j = 2; j < prec; ++j) {
    const TruncatedSeries<C> hs(1, h, prec, g.zero());
    const C err = series_compose(g, hs).coeff(j);
    h[static_cast<std::size_t>(j - 1)] -= err * inv_c;
  }
  return TruncatedSeries<C>(1, std::move(h), prec, g.zero());
}

} // namespace resline

#endif // RESLINE_SERIES_HPP

#ifndef RESLINE_SCALARS_HPP
#define RESLINE_SCALARS_HPP

// Exact coefficient fields: rationals (GMP), prime fields F_p and the
// rational function field F_p(c), plus the small number-theoretic helpers
// shared by the rest of the library.

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace resline {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
  if (den == 0)
    throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "a", "-a" or "a/b" (whitespace around the input is ignored).
inline Rational parse_rational(std::string_view text)
{
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
    text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  if (text.empty())
    throw std::invalid_argument("empty rational");
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    std::string str(s);
    if (!str.empty() && str.front() == '+')
      str.erase(0, 1);
    if (str.empty() || str == "-")
      throw std::invalid_argument("malformed rational");
    for (std::size_t i = (str.front() == '-') ? 1 : 0; i < str.size(); ++i)
      if (str[i] < '0' || str[i] > '9')
        throw std::invalid_argument("malformed rational: '" + str + "'");
    return Integer(str, 10);
  };
  Integer num = parse_int(text.substr(0, slash));
  Integer den = 1;
  if (slash != std::string_view::npos)
    den = parse_int(text.substr(slash + 1));
  if (den == 0)
    throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational pow(const Rational& base, long exponent)
{
  if (exponent < 0) {
    if (base == 0)
      throw std::domain_error("zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Rational result = 1;
  Rational b = base;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1u)
      result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

// ---------------------------------------------------------------------------
// number-theoretic helpers

/// alpha (alpha-1) ... (alpha-j+1)
inline Rational falling_factorial(const Rational& alpha, long j)
{
  Rational r = 1;
  for (long i = 0; i < j; ++i)
    r *= alpha - i;
  return r;
}

/// Generalized binomial coefficient with a rational upper argument.
inline Rational rat_binomial(const Rational& alpha, long j)
{
  if (j < 0)
    throw std::invalid_argument("rat_binomial: negative lower argument");
  Rational r = 1;
  for (long i = 0; i < j; ++i) {
    r *= alpha - i;
    r /= i + 1;
  }
  return r;
}

inline Integer factorial(long n)
{
  if (n < 0)
    throw std::invalid_argument("factorial of a negative integer");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// n!! with (-1)!! = 0!! = 1.
inline Integer double_factorial(long n)
{
  if (n < -1)
    throw std::invalid_argument("double_factorial: n < -1");
  Integer r = 1;
  for (long i = n; i > 1; i -= 2)
    r *= i;
  return r;
}

inline int binary_digit_sum(std::uint64_t k)
{
  if (k == 0)
    throw std::invalid_argument("binary_digit_sum: k must be positive");
  return std::popcount(k);
}

/// Number of partitions of n whose parts are all <= max_part (equivalently,
/// of length <= max_part).  max_part < 0 means unrestricted.
inline Integer partition_count(long n, long max_part = -1)
{
  if (n < 0)
    return 0;
  if (max_part < 0 || max_part > n)
    max_part = n;
  std::vector<Integer> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (long part = 1; part <= max_part; ++part)
    for (long s = part; s <= n; ++s)
      ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
  return ways[static_cast<std::size_t>(n)];
}

/// Coefficients c_0..c_{n-1} (ascending) of the polynomial of degree < n
/// through (nodes[i], values[i]); nodes must be distinct.
inline std::vector<Rational> interpolate_coefficients(std::span<const Rational> nodes,
                                                      std::span<const Rational> values)
{
  const std::size_t n = nodes.size();
  if (values.size() != n)
    throw std::invalid_argument("interpolate_coefficients: size mismatch");
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
    std::vector<Rational> basis = {Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i)
        continue;
      if (nodes[i] == nodes[j])
        throw std::invalid_argument("interpolate_coefficients: repeated node");
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * nodes[j];
      }
      basis = std::move(next);
      denom *= nodes[i] - nodes[j];
    }
    const Rational scale = values[i] / denom;
    for (std::size_t d = 0; d < n; ++d)
      out[d] += basis[d] * scale;
  }
  return out;
}

/// Largest d with p^d | m; m must be nonzero.
inline int padic_valuation(long long m, long long p)
{
  if (m == 0)
    throw std::invalid_argument("padic_valuation of zero");
  if (m < 0)
    m = -m;
  int d = 0;
  while (m % p == 0) {
    m /= p;
    ++d;
  }
  return d;
}

inline long long ipow(long long base, int e)
{
  long long r = 1;
  for (int i = 0; i < e; ++i)
    r *= base;
  return r;
}

inline bool is_prime(long long p)
{
  if (p < 2)
    return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// prime field

/// Element of F_p.  The modulus travels with the value; a default-constructed
/// element is a modulus-free zero that adopts the modulus of the other operand.
class Fp {
 public:
  Fp() = default;
  Fp(long long value, long long modulus) : p_(modulus)
  {
    if (p_ <= 0)
      throw std::invalid_argument("Fp: modulus must be positive");
    v_ = value % p_;
    if (v_ < 0)
      v_ += p_;
  }

  long long value() const { return v_; }
  long long modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator-() const { return p_ == 0 ? *this : Fp(p_ - v_, p_); }

  Fp& operator+=(const Fp& o) { return *this = Fp(v_ + o.v_, common(o)); }
  Fp& operator-=(const Fp& o) { return *this = Fp(v_ - o.v_ + common(o), common(o)); }
  Fp& operator*=(const Fp& o)
  {
    const long long p = common(o);
    return *this = Fp(static_cast<long long>((static_cast<__int128>(v_) * o.v_) % p), p);
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }

  Fp pow(std::uint64_t e) const
  {
    Fp result(1, p_);
    Fp b = *this;
    while (e != 0) {
      if (e & 1u)
        result *= b;
      b *= b;
      e >>= 1;
    }
    return result;
  }

  Fp inverse() const
  {
    if (v_ == 0)
      throw std::domain_error("Fp: inverse of zero");
    return pow(static_cast<std::uint64_t>(p_ - 2));
  }

  std::string str() const
  {
    return std::to_string(v_) + " mod " + std::to_string(p_);
  }

 private:
  long long common(const Fp& o) const
  {
    if (p_ != 0 && o.p_ != 0 && p_ != o.p_)
      throw std::invalid_argument("Fp: mixed moduli");
    const long long p = p_ != 0 ? p_ : o.p_;
    if (p == 0)
      throw std::logic_error("Fp: arithmetic on modulus-free zeros");
    return p;
  }

  long long v_ = 0;
  long long p_ = 0;
};

/// Factory that validates primality once.
class PrimeField {
 public:
  explicit PrimeField(long long p) : p_(p)
  {
    if (!is_prime(p))
      throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  }
  long long characteristic() const { return p_; }
  Fp operator()(long long v) const { return Fp(v, p_); }
  Fp zero() const { return Fp(0, p_); }
  Fp one() const { return Fp(1, p_); }

  Fp from_rational(const Rational& q) const
  {
    const Integer pp(static_cast<long>(p_));
    const Integer num = q.get_num() % pp;
    const Integer den = q.get_den() % pp;
    if (den == 0)
      throw std::domain_error("denominator of " + to_string(q) + " vanishes mod " +
                              std::to_string(p_));
    return Fp(num.get_si(), p_) / Fp(den.get_si(), p_);
  }

 private:
  long long p_;
};

inline std::string to_string(const Fp& a) { return a.str(); }

// ---------------------------------------------------------------------------
// F_p[c] and F_p(c)

/// Dense univariate polynomial over F_p in the indeterminate c.
class FpPoly {
 public:
  FpPoly() = default;
  explicit FpPoly(long long p) : p_(p) {}
  FpPoly(long long p, std::vector<long long> coeffs) : p_(p), c_(std::move(coeffs))
  {
    for (auto& v : c_) {
      v %= p_;
      if (v < 0)
        v += p_;
    }
    trim();
  }

  static FpPoly constant(long long p, long long v) { return FpPoly(p, {v}); }
  /// c^e
  static FpPoly monomial(long long p, std::size_t e, long long v = 1)
  {
    std::vector<long long> c(e + 1, 0);
    c[e] = v;
    return FpPoly(p, std::move(c));
  }

  long long modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  long long lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<long long>& coeffs() const { return c_; }

  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.c_ == b.c_; }

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b)
  {
    const long long p = a.p_ != 0 ? a.p_ : b.p_;
    std::vector<long long> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
      r[i] += b.c_[i];
    return FpPoly(p, std::move(r));
  }
  FpPoly operator-() const
  {
    std::vector<long long> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
      r[i] = p_ - c_[i];
    return FpPoly(p_, std::move(r));
  }
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b) { return a + (-b); }
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b)
  {
    const long long p = a.p_ != 0 ? a.p_ : b.p_;
    if (a.is_zero() || b.is_zero())
      return FpPoly(p);
    std::vector<long long> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0)
        continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] = (r[i + j] + a.c_[i] * b.c_[j]) % p;
    }
    return FpPoly(p, std::move(r));
  }

  FpPoly scaled(long long s) const
  {
    std::vector<long long> r(c_);
    for (auto& v : r)
      v = static_cast<long long>((static_cast<__int128>(v) * s) % p_);
    return FpPoly(p_, std::move(r));
  }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const
  {
    if (d.is_zero())
      throw std::domain_error("FpPoly: division by zero");
    const long long p = p_ != 0 ? p_ : d.p_;
    FpPoly rem(p, c_);
    if (rem.degree() < d.degree())
      return {FpPoly(p), rem};
    std::vector<long long> q(static_cast<std::size_t>(rem.degree() - d.degree() + 1), 0);
    const long long inv_lead = Fp(d.lead(), p).inverse().value();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
      const auto shift = static_cast<std::size_t>(rem.degree() - d.degree());
      const long long f = (rem.lead() * inv_lead) % p;
      q[shift] = f;
      for (std::size_t i = 0; i < d.c_.size(); ++i)
        rem.c_[i + shift] = ((rem.c_[i + shift] - f * d.c_[i]) % p + p) % p;
      rem.trim();
    }
    return {FpPoly(p, std::move(q)), rem};
  }

  FpPoly monic() const
  {
    if (is_zero())
      return *this;
    return scaled(Fp(lead(), p_).inverse().value());
  }

  friend FpPoly gcd(FpPoly a, FpPoly b)
  {
    while (!b.is_zero()) {
      auto r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  std::string str() const
  {
    if (c_.empty())
      return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0)
        continue;
      if (!out.empty())
        out += " + ";
      if (i == 0 || c_[i] != 1)
        out += std::to_string(c_[i]);
      if (i > 0) {
        if (c_[i] != 1)
          out += "*";
        out += "c";
        if (i > 1)
          out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim()
  {
    while (!c_.empty() && c_.back() == 0)
      c_.pop_back();
  }

  long long p_ = 0;
  std::vector<long long> c_;
};

/// Element of F_p(c) as a reduced fraction with monic denominator.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(FpPoly num) : num_(std::move(num)), den_(FpPoly::constant(num_.modulus(), 1)) {}
  RatFunc(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  static RatFunc constant(long long p, long long v) { return RatFunc(FpPoly::constant(p, v)); }
  /// The transcendental generator c.
  static RatFunc generator(long long p) { return RatFunc(FpPoly::monomial(p, 1)); }

  long long modulus() const { return num_.modulus() != 0 ? num_.modulus() : den_.modulus(); }
  const FpPoly& numerator() const { return num_; }
  const FpPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend bool operator==(const RatFunc& a, const RatFunc& b)
  {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b)
  {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b)
  {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b)
  {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  RatFunc inverse() const
  {
    if (is_zero())
      throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
  }

  RatFunc pow(std::uint64_t e) const
  {
    RatFunc result = constant(modulus(), 1);
    RatFunc b = *this;
    while (e != 0) {
      if (e & 1u)
        result *= b;
      b *= b;
      e >>= 1;
    }
    return result;
  }

  std::string str() const
  {
    if (den_.degree() == 0)
      return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void reduce()
  {
    if (den_.is_zero())
      throw std::domain_error("RatFunc: zero denominator");
    const long long p = modulus();
    if (num_.is_zero()) {
      den_ = FpPoly::constant(p, 1);
      return;
    }
    FpPoly g = gcd(num_, den_);
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
    const long long inv = Fp(den_.lead(), p).inverse().value();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }

  FpPoly num_;
  FpPoly den_;
};

inline std::string to_string(const RatFunc& a) { return a.str(); }

// ---------------------------------------------------------------------------
// uniform access used by the generic containers

template <class T>
struct field_traits;

template <>
struct field_traits<Rational> {
  static constexpr bool exact_rational = true;
  static Rational zero(const Rational&) { return 0; }
  static Rational one(const Rational&) { return 1; }
  static bool is_zero(const Rational& a) { return a == 0; }
  static bool is_one(const Rational& a) { return a == 1; }
  static Rational from_rational(const Rational&, const Rational& q) { return q; }
  static Rational inverse(const Rational& a)
  {
    if (a == 0)
      throw std::domain_error("inverse of zero");
    return Rational(1) / a;
  }
  static std::string str(const Rational& a) { return to_string(a); }
};

template <>
struct field_traits<Fp> {
  static constexpr bool exact_rational = false;
  static Fp zero(const Fp& like) { return Fp(0, like.modulus()); }
  static Fp one(const Fp& like) { return Fp(1, like.modulus()); }
  static bool is_zero(const Fp& a) { return a.is_zero(); }
  static bool is_one(const Fp& a) { return a.value() == 1; }
  static Fp from_rational(const Fp& like, const Rational& q)
  {
    return PrimeField(like.modulus()).from_rational(q);
  }
  static Fp inverse(const Fp& a) { return a.inverse(); }
  static std::string str(const Fp& a) { return a.str(); }
};

template <>
struct field_traits<RatFunc> {
  static constexpr bool exact_rational = false;
  static RatFunc zero(const RatFunc& like) { return RatFunc::constant(like.modulus(), 0); }
  static RatFunc one(const RatFunc& like) { return RatFunc::constant(like.modulus(), 1); }
  static bool is_zero(const RatFunc& a) { return a.is_zero(); }
  static bool is_one(const RatFunc& a) { return a == one(a); }
  static RatFunc from_rational(const RatFunc& like, const Rational& q)
  {
    const Fp v = PrimeField(like.modulus()).from_rational(q);
    return RatFunc::constant(like.modulus(), v.value());
  }
  static RatFunc inverse(const RatFunc& a) { return a.inverse(); }
  static std::string str(const RatFunc& a) { return a.str(); }
};

} // namespace resline

#endif // RESLINE_SCALARS_HPP

#ifndef RESLINE_GOLDEN_HPP
#define RESLINE_GOLDEN_HPP

// Published closed forms of the first P_{mk}: the lambda = -2 family with
// its literal denominators, and the general-lambda family with coefficients
// written in lambda.  Families valid "for m >= m0" are generated for any m.

#include "resline/multipoly.hpp"
#include "resline/pmk.hpp"

#include <optional>

namespace resline::golden {

namespace detail {

inline MultiPoly X(int i) { return xvar(static_cast<std::size_t>(i)); }
inline MultiPoly C(long num, long den = 1) { return MultiPoly::constant(make_rational(num, den)); }

} // namespace detail

/// lambda = -2 displays; nullopt when (m, k) has no display.
inline std::optional<MultiPoly> half_display(int m, int k)
{
  using detail::C;
  using detail::X;
  const MultiPoly x0 = X(0), x1 = X(1), x2 = X(2), x3 = X(3);
  switch (k) {
  case 1:
    return C(1, 2) * X(m + 1);
  case 2:
    if (m == 0)
      return C(1, 8) * (C(4) * x0 * x2 - x1 * x1);
    return C(1, 4) * (C(2) * x0 * X(m + 2) - x1 * X(m + 1));
  case 3:
    if (m == 0)
      return C(1, 16) * (C(8) * x0 * x0 * x3 - C(4) * x0 * x1 * x2 + x1 * x1 * x1);
    if (m == 1)
      return C(1, 16) * (C(8) * x0 * x0 * X(4) - C(2) * x0 * (C(2) * x1 * x3 + x2 * x2) + C(3) * x1 * x1 * x2);
    return C(1, 16) * (C(8) * x0 * x0 * X(m + 3) - C(4) * x0 * (x1 * X(m + 2) + x2 * X(m + 1)) +
                       C(3) * x1 * x1 * X(m + 1));
  case 4:
    if (m == 0)
      return C(1, 128) * (C(64) * x0 * x0 * x0 * X(4) - C(16) * x0 * x0 * (C(2) * x1 * x3 + x2 * x2) +
                          C(24) * x0 * x1 * x1 * x2 - C(5) * x1 * x1 * x1 * x1);
    if (m == 1)
      return C(1, 32) * (C(16) * x0 * x0 * x0 * X(5) - C(8) * x0 * x0 * (x1 * X(4) + x2 * x3) +
                         C(6) * x0 * (x1 * x1 * x3 + x1 * x2 * x2) - C(5) * x1 * x1 * x1 * x2);
    if (m == 2)
      return C(1, 32) * (C(16) * x0 * x0 * x0 * X(6) -
                         C(4) * x0 * x0 * (C(2) * x1 * X(5) + C(2) * x2 * X(4) + x3 * x3) +
                         C(6) * x0 * (x1 * x1 * X(4) + C(2) * x1 * x2 * x3) - C(5) * x1 * x1 * x1 * x3);
    return C(1, 32) * (C(16) * x0 * x0 * x0 * X(m + 4) -
                       C(8) * x0 * x0 * (x1 * X(m + 3) + x2 * X(m + 2) + x3 * X(m + 1)) +
                       C(6) * x0 * (x1 * x1 * X(m + 2) + C(2) * x1 * x2 * X(m + 1)) -
                       C(5) * x1 * x1 * x1 * X(m + 1));
  default:
    return std::nullopt;
  }
}

/// General-lambda displays evaluated at a given lambda.
inline std::optional<MultiPoly> lambda_display(int m, int k, const Rational& lambda)
{
  using detail::X;
  auto K = [](const Rational& q) { return MultiPoly::constant(q); };
  const Rational l = lambda;
  const MultiPoly a = K(Rational(-1) / l);
  const MultiPoly b = K((l + 1) / (l * l));
  const MultiPoly c = K((l + 1) * (2 * l + 1) / (l * l * l));
  const MultiPoly d = K((l + 1) * (2 * l + 1) * (3 * l + 1) / (l * l * l * l));
  auto half = K(Rational(1, 2));
  const MultiPoly x0 = X(0), x1 = X(1), x2 = X(2), x3 = X(3);
  switch (k) {
  case 1:
    return a * X(m + 1);
  case 2:
    if (m == 0)
      return a * x0 * x2 + b * half * x1 * x1;
    return a * x0 * X(m + 2) + b * x1 * X(m + 1);
  case 3:
    if (m == 0)
      return a * x0 * x0 * x3 + b * x0 * x1 * x2 - c * K(Rational(1, 6)) * x1 * x1 * x1;
    if (m == 1)
      return a * x0 * x0 * X(4) + b * half * x0 * (K(2) * x1 * x3 + x2 * x2) - c * half * x1 * x1 * x2;
    return a * x0 * x0 * X(m + 3) + b * x0 * (x1 * X(m + 2) + x2 * X(m + 1)) - c * half * x1 * x1 * X(m + 1);
  case 4:
    if (m == 0)
      return a * x0 * x0 * x0 * X(4) + b * half * x0 * x0 * (K(2) * x1 * x3 + x2 * x2) -
             c * half * x0 * x1 * x1 * x2 + d * K(Rational(1, 24)) * x1 * x1 * x1 * x1;
    if (m == 1)
      return a * x0 * x0 * x0 * X(5) + b * x0 * x0 * (x1 * X(4) + x2 * x3) -
             c * half * x0 * (x1 * x1 * x3 + x1 * x2 * x2) + d * K(Rational(1, 6)) * x1 * x1 * x1 * x2;
    if (m == 2)
      return a * x0 * x0 * x0 * X(6) + b * half * x0 * x0 * (K(2) * x1 * X(5) + K(2) * x2 * X(4) + x3 * x3) -
             c * half * x0 * (x1 * x1 * X(4) + K(2) * x1 * x2 * x3) + d * K(Rational(1, 6)) * x1 * x1 * x1 * x3;
    return a * x0 * x0 * x0 * X(m + 4) + b * x0 * x0 * (x1 * X(m + 3) + x2 * X(m + 2) + x3 * X(m + 1)) -
           c * half * x0 * (x1 * x1 * X(m + 2) + K(2) * x1 * x2 * X(m + 1)) +
           d * K(Rational(1, 6)) * x1 * x1 * x1 * X(m + 1);
  default:
    return std::nullopt;
  }
}

} // namespace resline::golden

#endif // RESLINE_GOLDEN_HPP

#ifndef RESLINE_QFT_HPP
#define RESLINE_QFT_HPP

#include "resline/multipoly.hpp"
#include "resline/pmk.hpp"
#include "resline/report.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace resline {

inline MultiPoly uvar(std::size_t i) { return MultiPoly::variable(i, 'u'); }

/// P_2 .. P_kmax in u_1 .. u_k from
///   P_2 = u_2 - u_1^2,
///   P_{k+1} = ( sum_{i=1}^k ((i+2) u_{i+1} - 2 u_1 u_i) dP_k/du_i
///               - 2k u_1 P_k - sum_{i=2}^{k-1} P_i P_{k+1-i} ) / (k+2).
/// Element j of the result is P_{j+2}.
inline std::vector<MultiPoly> qft_recursion(int kmax)
{
  if (kmax < 2)
    throw std::invalid_argument("qft_recursion: kmax must be >= 2");
  std::vector<MultiPoly> p;
  p.push_back(uvar(2) - uvar(1) * uvar(1));
  auto at = [&p](int index) -> const MultiPoly& { return p[static_cast<std::size_t>(index - 2)]; };
  for (int k = 2; k < kmax; ++k) {
    const MultiPoly& pk = at(k);
    MultiPoly next('u');
    for (int i = 1; i <= k; ++i) {
      const MultiPoly d = pk.derivative(static_cast<std::size_t>(i));
      if (d.is_zero())
        continue;
      next += (uvar(static_cast<std::size_t>(i + 1)) * Rational(i + 2) -
               uvar(1) * uvar(static_cast<std::size_t>(i)) * Rational(2)) *
              d;
    }
    next -= uvar(1) * pk * Rational(2 * k);
    for (int i = 2; i <= k - 1; ++i)
      next -= at(i) * at(k + 1 - i);
    p.push_back(next * Rational(1, k + 2));
  }
  return p;
}

/// (1/(1-k)) P_{0k}^{(1-k)}(1, u_1, ..., u_k), i.e. -1/lambda = 1-k.
inline MultiPoly qft_closed_form(int k)
{
  if (k < 2)
    throw std::invalid_argument("qft_closed_form: k must be >= 2");
  const MultiPoly p = pmk_partition(PmkSpec::make(0, k, Rational(1, k - 1)));
  std::vector<MultiPoly> images;
  images.push_back(MultiPoly::constant(1, 'u'));
  for (int i = 1; i <= k; ++i)
    images.push_back(uvar(static_cast<std::size_t>(i)));
  return p.substitute(images) * Rational(-1, k - 1);
}

inline Report qft_check(int k, const std::vector<MultiPoly>* recursion = nullptr)
{
  std::vector<MultiPoly> local;
  if (recursion == nullptr || static_cast<int>(recursion->size()) < k - 1) {
    local = qft_recursion(k);
    recursion = &local;
  }
  const MultiPoly& lhs = (*recursion)[static_cast<std::size_t>(k - 2)];
  const MultiPoly rhs = qft_closed_form(k);
  Report rep("qft k=" + std::to_string(k));
  rep.add("recursion equals closed form", lhs == rhs,
          lhs == rhs ? "" : "recursion: " + lhs.str() + " ; closed form: " + rhs.str());
  const auto wc = weighted_checks(lhs, std::nullopt, k);
  rep.add("weight k", wc.passed);
  return rep;
}

} // namespace resline

#endif // RESLINE_QFT_HPP

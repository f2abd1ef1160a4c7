#pragma once

// Exact computation of L_k = { log_b d - i log_b a  (mod 1) : 1 <= d < b, 0 <= i < k }.
// Each torus element is stored in normal form as the unique reduced fraction
// w = d s^i b^m / r^i in [1, b), so distinct elements are distinct fractions
// and |L_k| is a set size.  When log_b a is irrational and b >= 5, |L_k| is
// the block complexity p(k); this holds whether or not b is squarefree.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ldc/complexity.hpp"
#include "ldc/number.hpp"

namespace ldc {

struct TorusPoint {
  Natural num{1};
  Natural den{1};

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
  friend auto operator<=>(const TorusPoint& x, const TorusPoint& y) {
    // structural order, only used for set membership
    if (auto c = x.num.compare(y.num); c != 0) return c <=> 0;
    return x.den.compare(y.den) <=> 0;
  }

  std::string str() const { return num.str() + "/" + den.str(); }
};

/// Orders torus points by the value num/den, which is the order of log_b w on [0, 1).
inline bool value_less(const TorusPoint& x, const TorusPoint& y) { return x.num * y.den < y.num * x.den; }

namespace detail {

// Multiplies num/den by the unique power of b putting it in [1, b).  The
// exponent is estimated from bit lengths and then corrected by comparisons.
inline void normalize_into_base(Natural& num, Natural& den, const Natural& b) {
  const long double log2_b = std::log2(b.convert_to<long double>());
  const long double gap = static_cast<long double>(boost::multiprecision::msb(den)) -
                          static_cast<long double>(boost::multiprecision::msb(num));
  const auto m = static_cast<std::int64_t>(std::floor(gap / log2_b));
  if (m > 0) {
    num *= ipow(b, static_cast<std::uint64_t>(m));
  } else if (m < 0) {
    den *= ipow(b, static_cast<std::uint64_t>(-m));
  }
  while (num < den) num *= b;
  while (num >= den * b) den *= b;
  const Natural g = boost::multiprecision::gcd(num, den);
  num /= g;
  den /= g;
}

}  // namespace detail

/// Normal form of log_b d - i log_b(r/s) on the torus.
inline TorusPoint torus_point(std::uint64_t d, std::uint64_t i, const CanonicalForm<Natural>& canon,
                              const Natural& b) {
  if (d == 0 || b <= d) throw error(errc::invalid_argument, "digit out of range");
  TorusPoint p{Natural(d) * detail::ipow(canon.s, i), detail::ipow(canon.r, i)};
  detail::normalize_into_base(p.num, p.den, b);
  return p;
}

struct LkSet {
  std::uint64_t k = 0;
  std::set<TorusPoint> points;

  /// Points ordered by their position on [0, 1).
  std::vector<TorusPoint> sorted_by_value() const {
    std::vector<TorusPoint> out(points.begin(), points.end());
    std::sort(out.begin(), out.end(), value_less);
    return out;
  }
};

/// Checks the preconditions under which |L_k| equals p(k) and returns the canonical form.
inline CanonicalForm<Natural> require_oracle_pair(const Rational<Natural>& a, const Natural& b) {
  if (b < 5) throw error(errc::base_too_small, "base " + b.str() + " is below 5");
  auto canon = canonicalize(a, b);
  if (is_rational_power_of(a, b)) {
    throw error(errc::rational_power_of_base, a.str() + " is a rational power of " + b.str());
  }
  return canon;
}

/// L_1 subset L_2 subset ... ; sizes[k - 1] = |L_k| for k = 1..k_max.
inline std::vector<std::uint64_t> lk_sizes(const Rational<Natural>& a, const Natural& b, std::uint64_t k_max) {
  const auto canon = require_oracle_pair(a, b);
  const auto top = b.convert_to<std::uint64_t>();
  std::set<TorusPoint> points;
  std::vector<std::uint64_t> sizes;
  for (std::uint64_t i = 0; i < k_max; ++i) {
    for (std::uint64_t d = 1; d < top; ++d) points.insert(torus_point(d, i, canon, b));
    sizes.push_back(points.size());
  }
  return sizes;
}

inline LkSet lk_set(const Rational<Natural>& a, const Natural& b, std::uint64_t k) {
  if (k == 0) throw error(errc::invalid_argument, "k must be >= 1");
  const auto canon = require_oracle_pair(a, b);
  const auto top = b.convert_to<std::uint64_t>();
  LkSet out{k, {}};
  for (std::uint64_t i = 0; i < k; ++i) {
    for (std::uint64_t d = 1; d < top; ++d) out.points.insert(torus_point(d, i, canon, b));
  }
  return out;
}

inline std::uint64_t lk_size(const Rational<Natural>& a, const Natural& b, std::uint64_t k) {
  if (k == 0) throw error(errc::invalid_argument, "k must be >= 1");
  return lk_sizes(a, b, k).back();
}

/// True block complexity p(k) via |L_k|; valid for non-squarefree b >= 5 too.
inline std::uint64_t p_oracle(const Rational<Natural>& a, const Natural& b, std::uint64_t k) {
  return lk_size(a, b, k);
}

inline ComplexityProfile oracle_profile(const Rational<Natural>& a, const Natural& b, std::uint64_t n_max) {
  ComplexityProfile out{ProfileMethod::oracle, {}, std::nullopt, true};
  const auto sizes = lk_sizes(a, b, n_max);
  for (std::uint64_t n = 1; n <= n_max; ++n) out.points.emplace_back(n, sizes[n - 1]);
  return out;
}

}  // namespace ldc

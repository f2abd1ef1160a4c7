#pragma once

// Leading digits of a^n in base b.  The exact path walks the normalized
// mantissa (r/s)^n / b^t in big-integer arithmetic; the adaptive path tracks
// frac(n * log_b a) in long double and falls back to an exact recomputation of
// any term whose fractional part lies within the running error bound of a
// digit boundary log_b d.  Both paths return the same digits.

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ldc/number.hpp"

namespace ldc {

using Digit = std::uint32_t;

/// x in [1, b) with gcd(num, den) = 1; floor(x) is the leading digit.
struct NormalizedMantissa {
  Natural num{1};
  Natural den{1};

  friend bool operator==(const NormalizedMantissa&, const NormalizedMantissa&) = default;
};

struct DigitSequencePrefix {
  std::uint32_t base = 10;
  std::int64_t start_exponent = 1;
  std::vector<Digit> digits;

  std::size_t size() const noexcept { return digits.size(); }
};

enum class GenerationMode { exact, adaptive };

namespace detail {

inline std::uint64_t to_u64(const Natural& n) { return n.convert_to<std::uint64_t>(); }

// gcd where the second argument is usually a machine-size number.
inline Natural gcd_small(const Natural& big, const Natural& small) {
  if (fits_u64(small) && small != 0) {
    const std::uint64_t s = to_u64(small);
    const std::uint64_t rem = to_u64(Natural(big % s));
    return Natural(std::gcd(rem, s));
  }
  return boost::multiprecision::gcd(big, small);
}

inline Digit floor_small(const Natural& num, const Natural& den) {
  return static_cast<Digit>(to_u64(Natural(num / den)));
}

inline std::uint32_t digit_base(const Natural& b) {
  if (b < 3 || b > 0xFFFFFFFFu) throw error(errc::invalid_argument, "digit base must be in [3, 2^32)");
  return static_cast<std::uint32_t>(to_u64(b));
}

inline long double log_natural(const Natural& x) {
  const unsigned bits = boost::multiprecision::msb(x);
  if (bits < 60) return std::log(static_cast<long double>(to_u64(x)));
  const unsigned shift = bits - 60;
  const Natural top = x >> shift;
  return std::log(static_cast<long double>(to_u64(top))) +
         static_cast<long double>(shift) * std::numbers::ln2_v<long double>;
}

}  // namespace detail

/// One step: multiply by r/s and divide by b once if the product reaches b.
/// Since 1 < r/s < b, a single division always suffices.
inline std::pair<NormalizedMantissa, Digit> advance(const NormalizedMantissa& m,
                                                    const CanonicalForm<Natural>& canon,
                                                    const Natural& b) {
  // gcd(num*r, den*s) = gcd(num, s) * gcd(r, den) because both inputs are reduced
  const Natural g1 = detail::gcd_small(m.num, canon.s);
  const Natural g2 = detail::gcd_small(m.den, canon.r);
  NormalizedMantissa out{(m.num / g1) * (canon.r / g2), (m.den / g2) * (canon.s / g1)};
  if (out.num >= out.den * b) {
    const Natural g = detail::gcd_small(out.num, b);
    out.num /= g;
    out.den *= b / g;
  }
  const Digit d = detail::floor_small(out.num, out.den);
  return {std::move(out), d};
}

/// Leading digit of (r/s)^n computed from scratch with exact powers.
inline Digit leading_digit_exact(const CanonicalForm<Natural>& canon, std::uint64_t n, const Natural& b) {
  if (n == 0) return 1;
  const Natural big_r = detail::ipow(canon.r, n);
  const Natural big_s = detail::ipow(canon.s, n);
  const long double log2_b = std::log2(static_cast<long double>(detail::digit_base(b)));
  const long double gap =
      static_cast<long double>(boost::multiprecision::msb(big_r)) - boost::multiprecision::msb(big_s) - 1.0L;
  const auto guess = static_cast<std::uint64_t>(std::max(0.0L, std::floor(gap / log2_b)));
  // scale = b^t with s^n * b^t <= r^n < s^n * b^(t+1)
  Natural scale = detail::ipow(b, guess);
  Natural low = big_s * scale;
  while (low * b <= big_r) {
    low *= b;
  }
  while (low > big_r) {
    low /= b;
  }
  return detail::floor_small(big_r, low);
}

/// D_b(a^n) for n >= 0.
inline Digit leading_digit(const Rational<Natural>& a, std::uint64_t n, const Natural& b) {
  return leading_digit_exact(canonicalize(a, b), n, b);
}

/// Incremental producer of D_b(a^n), n = start, start + 1, ...
class DigitGenerator {
 public:
  DigitGenerator(PowerSequence seq, GenerationMode mode, std::int64_t start_exponent = 1)
      : seq_(std::move(seq)), mode_(mode), base_(detail::digit_base(seq_.b)) {
    if (start_exponent < 0) throw error(errc::invalid_argument, "start exponent must be >= 0");
    if (mode_ == GenerationMode::adaptive) {
      init_float();
      n_ = static_cast<std::uint64_t>(start_exponent);
    } else {
      for (std::int64_t i = 0; i < start_exponent; ++i) step_exact();
    }
  }

  Digit next() {
    if (mode_ == GenerationMode::exact) {
      const Digit d = current_;
      step_exact();
      return d;
    }
    return next_adaptive();
  }

  std::uint64_t next_exponent() const noexcept { return n_; }
  std::uint32_t base() const noexcept { return base_; }
  const NormalizedMantissa& mantissa() const noexcept { return mantissa_; }

  /// Terms of the adaptive path that were too close to a boundary to trust.
  std::uint64_t exact_fallbacks() const noexcept { return fallbacks_; }

 private:
  void step_exact() {
    auto [m, d] = advance(mantissa_, seq_.canon, seq_.b);
    mantissa_ = std::move(m);
    current_ = d;
    ++n_;
  }

  void init_float() {
    constexpr long double u = LDBL_EPSILON / 2;
    const long double ln_r = detail::log_natural(seq_.canon.r);
    const long double ln_s = detail::log_natural(seq_.canon.s);
    const long double ln_b = std::log(static_cast<long double>(base_));
    alpha_ = (ln_r - ln_s) / ln_b;
    alpha_err_ = 8 * u * (ln_r + ln_s + ln_b) / ln_b;
    bounds_.resize(base_ + 1);
    bounds_[0] = -1;  // unused sentinel, keeps bounds_[d] = log_b d
    for (std::uint32_t d = 1; d <= base_; ++d) {
      bounds_[d] = std::log(static_cast<long double>(d)) / ln_b;
    }
    bounds_[1] = 0;
    bounds_[base_] = 1;
  }

  Digit next_adaptive() {
    constexpr long double u = LDBL_EPSILON / 2;
    const std::uint64_t n = n_++;
    const long double x = static_cast<long double>(n) * alpha_;
    const long double phi = x - std::floor(x);
    const long double eps = 4 * (static_cast<long double>(n) * alpha_err_ + u * (x + 1) + 16 * u);
    const auto it = std::upper_bound(bounds_.begin() + 1, bounds_.end(), phi);
    const auto d = static_cast<Digit>(std::distance(bounds_.begin(), it) - 1);
    if (d >= 1 && d < base_ && phi - bounds_[d] > eps && bounds_[d + 1] - phi > eps) return d;
    ++fallbacks_;
    return leading_digit_exact(seq_.canon, n, seq_.b);
  }

  PowerSequence seq_;
  GenerationMode mode_;
  std::uint32_t base_;
  std::uint64_t n_ = 0;

  NormalizedMantissa mantissa_{};
  Digit current_ = 1;

  long double alpha_ = 0;
  long double alpha_err_ = 0;
  std::vector<long double> bounds_;
  std::uint64_t fallbacks_ = 0;
};

/// Extends prefix.digits in place to `length` terms.  The prefix must have
/// been produced by `gen` (prefix consistency).
inline void extend_prefix(DigitSequencePrefix& prefix, DigitGenerator& gen, std::size_t length) {
  prefix.digits.reserve(length);
  while (prefix.digits.size() < length) prefix.digits.push_back(gen.next());
}

inline DigitSequencePrefix generate_prefix(const PowerSequence& seq, std::size_t length,
                                           GenerationMode mode = GenerationMode::adaptive,
                                           std::int64_t start_exponent = 1) {
  DigitGenerator gen(seq, mode, start_exponent);
  DigitSequencePrefix prefix{gen.base(), start_exponent, {}};
  extend_prefix(prefix, gen, length);
  return prefix;
}

inline DigitSequencePrefix generate_prefix(const AdmissiblePair& pair, std::size_t length,
                                           GenerationMode mode = GenerationMode::adaptive,
                                           std::int64_t start_exponent = 1) {
  return generate_prefix(pair.sequence(), length, mode, start_exponent);
}

/// Single digit when every digit is < 10 ("2481361251"), comma separated otherwise.
inline std::string format_digits(std::span<const Digit> digits, std::uint32_t base) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (base <= 10) {
      out.push_back(static_cast<char>('0' + digits[i]));
    } else {
      if (i != 0) out.push_back(',');
      out += std::to_string(digits[i]);
    }
  }
  return out;
}

inline std::string to_text(const DigitSequencePrefix& prefix) {
  return format_digits(prefix.digits, prefix.base);
}

}  // namespace ldc

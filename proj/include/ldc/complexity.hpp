#pragma once

// Block complexity p(n) of leading-digit sequences: the closed form
// p(n) = c n + d, empirical counting of distinct windows in a prefix, and the
// derived quantities (extreme bounds, slope limit, average slope).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ldc/digit_stream.hpp"
#include "ldc/number.hpp"

namespace ldc {

/// p(n) = c n + d over base b; c + d = b - 1 for every admissible pair.
template <exact_integer Int = Natural>
struct LinearComplexity {
  Int b{};
  Int c{};
  Int d{};

  Int at(const Int& n) const { return c * n + d; }

  friend bool operator==(const LinearComplexity&, const LinearComplexity&) = default;
};

/// c = b - 1 - floor((b-1)/r) - floor((gcd(b,r)-1)/s), d = b - 1 - c.
template <exact_integer Int>
LinearComplexity<Int> slope_intercept(const CanonicalForm<Int>& canon, const Int& b) {
  const Int top = b - 1;
  const Int d = top / canon.r + (detail::gcd(b, canon.r) - 1) / canon.s;
  return LinearComplexity<Int>{b, top - d, d};
}

inline LinearComplexity<Natural> complexity_line(const AdmissiblePair& pair) {
  return slope_intercept(pair.canon(), pair.b());
}

inline Natural p_formula(const AdmissiblePair& pair, std::uint64_t n) {
  if (n == 0) throw error(errc::invalid_argument, "block length must be >= 1");
  return complexity_line(pair).at(Natural(n));
}

namespace detail {

struct WindowHash {
  std::size_t operator()(std::span<const Digit> w) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Digit d : w) {
      h ^= d;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

struct WindowEqual {
  bool operator()(std::span<const Digit> x, std::span<const Digit> y) const noexcept {
    return std::equal(x.begin(), x.end(), y.begin(), y.end());
  }
};

}  // namespace detail

/// Number of distinct length-n windows.  A lower bound for the true p(n).
inline std::size_t empirical_complexity(std::span<const Digit> digits, std::size_t n) {
  if (n == 0) throw error(errc::invalid_argument, "block length must be >= 1");
  if (n > digits.size()) throw error(errc::block_longer_than_prefix, "block length exceeds prefix length");
  std::unordered_set<std::span<const Digit>, detail::WindowHash, detail::WindowEqual> seen;
  seen.reserve(digits.size() - n + 1);
  for (std::size_t i = 0; i + n <= digits.size(); ++i) seen.insert(digits.subspan(i, n));
  return seen.size();
}

inline std::size_t empirical_complexity(const DigitSequencePrefix& prefix, std::size_t n) {
  return empirical_complexity(std::span<const Digit>(prefix.digits), n);
}

/// counts[n - 1] = number of distinct n-windows, for n = 1..n_max, from a
/// trie of depth n_max over all starting positions.
inline std::vector<std::size_t> block_counts(std::span<const Digit> digits, std::size_t n_max) {
  if (n_max == 0) throw error(errc::invalid_argument, "n_max must be >= 1");
  if (n_max > digits.size()) throw error(errc::block_longer_than_prefix, "block length exceeds prefix length");
  std::vector<std::size_t> counts(n_max, 0);
  std::unordered_map<std::uint64_t, std::uint32_t> child;
  child.reserve(digits.size() * 4);
  std::uint32_t nodes = 1;  // root = 0
  for (std::size_t i = 0; i < digits.size(); ++i) {
    std::uint32_t node = 0;
    const std::size_t depth = std::min(n_max, digits.size() - i);
    for (std::size_t j = 0; j < depth; ++j) {
      const std::uint64_t key = (static_cast<std::uint64_t>(node) << 32) | digits[i + j];
      auto [it, inserted] = child.try_emplace(key, nodes);
      if (inserted) {
        ++nodes;
        ++counts[j];
      }
      node = it->second;
    }
  }
  return counts;
}

enum class ProfileMethod { formula, empirical, oracle };
enum class ProfileMode { fixed, converged };

constexpr std::string_view to_string(ProfileMethod m) noexcept {
  switch (m) {
    case ProfileMethod::formula: return "formula";
    case ProfileMethod::empirical: return "empirical";
    case ProfileMethod::oracle: return "oracle";
  }
  return "unknown";
}

struct ComplexityProfile {
  ProfileMethod method = ProfileMethod::formula;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> points;  // (n, p), n ascending
  std::optional<std::size_t> prefix_length;                     // empirical only
  bool converged = true;
};

inline ComplexityProfile formula_profile(const AdmissiblePair& pair, std::uint64_t n_max) {
  const auto line = complexity_line(pair);
  ComplexityProfile out{ProfileMethod::formula, {}, std::nullopt, true};
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    out.points.emplace_back(n, line.at(Natural(n)).convert_to<std::uint64_t>());
  }
  return out;
}

/// Prefix doublings allowed in converged mode.
inline constexpr int kMaxDoublings = 6;

/// Fixed mode counts within `initial_prefix` terms.  Converged mode doubles
/// the prefix until every count n <= n_max is unchanged across one doubling,
/// throwing convergence_budget_exceeded after kMaxDoublings doublings.
inline ComplexityProfile empirical_profile(const PowerSequence& seq, std::size_t n_max,
                                           std::size_t initial_prefix, ProfileMode mode,
                                           GenerationMode gen_mode = GenerationMode::adaptive) {
  if (initial_prefix < n_max) throw error(errc::block_longer_than_prefix, "initial prefix shorter than n_max");
  DigitGenerator gen(seq, gen_mode);
  DigitSequencePrefix prefix{gen.base(), 1, {}};
  extend_prefix(prefix, gen, initial_prefix);
  auto counts = block_counts(prefix.digits, n_max);

  const auto finish = [&](bool converged) {
    ComplexityProfile out{ProfileMethod::empirical, {}, prefix.size(), converged};
    for (std::size_t n = 1; n <= n_max; ++n) out.points.emplace_back(n, counts[n - 1]);
    return out;
  };
  if (mode == ProfileMode::fixed) return finish(false);

  for (int round = 0; round < kMaxDoublings; ++round) {
    extend_prefix(prefix, gen, prefix.size() * 2);
    auto next = block_counts(prefix.digits, n_max);
    const bool stable = next == counts;
    counts = std::move(next);
    if (stable) return finish(true);
  }
  throw error(errc::convergence_budget_exceeded,
              "block counts still changing at prefix length " + std::to_string(prefix.size()));
}

/// Lower bound attained at a = 2, upper bound at a = b + 1.
inline std::pair<LinearComplexity<Natural>, LinearComplexity<Natural>> extreme_bounds(const Natural& b) {
  require_squarefree_base(b);
  const Natural top = b - 1;
  const Natural low_c = top / 2;
  return {LinearComplexity<Natural>{b, low_c, top - low_c}, LinearComplexity<Natural>{b, top, 0}};
}

/// Limit of c_{a,b} / b as b runs through squarefree values: 1 - 1/a.
inline Rational<Natural> asymptotic_slope_limit(std::uint64_t a) {
  if (a < 2) throw error(errc::invalid_argument, "a must be an integer >= 2");
  return Rational<Natural>(Natural(a - 1), Natural(a));
}

/// Mean of c_{a,b} over integers a = 2..b-1, each slope taken through the
/// general formula on the canonical form of a.
inline Rational<Natural> average_slope(const Natural& b) {
  require_squarefree_base(b);
  Natural total = 0;
  if (b < (Natural(1) << 31)) {
    const auto base = b.convert_to<std::uint64_t>();
    std::uint64_t sum = 0;
    for (std::uint64_t a = 2; a < base; ++a) {
      sum += slope_intercept(canonicalize(Rational<std::uint64_t>(a), base), base).c;
    }
    total = sum;
  } else {
    for (Natural a = 2; a < b; ++a) total += slope_intercept(canonicalize(Rational<Natural>(a), b), b).c;
  }
  return Rational<Natural>(total, b - 2);
}

}  // namespace ldc

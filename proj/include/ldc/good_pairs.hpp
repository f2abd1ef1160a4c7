#pragma once

// Good pairs (c, d): coefficient pairs of complexity functions c n + d that
// are realized by some admissible (a, b).  For a = (r/s) b^k the intercept is
// d = floor((b-1)/r) + floor((gcd(b,r)-1)/s), so enumerating canonical (r, s)
// per squarefree base yields every reachable d up to the enumeration bounds.

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include "ldc/complexity.hpp"
#include "ldc/number.hpp"

namespace ldc {

/// scale * b^power; power 0 gives an absolute limit.
struct Limit {
  std::uint64_t scale = 1;
  unsigned power = 1;

  std::uint64_t at(std::uint64_t b) const {
    std::uint64_t v = scale;
    for (unsigned i = 0; i < power; ++i) v *= b;
    return v;
  }

  Limit doubled() const { return {scale * 2, power}; }
};

struct EnumerationBounds {
  Limit r_max{1, 2};  // b^2
  Limit s_max{1, 1};  // b
  unsigned saturation_passes = 1;

  EnumerationBounds doubled() const { return {r_max.doubled(), s_max.doubled(), saturation_passes}; }
};

struct Witness {
  std::uint64_t b = 0;
  std::uint64_t r = 0;
  std::uint64_t s = 0;

  friend auto operator<=>(const Witness&, const Witness&) = default;
};

struct GoodPair {
  std::uint64_t c = 0;
  std::uint64_t d = 0;
  Witness witness;

  friend bool operator==(const GoodPair&, const GoodPair&) = default;
};

/// d -> lexicographically smallest witness.
using BaseIntercepts = std::map<std::uint64_t, Witness>;

namespace detail {

inline void keep_smallest(BaseIntercepts& out, std::uint64_t d, const Witness& w) {
  auto [it, inserted] = out.try_emplace(d, w);
  if (!inserted && w < it->second) it->second = w;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 1; k * k <= n; ++k) {
    if (n % k == 0) {
      out.push_back(k);
      if (k * k != n) out.push_back(n / k);
    }
  }
  return out;
}

}  // namespace detail

/// All intercepts d over canonical (r, s) with 2 <= r <= r_max, s <= s_max,
/// gcd(r, s) = 1 and 1 < r/s < b.
///
/// For r < b every pair is visited.  For r >= b the first floor term is 0 and
/// the second depends only on g = gcd(b, r) and s, so for each (s, g) only the
/// smallest r = g t with gcd(b/g, t) = 1 and gcd(r, s) = 1 is searched for.
inline BaseIntercepts good_ds_for_base(std::uint64_t b, const EnumerationBounds& bounds = {}) {
  require_squarefree_base(Natural(b));
  const std::uint64_t r_max = bounds.r_max.at(b);
  const std::uint64_t s_max = bounds.s_max.at(b);
  BaseIntercepts out;

  for (std::uint64_t r = 2; r < b && r <= r_max; ++r) {
    const std::uint64_t first = (b - 1) / r;
    const std::uint64_t g = std::gcd(b, r);
    for (std::uint64_t s = 1; s < r && s <= s_max; ++s) {
      if (std::gcd(r, s) != 1) continue;
      detail::keep_smallest(out, first + (g - 1) / s, Witness{b, r, s});
    }
  }

  for (std::uint64_t g : detail::divisors(b)) {
    const std::uint64_t cofactor = b / g;
    for (std::uint64_t s = 1; s <= s_max; ++s) {
      if (std::gcd(g, s) != 1) continue;
      // s < r < s b and r >= b
      const std::uint64_t lo = std::max(b, s + 1);
      const std::uint64_t hi = std::min(r_max, s * b - 1);
      if (lo > hi) continue;
      for (std::uint64_t t = (lo + g - 1) / g; t * g <= hi; ++t) {
        if (std::gcd(cofactor, t) != 1 || std::gcd(t * g, s) != 1) continue;
        detail::keep_smallest(out, (g - 1) / s, Witness{b, t * g, s});
        break;
      }
    }
  }
  return out;
}

/// Full table: c -> (d -> smallest witness), for 1 <= c <= c_max.  Bases
/// run over squarefree b in [5, 2 c_max + 2]; the extreme-value bounds
/// floor((b-1)/2) <= c <= b-1 rule out any larger base.
inline std::map<std::uint64_t, BaseIntercepts> good_pair_table(std::uint64_t c_max,
                                                               const EnumerationBounds& bounds = {}) {
  std::map<std::uint64_t, BaseIntercepts> table;
  for (std::uint64_t c = 1; c <= c_max; ++c) table[c];
  for (std::uint64_t b = 5; b <= 2 * c_max + 2; ++b) {
    if (!is_squarefree(b)) continue;
    for (const auto& [d, w] : good_ds_for_base(b, bounds)) {
      const std::uint64_t c = b - 1 - d;
      if (c < 1 || c > c_max) continue;
      detail::keep_smallest(table[c], d, w);
    }
  }
  return table;
}

/// G as a flat list ordered by (c, d).
inline std::vector<GoodPair> good_pairs(std::uint64_t c_max, const EnumerationBounds& bounds = {}) {
  std::vector<GoodPair> out;
  for (const auto& [c, ds] : good_pair_table(c_max, bounds)) {
    for (const auto& [d, w] : ds) out.push_back(GoodPair{c, d, w});
  }
  return out;
}

/// G(c) = { d : (c, d) in G }.
inline std::set<std::uint64_t> G_of_c(std::uint64_t c, const EnumerationBounds& bounds = {}) {
  if (c < 1) throw error(errc::invalid_argument, "c must be >= 1");
  std::set<std::uint64_t> out;
  for (std::uint64_t b = std::max<std::uint64_t>(5, c + 1); b <= 2 * c + 2; ++b) {
    if (!is_squarefree(b)) continue;
    const std::uint64_t d = b - 1 - c;
    if (good_ds_for_base(b, bounds).contains(d)) out.insert(d);
  }
  return out;
}

struct ConjectureRow {
  std::uint64_t c = 0;
  std::uint64_t count = 0;         // |G(c)|
  double ratio = 0;                // |G(c)| / sqrt(c)
  double cumulative_ratio = 0;     // sum_{c' <= c} |G(c')| / c^(3/2)
};

inline std::vector<ConjectureRow> conjecture_stats(std::uint64_t c_max, const EnumerationBounds& bounds = {}) {
  if (c_max < 5) throw error(errc::invalid_argument, "c_max must be >= 5");
  std::vector<ConjectureRow> rows;
  std::uint64_t running = 0;
  for (const auto& [c, ds] : good_pair_table(c_max, bounds)) {
    running += ds.size();
    const double cd = static_cast<double>(c);
    rows.push_back(ConjectureRow{c, ds.size(), static_cast<double>(ds.size()) / std::sqrt(cd),
                                 static_cast<double>(running) / std::pow(cd, 1.5)});
  }
  return rows;
}

/// True iff G(c), c <= c_max, is unchanged when both bounds are doubled
/// (repeated saturation_passes times).
inline bool saturation_check(std::uint64_t c_max, const EnumerationBounds& bounds = {}) {
  const auto d_sets = [&](const EnumerationBounds& eb) {
    std::map<std::uint64_t, std::set<std::uint64_t>> out;
    for (const auto& [c, ds] : good_pair_table(c_max, eb)) {
      for (const auto& [d, w] : ds) out[c].insert(d);
    }
    return out;
  };
  const auto base = d_sets(bounds);
  EnumerationBounds wider = bounds;
  for (unsigned pass = 0; pass < std::max(1U, bounds.saturation_passes); ++pass) {
    wider = wider.doubled();
    if (d_sets(wider) != base) return false;
  }
  return true;
}

}  // namespace ldc

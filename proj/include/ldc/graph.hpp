#pragma once

// Transition graphs, Rauzy graphs and cyclomatic complexity e - n + p of
// digit sequences, plus the five-block parse of the leading digits of 2^n.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ldc/complexity.hpp"
#include "ldc/digit_stream.hpp"

namespace ldc {

template <class Vertex>
struct DiGraph {
  std::set<Vertex> vertices;
  std::set<std::pair<Vertex, Vertex>> edges;

  void add_edge(const Vertex& u, const Vertex& v) {
    vertices.insert(u);
    vertices.insert(v);
    edges.emplace(u, v);
  }
};

using Block = std::vector<Digit>;
using TransitionGraph = DiGraph<Digit>;

struct RauzyGraph : DiGraph<Block> {
  std::size_t level = 1;
};

struct CyclomaticResult {
  std::size_t e = 0;
  std::size_t n = 0;
  std::size_t p = 0;
  std::int64_t C = 0;

  friend bool operator==(const CyclomaticResult&, const CyclomaticResult&) = default;
};

namespace detail {

template <class Vertex>
std::vector<std::vector<std::size_t>> adjacency(const DiGraph<Vertex>& g, bool reversed = false) {
  std::map<Vertex, std::size_t> index;
  for (const auto& v : g.vertices) index.emplace(v, index.size());
  std::vector<std::vector<std::size_t>> adj(g.vertices.size());
  for (const auto& [u, v] : g.edges) {
    if (reversed) {
      adj[index.at(v)].push_back(index.at(u));
    } else {
      adj[index.at(u)].push_back(index.at(v));
    }
  }
  return adj;
}

}  // namespace detail

/// Weakly connected components (union-find).
template <class Vertex>
std::size_t weak_component_count(const DiGraph<Vertex>& g) {
  const auto adj = detail::adjacency(g);
  std::vector<std::size_t> parent(adj.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t components = adj.size();
  for (std::size_t u = 0; u < adj.size(); ++u) {
    for (std::size_t v : adj[u]) {
      const std::size_t ru = find(u);
      const std::size_t rv = find(v);
      if (ru != rv) {
        parent[ru] = rv;
        --components;
      }
    }
  }
  return components;
}

/// Strongly connected components (Kosaraju, iterative).
template <class Vertex>
std::size_t strong_component_count(const DiGraph<Vertex>& g) {
  const auto adj = detail::adjacency(g);
  const auto radj = detail::adjacency(g, true);
  const std::size_t n = adj.size();
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next < adj[u].size()) {
        const std::size_t v = adj[u][next++];
        if (!seen[v]) {
          seen[v] = 1;
          stack.emplace_back(v, 0);
        }
      } else {
        order.push_back(u);
        stack.pop_back();
      }
    }
  }
  std::vector<char> assigned(n, 0);
  std::size_t components = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (assigned[*it]) continue;
    ++components;
    std::vector<std::size_t> stack{*it};
    assigned[*it] = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : radj[u]) {
        if (!assigned[v]) {
          assigned[v] = 1;
          stack.push_back(v);
        }
      }
    }
  }
  return components;
}

/// C = e - n + p, p counted as weakly connected components.
template <class Vertex>
CyclomaticResult cyclomatic(const DiGraph<Vertex>& g) {
  CyclomaticResult out;
  out.e = g.edges.size();
  out.n = g.vertices.size();
  out.p = weak_component_count(g);
  out.C = static_cast<std::int64_t>(out.e) - static_cast<std::int64_t>(out.n) + static_cast<std::int64_t>(out.p);
  return out;
}

inline TransitionGraph build_transition_graph(std::span<const Digit> digits) {
  if (digits.size() < 2) throw error(errc::prefix_too_short, "transition graph needs at least 2 digits");
  TransitionGraph g;
  for (std::size_t i = 0; i + 1 < digits.size(); ++i) g.add_edge(digits[i], digits[i + 1]);
  return g;
}

inline TransitionGraph build_transition_graph(const DigitSequencePrefix& prefix) {
  return build_transition_graph(std::span<const Digit>(prefix.digits));
}

/// Vertices are the distinct n-blocks; u -> v whenever u's last n - 1
/// digits start v, as witnessed by an (n + 1)-block of the prefix.
inline RauzyGraph build_rauzy(std::span<const Digit> digits, std::size_t n) {
  if (n == 0) throw error(errc::invalid_argument, "Rauzy level must be >= 1");
  if (digits.size() < n + 1) throw error(errc::prefix_too_short, "Rauzy graph needs at least n + 1 digits");
  RauzyGraph g;
  g.level = n;
  for (std::size_t i = 0; i + n < digits.size(); ++i) {
    g.add_edge(Block(digits.begin() + i, digits.begin() + i + n),
               Block(digits.begin() + i + 1, digits.begin() + i + n + 1));
  }
  return g;
}

inline RauzyGraph build_rauzy(const DigitSequencePrefix& prefix, std::size_t n) {
  return build_rauzy(std::span<const Digit>(prefix.digits), n);
}

template <class Graph>
struct GraphBuild {
  Graph graph;
  std::size_t prefix_length = 0;
  bool converged = false;
};

/// Rauzy graph of level n from a prefix long enough that p(n) and p(n + 1)
/// are stable across one doubling (same protocol as empirical_profile).
inline GraphBuild<RauzyGraph> converged_rauzy(const PowerSequence& seq, std::size_t n, std::size_t initial_prefix) {
  const auto profile = empirical_profile(seq, n + 1, std::max(initial_prefix, n + 1), ProfileMode::converged);
  const auto prefix = generate_prefix(seq, *profile.prefix_length);
  return {build_rauzy(prefix, n), prefix.size(), profile.converged};
}

inline GraphBuild<TransitionGraph> converged_transition_graph(const PowerSequence& seq, std::size_t initial_prefix) {
  const auto profile = empirical_profile(seq, 2, std::max<std::size_t>(initial_prefix, 2), ProfileMode::converged);
  const auto prefix = generate_prefix(seq, *profile.prefix_length);
  return {build_transition_graph(prefix), prefix.size(), profile.converged};
}

/// The five blocks 1248, 1249, 125, 136, 137 of the leading digits of 2^n.
enum class IyengarBlock { b1248, b1249, b125, b136, b137 };

inline std::string to_string(IyengarBlock block) {
  switch (block) {
    case IyengarBlock::b1248: return "1248";
    case IyengarBlock::b1249: return "1249";
    case IyengarBlock::b125: return "125";
    case IyengarBlock::b136: return "136";
    case IyengarBlock::b137: return "137";
  }
  return "?";
}

struct IyengarParse {
  std::vector<IyengarBlock> blocks;
  std::vector<Digit> trailing;  // unfinished final block, possibly empty
};

/// Deterministic parse: after "1" the next digit picks 2 or 3, after "12"
/// 4 or 5, after "124" 8 or 9, after "13" 6 or 7.  Requires a base-10 prefix
/// starting at exponent 0.
inline IyengarParse iyengar_parse(const DigitSequencePrefix& prefix) {
  if (prefix.base != 10 || prefix.start_exponent != 0) {
    throw error(errc::invalid_argument, "five-block parse needs base 10 digits starting at exponent 0");
  }
  const auto& s = prefix.digits;
  IyengarParse out;
  std::size_t i = 0;
  while (i < s.size()) {
    const std::size_t start = i;
    const auto at = [&](std::size_t k) -> std::optional<Digit> {
      if (start + k < s.size()) return s[start + k];
      return std::nullopt;
    };
    const auto mismatch = [&](std::size_t k) {
      return parse_mismatch_error(start + k, "no block matches at offset " + std::to_string(start + k));
    };
    const auto partial = [&] {
      out.trailing.assign(s.begin() + static_cast<std::ptrdiff_t>(start), s.end());
      return out;
    };
    if (*at(0) != 1) throw mismatch(0);
    const auto second = at(1);
    if (!second) return partial();
    std::optional<IyengarBlock> block;
    std::size_t len = 0;
    if (*second == 2) {
      const auto third = at(2);
      if (!third) return partial();
      if (*third == 5) {
        block = IyengarBlock::b125;
        len = 3;
      } else if (*third == 4) {
        const auto fourth = at(3);
        if (!fourth) return partial();
        if (*fourth == 8) {
          block = IyengarBlock::b1248;
        } else if (*fourth == 9) {
          block = IyengarBlock::b1249;
        } else {
          throw mismatch(3);
        }
        len = 4;
      } else {
        throw mismatch(2);
      }
    } else if (*second == 3) {
      const auto third = at(2);
      if (!third) return partial();
      if (*third == 6) {
        block = IyengarBlock::b136;
      } else if (*third == 7) {
        block = IyengarBlock::b137;
      } else {
        throw mismatch(2);
      }
      len = 3;
    } else {
      throw mismatch(1);
    }
    out.blocks.push_back(*block);
    i = start + len;
  }
  return out;
}

}  // namespace ldc

#pragma once

// Text, CSV and JSON encodings of profiles, torus sets, graphs and tables.
// Schemas for the JSON documents live in schemas/.

#include <cstdio>
#include <sstream>
#include <string>

#include "json.hpp"

#include "ldc/complexity.hpp"
#include "ldc/good_pairs.hpp"
#include "ldc/graph.hpp"
#include "ldc/torus.hpp"

namespace ldc {

using json = nlohmann::ordered_json;

inline std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

inline json natural_json(const Natural& n) {
  if (detail::fits_u64(n)) return n.convert_to<std::uint64_t>();
  return n.str();
}

inline std::string profile_csv(const ComplexityProfile& profile) {
  std::ostringstream out;
  out << "n,p,method,prefix_length\n";
  for (const auto& [n, p] : profile.points) {
    out << n << ',' << p << ',' << to_string(profile.method) << ',';
    if (profile.prefix_length) out << *profile.prefix_length;
    out << '\n';
  }
  return out.str();
}

inline json profile_json(const ComplexityProfile& profile, const Rational<Natural>& a, const Natural& b) {
  json points = json::array();
  for (const auto& [n, p] : profile.points) points.push_back({n, p});
  json out{{"a", a.str()}, {"b", natural_json(b)}, {"method", std::string(to_string(profile.method))}};
  if (profile.prefix_length) {
    out["prefix_length"] = *profile.prefix_length;
    out["converged"] = profile.converged;
  }
  out["points"] = std::move(points);
  return out;
}

inline json lk_set_json(const LkSet& set) {
  json points = json::array();
  for (const auto& p : set.sorted_by_value()) points.push_back(p.str());
  return json{{"k", set.k}, {"points", std::move(points)}};
}

inline json cyclomatic_json(const CyclomaticResult& r) {
  return json{{"e", r.e}, {"n", r.n}, {"p", r.p}, {"C", r.C}};
}

namespace detail {

inline json vertex_json(Digit d) { return d; }
inline json vertex_json(const Block& block) {
  json out = json::array();
  for (Digit d : block) out.push_back(d);
  return out;
}

inline std::string vertex_label(Digit d, std::uint32_t) { return std::to_string(d); }
inline std::string vertex_label(const Block& block, std::uint32_t base) { return format_digits(block, base); }

}  // namespace detail

/// {"vertices": [...], "edges": [[u, v], ...]}; Rauzy vertices are digit arrays.
template <class Vertex>
json graph_json(const DiGraph<Vertex>& g) {
  json vertices = json::array();
  for (const auto& v : g.vertices) vertices.push_back(detail::vertex_json(v));
  json edges = json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({detail::vertex_json(u), detail::vertex_json(v)});
  return json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

/// One "u v" line per edge.
template <class Vertex>
std::string edge_list(const DiGraph<Vertex>& g, std::uint32_t base) {
  std::string out;
  for (const auto& [u, v] : g.edges) {
    out += detail::vertex_label(u, base) + " " + detail::vertex_label(v, base) + "\n";
  }
  return out;
}

inline std::string good_pairs_csv(const std::vector<GoodPair>& pairs) {
  std::ostringstream out;
  out << "c,d,b,r,s\n";
  for (const auto& gp : pairs) {
    out << gp.c << ',' << gp.d << ',' << gp.witness.b << ',' << gp.witness.r << ',' << gp.witness.s << '\n';
  }
  return out.str();
}

inline std::string conjecture_csv(const std::vector<ConjectureRow>& rows) {
  std::ostringstream out;
  out << "c,count,ratio,cumulative_ratio\n";
  for (const auto& row : rows) {
    out << row.c << ',' << row.count << ',' << fixed6(row.ratio) << ',' << fixed6(row.cumulative_ratio) << '\n';
  }
  return out.str();
}

}  // namespace ldc

#pragma once

// Command-line front end.  run() is separate from main() so tests can drive
// every subcommand and inspect output and exit codes.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or precondition error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ldc/ldc.hpp"

namespace ldc::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kUsage = 2;

/// Runs fn(i) for i in [0, count) on up to `threads` workers; results keep index order.
template <class Fn>
auto parallel_map(std::size_t count, unsigned threads, Fn fn) {
  using Result = decltype(fn(std::size_t{0}));
  std::vector<std::optional<Result>> slots(count);
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) slots[i].emplace(fn(i));
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < count; i += threads) slots[i].emplace(fn(i));
      });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<Result> results;
  results.reserve(count);
  for (auto& slot : slots) results.push_back(std::move(*slot));
  return results;
}

struct Discrepancy {
  std::uint64_t b, r, s, k, formula, oracle;
};

struct VerifyReport {
  std::size_t bases = 0;
  std::size_t pairs = 0;
  std::size_t checks = 0;
  std::vector<Discrepancy> discrepancies;
};

/// formula vs. torus oracle for every squarefree b in [5, b_max] and every
/// canonical (r, s) with r <= r_max, s <= s_max.
inline VerifyReport verify_formula(std::uint64_t b_max, std::uint64_t k_max, std::uint64_t r_max,
                                   std::uint64_t s_max, unsigned threads) {
  std::vector<std::uint64_t> bases;
  for (std::uint64_t b = 5; b <= b_max; ++b) {
    if (is_squarefree(b)) bases.push_back(b);
  }
  struct PerBase {
    std::size_t pairs = 0;
    std::size_t checks = 0;
    std::vector<Discrepancy> bad;
  };
  const auto per_base = parallel_map(bases.size(), threads, [&](std::size_t idx) {
    const std::uint64_t b = bases[idx];
    PerBase out;
    for (std::uint64_t r = 2; r <= r_max; ++r) {
      for (std::uint64_t s = 1; s < r && s <= s_max; ++s) {
        if (std::gcd(r, s) != 1 || r >= s * b) continue;
        const Rational<Natural> a{Natural(r), Natural(s)};
        const auto pair = check_admissible(a, Natural(b));
        const auto line = complexity_line(pair);
        const auto oracle = lk_sizes(a, Natural(b), k_max);
        ++out.pairs;
        for (std::uint64_t k = 1; k <= k_max; ++k) {
          ++out.checks;
          const auto f = line.at(Natural(k)).template convert_to<std::uint64_t>();
          if (f != oracle[k - 1]) out.bad.push_back(Discrepancy{b, r, s, k, f, oracle[k - 1]});
        }
      }
    }
    return out;
  });
  VerifyReport report;
  report.bases = bases.size();
  for (const auto& pb : per_base) {
    report.pairs += pb.pairs;
    report.checks += pb.checks;
    report.discrepancies.insert(report.discrepancies.end(), pb.bad.begin(), pb.bad.end());
  }
  return report;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leading-digit sequences of a^n in base b and their block complexity"};
  app.require_subcommand(1, 1);

  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  std::string out_path;
  app.add_option("--threads", threads, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "Write output to PATH instead of stdout");

  std::string a_text;
  std::uint64_t b = 10;

  auto* digits = app.add_subcommand("digits", "Print leading digits of a^n");
  std::uint64_t count = 50;
  int start = 1;
  std::string mode = "exact";
  digits->add_option("--a", a_text, "Rational a as R or R/S")->required();
  digits->add_option("--b", b, "Base")->required();
  digits->add_option("--count", count, "Number of terms")->required();
  digits->add_option("--start", start, "First exponent")->check(CLI::IsMember({0, 1}));
  digits->add_option("--mode", mode, "exact or adaptive")->check(CLI::IsMember({"exact", "adaptive"}));

  auto* complexity = app.add_subcommand("complexity", "Block complexity profile p(1..n_max)");
  std::uint64_t n_max = 10;
  std::string method = "formula";
  std::size_t prefix_len = 100000;
  bool converge = false;
  std::string format = "csv";
  complexity->add_option("--a", a_text, "Rational a as R or R/S")->required();
  complexity->add_option("--b", b, "Base")->required();
  complexity->add_option("--n-max", n_max, "Largest block length")->required()->check(CLI::PositiveNumber);
  complexity->add_option("--method", method, "formula, oracle or empirical")
      ->required()
      ->check(CLI::IsMember({"formula", "oracle", "empirical"}));
  complexity->add_option("--prefix", prefix_len, "Prefix length for empirical counting");
  complexity->add_flag("--converge", converge, "Double the prefix until counts are stable");
  complexity->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand("verify", "Cross-check the closed form against the torus oracle");
  std::uint64_t b_max = 30;
  std::uint64_t k_max = 10;
  std::uint64_t r_max = 12;
  std::uint64_t s_max = 11;
  verify->add_option("--b-max", b_max, "Largest base")->required();
  verify->add_option("--k-max", k_max, "Largest block length")->check(CLI::PositiveNumber);
  verify->add_option("--r-max", r_max, "Largest numerator r");
  verify->add_option("--s-max", s_max, "Largest denominator s");

  auto* goodpairs = app.add_subcommand("goodpairs", "Good pairs (c, d) or conjecture statistics");
  std::uint64_t c_max = 50;
  bool stats = false;
  goodpairs->add_option("--c-max", c_max, "Largest slope c")->required()->check(CLI::PositiveNumber);
  goodpairs->add_flag("--stats", stats, "Emit |G(c)| statistics instead of the pair list");

  auto* graph = app.add_subcommand("graph", "Cyclomatic complexity of the transition or Rauzy graph");
  std::size_t rauzy = 0;
  std::size_t graph_prefix = 100000;
  std::string emit = "cyclomatic";
  graph->add_option("--a", a_text, "Rational a as R or R/S")->required();
  graph->add_option("--b", b, "Base")->required();
  graph->add_option("--rauzy", rauzy, "Rauzy level n (default: transition graph)")->check(CLI::PositiveNumber);
  graph->add_option("--prefix", graph_prefix, "Prefix length");
  graph->add_flag("--converge", converge, "Double the prefix until the graph is stable");
  graph->add_option("--emit", emit, "cyclomatic, json or edges")
      ->check(CLI::IsMember({"cyclomatic", "json", "edges"}));

  auto* average = app.add_subcommand("average", "Average slope over a = 2..b-1");
  std::optional<std::uint64_t> avg_b;
  std::optional<std::uint64_t> avg_b_max;
  auto* avg_b_opt = average->add_option("--b", avg_b, "Single base");
  auto* avg_bmax_opt = average->add_option("--b-max", avg_b_max, "All squarefree bases 5..B");
  avg_b_opt->excludes(avg_bmax_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (average->parsed() && !avg_b && !avg_b_max) {
    err << "average: one of --b or --b-max is required\n";
    return kUsage;
  }

  std::ostringstream buffer;
  int status = kOk;
  try {
    if (digits->parsed()) {
      const auto seq = make_power_sequence(parse_rational(a_text), Natural(b));
      const auto gen_mode = mode == "exact" ? GenerationMode::exact : GenerationMode::adaptive;
      buffer << to_text(generate_prefix(seq, count, gen_mode, start)) << '\n';
    } else if (complexity->parsed()) {
      const auto a = parse_rational(a_text);
      ComplexityProfile profile;
      if (method == "formula") {
        profile = formula_profile(check_admissible(a, Natural(b)), n_max);
      } else if (method == "oracle") {
        profile = oracle_profile(a, Natural(b), n_max);
      } else {
        profile = empirical_profile(make_power_sequence(a, Natural(b)), n_max, prefix_len,
                                    converge ? ProfileMode::converged : ProfileMode::fixed);
      }
      if (format == "json") {
        buffer << profile_json(profile, a, Natural(b)).dump() << '\n';
      } else {
        buffer << profile_csv(profile);
      }
    } else if (verify->parsed()) {
      if (b_max < 5) throw error(errc::invalid_argument, "--b-max must be >= 5");
      const auto report = verify_formula(b_max, k_max, r_max, s_max, threads);
      for (const auto& d : report.discrepancies) {
        buffer << "DISCREPANCY b=" << d.b << " a=" << d.r << '/' << d.s << " k=" << d.k << " formula=" << d.formula
               << " oracle=" << d.oracle << '\n';
      }
      buffer << "bases=" << report.bases << " pairs=" << report.pairs << " checks=" << report.checks
             << " discrepancies=" << report.discrepancies.size() << '\n';
      if (!report.discrepancies.empty()) status = kVerifyFailed;
    } else if (goodpairs->parsed()) {
      if (stats) {
        buffer << conjecture_csv(conjecture_stats(c_max));
      } else {
        buffer << good_pairs_csv(good_pairs(c_max));
      }
    } else if (graph->parsed()) {
      const auto seq = make_power_sequence(parse_rational(a_text), Natural(b));
      const auto base = static_cast<std::uint32_t>(b);
      const auto emit_graph = [&](const auto& g) {
        if (emit == "json") {
          buffer << graph_json(g).dump() << '\n';
        } else if (emit == "edges") {
          buffer << edge_list(g, base);
        } else {
          buffer << cyclomatic_json(cyclomatic(g)).dump() << '\n';
        }
      };
      if (rauzy > 0) {
        if (converge) {
          emit_graph(converged_rauzy(seq, rauzy, graph_prefix).graph);
        } else {
          emit_graph(build_rauzy(generate_prefix(seq, graph_prefix), rauzy));
        }
      } else if (converge) {
        emit_graph(converged_transition_graph(seq, graph_prefix).graph);
      } else {
        emit_graph(build_transition_graph(generate_prefix(seq, graph_prefix)));
      }
    } else if (average->parsed()) {
      std::vector<std::uint64_t> bases;
      if (avg_b) {
        bases.push_back(*avg_b);
      } else {
        for (std::uint64_t v = 5; v <= *avg_b_max; ++v) {
          if (is_squarefree(v)) bases.push_back(v);
        }
      }
      const auto values =
          parallel_map(bases.size(), threads, [&](std::size_t i) { return average_slope(Natural(bases[i])); });
      buffer << "b,cbar,cbar_decimal,deficit\n";
      for (std::size_t i = 0; i < bases.size(); ++i) {
        const auto& q = values[i];
        const double value = q.num().convert_to<double>() / q.den().convert_to<double>();
        buffer << bases[i] << ',' << q.str() << ',' << fixed6(value) << ','
               << fixed6(static_cast<double>(bases[i]) - value) << '\n';
      }
    }
  } catch (const error& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  if (out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "cannot open " << out_path << '\n';
      return kUsage;
    }
    file << buffer.str();
  }
  return status;
}

}  // namespace ldc::cli

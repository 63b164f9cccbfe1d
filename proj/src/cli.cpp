// Copyright 2026 The zqforce Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zqforce/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "zqforce/builders.hpp"
#include "zqforce/certify.hpp"
#include "zqforce/errors.hpp"
#include "zqforce/game.hpp"
#include "zqforce/graph_io.hpp"
#include "zqforce/inertia.hpp"
#include "zqforce/parallel.hpp"
#include "zqforce/zhat.hpp"

namespace zqforce::cli {

using nlohmann::json;

void to_json(json& j, const GraphInfo& r) {
  j = json{{"label", r.label}, {"n", r.n}, {"graph6", r.graph6}};
}
void from_json(const json& j, GraphInfo& r) {
  j.at("label").get_to(r.label);
  j.at("n").get_to(r.n);
  j.at("graph6").get_to(r.graph6);
}

void to_json(json& j, const ZqEntry& r) {
  j = json{{"q", r.q}, {"value", r.value}};
  if (r.upfront) j["upfront"] = *r.upfront;
  if (r.oracle) j["oracle"] = *r.oracle;
}
void from_json(const json& j, ZqEntry& r) {
  j.at("q").get_to(r.q);
  j.at("value").get_to(r.value);
  r.upfront = j.contains("upfront") ? std::optional<int>(j.at("upfront").get<int>()) : std::nullopt;
  r.oracle = j.contains("oracle") ? std::optional<int>(j.at("oracle").get<int>()) : std::nullopt;
}

void to_json(json& j, const ZqReport& r) {
  j = json{{"schema", kSchemaVersion}, {"command", "zq"},       {"graph", r.graph},
           {"loops", r.loops},         {"values", r.values},    {"oracle_ok", r.oracle_ok},
           {"elapsed_seconds", r.elapsed_seconds}};
}
void from_json(const json& j, ZqReport& r) {
  j.at("graph").get_to(r.graph);
  j.at("loops").get_to(r.loops);
  j.at("values").get_to(r.values);
  j.at("oracle_ok").get_to(r.oracle_ok);
  j.at("elapsed_seconds").get_to(r.elapsed_seconds);
}

void to_json(json& j, const ZhatReport& r) {
  j = json{{"schema", kSchemaVersion}, {"command", "zhat"},         {"graph", r.graph},
           {"q", r.q},                 {"value", r.value},          {"witnesses", r.witnesses},
           {"elapsed_seconds", r.elapsed_seconds}};
}
void from_json(const json& j, ZhatReport& r) {
  j.at("graph").get_to(r.graph);
  j.at("q").get_to(r.q);
  j.at("value").get_to(r.value);
  j.at("witnesses").get_to(r.witnesses);
  j.at("elapsed_seconds").get_to(r.elapsed_seconds);
}

void to_json(json& j, const InertiaReport& r) {
  j = json{{"schema", kSchemaVersion}, {"command", "inertia"},
           {"graph", r.graph},         {"zq", r.zq},
           {"trials", r.trials},       {"seed", r.seed},
           {"excluded", r.excluded},   {"certified", r.certified},
           {"grid", r.grid},           {"elapsed_seconds", r.elapsed_seconds}};
}
void from_json(const json& j, InertiaReport& r) {
  j.at("graph").get_to(r.graph);
  j.at("zq").get_to(r.zq);
  j.at("trials").get_to(r.trials);
  j.at("seed").get_to(r.seed);
  j.at("excluded").get_to(r.excluded);
  j.at("certified").get_to(r.certified);
  j.at("grid").get_to(r.grid);
  j.at("elapsed_seconds").get_to(r.elapsed_seconds);
}

void to_json(json& j, const CertifyReport& r) {
  j = json{{"schema", kSchemaVersion},
           {"command", "certify"},
           {"source", r.source},
           {"n", r.n},
           {"inertia", {r.p, r.q, r.z}},
           {"min_eigenvalue", r.min_eigenvalue},
           {"max_eigenvalue", r.max_eigenvalue},
           {"eigenvalues", r.eigenvalues}};
}
void from_json(const json& j, CertifyReport& r) {
  j.at("source").get_to(r.source);
  j.at("n").get_to(r.n);
  const json& t = j.at("inertia");
  r.p = t.at(0).get<int>();
  r.q = t.at(1).get<int>();
  r.z = t.at(2).get<int>();
  j.at("min_eigenvalue").get_to(r.min_eigenvalue);
  j.at("max_eigenvalue").get_to(r.max_eigenvalue);
  j.at("eigenvalues").get_to(r.eigenvalues);
}

namespace {

struct GraphSource {
  std::string graph6;
  std::string edges_file;
  std::string builder;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void add_graph_source(CLI::App* sub, GraphSource& src) {
  auto* g6 = sub->add_option("--graph6", src.graph6, "Graph in graph6 encoding");
  auto* edges = sub->add_option("--edges", src.edges_file, "Edge-list file: n, then u v pairs");
  auto* builder = sub->add_option(
      "--builder", src.builder,
      "Named graph NAME[:a,b,...]: path:N star:P complete:N empty:N cycle:N "
      "multipartite:A,B,... petersen:M,K desargues barioli_fallat");
  g6->excludes(edges)->excludes(builder);
  edges->excludes(builder);
}

Graph load_graph(const GraphSource& src) {
  if (!src.graph6.empty()) return parse_graph6(src.graph6);
  if (!src.edges_file.empty()) return parse_edge_list(read_file(src.edges_file));
  if (!src.builder.empty()) return build_named(src.builder);
  throw ArgumentError("one of --graph6, --edges or --builder is required");
}

GraphInfo describe(const Graph& g) {
  return GraphInfo{g.label().empty() ? emit_graph6(g) : g.label(), g.n(), emit_graph6(g)};
}

int parse_q_token(std::string_view token, int n) {
  if (token == "n") return n;
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
    throw ArgumentError("bad q value '" + std::string(token) + "'");
  }
  return value;
}

// "3", "0..5", "2..n"
std::vector<int> resolve_qs(const std::vector<std::string>& specs, int n) {
  std::vector<int> qs;
  if (specs.empty()) {
    for (int q = 0; q <= n; ++q) qs.push_back(q);
    return qs;
  }
  for (const std::string& spec : specs) {
    const std::size_t dots = spec.find("..");
    if (dots == std::string::npos) {
      qs.push_back(parse_q_token(spec, n));
      continue;
    }
    const int lo = parse_q_token(std::string_view(spec).substr(0, dots), n);
    const int hi = parse_q_token(std::string_view(spec).substr(dots + 2), n);
    if (lo > hi) throw ArgumentError("empty q range '" + spec + "'");
    for (int q = lo; q <= hi; ++q) qs.push_back(q);
  }
  return qs;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::vector<int>> as_pairs(const std::vector<std::pair<int, int>>& points) {
  std::vector<std::vector<int>> out;
  for (auto [p, q] : points) out.push_back({p, q});
  return out;
}

struct ZqArgs {
  GraphSource src;
  std::vector<std::string> qs;
  bool upfront = false;
  bool oracle = false;
  std::string loops;
  int threads = 0;
  bool json = false;
  bool verbose = false;
};

int cmd_zq(const ZqArgs& a, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const Graph g = load_graph(a.src);
  LoopAssignment loops(g.n());
  if (!a.loops.empty()) {
    loops = LoopAssignment::parse(a.loops);
    if (loops.n() != g.n()) throw ArgumentError("--loops needs one character per vertex");
  }
  SolverOptions opts;
  opts.threads = a.threads > 0 ? a.threads : default_threads();
  if (a.verbose) {
    opts.progress = [&err](int layer, std::size_t count) {
      err << "  layer |U|=" << layer << ": " << count << " closed sets\n";
    };
  }

  ZqReport report;
  report.graph = describe(g);
  report.loops = a.loops;
  for (int q : resolve_qs(a.qs, g.n())) {
    const auto q_start = std::chrono::steady_clock::now();
    ZqEntry entry;
    entry.q = q;
    entry.value = zq_looped(g, loops, q, opts).tokens;
    if (a.upfront) entry.upfront = zq_upfront_looped(g, loops, q, opts);
    if (a.oracle) {
      entry.oracle = minimax_oracle(g, loops, q);
      if (*entry.oracle != entry.value) report.oracle_ok = false;
    }
    if (g.n() >= 16 || a.verbose) {
      err << "zq: q=" << q << " value=" << entry.value << " (" << seconds_since(q_start)
          << " s)\n";
    }
    report.values.push_back(entry);
  }
  report.elapsed_seconds = seconds_since(start);

  if (a.json) {
    out << json(report).dump(2) << '\n';
  } else {
    out << "graph: " << report.graph.label << " n=" << report.graph.n
        << " graph6=" << report.graph.graph6 << '\n';
    for (const ZqEntry& e : report.values) {
      out << "Z_" << e.q << " = " << e.value;
      if (e.upfront) out << "  upfront = " << *e.upfront;
      if (e.oracle) out << "  oracle = " << *e.oracle << (*e.oracle == e.value ? "" : " MISMATCH");
      out << '\n';
    }
    out << "elapsed: " << report.elapsed_seconds << " s\n";
  }
  if (!report.oracle_ok) {
    err << "zq: oracle mismatch\n";
    return kExitMismatch;
  }
  return kExitOk;
}

struct ZhatArgs {
  GraphSource src;
  int q = 0;
  bool witnesses = false;
  bool force = false;
  int threads = 0;
  bool json = false;
};

int cmd_zhat(const ZhatArgs& a, std::ostream& out, std::ostream&) {
  const auto start = std::chrono::steady_clock::now();
  const Graph g = load_graph(a.src);
  ZhatOptions opts;
  opts.threads = a.threads > 0 ? a.threads : default_threads();
  opts.force = a.force;

  ZhatReport report;
  report.graph = describe(g);
  report.q = a.q;
  const std::vector<LoopAssignment> witnesses = zhat_witness(g, a.q, opts);
  report.value = zq_looped(g, witnesses.front(), a.q).tokens;
  if (a.witnesses) {
    for (const LoopAssignment& l : witnesses) report.witnesses.push_back(l.to_string());
  }
  report.elapsed_seconds = seconds_since(start);

  if (a.json) {
    out << json(report).dump(2) << '\n';
  } else {
    out << "graph: " << report.graph.label << " n=" << report.graph.n << '\n';
    out << "Zhat_" << report.q << " = " << report.value << '\n';
    if (a.witnesses) {
      out << "witnesses (" << report.witnesses.size() << "):\n";
      for (const std::string& w : report.witnesses) out << "  " << w << '\n';
    }
    out << "elapsed: " << report.elapsed_seconds << " s\n";
  }
  return kExitOk;
}

struct InertiaArgs {
  GraphSource src;
  int sample = 0;
  unsigned long long seed = 1;
  double diag_zero_prob = 0.5;
  std::string out_csv;
  int threads = 0;
  bool json = false;
};

int cmd_inertia(const InertiaArgs& a, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const Graph g = load_graph(a.src);
  SolverOptions opts;
  opts.threads = a.threads > 0 ? a.threads : default_threads();

  InertiaReport report;
  report.graph = describe(g);
  report.trials = a.sample;
  report.seed = a.seed;
  for (int q = 0; q <= g.n(); ++q) {
    report.zq.push_back(zq(g, q, opts).tokens);
    if (g.n() >= 16) err << "inertia: Z_" << q << " = " << report.zq.back() << '\n';
  }
  InertiaRegion region = excluded_from_zq(g.n(), report.zq);
  if (a.sample > 0) {
    const InertiaRegion sampled =
        sample_inertia_points(g, a.sample, a.seed, a.diag_zero_prob, opts.threads);
    try {
      region = merge(region, sampled);
    } catch (const ContradictionError& e) {
      err << "inertia: contradiction at (" << e.p() << "," << e.q() << ")\n";
      return kExitMismatch;
    }
  }
  report.excluded = as_pairs(region.points(PointStatus::kExcluded));
  report.certified = as_pairs(region.points(PointStatus::kCertified));
  report.grid = render_grid(region);
  report.elapsed_seconds = seconds_since(start);

  if (!a.out_csv.empty()) {
    std::ofstream csv(a.out_csv, std::ios::binary);
    if (!csv) throw ParseError("cannot write '" + a.out_csv + "'");
    csv << render_csv(region);
  }
  if (a.json) {
    out << json(report).dump(2) << '\n';
  } else {
    out << "graph: " << report.graph.label << " n=" << report.graph.n << '\n';
    out << "Z_q:";
    for (int v : report.zq) out << ' ' << v;
    out << '\n' << report.grid;
  }
  return kExitOk;
}

struct CertifyArgs {
  std::string construction;
  std::string matrix_file;
  double shift = 0.0;
  double tol = kExactTolerance;
  std::string export_file;
  bool json = false;
};

int cmd_certify(const CertifyArgs& a, std::ostream& out, std::ostream&) {
  WeightedGraphMatrix m;
  std::string source;
  if (!a.construction.empty()) {
    if (a.construction == "desargues66") {
      m = desargues_66(SpokeParity::kEven);
    } else if (a.construction == "desargues66-odd") {
      m = desargues_66(SpokeParity::kOdd);
    } else {
      throw ArgumentError("unknown construction '" + a.construction + "'");
    }
    source = a.construction;
  } else if (!a.matrix_file.empty()) {
    m = parse_matrix(read_file(a.matrix_file));
    source = a.matrix_file;
  } else {
    throw ArgumentError("one of --construction or --matrix is required");
  }
  if (a.shift != 0.0) m = shift(m, a.shift);
  if (!a.export_file.empty()) {
    std::ofstream dump(a.export_file, std::ios::binary);
    if (!dump) throw ParseError("cannot write '" + a.export_file + "'");
    dump << emit_matrix(m);
  }
  const InertiaTriple t = matrix_inertia(m, a.tol);
  CertifyReport report;
  report.source = source;
  report.n = m.n();
  report.p = t.p;
  report.q = t.q;
  report.z = t.z;
  report.eigenvalues = symmetric_eigenvalues(m.dense(), m.n());
  if (!report.eigenvalues.empty()) {
    report.min_eigenvalue = report.eigenvalues.front();
    report.max_eigenvalue = report.eigenvalues.back();
  }
  if (a.json) {
    out << json(report).dump(2) << '\n';
  } else {
    char buf[128];
    out << "source: " << source << " n=" << report.n << '\n';
    out << "inertia: (" << t.p << "," << t.q << "," << t.z << ")\n";
    std::snprintf(buf, sizeof buf, "eigenvalues: min %.12g max %.12g\n", report.min_eigenvalue,
                  report.max_eigenvalue);
    out << buf;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero forcing game solvers and inertia-set bounds", "zqforce"};
  app.require_subcommand(1);

  ZqArgs zq_args;
  CLI::App* zq_cmd = app.add_subcommand("zq", "Compute Z_q values of the forcing game");
  add_graph_source(zq_cmd, zq_args.src);
  zq_cmd->add_option("--q", zq_args.qs, "q value or range a..b (repeatable; 'n' = order)");
  zq_cmd->add_flag("--upfront", zq_args.upfront, "Also compute the spend-up-front variant");
  zq_cmd->add_flag("--oracle", zq_args.oracle, "Cross-check against the minimax oracle");
  zq_cmd->add_option("--loops", zq_args.loops, "Per-vertex loop string over L/U/.");
  zq_cmd->add_option("--threads", zq_args.threads, "Worker threads (default: all cores)");
  zq_cmd->add_flag("--json", zq_args.json, "Emit JSON");
  zq_cmd->add_flag("--verbose", zq_args.verbose, "Per-layer progress on stderr");

  ZhatArgs zhat_args;
  CLI::App* zhat_cmd = app.add_subcommand("zhat", "Maximize Z_q over loop assignments");
  add_graph_source(zhat_cmd, zhat_args.src);
  zhat_cmd->add_option("--q", zhat_args.q, "q value")->required();
  zhat_cmd->add_flag("--witnesses", zhat_args.witnesses, "List maximizing assignments");
  zhat_cmd->add_flag("--force", zhat_args.force, "Allow more than 16 vertices");
  zhat_cmd->add_option("--threads", zhat_args.threads, "Worker threads");
  zhat_cmd->add_flag("--json", zhat_args.json, "Emit JSON");

  InertiaArgs inertia_args;
  CLI::App* inertia_cmd =
      app.add_subcommand("inertia", "Excluded and certified inertia points");
  add_graph_source(inertia_cmd, inertia_args.src);
  inertia_cmd->add_option("--sample", inertia_args.sample, "Random matrices to sample");
  inertia_cmd->add_option("--seed", inertia_args.seed, "Sampling seed");
  inertia_cmd->add_option("--diag-zero-prob", inertia_args.diag_zero_prob,
                          "Probability of a zero diagonal entry")
      ->check(CLI::Range(0.0, 1.0));
  inertia_cmd->add_option("--out", inertia_args.out_csv, "Write the region as CSV");
  inertia_cmd->add_option("--threads", inertia_args.threads, "Worker threads");
  inertia_cmd->add_flag("--json", inertia_args.json, "Emit JSON");

  CertifyArgs certify_args;
  CLI::App* certify_cmd = app.add_subcommand("certify", "Inertia of an explicit matrix");
  auto* construction = certify_cmd->add_option(
      "--construction", certify_args.construction, "desargues66 or desargues66-odd");
  auto* matrix = certify_cmd->add_option("--matrix", certify_args.matrix_file,
                                         "Matrix file: n, then n rows of n reals");
  construction->excludes(matrix);
  certify_cmd->add_option("--shift", certify_args.shift, "Add C times the identity");
  certify_cmd->add_option("--tol", certify_args.tol, "Relative zero-eigenvalue tolerance");
  certify_cmd->add_option("--export", certify_args.export_file, "Write the matrix to a file");
  certify_cmd->add_flag("--json", certify_args.json, "Emit JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "zqforce: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (zq_cmd->parsed()) return cmd_zq(zq_args, out, err);
    if (zhat_cmd->parsed()) return cmd_zhat(zhat_args, out, err);
    if (inertia_cmd->parsed()) return cmd_inertia(inertia_args, out, err);
    if (certify_cmd->parsed()) return cmd_certify(certify_args, out, err);
  } catch (const CapacityError& e) {
    err << "zqforce: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const ContradictionError& e) {
    err << "zqforce: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "zqforce: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace zqforce::cli

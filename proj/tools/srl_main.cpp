// srl: solve, enumerate and trace self-referential truth value equations.
#include <chrono>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "srl/srl.h"

namespace {

using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kUsage = 1, kNoSolution = 2, kCostGuard = 3 };

struct Failure {
  int code;
  std::string message;
};

struct Deleter {
  void operator()(srl_collection* p) const { srl_collection_free(p); }
  void operator()(srl_system* p) const { srl_system_free(p); }
  void operator()(srl_result* p) const { srl_result_free(p); }
  void operator()(srl_solution_set* p) const { srl_solution_set_free(p); }
};
template <class T>
using Handle = std::unique_ptr<T, Deleter>;

void check(srl_status st, const std::string& context) {
  if (st == SRL_OK) return;
  const int code = st == SRL_ERR_COST_GUARD ? kCostGuard : kUsage;
  throw Failure{code, context + ": " + srl_last_error()};
}

struct Options {
  std::string input;
  std::string family = "standard";
  std::string solver = "control";
  std::optional<double> k;
  std::optional<long long> max_iters;
  std::optional<double> tol;
  unsigned long long seed = 1;
  std::string x0;
  std::string trace;
  bool ratio = false;
  std::string format = "json";
  double resolution = 0.01;
  std::optional<double> threshold;
  int starts = 10;
  std::string k_grid;
  std::string out;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Shortest round-trip form for human-readable text.
std::string brief(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
      ++used;
    if (item.empty() || used != item.size())
      throw Failure{kUsage, std::string("bad number in ") + what + ": '" + item + "'"};
    out.push_back(v);
  }
  if (out.empty()) throw Failure{kUsage, std::string(what) + " is empty"};
  return out;
}

Handle<srl_collection> load(const std::string& input) {
  srl_collection* raw = nullptr;
  namespace fs = std::filesystem;
  std::error_code ec;
  const bool is_file = fs::is_regular_file(input, ec) ||
                       (input.size() > 4 && input.ends_with(".srl"));
  if (is_file) {
    const srl_status st = srl_collection_load_file(input.c_str(), &raw);
    if (st == SRL_ERR_PARSE) throw Failure{kUsage, input + ":" + srl_last_error()};
    check(st, input);
  } else {
    check(srl_collection_builtin(input.c_str(), &raw), input);
  }
  return Handle<srl_collection>(raw);
}

srl_family family_of(const Options& o) {
  srl_family f;
  if (srl_family_from_name(o.family.c_str(), &f) != SRL_OK)
    throw Failure{kUsage, "unknown family '" + o.family +
                              "' (standard, algebraic, bounded, drastic)"};
  return f;
}

Handle<srl_system> compile(const srl_collection* c, srl_family f) {
  srl_system* raw = nullptr;
  check(srl_system_compile(c, f, &raw), "compile");
  return Handle<srl_system>(raw);
}

srl_solver_config config_of(const Options& o) {
  srl_method m;
  if (srl_method_from_name(o.solver.c_str(), &m) != SRL_OK)
    throw Failure{kUsage, "unknown solver '" + o.solver + "' (nr, sd, control)"};
  srl_solver_config cfg;
  srl_solver_config_default(m, &cfg);
  if (o.k) cfg.k = *o.k;
  if (o.max_iters) cfg.max_iters = *o.max_iters;
  if (o.tol) cfg.tol_residual = *o.tol;
  cfg.seed = o.seed;
  return cfg;
}

void warn_existence(const srl_result* r) {
  if (srl_result_existence_warning(r))
    std::cerr << "warning: operator family is not continuous; a consistent "
                 "assignment need not exist\n";
}

struct Run {
  Handle<srl_result> result;
  double duration_ms = 0.0;
};

Run run_solve(const srl_system* sys, const std::optional<std::vector<double>>& x0,
              const srl_solver_config& cfg) {
  if (x0 && x0->size() != srl_system_dimension(sys))
    throw Failure{kUsage, "--x0 needs " + std::to_string(srl_system_dimension(sys)) +
                              " values"};
  srl_result* raw = nullptr;
  const auto start = std::chrono::steady_clock::now();
  check(srl_solve(sys, x0 ? x0->data() : nullptr, &cfg, &raw), "solve");
  const auto stop = std::chrono::steady_clock::now();
  Run run{Handle<srl_result>(raw),
          std::chrono::duration<double, std::milli>(stop - start).count()};
  warn_existence(run.result.get());
  return run;
}

std::vector<double> final_x(const srl_result* r) {
  std::vector<double> x(srl_result_dimension(r));
  srl_result_x(r, x.data());
  return x;
}

void report(const Options& o, const srl_solver_config& cfg, const Run& run) {
  const srl_result* r = run.result.get();
  const auto x = final_x(r);
  const char* status = srl_solve_status_name(srl_result_status(r));
  if (o.format == "text") {
    std::cout << "input:      " << o.input << "\n"
              << "family:     " << o.family << "\n"
              << "solver:     " << srl_method_name(cfg.method) << " (k=" << brief(cfg.k)
              << ", seed=" << cfg.seed << ")\n"
              << "status:     " << status << "\n"
              << "iterations: " << srl_result_iterations(r) << "\n"
              << "x:         ";
    for (double v : x) std::cout << ' ' << brief(v);
    std::cout << "\nJ:          " << brief(srl_result_inconsistency(r)) << "\n";
    return;
  }
  json j;
  j["input"] = o.input;
  j["family"] = o.family;
  j["solver"] = srl_method_name(cfg.method);
  j["k"] = cfg.k;
  j["seed"] = cfg.seed;
  j["status"] = status;
  j["iterations"] = srl_result_iterations(r);
  j["x"] = x;
  j["J"] = srl_result_inconsistency(r);
  j["duration_ms"] = run.duration_ms;
  std::cout << j.dump() << "\n";
}

void write_trajectory(const std::string& path, const srl_result* r, bool ratio) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kUsage, "cannot open trace file '" + path + "'"};
  const std::size_t m = srl_result_dimension(r);
  out << "t";
  for (std::size_t i = 1; i <= m; ++i) out << ",x" << i;
  out << ",J";
  if (ratio) out << ",ratio";
  out << "\n";
  std::vector<double> x(m);
  double prev_j = 0.0;
  for (std::size_t i = 0; i < srl_result_trajectory_length(r); ++i) {
    int64_t t = 0;
    double j = 0.0;
    check(srl_result_trajectory_point(r, i, &t, x.data(), &j), "trajectory");
    out << t;
    for (double v : x) out << ',' << fmt(v);
    out << ',' << fmt(j);
    if (ratio) {
      out << ',';
      // |h| ratio between consecutive recorded points.
      if (i > 0 && prev_j > 0.0) out << fmt(std::sqrt(j / prev_j));
    }
    out << "\n";
    prev_j = j;
  }
  out.flush();
  if (!out) throw Failure{kUsage, "failed writing trace file '" + path + "'"};
}

int exit_for(const srl_result* r) {
  return srl_result_status(r) == SRL_SOLVE_CONVERGED ? kOk : kNoSolution;
}

int cmd_solve(const Options& o, bool tracing) {
  auto coll = load(o.input);
  auto sys = compile(coll.get(), family_of(o));
  auto cfg = config_of(o);
  std::optional<std::vector<double>> x0;
  if (!o.x0.empty()) x0 = parse_list(o.x0, "--x0");
  if (tracing) {
    cfg.record_trajectory = 1;
    // Fail on an unwritable path before spending time solving.
    std::ofstream probe(o.trace, std::ios::binary);
    if (!probe) throw Failure{kUsage, "cannot open trace file '" + o.trace + "'"};
  }
  const Run run = run_solve(sys.get(), x0, cfg);
  if (tracing) write_trajectory(o.trace, run.result.get(), o.ratio);
  report(o, cfg, run);
  return exit_for(run.result.get());
}

int cmd_oracle(const Options& o) {
  auto coll = load(o.input);
  auto sys = compile(coll.get(), family_of(o));
  const double threshold =
      o.threshold ? *o.threshold : srl_default_threshold(sys.get(), o.resolution);
  srl_solution_set* raw = nullptr;
  check(srl_oracle_grid(sys.get(), o.resolution, threshold, 1, &raw), "oracle");
  Handle<srl_solution_set> set(raw);
  const std::size_t m = srl_system_dimension(sys.get());
  const std::size_t n = srl_solution_set_count(set.get());

  json clusters = json::array();
  std::vector<double> rep(m), lo(m), hi(m);
  for (std::size_t i = 0; i < n; ++i) {
    double j = 0.0;
    std::size_t size = 0;
    check(srl_solution_set_cluster(set.get(), i, rep.data(), &j, &size, lo.data(), hi.data()),
          "oracle");
    if (o.format == "text") {
      std::cout << "cluster " << i + 1 << ": x =";
      for (double v : rep) std::cout << ' ' << brief(v);
      std::cout << "  J = " << brief(j) << "  size = " << size << "  box =";
      for (std::size_t d = 0; d < m; ++d)
        std::cout << " [" << brief(lo[d]) << ", " << brief(hi[d]) << "]";
      std::cout << "\n";
    } else {
      clusters.push_back(
          {{"representative", rep}, {"J", j}, {"size", size}, {"lo", lo}, {"hi", hi}});
    }
  }
  if (o.format == "text") {
    std::cout << n << " cluster(s) at resolution " << brief(o.resolution)
              << ", threshold " << brief(threshold) << "\n";
  } else {
    json j;
    j["input"] = o.input;
    j["family"] = o.family;
    j["resolution"] = o.resolution;
    j["threshold"] = threshold;
    j["clusters"] = clusters;
    std::cout << j.dump() << "\n";
  }
  return n > 0 ? kOk : kNoSolution;
}

int cmd_sweep(const Options& o) {
  auto coll = load(o.input);
  auto sys = compile(coll.get(), family_of(o));
  const auto base = config_of(o);
  if (o.starts < 1) throw Failure{kUsage, "--starts must be at least 1"};
  const std::vector<double> ks =
      o.k_grid.empty() ? std::vector<double>{base.k} : parse_list(o.k_grid, "--k-grid");
  const std::size_t m = srl_system_dimension(sys.get());

  std::ostringstream csv;
  csv << "seed,k,status,iterations,J";
  for (std::size_t i = 1; i <= m; ++i) csv << ",x" << i;
  csv << "\n";
  bool all_converged = true;
  for (int s = 0; s < o.starts; ++s) {
    for (double k : ks) {
      auto cfg = base;
      cfg.seed = o.seed + static_cast<unsigned long long>(s);
      cfg.k = k;
      const Run run = run_solve(sys.get(), std::nullopt, cfg);
      const srl_result* r = run.result.get();
      all_converged = all_converged && srl_result_status(r) == SRL_SOLVE_CONVERGED;
      csv << cfg.seed << ',' << fmt(k) << ',' << srl_solve_status_name(srl_result_status(r))
          << ',' << srl_result_iterations(r) << ',' << fmt(srl_result_inconsistency(r));
      for (double v : final_x(r)) csv << ',' << fmt(v);
      csv << "\n";
    }
  }
  if (o.out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(o.out, std::ios::binary);
    out << csv.str();
    out.flush();
    if (!out) throw Failure{kUsage, "cannot write '" + o.out + "'"};
  }
  return all_converged ? kOk : kNoSolution;
}

int cmd_list() {
  for (std::size_t i = 0; i < srl_corpus_count(); ++i)
    std::cout << srl_corpus_name(i) << "\t" << srl_corpus_description(i) << "\n";
  return kOk;
}

int cmd_show(const Options& o) {
  auto coll = load(o.input);
  std::size_t needed = 0;
  srl_collection_format(coll.get(), nullptr, 0, &needed);
  std::string text(needed, '\0');
  check(srl_collection_format(coll.get(), text.data(), text.size(), nullptr), "format");
  text.resize(needed - 1);
  std::cout << text;
  return kOk;
}

void add_solver_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--solver", o.solver, "nr, sd or control")->capture_default_str();
  cmd->add_option("--k", o.k, "gain in (0,1]");
  cmd->add_option("--max-iters", o.max_iters, "iteration limit");
  cmd->add_option("--tol", o.tol, "inconsistency tolerance");
  cmd->add_option("--seed", o.seed, "seed for the random start")->capture_default_str();
  cmd->add_option("--format", o.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Consistent fuzzy truth values for self-referential sentences"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(srl_version()));

  auto input = [&](CLI::App* cmd) {
    cmd->add_option("input", o.input, "corpus name or .srl file")->required();
    cmd->add_option("--family", o.family, "standard, algebraic, bounded or drastic")
        ->capture_default_str();
  };

  auto* solve = app.add_subcommand("solve", "solve the truth value equations");
  input(solve);
  add_solver_flags(solve, o);
  solve->add_option("--x0", o.x0, "comma-separated start point");
  solve->add_option("--trace", o.trace, "also write the trajectory CSV here");
  solve->add_flag("--ratio", o.ratio, "append the residual ratio column to the trace");

  auto* trace = app.add_subcommand("trace", "solve and write the trajectory as CSV");
  input(trace);
  add_solver_flags(trace, o);
  trace->add_option("--x0", o.x0, "comma-separated start point");
  trace->add_option("--trace", o.trace, "trajectory CSV path")->required();
  trace->add_flag("--ratio", o.ratio, "append the residual ratio column");

  auto* oracle = app.add_subcommand("oracle", "enumerate solutions on a grid");
  input(oracle);
  oracle->add_option("--resolution", o.resolution, "grid spacing")->capture_default_str();
  oracle->add_option("--threshold", o.threshold, "inconsistency cut-off");
  oracle->add_option("--format", o.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "multi-start runs as CSV");
  input(sweep);
  add_solver_flags(sweep, o);
  sweep->add_option("--starts", o.starts, "number of seeds")->capture_default_str();
  sweep->add_option("--k-grid", o.k_grid, "comma-separated gains");
  sweep->add_option("--out", o.out, "CSV path (default stdout)");

  auto* list = app.add_subcommand("list", "list built-in collections");
  auto* show = app.add_subcommand("show", "print a collection in canonical form");
  show->add_option("input", o.input, "corpus name or .srl file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return cmd_solve(o, !o.trace.empty());
    if (*trace) return cmd_solve(o, true);
    if (*oracle) return cmd_oracle(o);
    if (*sweep) return cmd_sweep(o);
    if (*list) return cmd_list();
    if (*show) return cmd_show(o);
  } catch (const Failure& f) {
    std::cerr << "srl: " << f.message << "\n";
    return f.code;
  }
  return kUsage;
}

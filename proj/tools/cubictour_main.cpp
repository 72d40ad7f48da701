#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cubictour/assemble.hpp"
#include "cubictour/connectivity.hpp"
#include "cubictour/generate.hpp"
#include "cubictour/io.hpp"
#include "cubictour/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace cubictour;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInvalidInput = 2;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw RejectedInput("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw RejectedInput("cannot write file: " + path);
  out << content;
}

Multigraph load_graph(const std::string& file, const std::string& gen) {
  if (!gen.empty()) return generate(gen);
  if (file.empty()) throw RejectedInput("no graph given: pass a file or --gen");
  return parse_graph(read_file(file));
}

TwoFactorStrategy parse_strategy(const std::string& name) {
  if (name == "auto") return TwoFactorStrategy::kAuto;
  if (name == "reduce") return TwoFactorStrategy::kReduce;
  if (name == "search") return TwoFactorStrategy::kSearch;
  throw RejectedInput("unknown strategy: " + name);
}

std::vector<int> parse_range(const std::string& spec, int step_default) {
  std::vector<int> out;
  auto dots = spec.find("..");
  if (dots == std::string::npos) {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
  }
  int lo = std::stoi(spec.substr(0, dots));
  int hi = std::stoi(spec.substr(dots + 2));
  for (int v = lo; v <= hi; v += step_default) out.push_back(v);
  return out;
}

int cmd_solve(const std::string& file, const std::string& gen,
              const std::string& json_out, const std::string& dot_out,
              const std::string& strategy_name) {
  Multigraph g = load_graph(file, gen);
  Solution sol = solve(g, parse_strategy(strategy_name));
  const auto& cert = sol.certificate;
  std::cout << "n=" << cert.n << " tour=" << cert.tour_edges;
  if (cert.bound_applies)
    std::cout << " bound=" << cert.bound;
  else
    std::cout << " bound=" << cert.verdict.bound_43 << " (4n/3; n < 6)";
  bool pass = cert.verdict.valid() && cert.bound_ok;
  std::cout << (pass ? " PASS" : " FAIL") << "\n";
  if (!json_out.empty()) write_file(json_out, solution_to_json(g, sol));
  if (!dot_out.empty()) write_file(dot_out, solution_to_dot(g, sol.subgraph));
  return pass ? kExitPass : kExitVerifyFail;
}

int cmd_verify(const std::string& graph_file, const std::string& solution_file,
               bool require_cubic_3ec) {
  Multigraph g = parse_graph(read_file(graph_file));
  if (require_cubic_3ec) validate_cubic_3ec(g);
  EvenSubgraph h = solution_from_json(g, read_file(solution_file));
  Verdict v = verify(g, h);
  std::cout << verdict_to_json(v);
  return v.valid() && v.within_floor_bound ? kExitPass : kExitVerifyFail;
}

int cmd_oracle(const std::string& file, const std::string& gen, int cap,
               const std::string& solution_file) {
  Multigraph g = load_graph(file, gen);
  OptResult opt = opt_eulerian(g, cap);
  std::cout << "opt=" << opt.opt << "\n";
  int tour_edges = 0;
  if (!solution_file.empty()) {
    EvenSubgraph h = solution_from_json(g, read_file(solution_file));
    Verdict v = verify(g, h);
    if (!v.valid()) {
      std::cout << "provided solution is invalid\n";
      return kExitVerifyFail;
    }
    tour_edges = h.total_edges();
  } else {
    Solution sol = solve(g);
    tour_edges = sol.certificate.tour_edges;
  }
  std::cout << "tour=" << tour_edges << " ratio=" << std::fixed;
  std::cout.precision(4);
  std::cout << static_cast<double>(tour_edges) / opt.opt << "\n";
  return kExitPass;
}

int cmd_bench(const std::string& family, const std::string& sizes_spec,
              const std::string& seeds_spec, const std::string& csv_out,
              const std::string& strategy_name) {
  if (family != "random")
    throw RejectedInput("unknown bench family: " + family);
  TwoFactorStrategy strategy = parse_strategy(strategy_name);
  std::vector<int> sizes = parse_range(sizes_spec, 2);
  std::vector<int> seeds = parse_range(seeds_spec, 1);

  struct Row {
    int n, seed, tour, bound;
    double ratio_to_n;
    int compressions, splits, deg2, deg4, deg4_fallback;
    double wall_ms;
  };
  std::vector<std::pair<int, int>> instances;
  for (int n : sizes) {
    if (n % 2 != 0 || n < 4) continue;
    for (int s : seeds) instances.push_back({n, s});
  }
  std::vector<Row> rows(instances.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::size_t i = 0; i < instances.size(); ++i) {
    auto [n, seed] = instances[i];
    Multigraph g = random_cubic_3ec(n, static_cast<std::uint64_t>(seed));
    auto start = std::chrono::steady_clock::now();
    Solution sol = solve(g, strategy);
    auto stop = std::chrono::steady_clock::now();
    Row& r = rows[i];
    r.n = n;
    r.seed = seed;
    r.tour = sol.certificate.tour_edges;
    r.bound = sol.certificate.bound;
    r.ratio_to_n = static_cast<double>(r.tour) / n;
    r.compressions = sol.certificate.compression.compressions;
    r.splits = sol.certificate.compression.splits;
    r.deg2 = r.deg4 = r.deg4_fallback = 0;
    for (const auto& step : sol.certificate.expansion_steps) {
      if (step.degree == 2) r.deg2 += 1;
      if (step.degree == 4) {
        r.deg4 += 1;
        if (step.used_fallback) r.deg4_fallback += 1;
      }
    }
    r.wall_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
  }

  std::ostringstream csv;
  csv << "n,seed,tour,bound,ratio_to_n,compressions,split_offs,deg2_"
         "expansions,deg4_expansions,deg4_fallbacks,wall_ms\n";
  csv << std::fixed;
  for (const Row& r : rows) {
    csv.precision(4);
    csv << r.n << "," << r.seed << "," << r.tour << "," << r.bound << ","
        << r.ratio_to_n << "," << r.compressions << "," << r.splits << ","
        << r.deg2 << "," << r.deg4 << "," << r.deg4_fallback << ",";
    csv.precision(2);
    csv << r.wall_ms << "\n";
  }
  write_file(csv_out.empty() ? "-" : csv_out, csv.str());

  for (const Row& r : rows)
    if (r.n >= 6 && r.tour > r.bound) return kExitVerifyFail;
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected Eulerian subgraph solver for cubic "
               "3-edge-connected graphs"};
  app.require_subcommand(1);

  std::string file, gen, json_out, dot_out, strategy = "auto";
  auto* solve_cmd = app.add_subcommand("solve", "solve one instance");
  solve_cmd->add_option("file", file, "graph file (edge list or JSON)");
  solve_cmd->add_option("--gen", gen, "generate instead of reading a file");
  solve_cmd->add_option("--json", json_out, "write solution JSON here");
  solve_cmd->add_option("--dot", dot_out, "write DOT of the solution here");
  solve_cmd->add_option("--strategy", strategy, "auto|reduce|search");

  std::string v_graph, v_solution;
  bool v_require = false;
  auto* verify_cmd = app.add_subcommand("verify", "check a solution file");
  verify_cmd->add_option("graph", v_graph, "graph file")->required();
  verify_cmd->add_option("solution", v_solution, "solution JSON")->required();
  verify_cmd->add_flag("--require-cubic-3ec", v_require,
                       "also validate the instance itself");

  std::string o_file, o_gen, o_solution;
  int o_cap = 12;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "exact optimum for small instances");
  oracle_cmd->add_option("file", o_file, "graph file");
  oracle_cmd->add_option("--gen", o_gen, "generate instead of reading a file");
  oracle_cmd->add_option("--cap", o_cap, "vertex cap (default 12)");
  oracle_cmd->add_option("--solution", o_solution,
                         "compare against this solution JSON");

  std::string b_family = "random", b_sizes = "10..200", b_seeds = "1..20";
  std::string b_csv, b_strategy = "auto";
  auto* bench_cmd = app.add_subcommand("bench", "batch statistics");
  bench_cmd->add_option("--family", b_family, "instance family (random)");
  bench_cmd->add_option("--sizes", b_sizes, "e.g. 10..200 or 10,20,50");
  bench_cmd->add_option("--seeds", b_seeds, "e.g. 1..20");
  bench_cmd->add_option("--csv", b_csv, "CSV output path (default stdout)");
  bench_cmd->add_option("--strategy", b_strategy, "auto|reduce|search");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed())
      return cmd_solve(file, gen, json_out, dot_out, strategy);
    if (verify_cmd->parsed()) return cmd_verify(v_graph, v_solution, v_require);
    if (oracle_cmd->parsed()) return cmd_oracle(o_file, o_gen, o_cap, o_solution);
    if (bench_cmd->parsed())
      return cmd_bench(b_family, b_sizes, b_seeds, b_csv, b_strategy);
  } catch (const RejectedInput& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

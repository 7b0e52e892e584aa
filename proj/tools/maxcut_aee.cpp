// Command-line front end: solve, kernelize, reduce, oracle, gen, convert.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "maxcut_aee/blocks.hpp"
#include "maxcut_aee/errors.hpp"
#include "maxcut_aee/fpt_solver.hpp"
#include "maxcut_aee/generators.hpp"
#include "maxcut_aee/graph_io.hpp"
#include "maxcut_aee/kernel.hpp"
#include "maxcut_aee/oracle.hpp"
#include "maxcut_aee/reduction.hpp"

namespace {

using aee::Answer;
using aee::Graph;
using json = nlohmann::json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

Graph load(const std::string& path) {
  if (path.empty() || path == "-") return aee::read_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw aee::FormatError("cannot open " + path);
  return aee::read_graph(in);
}

std::string witness_string(const Graph& g, const aee::Assignment& a) {
  std::string s;
  for (aee::VertexId v : g.vertices()) s.push_back(a.contains(v) ? static_cast<char>('0' + aee::to_int(a.at(v))) : '?');
  return s;
}

class Report {
 public:
  Report(std::string command, const Graph& g, std::optional<std::int64_t> k)
      : start_(std::chrono::steady_clock::now()) {
    j_["command"] = std::move(command);
    j_["n"] = g.order();
    j_["m"] = g.size();
    j_["k"] = k ? json(*k) : json(nullptr);
    j_["answer"] = nullptr;
    j_["best_cut"] = nullptr;
    j_["threshold_quarters"] = nullptr;
    j_["s_size"] = nullptr;
    j_["branches"] = nullptr;
    j_["witness"] = nullptr;
  }

  json& operator[](const char* key) { return j_[key]; }

  void answer(Answer a) { j_["answer"] = a == Answer::kYes ? "yes" : "no"; }

  void print() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    j_["wall_time_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    std::cout << j_.dump() << '\n';
  }

 private:
  json j_;
  std::chrono::steady_clock::time_point start_;
};

int exit_for(Answer a) { return a == Answer::kYes ? kExitYes : kExitNo; }

int run_solve(const std::string& path, std::int64_t k, bool whole, unsigned threads) {
  const Graph g = load(path);
  const std::int64_t kq = whole ? 4 * k : k;
  Report r("solve", g, kq);
  const aee::SolveOutcome out = aee::solve_aee(g, kq, {threads});
  r.answer(out.answer);
  if (out.best_cut) r["best_cut"] = *out.best_cut;
  r["threshold_quarters"] = out.threshold.quarters;
  r["s_size"] = out.separator_size;
  r["branches"] = out.branches_evaluated;
  r["witness"] = witness_string(g, out.witness);
  r.print();
  return exit_for(out.answer);
}

int run_kernelize(const std::string& path, std::int64_t k, const std::string& out_path) {
  const Graph g = load(path);
  Report r("kernelize", g, k);
  const aee::KernelOutcome out = aee::kernelize(g, k);
  r["s_size"] = out.separator.size();
  r["applications"] = out.applications.size();
  if (const auto* d = std::get_if<aee::KernelDecision>(&out.result)) {
    r.answer(d->answer);
    r["reason"] = std::string(aee::reason_name(d->reason));
    r.print();
    return exit_for(d->answer);
  }
  const auto& kernel = std::get<aee::Kernel>(out.result);
  std::ofstream file(out_path);
  if (!file) throw aee::FormatError("cannot write " + out_path);
  aee::write_kernel(file, kernel.graph, kernel.k, kernel.separator);
  r["answer"] = "undecided";
  r["kernel"] = {{"n", kernel.graph.order()}, {"m", kernel.graph.size()}, {"k", kernel.k}, {"file", out_path}};
  r.print();
  return kExitYes;
}

int run_reduce(const std::string& path, std::int64_t k) {
  const Graph g = load(path);
  aee::write_trace(std::cout, aee::reduce_exhaustively(g, k));
  return kExitYes;
}

int run_oracle(const std::string& path) {
  const Graph g = load(path);
  Report r("oracle", g, std::nullopt);
  const aee::OracleCut cut = aee::oracle_max_cut(g);
  r["best_cut"] = cut.value;
  r["witness"] = witness_string(g, cut.witness);
  r.print();
  return kExitYes;
}

int run_convert(const std::string& path, std::int64_t cut) {
  const Graph g = load(path);
  const aee::ConvertedParameter p = aee::convert_maxcut_param(g, cut);
  Report r("convert", g, p.k_quarters);
  r["cut"] = cut;
  if (p.always_yes) {
    r.answer(Answer::kYes);
    r.print();
    return kExitYes;
  }
  const aee::SolveOutcome out = aee::solve_aee(g, p.k_quarters);
  r.answer(out.answer);
  if (out.best_cut) r["best_cut"] = *out.best_cut;
  r["threshold_quarters"] = out.threshold.quarters;
  r["s_size"] = out.separator_size;
  r["branches"] = out.branches_evaluated;
  r["witness"] = witness_string(g, out.witness);
  r.print();
  return exit_for(out.answer);
}

int emit(const Graph& g, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    aee::write_graph(std::cout, g);
  } else {
    std::ofstream file(out_path);
    if (!file) throw aee::FormatError("cannot write " + out_path);
    aee::write_graph(file, g);
  }
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Max-Cut above the Edwards-Erdos bound"};
  app.require_subcommand(1);

  std::string path;
  std::int64_t k = 0;
  std::int64_t cut = 0;
  bool whole = false;
  unsigned threads = 1;
  std::string out_path;

  auto* solve = app.add_subcommand("solve", "Decide a cut of 2m+n-1+k quarters (k in quarters by default)");
  solve->add_option("file", path, "Graph file, '-' for stdin");
  solve->add_option("--k", k, "Parameter")->required();
  auto* quarters = solve->add_flag("--quarters", "k counts quarter edges (default)");
  solve->add_flag("--whole", whole, "k counts whole extra edges")->excludes(quarters);
  solve->add_option("--threads", threads, "Worker threads for branching")->check(CLI::Range(1U, 256U));

  auto* kern = app.add_subcommand("kernelize", "Kernelize and write the kernel");
  kern->add_option("file", path, "Graph file, '-' for stdin");
  kern->add_option("--k", k, "Parameter in quarters")->required();
  kern->add_option("--out", out_path, "Kernel output file")->required();

  auto* reduce = app.add_subcommand("reduce", "Print the one-way reduction trace");
  reduce->add_option("file", path, "Graph file, '-' for stdin");
  reduce->add_option("--k", k, "Parameter in quarters")->required();

  auto* oracle = app.add_subcommand("oracle", "Exhaustive maximum cut (n <= 26)");
  oracle->add_option("file", path, "Graph file, '-' for stdin");

  auto* convert = app.add_subcommand("convert", "Decide a cut of the given size via the converted parameter");
  convert->add_option("file", path, "Graph file, '-' for stdin");
  convert->add_option("--cut", cut, "Cut size")->required();

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->require_subcommand(1);
  std::int64_t n = 1;
  double p = 0.0;
  int block_count = 1;
  int max_block = 3;
  std::uint64_t seed = 0;
  auto* gen_conn = gen->add_subcommand("connected", "Random connected graph");
  gen_conn->add_option("--n", n, "Vertex count")->required();
  gen_conn->add_option("--p", p, "Extra edge probability");
  gen_conn->add_option("--seed", seed, "Seed");
  gen_conn->add_option("--out", out_path, "Output file (default stdout)");
  auto* gen_cf = gen->add_subcommand("cliqueforest", "Random clique-forest");
  gen_cf->add_option("--blocks", block_count, "Block count")->required();
  gen_cf->add_option("--max-block", max_block, "Largest block size");
  gen_cf->add_option("--seed", seed, "Seed");
  gen_cf->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitYes : kExitUsage;
  }

  try {
    if (*solve) return run_solve(path, k, whole, threads);
    if (*kern) return run_kernelize(path, k, out_path);
    if (*reduce) return run_reduce(path, k);
    if (*oracle) return run_oracle(path);
    if (*convert) return run_convert(path, cut);
    if (*gen_conn) {
      if (n < 1 || n > 1'000'000) throw aee::PreconditionError("gen connected: n out of range");
      return emit(aee::gen_connected(static_cast<aee::VertexId>(n), p, seed), out_path);
    }
    if (*gen_cf) return emit(aee::gen_clique_forest(block_count, max_block, seed), out_path);
  } catch (const aee::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const aee::FormatError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

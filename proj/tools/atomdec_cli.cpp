// Command line front end: decompose graphs into atoms, verify result
// documents, benchmark the algorithms, and poke at hulls and search orders.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include <atomdec/bench.hpp>
#include <atomdec/decompose.hpp>
#include <atomdec/graph.hpp>
#include <atomdec/hull.hpp>
#include <atomdec/mcs.hpp>
#include <atomdec/result_io.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;  // verification failure or timeout
constexpr int kExitUsage = 2;   // bad arguments or unreadable input

std::optional<atomdec::Graph> load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return std::nullopt;
  }
  try {
    return atomdec::load_edge_list(in);
  } catch (const atomdec::ParseError& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

std::optional<atomdec::TieBreak> parse_tie_break_arg(const std::string& text) {
  auto tb = atomdec::TieBreak::parse(text);
  if (!tb)
    std::cerr << "error: bad tie-break '" << text
              << "' (expected lowest-id or random:<seed>)\n";
  return tb;
}

atomdec::Deadline deadline_from(double timeout_seconds) {
  if (timeout_seconds <= 0) return {};
  return atomdec::deadline_after(timeout_seconds);
}

struct DecomposeArgs {
  std::string input;
  std::string algorithm = "rda";
  std::string tie_break = "lowest-id";
  std::string output;
  double timeout_seconds = 0;
  std::size_t parallel_cutoff = 256;
  bool with_separators = true;
};

int run_decompose(const DecomposeArgs& args) {
  auto graph = load_graph_file(args.input);
  if (!graph) return kExitUsage;
  auto tie_break = parse_tie_break_arg(args.tie_break);
  if (!tie_break) return kExitUsage;

  atomdec::DecomposeOptions opt;
  opt.algorithm = *atomdec::parse_algorithm(args.algorithm);
  opt.tie_break = *tie_break;
  opt.with_separators = args.with_separators;
  opt.parallel_cutoff = args.parallel_cutoff;
  opt.deadline = deadline_from(args.timeout_seconds);

  atomdec::Decomposition d;
  try {
    d = atomdec::decompose_graph(*graph, opt);
  } catch (const atomdec::TimeoutError&) {
    std::cerr << "error: decomposition exceeded " << args.timeout_seconds << " seconds\n";
    return kExitFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  atomdec::ResultDocument doc = atomdec::make_result_document(*graph, d);
  if (args.output.empty()) {
    atomdec::write_result_document(std::cout, doc);
  } else {
    std::ofstream out(args.output);
    if (!out) {
      std::cerr << "error: cannot write '" << args.output << "'\n";
      return kExitUsage;
    }
    atomdec::write_result_document(out, doc);
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string input;
  std::string result;
};

int run_verify(const VerifyArgs& args) {
  auto graph = load_graph_file(args.input);
  if (!graph) return kExitUsage;
  std::ifstream in(args.result);
  if (!in) {
    std::cerr << "error: cannot open '" << args.result << "'\n";
    return kExitUsage;
  }
  atomdec::ResultDocument doc;
  try {
    doc = atomdec::read_result_document(in);
  } catch (const atomdec::ParseError& e) {
    std::cerr << "error: " << args.result << ": " << e.what() << "\n";
    return kExitUsage;
  }
  atomdec::Verification v = atomdec::verify_decomposition(*graph, doc);
  if (!v.passed()) {
    for (const auto& f : v.failures)
      std::cout << "FAIL " << f.invariant << ": " << f.detail << "\n";
    return kExitFailed;
  }
  std::cout << "OK: " << doc.atoms.size() << " atoms verified\n";
  return kExitOk;
}

struct BenchArgs {
  std::vector<std::string> inputs;
  std::vector<std::string> algorithms = {"rda", "baseline"};
  std::string tie_break = "lowest-id";
  std::string output;
  int repeats = 20;
  double timeout_seconds = 600;
};

int run_bench(const BenchArgs& args) {
  std::vector<atomdec::Graph> graphs;
  graphs.reserve(args.inputs.size());
  for (const std::string& path : args.inputs) {
    auto g = load_graph_file(path);
    if (!g) return kExitUsage;
    graphs.push_back(std::move(*g));
  }
  auto tie_break = parse_tie_break_arg(args.tie_break);
  if (!tie_break) return kExitUsage;

  atomdec::BenchOptions opt;
  opt.algorithms.clear();
  for (const std::string& name : args.algorithms)
    opt.algorithms.push_back(*atomdec::parse_algorithm(name));
  opt.repeats = args.repeats;
  opt.timeout_seconds = args.timeout_seconds;
  opt.tie_break = *tie_break;

  std::vector<std::pair<std::string, const atomdec::Graph*>> named;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    named.emplace_back(std::filesystem::path(args.inputs[i]).filename().string(), &graphs[i]);

  atomdec::BenchReport report = atomdec::run_bench(named, opt);
  std::cout << atomdec::format_bench_table(report) << "\n"
            << atomdec::format_summary_table(report) << "\n"
            << report.environment << "\n";
  if (!args.output.empty()) {
    std::ofstream out(args.output);
    if (!out) {
      std::cerr << "error: cannot write '" << args.output << "'\n";
      return kExitUsage;
    }
    out << atomdec::bench_report_json(report);
  }
  return kExitOk;
}

struct HullArgs {
  std::string input;
  std::vector<std::string> seeds;
};

int run_hull(const HullArgs& args) {
  auto graph = load_graph_file(args.input);
  if (!graph) return kExitUsage;
  std::vector<atomdec::VertexId> ids;
  for (const std::string& label : args.seeds) {
    auto v = graph->find_vertex(label);
    if (!v) {
      std::cerr << "error: no vertex labeled '" << label << "'\n";
      return kExitUsage;
    }
    ids.push_back(*v);
  }
  atomdec::VertexSet hull = atomdec::convex_hull(*graph, atomdec::VertexSet(std::move(ids)));
  std::vector<std::string> labels;
  for (atomdec::VertexId v : hull) labels.push_back(graph->label(v));
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 0; i < labels.size(); ++i)
    std::cout << (i ? " " : "") << labels[i];
  std::cout << "\n";
  return kExitOk;
}

struct McsArgs {
  std::string input;
  std::string tie_break = "lowest-id";
  bool trace = false;
};

int run_mcs(const McsArgs& args) {
  auto graph = load_graph_file(args.input);
  if (!graph) return kExitUsage;
  auto tie_break = parse_tie_break_arg(args.tie_break);
  if (!tie_break) return kExitUsage;
  if (graph->vertex_count() == 0) {
    std::cerr << "error: empty graph\n";
    return kExitUsage;
  }
  atomdec::Ordering ord = atomdec::mcs_ordering(*graph, *tie_break, args.trace);
  for (int number = 1; number <= ord.size(); ++number) {
    atomdec::VertexId v = ord.vertex_numbered(number);
    std::cout << number << " " << graph->label(v);
    if (args.trace)
      std::cout << " weight " << ord.trace->steps[ord.trace->step_of[v]].weights_before[v];
    std::cout << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clique minimal separator decomposition toolkit"};
  app.require_subcommand(1);

  DecomposeArgs dec;
  CLI::App* dec_cmd = app.add_subcommand("decompose", "split a graph into atoms");
  dec_cmd->add_option("input", dec.input, "edge list file")->required();
  dec_cmd->add_option("--algorithm", dec.algorithm, "rda, prda, or baseline")
      ->check(CLI::IsMember({"rda", "prda", "baseline"}));
  dec_cmd->add_option("--tie-break", dec.tie_break, "lowest-id or random:<seed>");
  dec_cmd->add_option("--output", dec.output, "write the result document here (default stdout)");
  dec_cmd->add_option("--timeout-seconds", dec.timeout_seconds,
                      "abort after this many seconds (0 = no limit)");
  dec_cmd->add_option("--parallel-cutoff", dec.parallel_cutoff,
                      "prda: minimum branch size that gets its own thread");
  dec_cmd->add_flag("--separators,!--no-separators", dec.with_separators,
                    "include the separator listing (default on)");

  VerifyArgs ver;
  CLI::App* ver_cmd = app.add_subcommand("verify", "check a result document against its graph");
  ver_cmd->add_option("input", ver.input, "edge list file")->required();
  ver_cmd->add_option("result", ver.result, "result document to check")->required();

  BenchArgs ben;
  CLI::App* ben_cmd = app.add_subcommand("bench", "time the algorithms on a set of graphs");
  ben_cmd->add_option("inputs", ben.inputs, "edge list files")->required()->expected(-1);
  ben_cmd->add_option("--algorithm", ben.algorithms, "algorithms to run (repeatable)")
      ->check(CLI::IsMember({"rda", "prda", "baseline"}));
  ben_cmd->add_option("--repeats", ben.repeats, "runs per (graph, algorithm) pair");
  ben_cmd->add_option("--timeout-seconds", ben.timeout_seconds,
                      "time budget per (graph, algorithm) pair");
  ben_cmd->add_option("--tie-break", ben.tie_break, "lowest-id or random:<seed>");
  ben_cmd->add_option("--output", ben.output, "also write the report as JSON here");

  HullArgs hul;
  CLI::App* hul_cmd = app.add_subcommand("hull", "convex hull of a set of vertices");
  hul_cmd->add_option("input", hul.input, "edge list file")->required();
  hul_cmd->add_option("seeds", hul.seeds, "vertex labels to grow from")->required()->expected(-1);

  McsArgs mcs;
  CLI::App* mcs_cmd = app.add_subcommand("mcs", "print a maximum cardinality search order");
  mcs_cmd->add_option("input", mcs.input, "edge list file")->required();
  mcs_cmd->add_option("--tie-break", mcs.tie_break, "lowest-id or random:<seed>");
  mcs_cmd->add_flag("--trace", mcs.trace, "also print each vertex's weight when chosen");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*dec_cmd) return run_decompose(dec);
    if (*ver_cmd) return run_verify(ver);
    if (*ben_cmd) return run_bench(ben);
    if (*hul_cmd) return run_hull(hul);
    if (*mcs_cmd) return run_mcs(mcs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

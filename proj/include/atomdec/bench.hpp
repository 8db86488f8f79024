#pragma once

#include <cmath>
#include <iomanip>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "decompose.hpp"
#include "graph.hpp"

namespace atomdec {

struct BenchOptions {
  std::vector<Algorithm> algorithms = {Algorithm::Rda, Algorithm::Baseline};
  int repeats = 20;
  double timeout_seconds = 600.0;
  TieBreak tie_break = {};
  std::size_t parallel_cutoff = 256;
};

struct BenchRow {
  std::string graph;
  int nodes = 0;
  int edges = 0;
  std::string algorithm;
  int repeats_requested = 0;
  int repeats_done = 0;
  double mean_seconds = 0.0;
  double stddev_seconds = 0.0;
  bool timed_out = false;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::string environment;
};

inline std::string environment_note() {
  std::ostringstream out;
  out << "g++ " << __VERSION__ << ", " << std::thread::hardware_concurrency()
      << " hardware thread(s)";
  return out.str();
}

/// Times decompose_graph (separator extraction off) for every (graph,
/// algorithm) pair. A pair gets timeout_seconds of total budget; a repeat that
/// would overrun it aborts the pair and the row is marked timed out, in which
/// case mean/stddev are meaningless and renderers print a dash.
inline BenchReport run_bench(const std::vector<std::pair<std::string, const Graph*>>& graphs,
                             const BenchOptions& opt = {}) {
  if (opt.repeats < 1) throw std::invalid_argument("run_bench: repeats must be at least 1");
  if (opt.timeout_seconds <= 0) throw std::invalid_argument("run_bench: timeout must be positive");
  BenchReport report;
  report.environment = environment_note();
  for (const auto& [name, graph] : graphs) {
    for (Algorithm algo : opt.algorithms) {
      BenchRow row;
      row.graph = name;
      row.nodes = graph->vertex_count();
      row.edges = graph->edge_count();
      row.algorithm = algorithm_name(algo);
      row.repeats_requested = opt.repeats;

      Deadline row_deadline = deadline_after(opt.timeout_seconds);
      std::vector<double> times;
      times.reserve(opt.repeats);
      for (int r = 0; r < opt.repeats; ++r) {
        DecomposeOptions run;
        run.algorithm = algo;
        run.tie_break = opt.tie_break;
        run.with_separators = false;
        run.parallel_cutoff = opt.parallel_cutoff;
        run.deadline = row_deadline;
        try {
          auto t0 = std::chrono::steady_clock::now();
          decompose_graph(*graph, run);
          times.push_back(detail::seconds_since(t0));
        } catch (const TimeoutError&) {
          row.timed_out = true;
          break;
        }
      }
      row.repeats_done = static_cast<int>(times.size());
      if (!row.timed_out && !times.empty()) {
        double sum = 0.0;
        for (double t : times) sum += t;
        row.mean_seconds = sum / times.size();
        double sq = 0.0;
        for (double t : times) sq += (t - row.mean_seconds) * (t - row.mean_seconds);
        row.stddev_seconds = std::sqrt(sq / times.size());
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

namespace detail {

inline std::string fixed_or_dash(double value, bool dash, int precision = 6) {
  if (dash) return "---";
  std::ostringstream out;
  out << std::fixed << std::setprecision(precision) << value;
  return out.str();
}

inline std::string pad(const std::string& text, std::size_t width, bool left) {
  if (text.size() >= width) return text;
  std::string fill(width - text.size(), ' ');
  return left ? text + fill : fill + text;
}

}  // namespace detail

/// One line per (graph, algorithm) measurement.
inline std::string format_bench_table(const BenchReport& report) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"network", "nodes", "edges", "algorithm", "repeats", "mean-s", "stddev-s"});
  for (const BenchRow& row : report.rows)
    cells.push_back({row.graph, std::to_string(row.nodes), std::to_string(row.edges),
                     row.algorithm, std::to_string(row.repeats_done),
                     detail::fixed_or_dash(row.mean_seconds, row.timed_out),
                     detail::fixed_or_dash(row.stddev_seconds, row.timed_out)});
  std::vector<std::size_t> widths(cells[0].size(), 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < line.size(); ++c) widths[c] = std::max(widths[c], line[c].size());
  std::ostringstream out;
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) out << "  ";
      out << detail::pad(line[c], widths[c], c == 0 || c == 3);
    }
    out << '\n';
  }
  return out.str();
}

/// Pivot view: one line per graph, one mean-time column per algorithm, dashes
/// for timed-out pairs.
inline std::string format_summary_table(const BenchReport& report) {
  std::vector<std::string> algos;
  std::vector<std::string> graphs;
  for (const BenchRow& row : report.rows) {
    if (std::find(algos.begin(), algos.end(), row.algorithm) == algos.end())
      algos.push_back(row.algorithm);
    if (std::find(graphs.begin(), graphs.end(), row.graph) == graphs.end())
      graphs.push_back(row.graph);
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header = {"network", "nodes", "edges"};
  for (const std::string& a : algos) header.push_back("T-" + a + "(s)");
  cells.push_back(std::move(header));
  for (const std::string& name : graphs) {
    std::vector<std::string> line = {name, "", ""};
    line.resize(3 + algos.size(), "---");
    for (const BenchRow& row : report.rows) {
      if (row.graph != name) continue;
      line[1] = std::to_string(row.nodes);
      line[2] = std::to_string(row.edges);
      for (std::size_t c = 0; c < algos.size(); ++c)
        if (algos[c] == row.algorithm)
          line[3 + c] = detail::fixed_or_dash(row.mean_seconds, row.timed_out);
    }
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> widths(cells[0].size(), 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < line.size(); ++c) widths[c] = std::max(widths[c], line[c].size());
  std::ostringstream out;
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) out << "  ";
      out << detail::pad(line[c], widths[c], c == 0);
    }
    out << '\n';
  }
  return out.str();
}

inline std::string bench_report_json(const BenchReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const BenchRow& row : report.rows) {
    nlohmann::json r;
    r["network"] = row.graph;
    r["nodes"] = row.nodes;
    r["edges"] = row.edges;
    r["algorithm"] = row.algorithm;
    r["repeats_requested"] = row.repeats_requested;
    r["repeats_done"] = row.repeats_done;
    r["timed_out"] = row.timed_out;
    if (!row.timed_out) {
      r["mean_seconds"] = row.mean_seconds;
      r["stddev_seconds"] = row.stddev_seconds;
    }
    rows.push_back(std::move(r));
  }
  nlohmann::json j;
  j["environment"] = report.environment;
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace atomdec

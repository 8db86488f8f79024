#pragma once

#include <future>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "atoms.hpp"
#include "graph.hpp"
#include "hull.hpp"
#include "mcs.hpp"
#include "triangulation.hpp"

namespace atomdec {

enum class Algorithm { Rda, Prda, Baseline };

inline std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Rda: return "rda";
    case Algorithm::Prda: return "prda";
    case Algorithm::Baseline: return "baseline";
  }
  throw std::invalid_argument("algorithm_name: unknown algorithm");
}

inline std::optional<Algorithm> parse_algorithm(std::string_view text) {
  if (text == "rda") return Algorithm::Rda;
  if (text == "prda") return Algorithm::Prda;
  if (text == "baseline") return Algorithm::Baseline;
  return std::nullopt;
}

namespace detail {

// Accumulates candidate atoms, dropping any set contained in (or equal to) one
// already kept. Containment is only checked against sets sharing the new set's
// lowest-degree member, which every superset must contain.
class AtomCollector {
 public:
  explicit AtomCollector(const Graph& root) : membership_(root.vertex_count()) {
    degree_.reserve(root.vertex_count());
    for (VertexId v = 0; v < root.vertex_count(); ++v) degree_.push_back(root.degree(v));
  }

  void add(VertexSet candidate) {
    VertexId pick = candidate.ids().front();
    for (VertexId v : candidate)
      if (degree_[v] < degree_[pick]) pick = v;
    for (int idx : membership_[pick])
      if (candidate.is_subset_of(kept_[idx])) return;
    int idx = static_cast<int>(kept_.size());
    for (VertexId v : candidate) membership_[v].push_back(idx);
    kept_.push_back(std::move(candidate));
  }

  std::vector<VertexSet> take() { return std::move(kept_); }

 private:
  std::vector<VertexSet> kept_;
  std::vector<std::vector<int>> membership_;
  std::vector<int> degree_;
};

inline std::vector<VertexId> identity_map(int n) {
  std::vector<VertexId> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

inline VertexSet lift_through(const VertexSet& local, const std::vector<VertexId>& to_root) {
  std::vector<VertexId> out;
  out.reserve(local.size());
  for (VertexId v : local) out.push_back(to_root[v]);
  // to_root is strictly increasing along induced-subgraph chains
  return VertexSet::from_sorted(std::move(out));
}

inline VertexId min_alpha_vertex(const Graph& cur, const std::vector<VertexId>& to_root,
                                 const std::vector<int>& root_alpha) {
  VertexId best = 0;
  for (VertexId v = 1; v < cur.vertex_count(); ++v)
    if (root_alpha[to_root[v]] < root_alpha[to_root[best]]) best = v;
  return best;
}

}  // namespace detail

/// Recursive decomposition. Each round takes the vertex with the smallest
/// number, grows its closed neighborhood to a convex hull (an atom unless a
/// later round produces a superset), then restarts on the closed neighborhood
/// of whatever the hull did not cover. The ordering must come from maximum
/// cardinality search for the hulls to be atoms.
inline Decomposition rda(const Graph& g, const Ordering& alpha, const Deadline& deadline = {}) {
  if (g.vertex_count() == 0) throw std::invalid_argument("rda: empty graph");
  if (static_cast<int>(alpha.alpha.size()) != g.vertex_count())
    throw std::invalid_argument("rda: ordering size mismatch");
  if (!is_connected(g)) throw std::invalid_argument("rda: graph must be connected");
  auto start = std::chrono::steady_clock::now();

  detail::AtomCollector collector(g);
  Graph storage;
  const Graph* cur = &g;
  std::vector<VertexId> to_root = detail::identity_map(g.vertex_count());

  while (cur->vertex_count() > 0) {
    check_deadline(deadline);
    VertexId v = detail::min_alpha_vertex(*cur, to_root, alpha.alpha);
    VertexSet hull = convex_hull(*cur, closed_neighborhood(*cur, v));
    collector.add(detail::lift_through(hull, to_root));

    VertexSet rest = set_difference(cur->all_vertices(), hull);
    VertexSet next = neighborhood(*cur, rest, Closure::Closed);
    if (next.empty()) break;
    std::vector<VertexId> next_to_root;
    next_to_root.reserve(next.size());
    for (VertexId w : next) next_to_root.push_back(to_root[w]);
    Graph shrunk = induced(*cur, next);
    storage = std::move(shrunk);
    cur = &storage;
    to_root = std::move(next_to_root);
  }

  Decomposition out;
  out.atoms = AtomSet::from_sets(collector.take(), g.vertex_count());
  out.algorithm = "rda";
  out.wall_time_seconds = detail::seconds_since(start);
  return out;
}

struct PrdaOptions {
  /// Branches whose vertex count reaches this bound run on their own thread.
  std::size_t parallel_cutoff = 256;
  Deadline deadline = {};
};

namespace detail {

inline std::vector<VertexSet> prda_branch(Graph cur, std::vector<VertexId> to_root,
                                          const std::vector<int>& root_alpha,
                                          const PrdaOptions& opt) {
  std::vector<VertexSet> found;
  if (cur.vertex_count() == 0) return found;
  check_deadline(opt.deadline);

  VertexId v = min_alpha_vertex(cur, to_root, root_alpha);
  VertexSet hull = convex_hull(cur, closed_neighborhood(cur, v));
  found.push_back(lift_through(hull, to_root));

  VertexSet rest = set_difference(cur.all_vertices(), hull);
  std::vector<VertexSet> flaps = connected_components(cur, rest);

  struct Child {
    Graph graph;
    std::vector<VertexId> to_root;
  };
  std::vector<Child> children;
  children.reserve(flaps.size());
  for (const VertexSet& flap : flaps) {
    VertexSet span = neighborhood(cur, flap, Closure::Closed);
    std::vector<VertexId> child_to_root;
    child_to_root.reserve(span.size());
    for (VertexId w : span) child_to_root.push_back(to_root[w]);
    children.push_back({induced(cur, span), std::move(child_to_root)});
  }

  std::vector<std::future<std::vector<VertexSet>>> futures(children.size());
  std::vector<std::vector<VertexSet>> inline_results(children.size());
  for (std::size_t i = 0; i < children.size(); ++i)
    if (children[i].graph.vertex_count() >= static_cast<int>(opt.parallel_cutoff))
      futures[i] = std::async(std::launch::async, prda_branch, std::move(children[i].graph),
                              std::move(children[i].to_root), std::cref(root_alpha),
                              std::cref(opt));
  for (std::size_t i = 0; i < children.size(); ++i)
    if (!futures[i].valid())
      inline_results[i] = prda_branch(std::move(children[i].graph),
                                      std::move(children[i].to_root), root_alpha, opt);

  // Merge in flap order so the outcome does not depend on scheduling.
  for (std::size_t i = 0; i < children.size(); ++i) {
    std::vector<VertexSet> part =
        futures[i].valid() ? futures[i].get() : std::move(inline_results[i]);
    for (VertexSet& s : part) found.push_back(std::move(s));
  }
  return found;
}

}  // namespace detail

/// Parallel variant of rda: after the first hull, the closed neighborhoods of
/// the uncovered components are independent subproblems and recurse
/// concurrently, each restricting the same root ordering. Atom output matches
/// rda on the same ordering.
inline Decomposition prda(const Graph& g, const Ordering& alpha, const PrdaOptions& opt = {}) {
  if (g.vertex_count() == 0) throw std::invalid_argument("prda: empty graph");
  if (static_cast<int>(alpha.alpha.size()) != g.vertex_count())
    throw std::invalid_argument("prda: ordering size mismatch");
  if (!is_connected(g)) throw std::invalid_argument("prda: graph must be connected");
  auto start = std::chrono::steady_clock::now();

  std::vector<VertexSet> found = detail::prda_branch(
      g, detail::identity_map(g.vertex_count()), alpha.alpha, opt);
  detail::AtomCollector collector(g);
  for (VertexSet& s : found) collector.add(std::move(s));

  Decomposition out;
  out.atoms = AtomSet::from_sets(collector.take(), g.vertex_count());
  out.algorithm = "prda";
  out.wall_time_seconds = detail::seconds_since(start);
  return out;
}

/// The clique minimal separators induced by an atom listing: for every atom,
/// the neighborhood of each component of its complement. Deduplicated and
/// listed canonically.
inline std::vector<VertexSet> clique_minimal_separators(const Graph& g, const AtomSet& atoms) {
  std::vector<VertexSet> found;
  VertexSet all = g.all_vertices();
  for (const VertexSet& atom : atoms.atoms()) {
    VertexSet rest = set_difference(all, atom);
    for (const VertexSet& comp : connected_components(g, rest)) {
      VertexSet sep = neighborhood(g, comp, Closure::Open);
      if (!sep.empty()) found.push_back(std::move(sep));
    }
  }
  std::sort(found.begin(), found.end(), SizeLexLess{});
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

struct DecomposeOptions {
  Algorithm algorithm = Algorithm::Rda;
  TieBreak tie_break = {};
  bool with_separators = true;
  std::size_t parallel_cutoff = 256;
  Deadline deadline = {};
};

/// Whole-graph entry point: splits into connected components, runs the chosen
/// algorithm per component (with a fresh search ordering), and merges. For
/// random tie-breaks, component k uses seed + k so runs stay reproducible.
/// Reported wall time covers decomposition only, not separator extraction.
inline Decomposition decompose_graph(const Graph& g, const DecomposeOptions& opt = {}) {
  if (g.vertex_count() == 0) throw std::invalid_argument("decompose_graph: empty graph");
  auto start = std::chrono::steady_clock::now();

  std::vector<VertexSet> all_atoms;
  std::vector<VertexSet> comps = connected_components(g, g.all_vertices());
  for (std::size_t k = 0; k < comps.size(); ++k) {
    check_deadline(opt.deadline);
    TieBreak tb = opt.tie_break;
    if (tb.rule == TieBreak::Rule::Random) tb.seed += static_cast<std::uint64_t>(k);
    Graph sub = induced(g, comps[k]);
    Decomposition part;
    if (opt.algorithm == Algorithm::Baseline) {
      part = leimer_decompose(sub, tb, opt.deadline);
    } else {
      Ordering ord = mcs_ordering(sub, tb);
      if (opt.algorithm == Algorithm::Rda)
        part = rda(sub, ord, opt.deadline);
      else
        part = prda(sub, ord, {opt.parallel_cutoff, opt.deadline});
    }
    for (const VertexSet& atom : part.atoms.atoms()) all_atoms.push_back(sub.lift(atom));
  }
  double elapsed = detail::seconds_since(start);

  Decomposition out;
  out.atoms = AtomSet::from_sets(std::move(all_atoms), g.vertex_count());
  out.algorithm = algorithm_name(opt.algorithm);
  out.tie_break = opt.tie_break;
  out.wall_time_seconds = elapsed;
  if (opt.with_separators) out.separators = clique_minimal_separators(g, out.atoms);
  return out;
}

}  // namespace atomdec

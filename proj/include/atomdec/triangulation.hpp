#pragma once

#include <climits>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "atoms.hpp"
#include "graph.hpp"
#include "mcs.hpp"

namespace atomdec {

/// A numbering together with the fill edges that make the graph chordal when
/// added. Fill pairs are normalized (smaller id first) and listed in the order
/// they were introduced.
struct Triangulation {
  Ordering ordering;
  std::vector<std::pair<VertexId, VertexId>> fill_edges;
};

/// MCS-M. Like maximum cardinality search, but a step reaches past immediate
/// neighbors: every unnumbered u connected to the chosen v by a path of
/// unnumbered vertices, each of weight below w(u), also counts as "seen" and
/// gains weight; when such a u is not adjacent to v the pair becomes a fill
/// edge. The produced fill is a minimal triangulation of the input.
inline Triangulation mcs_m(const Graph& g, const TieBreak& tie_break = {},
                           const Deadline& deadline = {}) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("mcs_m: empty graph");
  std::vector<int> weight(n, 0);
  std::vector<char> numbered(n, 0);
  detail::WeightBuckets buckets(n);
  std::mt19937_64 rng(tie_break.seed);

  Ordering ord;
  ord.alpha.assign(n, 0);
  ord.by_position.assign(n, 0);
  std::vector<std::pair<VertexId, VertexId>> fill;

  // best[y]: over v->y paths with unnumbered interiors, the smallest possible
  // maximum interior weight; -1 when y is adjacent to v. Bucket index is
  // best + 1. Entries are lazy; settled[] marks finalized vertices.
  const int kUnreached = INT_MAX;
  std::vector<int> best(n, kUnreached);
  std::vector<char> settled(n, 0);
  std::vector<std::vector<VertexId>> reach_buckets(n + 1);
  std::vector<VertexId> touched;

  for (int number = n; number >= 1; --number) {
    check_deadline(deadline);
    VertexId v = buckets.pick(tie_break, rng);
    buckets.remove(v, weight[v]);
    numbered[v] = 1;
    ord.alpha[v] = number;
    ord.by_position[number - 1] = v;
    if (number == 1) break;

    for (VertexId u : g.neighbors(v))
      if (!numbered[u] && best[u] > -1) {
        best[u] = -1;
        reach_buckets[0].push_back(u);
        touched.push_back(u);
      }
    for (int b = 0; b <= n; ++b) {
      for (std::size_t i = 0; i < reach_buckets[b].size(); ++i) {
        VertexId y = reach_buckets[b][i];
        if (settled[y] || best[y] + 1 != b) continue;
        settled[y] = 1;
        int through = std::max(best[y], weight[y]);
        for (VertexId z : g.neighbors(y))
          if (!numbered[z] && through < best[z]) {
            if (best[z] == kUnreached) touched.push_back(z);
            best[z] = through;
            reach_buckets[through + 1].push_back(z);
          }
      }
      reach_buckets[b].clear();
    }

    std::sort(touched.begin(), touched.end());
    for (VertexId y : touched) {
      if (best[y] < weight[y]) {
        buckets.bump(y, weight[y]);
        ++weight[y];
        if (!g.has_edge(y, v)) fill.emplace_back(std::min(v, y), std::max(v, y));
      }
      best[y] = kUnreached;
      settled[y] = 0;
    }
    touched.clear();
  }
  return {std::move(ord), std::move(fill)};
}

/// Copy of g with the given extra edges added; labels carry over.
inline Graph filled_graph(const Graph& g,
                          std::span<const std::pair<VertexId, VertexId>> extra_edges) {
  std::vector<std::pair<VertexId, VertexId>> all = g.edges();
  all.insert(all.end(), extra_edges.begin(), extra_edges.end());
  return Graph::from_edges(g.vertex_count(), all, g.labels());
}

/// Tarjan-Yannakakis test on a fresh MCS order: chordal iff for every vertex,
/// its higher-numbered neighbors minus the closest one are neighbors of that
/// closest one.
inline bool is_chordal(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return true;
  Ordering ord = mcs_ordering(g);
  for (VertexId v = 0; v < n; ++v) {
    VertexId parent = -1;
    for (VertexId u : g.neighbors(v))
      if (ord.alpha[u] > ord.alpha[v] && (parent == -1 || ord.alpha[u] < ord.alpha[parent]))
        parent = u;
    if (parent == -1) continue;
    for (VertexId u : g.neighbors(v))
      if (ord.alpha[u] > ord.alpha[v] && u != parent && !g.has_edge(parent, u))
        return false;
  }
  return true;
}

/// Triangulation-based decomposition. Runs MCS-M, then scans vertices in
/// elimination order: when a vertex's higher-numbered neighborhood in the
/// filled graph is complete in the ORIGINAL graph and cuts the remaining
/// graph, the vertex's side splits off as an atom.
inline Decomposition leimer_decompose(const Graph& g, const TieBreak& tie_break = {},
                                      const Deadline& deadline = {}) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("leimer_decompose: empty graph");
  if (!is_connected(g))
    throw std::invalid_argument("leimer_decompose: graph must be connected");
  auto start = std::chrono::steady_clock::now();

  Triangulation tri = mcs_m(g, tie_break, deadline);
  Graph filled = filled_graph(g, tri.fill_edges);

  std::vector<char> alive(n, 1);
  std::vector<VertexSet> atoms;
  std::vector<char> in_sep(n, 0);
  std::vector<char> seen(n, 0);

  for (int number = 1; number <= n; ++number) {
    check_deadline(deadline);
    VertexId x = tri.ordering.by_position[number - 1];
    if (!alive[x]) continue;
    std::vector<VertexId> sep;
    for (VertexId y : filled.neighbors(x))
      if (alive[y] && tri.ordering.alpha[y] > number) sep.push_back(y);
    VertexSet s = VertexSet::from_sorted(std::move(sep));
    if (!is_complete(g, s)) continue;

    // A complete madj can still fail to be a minimal separator of the
    // remaining graph (one side may see only part of it); splitting on those
    // would cut atoms apart. Accept s only with two or more full components,
    // and only split off x's own component when it is one of them.
    for (VertexId y : s) in_sep[y] = 1;
    std::vector<VertexId> x_comp;
    int full_components = 0;
    bool x_comp_full = false;
    for (VertexId root = 0; root < n; ++root) {
      if (!alive[root] || in_sep[root] || seen[root]) continue;
      std::vector<VertexId> comp;
      std::queue<VertexId> frontier;
      seen[root] = 1;
      frontier.push(root);
      bool has_x = false;
      while (!frontier.empty()) {
        VertexId y = frontier.front();
        frontier.pop();
        comp.push_back(y);
        if (y == x) has_x = true;
        for (VertexId w : g.neighbors(y))
          if (alive[w] && !in_sep[w] && !seen[w]) {
            seen[w] = 1;
            frontier.push(w);
          }
      }
      // full component: its neighborhood in the remaining graph is all of s
      std::vector<char> touches(s.size(), 0);
      for (VertexId y : comp)
        for (VertexId w : g.neighbors(y))
          if (alive[w] && in_sep[w]) {
            auto it = std::lower_bound(s.begin(), s.end(), w);
            touches[it - s.begin()] = 1;
          }
      bool full = std::find(touches.begin(), touches.end(), 0) == touches.end();
      if (full) ++full_components;
      if (has_x) {
        x_comp = std::move(comp);
        x_comp_full = full;
      }
    }
    for (VertexId y = 0; y < n; ++y) seen[y] = 0;
    for (VertexId y : s) in_sep[y] = 0;

    if (full_components < 2 || !x_comp_full) continue;
    std::sort(x_comp.begin(), x_comp.end());
    atoms.push_back(set_union(VertexSet::from_sorted(x_comp), s));
    for (VertexId y : x_comp) alive[y] = 0;
  }

  std::vector<VertexId> rest;
  for (VertexId v = 0; v < n; ++v)
    if (alive[v]) rest.push_back(v);
  atoms.push_back(VertexSet::from_sorted(std::move(rest)));

  Decomposition out;
  out.atoms = AtomSet::from_sets(std::move(atoms), n);
  out.algorithm = "baseline";
  out.tie_break = tie_break;
  out.wall_time_seconds = detail::seconds_since(start);
  return out;
}

}  // namespace atomdec

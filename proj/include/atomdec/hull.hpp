#pragma once

#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace atomdec {

namespace detail {

// First witness that `member` is not convex: a component C of the complement
// whose neighborhood is not complete, plus the lexicographically smallest
// non-adjacent pair (u, v) in N(C). Components are scanned by smallest member,
// so the reported C is deterministic. nullopt means the set is convex.
struct ConvexityViolation {
  std::vector<VertexId> component;
  VertexId u;
  VertexId v;
};

inline std::optional<ConvexityViolation> find_convexity_violation(
    const Graph& g, const std::vector<char>& member) {
  int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  for (VertexId start = 0; start < n; ++start) {
    if (member[start] || seen[start]) continue;
    std::vector<VertexId> comp;
    std::queue<VertexId> frontier;
    seen[start] = 1;
    frontier.push(start);
    while (!frontier.empty()) {
      VertexId x = frontier.front();
      frontier.pop();
      comp.push_back(x);
      for (VertexId w : g.neighbors(x))
        if (!member[w] && !seen[w]) {
          seen[w] = 1;
          frontier.push(w);
        }
    }
    // Boundary of the component; every boundary vertex lies in `member`.
    std::vector<VertexId> boundary;
    for (VertexId x : comp)
      for (VertexId w : g.neighbors(x))
        if (member[w]) boundary.push_back(w);
    std::sort(boundary.begin(), boundary.end());
    boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());
    for (std::size_t i = 0; i < boundary.size(); ++i)
      for (std::size_t j = i + 1; j < boundary.size(); ++j)
        if (!g.has_edge(boundary[i], boundary[j])) {
          std::sort(comp.begin(), comp.end());
          return ConvexityViolation{std::move(comp), boundary[i], boundary[j]};
        }
  }
  return std::nullopt;
}

}  // namespace detail

/// A set is convex when every component of its complement has a complete
/// neighborhood; equivalently, no two non-adjacent members are joined by a
/// path whose interior avoids the set.
inline bool is_convex(const Graph& g, const VertexSet& a) {
  std::vector<char> member(g.vertex_count(), 0);
  for (VertexId v : a) {
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex id out of range");
    member[v] = 1;
  }
  return !detail::find_convexity_violation(g, member).has_value();
}

/// Given a connected set C and two non-adjacent vertices u, v in N(C), returns
/// the minimal u-v separator contained in C that is closest to v. Computed in
/// the subgraph induced by C and the two endpoints: delete N(u)'s part of C,
/// take v's component, and return its neighborhood.
inline VertexSet close_minimal_separator(const Graph& g, const VertexSet& component,
                                         VertexId u, VertexId v) {
  int n = g.vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n) throw std::out_of_range("vertex id out of range");
  if (u == v || g.has_edge(u, v))
    throw std::invalid_argument("close_minimal_separator: endpoints must be distinct and non-adjacent");
  if (component.contains(u) || component.contains(v))
    throw std::invalid_argument("close_minimal_separator: endpoints must lie outside the component");
  std::vector<char> in_comp(n, 0);
  for (VertexId x : component) {
    if (x < 0 || x >= n) throw std::out_of_range("vertex id out of range");
    in_comp[x] = 1;
  }
  std::vector<char> in_s0(n, 0);
  bool u_attached = false;
  for (VertexId w : g.neighbors(u))
    if (in_comp[w]) {
      in_s0[w] = 1;
      u_attached = true;
    }
  if (!u_attached)
    throw std::invalid_argument("close_minimal_separator: u has no neighbor in the component");

  // Component of v once N(u)'s slice of C is removed. Search space is
  // C plus v itself; u is isolated there and never reached.
  std::vector<char> reached(n, 0);
  reached[v] = 1;
  std::queue<VertexId> frontier;
  frontier.push(v);
  while (!frontier.empty()) {
    VertexId x = frontier.front();
    frontier.pop();
    for (VertexId w : g.neighbors(x))
      if (in_comp[w] && !in_s0[w] && !reached[w]) {
        reached[w] = 1;
        frontier.push(w);
      }
  }

  std::vector<VertexId> sep;
  for (VertexId s : component)
    if (in_s0[s]) {
      for (VertexId w : g.neighbors(s))
        if (reached[w] && (w == v || in_comp[w])) {
          sep.push_back(s);
          break;
        }
    }
  if (sep.empty())
    throw std::invalid_argument("close_minimal_separator: v is not reachable from u through the component");
  return VertexSet::from_sorted(std::move(sep));
}

namespace detail {

inline VertexSet convex_hull_impl(const Graph& g, const VertexSet& seeds,
                                  std::vector<VertexSet>* absorbed_steps) {
  if (seeds.empty()) throw std::invalid_argument("convex_hull: empty seed set");
  std::vector<char> member(g.vertex_count(), 0);
  for (VertexId v : seeds) {
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex id out of range");
    member[v] = 1;
  }
  while (auto violation = find_convexity_violation(g, member)) {
    VertexSet sep = close_minimal_separator(
        g, VertexSet::from_sorted(std::move(violation->component)), violation->u, violation->v);
    for (VertexId s : sep) member[s] = 1;
    if (absorbed_steps) absorbed_steps->push_back(std::move(sep));
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (member[v]) out.push_back(v);
  return VertexSet::from_sorted(std::move(out));
}

}  // namespace detail

/// Smallest convex superset of `seeds`. Grows the set by repeatedly closing
/// the first incomplete complement-component boundary until none remains;
/// every absorbed vertex separates two members, so it lies in every convex
/// superset and the fixpoint is the minimal one.
inline VertexSet convex_hull(const Graph& g, const VertexSet& seeds) {
  return detail::convex_hull_impl(g, seeds, nullptr);
}

/// convex_hull, also reporting each absorbed separator in absorption order.
inline VertexSet convex_hull_traced(const Graph& g, const VertexSet& seeds,
                                    std::vector<VertexSet>& absorbed_steps) {
  absorbed_steps.clear();
  return detail::convex_hull_impl(g, seeds, &absorbed_steps);
}

}  // namespace atomdec

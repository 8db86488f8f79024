#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace atomdec {

using VertexId = std::int32_t;

/// Malformed edge-list input. line() is the 1-based offending line, or 0 when
/// the problem is not tied to a single line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Vertex subset in canonical form: ids sorted ascending, no duplicates.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  /// Adopts a vector that is already sorted and duplicate-free.
  static VertexSet from_sorted(std::vector<VertexId> ids) {
    assert(std::is_sorted(ids.begin(), ids.end()));
    assert(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
    VertexSet s;
    s.ids_ = std::move(ids);
    return s;
  }

  const std::vector<VertexId>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }

  bool contains(VertexId v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
  }

  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
  }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<VertexId> ids_;
};

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<VertexId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<VertexId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

/// Canonical listing order for collections of vertex sets: by size, then
/// lexicographically by member ids.
struct SizeLexLess {
  bool operator()(const VertexSet& a, const VertexSet& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

/// Immutable undirected graph. Vertices are dense ids 0..n-1 carrying string
/// labels; adjacency lists are sorted. Self loops and duplicate edges are
/// dropped at construction and counted.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on n vertices from an edge list of id pairs. Labels default
  /// to the decimal ids when none are given.
  static Graph from_edges(int n, std::span<const std::pair<VertexId, VertexId>> edges,
                          std::vector<std::string> labels = {}) {
    if (n < 0) throw std::invalid_argument("Graph::from_edges: negative vertex count");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
      throw std::invalid_argument("Graph::from_edges: label count must match vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.resize(n);
    if (labels.empty()) {
      g.labels_.reserve(n);
      for (int v = 0; v < n; ++v) g.labels_.push_back(std::to_string(v));
    } else {
      g.labels_ = std::move(labels);
    }
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::out_of_range("Graph::from_edges: vertex id out of range");
      if (u == v) {
        ++g.loops_dropped_;
        continue;
      }
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    g.finish_adjacency();
    return g;
  }

  static Graph from_edges(int n, std::initializer_list<std::pair<VertexId, VertexId>> edges,
                          std::vector<std::string> labels = {}) {
    return from_edges(n, std::span<const std::pair<VertexId, VertexId>>(edges.begin(), edges.size()),
                      std::move(labels));
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }

  bool has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    VertexId w = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), w);
  }

  const std::string& label(VertexId v) const {
    check_vertex(v);
    return labels_[v];
  }

  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<VertexId> find_vertex(std::string_view label) const {
    for (VertexId v = 0; v < n_; ++v)
      if (labels_[v] == label) return v;
    return std::nullopt;
  }

  VertexSet all_vertices() const {
    std::vector<VertexId> ids(n_);
    std::iota(ids.begin(), ids.end(), 0);
    return VertexSet::from_sorted(std::move(ids));
  }

  /// Edges as (u, v) pairs with u < v, lexicographically sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(m_);
    for (VertexId u = 0; u < n_; ++u)
      for (VertexId v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  int self_loops_dropped() const { return loops_dropped_; }
  int duplicate_edges_dropped() const { return dups_dropped_; }

  /// True for graphs produced by induced(); their ids map back to the parent.
  bool is_induced_subgraph() const { return !to_parent_.empty(); }

  VertexId parent_id(VertexId v) const {
    check_vertex(v);
    return to_parent_.empty() ? v : to_parent_[v];
  }

  /// Maps a set of this graph's ids to the parent graph's ids.
  VertexSet lift(const VertexSet& local) const {
    if (to_parent_.empty()) return local;
    std::vector<VertexId> out;
    out.reserve(local.size());
    for (VertexId v : local) {
      check_vertex(v);
      out.push_back(to_parent_[v]);
    }
    // to_parent_ is strictly increasing, so order is preserved.
    return VertexSet::from_sorted(std::move(out));
  }

 private:
  void check_vertex(VertexId v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
  }

  void finish_adjacency() {
    int removed = 0;
    for (auto& list : adj_) {
      std::sort(list.begin(), list.end());
      auto last = std::unique(list.begin(), list.end());
      removed += static_cast<int>(list.end() - last);
      list.erase(last, list.end());
    }
    dups_dropped_ += removed / 2;
    std::size_t total = 0;
    for (const auto& list : adj_) total += list.size();
    m_ = static_cast<int>(total / 2);
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::string> labels_;
  std::vector<VertexId> to_parent_;
  int loops_dropped_ = 0;
  int dups_dropped_ = 0;

  friend Graph load_edge_list(std::istream& in);
  friend Graph induced(const Graph& g, const VertexSet& vertices);
};

/// Reads whitespace-separated "label label" edge lines. '#' starts a comment
/// line, blank lines are skipped, anything other than exactly two tokens is a
/// ParseError. Vertex ids are assigned by first appearance.
inline Graph load_edge_list(std::istream& in) {
  Graph g;
  std::unordered_map<std::string, VertexId> id_of;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::istringstream tokens(line);
    std::string a, b, extra;
    tokens >> a >> b;
    if (b.empty())
      throw ParseError("expected two vertex labels, got one token", line_no);
    if (tokens >> extra)
      throw ParseError("expected two vertex labels, got more", line_no);
    auto intern = [&](std::string& label) {
      auto [it, inserted] = id_of.try_emplace(std::move(label), static_cast<VertexId>(g.labels_.size()));
      if (inserted) g.labels_.push_back(it->first);
      return it->second;
    };
    VertexId u = intern(a);
    VertexId v = intern(b);
    if (u == v) {
      ++g.loops_dropped_;
      continue;
    }
    edges.emplace_back(u, v);
  }
  g.n_ = static_cast<int>(g.labels_.size());
  g.adj_.resize(g.n_);
  for (auto [u, v] : edges) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  g.finish_adjacency();
  return g;
}

enum class Closure { Open, Closed };

/// N(A) or N[A]: the open neighborhood excludes members of A, the closed one
/// includes them.
inline VertexSet neighborhood(const Graph& g, const VertexSet& a, Closure closure) {
  std::vector<char> in_a(g.vertex_count(), 0);
  for (VertexId v : a) {
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex id out of range");
    in_a[v] = 1;
  }
  std::vector<char> hit(g.vertex_count(), 0);
  std::vector<VertexId> out;
  for (VertexId v : a)
    for (VertexId w : g.neighbors(v))
      if (!in_a[w] && !hit[w]) {
        hit[w] = 1;
        out.push_back(w);
      }
  if (closure == Closure::Closed)
    out.insert(out.end(), a.begin(), a.end());
  std::sort(out.begin(), out.end());
  return VertexSet::from_sorted(std::move(out));
}

inline VertexSet closed_neighborhood(const Graph& g, VertexId v) {
  return neighborhood(g, VertexSet({v}), Closure::Closed);
}

/// Connected components of the subgraph induced by `within`, listed by their
/// smallest member; each component is sorted.
inline std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
  std::vector<char> in_set(g.vertex_count(), 0);
  for (VertexId v : within) {
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex id out of range");
    in_set[v] = 1;
  }
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexSet> comps;
  for (VertexId start : within) {
    if (seen[start]) continue;
    std::vector<VertexId> comp;
    std::queue<VertexId> frontier;
    seen[start] = 1;
    frontier.push(start);
    while (!frontier.empty()) {
      VertexId v = frontier.front();
      frontier.pop();
      comp.push_back(v);
      for (VertexId w : g.neighbors(v))
        if (in_set[w] && !seen[w]) {
          seen[w] = 1;
          frontier.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(VertexSet::from_sorted(std::move(comp)));
  }
  return comps;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  return connected_components(g, g.all_vertices()).size() == 1;
}

/// Does `a` induce a complete subgraph? Empty and singleton sets count.
inline bool is_complete(const Graph& g, const VertexSet& a) {
  if (a.size() <= 1) {
    for (VertexId v : a)
      if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex id out of range");
    return true;
  }
  for (VertexId v : a) {
    auto nb = g.neighbors(v);
    auto it = nb.begin();
    for (VertexId w : a) {
      if (w == v) continue;
      it = std::lower_bound(it, nb.end(), w);
      if (it == nb.end() || *it != w) return false;
      ++it;
    }
  }
  return true;
}

/// Subgraph induced by `vertices`. Local ids follow the ascending order of the
/// parent ids; labels are inherited and parent_id()/lift() map back.
inline Graph induced(const Graph& g, const VertexSet& vertices) {
  std::vector<VertexId> local_of(g.vertex_count(), -1);
  int next = 0;
  for (VertexId v : vertices) {
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex id out of range");
    local_of[v] = next++;
  }
  Graph sub;
  sub.n_ = next;
  sub.adj_.resize(next);
  sub.labels_.reserve(next);
  sub.to_parent_.assign(vertices.begin(), vertices.end());
  for (VertexId p : vertices) {
    VertexId v = local_of[p];
    sub.labels_.push_back(g.labels_[p]);
    for (VertexId w : g.neighbors(p))
      if (local_of[w] >= 0) sub.adj_[v].push_back(local_of[w]);
    // parent lists are sorted and local_of is monotone, so lists stay sorted
  }
  std::size_t total = 0;
  for (const auto& list : sub.adj_) total += list.size();
  sub.m_ = static_cast<int>(total / 2);
  return sub;
}

/// Label -> id lookup table for callers doing repeated translations.
inline std::unordered_map<std::string, VertexId> build_label_index(const Graph& g) {
  std::unordered_map<std::string, VertexId> index;
  index.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) index.emplace(g.label(v), v);
  return index;
}

}  // namespace atomdec

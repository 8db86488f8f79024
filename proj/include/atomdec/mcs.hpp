#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace atomdec {

/// How ties between equal-weight vertices are resolved during search.
struct TieBreak {
  enum class Rule { LowestId, Random };

  Rule rule = Rule::LowestId;
  std::uint64_t seed = 0;

  static TieBreak lowest_id() { return {}; }
  static TieBreak random(std::uint64_t seed) { return {Rule::Random, seed}; }

  std::string name() const {
    if (rule == Rule::LowestId) return "lowest-id";
    return "random:" + std::to_string(seed);
  }

  /// Accepts "lowest-id" or "random:<seed>".
  static std::optional<TieBreak> parse(std::string_view text) {
    if (text == "lowest-id") return lowest_id();
    constexpr std::string_view prefix = "random:";
    if (text.substr(0, prefix.size()) == prefix) {
      std::string_view digits = text.substr(prefix.size());
      if (digits.empty()) return std::nullopt;
      std::uint64_t seed = 0;
      for (char c : digits) {
        if (c < '0' || c > '9') return std::nullopt;
        seed = seed * 10 + static_cast<std::uint64_t>(c - '0');
      }
      return random(seed);
    }
    return std::nullopt;
  }

  bool operator==(const TieBreak&) const = default;
};

/// Observation point relative to a vertex being numbered: Before is the moment
/// just prior to its selection taking effect, After is just after its
/// unnumbered neighbors got their weight bump.
enum class Stamp { Before, After };

struct McsStep {
  VertexId vertex;
  std::vector<int> weights_before;
  std::vector<int> weights_after;
};

struct McsTrace {
  std::vector<McsStep> steps;  // selection order; steps[0] received number n
  std::vector<int> step_of;    // vertex id -> index into steps
};

/// A numbering alpha: V -> 1..n. by_position[k] is the vertex numbered k+1.
struct Ordering {
  std::vector<int> alpha;
  std::vector<VertexId> by_position;
  std::optional<McsTrace> trace;

  int size() const { return static_cast<int>(alpha.size()); }
  int number_of(VertexId v) const { return alpha.at(v); }
  VertexId vertex_numbered(int number) const { return by_position.at(number - 1); }
};

/// Builds an Ordering from an explicit 1..n sequence of vertices; throws if it
/// is not a permutation of the graph's vertices.
inline Ordering make_ordering(const Graph& g, std::vector<VertexId> by_position) {
  int n = g.vertex_count();
  if (static_cast<int>(by_position.size()) != n)
    throw std::invalid_argument("make_ordering: sequence length must equal vertex count");
  Ordering ord;
  ord.alpha.assign(n, 0);
  for (int k = 0; k < n; ++k) {
    VertexId v = by_position[k];
    if (v < 0 || v >= n) throw std::out_of_range("make_ordering: vertex id out of range");
    if (ord.alpha[v] != 0) throw std::invalid_argument("make_ordering: duplicate vertex");
    ord.alpha[v] = k + 1;
  }
  ord.by_position = std::move(by_position);
  return ord;
}

namespace detail {

// Weight buckets for the search loop. std::set keeps each bucket ordered so
// the lowest-id rule is a begin() read and the random rule an indexed pick.
class WeightBuckets {
 public:
  explicit WeightBuckets(int n) : buckets_(n + 1) {
    for (VertexId v = 0; v < n; ++v) buckets_[0].insert(v);
    max_weight_ = 0;
  }

  VertexId pick(const TieBreak& tb, std::mt19937_64& rng) {
    while (buckets_[max_weight_].empty()) --max_weight_;
    const auto& bucket = buckets_[max_weight_];
    if (tb.rule == TieBreak::Rule::LowestId) return *bucket.begin();
    std::uniform_int_distribution<std::size_t> at(0, bucket.size() - 1);
    auto it = bucket.begin();
    std::advance(it, at(rng));
    return *it;
  }

  void remove(VertexId v, int weight) { buckets_[weight].erase(v); }

  void bump(VertexId v, int old_weight) {
    buckets_[old_weight].erase(v);
    buckets_[old_weight + 1].insert(v);
    if (old_weight + 1 > max_weight_) max_weight_ = old_weight + 1;
  }

 private:
  std::vector<std::set<VertexId>> buckets_;
  int max_weight_ = 0;
};

}  // namespace detail

/// Maximum cardinality search. Numbers vertices n down to 1, always taking an
/// unnumbered vertex with the most numbered neighbors; ties go to the policy.
/// With record_trace the per-step weight snapshots are kept for inspection.
inline Ordering mcs_ordering(const Graph& g, const TieBreak& tie_break = {},
                             bool record_trace = false) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("mcs_ordering: empty graph");
  std::vector<int> weight(n, 0);
  std::vector<char> numbered(n, 0);
  detail::WeightBuckets buckets(n);
  std::mt19937_64 rng(tie_break.seed);

  Ordering ord;
  ord.alpha.assign(n, 0);
  ord.by_position.assign(n, 0);
  McsTrace trace;
  if (record_trace) {
    trace.steps.reserve(n);
    trace.step_of.assign(n, -1);
  }

  for (int number = n; number >= 1; --number) {
    VertexId v = buckets.pick(tie_break, rng);
    if (record_trace) {
      trace.step_of[v] = static_cast<int>(trace.steps.size());
      trace.steps.push_back({v, weight, {}});
    }
    buckets.remove(v, weight[v]);
    numbered[v] = 1;
    ord.alpha[v] = number;
    ord.by_position[number - 1] = v;
    for (VertexId u : g.neighbors(v))
      if (!numbered[u]) {
        buckets.bump(u, weight[u]);
        ++weight[u];
      }
    if (record_trace) trace.steps.back().weights_after = weight;
  }
  if (record_trace) ord.trace = std::move(trace);
  return ord;
}

/// Could `ord` have been produced by some run of maximum cardinality search?
/// Replays the numbering and checks each vertex was maximal when chosen.
/// Throws if ord is not a bijection onto 1..n.
inline bool is_valid_mcs_ordering(const Graph& g, const Ordering& ord) {
  int n = g.vertex_count();
  if (static_cast<int>(ord.alpha.size()) != n ||
      static_cast<int>(ord.by_position.size()) != n)
    throw std::invalid_argument("is_valid_mcs_ordering: ordering size mismatch");
  for (int k = 0; k < n; ++k) {
    VertexId v = ord.by_position[k];
    if (v < 0 || v >= n || ord.alpha[v] != k + 1)
      throw std::invalid_argument("is_valid_mcs_ordering: not a bijection onto 1..n");
  }
  std::vector<int> weight(n, 0);
  std::vector<char> numbered(n, 0);
  std::vector<int> count_at(n + 1, 0);
  count_at[0] = n;
  int max_weight = 0;
  for (int number = n; number >= 1; --number) {
    while (max_weight > 0 && count_at[max_weight] == 0) --max_weight;
    VertexId v = ord.by_position[number - 1];
    if (weight[v] != max_weight) return false;
    numbered[v] = 1;
    --count_at[weight[v]];
    for (VertexId u : g.neighbors(v))
      if (!numbered[u]) {
        --count_at[weight[u]];
        ++weight[u];
        ++count_at[weight[u]];
        if (weight[u] > max_weight) max_weight = weight[u];
      }
  }
  return true;
}

/// Largest weight any unnumbered member of `within` had at the given stamp of
/// `stamp_vertex`'s selection step. "Unnumbered at Before" includes the stamp
/// vertex itself; at After it does not. Throws when every member was already
/// numbered at that moment.
inline int weight_at(const McsTrace& trace, VertexId stamp_vertex, Stamp stamp,
                     const VertexSet& within) {
  if (stamp_vertex < 0 || stamp_vertex >= static_cast<VertexId>(trace.step_of.size()))
    throw std::out_of_range("weight_at: vertex id out of range");
  int t = trace.step_of[stamp_vertex];
  const McsStep& step = trace.steps[t];
  const std::vector<int>& weights = stamp == Stamp::Before ? step.weights_before : step.weights_after;
  bool found = false;
  int best = 0;
  for (VertexId v : within) {
    if (v < 0 || v >= static_cast<VertexId>(trace.step_of.size()))
      throw std::out_of_range("weight_at: vertex id out of range");
    bool unnumbered = stamp == Stamp::Before ? trace.step_of[v] >= t : trace.step_of[v] > t;
    if (!unnumbered) continue;
    if (!found || weights[v] > best) best = weights[v];
    found = true;
  }
  if (!found)
    throw std::invalid_argument("weight_at: every vertex in the set was already numbered");
  return best;
}

}  // namespace atomdec

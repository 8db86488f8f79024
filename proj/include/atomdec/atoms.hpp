#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "mcs.hpp"

namespace atomdec {

/// A cooperative time budget. Long-running decompositions poll it at loop
/// heads and bail out with TimeoutError once it has passed.
using Deadline = std::optional<std::chrono::steady_clock::time_point>;

class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("time budget exceeded") {}
};

inline void check_deadline(const Deadline& deadline) {
  if (deadline && std::chrono::steady_clock::now() > *deadline) throw TimeoutError();
}

inline Deadline deadline_after(double seconds) {
  return std::chrono::steady_clock::now() +
         std::chrono::duration_cast<std::chrono::steady_clock::duration>(
             std::chrono::duration<double>(seconds));
}

/// Canonical collection of vertex sets: listed by (size, lexicographic member
/// order), exact duplicates removed, with a vertex -> containing-sets index.
class AtomSet {
 public:
  AtomSet() = default;

  static AtomSet from_sets(std::vector<VertexSet> sets, int vertex_count) {
    std::sort(sets.begin(), sets.end(), SizeLexLess{});
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    AtomSet out;
    out.membership_.resize(vertex_count);
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (VertexId v : sets[i]) {
        if (v < 0 || v >= vertex_count) throw std::out_of_range("vertex id out of range");
        out.membership_[v].push_back(static_cast<int>(i));
      }
    out.atoms_ = std::move(sets);
    return out;
  }

  const std::vector<VertexSet>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  const std::vector<int>& atoms_containing(VertexId v) const { return membership_.at(v); }

  bool operator==(const AtomSet& other) const { return atoms_ == other.atoms_; }

 private:
  std::vector<VertexSet> atoms_;
  std::vector<std::vector<int>> membership_;
};

/// Result of decomposing one graph.
struct Decomposition {
  AtomSet atoms;
  std::optional<std::vector<VertexSet>> separators;
  std::string algorithm;
  std::optional<TieBreak> tie_break;
  double wall_time_seconds = 0.0;
};

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace detail

}  // namespace atomdec

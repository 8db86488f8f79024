#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "atoms.hpp"
#include "decompose.hpp"
#include "graph.hpp"
#include "oracle.hpp"

namespace atomdec {

/// Label-level view of a decomposition, as serialized to disk. Inner lists are
/// sorted lexicographically, outer lists by (size, lexicographic).
struct ResultDocument {
  std::vector<std::vector<std::string>> atoms;
  std::optional<std::vector<std::vector<std::string>>> separators;
  std::string algorithm;
  std::string tie_break;
  double wall_time_seconds = 0.0;
};

namespace detail {

inline void sort_label_lists(std::vector<std::vector<std::string>>& lists) {
  for (auto& list : lists) std::sort(list.begin(), list.end());
  std::sort(lists.begin(), lists.end(),
            [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
}

inline std::vector<std::vector<std::string>> to_labels(const Graph& g,
                                                       const std::vector<VertexSet>& sets) {
  std::vector<std::vector<std::string>> out;
  out.reserve(sets.size());
  for (const VertexSet& s : sets) {
    std::vector<std::string> labels;
    labels.reserve(s.size());
    for (VertexId v : s) labels.push_back(g.label(v));
    out.push_back(std::move(labels));
  }
  sort_label_lists(out);
  return out;
}

}  // namespace detail

inline ResultDocument make_result_document(const Graph& g, const Decomposition& d) {
  ResultDocument doc;
  doc.atoms = detail::to_labels(g, d.atoms.atoms());
  if (d.separators) doc.separators = detail::to_labels(g, *d.separators);
  doc.algorithm = d.algorithm;
  doc.tie_break = d.tie_break ? d.tie_break->name() : "unspecified";
  doc.wall_time_seconds = d.wall_time_seconds;
  return doc;
}

inline void write_result_document(std::ostream& out, const ResultDocument& doc) {
  nlohmann::json j;
  j["atoms"] = doc.atoms;
  if (doc.separators) j["separators"] = *doc.separators;
  j["algorithm"] = doc.algorithm;
  j["tie_break"] = doc.tie_break;
  j["wall_time_seconds"] = doc.wall_time_seconds;
  out << j.dump(2) << '\n';
}

inline ResultDocument read_result_document(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("result document: ") + e.what(), 0);
  }
  if (!j.is_object()) throw ParseError("result document: top level must be an object", 0);
  auto read_lists = [&](const char* key) {
    std::vector<std::vector<std::string>> lists;
    const auto& node = j.at(key);
    if (!node.is_array()) throw ParseError(std::string("result document: ") + key + " must be an array", 0);
    for (const auto& entry : node) {
      if (!entry.is_array()) throw ParseError(std::string("result document: ") + key + " entries must be arrays", 0);
      std::vector<std::string> labels;
      for (const auto& label : entry) {
        if (!label.is_string()) throw ParseError(std::string("result document: ") + key + " members must be strings", 0);
        labels.push_back(label.get<std::string>());
      }
      lists.push_back(std::move(labels));
    }
    return lists;
  };
  ResultDocument doc;
  if (!j.contains("atoms")) throw ParseError("result document: missing \"atoms\"", 0);
  doc.atoms = read_lists("atoms");
  if (j.contains("separators")) doc.separators = read_lists("separators");
  if (j.contains("algorithm")) {
    if (!j["algorithm"].is_string()) throw ParseError("result document: \"algorithm\" must be a string", 0);
    doc.algorithm = j["algorithm"].get<std::string>();
  }
  if (j.contains("tie_break")) {
    if (!j["tie_break"].is_string()) throw ParseError("result document: \"tie_break\" must be a string", 0);
    doc.tie_break = j["tie_break"].get<std::string>();
  }
  if (j.contains("wall_time_seconds")) {
    if (!j["wall_time_seconds"].is_number()) throw ParseError("result document: \"wall_time_seconds\" must be a number", 0);
    doc.wall_time_seconds = j["wall_time_seconds"].get<double>();
  }
  return doc;
}

/// Outcome of checking a result document against its graph. Empty failure
/// list means every applicable invariant held.
struct Verification {
  struct Failure {
    std::string invariant;
    std::string detail;
  };
  std::vector<Failure> failures;
  bool passed() const { return failures.empty(); }
};

/// Re-checks a claimed decomposition against the graph itself: label sanity,
/// vertex and edge coverage, the antichain property, per-atom connectivity,
/// per-atom primality via the exhaustive oracle (for atoms within budget, and
/// whole-graph atom equality when the graph itself fits), and the separator
/// listing when present.
inline Verification verify_decomposition(const Graph& g, const ResultDocument& doc,
                                         const OracleBudget& budget = {}) {
  Verification result;
  auto fail = [&](std::string invariant, std::string detail) {
    result.failures.push_back({std::move(invariant), std::move(detail)});
  };

  auto index = build_label_index(g);
  std::vector<VertexSet> atoms;
  for (const auto& labels : doc.atoms) {
    std::vector<VertexId> ids;
    for (const std::string& label : labels) {
      auto it = index.find(label);
      if (it == index.end()) {
        fail("known-labels", "atom references unknown vertex '" + label + "'");
        continue;
      }
      ids.push_back(it->second);
    }
    atoms.push_back(VertexSet(std::move(ids)));
  }
  if (!result.failures.empty()) return result;

  // coverage
  std::vector<char> covered(g.vertex_count(), 0);
  for (const VertexSet& a : atoms)
    for (VertexId v : a) covered[v] = 1;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!covered[v]) fail("coverage", "vertex '" + g.label(v) + "' lies in no atom");

  // edge coverage
  std::vector<std::vector<int>> member_of(g.vertex_count());
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (VertexId v : atoms[i]) member_of[v].push_back(static_cast<int>(i));
  for (auto [u, v] : g.edges()) {
    const auto& a = member_of[u];
    const auto& b = member_of[v];
    bool shared = false;
    for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
      if (a[i] == b[j]) {
        shared = true;
        break;
      }
      a[i] < b[j] ? ++i : ++j;
    }
    if (!shared)
      fail("edge-coverage", "edge ('" + g.label(u) + "', '" + g.label(v) + "') lies in no atom");
  }

  // antichain
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i].empty()) {
      fail("antichain", "atom " + std::to_string(i) + " is empty");
      continue;
    }
    VertexId pick = atoms[i].ids().front();
    for (VertexId v : atoms[i])
      if (member_of[v].size() < member_of[pick].size()) pick = v;
    for (int j : member_of[pick])
      if (j != static_cast<int>(i) && atoms[i].is_subset_of(atoms[j])) {
        fail("antichain", "atom " + std::to_string(i) + " is contained in atom " + std::to_string(j));
        break;
      }
  }

  // per-atom structure
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i].empty()) continue;
    if (connected_components(g, atoms[i]).size() != 1) {
      fail("atom-connected", "atom " + std::to_string(i) + " does not induce a connected subgraph");
      continue;
    }
    if (static_cast<int>(atoms[i].size()) <= budget.max_vertices_atoms) {
      Graph sub = induced(g, atoms[i]);
      if (!brute_clique_min_seps(sub, budget).empty())
        fail("atom-primality", "atom " + std::to_string(i) + " still has a clique minimal separator");
    }
  }

  // whole-graph cross-check when the oracle can afford it
  if (g.vertex_count() <= budget.max_vertices_atoms && is_connected(g)) {
    AtomSet expected = brute_atoms(g, budget);
    AtomSet claimed = AtomSet::from_sets(atoms, g.vertex_count());
    if (!(claimed == expected))
      fail("oracle-atoms", "atom listing disagrees with the exhaustive decomposition");
  }

  if (doc.separators) {
    std::vector<VertexSet> seps;
    bool labels_ok = true;
    for (const auto& labels : *doc.separators) {
      std::vector<VertexId> ids;
      for (const std::string& label : labels) {
        auto it = index.find(label);
        if (it == index.end()) {
          fail("known-labels", "separator references unknown vertex '" + label + "'");
          labels_ok = false;
          continue;
        }
        ids.push_back(it->second);
      }
      seps.push_back(VertexSet(std::move(ids)));
    }
    if (labels_ok) {
      for (std::size_t i = 0; i < seps.size(); ++i) {
        if (!is_complete(g, seps[i]))
          fail("separator-complete", "separator " + std::to_string(i) + " is not a clique");
        VertexSet rest = set_difference(g.all_vertices(), seps[i]);
        int full = 0;
        for (const VertexSet& comp : connected_components(g, rest))
          if (neighborhood(g, comp, Closure::Open) == seps[i]) ++full;
        if (full < 2)
          fail("separator-minimal",
               "separator " + std::to_string(i) + " lacks two full components");
      }
      std::vector<VertexSet> derived =
          clique_minimal_separators(g, AtomSet::from_sets(atoms, g.vertex_count()));
      std::vector<VertexSet> claimed = seps;
      std::sort(claimed.begin(), claimed.end(), SizeLexLess{});
      claimed.erase(std::unique(claimed.begin(), claimed.end()), claimed.end());
      if (claimed != derived)
        fail("separator-set", "separator listing does not match the one induced by the atoms");
    }
  }

  return result;
}

}  // namespace atomdec

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "atoms.hpp"
#include "graph.hpp"

namespace atomdec {

/// Raised when a brute-force routine is asked to exceed its exhaustive-search
/// budget.
class BudgetError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleBudget {
  int max_vertices_atoms = 12;  // atom / separator enumeration
  int max_vertices_hull = 11;   // hull superset enumeration
};

namespace detail {

using Mask = std::uint32_t;

struct MaskGraph {
  int n = 0;
  Mask all = 0;
  std::vector<Mask> adj;
};

inline MaskGraph make_mask_graph(const Graph& g, int max_vertices, const char* caller) {
  if (g.vertex_count() > max_vertices)
    throw BudgetError(std::string(caller) + ": graph exceeds the " +
                      std::to_string(max_vertices) + "-vertex exhaustive-search budget");
  MaskGraph mg;
  mg.n = g.vertex_count();
  mg.all = mg.n == 32 ? ~Mask{0} : (Mask{1} << mg.n) - 1;
  mg.adj.assign(mg.n, 0);
  for (VertexId v = 0; v < mg.n; ++v)
    for (VertexId w : g.neighbors(v)) mg.adj[v] |= Mask{1} << w;
  return mg;
}

inline Mask mask_of(const VertexSet& a) {
  Mask m = 0;
  for (VertexId v : a) m |= Mask{1} << v;
  return m;
}

inline VertexSet to_vertex_set(Mask m) {
  std::vector<VertexId> ids;
  for (Mask rest = m; rest;) {
    int v = std::countr_zero(rest);
    ids.push_back(v);
    rest &= rest - 1;
  }
  return VertexSet::from_sorted(std::move(ids));
}

inline bool mask_complete(const MaskGraph& g, Mask a) {
  for (Mask rest = a; rest;) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if (((g.adj[v] | (Mask{1} << v)) & a) != a) return false;
  }
  return true;
}

inline Mask mask_neighborhood(const MaskGraph& g, Mask a, Mask universe) {
  Mask nb = 0;
  for (Mask rest = a; rest;) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    nb |= g.adj[v];
  }
  return nb & universe & ~a;
}

// Components of the subgraph induced by `within`, in increasing order of each
// component's smallest vertex.
inline std::vector<Mask> mask_components(const MaskGraph& g, Mask within) {
  std::vector<Mask> comps;
  Mask left = within;
  while (left) {
    Mask comp = left & (~left + 1);  // lowest remaining bit
    for (;;) {
      Mask grow = mask_neighborhood(g, comp, within);
      if (!grow) break;
      comp |= grow;
    }
    comps.push_back(comp);
    left &= ~comp;
  }
  return comps;
}

// Smallest clique minimal separator of the subgraph induced by `universe`,
// by (cardinality, then numeric mask value); 0 when the subgraph is prime.
inline Mask first_clique_min_sep(const MaskGraph& g, Mask universe) {
  Mask best = 0;
  int best_count = 0;
  for (Mask s = (universe - 1) & universe; s; s = (s - 1) & universe) {
    int count = std::popcount(s);
    if (best && (count > best_count || (count == best_count && s > best))) continue;
    if (!mask_complete(g, s)) continue;
    int full = 0;
    for (Mask comp : mask_components(g, universe & ~s))
      if (mask_neighborhood(g, comp, universe) == s) ++full;
    if (full >= 2) {
      best = s;
      best_count = count;
    }
  }
  return best;
}

inline void brute_atoms_rec(const MaskGraph& g, Mask universe, std::vector<Mask>& out) {
  Mask sep = first_clique_min_sep(g, universe);
  if (!sep) {
    out.push_back(universe);
    return;
  }
  // One full component splits off with the separator; the rest keeps it too.
  Mask side = 0;
  for (Mask comp : mask_components(g, universe & ~sep))
    if (mask_neighborhood(g, comp, universe) == sep) {
      side = comp;
      break;
    }
  brute_atoms_rec(g, side | sep, out);
  brute_atoms_rec(g, universe & ~side, out);
}

inline bool mask_path_convex(const MaskGraph& g, Mask a) {
  Mask exterior = g.all & ~a;
  for (Mask ur = a; ur;) {
    int u = std::countr_zero(ur);
    ur &= ur - 1;
    for (Mask vr = ur; vr;) {
      int v = std::countr_zero(vr);
      vr &= vr - 1;
      if (g.adj[u] & (Mask{1} << v)) continue;
      Mask reach = g.adj[u] & exterior;
      for (;;) {
        Mask grow = mask_neighborhood(g, reach, exterior);
        if (!grow) break;
        reach |= grow;
      }
      if (reach & g.adj[v]) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Exhaustive clique-minimal-separator listing: every nonempty complete set
/// whose removal leaves at least two components with exactly that set as
/// neighborhood. Canonically ordered.
inline std::vector<VertexSet> brute_clique_min_seps(const Graph& g,
                                                    const OracleBudget& budget = {}) {
  detail::MaskGraph mg = detail::make_mask_graph(g, budget.max_vertices_atoms,
                                                 "brute_clique_min_seps");
  std::vector<VertexSet> out;
  for (detail::Mask s = 1; s <= mg.all; ++s) {
    if (!detail::mask_complete(mg, s)) continue;
    int full = 0;
    for (detail::Mask comp : detail::mask_components(mg, mg.all & ~s))
      if (detail::mask_neighborhood(mg, comp, mg.all) == s) ++full;
    if (full >= 2) out.push_back(detail::to_vertex_set(s));
  }
  std::sort(out.begin(), out.end(), SizeLexLess{});
  return out;
}

/// Exhaustive atom computation by repeated separator splitting: find any
/// clique minimal separator, split the graph along one full component, recurse
/// on both halves (keeping the separator in each). The result is independent
/// of the choices made, which the splitting choice here keeps deterministic
/// anyway. Requires a connected graph.
inline AtomSet brute_atoms(const Graph& g, const OracleBudget& budget = {}) {
  detail::MaskGraph mg = detail::make_mask_graph(g, budget.max_vertices_atoms, "brute_atoms");
  if (mg.n == 0) throw std::invalid_argument("brute_atoms: empty graph");
  if (detail::mask_components(mg, mg.all).size() != 1)
    throw std::invalid_argument("brute_atoms: graph must be connected");
  std::vector<detail::Mask> raw;
  detail::brute_atoms_rec(mg, mg.all, raw);
  std::vector<VertexSet> sets;
  sets.reserve(raw.size());
  for (detail::Mask m : raw) sets.push_back(detail::to_vertex_set(m));
  return AtomSet::from_sets(std::move(sets), g.vertex_count());
}

/// Convexity by the path definition: no two non-adjacent members may be joined
/// by a path whose interior lies entirely outside the set.
inline bool brute_is_convex(const Graph& g, const VertexSet& a, const OracleBudget& budget = {}) {
  detail::MaskGraph mg = detail::make_mask_graph(g, budget.max_vertices_hull, "brute_is_convex");
  for (VertexId v : a)
    if (v < 0 || v >= mg.n) throw std::out_of_range("vertex id out of range");
  return detail::mask_path_convex(mg, detail::mask_of(a));
}

/// Exhaustive convex hull: enumerate supersets of the seed set by increasing
/// size and return the first convex one. Exactly one convex set may exist at
/// that size; more than one would contradict hull uniqueness and raises
/// logic_error rather than returning either.
inline VertexSet brute_hull(const Graph& g, const VertexSet& seeds,
                            const OracleBudget& budget = {}) {
  detail::MaskGraph mg = detail::make_mask_graph(g, budget.max_vertices_hull, "brute_hull");
  if (seeds.empty()) throw std::invalid_argument("brute_hull: empty seed set");
  for (VertexId v : seeds)
    if (v < 0 || v >= mg.n) throw std::out_of_range("vertex id out of range");
  detail::Mask base = detail::mask_of(seeds);

  std::vector<int> free_bits;
  for (int v = 0; v < mg.n; ++v)
    if (!(base & (detail::Mask{1} << v))) free_bits.push_back(v);

  int free_count = static_cast<int>(free_bits.size());
  for (int extra = 0; extra <= free_count; ++extra) {
    std::vector<detail::Mask> winners;
    std::vector<int> choose(extra);
    for (int i = 0; i < extra; ++i) choose[i] = i;
    for (;;) {
      detail::Mask candidate = base;
      for (int i : choose) candidate |= detail::Mask{1} << free_bits[i];
      if (detail::mask_path_convex(mg, candidate)) winners.push_back(candidate);
      // next combination of `extra` indices out of free_count
      int k = extra - 1;
      while (k >= 0 && choose[k] == free_count - extra + k) --k;
      if (k < 0) break;
      ++choose[k];
      for (int j = k + 1; j < extra; ++j) choose[j] = choose[j - 1] + 1;
    }
    if (winners.size() > 1)
      throw std::logic_error("brute_hull: multiple minimal convex supersets");
    if (winners.size() == 1) return detail::to_vertex_set(winners.front());
  }
  throw std::logic_error("brute_hull: no convex superset found");
}

}  // namespace atomdec

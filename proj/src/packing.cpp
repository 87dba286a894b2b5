#include "mho/packing.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <tuple>

#include "mho/subpartitions.hpp"

namespace mho {

const char* packing_mode_name(PackingMode mode) {
  switch (mode) {
    case PackingMode::edmonds: return "edmonds";
    case PackingMode::k_regular: return "k_regular";
    case PackingMode::fg_bounded: return "fg_bounded";
    case PackingMode::m_based: return "m_based";
    case PackingMode::m_rooted_fgk_dyper: return "m_rooted_fgk_dyper";
    case PackingMode::m_rooted_fgk_mixed: return "m_rooted_fgk_mixed";
  }
  return "unknown";
}

std::optional<PackingMode> packing_mode_from_name(const std::string& name) {
  for (PackingMode mode :
       {PackingMode::edmonds, PackingMode::k_regular, PackingMode::fg_bounded,
        PackingMode::m_based, PackingMode::m_rooted_fgk_dyper, PackingMode::m_rooted_fgk_mixed}) {
    if (name == packing_mode_name(mode)) return mode;
  }
  return std::nullopt;
}

namespace {

long long in_degree(const MixedHypergraph& graph, VertexSet x) {
  long long total = 0;
  for (const auto& [d, mult] : graph.dyperedges) {
    if (dyperedge_enters(d, x)) total = checked_add(total, mult);
  }
  return total;
}

void require_dyper_only(const MixedHypergraph& graph) {
  if (!graph.hyperedges.empty()) {
    throw DomainError("this packing mode needs a hyperedge-free graph");
  }
}

void require_bounds(const MixedHypergraph& graph, const std::vector<long long>& f,
                    const std::vector<long long>& g) {
  const auto n = static_cast<size_t>(graph.universe.n());
  if (f.size() != n || g.size() != n) {
    throw DomainError("f and g must assign a value to every vertex");
  }
  for (size_t v = 0; v < n; ++v) {
    if (f[v] < 0 || g[v] < 0) throw DomainError("f and g must be nonnegative");
  }
}

void require_matroid_fits(const RootPlacement& roots, const MatroidSpec& matroid) {
  if (matroid.m != roots.size()) {
    throw DomainError("matroid ground size must match the root placement");
  }
}

}  // namespace

std::optional<PackingConditionWitness> check_edmonds(const MixedHypergraph& graph,
                                                     const RootPlacement& roots) {
  require_dyper_only(graph);
  if (graph.universe.n() > kMaxDegreeCheckVertices) {
    throw CapacityError("in-degree checks support at most 20 vertices");
  }
  const uint32_t full = graph.universe.full().mask;
  for (uint32_t x = 1; x <= full; ++x) {
    const VertexSet set{x};
    const long long lhs = in_degree(graph, set);
    const long long rhs =
        static_cast<long long>(roots.size()) - std::popcount(roots.restrict_to(set));
    if (lhs < rhs) {
      PackingConditionWitness w;
      w.condition = "in_degree";
      w.x = set;
      w.lhs = lhs;
      w.rhs = rhs;
      return w;
    }
  }
  return std::nullopt;
}

std::optional<PackingConditionWitness> check_k_regular(const MixedHypergraph& graph, long long k,
                                                       const RootPlacement& roots) {
  require_dyper_only(graph);
  if (graph.universe.n() > kMaxDegreeCheckVertices) {
    throw CapacityError("in-degree checks support at most 20 vertices");
  }
  if (k < 0) throw DomainError("regularity must be nonnegative");
  for (int v = 0; v < graph.universe.n(); ++v) {
    const long long at_v = roots.multiplicity(v);
    if (k < at_v) {
      PackingConditionWitness w;
      w.condition = "root_multiplicity";
      w.vertex = v;
      w.lhs = k;
      w.rhs = at_v;
      return w;
    }
  }
  const uint32_t full = graph.universe.full().mask;
  for (uint32_t x = 1; x <= full; ++x) {
    const VertexSet set{x};
    const long long lhs = in_degree(graph, set);
    const long long rhs = k - std::popcount(roots.restrict_to(set));
    if (lhs < rhs) {
      PackingConditionWitness w;
      w.condition = "in_degree";
      w.x = set;
      w.lhs = lhs;
      w.rhs = rhs;
      return w;
    }
  }
  return std::nullopt;
}

std::optional<PackingConditionWitness> check_fg_bounded(const MixedHypergraph& graph,
                                                        const std::vector<long long>& f,
                                                        const std::vector<long long>& g,
                                                        long long k) {
  require_dyper_only(graph);
  require_bounds(graph, f, g);
  if (k < 0) throw DomainError("spanning count must be nonnegative");
  const VertexUniverse& u = graph.universe;
  for (int v = 0; v < u.n(); ++v) {
    if (g[static_cast<size_t>(v)] < f[static_cast<size_t>(v)]) {
      PackingConditionWitness w;
      w.condition = "bounds";
      w.vertex = v;
      w.lhs = g[static_cast<size_t>(v)];
      w.rhs = f[static_cast<size_t>(v)];
      return w;
    }
  }
  const auto sum_over = [](const std::vector<long long>& vals, VertexSet x) {
    long long total = 0;
    for (int v : x.elements()) total = checked_add(total, vals[static_cast<size_t>(v)]);
    return total;
  };
  std::optional<PackingConditionWitness> witness;
  for_each_subpartition(u, [&](const std::vector<VertexSet>& members, VertexSet ground) {
    if (witness) return;
    const Subpartition p{members, ground};
    const long long entering = entering_count(graph, p);
    const long long outside = sum_over(f, u.full().minus(ground));
    const long long slack = std::min(checked_sub(k, outside), sum_over(g, ground));
    const long long rhs =
        checked_sub(checked_mul(k, static_cast<long long>(members.size())), slack);
    if (entering < rhs) {
      PackingConditionWitness w;
      w.condition = "entering";
      w.p = p;
      w.lhs = entering;
      w.rhs = rhs;
      witness = std::move(w);
    }
  });
  return witness;
}

std::optional<PackingConditionWitness> check_m_based(const MixedHypergraph& graph,
                                                     const RootPlacement& roots,
                                                     const MatroidSpec& matroid) {
  require_dyper_only(graph);
  require_matroid_fits(roots, matroid);
  if (graph.universe.n() > kMaxDegreeCheckVertices) {
    throw CapacityError("in-degree checks support at most 20 vertices");
  }
  const long long target = matroid.full_rank();
  const uint32_t full = graph.universe.full().mask;
  for (uint32_t x = 1; x <= full; ++x) {
    const VertexSet set{x};
    const long long lhs = in_degree(graph, set);
    const long long rhs = target - matroid.rank(roots.restrict_to(set));
    if (lhs < rhs) {
      PackingConditionWitness w;
      w.condition = "in_degree";
      w.x = set;
      w.lhs = lhs;
      w.rhs = rhs;
      return w;
    }
  }
  return std::nullopt;
}

std::optional<PackingConditionWitness> check_m_rooted_fgk(const MixedHypergraph& graph,
                                                          long long k,
                                                          const std::vector<long long>& f,
                                                          const std::vector<long long>& g,
                                                          const RootPlacement& roots,
                                                          const MatroidSpec& matroid,
                                                          bool allow_hyperedges) {
  if (!allow_hyperedges) require_dyper_only(graph);
  require_bounds(graph, f, g);
  require_matroid_fits(roots, matroid);
  if (k < 0) throw DomainError("regularity must be nonnegative");
  const VertexUniverse& u = graph.universe;
  if (u.n() > kMaxPackingCheckVertices) {
    throw CapacityError("these conditions support at most 8 vertices");
  }
  const auto n = static_cast<size_t>(u.n());

  for (size_t v = 0; v < n; ++v) {
    const long long capped = std::min(g[v], k);
    if (capped < f[v]) {
      PackingConditionWitness w;
      w.condition = "bounds";
      w.vertex = static_cast<int>(v);
      w.lhs = capped;
      w.rhs = f[v];
      return w;
    }
  }

  const uint32_t full = u.full().mask;
  const long long target = matroid.full_rank();

  // Per-mask sums of min(g, k) and of f, plus ranks of restricted roots.
  std::vector<long long> gk_sum(static_cast<size_t>(full) + 1, 0);
  std::vector<long long> f_sum(static_cast<size_t>(full) + 1, 0);
  std::vector<long long> root_rank(static_cast<size_t>(full) + 1, 0);
  for (uint32_t x = 1; x <= full; ++x) {
    const int low = std::countr_zero(x);
    gk_sum[x] = checked_add(gk_sum[x & (x - 1)], std::min(g[static_cast<size_t>(low)], k));
    f_sum[x] = checked_add(f_sum[x & (x - 1)], f[static_cast<size_t>(low)]);
  }
  for (uint32_t x = 0; x <= full; ++x) {
    root_rank[x] = matroid.rank(roots.restrict_to(VertexSet{x}));
  }

  for (uint32_t um = 0; um <= full; ++um) {
    const long long lhs = checked_add(root_rank[um], gk_sum[full & ~um]);
    if (lhs < target) {
      PackingConditionWitness w;
      w.condition = "rank_coverage";
      w.u = VertexSet{um};
      w.lhs = lhs;
      w.rhs = target;
      return w;
    }
  }

  // Precompute every (W, P) pair with its entering count in scan order, then
  // sweep U outermost so the first witness follows the (U, W, P) order.
  struct Entry {
    uint32_t w;
    Subpartition p;
    long long entering;
    long long k_times_members;
  };
  std::vector<Entry> entries;
  for (uint32_t wm = 0; wm <= full; ++wm) {
    for_each_subpartition_of(u, VertexSet{wm},
                             [&](const std::vector<VertexSet>& members, VertexSet ground) {
                               Entry entry{wm, Subpartition{members, ground}, 0, 0};
                               entry.entering = entering_count(graph, entry.p);
                               entry.k_times_members =
                                   checked_mul(k, static_cast<long long>(members.size()));
                               entries.push_back(std::move(entry));
                             });
  }
  for (uint32_t um = 0; um <= full; ++um) {
    for (const Entry& entry : entries) {
      const long long lhs =
          checked_add(checked_add(entry.entering, root_rank[um]), gk_sum[entry.w & ~um]);
      const long long rhs = checked_add(entry.k_times_members, f_sum[um & ~entry.w]);
      if (lhs < rhs) {
        PackingConditionWitness w;
        w.condition = "entering";
        w.u = VertexSet{um};
        w.w = VertexSet{entry.w};
        w.p = entry.p;
        w.lhs = lhs;
        w.rhs = rhs;
        return w;
      }
    }
  }
  return std::nullopt;
}

std::optional<PackingConditionWitness> check_packing_conditions(const PackingInstance& instance) {
  switch (instance.mode) {
    case PackingMode::edmonds:
      return check_edmonds(instance.graph, instance.roots);
    case PackingMode::k_regular:
      return check_k_regular(instance.graph, instance.k, instance.roots);
    case PackingMode::fg_bounded:
      return check_fg_bounded(instance.graph, instance.f, instance.g, instance.k);
    case PackingMode::m_based:
      return check_m_based(instance.graph, instance.roots, instance.matroid);
    case PackingMode::m_rooted_fgk_dyper:
      return check_m_rooted_fgk(instance.graph, instance.k, instance.f, instance.g,
                                instance.roots, instance.matroid, /*allow_hyperedges=*/false);
    case PackingMode::m_rooted_fgk_mixed:
      return check_m_rooted_fgk(instance.graph, instance.k, instance.f, instance.g,
                                instance.roots, instance.matroid, /*allow_hyperedges=*/true);
  }
  throw DomainError("unknown packing mode");
}

// ---- exhaustive search ----

namespace {

struct SearchEdge {
  bool from_hyperedge = false;
  int edge_index = 0;
  long long copy = 0;
  std::vector<std::pair<int, int>> arcs;  // (tail, head)
};

struct Searcher {
  const PackingInstance& instance;
  const VertexUniverse& universe;
  int n = 0;
  std::vector<SearchEdge> edges;
  bool spanning = false;       // every arborescence must cover all vertices
  long long coverage = -1;     // exact per-vertex membership count, -1 = free

  // Per-configuration state.
  std::vector<std::pair<int, int>> arb_roots;  // (vertex, ground element or -1)
  std::vector<std::array<int, kMaxPackingSearchVertices>> parent;
  std::vector<std::array<int, kMaxPackingSearchVertices>> touch;
  std::vector<int> arc_count;
  std::vector<int> touched_count;
  std::vector<long long> covered;                // per vertex: containing arbs
  std::vector<std::pair<int, int>> chosen;       // per edge: (arb, arc) or (-1, -1)

  explicit Searcher(const PackingInstance& inst)
      : instance(inst), universe(inst.graph.universe), n(inst.graph.universe.n()) {}

  bool run_config(std::vector<std::pair<int, int>> roots_for_config,
                  PackingWitness* witness_out) {
    arb_roots = std::move(roots_for_config);
    const size_t arbs = arb_roots.size();
    if (spanning &&
        static_cast<long long>(edges.size()) <
            static_cast<long long>(arbs) * static_cast<long long>(n - 1)) {
      return false;
    }
    parent.assign(arbs, {});
    touch.assign(arbs, {});
    for (size_t j = 0; j < arbs; ++j) {
      parent[j].fill(-1);
      touch[j].fill(0);
      touch[j][static_cast<size_t>(arb_roots[j].first)] = 1;
    }
    arc_count.assign(arbs, 0);
    touched_count.assign(arbs, 1);
    covered.assign(static_cast<size_t>(n), 0);
    for (size_t j = 0; j < arbs; ++j) covered[static_cast<size_t>(arb_roots[j].first)] += 1;
    if (coverage >= 0) {
      for (long long c : covered) {
        if (c > coverage) return false;
      }
    }
    chosen.assign(edges.size(), {-1, -1});
    if (!assign(0)) return false;
    build_witness(witness_out);
    return true;
  }

  // An arc adds at most two new vertices to one arborescence, so the
  // remaining edges bound how much coverage can still grow.
  bool still_reachable(size_t next_edge) const {
    const long long budget = 2 * static_cast<long long>(edges.size() - next_edge);
    if (coverage >= 0) {
      long long deficit = 0;
      for (long long c : covered) deficit += coverage - c;
      if (deficit > budget) return false;
    }
    if (spanning) {
      long long deficit = 0;
      for (int t : touched_count) deficit += n - t;
      if (deficit > budget) return false;
    }
    return true;
  }

  bool assign(size_t idx) {
    if (!still_reachable(idx)) return false;
    if (idx == edges.size()) return final_check();

    chosen[idx] = {-1, -1};
    if (assign(idx + 1)) return true;

    const SearchEdge& edge = edges[idx];
    for (size_t j = 0; j < arb_roots.size(); ++j) {
      // Equal-rooted arborescences are interchangeable until they receive
      // their first arc, except when distinct ground elements matter.
      if (arc_count[j] == 0 && arb_roots[j].second < 0) {
        bool shadowed = false;
        for (size_t i = 0; i < j; ++i) {
          if (arc_count[i] == 0 && arb_roots[i].first == arb_roots[j].first) {
            shadowed = true;
            break;
          }
        }
        if (shadowed) continue;
      }
      if (arc_count[j] >= n - 1) continue;
      for (size_t a = 0; a < edge.arcs.size(); ++a) {
        const auto [tail, head] = edge.arcs[a];
        if (!arc_legal(j, tail, head)) continue;
        apply_arc(idx, j, static_cast<int>(a), tail, head);
        if (assign(idx + 1)) return true;
        undo_arc(idx, j, tail, head);
      }
    }
    return false;
  }

  bool arc_legal(size_t j, int tail, int head) const {
    if (head == arb_roots[j].first) return false;
    if (parent[j][static_cast<size_t>(head)] != -1) return false;
    for (int w = tail; w != -1; w = parent[j][static_cast<size_t>(w)]) {
      if (w == head) return false;  // would close a cycle
    }
    if (coverage >= 0) {
      if (touch[j][static_cast<size_t>(tail)] == 0 &&
          covered[static_cast<size_t>(tail)] + 1 > coverage) {
        return false;
      }
      if (touch[j][static_cast<size_t>(head)] == 0 &&
          covered[static_cast<size_t>(head)] + 1 > coverage) {
        return false;
      }
    }
    return true;
  }

  void apply_arc(size_t idx, size_t j, int arc, int tail, int head) {
    chosen[idx] = {static_cast<int>(j), arc};
    parent[j][static_cast<size_t>(head)] = tail;
    arc_count[j] += 1;
    for (int v : {tail, head}) {
      if (touch[j][static_cast<size_t>(v)]++ == 0) {
        covered[static_cast<size_t>(v)] += 1;
        touched_count[j] += 1;
      }
    }
  }

  void undo_arc(size_t idx, size_t j, int tail, int head) {
    chosen[idx] = {-1, -1};
    parent[j][static_cast<size_t>(head)] = -1;
    arc_count[j] -= 1;
    for (int v : {tail, head}) {
      if (--touch[j][static_cast<size_t>(v)] == 0) {
        covered[static_cast<size_t>(v)] -= 1;
        touched_count[j] -= 1;
      }
    }
  }

  bool final_check() const {
    for (size_t j = 0; j < arb_roots.size(); ++j) {
      for (int v = 0; v < n; ++v) {
        if (touch[j][static_cast<size_t>(v)] == 0) continue;
        if (v != arb_roots[j].first && parent[j][static_cast<size_t>(v)] == -1) {
          return false;  // touched but disconnected from the root
        }
      }
      if (spanning) {
        for (int v = 0; v < n; ++v) {
          if (touch[j][static_cast<size_t>(v)] == 0) return false;
        }
      }
    }
    if (coverage >= 0) {
      for (long long c : covered) {
        if (c != coverage) return false;
      }
    }
    if (instance.mode == PackingMode::m_based) {
      const long long target = instance.matroid.full_rank();
      for (int v = 0; v < n; ++v) {
        uint32_t elems = 0;
        for (size_t j = 0; j < arb_roots.size(); ++j) {
          if (touch[j][static_cast<size_t>(v)] > 0) {
            elems |= 1u << arb_roots[j].second;
          }
        }
        if (std::popcount(elems) != target || instance.matroid.rank(elems) != target) {
          return false;
        }
      }
    }
    return true;
  }

  void build_witness(PackingWitness* out) const {
    out->arborescences.clear();
    out->arborescences.reserve(arb_roots.size());
    for (const auto& [vertex, element] : arb_roots) {
      ArborescenceWitness arb;
      arb.root_vertex = vertex;
      arb.root_element = element;
      out->arborescences.push_back(std::move(arb));
    }
    for (size_t idx = 0; idx < edges.size(); ++idx) {
      const auto [j, a] = chosen[idx];
      if (j < 0) continue;
      const SearchEdge& edge = edges[idx];
      ArcChoice choice;
      choice.from_hyperedge = edge.from_hyperedge;
      choice.edge_index = edge.edge_index;
      choice.copy = edge.copy;
      choice.tail = edge.arcs[static_cast<size_t>(a)].first;
      choice.head = edge.arcs[static_cast<size_t>(a)].second;
      out->arborescences[static_cast<size_t>(j)].arcs.push_back(choice);
    }
  }
};

}  // namespace

std::optional<PackingWitness> exhaustive_packing_search(const PackingInstance& instance) {
  const MixedHypergraph& graph = instance.graph;
  const VertexUniverse& u = graph.universe;
  const int n = u.n();
  if (n > kMaxPackingSearchVertices) {
    throw CapacityError("packing search supports at most 5 vertices");
  }
  const long long total_edges =
      checked_add(graph.hyperedge_count(), graph.dyperedge_count());
  if (total_edges > kMaxPackingSearchEdges) {
    throw CapacityError("packing search supports at most 7 edge copies");
  }
  const PackingMode mode = instance.mode;
  const bool mixed = mode == PackingMode::m_rooted_fgk_mixed;
  if (!mixed) require_dyper_only(graph);

  const bool uses_k = mode == PackingMode::k_regular || mode == PackingMode::fg_bounded ||
                      mode == PackingMode::m_rooted_fgk_dyper || mixed;
  if (uses_k) {
    if (instance.k < 0) throw DomainError("regularity must be nonnegative");
    if (instance.k > kMaxPackingSearchRegularity) {
      throw CapacityError("packing search supports regularity at most 2");
    }
  }
  const bool uses_roots = mode != PackingMode::fg_bounded;
  if (uses_roots && instance.roots.size() > kMaxPackingSearchRoots) {
    throw CapacityError("packing search supports at most 4 root elements");
  }
  const bool uses_matroid = mode == PackingMode::m_based ||
                            mode == PackingMode::m_rooted_fgk_dyper || mixed;
  if (uses_matroid) require_matroid_fits(instance.roots, instance.matroid);
  const bool uses_bounds = mode == PackingMode::fg_bounded ||
                           mode == PackingMode::m_rooted_fgk_dyper || mixed;
  if (uses_bounds) require_bounds(graph, instance.f, instance.g);

  Searcher searcher(instance);
  searcher.spanning = mode == PackingMode::edmonds || mode == PackingMode::fg_bounded;
  if (mode == PackingMode::k_regular || mode == PackingMode::m_rooted_fgk_dyper || mixed) {
    searcher.coverage = instance.k;
  } else if (mode == PackingMode::m_based) {
    searcher.coverage = instance.matroid.full_rank();
  }

  for (size_t i = 0; i < graph.hyperedges.size(); ++i) {
    const auto& [e, mult] = graph.hyperedges[i];
    std::vector<std::pair<int, int>> arcs;
    const std::vector<int> members = e.members.elements();
    for (int tail : members) {
      for (int head : members) {
        if (tail != head) arcs.emplace_back(tail, head);
      }
    }
    for (long long c = 0; c < mult; ++c) {
      searcher.edges.push_back(SearchEdge{true, static_cast<int>(i), c, arcs});
    }
  }
  for (size_t i = 0; i < graph.dyperedges.size(); ++i) {
    const auto& [d, mult] = graph.dyperedges[i];
    std::vector<std::pair<int, int>> arcs;
    for (int tail : d.tails.elements()) arcs.emplace_back(tail, d.head);
    for (long long c = 0; c < mult; ++c) {
      searcher.edges.push_back(SearchEdge{false, static_cast<int>(i), c, arcs});
    }
  }

  PackingWitness witness;
  const auto try_config = [&](std::vector<std::pair<int, int>> roots_for_config) {
    return searcher.run_config(std::move(roots_for_config), &witness);
  };

  switch (mode) {
    case PackingMode::edmonds:
    case PackingMode::k_regular: {
      std::vector<std::pair<int, int>> config;
      for (int e = 0; e < instance.roots.size(); ++e) {
        config.emplace_back(instance.roots.vertex_of[static_cast<size_t>(e)], e);
      }
      if (try_config(std::move(config))) return witness;
      return std::nullopt;
    }
    case PackingMode::fg_bounded: {
      // Nondecreasing root-vertex sequences of length k, pre-filtered by the
      // per-vertex bounds.
      std::vector<int> seq;
      const auto emit = [&](auto&& self, int from) -> bool {
        if (static_cast<long long>(seq.size()) == instance.k) {
          std::vector<long long> count(static_cast<size_t>(n), 0);
          for (int v : seq) count[static_cast<size_t>(v)] += 1;
          for (size_t v = 0; v < static_cast<size_t>(n); ++v) {
            if (count[v] < instance.f[v] || count[v] > instance.g[v]) return false;
          }
          std::vector<std::pair<int, int>> config;
          for (int v : seq) config.emplace_back(v, -1);
          return try_config(std::move(config));
        }
        for (int v = from; v < n; ++v) {
          seq.push_back(v);
          if (self(self, v)) return true;
          seq.pop_back();
        }
        return false;
      };
      if (emit(emit, 0)) return witness;
      return std::nullopt;
    }
    case PackingMode::m_based: {
      const uint32_t ground = instance.roots.full_ground();
      for (uint32_t r = 0;; ++r) {
        if ((r & ~ground) == 0) {
          std::vector<std::pair<int, int>> config;
          for (uint32_t rest = r; rest != 0; rest &= rest - 1) {
            const int e = std::countr_zero(rest);
            config.emplace_back(instance.roots.vertex_of[static_cast<size_t>(e)], e);
          }
          if (try_config(std::move(config))) return witness;
        }
        if (r == ground) break;
      }
      return std::nullopt;
    }
    case PackingMode::m_rooted_fgk_dyper:
    case PackingMode::m_rooted_fgk_mixed: {
      const uint32_t ground = instance.roots.full_ground();
      const int target = instance.matroid.full_rank();
      for (uint32_t basis = 0;; ++basis) {
        if ((basis & ~ground) == 0 && std::popcount(basis) == target &&
            instance.matroid.rank(basis) == target) {
          std::vector<long long> count(static_cast<size_t>(n), 0);
          std::vector<std::pair<int, int>> config;
          for (uint32_t rest = basis; rest != 0; rest &= rest - 1) {
            const int e = std::countr_zero(rest);
            const int v = instance.roots.vertex_of[static_cast<size_t>(e)];
            count[static_cast<size_t>(v)] += 1;
            config.emplace_back(v, e);
          }
          bool ok = true;
          for (size_t v = 0; v < static_cast<size_t>(n); ++v) {
            if (count[v] < instance.f[v] || count[v] > instance.g[v]) {
              ok = false;
              break;
            }
          }
          if (ok && try_config(std::move(config))) return witness;
        }
        if (basis == ground) break;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool validate_packing_witness(const PackingInstance& instance, const PackingWitness& witness) {
  const MixedHypergraph& graph = instance.graph;
  const VertexUniverse& u = graph.universe;
  const int n = u.n();
  const PackingMode mode = instance.mode;

  // Edge legality and copy disjointness.
  std::vector<std::tuple<bool, int, long long>> used;
  for (const ArborescenceWitness& arb : witness.arborescences) {
    if (arb.root_vertex < 0 || arb.root_vertex >= n) return false;
    for (const ArcChoice& arc : arb.arcs) {
      if (arc.tail < 0 || arc.tail >= n || arc.head < 0 || arc.head >= n) return false;
      if (arc.tail == arc.head) return false;
      if (arc.from_hyperedge) {
        if (arc.edge_index < 0 ||
            arc.edge_index >= static_cast<int>(graph.hyperedges.size())) {
          return false;
        }
        const auto& [e, mult] = graph.hyperedges[static_cast<size_t>(arc.edge_index)];
        if (arc.copy < 0 || arc.copy >= mult) return false;
        if (!e.members.contains(arc.tail) || !e.members.contains(arc.head)) return false;
      } else {
        if (arc.edge_index < 0 ||
            arc.edge_index >= static_cast<int>(graph.dyperedges.size())) {
          return false;
        }
        const auto& [d, mult] = graph.dyperedges[static_cast<size_t>(arc.edge_index)];
        if (arc.copy < 0 || arc.copy >= mult) return false;
        if (arc.head != d.head || !d.tails.contains(arc.tail)) return false;
      }
      const auto key = std::make_tuple(arc.from_hyperedge, arc.edge_index, arc.copy);
      if (std::find(used.begin(), used.end(), key) != used.end()) return false;
      used.push_back(key);
    }
  }

  // Arborescence shape: root in-degree 0, unique in-arcs, all touched
  // vertices reachable from the root.
  std::vector<VertexSet> touched(witness.arborescences.size());
  for (size_t j = 0; j < witness.arborescences.size(); ++j) {
    const ArborescenceWitness& arb = witness.arborescences[j];
    VertexSet verts = VertexSet{}.with(arb.root_vertex);
    std::vector<int> indeg(static_cast<size_t>(n), 0);
    for (const ArcChoice& arc : arb.arcs) {
      verts = verts.with(arc.tail).with(arc.head);
      indeg[static_cast<size_t>(arc.head)] += 1;
    }
    if (indeg[static_cast<size_t>(arb.root_vertex)] != 0) return false;
    for (int v : verts.elements()) {
      if (v != arb.root_vertex && indeg[static_cast<size_t>(v)] != 1) return false;
    }
    VertexSet reached = VertexSet{}.with(arb.root_vertex);
    for (;;) {
      bool grew = false;
      for (const ArcChoice& arc : arb.arcs) {
        if (reached.contains(arc.tail) && !reached.contains(arc.head)) {
          reached = reached.with(arc.head);
          grew = true;
        }
      }
      if (!grew) break;
    }
    if (!(verts == reached)) return false;
    touched[j] = verts;
  }

  const auto roots_are_distinct_elements = [&]() {
    std::vector<int> elems;
    for (const ArborescenceWitness& arb : witness.arborescences) {
      if (arb.root_element < 0 || arb.root_element >= instance.roots.size()) return false;
      if (instance.roots.vertex_of[static_cast<size_t>(arb.root_element)] != arb.root_vertex) {
        return false;
      }
      if (std::find(elems.begin(), elems.end(), arb.root_element) != elems.end()) return false;
      elems.push_back(arb.root_element);
    }
    return true;
  };
  const auto every_vertex_in_exactly = [&](long long k) {
    for (int v = 0; v < n; ++v) {
      long long count = 0;
      for (const VertexSet& t : touched) {
        if (t.contains(v)) ++count;
      }
      if (count != k) return false;
    }
    return true;
  };
  const auto all_spanning = [&]() {
    for (const VertexSet& t : touched) {
      if (!(t == u.full())) return false;
    }
    return true;
  };

  switch (mode) {
    case PackingMode::edmonds: {
      if (!roots_are_distinct_elements()) return false;
      if (witness.arborescences.size() != static_cast<size_t>(instance.roots.size())) {
        return false;
      }
      return all_spanning();
    }
    case PackingMode::k_regular: {
      if (!roots_are_distinct_elements()) return false;
      if (witness.arborescences.size() != static_cast<size_t>(instance.roots.size())) {
        return false;
      }
      return every_vertex_in_exactly(instance.k);
    }
    case PackingMode::fg_bounded: {
      if (witness.arborescences.size() != static_cast<size_t>(instance.k)) return false;
      if (!all_spanning()) return false;
      for (int v = 0; v < n; ++v) {
        long long rooted = 0;
        for (const ArborescenceWitness& arb : witness.arborescences) {
          if (arb.root_vertex == v) ++rooted;
        }
        if (rooted < instance.f[static_cast<size_t>(v)] ||
            rooted > instance.g[static_cast<size_t>(v)]) {
          return false;
        }
      }
      return true;
    }
    case PackingMode::m_based: {
      if (!roots_are_distinct_elements()) return false;
      const long long target = instance.matroid.full_rank();
      for (int v = 0; v < n; ++v) {
        uint32_t elems = 0;
        for (size_t j = 0; j < witness.arborescences.size(); ++j) {
          if (touched[j].contains(v)) {
            elems |= 1u << witness.arborescences[j].root_element;
          }
        }
        if (std::popcount(elems) != target || instance.matroid.rank(elems) != target) {
          return false;
        }
      }
      return true;
    }
    case PackingMode::m_rooted_fgk_dyper:
    case PackingMode::m_rooted_fgk_mixed: {
      if (mode == PackingMode::m_rooted_fgk_dyper) {
        for (const ArborescenceWitness& arb : witness.arborescences) {
          for (const ArcChoice& arc : arb.arcs) {
            if (arc.from_hyperedge) return false;
          }
        }
      }
      if (!roots_are_distinct_elements()) return false;
      uint32_t basis = 0;
      for (const ArborescenceWitness& arb : witness.arborescences) {
        basis |= 1u << arb.root_element;
      }
      const long long target = instance.matroid.full_rank();
      if (std::popcount(basis) != target || instance.matroid.rank(basis) != target) {
        return false;
      }
      if (!every_vertex_in_exactly(instance.k)) return false;
      for (int v = 0; v < n; ++v) {
        long long rooted = 0;
        for (const ArborescenceWitness& arb : witness.arborescences) {
          if (arb.root_vertex == v) ++rooted;
        }
        if (rooted < instance.f[static_cast<size_t>(v)] ||
            rooted > instance.g[static_cast<size_t>(v)]) {
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

}  // namespace mho

#include "mho/gen.hpp"

#include <algorithm>
#include <numeric>

#include "mho/subpartitions.hpp"

namespace mho {

namespace {

VertexUniverse letter_universe(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return VertexUniverse::make(std::move(labels));
}

// Random s-subset of {0..n-1} via a partial shuffle.
VertexSet random_subset(Rng& rng, int n, int min_size, int max_size) {
  std::vector<int> verts(static_cast<size_t>(n));
  std::iota(verts.begin(), verts.end(), 0);
  const int s = static_cast<int>(rng.uniform(min_size, max_size));
  VertexSet out;
  for (int i = 0; i < s; ++i) {
    std::swap(verts[static_cast<size_t>(i)],
              verts[static_cast<size_t>(rng.uniform(i, n - 1))]);
    out = out.with(verts[static_cast<size_t>(i)]);
  }
  return out;
}

Dyperedge random_dyperedge(Rng& rng, int n, int max_tails) {
  const int head = static_cast<int>(rng.uniform(0, n - 1));
  std::vector<int> others;
  for (int v = 0; v < n; ++v) {
    if (v != head) others.push_back(v);
  }
  const int cap = std::min<int>(max_tails, static_cast<int>(others.size()));
  const int s = static_cast<int>(rng.uniform(1, cap));
  VertexSet tails;
  for (int i = 0; i < s; ++i) {
    std::swap(others[static_cast<size_t>(i)],
              others[static_cast<size_t>(rng.uniform(i, static_cast<int>(others.size()) - 1))]);
    tails = tails.with(others[static_cast<size_t>(i)]);
  }
  return Dyperedge::make(tails, head);
}

MatroidSpec random_structural_matroid(Rng& rng, int m, bool basic_kinds_only) {
  switch (rng.uniform(0, basic_kinds_only ? 2 : 3)) {
    case 0:
      return MatroidSpec::free_matroid(m);
    case 1:
      return MatroidSpec::uniform(m, static_cast<int>(rng.uniform(0, m + 1)));
    case 2: {
      std::vector<uint32_t> buckets(static_cast<size_t>(std::max(m, 1)), 0);
      for (int e = 0; e < m; ++e) {
        buckets[static_cast<size_t>(rng.uniform(0, m - 1))] |= 1u << e;
      }
      std::vector<uint32_t> classes;
      std::vector<int> capacities;
      for (uint32_t b : buckets) {
        if (b == 0) continue;
        classes.push_back(b);
        capacities.push_back(static_cast<int>(rng.uniform(0, 2)));
      }
      return MatroidSpec::partition(m, std::move(classes), std::move(capacities));
    }
    default: {
      const int nodes = static_cast<int>(rng.uniform(1, m + 1));
      std::vector<std::pair<int, int>> edges;
      for (int e = 0; e < m; ++e) {
        edges.emplace_back(static_cast<int>(rng.uniform(0, nodes - 1)),
                           static_cast<int>(rng.uniform(0, nodes - 1)));
      }
      return MatroidSpec::graphic(m, nodes, std::move(edges));
    }
  }
}

}  // namespace

MatroidSpec random_matroid(Rng& rng, int m) {
  if (rng.chance(20) && m <= kMaxTableGroundElements) {
    // Tabulate another kind so the table passes the axiom checks.
    const MatroidSpec base = random_structural_matroid(rng, m, false);
    std::vector<int> ranks;
    ranks.reserve(1u << m);
    for (uint32_t g = 0; g < (1u << m); ++g) ranks.push_back(base.rank(g));
    return MatroidSpec::table(m, std::move(ranks));
  }
  return random_structural_matroid(rng, m, false);
}

RootPlacement random_roots(Rng& rng, int n, int m) {
  std::vector<int> vertices;
  vertices.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) vertices.push_back(static_cast<int>(rng.uniform(0, n - 1)));
  return RootPlacement::make(std::move(vertices));
}

Subpartition random_subpartition(Rng& rng, const VertexUniverse& u) {
  std::vector<VertexSet> buckets(static_cast<size_t>(u.n()));
  for (int v = 0; v < u.n(); ++v) {
    const long long bucket = rng.uniform(0, u.n());  // 0 leaves the vertex out
    if (bucket > 0) {
      buckets[static_cast<size_t>(bucket - 1)] = buckets[static_cast<size_t>(bucket - 1)].with(v);
    }
  }
  std::vector<VertexSet> members;
  for (VertexSet b : buckets) {
    if (!b.empty()) members.push_back(b);
  }
  return Subpartition::make(std::move(members));
}

namespace {

// phi applied to |X|; convex phi gives a supermodular demand, concave phi a
// submodular allowance.
SetFunction cardinality_table(const VertexUniverse& u, const std::vector<long long>& phi,
                              bool include_empty) {
  std::vector<std::pair<VertexSet, long long>> entries;
  const uint32_t full = u.full().mask;
  for (uint32_t x = include_empty ? 0u : 1u; x <= full; ++x) {
    const VertexSet set{x};
    entries.emplace_back(set, phi[static_cast<size_t>(set.size())]);
  }
  return SetFunction::table(std::move(entries), 0);
}

SetFunction random_demand(Rng& rng, const VertexUniverse& u, const std::string& family) {
  const int n = u.n();
  std::string pick = family;
  if (pick == "any") {
    switch (rng.uniform(0, 3)) {
      case 0: pick = "constant"; break;
      case 1: pick = "k_minus_rank"; break;
      case 2: pick = "cardinality"; break;
      default: pick = n <= 3 ? "table" : "k_minus_rank"; break;
    }
  }
  if (pick == "constant") return SetFunction::constant(rng.uniform(0, 3));
  if (pick == "k_minus_rank") {
    const int m = static_cast<int>(rng.uniform(0, 4));
    RootPlacement roots = random_roots(rng, n, m);
    MatroidSpec matroid = random_matroid(rng, m);
    const long long k = rng.uniform(0, matroid.full_rank() + 2);
    return SetFunction::rank_deficit(k, std::move(roots), std::move(matroid));
  }
  if (pick == "cardinality") {
    std::vector<long long> phi(static_cast<size_t>(n) + 1, 0);
    long long increment = rng.uniform(-1, 1);
    for (int s = 1; s <= n; ++s) {
      phi[static_cast<size_t>(s)] = phi[static_cast<size_t>(s - 1)] + increment;
      increment += rng.uniform(0, 1);  // nondecreasing increments: convex
    }
    return cardinality_table(u, phi, false);
  }
  if (pick == "table") {
    if (n > 3) throw DomainError("filtered demand tables need at most 3 vertices");
    for (int attempt = 0; attempt < 50; ++attempt) {
      std::vector<std::pair<VertexSet, long long>> entries;
      const uint32_t full = u.full().mask;
      for (uint32_t x = 1; x <= full; ++x) {
        entries.emplace_back(VertexSet{x}, rng.uniform(-1, 2));
      }
      SetFunction f = SetFunction::table(std::move(entries), 0);
      if (!is_intersecting_supermodular(f, u)) return f;
    }
    return random_demand(rng, u, "cardinality");
  }
  throw DomainError("unknown demand family: " + family);
}

SetFunction random_allowance(Rng& rng, const VertexUniverse& u, const std::string& family) {
  const int n = u.n();
  std::string pick = family;
  if (pick == "any") {
    switch (rng.uniform(0, 4)) {
      case 0: pick = "constant"; break;
      case 1: pick = "modular"; break;
      case 2: pick = "rank"; break;
      case 3: pick = "cardinality"; break;
      default: pick = n <= 3 ? "table" : "modular"; break;
    }
  }
  if (pick == "constant") return SetFunction::constant(rng.uniform(0, 2));
  if (pick == "modular") {
    std::vector<long long> weights(static_cast<size_t>(n), 0);
    for (auto& w : weights) w = rng.uniform(0, 2);
    return SetFunction::modular(std::move(weights), rng.uniform(0, 1));
  }
  if (pick == "rank") {
    const int m = static_cast<int>(rng.uniform(0, 4));
    RootPlacement roots = random_roots(rng, n, m);
    MatroidSpec matroid = random_matroid(rng, m);
    return SetFunction::matroid_rank(std::move(roots), std::move(matroid));
  }
  if (pick == "cardinality") {
    std::vector<long long> phi(static_cast<size_t>(n) + 1, 0);
    long long increment = rng.uniform(0, 2);
    for (int s = 1; s <= n; ++s) {
      phi[static_cast<size_t>(s)] = phi[static_cast<size_t>(s - 1)] + increment;
      increment -= rng.uniform(0, 1);  // nonincreasing increments: concave
    }
    return cardinality_table(u, phi, true);
  }
  if (pick == "table") {
    if (n > 3) throw DomainError("filtered allowance tables need at most 3 vertices");
    for (int attempt = 0; attempt < 50; ++attempt) {
      std::vector<std::pair<VertexSet, long long>> entries;
      const uint32_t full = u.full().mask;
      entries.emplace_back(VertexSet{}, rng.uniform(0, 1));
      for (uint32_t x = 1; x <= full; ++x) {
        entries.emplace_back(VertexSet{x}, rng.uniform(0, 2));
      }
      SetFunction f = SetFunction::table(std::move(entries), 0);
      if (!is_submodular(f, u)) return f;
    }
    return random_allowance(rng, u, "cardinality");
  }
  throw DomainError("unknown allowance family: " + family);
}

}  // namespace

Instance generate_instance(const GenOptions& opt) {
  if (opt.n < 1 || opt.n > kMaxEnumerationVertices) {
    throw DomainError("generator supports between 1 and 12 vertices");
  }
  Rng rng(opt.seed);
  const int n = opt.n;
  VertexUniverse u = letter_universe(n);

  int hyper_count = opt.hyperedges >= 0 ? opt.hyperedges : static_cast<int>(rng.uniform(0, 4));
  int dyper_count = opt.dyperedges >= 0 ? opt.dyperedges : static_cast<int>(rng.uniform(0, 4));
  if (n < 2) {
    if (opt.hyperedges > 0 || opt.dyperedges > 0) {
      throw DomainError("edges need at least two vertices");
    }
    hyper_count = 0;
    dyper_count = 0;
  }
  std::vector<Hyperedge> hyperedges;
  for (int i = 0; i < hyper_count; ++i) {
    hyperedges.push_back(Hyperedge::make(random_subset(rng, n, 2, std::min(n, 4))));
  }
  std::vector<Dyperedge> dyperedges;
  for (int i = 0; i < dyper_count; ++i) {
    dyperedges.push_back(random_dyperedge(rng, n, 3));
  }

  Instance out;
  out.graph = MixedHypergraph::make(std::move(u), hyperedges, dyperedges);
  out.demand = random_demand(rng, out.graph.universe, opt.h_family);
  out.allowance = random_allowance(rng, out.graph.universe, opt.b_family);
  return out;
}

Instance generate_packing_instance(const PackingGenOptions& opt) {
  if (opt.n < 1 || opt.n > kMaxPackingSearchVertices) {
    throw DomainError("packing generator supports between 1 and 5 vertices");
  }
  Rng rng(opt.seed);
  const int n = opt.n;
  VertexUniverse u = letter_universe(n);
  const bool mixed = opt.mode == PackingMode::m_rooted_fgk_mixed;

  const bool rooted = opt.mode == PackingMode::m_rooted_fgk_dyper || mixed;
  int total = opt.edges >= 0
                  ? opt.edges
                  : static_cast<int>(rooted ? rng.uniform(2, mixed ? 5 : 7)
                                            : rng.uniform(1, mixed ? 5 : 6));
  if (total > kMaxPackingSearchEdges) {
    throw DomainError("packing generator caps at 7 edge copies");
  }
  if (n < 2) total = 0;
  std::vector<Hyperedge> hyperedges;
  std::vector<Dyperedge> dyperedges;
  for (int i = 0; i < total; ++i) {
    if (mixed && rng.chance(40)) {
      hyperedges.push_back(Hyperedge::make(random_subset(rng, n, 2, std::min(n, 3))));
    } else {
      dyperedges.push_back(random_dyperedge(rng, n, rng.chance(70) ? 1 : std::min(n - 1, 2)));
    }
  }

  Instance out;
  out.graph = MixedHypergraph::make(std::move(u), hyperedges, dyperedges);
  out.demand = SetFunction::constant(1);
  out.allowance = SetFunction::constant(0);

  PackingSetup setup;
  setup.mode = opt.mode;
  // loose = true biases the bounds wide open so the basis and coverage
  // constraints of the m_rooted modes stay satisfiable often enough for the
  // search-versus-checker campaigns to see both verdicts.
  const auto fill_bounds = [&](bool loose) {
    setup.f.assign(static_cast<size_t>(n), 0);
    setup.g.assign(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
      setup.f[static_cast<size_t>(v)] = rng.chance(loose ? 10 : 20) ? 1 : 0;
      setup.g[static_cast<size_t>(v)] =
          (loose && rng.chance(70)) ? std::max(setup.k, 1ll) : rng.uniform(0, 2);
    }
  };
  switch (opt.mode) {
    case PackingMode::edmonds:
      setup.roots = random_roots(rng, n, static_cast<int>(rng.uniform(0, 2)));
      break;
    case PackingMode::k_regular:
      setup.k = rng.uniform(0, kMaxPackingSearchRegularity);
      setup.roots = random_roots(rng, n, static_cast<int>(rng.uniform(0, 3)));
      break;
    case PackingMode::fg_bounded:
      setup.k = rng.uniform(0, kMaxPackingSearchRegularity);
      fill_bounds(false);
      break;
    case PackingMode::m_based: {
      const int m = static_cast<int>(rng.uniform(0, 3));
      setup.roots = random_roots(rng, n, m);
      setup.matroid = random_matroid(rng, m);
      break;
    }
    case PackingMode::m_rooted_fgk_dyper:
    case PackingMode::m_rooted_fgk_mixed: {
      setup.k = rng.uniform(0, kMaxPackingSearchRegularity);
      fill_bounds(true);
      const int m = static_cast<int>(rng.uniform(0, 3));
      setup.roots = random_roots(rng, n, m);
      setup.matroid = mixed ? random_structural_matroid(rng, m, true)
                            : random_matroid(rng, m);
      break;
    }
  }
  out.packing = std::move(setup);
  return out;
}

}  // namespace mho

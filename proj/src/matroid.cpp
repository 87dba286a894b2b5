#include "mho/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace mho {

RootPlacement RootPlacement::make(std::vector<int> vertices) {
  if (vertices.size() > static_cast<size_t>(kMaxGroundElements)) {
    throw CapacityError("root placement supports at most 24 ground elements");
  }
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw DomainError("root vertex out of range");
  }
  return RootPlacement{std::move(vertices)};
}

uint32_t RootPlacement::restrict_to(VertexSet x) const {
  uint32_t out = 0;
  for (size_t i = 0; i < vertex_of.size(); ++i) {
    if (x.contains(vertex_of[i])) out |= 1u << i;
  }
  return out;
}

long long RootPlacement::multiplicity(int v) const {
  return std::count(vertex_of.begin(), vertex_of.end(), v);
}

static void require_ground_size(int m, int cap) {
  if (m < 0 || m > cap) throw CapacityError("matroid ground set too large");
}

MatroidSpec MatroidSpec::free_matroid(int m) {
  require_ground_size(m, kMaxGroundElements);
  MatroidSpec spec;
  spec.kind = Kind::free;
  spec.m = m;
  return spec;
}

MatroidSpec MatroidSpec::uniform(int m, int rank) {
  require_ground_size(m, kMaxGroundElements);
  if (rank < 0) throw DomainError("uniform matroid rank must be nonnegative");
  MatroidSpec spec;
  spec.kind = Kind::uniform;
  spec.m = m;
  spec.uniform_rank = rank;
  return spec;
}

MatroidSpec MatroidSpec::partition(int m, std::vector<uint32_t> classes,
                                   std::vector<int> capacities) {
  require_ground_size(m, kMaxGroundElements);
  if (classes.size() != capacities.size()) {
    throw DomainError("partition matroid needs one capacity per class");
  }
  uint32_t seen = 0;
  for (uint32_t c : classes) {
    if (c == 0) throw DomainError("partition matroid classes must be nonempty");
    if (c & seen) throw DomainError("partition matroid classes must be disjoint");
    seen |= c;
  }
  const uint32_t full = (m == 0) ? 0u : (1u << m) - 1u;
  if (seen != full) throw DomainError("partition matroid classes must cover the ground set");
  for (int cap : capacities) {
    if (cap < 0) throw DomainError("partition matroid capacities must be nonnegative");
  }
  MatroidSpec spec;
  spec.kind = Kind::partition;
  spec.m = m;
  spec.classes = std::move(classes);
  spec.capacities = std::move(capacities);
  return spec;
}

MatroidSpec MatroidSpec::graphic(int m, int nodes, std::vector<std::pair<int, int>> edges) {
  require_ground_size(m, kMaxGroundElements);
  if (static_cast<int>(edges.size()) != m) {
    throw DomainError("graphic matroid needs one auxiliary edge per ground element");
  }
  if (nodes < 0) throw DomainError("graphic matroid node count must be nonnegative");
  for (auto [a, b] : edges) {
    if (a < 0 || a >= nodes || b < 0 || b >= nodes) {
      throw DomainError("graphic matroid edge endpoint out of range");
    }
  }
  MatroidSpec spec;
  spec.kind = Kind::graphic;
  spec.m = m;
  spec.graphic_nodes = nodes;
  spec.graphic_edges = std::move(edges);
  return spec;
}

MatroidSpec MatroidSpec::table(int m, std::vector<int> ranks) {
  require_ground_size(m, kMaxTableGroundElements);
  if (ranks.size() != (1ull << m)) {
    throw DomainError("rank table must list one value per ground subset");
  }
  if (ranks[0] != 0) throw DomainError("rank table must assign 0 to the empty set");
  const uint32_t full = (m == 0) ? 0u : (1u << m) - 1u;
  for (uint32_t g = 0; g <= full; ++g) {
    for (int e = 0; e < m; ++e) {
      if ((g >> e) & 1u) continue;
      const int step = ranks[g | (1u << e)] - ranks[g];
      if (step < 0 || step > 1) {
        throw DomainError("rank table increments must be 0 or 1");
      }
      // Local exchange inequality; together with unit increments it forces
      // submodularity on all pairs.
      for (int f = e + 1; f < m; ++f) {
        if ((g >> f) & 1u) continue;
        if (ranks[g | (1u << e)] + ranks[g | (1u << f)] <
            ranks[g | (1u << e) | (1u << f)] + ranks[g]) {
          throw DomainError("rank table violates submodularity");
        }
      }
    }
  }
  MatroidSpec spec;
  spec.kind = Kind::table;
  spec.m = m;
  spec.table_ranks = std::move(ranks);
  return spec;
}

namespace {

// Tiny union-find for graphic ranks.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<size_t>(a)] = b;
    return true;
  }
};

}  // namespace

int MatroidSpec::rank(uint32_t ground_subset) const {
  switch (kind) {
    case Kind::free:
      return std::popcount(ground_subset);
    case Kind::uniform:
      return std::min(std::popcount(ground_subset), uniform_rank);
    case Kind::partition: {
      int total = 0;
      for (size_t c = 0; c < classes.size(); ++c) {
        total += std::min(std::popcount(ground_subset & classes[c]), capacities[c]);
      }
      return total;
    }
    case Kind::graphic: {
      Dsu dsu(graphic_nodes);
      int total = 0;
      for (uint32_t rest = ground_subset; rest != 0; rest &= rest - 1) {
        const auto [a, b] = graphic_edges[static_cast<size_t>(std::countr_zero(rest))];
        if (dsu.unite(a, b)) ++total;
      }
      return total;
    }
    case Kind::table:
      return table_ranks[ground_subset];
  }
  throw DomainError("unknown matroid kind");
}

}  // namespace mho

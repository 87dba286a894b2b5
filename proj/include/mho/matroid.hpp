#pragma once

// Matroid rank oracles over a small ground set, plus root placements that
// map ground elements onto vertices of the universe. Ground subsets are bit
// masks, element i <-> bit i.

#include <cstdint>
#include <utility>
#include <vector>

#include "mho/errors.hpp"
#include "mho/model.hpp"

namespace mho {

inline constexpr int kMaxGroundElements = 24;
inline constexpr int kMaxTableGroundElements = 16;

// Multiset of root vertices. Ground element i is the i-th entry; several
// elements may sit on the same vertex and stay distinct.
struct RootPlacement {
  std::vector<int> vertex_of;

  static RootPlacement make(std::vector<int> vertices);

  int size() const { return static_cast<int>(vertex_of.size()); }
  uint32_t full_ground() const { return (1u << size()) - 1u; }

  // Ground elements sitting on vertices of x.
  uint32_t restrict_to(VertexSet x) const;

  long long multiplicity(int v) const;

  bool operator==(const RootPlacement&) const = default;
};

struct MatroidSpec {
  enum class Kind { free, uniform, partition, graphic, table };

  Kind kind = Kind::free;
  int m = 0;
  int uniform_rank = 0;
  std::vector<uint32_t> classes;     // partition: disjoint masks covering the ground
  std::vector<int> capacities;       // partition: per-class independence cap
  int graphic_nodes = 0;             // graphic: auxiliary node count
  std::vector<std::pair<int, int>> graphic_edges;  // graphic: element i -> edge
  std::vector<int> table_ranks;      // table: 2^m entries indexed by mask

  static MatroidSpec free_matroid(int m);
  static MatroidSpec uniform(int m, int rank);
  static MatroidSpec partition(int m, std::vector<uint32_t> classes, std::vector<int> capacities);
  static MatroidSpec graphic(int m, int nodes, std::vector<std::pair<int, int>> edges);
  // Validates the rank axioms (zero at the empty set, unit increments,
  // local submodularity) and rejects tables that break them.
  static MatroidSpec table(int m, std::vector<int> ranks);

  int rank(uint32_t ground_subset) const;
  int full_rank() const { return rank((1u << m) - 1u); }

  bool operator==(const MatroidSpec&) const = default;
};

}  // namespace mho

#pragma once

// Core combinatorial objects: vertex sets over a small labeled universe,
// hyperedges, dyperedges, mixed hypergraphs, subpartitions, and the
// "entering" relations everything else is built on.

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mho/errors.hpp"

namespace mho {

inline constexpr int kMaxVertices = 24;

// Subset of the vertex universe as a bit mask, vertex i <-> bit i.
struct VertexSet {
  uint32_t mask = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(uint32_t m) : mask(m) {}

  static VertexSet of(std::initializer_list<int> vs) {
    uint32_t m = 0;
    for (int v : vs) m |= 1u << v;
    return VertexSet{m};
  }

  constexpr bool empty() const { return mask == 0; }
  constexpr int size() const { return std::popcount(mask); }
  constexpr bool contains(int v) const { return (mask >> v) & 1u; }
  constexpr bool subset_of(VertexSet o) const { return (mask & ~o.mask) == 0; }
  constexpr bool intersects(VertexSet o) const { return (mask & o.mask) != 0; }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet{mask & o.mask}; }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet{mask | o.mask}; }
  constexpr VertexSet minus(VertexSet o) const { return VertexSet{mask & ~o.mask}; }
  constexpr VertexSet with(int v) const { return VertexSet{mask | (1u << v)}; }
  constexpr VertexSet without(int v) const { return VertexSet{mask & ~(1u << v)}; }

  // Smallest contained vertex; undefined on the empty set.
  constexpr int min_vertex() const { return std::countr_zero(mask); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(size()));
    for (uint32_t m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  auto operator<=>(const VertexSet&) const = default;
};

struct VertexUniverse {
  std::vector<std::string> labels;  // index = vertex id

  static VertexUniverse make(std::vector<std::string> labels);

  int n() const { return static_cast<int>(labels.size()); }
  VertexSet full() const { return VertexSet{(1u << n()) - 1u}; }
  const std::string& label(int v) const { return labels[static_cast<size_t>(v)]; }
  int index_of(std::string_view name) const;

  bool operator==(const VertexUniverse&) const = default;
};

// Undirected hyperedge: a vertex set of size >= 2.
struct Hyperedge {
  VertexSet members;

  static Hyperedge make(VertexSet members);

  bool operator==(const Hyperedge&) const = default;
};

// Directed hyperedge: nonempty tail set plus a head outside it. Arcs are the
// special case of a single tail.
struct Dyperedge {
  VertexSet tails;
  int head = 0;

  static Dyperedge make(VertexSet tails, int head);

  bool is_arc() const { return tails.size() == 1; }

  bool operator==(const Dyperedge&) const = default;
};

// Edge multisets are stored as (value, multiplicity) pairs; equal values are
// merged at construction, first occurrence fixing the position.
struct MixedHypergraph {
  VertexUniverse universe;
  std::vector<std::pair<Hyperedge, long long>> hyperedges;
  std::vector<std::pair<Dyperedge, long long>> dyperedges;

  static MixedHypergraph make(VertexUniverse universe,
                              const std::vector<Hyperedge>& hyperedges,
                              const std::vector<Dyperedge>& dyperedges);
  static MixedHypergraph from_multisets(VertexUniverse universe,
                                        std::vector<std::pair<Hyperedge, long long>> hyperedges,
                                        std::vector<std::pair<Dyperedge, long long>> dyperedges);

  long long hyperedge_count() const;  // with multiplicity
  long long dyperedge_count() const;

  bool operator==(const MixedHypergraph&) const = default;
};

// Family of pairwise disjoint nonempty vertex sets, kept in canonical order:
// members sorted by their smallest element.
struct Subpartition {
  std::vector<VertexSet> members;
  VertexSet ground;  // union of the members

  static Subpartition make(std::vector<VertexSet> members);
  static Subpartition empty() { return Subpartition{}; }

  size_t size() const { return members.size(); }
  bool is_empty() const { return members.empty(); }

  bool operator==(const Subpartition&) const = default;
};

// ---- entering relations ----

// A hyperedge enters a set when it meets both the set and its complement.
bool hyperedge_enters(const Hyperedge& e, VertexSet y);

// A dyperedge enters a set when its head is inside and some tail is outside.
bool dyperedge_enters(const Dyperedge& d, VertexSet x);

bool enters_some_member(const Hyperedge& e, const Subpartition& p);
bool enters_some_member(const Dyperedge& d, const Subpartition& p);

// Number of edge copies entering at least one member (each copy counts once
// even when it enters several members).
long long entering_count(const MixedHypergraph& g, const Subpartition& p);

struct EnteringEdges {
  std::vector<std::pair<Hyperedge, long long>> hyperedges;
  std::vector<std::pair<Dyperedge, long long>> dyperedges;
};
EnteringEdges entering_edges(const MixedHypergraph& g, const Subpartition& p);

// Replace a hyperedge by the dyperedge that keeps every other vertex as a
// tail and directs the edge into `head`.
Dyperedge orient_edge(const Hyperedge& e, int head);

// Shrink a dyperedge to the single arc tail -> head.
Dyperedge trim(const Dyperedge& d, int tail);

}  // namespace mho

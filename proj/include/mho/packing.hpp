#pragma once

// Desk-scale packing lab: arborescence-packing existence conditions and an
// exhaustive search that either produces a packing witness or proves none
// exists, so the two can be cross-checked on small instances.
//
// A packing assigns edge copies to arborescences; every assigned copy is
// used as a single arc (dyperedges are trimmed to one tail, hyperedges are
// first directed into a head). Each arborescence is a rooted tree with all
// arcs directed away from the root. Modes differ in how roots are chosen
// and which per-vertex counting constraints apply:
//
//   edmonds              one spanning arborescence per root-placement element
//   k_regular            roots = the placement, every vertex in exactly k
//   fg_bounded           exactly k spanning, per-vertex root counts in [f, g]
//   m_based              roots = independent ground elements; for every
//                        vertex the roots of the arborescences containing it
//                        form a basis of the matroid
//   m_rooted_fgk_dyper   roots = a basis, k-regular, root counts in [f, g]
//   m_rooted_fgk_mixed   same, with hyperedges oriented during the search

#include <optional>
#include <string>
#include <vector>

#include "mho/matroid.hpp"
#include "mho/model.hpp"

namespace mho {

inline constexpr int kMaxPackingSearchVertices = 5;
inline constexpr int kMaxPackingSearchEdges = 7;
inline constexpr long long kMaxPackingSearchRegularity = 2;
inline constexpr int kMaxPackingSearchRoots = 4;
inline constexpr int kMaxPackingCheckVertices = 8;
inline constexpr int kMaxDegreeCheckVertices = 20;

enum class PackingMode {
  edmonds,
  k_regular,
  fg_bounded,
  m_based,
  m_rooted_fgk_dyper,
  m_rooted_fgk_mixed,
};

const char* packing_mode_name(PackingMode mode);
std::optional<PackingMode> packing_mode_from_name(const std::string& name);

struct PackingInstance {
  MixedHypergraph graph;
  PackingMode mode = PackingMode::edmonds;
  long long k = 0;                 // k_regular, fg_bounded, m_rooted_*
  std::vector<long long> f;        // per vertex, fg_bounded and m_rooted_*
  std::vector<long long> g;        // per vertex, fg_bounded and m_rooted_*
  RootPlacement roots;             // edmonds, k_regular, m_based, m_rooted_*
  MatroidSpec matroid;             // m_based, m_rooted_*

  bool operator==(const PackingInstance&) const = default;
};

// A failed counting condition, with the objects that witness it and the two
// sides of the violated inequality (lhs < rhs).
struct PackingConditionWitness {
  std::string condition;
  std::optional<int> vertex;
  std::optional<VertexSet> x;
  std::optional<VertexSet> u;
  std::optional<VertexSet> w;
  std::optional<Subpartition> p;
  long long lhs = 0;
  long long rhs = 0;
};

// Each checker returns nullopt when the conditions hold, otherwise the first
// violation in a fixed scan order (vertices ascending, sets by ascending
// mask, subpartitions in canonical order).
std::optional<PackingConditionWitness> check_edmonds(const MixedHypergraph& graph,
                                                     const RootPlacement& roots);
std::optional<PackingConditionWitness> check_k_regular(const MixedHypergraph& graph, long long k,
                                                       const RootPlacement& roots);
std::optional<PackingConditionWitness> check_fg_bounded(const MixedHypergraph& graph,
                                                        const std::vector<long long>& f,
                                                        const std::vector<long long>& g,
                                                        long long k);
std::optional<PackingConditionWitness> check_m_based(const MixedHypergraph& graph,
                                                     const RootPlacement& roots,
                                                     const MatroidSpec& matroid);
std::optional<PackingConditionWitness> check_m_rooted_fgk(const MixedHypergraph& graph,
                                                          long long k,
                                                          const std::vector<long long>& f,
                                                          const std::vector<long long>& g,
                                                          const RootPlacement& roots,
                                                          const MatroidSpec& matroid,
                                                          bool allow_hyperedges);

// Dispatch on instance.mode.
std::optional<PackingConditionWitness> check_packing_conditions(const PackingInstance& instance);

struct ArcChoice {
  bool from_hyperedge = false;
  int edge_index = 0;  // index into the graph's (value, multiplicity) list
  long long copy = 0;  // which copy of that value
  int tail = 0;
  int head = 0;
};

struct ArborescenceWitness {
  int root_vertex = 0;
  int root_element = -1;  // ground element of the placement; -1 when unused
  std::vector<ArcChoice> arcs;
};

struct PackingWitness {
  std::vector<ArborescenceWitness> arborescences;
};

// Exhaustive backtracking over root choices, edge-to-arborescence
// assignments and arc selections. Returns a witness iff a packing exists.
std::optional<PackingWitness> exhaustive_packing_search(const PackingInstance& instance);

// Structural re-validation of a witness against an instance, sharing no
// state with the search: edge legality and disjointness, arborescence
// shape, and the mode's root and counting constraints.
bool validate_packing_witness(const PackingInstance& instance, const PackingWitness& witness);

}  // namespace mho

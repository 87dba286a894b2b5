#pragma once

// Constructive orientation: turns every hyperedge into a dyperedge, one copy
// at a time, while keeping the covering condition intact. Each step computes
// the tight family of the edge under the current graph; when the family is
// nonempty the head is taken from the intersection of the edge with the
// minimum tight ground, which is what keeps every tight subpartition
// entered. An empty family leaves the head choice free.

#include <optional>
#include <variant>
#include <vector>

#include "mho/oracle.hpp"

namespace mho {

enum class HeadRule {
  empty_family_arbitrary,
  min_tight_intersection,
};

struct OrientationStep {
  int edge_index = 0;  // index into the source hyperedge list
  long long family_size = 0;
  std::optional<VertexSet> common_ground;  // absent when the family was empty
  int chosen_head = 0;
  HeadRule rule = HeadRule::empty_family_arbitrary;
};

struct OrientationResult {
  MixedHypergraph oriented;  // hyperedge-free
  std::vector<OrientationStep> steps;
};

struct OrientOptions {
  // Re-run the full condition check after every orientation step, on top of
  // the per-step scans the orienter does anyway. Failures raise ClosureError.
  bool recheck_each_step = false;
  int parallel = 1;  // workers for the recheck scans
};

// Returns the orientation when the input satisfies the covering condition,
// otherwise the certificate of the initial violation. Requires the demand
// function to be intersecting supermodular and the allowance function to be
// submodular; the orienter does not re-verify these hypotheses, and inputs
// that break them surface as ClosureError.
std::variant<OrientationResult, ViolationCertificate> orient_all(
    const MixedHypergraph& g, const SetFunction& demand, const SetFunction& allowance,
    const OrientOptions& options = {});

// Re-checks an orientation from scratch: the result must be hyperedge-free
// and satisfy the covering condition. nullopt on success.
std::optional<ViolationCertificate> verify_orientation(const OrientationResult& result,
                                                       const SetFunction& demand,
                                                       const SetFunction& allowance,
                                                       int parallel = 1);

}  // namespace mho

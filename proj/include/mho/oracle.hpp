#pragma once

// The covering condition and its certificates. A mixed hypergraph covers the
// pair (demand, allowance) when for every subpartition P
//
//   entering_count(P)  >=  sum of demand over members of P  -  allowance(union P)
//
// deficiency(P) is the gap between the right and left side; positive
// deficiency certifies a violation. The empty subpartition contributes
// -allowance(empty set).

#include <optional>
#include <vector>

#include "mho/model.hpp"
#include "mho/setfunc.hpp"

namespace mho {

struct ViolationCertificate {
  Subpartition p;
  long long deficiency = 0;
};

long long deficiency(const MixedHypergraph& g, const SetFunction& demand,
                     const SetFunction& allowance, const Subpartition& p);

// Scans every subpartition; returns nullopt when the condition holds,
// otherwise the first subpartition (canonical order) attaining the maximum
// deficiency. `parallel` > 1 splits the scan across worker threads; the
// result is independent of the worker count.
std::optional<ViolationCertificate> check_condition(const MixedHypergraph& g,
                                                    const SetFunction& demand,
                                                    const SetFunction& allowance,
                                                    int parallel = 1);

// Tight subpartitions (deficiency exactly 0) whose union the pivot hyperedge
// enters, in canonical order. common_ground is the intersection of their
// unions; the full universe when the family is empty.
struct TightFamily {
  std::vector<Subpartition> members;
  VertexSet common_ground;
};

TightFamily tight_family(const MixedHypergraph& g, const SetFunction& demand,
                         const SetFunction& allowance, const Hyperedge& pivot);

// The common ground of a nonempty tight family, after asserting that some
// family member realizes it exactly and that the pivot meets it. Both facts
// are guaranteed when the covering condition holds globally and the demand /
// allowance hypotheses are satisfied; violations raise ClosureError.
VertexSet min_tight_ground(const TightFamily& family, const Hyperedge& pivot);

}  // namespace mho

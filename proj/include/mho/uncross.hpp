#pragma once

// Uncrossing of subpartition pairs. Two sets cross when they properly
// intersect (nonempty intersection, neither contains the other). Repeatedly
// replacing a crossing pair by its intersection and union turns the combined
// member multiset into a laminar family; splitting off one copy of each
// distinct inclusion-maximal set then yields two subpartitions again, one
// over the union of the two original grounds and one over their
// intersection. The inequalities this transformation preserves are what the
// orienter's head rule relies on, so they are checkable here on demand.

#include <optional>
#include <vector>

#include "mho/model.hpp"
#include "mho/setfunc.hpp"

namespace mho {

// Multiset of nonempty vertex sets; a vertex may lie in several of them.
struct MultiCover {
  std::vector<VertexSet> sets;

  long long multiplicity(int v) const;

  bool operator==(const MultiCover&) const = default;
};

struct UncrossResult {
  Subpartition p3;     // partitions the intersection of the input grounds
  Subpartition p4;     // partitions the union of the input grounds
  MultiCover laminar;  // the uncrossed multiset, sorted by (min element, mask)
};

UncrossResult uncross_pair(const Subpartition& p1, const Subpartition& p2);

// Checks, for a concrete graph and function pair, the three facts the
// orientation argument uses: superadditivity of demand-minus-allowance under
// uncrossing, multiset containment of entering edges, and the matching
// entering-count inequality.
struct UncrossReport {
  long long demand_allowance_in = 0;   // over p1 and p2
  long long demand_allowance_out = 0;  // over p3 and p4
  bool demand_allowance_ok = false;    // in <= out
  bool hyper_containment_ok = false;
  bool dyper_containment_ok = false;
  long long entering_in = 0;   // e(p1) + e(p2)
  long long entering_out = 0;  // e(p3) + e(p4)
  bool entering_ok = false;    // in >= out

  bool all_ok() const {
    return demand_allowance_ok && hyper_containment_ok && dyper_containment_ok && entering_ok;
  }
};

UncrossReport check_uncross_inequalities(const Subpartition& p1, const Subpartition& p2,
                                         const UncrossResult& result, const MixedHypergraph& g,
                                         const SetFunction& demand, const SetFunction& allowance);

// Transfers tightness: given two tight subpartitions entered by the pivot
// whose grounds intersect, the uncrossed p3 is again tight, entered by the
// pivot, and its entering-edge multisets match the combined inputs exactly.
// Verified numerically; a failed equality raises ClosureError, violated
// preconditions raise DomainError. Assumes the covering condition holds
// globally and the demand / allowance hypotheses are satisfied.
struct TightnessTransfer {
  Subpartition p3;
  long long entering_p3 = 0;
  long long demand_allowance_p3 = 0;  // equals entering_p3
  bool pivot_enters_p3 = false;
};

TightnessTransfer tightness_transfer(const Subpartition& p1, const Subpartition& p2,
                                     const MixedHypergraph& g, const SetFunction& demand,
                                     const SetFunction& allowance, const Hyperedge& pivot);

}  // namespace mho

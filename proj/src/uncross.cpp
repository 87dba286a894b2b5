#include "mho/uncross.hpp"

#include <algorithm>

#include "mho/oracle.hpp"

namespace mho {

long long MultiCover::multiplicity(int v) const {
  long long count = 0;
  for (const VertexSet& s : sets) {
    if (s.contains(v)) ++count;
  }
  return count;
}

namespace {

bool properly_intersect(VertexSet a, VertexSet b) {
  return a.intersects(b) && !a.subset_of(b) && !b.subset_of(a);
}

}  // namespace

UncrossResult uncross_pair(const Subpartition& p1, const Subpartition& p2) {
  std::vector<VertexSet> sets = p1.members;
  sets.insert(sets.end(), p2.members.begin(), p2.members.end());

  // Each replacement keeps the multiset's vertex multiplicities and strictly
  // increases the sum of squared sizes, so the loop terminates.
  for (;;) {
    bool crossed = false;
    for (size_t i = 0; i < sets.size() && !crossed; ++i) {
      for (size_t j = i + 1; j < sets.size() && !crossed; ++j) {
        if (properly_intersect(sets[i], sets[j])) {
          const VertexSet meet = sets[i] & sets[j];
          const VertexSet join = sets[i] | sets[j];
          sets[i] = meet;
          sets[j] = join;
          crossed = true;
        }
      }
    }
    if (!crossed) break;
  }

  // Split off one copy of each distinct inclusion-maximal set; in a laminar
  // family those are disjoint and cover the whole ground, so they partition
  // the union of the input grounds. The rest partitions the intersection:
  // every leftover copy lies inside a maximal set, i.e. in a doubly covered
  // region, and doubly covered regions are exactly the old intersection.
  std::vector<bool> to_p4(sets.size(), false);
  std::vector<VertexSet> seen;
  for (size_t i = 0; i < sets.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < sets.size(); ++j) {
      if (j != i && sets[i] != sets[j] && sets[i].subset_of(sets[j])) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    if (std::find(seen.begin(), seen.end(), sets[i]) != seen.end()) continue;
    seen.push_back(sets[i]);
    to_p4[i] = true;
  }

  std::vector<VertexSet> p3_members;
  std::vector<VertexSet> p4_members;
  for (size_t i = 0; i < sets.size(); ++i) {
    (to_p4[i] ? p4_members : p3_members).push_back(sets[i]);
  }

  UncrossResult result;
  result.p3 = Subpartition::make(std::move(p3_members));
  result.p4 = Subpartition::make(std::move(p4_members));
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    if (a.min_vertex() != b.min_vertex()) return a.min_vertex() < b.min_vertex();
    return a.mask < b.mask;
  });
  result.laminar = MultiCover{std::move(sets)};
  return result;
}

UncrossReport check_uncross_inequalities(const Subpartition& p1, const Subpartition& p2,
                                         const UncrossResult& result, const MixedHypergraph& g,
                                         const SetFunction& demand,
                                         const SetFunction& allowance) {
  const auto demand_minus_allowance = [&](const Subpartition& p) {
    long long total = 0;
    for (const VertexSet& m : p.members) total = checked_add(total, demand.eval(m));
    return checked_sub(total, allowance.eval(p.ground));
  };

  UncrossReport report;
  report.demand_allowance_in =
      checked_add(demand_minus_allowance(p1), demand_minus_allowance(p2));
  report.demand_allowance_out =
      checked_add(demand_minus_allowance(result.p3), demand_minus_allowance(result.p4));
  report.demand_allowance_ok = report.demand_allowance_in <= report.demand_allowance_out;

  // Containment is per distinct edge value: copies of one value enter the
  // same subpartitions, so indicator sums decide the multiset relation.
  report.hyper_containment_ok = true;
  for (const auto& [e, mult] : g.hyperedges) {
    const int in = (enters_some_member(e, p1) ? 1 : 0) + (enters_some_member(e, p2) ? 1 : 0);
    const int out =
        (enters_some_member(e, result.p3) ? 1 : 0) + (enters_some_member(e, result.p4) ? 1 : 0);
    if (in < out) report.hyper_containment_ok = false;
  }
  report.dyper_containment_ok = true;
  for (const auto& [d, mult] : g.dyperedges) {
    const int in = (enters_some_member(d, p1) ? 1 : 0) + (enters_some_member(d, p2) ? 1 : 0);
    const int out =
        (enters_some_member(d, result.p3) ? 1 : 0) + (enters_some_member(d, result.p4) ? 1 : 0);
    if (in < out) report.dyper_containment_ok = false;
  }

  report.entering_in = checked_add(entering_count(g, p1), entering_count(g, p2));
  report.entering_out =
      checked_add(entering_count(g, result.p3), entering_count(g, result.p4));
  report.entering_ok = report.entering_in >= report.entering_out;
  return report;
}

TightnessTransfer tightness_transfer(const Subpartition& p1, const Subpartition& p2,
                                     const MixedHypergraph& g, const SetFunction& demand,
                                     const SetFunction& allowance, const Hyperedge& pivot) {
  if (deficiency(g, demand, allowance, p1) != 0 || deficiency(g, demand, allowance, p2) != 0) {
    throw DomainError("tightness transfer needs two tight subpartitions");
  }
  if (!hyperedge_enters(pivot, p1.ground) || !hyperedge_enters(pivot, p2.ground)) {
    throw DomainError("tightness transfer needs the pivot to enter both grounds");
  }
  if (!p1.ground.intersects(p2.ground)) {
    throw DomainError("tightness transfer needs intersecting grounds");
  }

  const UncrossResult unc = uncross_pair(p1, p2);

  TightnessTransfer transfer;
  transfer.p3 = unc.p3;
  transfer.entering_p3 = entering_count(g, unc.p3);
  long long total = 0;
  for (const VertexSet& m : unc.p3.members) total = checked_add(total, demand.eval(m));
  transfer.demand_allowance_p3 = checked_sub(total, allowance.eval(unc.p3.ground));
  transfer.pivot_enters_p3 = hyperedge_enters(pivot, unc.p3.ground);

  if (transfer.demand_allowance_p3 != transfer.entering_p3) {
    throw ClosureError("uncrossed subpartition failed to stay tight");
  }
  // Tightness of both inputs forces the containment inequalities into
  // equalities, separately for hyperedges and dyperedges.
  for (const auto& [e, mult] : g.hyperedges) {
    const int in = (enters_some_member(e, p1) ? 1 : 0) + (enters_some_member(e, p2) ? 1 : 0);
    const int out =
        (enters_some_member(e, unc.p3) ? 1 : 0) + (enters_some_member(e, unc.p4) ? 1 : 0);
    if (in != out) throw ClosureError("hyperedge multiset equality failed after uncrossing");
  }
  for (const auto& [d, mult] : g.dyperedges) {
    const int in = (enters_some_member(d, p1) ? 1 : 0) + (enters_some_member(d, p2) ? 1 : 0);
    const int out =
        (enters_some_member(d, unc.p3) ? 1 : 0) + (enters_some_member(d, unc.p4) ? 1 : 0);
    if (in != out) throw ClosureError("dyperedge multiset equality failed after uncrossing");
  }
  if (!transfer.pivot_enters_p3) {
    throw ClosureError("pivot stopped entering the uncrossed subpartition");
  }
  return transfer;
}

}  // namespace mho

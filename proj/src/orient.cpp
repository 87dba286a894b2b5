#include "mho/orient.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "mho/subpartitions.hpp"

namespace mho {

namespace {

constexpr std::array<long long, 14> kSubpartitionCounts = {
    1LL,      1LL,      2LL,       5LL,       15LL,      52LL,       203LL,
    877LL,    4140LL,   21147LL,   115975LL,  678570LL,  4213597LL,  27644437LL};
constexpr long long kMaterializeLimit = 1'000'000;

// One scan position: a subpartition plus its demand/allowance part, which
// stays fixed while the edge multiset changes underneath.
struct ScanEntry {
  Subpartition p;
  long long demand_minus_allowance = 0;
};

std::string describe(const VertexUniverse& u, VertexSet x) {
  std::string out = "{";
  bool first = true;
  for (int v : x.elements()) {
    if (!first) out += ",";
    out += u.label(v);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::variant<OrientationResult, ViolationCertificate> orient_all(
    const MixedHypergraph& g, const SetFunction& demand, const SetFunction& allowance,
    const OrientOptions& options) {
  const VertexUniverse& u = g.universe;
  if (u.n() > kMaxEnumerationVertices) {
    throw CapacityError("orientation supports at most 12 vertices");
  }

  const bool materialize = kSubpartitionCounts[static_cast<size_t>(u.n()) + 1] <= kMaterializeLimit;
  std::vector<ScanEntry> cache;
  if (materialize) {
    cache.reserve(static_cast<size_t>(kSubpartitionCounts[static_cast<size_t>(u.n()) + 1]));
    for_each_subpartition(u, [&](const std::vector<VertexSet>& members, VertexSet ground) {
      ScanEntry entry{Subpartition{members, ground}, 0};
      long long total = 0;
      for (const VertexSet& m : members) total = checked_add(total, demand.eval(m));
      entry.demand_minus_allowance = checked_sub(total, allowance.eval(ground));
      cache.push_back(std::move(entry));
    });
  }

  // Mutable edge state. Hyperedge slots keep their position and drain to
  // multiplicity zero so step records can refer to the original indices.
  std::vector<std::pair<Hyperedge, long long>> hypers = g.hyperedges;
  std::vector<std::pair<Dyperedge, long long>> dypers = g.dyperedges;

  const auto entering_now = [&](const Subpartition& p) {
    long long total = 0;
    for (const auto& [e, mult] : hypers) {
      if (mult > 0 && enters_some_member(e, p)) total = checked_add(total, mult);
    }
    for (const auto& [d, mult] : dypers) {
      if (enters_some_member(d, p)) total = checked_add(total, mult);
    }
    return total;
  };

  // Full scan: tracks the worst deficiency and, when a pivot is given,
  // collects its tight family. The family scan doubles as a free check of
  // the loop invariant, so a broken hypothesis cannot slip through silently.
  struct ScanOutcome {
    long long max_deficiency = 0;
    bool has_max = false;
    Subpartition worst;
    TightFamily family;
  };
  const auto scan = [&](const Hyperedge* pivot) {
    ScanOutcome out;
    out.family.common_ground = u.full();
    const auto visit = [&](const Subpartition& p, long long demand_minus_allowance) {
      const long long def = checked_sub(demand_minus_allowance, entering_now(p));
      if (!out.has_max || def > out.max_deficiency) {
        out.has_max = true;
        out.max_deficiency = def;
        out.worst = p;
      }
      if (pivot != nullptr && def == 0 && !p.is_empty() &&
          hyperedge_enters(*pivot, p.ground)) {
        out.family.members.push_back(p);
        out.family.common_ground = out.family.common_ground & p.ground;
      }
    };
    if (materialize) {
      for (const ScanEntry& entry : cache) visit(entry.p, entry.demand_minus_allowance);
    } else {
      for_each_subpartition(u, [&](const std::vector<VertexSet>& members, VertexSet ground) {
        const Subpartition p{members, ground};
        long long total = 0;
        for (const VertexSet& m : members) total = checked_add(total, demand.eval(m));
        visit(p, checked_sub(total, allowance.eval(ground)));
      });
    }
    return out;
  };

  {
    const ScanOutcome initial = scan(nullptr);
    if (initial.max_deficiency > 0) {
      return ViolationCertificate{initial.worst, initial.max_deficiency};
    }
  }

  OrientationResult result;
  result.steps.reserve(static_cast<size_t>(g.hyperedge_count()));

  for (size_t i = 0; i < g.hyperedges.size(); ++i) {
    const Hyperedge edge = g.hyperedges[i].first;
    const long long copies = g.hyperedges[i].second;
    for (long long c = 0; c < copies; ++c) {
      const ScanOutcome outcome = scan(&edge);
      if (outcome.max_deficiency > 0) {
        throw ClosureError(
            "covering condition broke during orientation at subpartition with ground " +
            describe(u, outcome.worst.ground) +
            "; the demand or allowance hypotheses do not hold on this instance");
      }

      OrientationStep step;
      step.edge_index = static_cast<int>(i);
      step.family_size = static_cast<long long>(outcome.family.members.size());
      if (outcome.family.members.empty()) {
        step.rule = HeadRule::empty_family_arbitrary;
        step.chosen_head = edge.members.min_vertex();
      } else {
        step.rule = HeadRule::min_tight_intersection;
        const VertexSet common = min_tight_ground(outcome.family, edge);
        step.common_ground = common;
        step.chosen_head = (edge.members & common).min_vertex();
      }

      const Dyperedge oriented = orient_edge(edge, step.chosen_head);
      hypers[i].second -= 1;
      auto it = std::find_if(dypers.begin(), dypers.end(),
                             [&](const auto& p) { return p.first == oriented; });
      if (it == dypers.end()) {
        dypers.emplace_back(oriented, 1);
      } else {
        it->second = checked_add(it->second, 1);
      }
      result.steps.push_back(step);

      if (options.recheck_each_step) {
        std::vector<std::pair<Hyperedge, long long>> live;
        for (const auto& [e, mult] : hypers) {
          if (mult > 0) live.emplace_back(e, mult);
        }
        const MixedHypergraph current =
            MixedHypergraph::from_multisets(u, std::move(live), dypers);
        if (auto cert = check_condition(current, demand, allowance, options.parallel)) {
          throw ClosureError(
              "covering condition broke after an orientation step at subpartition with "
              "ground " +
              describe(u, cert->p.ground) +
              "; the demand or allowance hypotheses do not hold on this instance");
        }
      }
    }
  }

  {
    // Closing scan so the guarantee covers the final step too.
    const ScanOutcome last = scan(nullptr);
    if (last.max_deficiency > 0) {
      throw ClosureError(
          "covering condition broke after the final orientation step at subpartition "
          "with ground " +
          describe(u, last.worst.ground) +
          "; the demand or allowance hypotheses do not hold on this instance");
    }
  }

  result.oriented = MixedHypergraph::from_multisets(u, {}, std::move(dypers));
  return result;
}

std::optional<ViolationCertificate> verify_orientation(const OrientationResult& result,
                                                       const SetFunction& demand,
                                                       const SetFunction& allowance,
                                                       int parallel) {
  for (const auto& [e, mult] : result.oriented.hyperedges) {
    if (mult > 0) {
      throw DomainError("verification expects a hyperedge-free orientation result");
    }
  }
  return check_condition(result.oriented, demand, allowance, parallel);
}

}  // namespace mho

#include "mho/oracle.hpp"

#include <exception>
#include <thread>

#include "mho/subpartitions.hpp"

namespace mho {

long long deficiency(const MixedHypergraph& g, const SetFunction& demand,
                     const SetFunction& allowance, const Subpartition& p) {
  long long total = 0;
  for (const VertexSet& m : p.members) total = checked_add(total, demand.eval(m));
  total = checked_sub(total, allowance.eval(p.ground));
  total = checked_sub(total, entering_count(g, p));
  return total;
}

namespace {

struct ScanBest {
  bool found = false;
  long long deficiency = 0;
  Subpartition p;
};

// Keeps the first subpartition (in visit order) attaining the running max.
void consider(ScanBest& best, long long def, const std::vector<VertexSet>& members,
              VertexSet ground) {
  if (!best.found || def > best.deficiency) {
    best.found = true;
    best.deficiency = def;
    best.p = Subpartition{members, ground};
  }
}

std::vector<VertexSet> first_member_candidates(const VertexUniverse& u) {
  // All nonempty subsets ordered by (smallest element, mask) to match the
  // canonical enumeration's top level.
  std::vector<VertexSet> out;
  const uint32_t full = u.full().mask;
  for (int v = 0; v < u.n(); ++v) {
    const uint32_t higher = full & ~((2u << v) - 1u);
    uint32_t extra = 0;
    while (true) {
      out.push_back(VertexSet{(1u << v) | extra});
      extra = (extra - higher) & higher;
      if (extra == 0) break;
    }
  }
  return out;
}

}  // namespace

std::optional<ViolationCertificate> check_condition(const MixedHypergraph& g,
                                                    const SetFunction& demand,
                                                    const SetFunction& allowance,
                                                    int parallel) {
  if (parallel < 1) throw DomainError("worker count must be positive");
  const VertexUniverse& u = g.universe;

  ScanBest best;
  consider(best, deficiency(g, demand, allowance, Subpartition::empty()), {}, VertexSet{});

  if (parallel == 1) {
    for_each_subpartition(u, [&](const std::vector<VertexSet>& members, VertexSet ground) {
      if (members.empty()) return;
      const long long def = deficiency(g, demand, allowance, Subpartition{members, ground});
      consider(best, def, members, ground);
    });
  } else {
    const std::vector<VertexSet> candidates = first_member_candidates(u);
    const int workers =
        static_cast<int>(std::min<size_t>(static_cast<size_t>(parallel), candidates.size()));
    std::vector<ScanBest> bests(static_cast<size_t>(workers));
    std::vector<size_t> best_candidate(static_cast<size_t>(workers), 0);
    std::vector<std::exception_ptr> errors(static_cast<size_t>(workers));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        try {
          for (size_t c = static_cast<size_t>(w); c < candidates.size();
               c += static_cast<size_t>(workers)) {
            ScanBest& local = bests[static_cast<size_t>(w)];
            const bool had = local.found;
            const long long before = local.deficiency;
            for_each_subpartition_under(
                u, candidates[c], [&](const std::vector<VertexSet>& members, VertexSet ground) {
                  const long long def =
                      deficiency(g, demand, allowance, Subpartition{members, ground});
                  consider(local, def, members, ground);
                });
            // Track the subtree where the local max was first attained.
            if (!had || local.deficiency > before) best_candidate[static_cast<size_t>(w)] = c;
          }
        } catch (...) {
          errors[static_cast<size_t>(w)] = std::current_exception();
        }
      });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    // Deterministic merge: larger deficiency wins, ties go to the subtree
    // that comes first in canonical order.
    int pick = -1;
    for (int w = 0; w < workers; ++w) {
      const ScanBest& local = bests[static_cast<size_t>(w)];
      if (!local.found) continue;
      if (pick < 0 || local.deficiency > bests[static_cast<size_t>(pick)].deficiency ||
          (local.deficiency == bests[static_cast<size_t>(pick)].deficiency &&
           best_candidate[static_cast<size_t>(w)] < best_candidate[static_cast<size_t>(pick)])) {
        pick = w;
      }
    }
    if (pick >= 0) {
      const ScanBest& local = bests[static_cast<size_t>(pick)];
      if (local.deficiency > best.deficiency) best = local;
    }
  }

  if (best.deficiency > 0) return ViolationCertificate{best.p, best.deficiency};
  return std::nullopt;
}

TightFamily tight_family(const MixedHypergraph& g, const SetFunction& demand,
                         const SetFunction& allowance, const Hyperedge& pivot) {
  TightFamily family;
  family.common_ground = g.universe.full();
  for_each_subpartition(g.universe,
                        [&](const std::vector<VertexSet>& members, VertexSet ground) {
                          if (members.empty()) return;
                          if (!hyperedge_enters(pivot, ground)) return;
                          const Subpartition p{members, ground};
                          if (deficiency(g, demand, allowance, p) != 0) return;
                          family.members.push_back(p);
                          family.common_ground = family.common_ground & ground;
                        });
  return family;
}

VertexSet min_tight_ground(const TightFamily& family, const Hyperedge& pivot) {
  if (family.members.empty()) {
    throw DomainError("min_tight_ground needs a nonempty tight family");
  }
  VertexSet common = family.members.front().ground;
  for (const Subpartition& p : family.members) common = common & p.ground;
  bool realized = false;
  for (const Subpartition& p : family.members) {
    if (p.ground == common) {
      realized = true;
      break;
    }
  }
  if (!realized) {
    throw ClosureError(
        "tight family intersection is not realized by any member; the demand or "
        "allowance hypotheses do not hold on this instance");
  }
  if (!pivot.members.intersects(common)) {
    throw ClosureError(
        "pivot hyperedge misses the minimum tight ground; the demand or allowance "
        "hypotheses do not hold on this instance");
  }
  return common;
}

}  // namespace mho

#include "mho/setfunc.hpp"

#include <algorithm>

namespace mho {

SetFunction SetFunction::constant(long long value) {
  SetFunction f;
  f.kind = Kind::constant;
  f.value = value;
  return f;
}

SetFunction SetFunction::modular(std::vector<long long> weights, long long offset) {
  if (weights.size() > static_cast<size_t>(kMaxVertices)) {
    throw DomainError("modular function needs at most one weight per universe vertex");
  }
  SetFunction f;
  f.kind = Kind::modular;
  f.weights = std::move(weights);
  f.offset = offset;
  return f;
}

SetFunction SetFunction::table(std::vector<std::pair<VertexSet, long long>> entries,
                               long long dflt) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first.mask < b.first.mask; });
  for (size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].first == entries[i - 1].first) {
      throw DomainError("table entries must have distinct key sets");
    }
  }
  SetFunction f;
  f.kind = Kind::table;
  f.entries = std::move(entries);
  f.table_default = dflt;
  return f;
}

SetFunction SetFunction::matroid_rank(RootPlacement roots, MatroidSpec matroid) {
  if (matroid.m != roots.size()) {
    throw DomainError("matroid ground size must match the root placement");
  }
  SetFunction f;
  f.kind = Kind::rank;
  f.roots = std::move(roots);
  f.matroid = std::move(matroid);
  return f;
}

SetFunction SetFunction::rank_deficit(long long bound, RootPlacement roots,
                                      MatroidSpec matroid) {
  if (matroid.m != roots.size()) {
    throw DomainError("matroid ground size must match the root placement");
  }
  SetFunction f;
  f.kind = Kind::k_minus_rank;
  f.rank_bound = bound;
  f.roots = std::move(roots);
  f.matroid = std::move(matroid);
  return f;
}

long long SetFunction::eval(VertexSet x) const {
  switch (kind) {
    case Kind::constant:
      return value;
    case Kind::modular: {
      long long total = offset;
      for (uint32_t rest = x.mask; rest != 0; rest &= rest - 1) {
        const auto v = static_cast<size_t>(std::countr_zero(rest));
        total = checked_add(total, v < weights.size() ? weights[v] : 0);
      }
      return total;
    }
    case Kind::table: {
      auto it = std::lower_bound(
          entries.begin(), entries.end(), x.mask,
          [](const auto& entry, uint32_t mask) { return entry.first.mask < mask; });
      if (it != entries.end() && it->first == x) return it->second;
      return table_default;
    }
    case Kind::rank:
      return matroid.rank(roots.restrict_to(x));
    case Kind::k_minus_rank:
      if (x.empty()) {
        throw DomainError("rank-deficit functions are undefined on the empty set");
      }
      return checked_sub(rank_bound, matroid.rank(roots.restrict_to(x)));
  }
  throw DomainError("unknown set-function kind");
}

namespace {

std::vector<long long> eval_all(const SetFunction& f, const VertexUniverse& u,
                                bool skip_empty) {
  const uint32_t full = u.full().mask;
  std::vector<long long> vals(static_cast<size_t>(full) + 1, 0);
  for (uint32_t x = skip_empty ? 1u : 0u; x <= full; ++x) {
    vals[x] = f.eval(VertexSet{x});
  }
  return vals;
}

}  // namespace

std::optional<ModularityWitness> is_intersecting_supermodular(const SetFunction& f,
                                                              const VertexUniverse& u) {
  if (u.n() > kMaxVerifierVertices) {
    throw CapacityError("modularity verification supports at most 16 vertices");
  }
  const uint32_t full = u.full().mask;
  const std::vector<long long> vals = eval_all(f, u, /*skip_empty=*/true);
  for (uint32_t x = 1; x <= full; ++x) {
    for (uint32_t y = 1; y <= full; ++y) {
      if ((x & y) == 0) continue;
      const long long lhs = checked_add(vals[x], vals[y]);
      const long long rhs = checked_add(vals[x | y], vals[x & y]);
      if (lhs > rhs) {
        return ModularityWitness{VertexSet{x}, VertexSet{y}, lhs, rhs};
      }
    }
  }
  return std::nullopt;
}

std::optional<ModularityWitness> is_submodular(const SetFunction& f, const VertexUniverse& u) {
  if (u.n() > kMaxVerifierVertices) {
    throw CapacityError("modularity verification supports at most 16 vertices");
  }
  const uint32_t full = u.full().mask;
  const std::vector<long long> vals = eval_all(f, u, /*skip_empty=*/false);
  for (uint32_t x = 0; x <= full; ++x) {
    for (uint32_t y = 0; y <= full; ++y) {
      const long long lhs = checked_add(vals[x], vals[y]);
      const long long rhs = checked_add(vals[x | y], vals[x & y]);
      if (lhs < rhs) {
        return ModularityWitness{VertexSet{x}, VertexSet{y}, lhs, rhs};
      }
    }
  }
  return std::nullopt;
}

}  // namespace mho

#pragma once

// Integer set functions over the vertex universe, used in two roles: demand
// functions (evaluated on nonempty sets, expected intersecting supermodular)
// and allowance functions (evaluated on every set, expected submodular).
// Both roles accept any of the kinds below; the verifiers report the first
// violated pair so bad inputs fail loudly instead of corrupting results.

#include <optional>
#include <utility>
#include <vector>

#include "mho/errors.hpp"
#include "mho/matroid.hpp"
#include "mho/model.hpp"

namespace mho {

inline constexpr int kMaxVerifierVertices = 16;

struct SetFunction {
  enum class Kind { constant, modular, table, rank, k_minus_rank };

  Kind kind = Kind::constant;
  long long value = 0;                                   // constant
  std::vector<long long> weights;                        // modular, by vertex
  long long offset = 0;                                  // modular
  std::vector<std::pair<VertexSet, long long>> entries;  // table, sorted by mask
  long long table_default = 0;                           // table
  RootPlacement roots;                                   // rank, k_minus_rank
  MatroidSpec matroid;                                   // rank, k_minus_rank
  long long rank_bound = 0;                              // k in k_minus_rank

  static SetFunction constant(long long value);
  static SetFunction modular(std::vector<long long> weights, long long offset);
  static SetFunction table(std::vector<std::pair<VertexSet, long long>> entries,
                           long long dflt);
  static SetFunction matroid_rank(RootPlacement roots, MatroidSpec matroid);
  // x -> bound - rank(roots within x); defined on nonempty sets only.
  static SetFunction rank_deficit(long long bound, RootPlacement roots, MatroidSpec matroid);

  bool defined_on_empty() const { return kind != Kind::k_minus_rank; }

  long long eval(VertexSet x) const;

  bool operator==(const SetFunction&) const = default;
};

struct ModularityWitness {
  VertexSet x;
  VertexSet y;
  long long lhs = 0;  // f(x) + f(y)
  long long rhs = 0;  // f(x | y) + f(x & y)
};

// First pair of intersecting nonempty sets with f(x) + f(y) > f(x|y) + f(x&y),
// scanning x then y by ascending mask; nullopt when none exists.
std::optional<ModularityWitness> is_intersecting_supermodular(const SetFunction& f,
                                                              const VertexUniverse& u);

// First pair of sets with f(x) + f(y) < f(x|y) + f(x&y), same scan order over
// all subsets including the empty one; nullopt when none exists.
std::optional<ModularityWitness> is_submodular(const SetFunction& f, const VertexUniverse& u);

}  // namespace mho

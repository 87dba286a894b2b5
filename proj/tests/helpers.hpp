#pragma once

// Shared fixture builders for the test suite. Universes use single-letter
// labels a, b, c, ... so masks in the tests line up with the written-out
// examples (a = bit 0).

#include <string>
#include <vector>

#include "mho/model.hpp"
#include "mho/setfunc.hpp"

namespace mho::testing {

inline VertexUniverse uni(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return VertexUniverse::make(std::move(labels));
}

inline Hyperedge hyper(std::initializer_list<int> vs) {
  return Hyperedge::make(VertexSet::of(vs));
}

inline Dyperedge dyper(std::initializer_list<int> tails, int head) {
  return Dyperedge::make(VertexSet::of(tails), head);
}

inline MixedHypergraph graph(const VertexUniverse& u, const std::vector<Hyperedge>& es,
                             const std::vector<Dyperedge>& ds) {
  return MixedHypergraph::make(u, es, ds);
}

inline Subpartition sub(std::initializer_list<std::initializer_list<int>> members) {
  std::vector<VertexSet> sets;
  for (const auto& m : members) sets.push_back(VertexSet::of(m));
  return Subpartition::make(std::move(sets));
}

// Table function from (mask, value) pairs.
inline SetFunction table_fn(std::initializer_list<std::pair<uint32_t, long long>> entries,
                            long long dflt) {
  std::vector<std::pair<VertexSet, long long>> rows;
  for (const auto& [mask, value] : entries) rows.push_back({VertexSet{mask}, value});
  return SetFunction::table(std::move(rows), dflt);
}

}  // namespace mho::testing

#pragma once

// Seeded random instances for property campaigns. Draws come from a
// hand-rolled splitmix64 stream because the standard distributions are not
// bit-stable across library implementations, and fixtures must reproduce
// from a seed alone. Demand functions are drawn from families that satisfy
// the intersecting-supermodular hypothesis by construction (or are filtered
// through the verifier), allowance functions likewise for submodularity.

#include <cstdint>
#include <string>

#include "mho/json_io.hpp"
#include "mho/matroid.hpp"
#include "mho/model.hpp"
#include "mho/packing.hpp"
#include "mho/setfunc.hpp"

namespace mho {

struct Rng {
  uint64_t state = 0;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform draw from [lo, hi], both ends included.
  long long uniform(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  bool chance(int percent) { return uniform(1, 100) <= percent; }
};

struct GenOptions {
  uint64_t seed = 0;
  int n = 4;
  int hyperedges = -1;  // -1 draws a small count
  int dyperedges = -1;
  std::string h_family = "any";  // any | constant | k_minus_rank | cardinality | table
  std::string b_family = "any";  // any | constant | modular | rank | cardinality | table
};

// Graph plus verified demand/allowance pair; no packing block.
Instance generate_instance(const GenOptions& opt);

struct PackingGenOptions {
  uint64_t seed = 0;
  int n = 4;
  PackingMode mode = PackingMode::edmonds;
  int edges = -1;  // total copies, -1 draws a small count
};

// Instance with a packing block sized for the exhaustive search.
Instance generate_packing_instance(const PackingGenOptions& opt);

// Uniform-ish random matroid of any kind on m elements (kind table is a
// tabulated structural matroid, so it always passes validation).
MatroidSpec random_matroid(Rng& rng, int m);

// Random multiset of m root vertices.
RootPlacement random_roots(Rng& rng, int n, int m);

// Random subpartition of the universe (possibly empty).
Subpartition random_subpartition(Rng& rng, const VertexUniverse& u);

}  // namespace mho

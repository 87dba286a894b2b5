#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "mho/gen.hpp"
#include "mho/matroid.hpp"

using namespace mho;
using namespace mho::testing;

namespace {

// Rank axioms, brute force. Pairwise submodularity is quadratic in 2^m, so
// callers pick m accordingly (structural kinds have O(m) rank evals).
void check_rank_axioms(const MatroidSpec& m, bool pairwise_submodularity) {
  const uint32_t full = (1u << m.m) - 1u;
  CHECK(m.rank(0) == 0);
  for (uint32_t g = 0; g <= full; ++g) {
    const int r = m.rank(g);
    CHECK(r >= 0);
    CHECK(r <= std::popcount(g));
    for (int e = 0; e < m.m; ++e) {
      if ((g >> e) & 1u) continue;
      const int grown = m.rank(g | (1u << e));
      CHECK(grown >= r);       // monotone
      CHECK(grown - r <= 1);   // unit increments
      // local submodularity: adding e helps smaller sets at least as much
      for (int e2 = e + 1; e2 < m.m; ++e2) {
        if ((g >> e2) & 1u) continue;
        const int other = m.rank(g | (1u << e2));
        const int both = m.rank(g | (1u << e) | (1u << e2));
        CHECK(r + both <= grown + other);
      }
    }
  }
  if (pairwise_submodularity) {
    for (uint32_t x = 0; x <= full; ++x) {
      for (uint32_t y = 0; y <= full; ++y) {
        CHECK(m.rank(x) + m.rank(y) >= m.rank(x | y) + m.rank(x & y));
      }
    }
  }
}

}  // namespace

TEST_CASE("rank of the built-in kinds") {
  CHECK(MatroidSpec::uniform(2, 1).rank(0b11) == 1);
  CHECK(MatroidSpec::free_matroid(3).rank(0b101) == 2);
  // triangle: 3 auxiliary nodes, elements = the three cycle edges
  const auto triangle = MatroidSpec::graphic(3, 3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(triangle.rank(0b111) == 2);
  CHECK(triangle.rank(0b011) == 2);
  CHECK(triangle.rank(0b001) == 1);
  CHECK(triangle.full_rank() == 2);

  const auto part = MatroidSpec::partition(3, {0b011, 0b100}, {1, 2});
  CHECK(part.rank(0b011) == 1);
  CHECK(part.rank(0b111) == 2);
  CHECK(part.rank(0b100) == 1);

  CHECK(MatroidSpec::uniform(0, 0).full_rank() == 0);
  CHECK(MatroidSpec::free_matroid(0).rank(0) == 0);
}

TEST_CASE("restrict_to maps vertices to ground element copies") {
  const auto s = RootPlacement::make({0, 0, 1});  // a twice, b once
  CHECK(s.size() == 3);
  CHECK(s.restrict_to(VertexSet::of({0})) == 0b011u);
  CHECK(s.restrict_to(VertexSet{}) == 0u);
  CHECK(s.multiplicity(0) == 2);
  CHECK(s.multiplicity(2) == 0);

  const auto t = RootPlacement::make({0, 1});
  CHECK(t.restrict_to(VertexSet::of({1, 2})) == 0b10u);
  CHECK(RootPlacement::make({}).full_ground() == 0u);
  CHECK_THROWS_AS(RootPlacement::make({-1}), DomainError);
  CHECK_THROWS_AS(RootPlacement::make(std::vector<int>(25, 0)), CapacityError);
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(MatroidSpec::uniform(2, -1), DomainError);
  CHECK_THROWS_AS(MatroidSpec::free_matroid(-1), CapacityError);
  CHECK_THROWS_AS(MatroidSpec::partition(2, {0b01}, {1}), DomainError);          // not covering
  CHECK_THROWS_AS(MatroidSpec::partition(2, {0b01, 0b01}, {1, 1}), DomainError); // overlap
  CHECK_THROWS_AS(MatroidSpec::partition(2, {0b11}, {1, 1}), DomainError);       // cap count
  CHECK_THROWS_AS(MatroidSpec::partition(2, {0b11, 0}, {1, 1}), DomainError);    // empty class
  CHECK_THROWS_AS(MatroidSpec::partition(2, {0b11}, {-1}), DomainError);
  CHECK_THROWS_AS(MatroidSpec::graphic(2, 1, {{0, 1}, {0, 0}}), DomainError);    // node range
  CHECK_THROWS_AS(MatroidSpec::graphic(2, 2, {{0, 1}}), DomainError);            // edge count
}

TEST_CASE("rank table validates the axioms") {
  // the triangle again, tabulated: must round-trip through validation
  const auto triangle = MatroidSpec::graphic(3, 3, {{0, 1}, {1, 2}, {2, 0}});
  std::vector<int> ranks;
  for (uint32_t g = 0; g < 8; ++g) ranks.push_back(triangle.rank(g));
  const auto tab = MatroidSpec::table(3, ranks);
  for (uint32_t g = 0; g < 8; ++g) CHECK(tab.rank(g) == triangle.rank(g));

  CHECK_THROWS_AS(MatroidSpec::table(2, {0, 1, 1}), DomainError);  // wrong size
  CHECK_THROWS_WITH_AS(MatroidSpec::table(1, {1, 1}), "rank table must assign 0 to the empty set",
                       DomainError);
  CHECK_THROWS_WITH_AS(MatroidSpec::table(1, {0, 2}), "rank table increments must be 0 or 1",
                       DomainError);
  CHECK_THROWS_WITH_AS(MatroidSpec::table(2, {0, 1, 1, 0}), "rank table increments must be 0 or 1",
                       DomainError);
  // r({a})=0, r({b})=0 but r({a,b})=1 breaks submodularity (0+0 < 1+0)
  CHECK_THROWS_WITH_AS(MatroidSpec::table(2, {0, 0, 0, 1}), "rank table violates submodularity",
                       DomainError);
}

TEST_CASE("rank axioms hold for random matroids") {
  Rng rng(20260818);
  for (int m = 0; m <= 6; ++m) {
    for (int trial = 0; trial < 8; ++trial) {
      check_rank_axioms(random_matroid(rng, m), true);
    }
  }
}

TEST_CASE("rank axioms at the enumeration ceiling") {
  check_rank_axioms(MatroidSpec::free_matroid(12), false);
  check_rank_axioms(MatroidSpec::uniform(12, 5), false);
  check_rank_axioms(MatroidSpec::partition(10, {0b11111u, 0b1111100000u}, {2, 3}), false);
  std::vector<std::pair<int, int>> wheel;
  for (int i = 0; i < 8; ++i) wheel.push_back({i, (i + 1) % 8});
  check_rank_axioms(MatroidSpec::graphic(8, 8, wheel), false);
}

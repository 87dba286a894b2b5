#include <doctest.h>

#include <algorithm>
#include <vector>

#include "helpers.hpp"
#include "mho/gen.hpp"
#include "mho/model.hpp"
#include "mho/subpartitions.hpp"

using namespace mho;
using namespace mho::testing;

// ---------------------------------------------------------------------------
// construction and validation
// ---------------------------------------------------------------------------

TEST_CASE("universe validation") {
  CHECK(uni(3).n() == 3);
  CHECK(uni(1).full() == VertexSet{0b1});
  CHECK(uni(4).full() == VertexSet{0b1111});
  CHECK(uni(2).index_of("b") == 1);
  CHECK(uni(2).index_of("z") == -1);
  CHECK_THROWS_AS(VertexUniverse::make({}), DomainError);
  CHECK_THROWS_AS(VertexUniverse::make({"a", "a"}), DomainError);
  CHECK_THROWS_AS(VertexUniverse::make({""}), DomainError);
  CHECK_THROWS_AS(VertexUniverse::make(std::vector<std::string>(25, "x")), DomainError);
}

TEST_CASE("vertex set primitives") {
  const VertexSet x = VertexSet::of({0, 2});
  CHECK(x.size() == 2);
  CHECK(x.contains(2));
  CHECK(!x.contains(1));
  CHECK(x.min_vertex() == 0);
  CHECK(x.elements() == std::vector<int>{0, 2});
  CHECK(x.minus(VertexSet::of({0})) == VertexSet::of({2}));
  CHECK((x | VertexSet::of({1})) == VertexSet{0b111});
  CHECK((x & VertexSet::of({2, 3})) == VertexSet::of({2}));
  CHECK(x.subset_of(VertexSet{0b111}));
  CHECK(!VertexSet{0b111}.subset_of(x));
  CHECK(VertexSet{}.empty());
}

TEST_CASE("edge invariants") {
  CHECK_THROWS_AS(Hyperedge::make(VertexSet::of({0})), DomainError);
  CHECK_THROWS_AS(Hyperedge::make(VertexSet{}), DomainError);
  CHECK(hyper({0, 1}).members == VertexSet{0b11});

  CHECK_THROWS_AS(Dyperedge::make(VertexSet{}, 1), DomainError);
  CHECK_THROWS_AS(Dyperedge::make(VertexSet::of({1}), 1), DomainError);
  CHECK(dyper({0}, 1).is_arc());
  CHECK(!dyper({0, 2}, 1).is_arc());
}

TEST_CASE("mixed hypergraph merges equal edges, first occurrence fixes position") {
  const auto u = uni(3);
  const auto g = graph(u, {hyper({0, 1}), hyper({1, 2}), hyper({0, 1})}, {dyper({0}, 1)});
  REQUIRE(g.hyperedges.size() == 2);
  CHECK(g.hyperedges[0].first == hyper({0, 1}));
  CHECK(g.hyperedges[0].second == 2);
  CHECK(g.hyperedges[1].first == hyper({1, 2}));
  CHECK(g.hyperedges[1].second == 1);
  CHECK(g.hyperedge_count() == 3);
  CHECK(g.dyperedge_count() == 1);

  CHECK_THROWS_AS(graph(uni(2), {hyper({0, 2})}, {}), DomainError);
  CHECK_THROWS_AS(graph(uni(2), {}, {dyper({0}, 2)}), DomainError);
  CHECK_THROWS_AS(MixedHypergraph::from_multisets(uni(2), {{hyper({0, 1}), 0}}, {}), DomainError);
}

TEST_CASE("subpartition canonical order and validation") {
  const auto p = Subpartition::make({VertexSet::of({2}), VertexSet::of({0, 1})});
  REQUIRE(p.members.size() == 2);
  CHECK(p.members[0] == VertexSet::of({0, 1}));  // sorted by smallest element
  CHECK(p.members[1] == VertexSet::of({2}));
  CHECK(p.ground == VertexSet{0b111});
  CHECK(Subpartition::empty().is_empty());
  CHECK(Subpartition::empty().ground.empty());
  CHECK_THROWS_AS(Subpartition::make({VertexSet{}}), DomainError);
  CHECK_THROWS_AS(Subpartition::make({VertexSet::of({0, 1}), VertexSet::of({1})}), DomainError);
}

// ---------------------------------------------------------------------------
// entering relations
// ---------------------------------------------------------------------------

TEST_CASE("hyperedge_enters") {
  CHECK(hyperedge_enters(hyper({0, 1}), VertexSet::of({0})));
  CHECK(!hyperedge_enters(hyper({0, 1}), VertexSet::of({0, 1})));
  CHECK(!hyperedge_enters(hyper({0, 1}), VertexSet{}));
}

TEST_CASE("dyperedge_enters") {
  CHECK(dyperedge_enters(dyper({0}, 1), VertexSet::of({1})));
  CHECK(!dyperedge_enters(dyper({0}, 1), VertexSet::of({0})));
  CHECK(!dyperedge_enters(dyper({0, 2}, 1), VertexSet::of({0, 1, 2})));
  // partial tail overlap still enters
  CHECK(dyperedge_enters(dyper({0, 2}, 1), VertexSet::of({0, 1})));
}

TEST_CASE("entering_count counts each copy once") {
  const auto u = uni(2);
  SUBCASE("one hyperedge entering both members") {
    const auto g = graph(u, {hyper({0, 1})}, {});
    CHECK(entering_count(g, sub({{0}, {1}})) == 1);
  }
  SUBCASE("one dyperedge") {
    const auto g = graph(u, {}, {dyper({0}, 1)});
    CHECK(entering_count(g, sub({{1}})) == 1);
    CHECK(entering_count(g, sub({{0}})) == 0);
  }
  SUBCASE("multiplicity two") {
    const auto g = graph(u, {hyper({0, 1}), hyper({0, 1})}, {});
    CHECK(entering_count(g, sub({{0}})) == 2);
  }
  SUBCASE("empty subpartition") {
    const auto g = graph(u, {hyper({0, 1})}, {dyper({0}, 1)});
    CHECK(entering_count(g, Subpartition::empty()) == 0);
  }
}

TEST_CASE("entering_edges matches the definitional decomposition") {
  // E(P) = { Y : some member X of P has hyperedge_enters(Y, X) }, same for A.
  Rng rng(20260818);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = generate_instance({.seed = rng.next(), .n = 4});
    const auto& g = inst.graph;
    for_each_subpartition(g.universe, [&](const std::vector<VertexSet>& members, VertexSet ground) {
      const Subpartition p{members, ground};
      const auto in = entering_edges(g, p);
      long long expected = 0;
      for (const auto& [e, mult] : g.hyperedges) {
        const bool enters = std::any_of(members.begin(), members.end(),
                                        [&](VertexSet x) { return hyperedge_enters(e, x); });
        CHECK(enters == enters_some_member(e, p));
        if (enters) expected += mult;
      }
      for (const auto& [d, mult] : g.dyperedges) {
        const bool enters = std::any_of(members.begin(), members.end(),
                                        [&](VertexSet x) { return dyperedge_enters(d, x); });
        CHECK(enters == enters_some_member(d, p));
        if (enters) expected += mult;
      }
      long long listed = 0;
      for (const auto& [e, mult] : in.hyperedges) listed += mult, (void)e;
      for (const auto& [d, mult] : in.dyperedges) listed += mult, (void)d;
      CHECK(listed == expected);
      CHECK(entering_count(g, p) == expected);
    });
  }
}

// ---------------------------------------------------------------------------
// orient_edge and trim
// ---------------------------------------------------------------------------

TEST_CASE("orient_edge") {
  CHECK(orient_edge(hyper({0, 1}), 1) == dyper({0}, 1));
  CHECK(orient_edge(hyper({0, 1, 2}), 0) == dyper({1, 2}, 0));
  CHECK_THROWS_AS(orient_edge(hyper({0, 1}), 2), DomainError);
}

TEST_CASE("trim") {
  CHECK(trim(dyper({0, 2}, 1), 0) == dyper({0}, 1));
  CHECK(trim(dyper({0}, 1), 0) == dyper({0}, 1));
  CHECK_THROWS_AS(trim(dyper({0, 2}, 1), 1), DomainError);
}

TEST_CASE("trim keeps the head and entering implies the original entered") {
  const auto d = dyper({0, 2, 3}, 1);
  const auto u = uni(4);
  for (int t : d.tails.elements()) {
    const auto arc = trim(d, t);
    CHECK(arc.head == d.head);
    for (uint32_t m = 0; m <= u.full().mask; ++m) {
      const VertexSet x{m};
      if (dyperedge_enters(arc, x)) CHECK(dyperedge_enters(d, x));
    }
  }
}

TEST_CASE("orientation monotonicity: replacing a hyperedge by any head never adds entries") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto inst = generate_instance({.seed = rng.next(), .n = 4});
    const auto& g = inst.graph;
    for (size_t i = 0; i < g.hyperedges.size(); ++i) {
      const Hyperedge y = g.hyperedges[i].first;
      for (int head : y.members.elements()) {
        auto hs = g.hyperedges;
        if (hs[i].second > 1) {
          hs[i].second -= 1;
        } else {
          hs.erase(hs.begin() + static_cast<long>(i));
        }
        auto ds = g.dyperedges;
        ds.push_back({orient_edge(y, head), 1});
        const auto oriented = MixedHypergraph::from_multisets(g.universe, hs, ds);
        for_each_subpartition(g.universe, [&](const std::vector<VertexSet>& members, VertexSet ground) {
          const Subpartition p{members, ground};
          CHECK(entering_count(g, p) >= entering_count(oriented, p));
        });
      }
    }
  }
}

TEST_CASE("containment preservation: an entering edge inside the ground keeps entering") {
  // If Y enters some member of P and Y is contained in the ground, every
  // orientation of Y still enters some member.
  Rng rng(11);
  int observed = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto inst = generate_instance({.seed = rng.next(), .n = 4});
    const auto& g = inst.graph;
    for_each_subpartition(g.universe, [&](const std::vector<VertexSet>& members, VertexSet ground) {
      const Subpartition p{members, ground};
      for (const auto& [y, mult] : g.hyperedges) {
        if (!enters_some_member(y, p) || !y.members.subset_of(ground)) continue;
        ++observed;
        for (int head : y.members.elements()) {
          CHECK(enters_some_member(orient_edge(y, head), p));
        }
      }
    });
  }
  CHECK(observed > 0);
}

#include "mho/model.hpp"

#include <algorithm>

namespace mho {

VertexUniverse VertexUniverse::make(std::vector<std::string> labels) {
  if (labels.empty() || labels.size() > static_cast<size_t>(kMaxVertices)) {
    throw DomainError("universe must have between 1 and 24 vertices");
  }
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) throw DomainError("vertex labels must be nonempty");
    for (size_t j = i + 1; j < labels.size(); ++j) {
      if (labels[i] == labels[j]) throw DomainError("duplicate vertex label: " + labels[i]);
    }
  }
  return VertexUniverse{std::move(labels)};
}

int VertexUniverse::index_of(std::string_view name) const {
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == name) return static_cast<int>(i);
  }
  return -1;
}

Hyperedge Hyperedge::make(VertexSet members) {
  if (members.size() < 2) throw DomainError("hyperedge needs at least two vertices");
  return Hyperedge{members};
}

Dyperedge Dyperedge::make(VertexSet tails, int head) {
  if (tails.empty()) throw DomainError("dyperedge needs a nonempty tail set");
  if (head < 0 || head >= kMaxVertices) throw DomainError("dyperedge head out of range");
  if (tails.contains(head)) throw DomainError("dyperedge head must lie outside the tails");
  return Dyperedge{tails, head};
}

MixedHypergraph MixedHypergraph::make(VertexUniverse universe,
                                      const std::vector<Hyperedge>& hyperedges,
                                      const std::vector<Dyperedge>& dyperedges) {
  std::vector<std::pair<Hyperedge, long long>> hs;
  hs.reserve(hyperedges.size());
  for (const Hyperedge& e : hyperedges) hs.emplace_back(e, 1);
  std::vector<std::pair<Dyperedge, long long>> ds;
  ds.reserve(dyperedges.size());
  for (const Dyperedge& d : dyperedges) ds.emplace_back(d, 1);
  return from_multisets(std::move(universe), std::move(hs), std::move(ds));
}

MixedHypergraph MixedHypergraph::from_multisets(
    VertexUniverse universe, std::vector<std::pair<Hyperedge, long long>> hyperedges,
    std::vector<std::pair<Dyperedge, long long>> dyperedges) {
  const VertexSet full = universe.full();
  std::vector<std::pair<Hyperedge, long long>> hs;
  for (auto& [e, mult] : hyperedges) {
    if (mult < 1) throw DomainError("edge multiplicity must be positive");
    if (!e.members.subset_of(full)) throw DomainError("hyperedge leaves the universe");
    auto it = std::find_if(hs.begin(), hs.end(), [&](const auto& p) { return p.first == e; });
    if (it == hs.end()) {
      hs.emplace_back(e, mult);
    } else {
      it->second = checked_add(it->second, mult);
    }
  }
  std::vector<std::pair<Dyperedge, long long>> ds;
  for (auto& [d, mult] : dyperedges) {
    if (mult < 1) throw DomainError("edge multiplicity must be positive");
    if (!d.tails.subset_of(full) || !full.contains(d.head)) {
      throw DomainError("dyperedge leaves the universe");
    }
    auto it = std::find_if(ds.begin(), ds.end(), [&](const auto& p) { return p.first == d; });
    if (it == ds.end()) {
      ds.emplace_back(d, mult);
    } else {
      it->second = checked_add(it->second, mult);
    }
  }
  return MixedHypergraph{std::move(universe), std::move(hs), std::move(ds)};
}

long long MixedHypergraph::hyperedge_count() const {
  long long total = 0;
  for (const auto& [e, mult] : hyperedges) total = checked_add(total, mult);
  return total;
}

long long MixedHypergraph::dyperedge_count() const {
  long long total = 0;
  for (const auto& [d, mult] : dyperedges) total = checked_add(total, mult);
  return total;
}

Subpartition Subpartition::make(std::vector<VertexSet> members) {
  VertexSet ground;
  for (const VertexSet& m : members) {
    if (m.empty()) throw DomainError("subpartition members must be nonempty");
    if (m.intersects(ground)) throw DomainError("subpartition members must be disjoint");
    ground = ground | m;
  }
  std::sort(members.begin(), members.end(),
            [](VertexSet a, VertexSet b) { return a.min_vertex() < b.min_vertex(); });
  return Subpartition{std::move(members), ground};
}

bool hyperedge_enters(const Hyperedge& e, VertexSet y) {
  return e.members.intersects(y) && !e.members.subset_of(y);
}

bool dyperedge_enters(const Dyperedge& d, VertexSet x) {
  return x.contains(d.head) && !d.tails.subset_of(x);
}

bool enters_some_member(const Hyperedge& e, const Subpartition& p) {
  for (const VertexSet& m : p.members) {
    if (hyperedge_enters(e, m)) return true;
  }
  return false;
}

bool enters_some_member(const Dyperedge& d, const Subpartition& p) {
  // The head lies in at most one member, so that member decides.
  if (!p.ground.contains(d.head)) return false;
  for (const VertexSet& m : p.members) {
    if (m.contains(d.head)) return dyperedge_enters(d, m);
  }
  return false;
}

long long entering_count(const MixedHypergraph& g, const Subpartition& p) {
  long long total = 0;
  for (const auto& [e, mult] : g.hyperedges) {
    if (enters_some_member(e, p)) total = checked_add(total, mult);
  }
  for (const auto& [d, mult] : g.dyperedges) {
    if (enters_some_member(d, p)) total = checked_add(total, mult);
  }
  return total;
}

EnteringEdges entering_edges(const MixedHypergraph& g, const Subpartition& p) {
  EnteringEdges out;
  for (const auto& [e, mult] : g.hyperedges) {
    if (enters_some_member(e, p)) out.hyperedges.emplace_back(e, mult);
  }
  for (const auto& [d, mult] : g.dyperedges) {
    if (enters_some_member(d, p)) out.dyperedges.emplace_back(d, mult);
  }
  return out;
}

Dyperedge orient_edge(const Hyperedge& e, int head) {
  if (!e.members.contains(head)) throw DomainError("orientation head must belong to the hyperedge");
  return Dyperedge::make(e.members.without(head), head);
}

Dyperedge trim(const Dyperedge& d, int tail) {
  if (!d.tails.contains(tail)) throw DomainError("trim tail must belong to the dyperedge tails");
  return Dyperedge::make(VertexSet{}.with(tail), d.head);
}

}  // namespace mho

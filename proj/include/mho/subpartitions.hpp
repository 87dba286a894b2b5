#pragma once

// Exhaustive enumeration of subpartitions (families of pairwise disjoint
// nonempty vertex sets, the empty family included) in a fixed canonical
// order: members are listed by ascending smallest element, member sequences
// are compared lexicographically, and sets with the same smallest element
// are ordered by ascending mask. The enumeration is a preorder DFS that
// extends a family by one member at a time, so every visited node is emitted
// exactly once and the total work is linear in the number of subpartitions.

#include <vector>

#include "mho/errors.hpp"
#include "mho/model.hpp"

namespace mho {

inline constexpr int kMaxEnumerationVertices = 12;

namespace detail {

// Visits the subtree rooted at the current member stack. `free` holds the
// vertices still available, `min_next` the smallest element the next member
// may use (one past the previous member's smallest element).
template <class Fn>
void subpartition_subtree(int n, uint32_t free, int min_next, std::vector<VertexSet>& members,
                          VertexSet& ground, Fn& fn) {
  fn(members, ground);
  for (int v = min_next; v < n; ++v) {
    if (!((free >> v) & 1u)) continue;
    const uint32_t higher = free & ~((2u << v) - 1u);  // free vertices above v
    uint32_t extra = 0;
    while (true) {  // ascending submask walk: 0, then (extra - higher) & higher
      const VertexSet member{(1u << v) | extra};
      members.push_back(member);
      const VertexSet saved = ground;
      ground = ground | member;
      subpartition_subtree(n, free & ~member.mask, v + 1, members, ground, fn);
      ground = saved;
      members.pop_back();
      extra = (extra - higher) & higher;
      if (extra == 0) break;
    }
  }
}

}  // namespace detail

// Calls fn(members, ground) for every subpartition of the universe in
// canonical order, starting with the empty one. The member vector is reused
// between calls; copy it if it must outlive the callback.
template <class Fn>
void for_each_subpartition(const VertexUniverse& u, Fn&& fn) {
  if (u.n() > kMaxEnumerationVertices) {
    throw CapacityError("subpartition enumeration supports at most 12 vertices");
  }
  std::vector<VertexSet> members;
  members.reserve(static_cast<size_t>(u.n()));
  VertexSet ground;
  detail::subpartition_subtree(u.n(), u.full().mask, 0, members, ground, fn);
}

// Same enumeration over the subpartitions of a subset of the universe.
template <class Fn>
void for_each_subpartition_of(const VertexUniverse& u, VertexSet within, Fn&& fn) {
  if (u.n() > kMaxEnumerationVertices) {
    throw CapacityError("subpartition enumeration supports at most 12 vertices");
  }
  std::vector<VertexSet> members;
  members.reserve(static_cast<size_t>(within.size()));
  VertexSet ground;
  detail::subpartition_subtree(u.n(), within.mask, 0, members, ground, fn);
}

// Same walk restricted to the subtree whose first member is `first`.
template <class Fn>
void for_each_subpartition_under(const VertexUniverse& u, VertexSet first, Fn&& fn) {
  if (u.n() > kMaxEnumerationVertices) {
    throw CapacityError("subpartition enumeration supports at most 12 vertices");
  }
  std::vector<VertexSet> members{first};
  VertexSet ground = first;
  detail::subpartition_subtree(u.n(), u.full().mask & ~first.mask, first.min_vertex() + 1,
                               members, ground, fn);
}

inline long long count_subpartitions(const VertexUniverse& u) {
  long long count = 0;
  for_each_subpartition(u, [&](const std::vector<VertexSet>&, VertexSet) { ++count; });
  return count;
}

inline std::vector<Subpartition> all_subpartitions(const VertexUniverse& u) {
  std::vector<Subpartition> out;
  for_each_subpartition(u, [&](const std::vector<VertexSet>& members, VertexSet ground) {
    out.push_back(Subpartition{members, ground});
  });
  return out;
}

}  // namespace mho

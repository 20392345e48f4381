#pragma once

#include <span>
#include <vector>

#include "gwl/group.hpp"

namespace gwl {

// A subgroup stored as a sorted element list plus a membership bitmap.
// `gens` is the essential generating subset discovered while closing.
struct SubgroupSet {
  std::vector<int> elems;
  std::vector<uint8_t> members;
  std::vector<int> gens;
  int group_order = 0;

  bool contains(int x) const { return members[x] != 0; }
  int size() const { return static_cast<int>(elems.size()); }
  bool is_whole_group() const { return size() == group_order; }

  bool operator==(const SubgroupSet& o) const { return elems == o.elems; }
};

SubgroupSet trivial_subgroup(const FiniteGroup& g);

// Smallest subgroup containing `seed`, by worklist closure under
// multiplication (inverses come for free in a finite group).
SubgroupSet closure(const FiniteGroup& g, std::span<const int> seed);

// Extend an existing subgroup by additional elements.
void closure_extend(const FiniteGroup& g, SubgroupSet& h, std::span<const int> extra);

// Smallest normal subgroup of <ambient_gens> containing `seed`. The default
// ambient is the whole group.
SubgroupSet normal_closure(const FiniteGroup& g, std::span<const int> seed);
SubgroupSet normal_closure_in(const FiniteGroup& g, std::span<const int> ambient_gens,
                              std::span<const int> seed);

SubgroupSet centralizer(const FiniteGroup& g, std::span<const int> s);
std::vector<int> conjugate_set(const FiniteGroup& g, int c, std::span<const int> s);
bool is_abelian_subset(const FiniteGroup& g, std::span<const int> s);

// Subgroup membership-respecting conjugacy classes of an ambient subgroup,
// one ascending representative per class.
std::vector<int> class_reps_in(const FiniteGroup& g, const SubgroupSet& ambient);

// Inclusion-minimal elements of { ncl({x}) : x != 0 }, deduplicated. These
// are exactly the minimal normal subgroups.
std::vector<SubgroupSet> minimal_normal_subgroups(const FiniteGroup& g);
std::vector<SubgroupSet> minimal_normals_in(const FiniteGroup& g, const SubgroupSet& ambient);

}  // namespace gwl

#include "gwl/subgroup.hpp"

#include <algorithm>
#include <cassert>

namespace gwl {

SubgroupSet trivial_subgroup(const FiniteGroup& g) {
  SubgroupSet h;
  h.group_order = g.order();
  h.members.assign(g.order(), 0);
  h.members[0] = 1;
  h.elems = {0};
  return h;
}

namespace {

// Close `h` under right multiplication by its essential generators, starting
// from the given frontier.
void expand(const FiniteGroup& g, SubgroupSet& h, std::vector<int> frontier) {
  size_t head = 0;
  while (head < frontier.size()) {
    int x = frontier[head++];
    for (int s : h.gens) {
      int y = g.mul(x, s);
      if (!h.members[y]) {
        h.members[y] = 1;
        h.elems.push_back(y);
        frontier.push_back(y);
      }
    }
  }
}

void adjoin(const FiniteGroup& g, SubgroupSet& h, int x) {
  if (h.members[x]) return;
  h.gens.push_back(x);
  h.members[x] = 1;
  h.elems.push_back(x);
  expand(g, h, h.elems);
}

}  // namespace

void closure_extend(const FiniteGroup& g, SubgroupSet& h, std::span<const int> extra) {
  for (int x : extra) adjoin(g, h, x);
  std::sort(h.elems.begin(), h.elems.end());
  assert(g.order() % h.size() == 0);  // Lagrange
}

SubgroupSet closure(const FiniteGroup& g, std::span<const int> seed) {
  SubgroupSet h = trivial_subgroup(g);
  closure_extend(g, h, seed);
  return h;
}

SubgroupSet normal_closure_in(const FiniteGroup& g, std::span<const int> ambient_gens,
                              std::span<const int> seed) {
  SubgroupSet h = trivial_subgroup(g);
  for (int x : seed) adjoin(g, h, x);
  // Conjugate every member by the ambient generators; keep adjoining until
  // the set is conjugation-closed. elems grows while we walk it.
  for (size_t i = 0; i < h.elems.size(); ++i) {
    int x = h.elems[i];
    for (int t : ambient_gens) {
      int y = g.conj(t, x);
      if (!h.members[y]) adjoin(g, h, y);
    }
  }
  std::sort(h.elems.begin(), h.elems.end());
  assert(g.order() % h.size() == 0);
  return h;
}

SubgroupSet normal_closure(const FiniteGroup& g, std::span<const int> seed) {
  return normal_closure_in(g, g.small_gens(), seed);
}

SubgroupSet centralizer(const FiniteGroup& g, std::span<const int> s) {
  SubgroupSet h;
  h.group_order = g.order();
  h.members.assign(g.order(), 0);
  for (int c = 0; c < g.order(); ++c) {
    bool ok = true;
    for (int x : s)
      if (!g.commute(c, x)) {
        ok = false;
        break;
      }
    if (ok) {
      h.members[c] = 1;
      h.elems.push_back(c);
    }
  }
  // Record a generating set for downstream use.
  SubgroupSet built = trivial_subgroup(g);
  for (int x : h.elems)
    if (!built.members[x]) adjoin(g, built, x);
  h.gens = built.gens;
  return h;
}

std::vector<int> conjugate_set(const FiniteGroup& g, int c, std::span<const int> s) {
  std::vector<int> out;
  out.reserve(s.size());
  for (int x : s) out.push_back(g.conj(c, x));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_abelian_subset(const FiniteGroup& g, std::span<const int> s) {
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (!g.commute(s[i], s[j])) return false;
  return true;
}

std::vector<int> class_reps_in(const FiniteGroup& g, const SubgroupSet& ambient) {
  std::vector<int> cls(g.order(), -1);
  std::vector<int> reps;
  for (int x : ambient.elems) {
    if (cls[x] >= 0) continue;
    reps.push_back(x);
    cls[x] = static_cast<int>(reps.size()) - 1;
    std::vector<int> frontier{x};
    while (!frontier.empty()) {
      int y = frontier.back();
      frontier.pop_back();
      for (int t : ambient.gens) {
        int z = g.conj(t, y);
        if (cls[z] < 0) {
          cls[z] = cls[x];
          frontier.push_back(z);
        }
      }
    }
  }
  return reps;
}

namespace {

std::vector<SubgroupSet> minimal_filter(std::vector<SubgroupSet> all) {
  // Deduplicate, then drop any set containing a strictly smaller one.
  std::sort(all.begin(), all.end(),
            [](const SubgroupSet& a, const SubgroupSet& b) { return a.elems < b.elems; });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::sort(all.begin(), all.end(),
            [](const SubgroupSet& a, const SubgroupSet& b) { return a.size() < b.size(); });
  std::vector<SubgroupSet> out;
  for (auto& cand : all) {
    bool contains_smaller = false;
    for (const auto& kept : out) {
      bool sub = true;
      for (int x : kept.elems)
        if (!cand.contains(x)) {
          sub = false;
          break;
        }
      if (sub) {
        contains_smaller = true;
        break;
      }
    }
    if (!contains_smaller) out.push_back(std::move(cand));
  }
  // Deterministic order: ascending by smallest non-identity element.
  std::sort(out.begin(), out.end(), [](const SubgroupSet& a, const SubgroupSet& b) {
    return a.elems < b.elems;
  });
  return out;
}

}  // namespace

std::vector<SubgroupSet> minimal_normals_in(const FiniteGroup& g, const SubgroupSet& ambient) {
  std::vector<SubgroupSet> all;
  for (int r : class_reps_in(g, ambient)) {
    if (r == 0) continue;
    int seed[1] = {r};
    all.push_back(normal_closure_in(g, ambient.gens, seed));
  }
  return minimal_filter(std::move(all));
}

std::vector<SubgroupSet> minimal_normal_subgroups(const FiniteGroup& g) {
  std::vector<SubgroupSet> all;
  for (int r : g.class_reps()) {
    if (r == 0) continue;
    int seed[1] = {r};
    all.push_back(normal_closure(g, seed));
  }
  return minimal_filter(std::move(all));
}

}  // namespace gwl

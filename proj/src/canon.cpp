#include "gwl/canon.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstring>
#include <numeric>

namespace gwl {

CanonCertificate loops_cert(std::span<const uint32_t> loop_colors) {
  std::vector<uint32_t> sorted(loop_colors.begin(), loop_colors.end());
  std::sort(sorted.begin(), sorted.end());
  CanonCertificate cert;
  cert.bytes.reserve(5 + sorted.size() * 4);
  cert.bytes += 'L';
  uint32_t n = static_cast<uint32_t>(sorted.size());
  cert.bytes.append(reinterpret_cast<const char*>(&n), 4);
  cert.bytes.append(reinterpret_cast<const char*>(sorted.data()), sorted.size() * 4);
  return cert;
}

namespace {

// Ordered partition refinement state. Cells are kept in canonical order:
// initial cells ordered by invariant value, splits ordered by sub-invariant,
// individualized vertices placed first within their old cell.
struct Refiner {
  const EdgeColoredDigraph& g;
  int n;
  std::vector<int> cell_of;             // vertex -> ordered cell index
  std::vector<std::vector<int>> cells;  // ordered cells, each ascending

  explicit Refiner(const EdgeColoredDigraph& graph) : g(graph), n(graph.n) {
    cell_of.assign(n, 0);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    cells = {all};
    refine();
  }

  bool discrete() const { return static_cast<int>(cells.size()) == n; }

  // One full refinement sweep; returns whether any cell split.
  bool sweep() {
    using Entry = std::array<uint32_t, 3>;
    std::vector<std::vector<Entry>> key(n);
    for (int v = 0; v < n; ++v) {
      auto& kv = key[v];
      kv.resize(n);
      for (int z = 0; z < n; ++z)
        kv[z] = {static_cast<uint32_t>(cell_of[z]), g.at(v, z), g.at(z, v)};
      std::sort(kv.begin(), kv.end());
    }
    std::vector<std::vector<int>> next;
    bool split = false;
    for (auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<int> order = cell;
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
      size_t start = 0;
      for (size_t i = 1; i <= order.size(); ++i) {
        if (i == order.size() || key[order[i]] != key[order[start]]) {
          next.emplace_back(order.begin() + start, order.begin() + i);
          std::sort(next.back().begin(), next.back().end());
          if (i - start != cell.size()) split = true;
          start = i;
        }
      }
    }
    cells = std::move(next);
    for (size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
    return split;
  }

  void refine() {
    while (!discrete() && sweep()) {
    }
  }

  void individualize(int v) {
    int c = cell_of[v];
    std::vector<int> rest;
    for (int u : cells[c])
      if (u != v) rest.push_back(u);
    cells[c] = {v};
    cells.insert(cells.begin() + c + 1, std::move(rest));
    for (size_t i = 0; i < cells.size(); ++i)
      for (int u : cells[i]) cell_of[u] = static_cast<int>(i);
    refine();
  }
};

std::string serialize_under(const EdgeColoredDigraph& g, const std::vector<int>& order) {
  std::string out;
  out.reserve(5 + static_cast<size_t>(g.n) * g.n * 4);
  out += 'C';
  uint32_t n = static_cast<uint32_t>(g.n);
  out.append(reinterpret_cast<const char*>(&n), 4);
  for (int y = 0; y < g.n; ++y)
    for (int z = 0; z < g.n; ++z) {
      uint32_t c = g.at(order[y], order[z]);
      out.append(reinterpret_cast<const char*>(&c), 4);
    }
  return out;
}

void search(const EdgeColoredDigraph& g, Refiner& ref, std::string& best, bool& have_best) {
  if (ref.discrete()) {
    std::vector<int> order(g.n);
    for (int c = 0; c < g.n; ++c) order[c] = ref.cells[c][0];
    std::string cand = serialize_under(g, order);
    if (!have_best || cand < best) {
      best = std::move(cand);
      have_best = true;
    }
    return;
  }
  // First non-singleton cell is an invariant choice; branch over its members.
  size_t target = 0;
  while (ref.cells[target].size() == 1) ++target;
  for (int v : ref.cells[target]) {
    Refiner child = ref;
    child.individualize(v);
    search(g, child, best, have_best);
  }
}

}  // namespace

CanonCertificate canon_cert(const EdgeColoredDigraph& g) {
  assert(!g.loops_only);
  if (g.n == 0) return CanonCertificate{std::string("C\0\0\0\0", 5)};
  Refiner ref(g);
  std::string best;
  bool have_best = false;
  search(g, ref, best, have_best);
  return CanonCertificate{std::move(best)};
}

bool brute_force_color_iso(const EdgeColoredDigraph& a, const EdgeColoredDigraph& b) {
  if (a.n != b.n) return false;
  if (a.n > 8) throw error(errc::too_large, "brute-force color isomorphism requires n <= 8");
  std::vector<int> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int y = 0; y < a.n && ok; ++y)
      for (int z = 0; z < a.n; ++z)
        if (a.at(y, z) != b.at(perm[y], perm[z])) {
          ok = false;
          break;
        }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::string digest128(std::string_view bytes) {
  // Two independent 64-bit FNV-1a lanes with distinct offsets.
  uint64_t h1 = 0xcbf29ce484222325ull, h2 = 0x9e3779b97f4a7c15ull;
  for (unsigned char c : bytes) {
    h1 = (h1 ^ c) * 0x100000001b3ull;
    h2 = (h2 ^ c) * 0xc6a4a7935bd1e995ull;
    h2 ^= h2 >> 29;
  }
  char out[33];
  std::snprintf(out, sizeof out, "%016llx%016llx", static_cast<unsigned long long>(h1),
                static_cast<unsigned long long>(h2));
  return std::string(out, 32);
}

}  // namespace gwl

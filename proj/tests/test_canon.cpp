#include <doctest.h>

#include <numeric>
#include <random>

#include "gwl/canon.hpp"

using namespace gwl;

namespace {

EdgeColoredDigraph random_graph(int n, int palette, std::mt19937_64& rng) {
  EdgeColoredDigraph g;
  g.n = n;
  g.colors.resize(static_cast<size_t>(n) * n);
  std::uniform_int_distribution<uint32_t> pick(0, palette - 1);
  for (auto& c : g.colors) c = pick(rng);
  return g;
}

EdgeColoredDigraph permuted_copy(const EdgeColoredDigraph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  EdgeColoredDigraph h;
  h.n = g.n;
  h.colors.resize(g.colors.size());
  for (int y = 0; y < g.n; ++y)
    for (int z = 0; z < g.n; ++z) h.at(perm[y], perm[z]) = g.at(y, z);
  return h;
}

}  // namespace

TEST_CASE("loops_cert is a multiset certificate") {
  std::vector<uint32_t> a{5, 3, 3}, b{3, 5, 3}, c{1}, d{2}, e{0, 0, 0}, f{0, 0};
  CHECK(loops_cert(a) == loops_cert(b));
  CHECK(loops_cert(c) != loops_cert(d));
  CHECK(loops_cert(e) != loops_cert(f));
}

TEST_CASE("canon_cert invariant under vertex permutation") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    auto g = random_graph(n, 3, rng);
    auto h = permuted_copy(g, rng);
    CHECK(canon_cert(g) == canon_cert(h));
  }
}

TEST_CASE("canon_cert exactness vs brute force") {
  std::mt19937_64 rng(7);
  int checked_equal = 0, checked_diff = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);  // 2..6
    auto a = random_graph(n, 2 + trial % 3, rng);
    EdgeColoredDigraph b;
    if (trial % 2 == 0) {
      b = permuted_copy(a, rng);
    } else {
      b = random_graph(n, 2 + trial % 3, rng);
    }
    bool cert_eq = canon_cert(a) == canon_cert(b);
    bool iso = brute_force_color_iso(a, b);
    CHECK(cert_eq == iso);
    (cert_eq ? checked_equal : checked_diff)++;
  }
  CHECK(checked_equal > 50);
  CHECK(checked_diff > 50);
}

TEST_CASE("different vertex counts never match") {
  std::mt19937_64 rng(9);
  auto a = random_graph(4, 2, rng);
  auto b = random_graph(5, 2, rng);
  CHECK(canon_cert(a) != canon_cert(b));
  CHECK_FALSE(brute_force_color_iso(a, b));
}

TEST_CASE("edge color multiset is an invariant") {
  EdgeColoredDigraph a, b;
  a.n = b.n = 2;
  a.colors = {0, 1, 1, 0};
  b.colors = {0, 0, 1, 1};
  CHECK(brute_force_color_iso(a, a));
  bool cert_eq = canon_cert(a) == canon_cert(b);
  CHECK(cert_eq == brute_force_color_iso(a, b));
}

TEST_CASE("transpose coherence") {
  // a bijection is a color-isomorphism iff it is one of the transposes
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    auto a = random_graph(n, 2, rng);
    auto b = (trial % 2 == 0) ? permuted_copy(a, rng) : random_graph(n, 2, rng);
    auto transpose = [](const EdgeColoredDigraph& g) {
      EdgeColoredDigraph t = g;
      for (int y = 0; y < g.n; ++y)
        for (int z = 0; z < g.n; ++z) t.at(z, y) = g.at(y, z);
      return t;
    };
    CHECK(brute_force_color_iso(a, b) == brute_force_color_iso(transpose(a), transpose(b)));
  }
}

TEST_CASE("digest determinism") {
  CHECK(digest128("hello") == digest128("hello"));
  CHECK(digest128("hello") != digest128("hellp"));
  CHECK(digest128("").size() == 32);
}

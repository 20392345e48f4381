#include <doctest.h>

#include <algorithm>
#include <set>

#include "gwl/group.hpp"
#include "gwl/subgroup.hpp"

using namespace gwl;

namespace {

void check_group_axioms(const FiniteGroup& g) {
  int n = g.order();
  // identity at 0
  for (int x = 0; x < n; ++x) {
    CHECK(g.mul(0, x) == x);
    CHECK(g.mul(x, 0) == x);
    CHECK(g.mul(x, g.inv(x)) == 0);
    CHECK(g.mul(g.inv(x), x) == 0);
  }
  // Latin square rows/cols
  for (int a = 0; a < std::min(n, 64); ++a) {
    std::set<int> row, col;
    for (int b = 0; b < n; ++b) {
      row.insert(g.mul(a, b));
      col.insert(g.mul(b, a));
    }
    CHECK(static_cast<int>(row.size()) == n);
    CHECK(static_cast<int>(col.size()) == n);
  }
}

}  // namespace

TEST_CASE("load trivial and Z2") {
  auto t = load_group("1\n0");
  CHECK(t.order() == 1);
  auto z2 = load_group("2\n0 1\n1 0");
  CHECK(z2.order() == 2);
  CHECK(z2.element_order(1) == 2);
}

TEST_CASE("loader rejects bad tables") {
  CHECK_THROWS_AS(load_group("2\n0 1\n1 1"), error);
  try {
    load_group("2\n0 1\n1 1");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_latin_square);
  }
  CHECK_THROWS_AS(load_group(""), error);
  CHECK_THROWS_AS(load_group("2\n0 1\n1 x"), error);
  // Latin square with a left identity but no two-sided identity.
  try {
    load_group("3\n0 1 2\n2 0 1\n1 2 0");
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::no_identity);
  }
}

TEST_CASE("loader relabels identity to 0") {
  // Z3 with identity at id 2: define m(a,b) via x -> (x+1)%3 relabeling of (a+b)%3
  // Build by permuting the standard table with pi = (0 1 2) -> (1 2 0).
  auto z3 = cyclic(3);
  std::vector<int> pi{1, 2, 0};
  int t[3][3];
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) t[pi[a]][pi[b]] = pi[z3.mul(a, b)];
  std::string text = "3\n";
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) text += std::to_string(t[a][b]) + " ";
    text += "\n";
  }
  auto g = load_group(text);
  CHECK(g.load_report().relabeled);
  CHECK(g.load_report().identity_was == 1);  // pi maps the old identity 0 to id 1
  CHECK(g.mul(0, 1) == 1);
  check_group_axioms(g);
}

TEST_CASE("cay/cayb round trip") {
  auto s3 = symmetric(3);
  auto text = save_cay(s3);
  auto back = load_group(text);
  CHECK(back.order() == 6);
  check_group_axioms(back);
  auto bin = save_cayb(s3);
  auto back2 = load_group(std::string(bin.begin(), bin.end()));
  CHECK(back2.order() == 6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) CHECK(back.mul(a, b) == back2.mul(a, b));
}

TEST_CASE("families") {
  CHECK(cyclic(1).order() == 1);
  CHECK(cyclic(4).element_order(1) == 4);
  CHECK(dihedral(8).order() == 8);
  CHECK(symmetric(3).order() == 6);
  CHECK(symmetric(4).order() == 24);
  CHECK(symmetric(5).order() == 120);
  CHECK(alternating(4).order() == 12);
  CHECK(alternating(5).order() == 60);
  CHECK(alternating(6).order() == 360);
  CHECK(quaternion8().order() == 8);
  check_group_axioms(symmetric(4));
  check_group_axioms(alternating(5));
  check_group_axioms(quaternion8());
  check_group_axioms(dihedral(12));
}

TEST_CASE("element orders in S3") {
  auto s3 = symmetric(3);
  int order2 = 0;
  for (int x = 0; x < 6; ++x)
    if (s3.element_order(x) == 2) ++order2;
  CHECK(order2 == 3);
}

TEST_CASE("closure basics") {
  auto z4 = cyclic(4);
  auto whole = closure(z4, std::vector<int>{1});
  CHECK(whole.size() == 4);
  auto half = closure(z4, std::vector<int>{2});
  CHECK(half.size() == 2);
  CHECK(half.contains(0));
  CHECK(half.contains(2));
  auto none = closure(z4, std::vector<int>{});
  CHECK(none.size() == 1);

  // A 4-cycle and a transposition moving one of its points generate S4.
  auto s4 = symmetric(4);
  int four_cycle = -1, transposition = -1;
  for (int x = 0; x < 24 && (four_cycle < 0 || transposition < 0); ++x) {
    if (s4.element_order(x) == 4 && four_cycle < 0) four_cycle = x;
    if (s4.element_order(x) == 2 && transposition < 0) {
      auto p = s4.perm_of(x);
      int moved = 0;
      for (size_t i = 0; i < p.size(); ++i) moved += p[i] != i;
      if (moved == 2) transposition = x;
    }
  }
  REQUIRE(four_cycle >= 0);
  REQUIRE(transposition >= 0);
  auto gen = closure(s4, std::vector<int>{four_cycle, transposition});
  CHECK(gen.size() == 24);
}

TEST_CASE("closure is idempotent and Lagrange-sized") {
  auto g = symmetric(4);
  for (int a = 0; a < g.order(); a += 5)
    for (int b = a; b < g.order(); b += 7) {
      auto h = closure(g, std::vector<int>{a, b});
      CHECK(24 % h.size() == 0);
      auto again = closure(g, h.elems);
      CHECK(again.elems == h.elems);
    }
}

TEST_CASE("normal closure") {
  auto s3 = symmetric(3);
  // any transposition normally generates S3
  for (int x = 1; x < 6; ++x)
    if (s3.element_order(x) == 2) {
      auto n = normal_closure(s3, std::vector<int>{x});
      CHECK(n.size() == 6);
    }
  auto z6 = cyclic(6);
  auto n = normal_closure(z6, std::vector<int>{3});
  CHECK(n.size() == 2);
  auto triv = normal_closure(s3, std::vector<int>{0});
  CHECK(triv.size() == 1);
  // normal closures are conjugation-invariant
  auto s4 = symmetric(4);
  auto m = normal_closure(s4, std::vector<int>{5});
  for (int c = 0; c < 24; ++c) CHECK(conjugate_set(s4, c, m.elems) == m.elems);
}

TEST_CASE("centralizer and abelian checks") {
  auto s3 = symmetric(3);
  auto all = centralizer(s3, std::vector<int>{0});
  CHECK(all.size() == 6);
  std::vector<int> whole(6);
  for (int i = 0; i < 6; ++i) whole[i] = i;
  auto center = centralizer(s3, whole);
  CHECK(center.size() == 1);  // trivial center
  auto q8 = quaternion8();
  std::vector<int> q8all(8);
  for (int i = 0; i < 8; ++i) q8all[i] = i;
  CHECK_FALSE(is_abelian_subset(q8, q8all));
  CHECK_FALSE(q8.is_abelian());
  CHECK(cyclic(12).is_abelian());
}

TEST_CASE("conjugation preserves element order") {
  auto g = symmetric(4);
  for (int a = 0; a < 24; ++a)
    for (int c = 0; c < 24; c += 3) CHECK(g.element_order(g.conj(c, a)) == g.element_order(a));
}

TEST_CASE("direct product and wreath") {
  auto v4 = direct_product(cyclic(2), cyclic(2));
  CHECK(v4.order() == 4);
  for (int x = 0; x < 4; ++x) CHECK(v4.mul(x, x) == 0);  // exponent 2
  auto d8 = wreath_swap(cyclic(2));
  CHECK(d8.order() == 8);
  check_group_axioms(d8);
}

TEST_CASE("big products use the permutation backend") {
  auto a5 = alternating(5);
  auto s5 = symmetric(5);
  auto big = direct_product(a5, s5);
  CHECK(big.order() == 7200);
  CHECK_FALSE(big.is_dense());
  CHECK(big.mul(0, 17) == 17);
  auto wr = wreath_swap(a5);
  CHECK(wr.order() == 7200);
  // spot-check axioms on a few elements
  for (int x = 0; x < 50; ++x) {
    CHECK(wr.mul(x, wr.inv(x)) == 0);
    CHECK(wr.mul(wr.inv(x), x) == 0);
  }
}

TEST_CASE("relabel is isomorphic with scrambled ids") {
  auto a5 = alternating(5);
  auto r = relabel(a5, 7);
  CHECK(r.order() == 60);
  check_group_axioms(r);
  // order multiset invariant
  std::multiset<int> o1, o2;
  for (int x = 0; x < 60; ++x) {
    o1.insert(a5.element_order(x));
    o2.insert(r.element_order(x));
  }
  CHECK(o1 == o2);
}

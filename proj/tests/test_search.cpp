#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "multilat/reference.hpp"
#include "multilat/search.hpp"

using namespace multilat;

TEST_CASE("the two-chain carries exactly one pocrim") {
  Algebra two = builtin_algebra("two");
  auto res = enumerate_pocrims(two.poset, two.top);
  CHECK(res.exhaustive);
  REQUIRE(res.found.size() == 1);
  CHECK(res.found[0].mul == *two.mul);
  CHECK(res.found[0].imp == *two.imp);
}

TEST_CASE("no pocrim structure exists on the six-element pure multilattice") {
  Poset p = builtin_poset("ml6-poset");
  auto res = enumerate_pocrims(p, *p.maximum());
  CHECK(res.found.empty());
  CHECK(res.exhaustive);
  CHECK(res.nodes > 0);
}

TEST_CASE("the order-7 poset carries seventeen pocrims including the catalog one") {
  Algebra r = builtin_algebra("rml7");
  auto res = enumerate_pocrims(r.poset, r.top);
  CHECK(res.exhaustive);
  CHECK(res.found.size() == 17);
  PocrimTables expected{*r.mul, *r.imp};
  CHECK(std::find(res.found.begin(), res.found.end(), expected) != res.found.end());
  // soundness: every reported structure re-verifies
  for (const auto& f : res.found) {
    Algebra a = r;
    a.mul = f.mul;
    a.imp = f.imp;
    CHECK(verify_pocrim(a).ok());
  }
}

TEST_CASE("pocrim counts on chains match the discrete t-norm enumeration") {
  const int expected[] = {1, 1, 2, 6, 22, 94, 451};  // chains of 1..7 elements
  for (int k = 1; k <= 7; ++k) {
    Algebra chain = builtin_algebra("chain-" + std::to_string(k) + "-godel");
    auto res = enumerate_pocrims(chain.poset, chain.top);
    CHECK(res.exhaustive);
    CHECK(static_cast<int>(res.found.size()) == expected[k - 1]);
  }
}

TEST_CASE("the eleven-element pure multilattice admits no pocrim either") {
  Poset p = builtin_poset("fig2-poset");
  auto res = enumerate_pocrims(p, *p.maximum());
  CHECK(res.found.empty());
  CHECK(res.exhaustive);
}

TEST_CASE("result cap truncates deterministically") {
  Algebra r = builtin_algebra("rml7");
  SearchConfig cfg;
  cfg.cap = 5;
  auto res = enumerate_pocrims(r.poset, r.top, cfg);
  CHECK(res.found.size() == 5);
  CHECK(!res.exhaustive);
}

TEST_CASE("search requires the designated maximum") {
  Poset p = builtin_poset("ml6-poset");
  CHECK_THROWS_AS(enumerate_pocrims(p, p.index_of("c")), Error);
}

TEST_CASE("implication search on the two-chain with P3 alone") {
  Algebra two = builtin_algebra("two");
  auto res = enumerate_implications(two.poset, two.top, kAxiomP3);
  CHECK(res.exhaustive);
  REQUIRE(res.found.size() == 1);
  CHECK(res.found[0] == *two.imp);
}

TEST_CASE("implication search on the six-element pattern with all five axioms") {
  Poset p = builtin_poset("ml6-poset");
  auto res = enumerate_implications(p, *p.maximum(), kAllImpAxioms);
  CHECK(res.exhaustive);
  REQUIRE(res.found.size() == 2);

  const OpTable table1 = *builtin_algebra("ml6-imp-table").imp;
  CHECK(std::find(res.found.begin(), res.found.end(), table1) != res.found.end());

  // the second survivor differs only by sending both atoms to bottom
  for (const auto& t : res.found) {
    if (t == table1) continue;
    int bot = p.index_of("⊥"), a = p.index_of("a"), b = p.index_of("b");
    for (int i = 0; i < p.size(); ++i)
      for (int j = 0; j < p.size(); ++j) {
        if ((i == a || i == b) && j == bot)
          CHECK(t.at(i, j) == bot);
        else
          CHECK(t.at(i, j) == table1.at(i, j));
      }
  }
}

TEST_CASE("implication survivors satisfy every selected axiom, rechecked independently") {
  Poset p = builtin_poset("ml6-poset");
  int top = *p.maximum();
  auto res = enumerate_implications(p, top, kAllImpAxioms);
  for (const auto& t : res.found) {
    for (int a = 0; a < p.size(); ++a)
      for (int b = 0; b < p.size(); ++b) {
        CHECK(p.leq(a, b) == (t.at(a, b) == top));  // P3
        CHECK(p.leq(b, t.at(a, b)));                // weakening
        CHECK(t.at(top, b) == b);                   // top identity
        for (int c = 0; c < p.size(); ++c) {
          if (p.leq(a, b)) {
            CHECK(p.leq(t.at(c, a), t.at(c, b)));   // P4, right argument
            CHECK(p.leq(t.at(b, c), t.at(a, c)));   // P4, left argument
          }
          CHECK(t.at(a, t.at(b, c)) == t.at(b, t.at(a, c)));  // P5
        }
      }
  }
}

TEST_CASE("the catalog implication survives the five axioms on its own poset") {
  Algebra r = builtin_algebra("rml7");
  auto res = enumerate_implications(r.poset, r.top, kAllImpAxioms);
  CHECK(res.exhaustive);
  CHECK(std::find(res.found.begin(), res.found.end(), *r.imp) != res.found.end());
}

TEST_CASE("axiom subsets and errors") {
  Algebra two = builtin_algebra("two");
  CHECK_THROWS_AS(enumerate_implications(two.poset, two.top, 0), Error);
  // weakening alone leaves several tables on the two-chain
  auto res = enumerate_implications(two.poset, two.top, kAxiomWeakening);
  CHECK(res.found.size() > 1);
}

TEST_CASE("bounded poset generation counts") {
  const int expected[] = {1, 1, 1, 2, 5, 16, 63};
  for (int n = 1; n <= 7; ++n) {
    auto ps = enumerate_bounded_posets(n);
    CHECK(static_cast<int>(ps.size()) == expected[n - 1]);
    for (const auto& p : ps) {
      CHECK(p.size() == n);
      CHECK(p.maximum());
      CHECK(p.minimum());
    }
  }
  CHECK_THROWS_AS(enumerate_bounded_posets(8), Error);
  CHECK_THROWS_AS(enumerate_bounded_posets(0), Error);
}

TEST_CASE("exactly one pure bounded class of order six, none smaller") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_bounded_posets(n)) CHECK(!classify(p).is_pure);
  int pure = 0;
  for (const auto& p : enumerate_bounded_posets(6))
    if (classify(p).is_pure) ++pure;
  CHECK(pure == 1);
}

TEST_CASE("backtracker agrees with the naive filter on tiny posets") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& p : enumerate_posets_with_maximum(n)) {
      auto fast = enumerate_pocrims(p, *p.maximum()).found;
      auto slow = reference_all_pocrims(p, *p.maximum());
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("worker count does not change results") {
  Algebra r = builtin_algebra("rml7");
  SearchConfig j1, j4;
  j1.jobs = 1;
  j4.jobs = 4;
  auto a = enumerate_pocrims(r.poset, r.top, j1);
  auto b = enumerate_pocrims(r.poset, r.top, j4);
  CHECK(a.found == b.found);
  CHECK(a.nodes == b.nodes);

  Poset ml6 = builtin_poset("ml6-poset");
  auto c = enumerate_implications(ml6, *ml6.maximum(), kAllImpAxioms, j1);
  auto d = enumerate_implications(ml6, *ml6.maximum(), kAllImpAxioms, j4);
  CHECK(c.found == d.found);
  CHECK(c.nodes == d.nodes);
}

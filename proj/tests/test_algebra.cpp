#include "doctest.h"
#include "helpers.hpp"
#include "multilat/algebra.hpp"

using namespace multilat;

namespace {

// commutative monoid on the six-element pattern that kills every product:
// residuals fail because {c | a*c <= bottom} has two maximal elements
Algebra crushed_ml6() {
  Algebra a;
  a.poset = builtin_poset("ml6-poset");
  a.top = a.poset.index_of("⊤");
  a.bottom = a.poset.index_of("⊥");
  OpTable t(6);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) t.set(x, y, 0);
  for (int x = 0; x < 6; ++x) {
    t.set(a.top, x, x);
    t.set(x, a.top, x);
  }
  a.mul = t;
  return a;
}

}  // namespace

TEST_CASE("residual_of on the catalog structure") {
  Algebra r = builtin_algebra("rml7");
  const Poset& p = r.poset;
  auto res = [&](const char* a, const char* b) {
    auto v = residual_of(p, *r.mul, p.index_of(a), p.index_of(b));
    REQUIRE(v);
    return p.label(*v);
  };
  CHECK(res("e", "a") == "e");
  for (const char* b : {"⊥", "a", "b", "c", "d", "e", "⊤"})
    CHECK(res("⊤", b) == b);  // identity residual
  CHECK(res("c", "⊥") == "e");
}

TEST_CASE("derive_implication reproduces the stored table") {
  for (const char* name : {"rml7", "two", "chain-5-lukasiewicz", "chain-4-godel"}) {
    Algebra a = builtin_algebra(name);
    auto derived = derive_implication(a.poset, *a.mul);
    REQUIRE(derived);
    CHECK(*derived == *a.imp);
  }
}

TEST_CASE("derive_implication fails on a non-residuable product") {
  Algebra a = crushed_ml6();
  std::pair<int, int> first{-1, -1};
  auto derived = derive_implication(a.poset, *a.mul, &first);
  CHECK(!derived);
  CHECK(first == std::pair<int, int>{1, 0});  // a -> bottom has two maximal candidates
  CHECK(!residual_of(a.poset, *a.mul, 1, 0));
}

TEST_CASE("verify_pocrim on the catalog structure and a mutation") {
  Algebra r = builtin_algebra("rml7");
  CHECK(verify_pocrim(r).ok());

  Algebra bad = r;
  OpTable t = *bad.mul;
  int e = bad.poset.index_of("e");
  t.set(e, e, bad.poset.index_of("⊥"));
  bad.mul = t;
  auto rep = verify_pocrim(bad);
  CHECK(!rep.ok());
  auto* adj = rep.find("adjointness");
  REQUIRE(adj);
  CHECK(!adj->pass);
  CHECK(!adj->detail.empty());
}

TEST_CASE("each monoid axiom is caught by its own check") {
  // three-chain, top = 2
  Algebra base = builtin_algebra("chain-3-godel");

  SUBCASE("identity") {
    OpTable t = *base.mul;
    t.set(2, 0, 1);
    base.mul = t;
    auto rep = verify_pocrim(base);
    CHECK(!rep.find("identity")->pass);
  }
  SUBCASE("commutativity") {
    OpTable t = *base.mul;
    t.set(0, 1, 1);  // leaves t(1,0) = 0
    base.mul = t;
    auto rep = verify_pocrim(base);
    CHECK(!rep.find("commutativity")->pass);
  }
  SUBCASE("associativity") {
    OpTable t(3);
    for (int x = 0; x < 3; ++x) {
      t.set(2, x, x);
      t.set(x, 2, x);
    }
    t.set(0, 0, 1);
    t.set(0, 1, 0);
    t.set(1, 0, 0);
    t.set(1, 1, 0);
    base.mul = t;
    base.imp.reset();
    auto rep = verify_pocrim(base);
    CHECK(rep.find("identity")->pass);
    CHECK(rep.find("commutativity")->pass);
    CHECK(!rep.find("associativity")->pass);
  }
  SUBCASE("residual existence") {
    Algebra crushed = crushed_ml6();
    auto rep = verify_pocrim(crushed);
    CHECK(!rep.find("residuals-exist")->pass);
    CHECK(!rep.find("adjointness")->pass);
  }
}

TEST_CASE("one-element algebra verifies") {
  Algebra one;
  one.poset = Poset::from_covers("one", {"⊤"}, {});
  one.top = 0;
  one.bottom = 0;
  OpTable t(1);
  t.set(0, 0, 0);
  one.mul = t;
  CHECK(verify_pocrim(one).ok());
  CHECK(verify_rml(one).ok());
  CHECK(check_properties(one).ok());
}

TEST_CASE("verify_rml needs a bounded carrier") {
  CHECK(verify_rml(builtin_algebra("rml7")).ok());
  CHECK(verify_rml(builtin_algebra("chain-3-lukasiewicz")).ok());

  // no maximum at all: both the top designation and completeness fail
  Algebra open;
  open.poset = Poset::from_covers("open", {"⊥", "x", "y"}, {{"⊥", "x"}, {"⊥", "y"}});
  open.top = open.poset.index_of("x");
  OpTable t(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t.set(i, j, 0);
  for (int i = 0; i < 3; ++i) {
    t.set(open.top, i, i);
    t.set(i, open.top, i);
  }
  open.mul = t;
  auto rep = verify_rml(open);
  CHECK(!rep.ok());
  CHECK(!rep.find("top-maximum")->pass);
  CHECK(!rep.find("complete-multilattice")->pass);
}

TEST_CASE("a designated bottom must be the minimum") {
  Algebra a = builtin_algebra("rml7");
  a.bottom = a.poset.index_of("a");
  auto rep = verify_pocrim(a);
  CHECK(!rep.ok());
  CHECK(!rep.find("bottom-minimum")->pass);
}

TEST_CASE("properties P1..P7 hold in the catalog pocrims") {
  for (const char* name : {"rml7", "two", "chain-5-lukasiewicz", "chain-3-godel"}) {
    Algebra a = builtin_algebra(name);
    auto rep = check_properties(a);
    CHECK(rep.ok());
  }
}

TEST_CASE("specific property instances") {
  Algebra r = builtin_algebra("rml7");
  const Poset& p = r.poset;
  int a = p.index_of("a"), b = p.index_of("b"), c = p.index_of("c"), e = p.index_of("e"),
      bot = p.index_of("⊥"), top = p.index_of("⊤");
  // P3 instance: c <= e forces c -> e = top
  CHECK(p.leq(c, e));
  CHECK(r.imp_at(c, e) == top);
  // P5 instance: exchange of antecedents at the bottom
  CHECK(r.imp_at(a, r.imp_at(b, bot)) == top);
  CHECK(r.imp_at(b, r.imp_at(a, bot)) == top);
  CHECK(r.imp_at(a, r.imp_at(b, bot)) == r.imp_at(b, r.imp_at(a, bot)));
}

TEST_CASE("monotonicity stated directly") {
  Algebra r = builtin_algebra("rml7");
  const Poset& p = r.poset;
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      if (!p.leq(a, b)) continue;
      for (int c = 0; c < p.size(); ++c) {
        CHECK(p.leq(r.mul_at(a, c), r.mul_at(b, c)));
        CHECK(p.leq(r.imp_at(c, a), r.imp_at(c, b)));
        CHECK(p.leq(r.imp_at(b, c), r.imp_at(a, c)));
      }
    }
}

TEST_CASE("ordinal sums") {
  Algebra two = builtin_algebra("two");
  Algebra rml7 = builtin_algebra("rml7");

  Algebra g3 = ordinal_sum(two, two);
  CHECK(g3.poset.size() == 3);
  CHECK(verify_pocrim(g3).ok());
  CHECK(verify_rml(g3).ok());
  CHECK(!classify(g3.poset).is_pure);
  // stacked chain behaves like the three-element min chain
  CHECK(*g3.mul == *builtin_algebra("chain-3-godel").mul);

  struct Case {
    Algebra s;
    int size;
    bool pure;
  };
  Case cases[] = {{ordinal_sum(rml7, two), 8, true},
                  {ordinal_sum(two, rml7), 8, true},
                  {ordinal_sum(rml7, rml7), 13, true}};
  for (const auto& c : cases) {
    CHECK(c.s.poset.size() == c.size);
    CHECK(verify_pocrim(c.s).ok());
    CHECK(verify_rml(c.s).ok());
    CHECK(classify(c.s.poset).is_pure == c.pure);
    auto derived = derive_implication(c.s.poset, *c.s.mul);
    REQUIRE(derived);
    CHECK(*derived == *c.s.imp);
  }

  // the case-split rows: lower-part elements absorb against the upper part
  Algebra s = ordinal_sum(rml7, two);
  int x = s.poset.index_of("a.a");
  int y = s.poset.index_of("b.⊥");
  CHECK(s.mul_at(x, y) == x);
  CHECK(s.imp_at(x, y) == s.top);
  CHECK(s.mul_at(y, x) == x);
  CHECK(s.imp_at(y, x) == x);
}

TEST_CASE("ordinal sum rejects unverified input") {
  Algebra bad = builtin_algebra("rml7");
  OpTable t = *bad.mul;
  t.set(1, 2, bad.poset.index_of("⊤"));  // violates P1
  t.set(2, 1, bad.poset.index_of("⊤"));
  bad.mul = t;
  bad.imp.reset();
  CHECK_THROWS_AS(ordinal_sum(bad, builtin_algebra("two")), Error);
}

TEST_CASE("builtin catalog") {
  Algebra r = builtin_algebra("rml7");
  const Poset& p = r.poset;
  CHECK(r.mul_at(p.index_of("e"), p.index_of("e")) == p.index_of("a"));
  CHECK(r.mul_at(p.index_of("c"), p.index_of("e")) == p.index_of("⊥"));
  CHECK(r.imp_at(p.index_of("e"), p.index_of("c")) == p.index_of("e"));

  Algebra t1 = builtin_algebra("ml6-imp-table");
  CHECK(!t1.mul);
  REQUIRE(t1.imp);
  const Poset& q = t1.poset;
  CHECK(t1.imp_at(q.index_of("a"), q.index_of("⊥")) == q.index_of("b"));
  CHECK(t1.imp_at(q.index_of("b"), q.index_of("⊥")) == q.index_of("a"));
  CHECK(t1.imp_at(q.index_of("c"), q.index_of("d")) == q.index_of("d"));

  Algebra two = builtin_algebra("two");
  CHECK(two.poset.size() == 2);
  CHECK(two.mul_at(0, 0) == 0);
  CHECK(two.mul_at(1, 1) == 1);
  CHECK(two.imp_at(1, 0) == 0);
  CHECK(two.imp_at(0, 0) == 1);

  CHECK(verify_rml(builtin_algebra("chain-5-lukasiewicz")).ok());
  CHECK(verify_rml(builtin_algebra("chain-2-godel")).ok());
  CHECK_THROWS_AS(builtin_algebra("nope"), Error);
  CHECK_THROWS_AS(builtin_algebra("chain-x-godel"), Error);
  CHECK(builtin_kind("ml6-poset") == BuiltinKind::PosetOnly);
  CHECK(builtin_kind("chain-9-godel") == BuiltinKind::Pocrim);
}

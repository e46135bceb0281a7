#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "multilat/funcspace.hpp"
#include "multilat/reference.hpp"

using namespace multilat;

namespace {

const std::vector<std::string> kXY{"x1", "x2"};

ValuedFunction vf(const Algebra& a, std::initializer_list<const char*> values) {
  ValuedFunction f{kXY, {}};
  for (const char* v : values) f.values.push_back(a.poset.index_of(v));
  return f;
}

}  // namespace

TEST_CASE("pointwise application") {
  Algebra r = builtin_algebra("rml7");
  auto f1 = vf(r, {"e", "c"});
  auto f2 = vf(r, {"e", "b"});
  auto prod = pointwise(r, PointwiseOp::Mul, f1, f2);
  CHECK(prod == vf(r, {"a", "⊥"}));

  auto top = constant_function(kXY, r.top);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    ValuedFunction f{kXY, {static_cast<int>(rng() % 7), static_cast<int>(rng() % 7)}};
    CHECK(pointwise(r, PointwiseOp::Mul, f, top) == f);
    CHECK(pointwise(r, PointwiseOp::Imp, f, top) == top);
  }

  ValuedFunction other{{"y"}, {0}};
  CHECK_THROWS_AS(pointwise(r, PointwiseOp::Mul, f1, other), Error);
}

TEST_CASE("pointwise order") {
  Algebra r = builtin_algebra("rml7");
  CHECK(vf_leq(r.poset, vf(r, {"a", "b"}), vf(r, {"c", "d"})));
  CHECK(!vf_leq(r.poset, vf(r, {"a", "b"}), vf(r, {"c", "a"})));
  CHECK(vf_leq(r.poset, vf(r, {"a", "b"}), vf(r, {"a", "b"})));
}

TEST_CASE("rank round trip") {
  Algebra r = builtin_algebra("rml7");
  CHECK(function_count(7, 2) == 49);
  for (std::uint64_t k = 0; k < 49; ++k)
    CHECK(rank_of(unrank(k, 7, kXY), 7) == k);
}

TEST_CASE("choice bounds on crossing pairs") {
  Algebra r = builtin_algebra("rml7");
  auto res = choice_bounds(r.poset, {vf(r, {"a", "b"}), vf(r, {"b", "a"})}, MSide::Sup);
  CHECK(!res.truncated);
  REQUIRE(res.functions.size() == 4);
  std::vector<ValuedFunction> expected{vf(r, {"c", "c"}), vf(r, {"c", "d"}), vf(r, {"d", "c"}),
                                       vf(r, {"d", "d"})};
  std::sort(expected.begin(), expected.end());
  CHECK(res.functions == expected);

  for (MSide side : {MSide::Sup, MSide::Inf}) {
    auto single = choice_bounds(r.poset, {vf(r, {"a", "b"})}, side);
    CHECK(single.functions == std::vector<ValuedFunction>{vf(r, {"a", "b"})});
  }

  auto joined = choice_bounds(r.poset, {vf(r, {"c", "c"}), vf(r, {"d", "d"})}, MSide::Sup);
  CHECK(joined.functions == std::vector<ValuedFunction>{vf(r, {"e", "e"})});
}

TEST_CASE("choice bounds cap") {
  Algebra r = builtin_algebra("rml7");
  auto res = choice_bounds(r.poset, {vf(r, {"a", "b"}), vf(r, {"b", "a"})}, MSide::Sup, 2);
  CHECK(res.truncated);
  CHECK(res.functions.size() == 2);
}

TEST_CASE("choice bounds characterize minimal bounds exactly") {
  Algebra r = builtin_algebra("rml7");
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    std::vector<ValuedFunction> fs;
    int count = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i < count; ++i)
      fs.push_back({kXY, {static_cast<int>(rng() % 7), static_cast<int>(rng() % 7)}});
    for (MSide side : {MSide::Sup, MSide::Inf})
      CHECK(choice_bounds(r.poset, fs, side).functions ==
            reference_multi_bounds(r.poset, fs, side));
  }
  Algebra two = builtin_algebra("two");
  const std::vector<std::string> xyz{"x", "y", "z"};
  for (int t = 0; t < 40; ++t) {
    std::vector<ValuedFunction> fs;
    for (int i = 0; i < 2; ++i)
      fs.push_back({xyz, {static_cast<int>(rng() % 2), static_cast<int>(rng() % 2),
                          static_cast<int>(rng() % 2)}});
    for (MSide side : {MSide::Sup, MSide::Inf})
      CHECK(choice_bounds(two.poset, fs, side).functions ==
            reference_multi_bounds(two.poset, fs, side));
  }
}

TEST_CASE("the lifted algebra is a complete residuated multilattice") {
  Algebra r = builtin_algebra("rml7");

  VerifyMode mode;
  SUBCASE("degenerate singleton domain") {
    auto rep = verify_pointwise_pocrim(r, {"x"}, mode);
    CHECK(rep.ok());
  }
  SUBCASE("two-point domain, 49 functions") {
    auto rep = verify_pointwise_pocrim(r, kXY, mode);
    CHECK(rep.ok());
  }
  SUBCASE("boolean cube") {
    auto rep = verify_pointwise_pocrim(builtin_algebra("two"), {"x", "y", "z"}, mode);
    CHECK(rep.ok());
  }
  SUBCASE("sampled mode on a larger domain") {
    VerifyMode sampled;
    sampled.exhaustive = false;
    sampled.samples = 300;
    sampled.seed = 5;
    auto rep = verify_pointwise_pocrim(r, {"x", "y", "z"}, sampled);
    CHECK(rep.ok());
  }
  SUBCASE("budget guard") {
    CHECK_THROWS_AS(verify_pointwise_pocrim(r, {"a", "b", "c", "d"}, mode), Error);
  }
}

TEST_CASE("lifted adjointness spot check via the explicit product algebra") {
  Algebra two = builtin_algebra("two");
  Algebra cube = pointwise_algebra(two, {"x", "y", "z"});
  CHECK(cube.poset.size() == 8);
  CHECK(verify_pocrim(cube).ok());
  CHECK(classify(cube.poset).is_lattice);
}

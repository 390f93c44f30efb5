#include "oblivcrn/dickson.hpp"

#include <stdexcept>

#include "doctest.h"
#include "oblivcrn/builtins.hpp"

using namespace obliv;

namespace {

using V = std::vector<long long>;

const PointFn& builtin(const std::string& name) {
  return builtin_function(name).fn;
}

}  // namespace

TEST_CASE("max admits a strictly growing increment family") {
  auto w = dickson_search(builtin("max"), 2, 5);
  REQUIRE(w.has_value());
  CHECK(w->base == V{0, 0});
  CHECK(w->direction == V{0, 1});
  CHECK(w->delta_direction == V{1, 0});
  CHECK(w->family_size == 10);
  CHECK(w->a1 == V{0, 0});
  CHECK(w->a2 == V{0, 1});
  CHECK(w->delta == V{2, 0});
  // max(2,0) - max(0,0) = 2 but max(2,1) - max(0,1) = 1.
  CHECK(w->lhs == 2);
  CHECK(w->rhs == 1);
}

TEST_CASE("the diagonal discount also rules out the eventual-min form") {
  auto w = dickson_search(builtin("depressed-strip"), 2, 5);
  REQUIRE(w.has_value());
  CHECK(w->base == V{0, 1});
  CHECK(w->direction == V{0, 1});
  CHECK(w->delta_direction == V{1, 0});
  CHECK(w->family_size == 10);
  CHECK(w->a1 == V{0, 1});
  CHECK(w->a2 == V{0, 2});
  CHECK(w->delta == V{2, 0});
  CHECK(w->lhs == 2);
  CHECK(w->rhs == 1);
}

TEST_CASE("eventual-min functions yield no witness family") {
  CHECK(!dickson_search(builtin("min"), 2, 5).has_value());
  CHECK(!dickson_search(builtin("roof"), 2, 5).has_value());
  CHECK(!dickson_search(builtin("2x"), 1, 5).has_value());
  CHECK(!dickson_search(builtin("floor3x2"), 1, 5).has_value());
  CHECK(!dickson_search(builtin("min1x"), 1, 5).has_value());
}

TEST_CASE("curvature along a single ray is never taken as evidence") {
  // f(x) = (21x - x^2) / 2 is integer, nondecreasing on [0,10], and its
  // increments strictly shrink as the base point grows.  Probing a family
  // along its own line only sees this one-dimensional curvature, which
  // eventually-periodic functions also show on a finite box, so the search
  // requires independent family and probe directions.  In dimension 1 that
  // leaves nothing to report.
  PointFn concave = [](const V& x) { return (21 * x[0] - x[0] * x[0]) / 2; };
  CHECK(!dickson_search(concave, 1, 5).has_value());

  // The same shape stretched along the diagonal has genuinely decreasing
  // increments across independent directions and is reported.
  PointFn concave2 = [](const V& x) {
    const long long s = x[0] + x[1];
    return (41 * s - s * s) / 2;
  };
  auto w = dickson_search(concave2, 2, 5);
  REQUIRE(w.has_value());
  CHECK(w->lhs > w->rhs);
}

TEST_CASE("shrinking the box shrinks the family but keeps the witness") {
  auto w = dickson_search(builtin("max"), 2, 2);
  REQUIRE(w.has_value());
  CHECK(w->base == V{0, 0});
  CHECK(w->family_size == 4);
}

TEST_CASE("families shorter than the minimum are not reported") {
  // No family of 11 members fits in the searched box at bound 5.
  CHECK(!dickson_search(builtin("max"), 2, 5, 11).has_value());
}

TEST_CASE("search arguments are validated") {
  PointFn zero = [](const V&) { return 0LL; };
  CHECK_THROWS_AS(dickson_search(zero, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(dickson_search(zero, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(dickson_search(zero, 1, 5, 1), std::invalid_argument);
}

TEST_CASE("witnesses report both increments in readable form") {
  auto w = dickson_search(builtin("max"), 2, 5);
  REQUIRE(w.has_value());
  CHECK(witness_text(*w) ==
        "witness family: base (0,0), direction (0,1), probe direction (1,0), "
        "10 members; at a1=(0,0), a2=(0,1), delta=(2,0): "
        "f(a1+delta)-f(a1) = 2 > 1 = f(a2+delta)-f(a2)");
}

TEST_CASE("the search is deterministic") {
  auto first = dickson_search(builtin("depressed-strip"), 2, 4);
  auto second = dickson_search(builtin("depressed-strip"), 2, 4);
  REQUIRE(first.has_value());
  REQUIRE(second.has_value());
  CHECK(first->base == second->base);
  CHECK(first->family_size == second->family_size);
}

TEST_CASE("unknown builtin names list the catalog") {
  CHECK_THROWS_WITH_AS(builtin_function("nope"),
                       doctest::Contains("known: 2x, depressed-strip"),
                       std::invalid_argument);
}

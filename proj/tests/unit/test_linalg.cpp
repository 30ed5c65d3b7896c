#include "doctest.h"
#include "supervogan/linalg.hpp"

using namespace supervogan;

TEST_CASE("exact kernel and solve") {
  // rows of [[1,2,3],[2,4,6]] have a 2-dimensional kernel
  RatMat m = {{rat(1), rat(2), rat(3)}, {rat(2), rat(4), rat(6)}};
  CHECK(rank(m) == 1);
  const auto k = kernel_basis(m);
  REQUIRE(k.size() == 2);
  for (const auto& v : k) {
    Rat acc(0);
    for (size_t i = 0; i < 3; ++i) acc += m[0][i] * v[i];
    CHECK(acc == 0);
  }

  RatMat a = {{rat(2), rat(1)}, {rat(1), rat(3)}};
  const auto x = solve(a, {rat(5), rat(10)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == rat(1));
  CHECK((*x)[1] == rat(3));

  RatMat inconsistent = {{rat(1), rat(1)}, {rat(2), rat(2)}};
  CHECK_FALSE(solve(inconsistent, {rat(1), rat(3)}).has_value());
}

TEST_CASE("primitive integer vector") {
  CHECK(primitive_integer_vector({rat(1, 2), rat(1), rat(1, 2)}) == std::vector<long>{1, 2, 1});
  CHECK(primitive_integer_vector({rat(-2), rat(-4)}) == std::vector<long>{1, 2});
  CHECK(primitive_integer_vector({rat(0), rat(3), rat(-6)}) == std::vector<long>{0, 1, -2});
  CHECK_THROWS_AS(primitive_integer_vector({rat(0), rat(0)}), std::invalid_argument);
}

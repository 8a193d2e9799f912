#include "doctest.h"
#include "ncconic/elements.hpp"
#include "ncconic/parse.hpp"

using namespace ncconic;

namespace {
GradedAlgebra load(const std::string& text, int d = 6) { return GradedAlgebra(parse_presentation(text).presentation, d); }
const char* skew = "field: Q\ngens: x y z\nrel: x*y + y*x\nrel: y*z + z*y\nrel: z*x + x*z\n";
const char* skew_dual = "field: Q\ngens: x y z\nrel: x*y - y*x\nrel: y*z - z*y\nrel: z*x - x*z\nrel: y^2\nrel: z^2\n";
}  // namespace

TEST_CASE("center of the skew polynomial ring in degree 2") {
  auto a = load(skew);
  auto z = center_degree(a, 2);
  CHECK(z.size() == 3);
  auto amb = a.ambient();
  for (auto t : {"x^2", "y^2", "z^2"}) {
    NcPoly w = a.reduce(parse_poly(t, amb));
    for (std::size_t i = 0; i < 3; ++i) CHECK(a.mul(w, a.gen(i)) == a.mul(a.gen(i), w));
  }
  CHECK(center_degree(a, 1).empty());
}

TEST_CASE("generators of the skew ring are normal but not central") {
  auto a = load(skew);
  auto c = normalize_check(a, a.gen(0));
  CHECK(!c.central);
  CHECK(c.nu(0, 0) == Scalar(1));
  CHECK(c.nu(1, 1) == Scalar(-1));
  CHECK(c.nu(2, 2) == Scalar(-1));
  CHECK(regularity_check(a, c).verdict == Verdict::Yes);
  CHECK(!try_normalize(a, a.gen(0) + a.gen(1)));
}

TEST_CASE("degree one search on a dual conic") {
  auto a = load(skew_dual);
  CHECK(a.hilbert()[2] == 4);
  NormalSearch ns = find_normal_degree1(a);
  REQUIRE(!ns.regular.empty());
  CHECK(ns.regular.front().central);
  for (auto& c : ns.regular) {
    auto again = normalize_check(a, c.w);
    CHECK(again.central == c.central);
    CHECK(regularity_check(a, again).verdict == Verdict::Yes);
  }
  // y and z square to zero, so they are not regular
  auto y = normalize_check(a, a.gen(1));
  CHECK(regularity_check(a, y).verdict == Verdict::No);
}

TEST_CASE("regular normal sequence in a commutative ring") {
  auto a = load("field: Q\ngens: x y z\nrel: x*y - y*x\nrel: y*z - z*y\nrel: z*x - x*z\n");
  auto amb = a.ambient();
  auto ok = regular_normal_sequence(a, {parse_poly("x^2", amb), parse_poly("y^2", amb), parse_poly("z^2", amb)});
  CHECK(ok.verdict == Verdict::Yes);
  auto bad = regular_normal_sequence(a, {parse_poly("x*y", amb), parse_poly("x*z", amb)});
  CHECK(bad.verdict == Verdict::No);
}

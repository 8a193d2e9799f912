#include "doctest.h"
#include "ncconic/geometry.hpp"
#include "ncconic/parse.hpp"

using namespace ncconic;

namespace {
std::vector<NcPoly> rels(const AmbientPtr& amb, std::initializer_list<const char*> texts) {
  std::vector<NcPoly> out;
  for (auto t : texts) out.push_back(parse_poly(t, amb));
  return out;
}
Vec pt(long a, long b, long c) { return {Scalar(a), Scalar(b), Scalar(c)}; }
}  // namespace

TEST_CASE("skew plane modulo x^2") {
  auto amb = make_ambient({"x", "y", "z"});
  auto r = rels(amb, {"y*z + z*y", "z*x + x*z", "x*y + y*x", "x^2"});
  std::vector<std::string> names = {"x", "y", "z"};
  FormMatrix k = k_matrix(r);
  const char* want[3][4] = {{"0", "z", "y", "x"}, {"z", "0", "x", "0"}, {"y", "x", "0", "0"}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) CHECK(k[i][j].str(names) == want[i][j]);
  auto m = minors_ideal(k);
  REQUIRE(m.size() == 4);
  CHECK(m[0].str(names) == "2*x*y*z");
  CHECK(m[1].str(names) == "x^2*z");
  CHECK(m[2].str(names) == "-x^2*y");
  CHECK(m[3].str(names) == "-x^3");
  CHECK(scheme_inside(m, CommPoly::var(3, 0)));
  CHECK(!scheme_inside(m, CommPoly::var(3, 1)));
  for (auto [b, c] : {std::pair{1L, 1L}, {1L, 0L}, {0L, 1L}, {2L, -3L}}) {
    auto s = sigma_at(r, pt(0, b, c));
    REQUIRE(s);
    CHECK(same_point(*s, pt(0, b, -c)));
  }
  CHECK_THROWS_AS(sigma_at(r, pt(1, 0, 0)), Error);
  CHECK(!point_scheme(r, {}).finite);
}

TEST_CASE("skew plane modulo the sum of squares has six points") {
  auto amb = make_ambient({"x", "y", "z"});
  auto r = rels(amb, {"y*z + z*y", "z*x + x*z", "x*y + y*x", "x^2 + y^2 + z^2"});
  PointScheme s = point_scheme(r, {});
  REQUIRE(s.finite);
  CHECK(s.points.size() == 6);
  CHECK(cycle_type(s.sigma) == std::vector<std::size_t>{2, 2, 2});
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    auto q = sigma_at(r, s.points[i]);
    REQUIRE(q);
    CHECK(same_point(*q, s.points[s.sigma[i]]));
    // sigma^2 keeps every point on the same line component
    CHECK(s.sigma[s.sigma[i]] == i);
  }
}

TEST_CASE("cycle types and collinear triples") {
  CHECK(cycle_type({1, 0, 2}) == std::vector<std::size_t>{1, 2});
  CHECK(cycle_type({1, 2, 0, 4, 3}) == std::vector<std::size_t>{2, 3});
  std::vector<Vec> pts = {pt(1, 0, 0), pt(0, 1, 0), pt(1, 1, 0), pt(0, 0, 1)};
  CHECK(rich_lines(pts) == 1);
  CHECK(rich_line_sets(pts) == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
  CHECK(same_point(pt(2, 4, 6), pt(1, 2, 3)));
  CHECK(normalize_point(pt(0, 2, 4)) == pt(0, 1, 2));
}

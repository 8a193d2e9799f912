#include "doctest.h"
#include "ncconic/commpoly.hpp"

using namespace ncconic;

TEST_CASE("univariate roots over the supported fields") {
  UPoly p = {Scalar(-2), Scalar(0), Scalar(1)};  // t^2 - 2
  auto q = roots_in_field(p, FieldSpec::rationals());
  CHECK(q.roots.empty());
  CHECK(q.residue);
  auto s = roots_in_field(p, FieldSpec::quadratic(2));
  CHECK(s.roots.size() == 2);
  CHECK(!s.residue);
  UPoly c = {Scalar(6), Scalar(-5), Scalar(1)};  // (t-2)(t-3)
  CHECK(roots_in_field(c, {}).roots.size() == 2);
  UPoly g = {Scalar(1), Scalar(0), Scalar(1)};   // t^2 + 1
  auto gi = roots_in_field(g, FieldSpec::quadratic(-1));
  CHECK(gi.roots.size() == 2);
  UPoly m = {Scalar(0), Scalar(0), Scalar(0), Scalar(1)};  // t^3
  auto mr = roots_in_field(m, {});
  CHECK(mr.roots == std::vector<Scalar>{Scalar(0)});
}

TEST_CASE("groebner basis and affine solving") {
  auto x = CommPoly::var(2, 0), y = CommPoly::var(2, 1);
  auto one = CommPoly::constant(2, 1);
  // circle meets line in two rational points
  std::vector<CommPoly> sys = {x * x + y * y - Scalar(25) * one, x - y - one};
  auto r = eliminate_small(sys, {});
  CHECK(r.complete);
  CHECK(r.points.size() == 2);
  for (auto& p : r.points)
    for (auto& f : sys) CHECK(f.eval(p).is_zero());
  auto gb = groebner_lex({x * y - one, x * x - one, y - x});
  CHECK(gb.size() == 2);
  CHECK(groebner_lex({x - one, x}).front().is_constant());
  auto pd = eliminate_small({x * y}, {});
  CHECK(!pd.complete);
}

TEST_CASE("projective points of a pencil") {
  auto x = CommPoly::var(3, 0), y = CommPoly::var(3, 1), z = CommPoly::var(3, 2);
  auto r = projective_points({x * y, z * (x - y)}, 3, {});
  // (0:0:1), (0:1:0)... x*y = 0 and z(x-y)=0: points (1:0:0),(0:1:0),(0:0:1)
  CHECK(r.complete);
  CHECK(r.points.size() == 3);
}

TEST_CASE("symbolic determinant") {
  auto a = CommPoly::var(2, 0), b = CommPoly::var(2, 1);
  CommPoly zero(2);
  auto d = det_poly({{a, b}, {b, a}});
  CHECK(d == a * a - b * b);
  CHECK(divides(a - b, d));
  CHECK(!divides(a + b + CommPoly::constant(2, 1), d));
}

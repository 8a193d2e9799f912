#include "doctest.h"
#include "ncconic/homog.hpp"
#include "ncconic/parse.hpp"
#include "ncconic/quadratic.hpp"
#include "random.hpp"

using namespace ncconic;

namespace {
struct Plane {
  AmbientPtr amb = make_ambient({"x", "y"});
  Presentation s{amb, {parse_poly("x*y - y*x", amb)}, "k[x,y]"};
  NcPoly p(const std::string& t) const { return parse_poly(t, amb); }
};
}  // namespace

TEST_CASE("dehomogenize after homogenize is the identity") {
  std::mt19937 rng(21);
  auto amb = make_ambient({"x", "y"});
  for (int k = 0; k < 50; ++k) {
    NcPoly f = gen::poly(rng, amb, 0, 3, 5);
    if (f.is_zero()) continue;
    NcPoly h = homogenize_poly(f, "z");
    CHECK(h.is_homogeneous());
    CHECK(h.degree() == f.degree());
    CHECK(dehomogenize_poly(h, 2).str() == f.str());
  }
}

TEST_CASE("homogenize after dehomogenize restores right padded forms") {
  std::mt19937 rng(22);
  auto amb = make_ambient({"x", "y", "z"});
  std::uniform_int_distribution<int> pick(0, 1);
  for (int k = 0; k < 50; ++k) {
    int d = 1 + k % 3;
    NcPoly f(amb);
    Word top(d);
    for (auto& l : top) l = Letter(pick(rng));
    f.add_term(top, 1);
    for (int t = 0; t < 3; ++t) {
      int keep = std::uniform_int_distribution<int>(0, d)(rng);
      Word w(d, Letter(2));
      for (int i = 0; i < keep; ++i) w[i] = Letter(pick(rng));
      f.add_term(w, gen::small(rng, 1, 3));
    }
    NcPoly back = homogenize_poly(dehomogenize_poly(f, 2), amb);
    CHECK(back == f);
  }
}

TEST_CASE("homogenization and top forms of a sequence") {
  Plane k;
  std::vector<NcPoly> f = {k.p("x^2 - y"), k.p("x^2 + y")};
  auto amb_z = extend_ambient(k.amb, "z");
  CHECK(homogenize_poly(f[0], amb_z) == parse_poly("x^2 - y*z", amb_z));
  CHECK(homogenize_poly(f[1], amb_z) == parse_poly("x^2 + y*z", amb_z));
  auto top = wild_homogenize_seq(f);
  CHECK(top[0] == k.p("x^2"));
  CHECK(top[1] == k.p("x^2"));
}

TEST_CASE("basis change on a sequence") {
  Plane k;
  Matrix alpha(2, 2);
  alpha(0, 0) = 1, alpha(0, 1) = 1, alpha(1, 0) = 1, alpha(1, 1) = -1;
  auto out = apply_st({k.p("x^2"), k.p("y^2")}, alpha, Matrix::identity(2));
  CHECK(out[0] == k.p("x^2 + y^2"));
  CHECK(out[1] == k.p("x^2 - y^2"));
}

TEST_CASE("regular sequences that are not strongly regular") {
  Plane k;
  auto a = is_strongly_regular_normal(k.s, {k.p("x^2 - y"), k.p("x^2 + y")});
  CHECK(a.verdict == Verdict::No);
  auto b = is_strongly_regular_normal(k.s, {k.p("x^2 - y"), k.p("x*y")});
  CHECK(b.verdict == Verdict::No);
  auto c = is_strongly_regular_normal(k.s, {k.p("x^2 - 1"), k.p("y^2 - 1")});
  CHECK(c.verdict == Verdict::Yes);
}

TEST_CASE("strongly regular pencils satisfy Bezout") {
  Plane k;
  for (auto [f, g] : {std::pair{"x^2 - 1", "y^2 - 1"}, {"x^2", "y^2"}, {"x^2 - y", "y^2 - x"}, {"x*y - 1", "x^2 - y^2"}}) {
    std::vector<NcPoly> seq = {k.p(f), k.p(g)};
    CAPTURE(f);
    REQUIRE(is_strongly_regular_normal(k.s, seq).verdict == Verdict::Yes);
    std::vector<NcPoly> rels = k.s.relations;
    rels.insert(rels.end(), seq.begin(), seq.end());
    CHECK(from_presentation(k.amb, rels).dim() == 4);
  }
}

TEST_CASE("homogenized presentation dehomogenizes back") {
  Plane k;
  std::vector<NcPoly> f = {k.p("x^2 - 1"), k.p("y^2 - x")};
  Presentation h = homogenize_presentation(k.s, f);
  CHECK(h.ngens() == 3);
  CHECK(h.is_homogeneous());
  Presentation back = dehomogenize_presentation(h, 2);
  std::vector<NcPoly> want = k.s.relations;
  want.insert(want.end(), f.begin(), f.end());
  auto a = from_presentation(back.ambient, back.relations);
  auto b = from_presentation(k.amb, want);
  CHECK(a.dim() == b.dim());
  CHECK(invariants(a) == invariants(b));
}

TEST_CASE("twist by an automorphism") {
  auto amb = make_ambient({"x", "y"});
  std::vector<NcPoly> rel = {parse_poly("x*y - y*x", amb)};
  Matrix phi(2, 2);
  phi(0, 0) = 1, phi(1, 1) = -1;
  auto tw = zhang_twist(rel, phi);
  CHECK(relation_span_equal(Presentation{amb, tw, ""}, Presentation{amb, {parse_poly("x*y + y*x", amb)}, ""}));
}

#include "doctest.h"
#include "ncconic/galgebra.hpp"
#include "ncconic/parse.hpp"
#include "ncconic/quadratic.hpp"
#include "oracle.hpp"
#include "random.hpp"

using namespace ncconic;

namespace {
Presentation random_quadratic(std::mt19937& rng, const AmbientPtr& amb, int count) {
  Presentation p{amb, {}, ""};
  for (int i = 0; i < count; ++i) {
    NcPoly r = gen::poly(rng, amb, 2, 2, 3);
    if (!r.is_zero()) p.relations.push_back(r);
  }
  return p;
}

// <x_i x_j, x_k x_l> = delta
Scalar pairing(const NcPoly& a, const NcPoly& b) {
  Scalar s;
  for (auto& [w, c] : a.terms()) s += c * b.coeff(w);
  return s;
}
}  // namespace

TEST_CASE("quadratic dual is the orthogonal complement") {
  std::mt19937 rng(11);
  auto amb = make_ambient({"x", "y", "z"});
  for (int k = 0; k < 30; ++k) {
    Presentation p = random_quadratic(rng, amb, 1 + k % 8);
    Presentation d = quadratic_dual(p);
    CHECK(relation_span_dim(p) + relation_span_dim(d) == 9);
    for (auto& r : p.relations)
      for (auto& s : d.relations) CHECK(pairing(r, s).is_zero());
  }
}

TEST_CASE("quadratic dual is an involution") {
  std::mt19937 rng(12);
  for (std::size_t n : {2u, 3u}) {
    auto amb = make_ambient(n == 2 ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x", "y", "z"});
    for (int k = 0; k < 30; ++k) {
      Presentation p = random_quadratic(rng, amb, 1 + k % int(n * n - 1));
      CHECK(relation_span_equal(quadratic_dual(quadratic_dual(p)), p));
    }
  }
}

TEST_CASE("dual of the skew conic") {
  auto f = parse_presentation("field: Q\ngens: x y z\nrel: x*y + y*x\nrel: y*z + z*y\nrel: z*x + x*z\nrel: x^2\n");
  Presentation d = quadratic_dual(f.presentation);
  auto expect = parse_presentation(
      "field: Q\ngens: x y z\nrel: x*y - y*x\nrel: y*z - z*y\nrel: z*x - x*z\nrel: y^2\nrel: z^2\n");
  CHECK(relation_span_dim(d) == 5);
  CHECK(relation_span_equal(d, expect.presentation));
  GradedAlgebra a(f.presentation, 6), ad(d, 6);
  CHECK(a.hilbert() == HilbertPrefix{1, 3, 5, 7, 9, 11, 13});
  CHECK(std::vector<std::size_t>(ad.hilbert().begin(), ad.hilbert().begin() + 5) ==
        std::vector<std::size_t>{1, 3, 4, 4, 4});
  for (int d2 = 0; d2 <= 4; ++d2)
    CHECK(ad.dim(d2) == oracle::quotient_dim(d.ambient, d.relations, d2));
  CHECK(koszul_series_check(a.hilbert(), ad.hilbert()));
}

TEST_CASE("parse print parse is stable") {
  std::mt19937 rng(13);
  for (auto field : {FieldSpec::rationals(), FieldSpec::quadratic(-1), FieldSpec::quadratic(3)}) {
    auto amb = make_ambient({"x", "y", "z"}, field);
    for (int k = 0; k < 20; ++k) {
      Presentation p = random_quadratic(rng, amb, 4);
      if (!field.is_rational())
        for (auto& r : p.relations) r += Scalar(1, 2, field.d) * NcPoly::gen(amb, 0) * NcPoly::gen(amb, 2);
      std::string text = print_presentation(p);
      PresentationFile q = parse_presentation(text);
      CHECK(*q.presentation.ambient == *p.ambient);
      REQUIRE(q.presentation.relations.size() == p.relations.size());
      for (std::size_t i = 0; i < p.relations.size(); ++i) CHECK(q.presentation.relations[i] == p.relations[i]);
      CHECK(print_presentation(q.presentation) == text);
    }
  }
}

TEST_CASE("parser grammar") {
  auto amb = make_ambient({"x", "y", "z"});
  CHECK(parse_poly("x^2 + y(x+z)", amb) == parse_poly("x*x + y*x + y*z", amb));
  CHECK_THROWS_AS(parse_poly("x*w", amb), Error);
  CHECK_THROWS_AS(parse_poly("x*(y", amb), Error);
  auto r3 = make_ambient({"y"}, FieldSpec::quadratic(3));
  NcPoly p = parse_poly("(2/sqrt(3))*y^2", r3);
  CHECK(p.coeff(Word{0, 0}) == Scalar(2) / Scalar::sqrt_of(3));
}

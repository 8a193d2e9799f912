#include "doctest.h"
#include "ncconic/findim.hpp"
#include "ncconic/parse.hpp"
#include "random.hpp"

using namespace ncconic;

namespace {
AmbientPtr xy(FieldSpec f = {}) { return make_ambient({"x", "y"}, f); }

FiniteAlgebra algebra(const std::string& rels, FieldSpec f = {}) {
  auto amb = xy(f);
  std::vector<NcPoly> r;
  for (auto& t : split(rels, ';')) r.push_back(parse_poly(t, amb));
  return from_presentation(amb, r);
}
}  // namespace

TEST_CASE("reference algebras are associative unital Frobenius and self-classify") {
  CHECK(reference_algebras().size() == 11);
  for (auto& ref : reference_algebras()) {
    CAPTURE(to_string(ref.cls));
    CHECK(ref.algebra.dim() == 4);
    CHECK(ref.algebra.is_associative());
    CHECK(ref.algebra.is_unital());
    CHECK(is_frobenius(ref.algebra).frobenius);
    CHECK(classify(ref.algebra).cls == ref.cls);
  }
}

TEST_CASE("classification is invariant under basis changes") {
  std::mt19937 rng(2024);
  for (auto& ref : reference_algebras()) {
    CAPTURE(to_string(ref.cls));
    Classification base = classify(ref.algebra);
    for (int k = 0; k < 20; ++k) {
      FiniteAlgebra b = ref.algebra.change_basis(gen::invertible(rng, 4));
      CHECK(b.is_associative());
      CHECK(invariants(b) == invariants(ref.algebra));
      Classification c = classify(b);
      CHECK(c.cls == ref.cls);
      if (ref.cls == FClass::E) CHECK(c.mu_sum == base.mu_sum);
    }
  }
}

TEST_CASE("quantum plane quotient reports the lambda pair") {
  for (long l : {2, 3}) {
    auto e = algebra("x*y - " + std::to_string(l) + "*y*x; x^2; y^2");
    Classification c = classify(e);
    CHECK(c.cls == FClass::E);
    REQUIRE(c.mu);
    Scalar lam(l);
    bool pair = (c.mu->first == lam && c.mu->second == lam.inverse()) ||
                (c.mu->first == lam.inverse() && c.mu->second == lam);
    CHECK(pair);
    CHECK(c.mu_sum == lam + lam.inverse());
  }
}

TEST_CASE("truncated polynomial ring is three dimensional and Frobenius") {
  auto e = algebra("x^2 - y; x*y; x*y - y*x");
  CHECK(e.dim() == 3);
  CHECK(e.is_associative());
  CHECK(is_frobenius(e).frobenius);
}

TEST_CASE("commutative complete intersections of two conics have dimension four") {
  for (auto rels : {"x*y - y*x; x^2 - 1; y^2 - 1", "x*y - y*x; x^2; y^2", "x*y - y*x; x^2 + x*y; y^2 - x"}) {
    auto e = algebra(rels);
    CHECK(e.dim() == 4);
    CHECK(e.is_associative());
  }
}

TEST_CASE("non Frobenius algebra is rejected") {
  // k[x,y]/(x,y)^2 has a two dimensional socle.
  auto e = algebra("x*y - y*x; x^2; y^2; x*y");
  CHECK(e.dim() == 3);
  CHECK(!is_frobenius(e).frobenius);
}

TEST_CASE("radical of the dual numbers squared") {
  auto e = algebra("x*y - y*x; x^2; y^2");
  auto inv = invariants(e);
  CHECK(radical(e).size() == 3);
  CHECK(inv == reference_signature(FClass::U2V2));
}

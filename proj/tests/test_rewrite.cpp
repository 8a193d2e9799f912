#include <algorithm>

#include "doctest.h"
#include "ncconic/galgebra.hpp"
#include "oracle.hpp"

using namespace ncconic;

namespace {
NcPoly g(const AmbientPtr& a, int i) { return NcPoly::gen(a, i); }
}  // namespace

TEST_CASE("words print and order") {
  auto a = make_ambient({"x", "y", "z"});
  NcPoly p = g(a, 0) * g(a, 1) - g(a, 1) * g(a, 0);
  CHECK(p.leading_word() == Word{1, 0});
  CHECK(p.str() == "-y*x + x*y");
  CHECK((g(a, 0) * g(a, 0) * g(a, 2)).str() == "x^2*z");
  CHECK(words_of_degree(3, 2).size() == 9);
}

TEST_CASE("type T1 family has the PBW basis in degree 3") {
  auto a = make_ambient({"x", "y", "z"});
  auto x = g(a, 0), y = g(a, 1), z = g(a, 2);
  for (auto [al, be, ga] : {std::tuple{1, 2, 3}, {0, 0, 1}, {1, 1, 0}}) {
    Scalar A(al), B(be), G(ga);
    std::vector<NcPoly> rel = {x * y - y * x, x * z - z * x - B * (x * x) + (B + G) * (y * x),
                               y * z - z * y - A * (y * y) + (A + G) * (x * y)};
    RewriteSystem rs = RewriteSystem::complete(a, rel, 4);
    std::vector<Word> lhs;
    for (auto& r : rs.rules()) lhs.push_back(r.lhs);
    std::sort(lhs.begin(), lhs.end());
    CHECK(lhs == std::vector<Word>{{1, 0}, {2, 0}, {2, 1}});
    auto b = rs.graded_basis(3);
    std::vector<std::string> s;
    for (auto& w : b) s.push_back(word_str(*a, w));
    CHECK(s == std::vector<std::string>{"x^3", "x^2*y", "x^2*z", "x*y^2", "x*y*z", "x*z^2", "y^3",
                                        "y^2*z", "y*z^2", "z^3"});
  }
}

TEST_CASE("hilbert prefixes agree with direct rank computation") {
  auto a = make_ambient({"x", "y", "z"});
  auto x = g(a, 0), y = g(a, 1), z = g(a, 2);
  std::vector<std::vector<NcPoly>> cases = {
      {x * y + y * x, y * z + z * y, z * x + x * z, x * x},
      {x * y - y * x, y * z - z * y, z * x - x * z, y * y, z * z},
      {y * z + z * y + x * x, z * x + x * z + y * y, x * y + y * x},
      {x * y - Scalar(2) * y * x, y * z - z * y - y * y, x * x + y * z},
  };
  for (auto& rel : cases) {
    GradedAlgebra A(Presentation{a, rel, ""}, 5);
    for (int d = 0; d <= 5; ++d) CHECK(A.dim(d) == oracle::quotient_dim(a, rel, d));
  }
}

TEST_CASE("normal form is idempotent and multiplicative") {
  auto a = make_ambient({"x", "y", "z"});
  auto x = g(a, 0), y = g(a, 1), z = g(a, 2);
  GradedAlgebra A(Presentation{a, {x * y + y * x, y * z - z * y, z * x - x * z, x * x - y * y, x * x - z * z}, ""}, 6);
  std::vector<NcPoly> el = {x + y, y * z - x, z * z + Scalar(3) * x * y, x * y * z, y - Scalar(2) * z};
  for (auto& p : el) {
    CHECK(A.reduce(A.reduce(p)) == A.reduce(p));
    for (auto& q : el) CHECK(A.reduce(A.reduce(p) * A.reduce(q)) == A.reduce(p * q));
  }
  CHECK_THROWS_AS(A.reduce(x.pow(7)), Error);
}

TEST_CASE("permuted precedence gives the same hilbert prefix") {
  auto a = make_ambient({"x", "y", "z"});
  auto x = g(a, 0), y = g(a, 1), z = g(a, 2);
  std::vector<NcPoly> rel = {y * z + z * y + x * x, z * x + x * z + y * y, x * y + y * x};
  GradedAlgebra A(Presentation{a, rel, ""}, 5);
  GradedAlgebra B(Presentation{a, rel, ""}, 5, MonomialOrder({2, 0, 1}));
  CHECK(A.hilbert() == B.hilbert());
}

#include "doctest.h"
#include "ncconic/linalg.hpp"

using namespace ncconic;

TEST_CASE("rational arithmetic") {
  Scalar a = Scalar::from_string("2/3"), b = Scalar::from_string("-5/7");
  CHECK((a + b) == Scalar::from_string("-1/21"));
  CHECK((a * b) == Scalar::from_string("-10/21"));
  CHECK((a / b) == Scalar::from_string("-14/15"));
  CHECK_THROWS_AS(Scalar(0).inverse(), Error);
}

TEST_CASE("gaussian rationals") {
  Scalar i = Scalar::sqrt_of(-1);
  CHECK(i * i == Scalar(-1));
  Scalar z = Scalar(3) + Scalar(4) * i;
  CHECK(z * z.inverse() == Scalar(1));
  CHECK(z.inverse() == Scalar(mpq_class(3, 25), mpq_class(-4, 25), -1));
  CHECK(z.str() == "3 + 4*i");
}

TEST_CASE("sqrt 3") {
  Scalar r = Scalar::sqrt_of(3);
  Scalar c = Scalar(2) / r;  // sqrt(4/3)
  CHECK(c * c == Scalar::from_string("4/3"));
  CHECK(c.str() == "2/3*sqrt(3)");
}

TEST_CASE("fields do not mix") {
  CHECK_THROWS_AS(Scalar::sqrt_of(-1) + Scalar::sqrt_of(3), Error);
  CHECK_NOTHROW(Scalar::sqrt_of(3) + Scalar(1));
  CHECK_THROWS(FieldSpec::quadratic(4));
}

TEST_CASE("field axioms on samples") {
  std::vector<Scalar> xs = {Scalar(1), Scalar::from_string("-3/2"), Scalar::sqrt_of(-3),
                            Scalar(2) + Scalar::sqrt_of(-3) * Scalar::from_string("1/5")};
  for (auto& x : xs)
    for (auto& y : xs)
      for (auto& z : xs) {
        CHECK((x + y) * z == x * z + y * z);
        CHECK((x * y) * z == x * (y * z));
      }
  for (auto& x : xs) CHECK(x * x.inverse() == Scalar(1));
}

TEST_CASE("rref and kernel") {
  Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  CHECK(rank(m) == 2);
  auto k = kernel(m);
  REQUIRE(k.size() == 1);
  CHECK(is_zero(m * k[0]));
  CHECK(det(m) == Scalar(0));
  Matrix n = Matrix::from_rows({{2, 1}, {1, 1}}, 2);
  CHECK(det(n) == Scalar(1));
  auto inv = inverse(n);
  REQUIRE(inv);
  CHECK(*inv * n == Matrix::identity(2));
  auto x = solve(n, {3, 2});
  REQUIRE(x);
  CHECK((*x)[0] == Scalar(1));
  CHECK(!solve(m, {1, 0, 0}));
}

#include <set>

#include "doctest.h"
#include "ncconic/dataset.hpp"

using namespace ncconic;

namespace {
std::string dump(const std::vector<RowReport>& rs) {
  std::string s;
  for (auto& r : rs) s += r.str(true);
  return s;
}
}  // namespace

TEST_CASE("table ids resolve") {
  CHECK(canonical_table("10") == "F");
  CHECK(canonical_table("F") == "F");
  CHECK(canonical_table("5") == "A");
  CHECK(canonical_table("15") == "K");
  CHECK_THROWS(canonical_table("99"));
}

TEST_CASE("verification is deterministic across thread counts") {
  auto one = verify_table("F", "", default_max_degree(), 1);
  auto many = verify_table("F", "", default_max_degree(), 4);
  CHECK(dump(one) == dump(many));
  CHECK(dump(one) == dump(verify_table("F", "", default_max_degree(), 4)));
  REQUIRE(one.size() == 7);
  for (auto& r : one) CHECK(r.status == RowStatus::Pass);
}

TEST_CASE("every conic row of a table is reported") {
  std::set<std::string> rows;
  for (auto& r : verify_table("G")) rows.insert(r.row);
  for (auto l : {"G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8"}) CHECK(rows.count(l) == 1);
}

TEST_CASE("a single row can be selected") {
  auto r = verify_table("F", "F3");
  REQUIRE(r.size() == 1);
  CHECK(r[0].row == "F3");
  CHECK(r[0].find("hilbert A") != nullptr);
}

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncconic/parse.hpp"

namespace ncconic {

// A block of "key: value" lines opened by a head key (e.g. "row:").
struct Section {
  std::string head;
  int line = 0;
  std::vector<std::pair<std::string, std::string>> entries;

  bool has(const std::string& key) const;
  // Throws Parse when missing.
  std::string get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
  std::vector<std::string> all(const std::string& key) const;
};

std::vector<Section> read_sections(const std::string& path, const std::string& head_key = "row");
// NCCONIC_DATA overrides the compiled data directory.
std::string data_path(const std::string& file);

struct Sample {
  std::string text;
  ParamMap values;
};
// "alpha = 2" or "s = 1/4, t = 2" per sample line; one empty sample when the row has no parameters.
std::vector<Sample> row_samples(const Section& s, FieldSpec field);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

enum class RowStatus { Pass, Fail, Skipped };
const char* to_string(RowStatus s);

struct RowReport {
  std::string table;
  std::string row;
  std::string sample;
  RowStatus status = RowStatus::Pass;
  std::vector<Check> checks;
  std::string note;

  void add(const std::string& name, bool pass, const std::string& detail = "");
  bool ok() const { return status != RowStatus::Fail; }
  const Check* find(const std::string& name) const;
  std::string str(bool verbose = false) const;
};

// Table ids: "2", "3", "4", "A".."K" (also "5".."15"), "id" for the identifications.
std::vector<std::string> table_ids();
std::string canonical_table(const std::string& id);

RowReport skipped_row(const Section& s, const std::string& table);
std::vector<RowReport> verify_conic(const Section& s, int max_degree);
std::vector<RowReport> verify_center(const Section& s, int max_degree);
std::vector<RowReport> verify_pair(const Section& s, int max_degree);
std::vector<RowReport> verify_pencil(const Section& s, int max_degree);
std::vector<RowReport> verify_identification(const Section& s, int max_degree);

// All sections of a table (row == "" for every row), verified on `threads` workers; order follows the data file.
std::vector<RowReport> verify_table(const std::string& table, const std::string& row = "",
                                    int max_degree = default_max_degree(), unsigned threads = 0);

}  // namespace ncconic

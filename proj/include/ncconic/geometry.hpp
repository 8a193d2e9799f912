#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncconic/commpoly.hpp"
#include "ncconic/freealg.hpp"

namespace ncconic {

// Rows indexed by generators, columns by relations; entries are linear forms in 3 variables.
using FormMatrix = std::vector<std::vector<CommPoly>>;

// f_k = sum_i x_i K(i, k).
FormMatrix k_matrix(const std::vector<NcPoly>& relations);
// 3-minors of a 3 x m matrix, deleting columns from the last to the first (m = 4).
std::vector<CommPoly> minors_ideal(const FormMatrix& k);

// Unique q with f(p, q) = 0 for every relation, or nothing when the solution space has dimension > 1.
std::optional<Vec> sigma_at(const std::vector<NcPoly>& relations, const Vec& p);

// First nonzero coordinate scaled to 1.
Vec normalize_point(const Vec& p);
bool same_point(const Vec& p, const Vec& q);

struct PointScheme {
  bool finite = false;
  std::vector<Vec> points;
  std::vector<std::size_t> sigma;  // sigma(points[i]) = points[sigma[i]]
  std::vector<CommPoly> gens;      // the minors
  std::string note;
};

PointScheme point_scheme(const std::vector<NcPoly>& relations, FieldSpec field);

// Sorted lengths of the cycles of a permutation.
std::vector<std::size_t> cycle_type(const std::vector<std::size_t>& perm);
// Lines containing at least three of the points, as sorted index sets.
std::vector<std::vector<std::size_t>> rich_line_sets(const std::vector<Vec>& points);
std::size_t rich_lines(const std::vector<Vec>& points);
// V(minors) lies in V(c): no common zero of the minors with c != 0 on any standard chart.
bool scheme_inside(const std::vector<CommPoly>& minors, const CommPoly& c);

}  // namespace ncconic

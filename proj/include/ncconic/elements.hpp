#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncconic/galgebra.hpp"

namespace ncconic {

struct NormalCertificate {
  NcPoly w;
  int degree = 0;
  Matrix nu;            // row i: coordinates of nu(e_i) in basis(1), where e_i w = w nu(e_i)
  bool central = false;
};

// Basis of the degree-d part of the center, as reduced polynomials.
std::vector<NcPoly> center_degree(const GradedAlgebra& a, int d);

std::optional<NormalCertificate> try_normalize(const GradedAlgebra& a, const NcPoly& w);
// Throws NotNormal.
NormalCertificate normalize_check(const GradedAlgebra& a, const NcPoly& w);
// nu extended multiplicatively, applied k times.
NcPoly apply_nu(const GradedAlgebra& a, const NormalCertificate& c, const NcPoly& p, int k = 1);

RegularityReport regularity_check(const GradedAlgebra& a, const NormalCertificate& c);

// Regular normal sequence: every step normal and H(A/(F)) = prod(1 - t^d_i) H(A) through the truncation.
RegularityReport regular_normal_sequence(const GradedAlgebra& a, const std::vector<NcPoly>& seq);

// For A with dim A_1 = 3 and dim A_2 = 4 (s.t. the dual of a noncommutative conic):
// does A/(w) have a quadratic dual with a single nondegenerate relation?
bool dual_quotient_certificate(const GradedAlgebra& a, const NcPoly& w);

// True when every element of span(basis) (homogeneous, one degree) is a zero divisor: for a generic
// combination, left or right multiplication drops rank identically in some degree of the truncation.
bool span_has_no_regular(const GradedAlgebra& a, const std::vector<NcPoly>& basis);

struct NormalSearch {
  std::vector<NormalCertificate> regular;  // regular normal elements found, central first
  bool complete = true;                    // no regular normal element was missed
  std::string note;
};
NormalSearch find_normal_degree1(const GradedAlgebra& a);

}  // namespace ncconic

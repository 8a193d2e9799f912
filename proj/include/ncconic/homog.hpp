#pragma once

#include <string>
#include <vector>

#include "ncconic/elements.hpp"
#include "ncconic/findim.hpp"

namespace ncconic {

// Delete generator z from every word; the result lives in the ambient without z.
NcPoly dehomogenize_poly(const NcPoly& f, std::size_t z);
// Right-pad each term with the last generator of target (f's ambient plus one generator).
NcPoly homogenize_poly(const NcPoly& f, const AmbientPtr& target);
NcPoly homogenize_poly(const NcPoly& f, const std::string& z);
// Top-degree component.
NcPoly wild_homogenize_poly(const NcPoly& f);

// S[z]/(F^z): S's relations, [x_i, z] and the homogenized F, z appended last.
Presentation homogenize_presentation(const Presentation& s, const std::vector<NcPoly>& f,
                                     const std::string& z = "z");
std::vector<NcPoly> wild_homogenize_seq(const std::vector<NcPoly>& f);
// S/(F^v).
Presentation tau_quotient(const Presentation& s, const std::vector<NcPoly>& f);
// Relations with generator z set to 1 (zero ones dropped), over the remaining generators.
Presentation dehomogenize_presentation(const Presentation& p, std::size_t z);

struct StrongRegularity {
  Verdict verdict = Verdict::Unknown;
  RegularityReport top;           // F^v in S
  RegularityReport homogenized;   // (F^z, z) in S[z]
  std::string reason;
};
StrongRegularity is_strongly_regular_normal(const Presentation& s, const std::vector<NcPoly>& f,
                                            int max_degree = default_max_degree());

// phi substitutes x_i -> sum_j phi(i, j) x_j, then f'_j = sum_i alpha(i, j) f_i.
std::vector<NcPoly> apply_st(const std::vector<NcPoly>& f, const Matrix& alpha, const Matrix& phi);
// Graded substitution x_i -> sum_j phi(i, j) x_j.
NcPoly apply_linear(const NcPoly& f, const Matrix& phi);
// Quadratic relations of the twist: x_i x_j -> phi(x_i) x_j.
std::vector<NcPoly> zhang_twist(const std::vector<NcPoly>& rels, const Matrix& phi);

// Smallest d with dims d, d+1, d+2 equal, or -1.
int stabilization_degree(const HilbertPrefix& h);
// A[w^-1]_0 as structure constants, for a regular normal w.
FiniteAlgebra dehomogenize_algebra(const GradedAlgebra& a, const NormalCertificate& c);

}  // namespace ncconic

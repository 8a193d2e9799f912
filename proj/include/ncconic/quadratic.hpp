#pragma once

#include "ncconic/galgebra.hpp"

namespace ncconic {

// Relations as rows in the n^2-dimensional space of degree-2 words, column i*n + j for x_i x_j.
Matrix relation_matrix(const Presentation& p);
Vec word2_coords(const NcPoly& f);
NcPoly word2_poly(const AmbientPtr& amb, const Vec& v);

// Quadratic dual over the same generator names: relations span the orthogonal complement.
Presentation quadratic_dual(const Presentation& p);
bool relation_span_equal(const Presentation& a, const Presentation& b);
std::size_t relation_span_dim(const Presentation& p);
// Echelon basis of the relation span, as polynomials.
std::vector<NcPoly> relation_basis(const Presentation& p);

// For A = S/(f) with S, f quadratic: the element f! of A! with S! = A!/(f!), in normal form.
NcPoly dual_element(const Presentation& s, const NcPoly& f, const GradedAlgebra& a_dual);

// H_{A!}(t) * H_A(-t) == 1 through the common truncation.
bool koszul_series_check(const HilbertPrefix& a, const HilbertPrefix& a_dual);

}  // namespace ncconic

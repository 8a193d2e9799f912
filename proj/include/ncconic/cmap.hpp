#pragma once

#include <string>
#include <vector>

#include "ncconic/homog.hpp"
#include "ncconic/quadratic.hpp"

namespace ncconic {

struct CResult {
  FiniteAlgebra algebra;
  bool fast_path = false;      // localized at a degree-1 regular normal element of the dual
  NormalCertificate cert;      // the element localized at, in the dual
  std::string note;
};

// C(A) for A = S/(f), S given by its three quadratic relations.
CResult compute_C(const Presentation& s, const NcPoly& f, int max_degree = default_max_degree());
// Same, splitting a 4-relation conic presentation as (S, last relation).
CResult compute_C(const Presentation& a, int max_degree = default_max_degree());

// A pencil S/(F) with S on two generators.
struct Pencil {
  Presentation s;
  std::vector<NcPoly> f;
};
// The conic H^z(S, F)^!, after checking strong regularity.
Presentation nabla(const Pencil& e, int max_degree = default_max_degree());
// D_w(A^!) at a central regular degree-1 element of the dual, central certificate preferred.
CResult delta(const Presentation& a, int max_degree = default_max_degree());
// E as structure constants.
FiniteAlgebra pencil_algebra(const Pencil& e);

// H^z(D_w(A^!)) with w a generator central and regular in A^!, compared as relation spans with A^!.
bool rehomogenization_matches(const Presentation& a_dual, std::size_t w, int max_degree = default_max_degree());

}  // namespace ncconic

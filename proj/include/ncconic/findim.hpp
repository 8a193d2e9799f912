#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncconic/commpoly.hpp"
#include "ncconic/freealg.hpp"

namespace ncconic {

// Finite-dimensional algebra by structure constants.
struct FiniteAlgebra {
  FieldSpec field;
  std::vector<std::string> labels;
  std::vector<std::vector<Vec>> table;  // table[a][b] = e_a e_b
  Vec unit;

  std::size_t dim() const { return labels.size(); }
  Vec basis_vector(std::size_t i) const;
  Vec mul(const Vec& x, const Vec& y) const;
  // Column b is x e_b.
  Matrix left_matrix(const Vec& x) const;
  bool is_associative() const;
  bool is_unital() const;
  // Row i of p is the i-th new basis vector in old coordinates.
  FiniteAlgebra change_basis(const Matrix& p) const;
  std::string str() const;
};

// S/I for inhomogeneous relations, by word closure inside the homogenization at large degree.
FiniteAlgebra from_presentation(const AmbientPtr& amb, const std::vector<NcPoly>& relations, int bound = 8);

struct FrobeniusReport {
  bool frobenius = false;
  Vec witness;        // functional with invertible Gram matrix
  CommPoly gram_det;  // det of (phi(e_a e_b)) in the coordinates of phi
};
FrobeniusReport is_frobenius(const FiniteAlgebra& a);

struct AlgebraInvariants {
  bool commutative = false;
  std::size_t center = 0;
  std::size_t rad = 0, rad2 = 0, rad3 = 0;
  std::size_t blocks = 0;               // simple components of A/J over the algebraic closure
  std::vector<std::size_t> block_dims;
  std::size_t form_rank = 0;            // rank of ab + ba on J/J^2 when dim J^2 = 1

  bool operator==(const AlgebraInvariants&) const = default;
  std::string str() const;
};
AlgebraInvariants invariants(const FiniteAlgebra& a);
// Jacobson radical via the trace form.
std::vector<Vec> radical(const FiniteAlgebra& a);
std::vector<Vec> product_space(const FiniteAlgebra& a, const std::vector<Vec>& u, const std::vector<Vec>& v);

enum class FClass { K4, U2xK2, U2xU2, U3xK, U4, U2V2, M2, B, C, D, E };
const char* to_string(FClass c);
std::optional<FClass> parse_class(const std::string& s);

struct Classification {
  FClass cls = FClass::K4;
  // E class: uv = mu vu for square-zero u, v spanning J/J^2; reported as {mu, 1/mu}.
  std::optional<std::pair<Scalar, Scalar>> mu;
  Scalar mu_sum;  // mu + 1/mu, always available for E
  std::string str() const;
};
Classification classify(const FiniteAlgebra& a);

struct ReferenceAlgebra {
  FClass cls;
  std::string text;  // "gens: ... | rel; rel; ..." description
  FiniteAlgebra algebra;
};
const std::vector<ReferenceAlgebra>& reference_algebras();
const AlgebraInvariants& reference_signature(FClass c);

}  // namespace ncconic

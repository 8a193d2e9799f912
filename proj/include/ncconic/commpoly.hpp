#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncconic/linalg.hpp"

namespace ncconic {

using Mono = std::vector<unsigned>;

// Graded-lex storage order: total degree first, then lexicographic with variable 0 largest.
struct GrLex {
  bool operator()(const Mono& a, const Mono& b) const;
};

// Sparse commutative polynomial in a fixed number of variables.
class CommPoly {
 public:
  using Terms = std::map<Mono, Scalar, GrLex>;

  CommPoly() = default;
  explicit CommPoly(std::size_t nvars) : n_(nvars) {}
  static CommPoly constant(std::size_t nvars, const Scalar& c);
  static CommPoly var(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree() const;
  void add_term(const Mono& m, const Scalar& c);
  Scalar coeff(const Mono& m) const;

  CommPoly operator-() const;
  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  CommPoly& operator*=(const Scalar& c);
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator*(CommPoly a, const Scalar& c) { return a *= c; }
  friend CommPoly operator*(const Scalar& c, CommPoly a) { return a *= c; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  bool operator==(const CommPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  CommPoly pow(unsigned e) const;

  Scalar eval(const Vec& point) const;
  // Fix variable i to value v (the variable stays in the signature with exponent 0).
  CommPoly substitute(std::size_t i, const Scalar& v) const;
  std::string str(const std::vector<std::string>& names) const;

 private:
  std::size_t n_ = 0;
  Terms terms_;
};

enum class TermOrder { Lex, GrevLex };

// Reduced Groebner basis with variable 0 largest; {1} when inconsistent.
std::vector<CommPoly> groebner(std::vector<CommPoly> polys, TermOrder order);
std::vector<CommPoly> groebner_lex(std::vector<CommPoly> polys);
CommPoly normal_form(const CommPoly& f, const std::vector<CommPoly>& gb, TermOrder order);
// Remainder of f modulo a Groebner basis (lex).
CommPoly lex_reduce(const CommPoly& f, const std::vector<CommPoly>& gb);
// Exact division; throws when g does not divide f.
CommPoly divide_exact(const CommPoly& f, const CommPoly& g);
bool divides(const CommPoly& g, const CommPoly& f);

// Univariate polynomials, coefficient of t^k at index k.
using UPoly = std::vector<Scalar>;

struct RootReport {
  std::vector<Scalar> roots;   // distinct roots in the field
  bool residue = false;        // part of the polynomial with no root found in the field
};
RootReport roots_in_field(const UPoly& p, FieldSpec field);

struct SolveResult {
  std::vector<Vec> points;
  bool complete = true;
  std::string note;
};
// Affine solutions over the field of a system in at most a few variables.
SolveResult eliminate_small(const std::vector<CommPoly>& polys, FieldSpec field);
// Solutions of polynomials homogeneous in the leading variables, via the standard charts; points are
// normalized with the first nonzero coordinate equal to 1.
// The first proj_vars variables are projective, any later ones affine.
SolveResult projective_points(const std::vector<CommPoly>& polys, std::size_t proj_vars, FieldSpec field);

// Determinant of a square matrix of polynomials by cofactor expansion.
CommPoly det_poly(const std::vector<std::vector<CommPoly>>& m);

}  // namespace ncconic

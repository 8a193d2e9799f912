#include "ncconic/quadratic.hpp"

namespace ncconic {

Vec word2_coords(const NcPoly& f) {
  std::size_t n = f.ambient()->ngens();
  Vec v(n * n);
  for (auto& [w, c] : f.terms()) {
    if (w.size() != 2) throw Error(ErrorKind::NotQuadratic, f.str());
    v[w[0] * n + w[1]] = c;
  }
  return v;
}

NcPoly word2_poly(const AmbientPtr& amb, const Vec& v) {
  std::size_t n = amb->ngens();
  NcPoly p(amb);
  for (std::size_t k = 0; k < v.size(); ++k) p.add_term(Word{Letter(k / n), Letter(k % n)}, v[k]);
  return p;
}

Matrix relation_matrix(const Presentation& p) {
  std::size_t n = p.ngens();
  Matrix m(0, n * n);
  for (auto& r : p.relations) {
    if (r.is_zero()) continue;
    m.append_row(word2_coords(embed(r, p.ambient)));
  }
  return m;
}

static std::vector<NcPoly> rows_as_polys(const AmbientPtr& amb, const Matrix& m) {
  std::vector<NcPoly> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(word2_poly(amb, m.row(i)));
  return out;
}

std::vector<NcPoly> relation_basis(const Presentation& p) {
  Matrix m = relation_matrix(p);
  return rows_as_polys(p.ambient, m.rows() ? rref(m).reduced : m);
}

std::size_t relation_span_dim(const Presentation& p) {
  Matrix m = relation_matrix(p);
  return m.rows() ? rank(m) : 0;
}

Presentation quadratic_dual(const Presentation& p) {
  if (!p.is_quadratic()) throw Error(ErrorKind::NotQuadratic, "dual needs quadratic relations");
  std::size_t n = p.ngens();
  Matrix w = relation_matrix(p);
  std::vector<Vec> perp;
  if (w.rows() == 0) {
    for (std::size_t k = 0; k < n * n; ++k) {
      Vec e(n * n);
      e[k] = 1;
      perp.push_back(e);
    }
  } else {
    perp = kernel(w);
  }
  Matrix pm(0, n * n);
  for (auto& v : perp) pm.append_row(v);
  Presentation d{p.ambient, {}, p.label.empty() ? "" : p.label + "!"};
  if (pm.rows()) d.relations = rows_as_polys(p.ambient, rref(pm).reduced);
  return d;
}

bool relation_span_equal(const Presentation& a, const Presentation& b) {
  if (!(*a.ambient == *b.ambient)) throw Error(ErrorKind::AmbientMismatch, "span comparison");
  Matrix ma = relation_matrix(a), mb = relation_matrix(b);
  std::size_t ra = ma.rows() ? rank(ma) : 0, rb = mb.rows() ? rank(mb) : 0;
  if (ra != rb) return false;
  if (ra == 0) return true;
  return rref(ma).reduced == rref(mb).reduced;
}

NcPoly dual_element(const Presentation& s, const NcPoly& f, const GradedAlgebra& a_dual) {
  Presentation a = s;
  a.relations.push_back(f);
  if (relation_span_dim(a) != relation_span_dim(s) + 1)
    throw Error(ErrorKind::Precondition, "f must lie outside the relation span of S");
  Presentation sd = quadratic_dual(s), ad = quadratic_dual(a);
  Matrix am = relation_matrix(ad);
  Echelon e = am.rows() ? rref(am) : Echelon{Matrix(0, am.cols()), {}};
  for (auto& r : sd.relations) {
    Vec rem = reduce_against(e, word2_coords(r));
    if (is_zero(rem)) continue;
    NcPoly g = a_dual.reduce(word2_poly(s.ambient, rem));
    if (!g.is_zero()) return g.monic();
  }
  throw Error(ErrorKind::Precondition, "no dual element found");
}

bool koszul_series_check(const HilbertPrefix& a, const HilbertPrefix& a_dual) {
  std::size_t n = std::min(a.size(), a_dual.size());
  for (std::size_t k = 0; k < n; ++k) {
    long s = 0;
    for (std::size_t i = 0; i <= k; ++i) {
      long t = long(a_dual[i]) * long(a[k - i]);
      s += ((k - i) % 2) ? -t : t;
    }
    if (s != (k == 0 ? 1 : 0)) return false;
  }
  return true;
}

}  // namespace ncconic

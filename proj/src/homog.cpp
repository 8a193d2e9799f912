#include "ncconic/homog.hpp"

#include <algorithm>

namespace ncconic {

NcPoly dehomogenize_poly(const NcPoly& f, std::size_t z) {
  const Ambient& amb = *f.ambient();
  if (z >= amb.ngens()) throw Error(ErrorKind::Precondition, "no generator " + std::to_string(z));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < amb.ngens(); ++i)
    if (i != z) names.push_back(amb.names[i]);
  AmbientPtr target = make_ambient(names, amb.field);
  NcPoly out(target);
  for (const auto& [w, c] : f.terms()) {
    Word u;
    for (Letter l : w)
      if (l != z) u.push_back(Letter(l > z ? l - 1 : l));
    out.add_term(u, c);
  }
  return out;
}

NcPoly homogenize_poly(const NcPoly& f, const AmbientPtr& target) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "homogenize zero");
  Letter z = Letter(target->ngens() - 1);
  NcPoly g = embed(f, target);
  int d = g.degree();
  NcPoly out(target);
  for (const auto& [w, c] : g.terms()) {
    Word u = w;
    u.resize(d, z);
    out.add_term(u, c);
  }
  return out;
}

NcPoly homogenize_poly(const NcPoly& f, const std::string& z) {
  return homogenize_poly(f, extend_ambient(f.ambient(), z));
}

NcPoly wild_homogenize_poly(const NcPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "top form of zero");
  return f.homogeneous_part(f.degree());
}

Presentation homogenize_presentation(const Presentation& s, const std::vector<NcPoly>& f, const std::string& z) {
  AmbientPtr ext = extend_ambient(s.ambient, z);
  Presentation out;
  out.ambient = ext;
  out.label = s.label.empty() ? "" : s.label + "^z";
  for (const auto& r : s.relations) out.relations.push_back(embed(r, ext));
  NcPoly zp = NcPoly::gen(ext, ext->ngens() - 1);
  for (std::size_t i = 0; i + 1 < ext->ngens(); ++i) out.relations.push_back(commutator(NcPoly::gen(ext, i), zp));
  for (const auto& g : f) out.relations.push_back(homogenize_poly(embed(g, s.ambient), ext));
  return out;
}

std::vector<NcPoly> wild_homogenize_seq(const std::vector<NcPoly>& f) {
  std::vector<NcPoly> out;
  for (const auto& g : f) out.push_back(wild_homogenize_poly(g));
  return out;
}

Presentation tau_quotient(const Presentation& s, const std::vector<NcPoly>& f) {
  Presentation out = s;
  for (const auto& g : wild_homogenize_seq(f)) out.relations.push_back(embed(g, s.ambient));
  return out;
}

Presentation dehomogenize_presentation(const Presentation& p, std::size_t z) {
  Presentation out;
  NcPoly probe = dehomogenize_poly(NcPoly(p.ambient), z);
  out.ambient = probe.ambient();
  for (const auto& r : p.relations) {
    NcPoly g = dehomogenize_poly(r, z);
    if (!g.is_zero()) out.relations.push_back(g);
  }
  return out;
}

StrongRegularity is_strongly_regular_normal(const Presentation& s, const std::vector<NcPoly>& f, int max_degree) {
  StrongRegularity out;
  GradedAlgebra sa(s, max_degree);
  out.top = regular_normal_sequence(sa, wild_homogenize_seq(f));
  Presentation sz = homogenize_presentation(s, {});
  GradedAlgebra sza(sz, max_degree);
  std::vector<NcPoly> seq;
  for (const auto& g : f) seq.push_back(homogenize_poly(embed(g, s.ambient), sz.ambient));
  seq.push_back(NcPoly::gen(sz.ambient, sz.ambient->ngens() - 1));
  out.homogenized = regular_normal_sequence(sza, seq);
  if (out.top.verdict == Verdict::Yes && out.homogenized.verdict == Verdict::Yes) {
    out.verdict = Verdict::Yes;
    out.reason = "top forms and homogenized sequence are regular normal";
  } else {
    out.verdict = out.top.verdict == Verdict::Unknown || out.homogenized.verdict == Verdict::Unknown
                      ? Verdict::Unknown
                      : Verdict::No;
    out.reason = out.top.verdict != Verdict::Yes ? "top forms: " + out.top.reason
                                                 : "homogenized sequence: " + out.homogenized.reason;
  }
  return out;
}

NcPoly apply_linear(const NcPoly& f, const Matrix& phi) {
  const AmbientPtr& amb = f.ambient();
  std::size_t n = amb->ngens();
  if (phi.rows() != n || phi.cols() != n) throw Error(ErrorKind::Precondition, "substitution size");
  std::vector<NcPoly> images;
  for (std::size_t i = 0; i < n; ++i) {
    NcPoly im(amb);
    for (std::size_t j = 0; j < n; ++j) im.add_term(Word{Letter(j)}, phi(i, j));
    images.push_back(im);
  }
  return substitute(f, images, amb);
}

std::vector<NcPoly> apply_st(const std::vector<NcPoly>& f, const Matrix& alpha, const Matrix& phi) {
  if (det(alpha).is_zero() || det(phi).is_zero()) throw Error(ErrorKind::SingularMatrix, "apply_st");
  if (alpha.rows() != f.size() || alpha.cols() != f.size()) throw Error(ErrorKind::Precondition, "recombination size");
  std::vector<NcPoly> sub;
  for (const auto& g : f) sub.push_back(apply_linear(g, phi));
  std::vector<NcPoly> out;
  for (std::size_t j = 0; j < f.size(); ++j) {
    NcPoly h(f[0].ambient());
    for (std::size_t i = 0; i < f.size(); ++i) h += sub[i] * alpha(i, j);
    out.push_back(h);
  }
  return out;
}

std::vector<NcPoly> zhang_twist(const std::vector<NcPoly>& rels, const Matrix& phi) {
  std::vector<NcPoly> out;
  for (const auto& r : rels) {
    const AmbientPtr& amb = r.ambient();
    NcPoly t(amb);
    for (const auto& [w, c] : r.terms()) {
      if (w.size() != 2) throw Error(ErrorKind::NotQuadratic, r.str());
      NcPoly first = apply_linear(NcPoly::monomial(amb, Word{w[0]}), phi);
      t += first * NcPoly::monomial(amb, Word{w[1]}, c);
    }
    out.push_back(t);
  }
  return out;
}

int stabilization_degree(const HilbertPrefix& h) {
  for (std::size_t d = 0; d + 2 < h.size(); ++d)
    if (h[d] == h[d + 1] && h[d] == h[d + 2]) return int(d);
  return -1;
}

FiniteAlgebra dehomogenize_algebra(const GradedAlgebra& a, const NormalCertificate& c) {
  if (c.degree < 1) throw Error(ErrorKind::Precondition, "localizing element needs positive degree");
  int s0 = stabilization_degree(a.hilbert());
  if (s0 < 0) throw Error(ErrorKind::NotStabilized, "Hilbert prefix not constant through the truncation");
  int d0 = std::max(s0, 1);
  d0 = (d0 + c.degree - 1) / c.degree * c.degree;
  if (2 * d0 > a.max_degree()) throw Error(ErrorKind::TruncationTooSmall, "localization needs degree " + std::to_string(2 * d0));
  if (regularity_check(a, c).verdict != Verdict::Yes) throw Error(ErrorKind::NotRegular, c.w.str());
  int i = d0 / c.degree;
  NcPoly wi = a.reduce(c.w.pow(unsigned(i)));
  const auto& b = a.basis(d0);
  std::size_t n = b.size();
  if (a.dim(2 * d0) != n) throw Error(ErrorKind::NotStabilized, "degrees d0 and 2 d0 differ");
  Matrix mw(n, n);
  std::vector<NcPoly> elems;
  for (std::size_t j = 0; j < n; ++j) {
    elems.push_back(NcPoly::monomial(a.ambient(), b[j]));
    Vec v = a.coords(elems[j] * wi, 2 * d0);
    for (std::size_t r = 0; r < n; ++r) mw(r, j) = v[r];
  }
  auto inv = inverse(mw);
  if (!inv) throw Error(ErrorKind::NotRegular, "multiplication by the element is not bijective");
  FiniteAlgebra fa;
  fa.field = a.ambient()->field;
  for (const auto& w : b) fa.labels.push_back(word_str(*a.ambient(), w));
  fa.table.assign(n, std::vector<Vec>(n));
  std::vector<NcPoly> twisted;
  for (std::size_t j = 0; j < n; ++j) twisted.push_back(c.central ? elems[j] : apply_nu(a, c, elems[j], i));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) fa.table[p][q] = (*inv) * a.coords(elems[p] * twisted[q], 2 * d0);
  fa.unit = a.coords(wi, d0);
  return fa;
}

}  // namespace ncconic

#include "ncconic/cmap.hpp"

#include <algorithm>

namespace ncconic {

CResult compute_C(const Presentation& s, const NcPoly& f, int max_degree) {
  if (s.ngens() != 3 || !s.is_quadratic() || f.degree() != 2 || !f.is_homogeneous())
    throw Error(ErrorKind::Precondition, "C(A) needs three generators and quadratic relations");
  if (max_degree < 4) throw Error(ErrorKind::TruncationTooSmall, "C(A) needs degree 4");
  Presentation a = s;
  a.relations.push_back(embed(f, s.ambient));
  GradedAlgebra dual(quadratic_dual(a), max_degree);
  CResult out;
  NormalSearch search = find_normal_degree1(dual);
  if (!search.regular.empty()) {
    out.fast_path = true;
    out.cert = search.regular.front();
    out.algebra = dehomogenize_algebra(dual, out.cert);
    out.note = std::string("localized at ") + (out.cert.central ? "central " : "normal ") + out.cert.w.str();
    return out;
  }
  NcPoly fd = dual_element(s, f, dual);
  auto cert = try_normalize(dual, fd);
  if (!cert) throw Error(ErrorKind::NoCertificate, "dual element " + fd.str() + " is not normal");
  if (regularity_check(dual, *cert).verdict != Verdict::Yes)
    throw Error(ErrorKind::NoCertificate, "dual element " + fd.str() + " not certified regular");
  out.cert = *cert;
  out.algebra = dehomogenize_algebra(dual, out.cert);
  out.note = "localized at dual element " + fd.str();
  return out;
}

CResult compute_C(const Presentation& a, int max_degree) {
  if (a.relations.size() != 4) throw Error(ErrorKind::Precondition, "conic presentation needs 4 relations");
  Presentation s = a;
  s.relations.pop_back();
  return compute_C(s, a.relations.back(), max_degree);
}

Presentation nabla(const Pencil& e, int max_degree) {
  auto sr = is_strongly_regular_normal(e.s, e.f, max_degree);
  if (sr.verdict != Verdict::Yes) throw Error(ErrorKind::NotRegular, "not strongly regular normal: " + sr.reason);
  return quadratic_dual(homogenize_presentation(e.s, e.f));
}

CResult delta(const Presentation& a, int max_degree) {
  GradedAlgebra dual(quadratic_dual(a), max_degree);
  NormalSearch search = find_normal_degree1(dual);
  if (search.regular.empty() || !search.regular.front().central)
    throw Error(ErrorKind::NoCertificate, "no central regular degree-1 element in the dual");
  CResult out;
  out.fast_path = true;
  out.cert = search.regular.front();
  out.algebra = dehomogenize_algebra(dual, out.cert);
  out.note = "localized at central " + out.cert.w.str();
  return out;
}

FiniteAlgebra pencil_algebra(const Pencil& e) {
  std::vector<NcPoly> rels = e.s.relations;
  for (const auto& g : e.f) rels.push_back(embed(g, e.s.ambient));
  return from_presentation(e.s.ambient, rels);
}

bool rehomogenization_matches(const Presentation& a_dual, std::size_t w, int max_degree) {
  GradedAlgebra dual(a_dual, max_degree);
  auto cert = try_normalize(dual, NcPoly::gen(a_dual.ambient, w));
  if (!cert || !cert->central || regularity_check(dual, *cert).verdict != Verdict::Yes) return false;
  Presentation d = dehomogenize_presentation(a_dual, w);
  Presentation free2{d.ambient, {}, ""};
  Presentation h = homogenize_presentation(free2, d.relations, a_dual.ambient->names[w]);
  if (!h.is_quadratic()) return false;
  // Reorder generators of h to match a_dual.
  std::vector<NcPoly> images;
  for (const auto& name : h.ambient->names) {
    auto it = std::find(a_dual.ambient->names.begin(), a_dual.ambient->names.end(), name);
    images.push_back(NcPoly::gen(a_dual.ambient, std::size_t(it - a_dual.ambient->names.begin())));
  }
  Presentation back{a_dual.ambient, {}, ""};
  for (const auto& r : h.relations) back.relations.push_back(substitute(r, images, a_dual.ambient));
  return relation_span_equal(back, a_dual);
}

}  // namespace ncconic

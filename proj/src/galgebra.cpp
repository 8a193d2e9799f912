#include "ncconic/galgebra.hpp"

namespace ncconic {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

bool Presentation::is_homogeneous() const {
  for (auto& r : relations)
    if (!r.is_homogeneous()) return false;
  return true;
}

bool Presentation::is_quadratic() const {
  for (auto& r : relations)
    if (!r.is_zero() && (r.degree() != 2 || r.low_degree() != 2)) return false;
  return true;
}

GradedAlgebra::GradedAlgebra(Presentation p, int max_degree, const MonomialOrder& order)
    : pres_(std::move(p)) {
  if (!pres_.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "graded algebra needs homogeneous relations");
  rs_ = RewriteSystem::complete(pres_.ambient, pres_.relations, max_degree, order);
  for (int d = 0; d <= max_degree; ++d) {
    bases_.push_back(rs_.graded_basis(d));
    hilbert_.push_back(bases_.back().size());
    std::unordered_map<Word, std::size_t, WordHash> idx;
    for (std::size_t i = 0; i < bases_.back().size(); ++i) idx[bases_.back()[i]] = i;
    index_.push_back(std::move(idx));
  }
}

const std::vector<Word>& GradedAlgebra::basis(int d) const {
  if (d < 0 || d > max_degree()) throw Error(ErrorKind::DegreeExceedsTruncation, "basis degree");
  return bases_[d];
}

Vec GradedAlgebra::coords(const NcPoly& p, int d) const {
  if (d < 0 || d > max_degree()) throw Error(ErrorKind::DegreeExceedsTruncation, "coords degree");
  NcPoly q = reduce(p);
  Vec v(bases_[d].size());
  for (auto& [w, c] : q.terms()) {
    if (int(w.size()) != d) throw Error(ErrorKind::NotHomogeneous, "element not of degree " + std::to_string(d));
    v[index_[d].at(w)] = c;
  }
  return v;
}

NcPoly GradedAlgebra::from_coords(const Vec& v, int d) const {
  const auto& b = basis(d);
  if (v.size() != b.size()) throw Error(ErrorKind::Precondition, "coordinate length");
  NcPoly p(pres_.ambient);
  for (std::size_t i = 0; i < b.size(); ++i) p.add_term(b[i], v[i]);
  return p;
}

GradedAlgebra GradedAlgebra::quotient(const std::vector<NcPoly>& extra) const {
  Presentation q = pres_;
  for (auto& e : extra) q.relations.push_back(e);
  return GradedAlgebra(q, max_degree(), rs_.order());
}

Presentation polynomial_ring(const AmbientPtr& amb) {
  Presentation p{amb, {}, "poly"};
  for (std::size_t i = 0; i < amb->ngens(); ++i)
    for (std::size_t j = i + 1; j < amb->ngens(); ++j)
      p.relations.push_back(commutator(NcPoly::gen(amb, j), NcPoly::gen(amb, i)));
  return p;
}

HilbertPrefix polynomial_hilbert(std::size_t n, int d) {
  HilbertPrefix h(d + 1, 0);
  h[0] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (int i = 1; i <= d; ++i) h[i] += h[i - 1];
  if (n == 0)
    for (int i = 1; i <= d; ++i) h[i] = 0;
  return h;
}

std::vector<long> series_mul(const std::vector<long>& a, const HilbertPrefix& h) {
  std::vector<long> r(h.size(), 0);
  for (std::size_t i = 0; i < h.size(); ++i) {
    long s = 0;
    for (std::size_t j = 0; j < a.size() && j <= i; ++j) s += a[j] * long(h[i - j]);
    r[i] = s;
  }
  return r;
}

}  // namespace ncconic

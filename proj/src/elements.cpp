#include "ncconic/elements.hpp"

#include <algorithm>

#include "ncconic/commpoly.hpp"

namespace ncconic {

std::vector<NcPoly> center_degree(const GradedAlgebra& a, int d) {
  if (d + 1 > a.max_degree()) throw Error(ErrorKind::TruncationTooSmall, "center needs degree d+1");
  const auto& b = a.basis(d);
  const auto& g = a.basis(1);
  Matrix m(0, b.size());
  std::vector<Vec> cols;
  for (const Word& x : g) {
    NcPoly xp = NcPoly::monomial(a.ambient(), x);
    std::vector<Vec> c;
    for (const Word& w : b) {
      NcPoly wp = NcPoly::monomial(a.ambient(), w);
      c.push_back(a.coords(xp * wp - wp * xp, d + 1));
    }
    for (std::size_t r = 0; r < a.dim(d + 1); ++r) {
      Vec row(b.size());
      for (std::size_t j = 0; j < b.size(); ++j) row[j] = c[j][r];
      m.append_row(row);
    }
  }
  std::vector<Vec> ker;
  if (m.rows() == 0) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      Vec e(b.size());
      e[j] = 1;
      ker.push_back(e);
    }
  } else {
    ker = kernel(m);
  }
  std::vector<NcPoly> out;
  if (ker.empty()) return out;
  Matrix km(0, b.size());
  for (auto& v : ker) km.append_row(v);
  Echelon e = rref(km);
  for (std::size_t i = 0; i < e.reduced.rows(); ++i) out.push_back(a.from_coords(e.reduced.row(i), d));
  return out;
}

std::optional<NormalCertificate> try_normalize(const GradedAlgebra& a, const NcPoly& w0) {
  NcPoly w = a.reduce(embed(w0, a.ambient()));
  if (w.is_zero()) throw Error(ErrorKind::ZeroInput, "normal check of zero");
  if (!w.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, w.str());
  int d = w.degree();
  if (d + 1 > a.max_degree()) throw Error(ErrorKind::TruncationTooSmall, "normal check needs degree d+1");
  const auto& g = a.basis(1);
  std::size_t n = g.size(), m = a.dim(d + 1);
  Matrix wl(m, n), wr(m, n);  // columns: w e_j and e_j w
  for (std::size_t j = 0; j < n; ++j) {
    NcPoly e = NcPoly::monomial(a.ambient(), g[j]);
    Vec l = a.coords(w * e, d + 1), r = a.coords(e * w, d + 1);
    for (std::size_t i = 0; i < m; ++i) {
      wl(i, j) = l[i];
      wr(i, j) = r[i];
    }
  }
  NormalCertificate c;
  c.w = w;
  c.degree = d;
  c.nu = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto s = solve(wl, wr.col(i));
    if (!s) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) c.nu(i, j) = (*s)[j];
    if (!solve(wr, wl.col(i))) return std::nullopt;
  }
  c.central = wl == wr;
  return c;
}

NormalCertificate normalize_check(const GradedAlgebra& a, const NcPoly& w) {
  auto c = try_normalize(a, w);
  if (!c) throw Error(ErrorKind::NotNormal, w.str());
  return *c;
}

NcPoly apply_nu(const GradedAlgebra& a, const NormalCertificate& c, const NcPoly& p, int k) {
  const auto& g = a.basis(1);
  if (g.size() != a.ambient()->ngens())
    throw Error(ErrorKind::Precondition, "automorphism needs the generators to be a basis of A_1");
  std::vector<NcPoly> images;
  for (std::size_t i = 0; i < g.size(); ++i) {
    NcPoly im(a.ambient());
    for (std::size_t j = 0; j < g.size(); ++j) im.add_term(g[j], c.nu(i, j));
    images.push_back(im);
  }
  // basis(1) is in precedence order; map generator index -> image.
  std::vector<NcPoly> by_gen(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) by_gen[g[i][0]] = images[i];
  NcPoly r = embed(p, a.ambient());
  for (int t = 0; t < k; ++t) r = a.reduce(substitute(r, by_gen, a.ambient()));
  return r;
}

bool dual_quotient_certificate(const GradedAlgebra& a, const NcPoly& w) {
  GradedAlgebra q = a.quotient({w});
  if (q.dim(1) != 2 || q.max_degree() < 2) return false;
  if (q.dim(2) != 1) return false;
  const auto& g = q.basis(1);
  Vec row;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Word wd = {g[i][0], g[j][0]};
      row.push_back(q.coords(NcPoly::monomial(q.ambient(), wd), 2)[0]);
    }
  return !(row[0] * row[3] - row[1] * row[2]).is_zero();
}

RegularityReport regularity_check(const GradedAlgebra& a, const NormalCertificate& c) {
  RegularityReport rep;
  int d = c.degree;
  if (det(c.nu).is_zero()) {
    rep.verdict = Verdict::No;
    rep.reason = "normalizing map not invertible";
    return rep;
  }
  for (int j = 0; j + d <= a.max_degree(); ++j) {
    const auto& b = a.basis(j);
    if (b.empty()) continue;
    Matrix l(a.dim(j + d), b.size()), r(a.dim(j + d), b.size());
    for (std::size_t k = 0; k < b.size(); ++k) {
      NcPoly e = NcPoly::monomial(a.ambient(), b[k]);
      Vec lv = a.coords(e * c.w, j + d), rv = a.coords(c.w * e, j + d);
      for (std::size_t i = 0; i < lv.size(); ++i) {
        l(i, k) = lv[i];
        r(i, k) = rv[i];
      }
    }
    if (rank(l) < b.size() || rank(r) < b.size()) {
      rep.verdict = Verdict::No;
      rep.reason = "zero divisor in degree " + std::to_string(j);
      return rep;
    }
  }
  GradedAlgebra q = a.quotient({c.w});
  std::vector<long> f(d + 1, 0);
  f[0] = 1;
  f[d] = -1;
  auto expect = series_mul(f, a.hilbert());
  for (std::size_t i = 0; i < expect.size(); ++i)
    if (long(q.hilbert()[i]) != expect[i]) {
      rep.verdict = Verdict::Unknown;
      rep.reason = "hilbert prefix of quotient disagrees";
      return rep;
    }
  rep.certified_to = a.max_degree();
  const auto& h = a.hilbert();
  bool conic_dual = d == 1 && h.size() > 3 && h[1] == 3;
  for (std::size_t i = 2; conic_dual && i < h.size(); ++i) conic_dual = h[i] == 4;
  if (conic_dual && !dual_quotient_certificate(a, c.w)) {
    rep.verdict = Verdict::No;
    rep.reason = "dual of the quotient is not a nondegenerate single relation";
    return rep;
  }
  rep.verdict = Verdict::Yes;
  rep.reason = conic_dual ? "dual quotient certificate" : "injective through truncation";
  return rep;
}

RegularityReport regular_normal_sequence(const GradedAlgebra& a, const std::vector<NcPoly>& seq) {
  RegularityReport rep;
  GradedAlgebra b = a;
  std::vector<long> factor = {1};
  for (std::size_t i = 0; i < seq.size(); ++i) {
    NcPoly f = b.reduce(embed(seq[i], a.ambient()));
    if (f.is_zero()) {
      rep.verdict = Verdict::No;
      rep.reason = "element " + std::to_string(i) + " is zero in the quotient";
      return rep;
    }
    if (!try_normalize(b, f)) {
      rep.verdict = Verdict::No;
      rep.reason = "element " + std::to_string(i) + " not normal";
      return rep;
    }
    int d = seq[i].degree();
    std::vector<long> nf(factor.size() + d, 0);
    for (std::size_t k = 0; k < factor.size(); ++k) {
      nf[k] += factor[k];
      nf[k + d] -= factor[k];
    }
    factor = nf;
    b = b.quotient({f});
  }
  auto expect = series_mul(factor, a.hilbert());
  for (std::size_t i = 0; i < expect.size(); ++i)
    if (long(b.hilbert()[i]) != expect[i]) {
      rep.verdict = Verdict::No;
      rep.reason = "hilbert prefix differs in degree " + std::to_string(i);
      return rep;
    }
  rep.verdict = Verdict::Yes;
  rep.certified_to = a.max_degree();
  rep.reason = "hilbert prefix matches";
  return rep;
}

namespace {

// Linear forms in (a1, a2, a3) as 4-variable polynomials; the fourth is the auxiliary t.
std::vector<std::vector<CommPoly>> coefficient_matrix(const GradedAlgebra& a, bool left) {
  const auto& g = a.basis(1);
  std::size_t m = a.dim(2);
  std::vector<std::vector<CommPoly>> mat(m, std::vector<CommPoly>(3, CommPoly(4)));
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 3; ++k) {
      Word w = left ? Word{g[k][0], g[j][0]} : Word{g[j][0], g[k][0]};
      Vec v = a.coords(NcPoly::monomial(a.ambient(), w), 2);
      for (std::size_t i = 0; i < m; ++i)
        if (!v[i].is_zero()) mat[i][j] += CommPoly::var(4, k) * v[i];
    }
  return mat;
}

// Multiplication by sum_t v_t basis[t] from degree d to degree d + e, entries linear in v_0.. (nvars total).
std::vector<std::vector<CommPoly>> generic_mult(const GradedAlgebra& a, const std::vector<NcPoly>& basis, int d,
                                                bool left, std::size_t nvars) {
  int e = basis[0].degree();
  std::size_t src = a.dim(d), dst = a.dim(d + e);
  std::vector<std::vector<CommPoly>> m(dst, std::vector<CommPoly>(src, CommPoly(nvars)));
  for (std::size_t j = 0; j < src; ++j) {
    NcPoly b = NcPoly::monomial(a.ambient(), a.basis(d)[j]);
    for (std::size_t t = 0; t < basis.size(); ++t) {
      Vec c = a.coords(left ? a.mul(basis[t], b) : a.mul(b, basis[t]), d + e);
      for (std::size_t i = 0; i < dst; ++i)
        if (!c[i].is_zero()) m[i][j] += CommPoly::var(nvars, t) * c[i];
    }
  }
  return m;
}

std::vector<std::vector<CommPoly>> drop_row(const std::vector<std::vector<CommPoly>>& m, std::size_t r) {
  std::vector<std::vector<CommPoly>> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (i != r) out.push_back(m[i]);
  return out;
}

std::vector<std::vector<CommPoly>> bordered(const std::vector<std::vector<CommPoly>>& m,
                                            const std::vector<std::vector<CommPoly>>& other, std::size_t j) {
  auto out = m;
  for (std::size_t i = 0; i < m.size(); ++i) out[i].push_back(other[i][j]);
  return out;
}

}  // namespace

NormalSearch find_normal_degree1(const GradedAlgebra& a) {
  if (a.dim(1) != 3 || a.max_degree() < 2 || a.dim(2) != 4)
    throw Error(ErrorKind::Precondition, "degree-1 search needs dim A_1 = 3 and dim A_2 = 4");
  FieldSpec field = a.ambient()->field;
  auto ml = coefficient_matrix(a, true), mr = coefficient_matrix(a, false);
  std::vector<CommPoly> quartics;
  for (std::size_t j = 0; j < 3; ++j) {
    quartics.push_back(det_poly(bordered(ml, mr, j)));
    quartics.push_back(det_poly(bordered(mr, ml, j)));
  }
  NormalSearch out;
  std::vector<Vec> candidates;
  auto strip_t = [](std::vector<CommPoly> ps) {
    std::vector<CommPoly> r;
    for (auto& p : ps) {
      CommPoly q(3);
      for (auto& [m, c] : p.terms()) q.add_term(Mono{m[0], m[1], m[2]}, c);
      r.push_back(q);
    }
    return r;
  };
  bool all_zero = true;
  for (auto& q : quartics)
    if (!q.is_zero()) all_zero = false;
  SolveResult base;
  if (all_zero)
    base.complete = false;
  else
    base = projective_points(strip_t(quartics), 3, field);
  if (base.complete) {
    candidates = base.points;
  } else {
    bool complete = true;
    std::string note;
    for (std::size_t r = 0; r < 4; ++r) {
      CommPoly minor = det_poly(drop_row(ml, r));
      if (minor.is_zero()) continue;
      std::vector<CommPoly> sys = quartics;
      sys.push_back(CommPoly::constant(4, 1) - CommPoly::var(4, 3) * minor);
      SolveResult s = projective_points(sys, 3, field);
      if (!s.complete) {
        complete = false;
        note = s.note;
      }
      for (auto& p : s.points) candidates.push_back({p[0], p[1], p[2]});
    }
    if (!complete && a.max_degree() >= 3 && a.dim(3) == 4) {
      // Regular elements also act injectively on both sides in degree 2.
      std::vector<NcPoly> gens;
      for (auto& w : a.basis(1)) gens.push_back(NcPoly::monomial(a.ambient(), w));
      CommPoly g = det_poly(generic_mult(a, gens, 2, true, 4)) * det_poly(generic_mult(a, gens, 2, false, 4));
      std::vector<CommPoly> lm, rm;
      for (std::size_t r = 0; r < 4; ++r) {
        lm.push_back(det_poly(drop_row(ml, r)));
        rm.push_back(det_poly(drop_row(mr, r)));
      }
      complete = true;
      candidates.clear();
      if (!g.is_zero())
        for (auto& l : lm)
          for (auto& rr : rm) {
            CommPoly h = l * rr * g;
            if (h.is_zero()) continue;
            std::vector<CommPoly> sys = quartics;
            sys.push_back(CommPoly::constant(4, 1) - CommPoly::var(4, 3) * h);
            SolveResult s = projective_points(sys, 3, field);
            if (!s.complete) {
              complete = false;
              note = s.note;
            }
            for (auto& p : s.points) candidates.push_back({p[0], p[1], p[2]});
          }
    }
    if (!complete) {
      out.complete = false;
      out.note = "search incomplete over this field (" + note + ")";
      for (long i = -2; i <= 2; ++i)
        for (long j = -2; j <= 2; ++j)
          for (long k = -2; k <= 2; ++k) {
            long first = i ? i : (j ? j : k);
            if (first == 1) candidates.push_back({Scalar(i), Scalar(j), Scalar(k)});
          }
    }
  }
  std::vector<Vec> seen;
  const auto& g = a.basis(1);
  for (auto& p : candidates) {
    bool dup = false;
    for (auto& s : seen)
      if (s == p) dup = true;
    if (dup) continue;
    seen.push_back(p);
    NcPoly w(a.ambient());
    for (std::size_t k = 0; k < 3; ++k) w.add_term(g[k], p[k]);
    if (w.is_zero()) continue;
    auto c = try_normalize(a, w);
    if (!c) continue;
    if (regularity_check(a, *c).verdict != Verdict::Yes) continue;
    out.regular.push_back(*c);
  }
  std::stable_sort(out.regular.begin(), out.regular.end(),
                   [](const NormalCertificate& x, const NormalCertificate& y) { return x.central && !y.central; });
  return out;
}

namespace {

// All maximal minors of a rows x cols matrix of forms (rows >= cols) vanish identically.
bool rank_deficient(const std::vector<std::vector<CommPoly>>& m, std::size_t cols) {
  std::size_t rows = m.size();
  if (rows < cols) return true;
  std::vector<bool> pick(rows, false);
  std::fill(pick.begin(), pick.begin() + cols, true);
  do {
    std::vector<std::vector<CommPoly>> sub;
    for (std::size_t i = 0; i < rows; ++i)
      if (pick[i]) sub.push_back(m[i]);
    if (!det_poly(sub).is_zero()) return false;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return true;
}

}  // namespace

bool span_has_no_regular(const GradedAlgebra& a, const std::vector<NcPoly>& basis) {
  if (basis.empty()) return true;
  int e = basis[0].degree();
  for (int d = 0; d + e <= a.max_degree(); ++d) {
    if (a.dim(d) == 0) break;
    for (bool left : {true, false})
      if (rank_deficient(generic_mult(a, basis, d, left, basis.size()), a.dim(d))) return true;
  }
  return false;
}

}  // namespace ncconic

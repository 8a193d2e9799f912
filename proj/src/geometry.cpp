#include "ncconic/geometry.hpp"

#include <algorithm>

namespace ncconic {

namespace {

void require_three(const std::vector<NcPoly>& rels) {
  for (const auto& f : rels) {
    if (f.ambient()->ngens() != 3) throw Error(ErrorKind::Precondition, "point schemes need 3 generators");
    for (const auto& [w, c] : f.terms())
      if (w.size() != 2) throw Error(ErrorKind::NotQuadratic, f.str());
  }
}

}  // namespace

FormMatrix k_matrix(const std::vector<NcPoly>& relations) {
  require_three(relations);
  FormMatrix k(3, std::vector<CommPoly>(relations.size(), CommPoly(3)));
  for (std::size_t col = 0; col < relations.size(); ++col)
    for (const auto& [w, c] : relations[col].terms()) k[w[0]][col] += CommPoly::var(3, w[1]) * c;
  return k;
}

std::vector<CommPoly> minors_ideal(const FormMatrix& k) {
  std::size_t m = k.empty() ? 0 : k[0].size();
  std::vector<CommPoly> out;
  for (std::size_t del = m; del-- > 0;) {
    std::vector<std::vector<CommPoly>> sq(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (j != del) sq[i].push_back(k[i][j]);
    out.push_back(det_poly(sq));
  }
  return out;
}

std::optional<Vec> sigma_at(const std::vector<NcPoly>& relations, const Vec& p) {
  require_three(relations);
  auto mins = minors_ideal(k_matrix(relations));
  for (const auto& g : mins)
    if (!g.eval(p).is_zero()) throw Error(ErrorKind::PointNotOnScheme, "point does not annihilate the minors");
  Matrix m(relations.size(), 3);
  for (std::size_t k = 0; k < relations.size(); ++k)
    for (const auto& [w, c] : relations[k].terms()) m(k, w[1]) += c * p[w[0]];
  auto ker = kernel(m);
  if (ker.size() != 1) return std::nullopt;
  return normalize_point(ker[0]);
}

Vec normalize_point(const Vec& p) {
  Vec q = p;
  for (const auto& c : p)
    if (!c.is_zero()) {
      Scalar inv = c.inverse();
      for (auto& x : q) x *= inv;
      break;
    }
  return q;
}

bool same_point(const Vec& p, const Vec& q) { return normalize_point(p) == normalize_point(q); }

PointScheme point_scheme(const std::vector<NcPoly>& relations, FieldSpec field) {
  PointScheme ps;
  ps.gens = minors_ideal(k_matrix(relations));
  bool all_zero = std::all_of(ps.gens.begin(), ps.gens.end(), [](const CommPoly& g) { return g.is_zero(); });
  if (all_zero) {
    ps.note = "minors vanish identically";
    return ps;
  }
  SolveResult s = projective_points(ps.gens, 3, field);
  if (!s.complete) {
    ps.note = s.note;
    return ps;
  }
  for (auto& p : s.points) ps.points.push_back(normalize_point(p));
  ps.finite = true;
  for (const auto& p : ps.points) {
    auto q = sigma_at(relations, p);
    if (!q) {
      ps.finite = false;
      ps.note = "sigma indeterminate";
      ps.sigma.clear();
      return ps;
    }
    auto it = std::find(ps.points.begin(), ps.points.end(), *q);
    if (it == ps.points.end()) {
      ps.finite = false;
      ps.note = "sigma leaves the solved points";
      ps.sigma.clear();
      return ps;
    }
    ps.sigma.push_back(std::size_t(it - ps.points.begin()));
  }
  return ps;
}

std::vector<std::size_t> cycle_type(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> rich_line_sets(const std::vector<Vec>& pts) {
  std::vector<std::vector<std::size_t>> lines;
  auto collinear = [&](std::size_t a, std::size_t b, std::size_t c) {
    Matrix m = Matrix::from_rows({pts[a], pts[b], pts[c]}, 3);
    return det(m).is_zero();
  };
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      std::vector<std::size_t> on = {a, b};
      for (std::size_t c = 0; c < pts.size(); ++c)
        if (c != a && c != b && collinear(a, b, c)) on.push_back(c);
      if (on.size() < 3) continue;
      std::sort(on.begin(), on.end());
      if (std::find(lines.begin(), lines.end(), on) == lines.end()) lines.push_back(on);
    }
  return lines;
}

std::size_t rich_lines(const std::vector<Vec>& pts) { return rich_line_sets(pts).size(); }

bool scheme_inside(const std::vector<CommPoly>& minors, const CommPoly& c) {
  for (std::size_t chart = 0; chart < 3; ++chart) {
    std::vector<CommPoly> sys;
    auto lift = [&](const CommPoly& p) {
      CommPoly q(4), fixed = p.substitute(chart, Scalar(1));
      for (const auto& [m, v] : fixed.terms()) q.add_term(Mono{m[0], m[1], m[2], 0}, v);
      return q;
    };
    for (const auto& g : minors) sys.push_back(lift(g));
    sys.push_back(CommPoly::constant(4, 1) - CommPoly::var(4, 3) * lift(c));
    auto gb = groebner_lex(sys);
    if (!(gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero())) return false;
  }
  return true;
}

}  // namespace ncconic

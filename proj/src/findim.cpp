#include "ncconic/findim.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "ncconic/galgebra.hpp"
#include "ncconic/parse.hpp"

namespace ncconic {

Vec FiniteAlgebra::basis_vector(std::size_t i) const {
  Vec v(dim());
  v[i] = 1;
  return v;
}

Vec FiniteAlgebra::mul(const Vec& x, const Vec& y) const {
  Vec out(dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < dim(); ++b) {
      if (y[b].is_zero()) continue;
      Scalar s = x[a] * y[b];
      const Vec& t = table[a][b];
      for (std::size_t c = 0; c < dim(); ++c)
        if (!t[c].is_zero()) out[c] += s * t[c];
    }
  }
  return out;
}

Matrix FiniteAlgebra::left_matrix(const Vec& x) const {
  Matrix m(dim(), dim());
  for (std::size_t b = 0; b < dim(); ++b) {
    Vec p = mul(x, basis_vector(b));
    for (std::size_t c = 0; c < dim(); ++c) m(c, b) = p[c];
  }
  return m;
}

bool FiniteAlgebra::is_associative() const {
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = 0; b < dim(); ++b)
      for (std::size_t c = 0; c < dim(); ++c) {
        Vec l = mul(table[a][b], basis_vector(c));
        Vec r = mul(basis_vector(a), table[b][c]);
        if (l != r) return false;
      }
  return true;
}

bool FiniteAlgebra::is_unital() const {
  for (std::size_t a = 0; a < dim(); ++a) {
    Vec e = basis_vector(a);
    if (mul(unit, e) != e || mul(e, unit) != e) return false;
  }
  return true;
}

FiniteAlgebra FiniteAlgebra::change_basis(const Matrix& p) const {
  auto inv = inverse(p.transpose());
  if (!inv) throw Error(ErrorKind::SingularMatrix, "basis change");
  FiniteAlgebra out;
  out.field = field;
  for (std::size_t i = 0; i < dim(); ++i) out.labels.push_back("f" + std::to_string(i + 1));
  out.table.assign(dim(), std::vector<Vec>(dim()));
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = 0; b < dim(); ++b) out.table[a][b] = (*inv) * mul(p.row(a), p.row(b));
  out.unit = (*inv) * unit;
  return out;
}

namespace {

std::string vec_str(const std::vector<std::string>& labels, const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string c = v[i].str();
    bool neg = c[0] == '-' && !v[i].compound();
    if (neg) c = c.substr(1);
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    if (v[i].compound()) c = "(" + c + ")";
    if (c == "1") s += labels[i];
    else if (labels[i] == "1") s += c;
    else s += c + "*" + labels[i];
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string FiniteAlgebra::str() const {
  std::ostringstream os;
  os << "dim " << dim() << " over " << field.name() << "\n";
  os << "basis:";
  for (const auto& l : labels) os << " " << l;
  os << "\nunit: " << vec_str(labels, unit) << "\n";
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = 0; b < dim(); ++b)
      os << labels[a] << " . " << labels[b] << " = " << vec_str(labels, table[a][b]) << "\n";
  return os.str();
}

namespace {

struct Closure {
  std::vector<Word> words;
  std::vector<Vec> images;
  bool ok = false;
};

// Words spanning the dehomogenized algebra, tested for independence by their images u * t^(m - |u|).
Closure word_closure(const GradedAlgebra& b, std::size_t ngens, int m) {
  Closure c;
  Matrix basis(0, b.dim(m));
  Echelon ech;
  auto image = [&](const Word& u) {
    Word w = u;
    w.resize(m, Letter(ngens));
    return b.coords(NcPoly::monomial(b.ambient(), w), m);
  };
  auto try_add = [&](const Word& u) {
    Vec v = image(u);
    if (is_zero(reduce_against(ech, v))) return false;
    c.words.push_back(u);
    c.images.push_back(v);
    basis.append_row(v);
    ech = rref(basis);
    return true;
  };
  try_add(Word{});
  for (std::size_t i = 0; i < c.words.size(); ++i) {
    for (std::size_t g = 0; g < ngens; ++g) {
      Word u = c.words[i];
      u.push_back(Letter(g));
      if (int(u.size()) * 2 > m) return c;
      try_add(u);
    }
  }
  c.ok = true;
  return c;
}

}  // namespace

FiniteAlgebra from_presentation(const AmbientPtr& amb, const std::vector<NcPoly>& relations, int bound) {
  std::string tname = "t";
  while (std::find(amb->names.begin(), amb->names.end(), tname) != amb->names.end()) tname += "_";
  AmbientPtr ext = extend_ambient(amb, tname);
  std::size_t n = amb->ngens();
  NcPoly t = NcPoly::gen(ext, n);
  std::vector<NcPoly> rels;
  for (const auto& f : relations) {
    if (f.is_zero()) continue;
    int d = f.degree();
    NcPoly h(ext);
    for (const auto& [w, c] : f.terms()) {
      Word u = w;
      u.resize(d, Letter(n));
      h.add_term(u, c);
    }
    rels.push_back(h);
  }
  for (std::size_t i = 0; i < n; ++i) rels.push_back(commutator(NcPoly::gen(ext, i), t));
  for (int m = 4; m <= 2 * bound + 2; m += 2) {
    GradedAlgebra b(Presentation{ext, rels, "homogenized"}, m + 2);
    Closure c = word_closure(b, n, m);
    if (!c.ok) continue;
    Closure c2 = word_closure(b, n, m + 2);
    if (!c2.ok || c2.words.size() != c.words.size()) continue;
    // Structure constants at level m + 2.
    Matrix cols(b.dim(m + 2), c2.words.size());
    for (std::size_t j = 0; j < c2.words.size(); ++j)
      for (std::size_t i = 0; i < b.dim(m + 2); ++i) cols(i, j) = c2.images[j][i];
    FiniteAlgebra fa;
    fa.field = amb->field;
    for (const auto& w : c2.words) fa.labels.push_back(w.empty() ? "1" : word_str(*amb, w));
    fa.table.assign(c2.words.size(), std::vector<Vec>(c2.words.size()));
    bool solved = true;
    for (std::size_t a = 0; a < c2.words.size() && solved; ++a)
      for (std::size_t bb = 0; bb < c2.words.size() && solved; ++bb) {
        Word u = c2.words[a];
        u.insert(u.end(), c2.words[bb].begin(), c2.words[bb].end());
        if (int(u.size()) > m + 2) {
          solved = false;
          break;
        }
        u.resize(m + 2, Letter(n));
        auto s = solve(cols, b.coords(NcPoly::monomial(ext, u), m + 2));
        if (!s) solved = false;
        else fa.table[a][bb] = *s;
      }
    if (!solved) continue;
    fa.unit = fa.basis_vector(0);
    return fa;
  }
  throw Error(ErrorKind::NotFiniteDimensional, "no stable word closure within the bound");
}

FrobeniusReport is_frobenius(const FiniteAlgebra& a) {
  std::size_t n = a.dim();
  if (n > 8) throw Error(ErrorKind::Precondition, "Frobenius test limited to dimension 8");
  std::vector<std::vector<CommPoly>> g(n, std::vector<CommPoly>(n, CommPoly(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c = 0; c < n; ++c)
        if (!a.table[i][j][c].is_zero()) g[i][j] += CommPoly::var(n, c) * a.table[i][j][c];
  FrobeniusReport rep;
  rep.gram_det = det_poly(g);
  rep.frobenius = !rep.gram_det.is_zero();
  if (!rep.frobenius) return rep;
  for (long r = 0;; ++r) {
    std::vector<long> v(n, -r);
    while (true) {
      long mx = 0;
      for (long x : v) mx = std::max(mx, std::labs(x));
      if (mx == r) {
        Vec phi(n);
        for (std::size_t i = 0; i < n; ++i) phi[i] = Scalar(v[i]);
        if (!rep.gram_det.eval(phi).is_zero()) {
          rep.witness = phi;
          return rep;
        }
      }
      std::size_t k = 0;
      while (k < n && v[k] == r) v[k++] = -r;
      if (k == n) break;
      ++v[k];
    }
  }
}

std::vector<Vec> radical(const FiniteAlgebra& a) {
  std::size_t n = a.dim();
  Matrix t(n, n);  // t(a, b) = tr(L_{e_b e_a})
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix l = a.left_matrix(a.table[j][i]);
      Scalar tr;
      for (std::size_t k = 0; k < n; ++k) tr += l(k, k);
      t(i, j) = tr;
    }
  return kernel(t);
}

namespace {

std::vector<Vec> span_basis(const std::vector<Vec>& vs, std::size_t n) {
  if (vs.empty()) return {};
  Matrix m = Matrix::from_rows(vs, n);
  Echelon e = rref(m);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < e.reduced.rows(); ++i) out.push_back(e.reduced.row(i));
  return out;
}

std::size_t center_dim(const FiniteAlgebra& a) {
  std::size_t n = a.dim();
  Matrix m(0, n);
  for (std::size_t b = 0; b < n; ++b) {
    Matrix rows(n, n);
    for (std::size_t x = 0; x < n; ++x) {
      Vec d = a.table[x][b];
      const Vec& e = a.table[b][x];
      for (std::size_t c = 0; c < n; ++c) rows(c, x) = d[c] - e[c];
    }
    for (std::size_t c = 0; c < n; ++c) m.append_row(rows.row(c));
  }
  return kernel(m).size();
}

// Annihilator functionals of a subspace: rows q with q . v = 0 for v in the span.
Matrix annihilator(const std::vector<Vec>& span, std::size_t n) {
  Matrix m = span.empty() ? Matrix(0, n) : Matrix::from_rows(span, n);
  std::vector<Vec> ker = span.empty() ? std::vector<Vec>{} : kernel(m);
  if (span.empty())
    for (std::size_t i = 0; i < n; ++i) {
      Vec e(n);
      e[i] = 1;
      ker.push_back(e);
    }
  return ker.empty() ? Matrix(0, n) : Matrix::from_rows(ker, n);
}

// dim of the center of A/J.
std::size_t quotient_center(const FiniteAlgebra& a, const std::vector<Vec>& j) {
  std::size_t n = a.dim();
  Matrix q = annihilator(j, n);
  Matrix m(0, n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t r = 0; r < q.rows(); ++r) {
      Vec row(n);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t c = 0; c < n; ++c) row[x] += q(r, c) * (a.table[x][b][c] - a.table[b][x][c]);
      m.append_row(row);
    }
  std::size_t k = m.rows() == 0 ? n : kernel(m).size();
  return k - j.size();
}

// Complement of the radical square inside the radical, and a spanning vector of J^2.
struct RadicalSplit {
  std::vector<Vec> top;  // basis of a complement of J^2 in J
  Vec s;                 // J^2 = <s>
  std::size_t pivot = 0;
};

RadicalSplit split_radical(const std::vector<Vec>& j, const std::vector<Vec>& j2, std::size_t n) {
  RadicalSplit r;
  r.s = j2[0];
  while (r.s[r.pivot].is_zero()) ++r.pivot;
  Matrix m = Matrix::from_rows(j2, n);
  Echelon e = rref(m);
  for (const auto& v : j) {
    if (is_zero(reduce_against(e, v))) continue;
    r.top.push_back(v);
    m.append_row(v);
    e = rref(m);
  }
  return r;
}

Matrix product_form(const FiniteAlgebra& a, const RadicalSplit& r) {
  std::size_t k = r.top.size();
  Matrix p(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) p(i, j) = a.mul(r.top[i], r.top[j])[r.pivot] / r.s[r.pivot];
  return p;
}

std::optional<Scalar> sqrt_in_field(const Scalar& x, FieldSpec f) {
  if (!x.is_rational()) return std::nullopt;
  auto rat_sqrt = [](const mpq_class& q) -> std::optional<mpq_class> {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    mpz_class a, b;
    mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
    return mpq_class(a, b);
  };
  if (auto s = rat_sqrt(x.a())) return Scalar(*s);
  if (f.is_rational()) return std::nullopt;
  if (auto s = rat_sqrt(x.a() / f.d)) return Scalar(0, *s, f.d);
  return std::nullopt;
}

}  // namespace

std::vector<Vec> product_space(const FiniteAlgebra& a, const std::vector<Vec>& u, const std::vector<Vec>& v) {
  std::vector<Vec> prods;
  for (const auto& x : u)
    for (const auto& y : v) prods.push_back(a.mul(x, y));
  return span_basis(prods, a.dim());
}

AlgebraInvariants invariants(const FiniteAlgebra& a) {
  AlgebraInvariants inv;
  std::size_t n = a.dim();
  inv.commutative = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a.table[i][j] != a.table[j][i]) inv.commutative = false;
  inv.center = center_dim(a);
  auto j = span_basis(radical(a), n);
  auto j2 = product_space(a, j, j);
  auto j3 = product_space(a, j2, j);
  inv.rad = j.size();
  inv.rad2 = j2.size();
  inv.rad3 = j3.size();
  inv.blocks = quotient_center(a, j);
  std::size_t semisimple = n - j.size();
  if (inv.blocks == semisimple) inv.block_dims.assign(inv.blocks, 1);
  else if (inv.blocks == 1) inv.block_dims = {semisimple};
  else inv.block_dims = {semisimple - inv.blocks + 1};  // one matrix block among points; unreachable at dim 4
  if (j2.size() == 1) inv.form_rank = rank([&] {
    RadicalSplit r = split_radical(j, j2, n);
    Matrix p = product_form(a, r), s(p.rows(), p.cols());
    for (std::size_t x = 0; x < p.rows(); ++x)
      for (std::size_t y = 0; y < p.cols(); ++y) s(x, y) = p(x, y) + p(y, x);
    return s;
  }());
  return inv;
}

std::string AlgebraInvariants::str() const {
  std::ostringstream os;
  os << (commutative ? "commutative" : "noncommutative") << ", center " << center << ", J " << rad << ", J^2 "
     << rad2 << ", J^3 " << rad3 << ", blocks";
  for (auto b : block_dims) os << " " << b;
  os << ", form rank " << form_rank;
  return os.str();
}

const char* to_string(FClass c) {
  switch (c) {
    case FClass::K4: return "K4";
    case FClass::U2xK2: return "U2xK2";
    case FClass::U2xU2: return "U2xU2";
    case FClass::U3xK: return "U3xK";
    case FClass::U4: return "U4";
    case FClass::U2V2: return "U2V2";
    case FClass::M2: return "M2";
    case FClass::B: return "B";
    case FClass::C: return "C";
    case FClass::D: return "D";
    case FClass::E: return "E";
  }
  return "?";
}

std::optional<FClass> parse_class(const std::string& s) {
  for (FClass c : {FClass::K4, FClass::U2xK2, FClass::U2xU2, FClass::U3xK, FClass::U4, FClass::U2V2, FClass::M2,
                   FClass::B, FClass::C, FClass::D, FClass::E})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

std::string Classification::str() const {
  std::string s = to_string(cls);
  if (cls == FClass::E) {
    if (mu) s += " {" + mu->first.str() + ", " + mu->second.str() + "}";
    else s += " (mu + 1/mu = " + mu_sum.str() + ")";
  }
  return s;
}

const std::vector<ReferenceAlgebra>& reference_algebras() {
  static std::vector<ReferenceAlgebra> refs;
  static std::once_flag once;
  std::call_once(once, [] {
    struct Src {
      FClass cls;
      const char* field;
      const char* rels;
    };
    const Src srcs[] = {
        {FClass::K4, "Q", "x*y - y*x; x^2 - 1; y^2 - 1"},
        {FClass::U2xK2, "Q", "x*y - y*x; x^2 - y - 1; y^2 - 1"},
        {FClass::U3xK, "Q(sqrt(3))", "x*y - y*x; x^2 - 2/sqrt(3)*y - 1; y^2 - 2/sqrt(3)*x - 1"},
        {FClass::U2xU2, "Q", "x*y - y*x; x^2; y^2 - 1"},
        {FClass::U4, "Q", "x*y - y*x; x^2; y^2 - x"},
        {FClass::U2V2, "Q", "x*y - y*x; x^2; y^2"},
        {FClass::M2, "Q", "x*y + y*x; x^2 + 1; y^2 + 1"},
        {FClass::B, "Q", "x*y + y*x; x^2; y^2 + 1"},
        {FClass::C, "Q", "x*y + y*x; x^2 + y*x; y^2"},
        {FClass::D, "Q", "x*y + y*x; x^2; y^2"},
        {FClass::E, "Q", "x*y - 2*y*x; x^2; y^2"},
    };
    for (const auto& s : srcs) {
      auto amb = make_ambient({"x", "y"}, parse_field(s.field));
      std::vector<NcPoly> rels;
      for (const auto& r : split(s.rels, ';')) rels.push_back(parse_poly(r, amb));
      refs.push_back({s.cls, std::string("k<x,y>/(") + s.rels + ") over " + s.field, from_presentation(amb, rels)});
    }
  });
  return refs;
}

const AlgebraInvariants& reference_signature(FClass c) {
  static std::map<FClass, AlgebraInvariants> sigs;
  static std::once_flag once;
  std::call_once(once, [] {
    for (const auto& r : reference_algebras()) sigs[r.cls] = invariants(r.algebra);
  });
  return sigs.at(c);
}

Classification classify(const FiniteAlgebra& a) {
  if (a.dim() != 4) throw Error(ErrorKind::NotFourDimensional, "dimension " + std::to_string(a.dim()));
  if (!is_frobenius(a).frobenius) throw Error(ErrorKind::NotFrobenius, "no nondegenerate form");
  AlgebraInvariants inv = invariants(a);
  std::vector<FClass> hits;
  for (const auto& r : reference_algebras())
    if (reference_signature(r.cls) == inv) hits.push_back(r.cls);
  if (hits.size() != 1)
    throw Error(ErrorKind::SignatureUnmatched, inv.str() + " matches " + std::to_string(hits.size()) + " classes");
  Classification c;
  c.cls = hits[0];
  if (c.cls != FClass::E) return c;
  auto j = span_basis(radical(a), a.dim());
  auto j2 = product_space(a, j, j);
  RadicalSplit r = split_radical(j, j2, a.dim());
  Matrix p = product_form(a, r);
  Scalar half = Scalar(1) / Scalar(2);
  Scalar s01 = (p(0, 1) + p(1, 0)) * half;
  Scalar det_s = p(0, 0) * p(1, 1) - s01 * s01;
  Scalar pf = (p(0, 1) - p(1, 0)) * half;
  if (pf.is_zero()) throw Error(ErrorKind::SignatureUnmatched, "E signature with symmetric product");
  Scalar rr = det_s / (pf * pf);
  c.mu_sum = Scalar(2) * (rr - Scalar(1)) / (rr + Scalar(1));
  Scalar disc = c.mu_sum * c.mu_sum - Scalar(4);
  if (auto sq = sqrt_in_field(disc, a.field)) {
    Scalar m1 = (c.mu_sum + *sq) * half, m2 = (c.mu_sum - *sq) * half;
    if (m1.real_approx() < m2.real_approx()) std::swap(m1, m2);
    c.mu = std::make_pair(m1, m2);
  }
  return c;
}

}  // namespace ncconic

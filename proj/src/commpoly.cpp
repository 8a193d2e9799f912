#include "ncconic/commpoly.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

namespace ncconic {

bool GrLex::operator()(const Mono& a, const Mono& b) const {
  unsigned da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db;
  return a < b;
}

static bool lex_less(const Mono& a, const Mono& b) { return a < b; }

CommPoly CommPoly::constant(std::size_t n, const Scalar& c) {
  CommPoly p(n);
  p.add_term(Mono(n, 0), c);
  return p;
}

CommPoly CommPoly::var(std::size_t n, std::size_t i) {
  CommPoly p(n);
  Mono m(n, 0);
  m[i] = 1;
  p.add_term(m, 1);
  return p;
}

bool CommPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto e : terms_.begin()->first)
    if (e) return false;
  return true;
}

int CommPoly::degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (auto e : terms_.rbegin()->first) d += int(e);
  return d;
}

void CommPoly::add_term(const Mono& m, const Scalar& c) {
  if (c.is_zero()) return;
  if (m.size() != n_) throw Error(ErrorKind::Precondition, "monomial arity");
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar CommPoly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

CommPoly CommPoly::operator-() const {
  CommPoly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  if (n_ != o.n_) throw Error(ErrorKind::Precondition, "variable count mismatch");
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  if (n_ != o.n_) throw Error(ErrorKind::Precondition, "variable count mismatch");
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CommPoly& CommPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  if (a.n_ != b.n_) throw Error(ErrorKind::Precondition, "variable count mismatch");
  CommPoly r(a.n_);
  for (auto& [m, c] : a.terms_)
    for (auto& [k, e] : b.terms_) {
      Mono s = m;
      for (std::size_t i = 0; i < s.size(); ++i) s[i] += k[i];
      r.add_term(s, c * e);
    }
  return r;
}

CommPoly CommPoly::pow(unsigned e) const {
  CommPoly r = constant(n_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Scalar CommPoly::eval(const Vec& p) const {
  if (p.size() != n_) throw Error(ErrorKind::Precondition, "point arity");
  Scalar s;
  for (auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < n_; ++i)
      if (m[i]) t *= p[i].pow(m[i]);
    s += t;
  }
  return s;
}

CommPoly CommPoly::substitute(std::size_t i, const Scalar& v) const {
  CommPoly r(n_);
  for (auto& [m, c] : terms_) {
    Mono k = m;
    unsigned e = k[i];
    k[i] = 0;
    r.add_term(k, e ? c * v.pow(e) : c);
  }
  return r;
}

std::string CommPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Scalar c = it->second;
    bool neg = !c.compound() && (c.is_rational() ? sgn(c.a()) < 0 : sgn(c.b()) < 0);
    if (neg) c = -c;
    s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string mon;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!it->first[i]) continue;
      if (!mon.empty()) mon += "*";
      mon += names.at(i);
      if (it->first[i] > 1) mon += "^" + std::to_string(it->first[i]);
    }
    std::string cs = c.compound() ? "(" + c.str() + ")" : c.str();
    if (mon.empty())
      s += cs;
    else if (c.is_one())
      s += mon;
    else
      s += cs + "*" + mon;
  }
  return s;
}

// ---- Groebner bases ----

namespace {

bool grevlex_less(const Mono& a, const Mono& b) {
  unsigned da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

bool order_less(const Mono& a, const Mono& b, TermOrder o) {
  return o == TermOrder::Lex ? lex_less(a, b) : grevlex_less(a, b);
}

std::pair<Mono, Scalar> lead(const CommPoly& p, TermOrder o) {
  const Mono* best = nullptr;
  const Scalar* c = nullptr;
  for (auto& [m, v] : p.terms())
    if (!best || order_less(*best, m, o)) {
      best = &m;
      c = &v;
    }
  return {*best, *c};
}

std::pair<Mono, Scalar> lex_lead(const CommPoly& p) { return lead(p, TermOrder::Lex); }

struct GPoly {
  CommPoly p;
  Mono lm;
};

bool mono_divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

CommPoly mono_times(const CommPoly& p, const Mono& m, const Scalar& c) {
  CommPoly r(p.nvars());
  for (auto& [k, v] : p.terms()) {
    Mono s = k;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += m[i];
    r.add_term(s, v * c);
  }
  return r;
}

GPoly make_monic(CommPoly p, TermOrder o) {
  auto [m, c] = lead(p, o);
  p *= c.inverse();
  return {std::move(p), m};
}

CommPoly reduce_full(CommPoly f, const std::vector<GPoly>& g, TermOrder o) {
  CommPoly r(f.nvars());
  while (!f.is_zero()) {
    auto [m, c] = lead(f, o);
    bool done = false;
    for (auto& q : g)
      if (mono_divides(q.lm, m)) {
        Mono s = m;
        for (std::size_t i = 0; i < s.size(); ++i) s[i] -= q.lm[i];
        f -= mono_times(q.p, s, c);
        done = true;
        break;
      }
    if (!done) {
      CommPoly t(f.nvars());
      t.add_term(m, c);
      r += t;
      f -= t;
    }
  }
  return r;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono l(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) l[k] = std::max(a[k], b[k]);
  return l;
}

}  // namespace

std::vector<CommPoly> groebner(std::vector<CommPoly> polys, TermOrder order) {
  std::vector<GPoly> g;
  std::size_t n = 0;
  for (auto& p : polys)
    if (!p.is_zero()) {
      n = p.nvars();
      if (p.is_constant()) return {CommPoly::constant(n, 1)};
      g.push_back(make_monic(p, order));
    }
  if (g.empty()) return {};
  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) pending.insert({i, j});
  auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };
  while (!pending.empty()) {
    // Normal strategy: smallest lcm first.
    auto best = pending.begin();
    Mono best_l = mono_lcm(g[best->first].lm, g[best->second].lm);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Mono l = mono_lcm(g[it->first].lm, g[it->second].lm);
      if (order_less(l, best_l, order)) {
        best = it;
        best_l = l;
      }
    }
    auto [i, j] = *best;
    pending.erase(best);
    const Mono &a = g[i].lm, &b = g[j].lm;
    bool coprime = true;
    for (std::size_t k = 0; k < n; ++k)
      if (a[k] && b[k]) coprime = false;
    if (coprime) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k)
      chain = k != i && k != j && mono_divides(g[k].lm, best_l) && !is_pending(i, k) && !is_pending(j, k);
    if (chain) continue;
    Mono ua = best_l, ub = best_l;
    for (std::size_t k = 0; k < n; ++k) {
      ua[k] -= a[k];
      ub[k] -= b[k];
    }
    CommPoly r = reduce_full(mono_times(g[i].p, ua, 1) - mono_times(g[j].p, ub, 1), g, order);
    if (r.is_zero()) continue;
    if (r.is_constant()) return {CommPoly::constant(n, 1)};
    g.push_back(make_monic(r, order));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pending.insert({k, g.size() - 1});
  }
  // Minimize then inter-reduce.
  std::vector<GPoly> mn;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !mono_divides(g[j].lm, g[i].lm)) continue;
      if (g[j].lm != g[i].lm || j < i) redundant = true;
    }
    if (!redundant) mn.push_back(g[i]);
  }
  std::vector<CommPoly> out;
  for (std::size_t i = 0; i < mn.size(); ++i) {
    std::vector<GPoly> others;
    for (std::size_t j = 0; j < mn.size(); ++j)
      if (j != i) others.push_back(mn[j]);
    CommPoly tail = mn[i].p;
    CommPoly lead_term(n);
    lead_term.add_term(mn[i].lm, 1);
    tail -= lead_term;
    out.push_back(lead_term + reduce_full(tail, others, order));
  }
  std::sort(out.begin(), out.end(), [&](const CommPoly& x, const CommPoly& y) {
    return order_less(lead(x, order).first, lead(y, order).first, order);
  });
  return out;
}

std::vector<CommPoly> groebner_lex(std::vector<CommPoly> polys) { return groebner(std::move(polys), TermOrder::Lex); }

CommPoly normal_form(const CommPoly& f, const std::vector<CommPoly>& gb, TermOrder order) {
  std::vector<GPoly> g;
  for (auto& p : gb) g.push_back(make_monic(p, order));
  return reduce_full(f, g, order);
}

CommPoly lex_reduce(const CommPoly& f, const std::vector<CommPoly>& gb) { return normal_form(f, gb, TermOrder::Lex); }

CommPoly divide_exact(const CommPoly& f, const CommPoly& g) {
  if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  auto [gm, gc] = lex_lead(g);
  CommPoly q(f.nvars()), r = f;
  while (!r.is_zero()) {
    auto [m, c] = lex_lead(r);
    if (!mono_divides(gm, m)) throw Error(ErrorKind::Precondition, "not divisible");
    Mono s = m;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] -= gm[i];
    Scalar k = c / gc;
    CommPoly t(f.nvars());
    t.add_term(s, k);
    q += t;
    r -= mono_times(g, s, k);
  }
  return q;
}

bool divides(const CommPoly& g, const CommPoly& f) {
  try {
    divide_exact(f, g);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// ---- univariate roots ----

namespace {

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly umod(UPoly a, const UPoly& b) {
  trim(a);
  Scalar inv = b.back().inverse();
  while (a.size() >= b.size()) {
    Scalar f = a.back() * inv;
    std::size_t s = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= f * b[i];
    trim(a);
  }
  return a;
}

UPoly udiv(UPoly a, const UPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  UPoly q(a.size() - b.size() + 1);
  Scalar inv = b.back().inverse();
  while (a.size() >= b.size()) {
    Scalar f = a.back() * inv;
    std::size_t s = a.size() - b.size();
    q[s] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[s + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return q;
}

UPoly ugcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = umod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Scalar ueval(const UPoly& p, const Scalar& x) {
  Scalar r;
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

using cld = std::complex<long double>;

std::vector<cld> numeric_roots(const std::vector<cld>& c) {
  std::size_t n = c.size() - 1;
  std::vector<cld> z(n);
  long double bound = 0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i] / c[n]));
  bound += 1;
  for (std::size_t i = 0; i < n; ++i)
    z[i] = bound * std::polar(1.0L, (2 * M_PIl * i) / n + 0.4L);
  auto ev = [&](cld x) {
    cld r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
  };
  for (int it = 0; it < 2000; ++it) {
    long double change = 0;
    for (std::size_t i = 0; i < n; ++i) {
      cld den = c[n];
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= (z[i] - z[j]);
      cld dz = ev(z[i]) / den;
      z[i] -= dz;
      change = std::max(change, std::abs(dz));
    }
    if (change < 1e-30L) break;
  }
  return z;
}

std::vector<mpq_class> rationalize(long double x) {
  std::vector<mpq_class> out;
  if (!std::isfinite(x)) return out;
  long double r = x;
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int i = 0; i < 40; ++i) {
    long double a = std::floor(r);
    if (std::fabs(a) > 1e17L) break;
    mpz_class ai = static_cast<long>(a);
    mpz_class h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (k1 > 1000000000) break;
    out.emplace_back(h1, k1);
    out.back().canonicalize();
    long double frac = r - a;
    if (std::fabs(frac) < 1e-18L) break;
    r = 1 / frac;
  }
  return out;
}

std::vector<cld> embed_coeffs(const UPoly& p, int sign) {
  std::vector<cld> c;
  for (auto& s : p) c.emplace_back(s.a().get_d() + sign * (s.real_approx() - s.a().get_d()),
                                   sign * s.imag_approx());
  return c;
}

}  // namespace

RootReport roots_in_field(const UPoly& p0, FieldSpec field) {
  UPoly p = p0;
  trim(p);
  RootReport rep;
  if (p.size() <= 1) return rep;
  UPoly dp;
  for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * Scalar(long(i)));
  UPoly g = ugcd(p, dp);
  if (g.size() > 1) p = udiv(p, g);
  UPoly rest = p;
  auto try_candidate = [&](const Scalar& x) {
    if (rest.size() <= 1) return;
    if (!ueval(rest, x).is_zero()) return;
    for (auto& r : rep.roots)
      if (r == x) return;
    rep.roots.push_back(x);
    rest = udiv(rest, UPoly{-x, Scalar(1)});
  };
  // Linear factors are solved exactly.
  auto exact_linear = [&]() {
    if (rest.size() == 2) try_candidate(-rest[0] / rest[1]);
  };
  exact_linear();
  if (rest.size() > 2) {
    auto z1 = numeric_roots(embed_coeffs(rest, 1));
    long d = field.d;
    if (d == 0) {
      for (auto& z : z1)
        if (std::fabs(z.imag()) < 1e-6L * (1 + std::abs(z)))
          for (auto& q : rationalize(z.real())) try_candidate(Scalar(q));
    } else if (d < 0) {
      long double s = std::sqrt((long double)(-d));
      for (auto& z : z1)
        for (auto& u : rationalize(z.real()))
          for (auto& v : rationalize(z.imag() / s)) try_candidate(Scalar(u, v, d));
    } else {
      long double s = std::sqrt((long double)d);
      auto z2 = numeric_roots(embed_coeffs(rest, -1));
      for (auto& a : z1)
        for (auto& b : z2) {
          if (std::fabs(a.imag()) > 1e-6L * (1 + std::abs(a)) || std::fabs(b.imag()) > 1e-6L * (1 + std::abs(b)))
            continue;
          long double u = (a.real() + b.real()) / 2, v = (a.real() - b.real()) / (2 * s);
          auto us = rationalize(u), vs = rationalize(v);
          if (!us.empty() && !vs.empty()) try_candidate(Scalar(us.back(), vs.back(), d));
          for (auto& uu : us)
            for (auto& vv : vs) try_candidate(Scalar(uu, vv, d));
        }
    }
    exact_linear();
  }
  rep.residue = rest.size() > 1;
  return rep;
}

// ---- solving ----

namespace {

bool depends_only_on(const Mono& m, std::size_t v) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (i != v && m[i]) return false;
  return true;
}

// Minimal polynomial of variable v in the zero-dimensional quotient by gb.
UPoly minimal_polynomial(const std::vector<CommPoly>& gb, std::size_t v, TermOrder order) {
  std::size_t n = gb.front().nvars();
  std::vector<CommPoly> nfs;
  std::map<Mono, std::size_t> index;
  CommPoly power = CommPoly::constant(n, 1);
  for (;;) {
    nfs.push_back(normal_form(power, gb, order));
    for (auto& [m, c] : nfs.back().terms()) index.emplace(m, index.size());
    Matrix a(index.size(), nfs.size());
    for (std::size_t k = 0; k < nfs.size(); ++k)
      for (auto& [m, c] : nfs[k].terms()) a(index[m], k) = c;
    auto ker = kernel(a);
    if (!ker.empty()) {
      Vec c = ker.front();
      Scalar top = c.back();
      UPoly up(c.size());
      for (std::size_t k = 0; k < c.size(); ++k) up[k] = c[k] / top;
      return up;
    }
    power = power * CommPoly::var(n, v);
  }
}

void solve_rec(const std::vector<CommPoly>& polys, std::size_t nfree, FieldSpec field, Vec& partial,
               SolveResult& out) {
  constexpr TermOrder order = TermOrder::GrevLex;
  std::vector<CommPoly> gb = groebner(polys, order);
  if (gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero()) return;
  if (nfree == 0) {
    out.points.push_back(partial);
    return;
  }
  std::size_t v = nfree - 1;
  // Zero-dimensional: each free variable has a pure-power leading monomial.
  for (std::size_t i = 0; i < nfree; ++i) {
    bool found = false;
    for (auto& g : gb) {
      auto lm = lead(g, order).first;
      if (lm[i] > 0 && depends_only_on(lm, i)) found = true;
    }
    if (!found) {
      out.complete = false;
      out.note = "positive-dimensional";
      return;
    }
  }
  UPoly up = minimal_polynomial(gb, v, order);
  RootReport rr = roots_in_field(up, field);
  if (rr.residue) {
    out.complete = false;
    out.note = "irrational residue";
  }
  for (auto& r : rr.roots) {
    std::vector<CommPoly> sub;
    for (auto& g : gb) {
      CommPoly s = g.substitute(v, r);
      if (!s.is_zero()) sub.push_back(s);
    }
    partial[v] = r;
    if (sub.empty() && nfree > 1) {
      out.complete = false;
      out.note = "positive-dimensional";
      continue;
    }
    solve_rec(sub, nfree - 1, field, partial, out);
  }
  partial[v] = Scalar(0);
}

}  // namespace

SolveResult eliminate_small(const std::vector<CommPoly>& polys, FieldSpec field) {
  SolveResult out;
  std::size_t n = 0;
  std::vector<CommPoly> nz;
  for (auto& p : polys)
    if (!p.is_zero()) {
      n = p.nvars();
      nz.push_back(p);
    }
  if (nz.empty()) {
    out.complete = false;
    out.note = "no equations";
    return out;
  }
  Vec partial(n);
  solve_rec(nz, n, field, partial, out);
  for (auto& pt : out.points)
    for (auto& x : pt) x = in_field(x, field);
  return out;
}

SolveResult projective_points(const std::vector<CommPoly>& polys, std::size_t proj_vars, FieldSpec field) {
  SolveResult out;
  if (polys.empty()) throw Error(ErrorKind::ZeroInput, "no equations");
  std::size_t n = polys[0].nvars();
  for (std::size_t chart = 0; chart < proj_vars; ++chart) {
    // x_chart = 1, x_i = 0 for i < chart; remaining variables renumbered.
    std::vector<std::size_t> free_vars;
    for (std::size_t i = chart + 1; i < n; ++i) free_vars.push_back(i);
    std::size_t m = free_vars.size();
    std::vector<CommPoly> sys;
    for (auto& p : polys) {
      CommPoly q(m == 0 ? 1 : m);
      for (auto& [mono, c] : p.terms()) {
        bool zero = false;
        for (std::size_t i = 0; i < chart; ++i)
          if (mono[i]) zero = true;
        if (zero) continue;
        Mono k(m == 0 ? 1 : m, 0);
        for (std::size_t j = 0; j < m; ++j) k[j] = mono[free_vars[j]];
        q.add_term(k, c);
      }
      if (!q.is_zero()) sys.push_back(q);
    }
    std::vector<Vec> affine;
    if (m == 0) {
      bool ok = true;
      for (auto& q : sys)
        if (!q.is_zero()) ok = false;
      if (ok) affine.push_back({});
    } else if (sys.empty()) {
      out.complete = false;
      out.note = "positive-dimensional";
      continue;
    } else {
      SolveResult r = eliminate_small(sys, field);
      if (!r.complete) {
        out.complete = false;
        out.note = r.note;
      }
      affine = r.points;
    }
    for (auto& a : affine) {
      Vec pt(n);
      pt[chart] = in_field(Scalar(1), field);
      for (std::size_t j = 0; j < m; ++j) pt[free_vars[j]] = a[j];
      out.points.push_back(pt);
    }
  }
  return out;
}

CommPoly det_poly(const std::vector<std::vector<CommPoly>>& m) {
  std::size_t n = m.size();
  if (n == 0) throw Error(ErrorKind::Precondition, "empty determinant");
  std::size_t nv = m[0][0].nvars();
  std::unordered_map<unsigned, CommPoly> memo;
  // det of rows [k, n) against the columns in mask.
  std::function<CommPoly(std::size_t, unsigned)> rec = [&](std::size_t k, unsigned mask) -> CommPoly {
    if (k == n) return CommPoly::constant(nv, 1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    CommPoly s(nv);
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      if (!m[k][j].is_zero()) {
        CommPoly t = m[k][j] * rec(k + 1, mask & ~(1u << j));
        if (sign > 0)
          s += t;
        else
          s -= t;
      }
      sign = -sign;
    }
    memo.emplace(mask, s);
    return s;
  };
  return rec(0, (1u << n) - 1);
}

}  // namespace ncconic

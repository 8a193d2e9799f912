#include "ncconic/dataset.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <future>
#include <sstream>
#include <thread>

#include "ncconic/cmap.hpp"
#include "ncconic/geometry.hpp"

namespace ncconic {

bool Section::has(const std::string& key) const {
  return std::any_of(entries.begin(), entries.end(), [&](auto& e) { return e.first == key; });
}

std::string Section::get(const std::string& key) const {
  for (auto& [k, v] : entries)
    if (k == key) return v;
  throw Error(ErrorKind::Parse, "section '" + head + "' (line " + std::to_string(line) + ") has no '" + key + "'");
}

std::string Section::get_or(const std::string& key, const std::string& fallback) const {
  for (auto& [k, v] : entries)
    if (k == key) return v;
  return fallback;
}

std::vector<std::string> Section::all(const std::string& key) const {
  std::vector<std::string> out;
  for (auto& [k, v] : entries)
    if (k == key) out.push_back(v);
  return out;
}

std::vector<Section> read_sections(const std::string& path, const std::string& head_key) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::vector<Section> out;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorKind::Parse, path + ":" + std::to_string(lineno) + ": expected 'key: value'");
    std::string key = trim(line.substr(0, colon)), value = trim(line.substr(colon + 1));
    if (key == head_key) {
      out.push_back(Section{value, lineno, {}});
      continue;
    }
    if (out.empty())
      throw Error(ErrorKind::Parse, path + ":" + std::to_string(lineno) + ": '" + key + "' before the first '" + head_key + "'");
    out.back().entries.emplace_back(key, value);
  }
  return out;
}

std::string data_path(const std::string& file) {
  const char* env = std::getenv("NCCONIC_DATA");
  std::string dir = env && *env ? env : NCCONIC_DATA_DIR;
  return dir + "/" + file;
}

std::vector<Sample> row_samples(const Section& s, FieldSpec field) {
  if (!s.has("param")) return {Sample{}};
  std::vector<Sample> out;
  for (auto& text : s.all("sample")) {
    Sample smp{text, {}};
    for (auto& part : split(text, ',')) {
      auto eq = part.find('=');
      if (eq == std::string::npos) throw Error(ErrorKind::Parse, "sample '" + text + "'");
      smp.values[trim(part.substr(0, eq))] = parse_scalar(trim(part.substr(eq + 1)), field, smp.values);
    }
    out.push_back(std::move(smp));
  }
  if (out.empty()) throw Error(ErrorKind::Parse, "row " + s.head + " has parameters but no sample");
  return out;
}

const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "pass";
    case RowStatus::Fail: return "FAIL";
    case RowStatus::Skipped: return "skipped";
  }
  return "?";
}

void RowReport::add(const std::string& name, bool pass, const std::string& detail) {
  checks.push_back({name, pass, detail});
  if (!pass) status = RowStatus::Fail;
}

const Check* RowReport::find(const std::string& name) const {
  for (auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string RowReport::str(bool verbose) const {
  std::ostringstream os;
  os << "table " << table << " row " << row;
  if (!sample.empty()) os << " [" << sample << "]";
  os << ": " << to_string(status);
  if (status == RowStatus::Skipped && !note.empty()) os << " (" << note << ")";
  std::size_t failed = 0;
  for (auto& c : checks) failed += !c.pass;
  if (status != RowStatus::Skipped) os << " " << checks.size() - failed << "/" << checks.size();
  os << "\n";
  for (auto& c : checks) {
    if (c.pass && !verbose) continue;
    os << "  " << (c.pass ? "ok  " : "FAIL") << " " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  if (verbose && !note.empty() && status != RowStatus::Skipped) os << "  note: " << note << "\n";
  return os.str();
}

std::vector<std::string> table_ids() {
  return {"2", "3", "4", "A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "K", "id"};
}

std::string canonical_table(const std::string& id) {
  std::string t = trim(id);
  if (t.size() == 1 && t[0] >= 'a' && t[0] <= 'k') t[0] = char(t[0] - 'a' + 'A');
  if (t.size() == 1 && t[0] >= 'A' && t[0] <= 'K') return t;
  if (t == "2" || t == "3" || t == "4" || t == "id") return t;
  try {
    std::size_t used = 0;
    int n = std::stoi(t, &used);
    if (used == t.size() && n >= 5 && n <= 15) return std::string(1, char('A' + n - 5));
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::Parse, "unknown table '" + id + "'");
}

namespace {

std::string join(const HilbertPrefix& h, std::size_t upto) {
  std::string s;
  for (std::size_t i = 0; i <= upto && i < h.size(); ++i) s += (i ? "," : "") + std::to_string(h[i]);
  return s;
}

bool prefix_is(const HilbertPrefix& h, const std::vector<std::size_t>& want) {
  if (h.size() < want.size()) return false;
  return std::equal(want.begin(), want.end(), h.begin());
}

struct Built {
  FieldSpec field;
  AmbientPtr amb;
  ParamMap params;

  NcPoly poly(const std::string& text) const { return parse_poly(text, amb, params); }
  std::vector<NcPoly> polys(const std::vector<std::string>& texts) const {
    std::vector<NcPoly> out;
    for (auto& t : texts) out.push_back(poly(t));
    return out;
  }
};

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

Built build(const Section& s, const Sample& smp) {
  Built b;
  b.field = parse_field(s.get("field"));
  b.amb = make_ambient(words(s.get("gens")), b.field);
  b.params = smp.values;
  return b;
}

RowReport start(const Section& s, const std::string& table, const Sample& smp) {
  RowReport r;
  r.table = table;
  r.row = s.head;
  r.sample = smp.text;
  return r;
}

// Runs body, turning an exception into a failed check.
template <class F>
void guarded(RowReport& r, const std::string& stage, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    r.add(stage, false, e.what());
  }
}

std::string mu_str(const Classification& c) {
  if (c.mu) return "{" + c.mu->first.str() + ", " + c.mu->second.str() + "}";
  return "mu + 1/mu = " + c.mu_sum.str();
}

// Does the E-class parameter of c equal {m, 1/m}?
bool mu_matches(const Classification& c, const Scalar& m) {
  if (c.mu) {
    Scalar inv = m.inverse();
    return (c.mu->first == m && c.mu->second == inv) || (c.mu->first == inv && c.mu->second == m);
  }
  return c.mu_sum == m + m.inverse();
}

void class_checks(RowReport& r, const FiniteAlgebra& c, const std::string& expected,
                  const std::optional<Scalar>& mu) {
  r.add("C dim 4", c.dim() == 4, "dim " + std::to_string(c.dim()));
  r.add("C associative", c.is_associative());
  r.add("C unital", c.is_unital());
  r.add("C frobenius", is_frobenius(c).frobenius);
  Classification k = classify(c);
  auto want = parse_class(expected);
  if (!want) throw Error(ErrorKind::Parse, "unknown class '" + expected + "'");
  r.add("class", k.cls == *want, std::string("got ") + to_string(k.cls) + ", expected " + expected);
  if (mu)
    r.add("mu", k.cls == FClass::E && mu_matches(k, *mu),
          "got " + mu_str(k) + ", expected {" + mu->str() + ", " + mu->inverse().str() + "}");
}

std::string element_text(const std::string& s) { return trim(s); }

void rn_rz_checks(RowReport& r, const GradedAlgebra& gd, const Built& b, const std::string& rn,
                  const std::string& rz) {
  std::optional<NormalSearch> search;
  auto searched = [&]() -> const NormalSearch& {
    if (!search) search = find_normal_degree1(gd);
    return *search;
  };
  auto element_check = [&](const std::string& name, const std::string& text, std::optional<bool> central) {
    NcPoly e = b.poly(text);
    auto c = try_normalize(gd, e);
    if (!c) {
      r.add(name + " normal", false, text + " is not normal");
      return;
    }
    r.add(name + " normal", true, text);
    RegularityReport reg = regularity_check(gd, *c);
    r.add(name + " regular", reg.verdict == Verdict::Yes, std::string(to_string(reg.verdict)) + " " + reg.reason);
    if (central) r.add(name + " central", c->central == *central, c->central ? "central" : "not central");
  };
  auto describe = [&](const NormalSearch& s) {
    std::string d = std::to_string(s.regular.size()) + " found";
    for (std::size_t i = 0; i < s.regular.size() && i < 3; ++i)
      d += "; " + s.regular[i].w.str() + (s.regular[i].central ? " (central)" : "");
    if (s.regular.size() > 3) d += "; ...";
    if (!s.complete) d += "; incomplete: " + s.note;
    return d;
  };

  bool rz_is_rn = rz == rn;
  if (rn == "none") {
    const auto& s = searched();
    r.add("rn empty", s.complete && s.regular.empty(), describe(s));
  } else if (rn == "*") {
    const auto& s = searched();
    r.add("rn *", !s.regular.empty(), describe(s));
  } else {
    element_check("rn", element_text(rn), rz == "none" ? std::optional<bool>(false)
                                        : rz_is_rn    ? std::optional<bool>(true)
                                                      : std::nullopt);
  }
  if (rz == "none") {
    if (rn != "none") {
      auto z1 = center_degree(gd, 1);
      if (z1.empty()) {
        r.add("rz empty", true, "no central degree-1 element");
      } else if (span_has_no_regular(gd, z1)) {
        r.add("rz empty", true, "every central degree-1 element is a zero divisor");
      } else {
        const auto& s = searched();
        bool any = std::any_of(s.regular.begin(), s.regular.end(), [](auto& c) { return c.central; });
        r.add("rz empty", s.complete && !any, describe(s));
      }
    }
  } else if (rz == "*") {
    const auto& s = searched();
    bool any = std::any_of(s.regular.begin(), s.regular.end(), [](auto& c) { return c.central; });
    r.add("rz *", any, describe(s));
  } else if (!rz_is_rn) {
    element_check("rz", element_text(rz), true);
  }
}

}  // namespace

RowReport skipped_row(const Section& s, const std::string& table) {
  RowReport r;
  r.table = table;
  r.row = s.head;
  r.status = RowStatus::Skipped;
  r.note = s.get_or("skip", "");
  return r;
}

std::vector<RowReport> verify_conic(const Section& s, int max_degree) {
  std::string table = s.get_or("table", "?");
  if (s.has("skip")) return {skipped_row(s, table)};
  std::vector<RowReport> out;
  FieldSpec field = parse_field(s.get("field"));
  for (auto& smp : row_samples(s, field)) {
    RowReport r = start(s, table, smp);
    guarded(r, "pipeline", [&] {
      Built b = build(s, smp);
      auto rels = b.polys(s.all("rel"));
      if (rels.size() != 4) throw Error(ErrorKind::Parse, "conic rows need 4 relations");
      Presentation a{b.amb, rels, s.head};
      Presentation sp{b.amb, {rels.begin(), rels.begin() + 3}, s.head + " base"};
      NcPoly f = rels[3];

      GradedAlgebra ga(a, max_degree);
      r.add("hilbert A", prefix_is(ga.hilbert(), {1, 3, 5, 7, 9}), join(ga.hilbert(), 4));
      Presentation dual = quadratic_dual(a);
      GradedAlgebra gd(dual, max_degree);
      r.add("hilbert A!", prefix_is(gd.hilbert(), {1, 3, 4, 4, 4}), join(gd.hilbert(), 4));
      r.add("koszul", koszul_series_check(ga.hilbert(), gd.hilbert()),
            "to degree " + std::to_string(std::min(ga.hilbert().size(), gd.hilbert().size()) - 1));

      GradedAlgebra gs(sp, max_degree);
      r.add("base quantum polynomial", gs.hilbert() == polynomial_hilbert(3, gs.max_degree()),
            join(gs.hilbert(), gs.max_degree()));
      auto fc = try_normalize(gs, f);
      r.add("f central regular", fc && fc->central && regularity_check(gs, *fc).verdict == Verdict::Yes,
            f.str());

      if (s.has("dual")) {
        Presentation g{b.amb, b.polys(s.all("dual")), s.head + " dual"};
        r.add("dual span", relation_span_dim(g) == 5 && relation_span_equal(g, dual),
              "printed span dim " + std::to_string(relation_span_dim(g)));
      }
      if (s.has("points")) {
        PointScheme ps = point_scheme(rels, b.field);
        r.add("point count", ps.finite && ps.points.size() == std::stoul(s.get("points")),
              ps.finite ? std::to_string(ps.points.size()) + " points" : "not enumerated: " + ps.note);
      }

      NcPoly fd = dual_element(sp, f, gd);
      auto fdc = try_normalize(gd, fd);
      r.add("dual element central regular",
            fdc && fdc->central && regularity_check(gd, *fdc).verdict == Verdict::Yes, fd.str());

      rn_rz_checks(r, gd, b, s.get("rn"), s.get("rz"));

      CResult c = compute_C(sp, f, max_degree);
      std::optional<Scalar> mu;
      if (s.has("mu")) mu = parse_scalar(s.get("mu"), b.field, b.params);
      class_checks(r, c.algebra, s.get("class"), mu);
      r.note = c.fast_path ? "C(A) via " + c.cert.w.str() : "C(A) via the dual element";
      if (!s.has("dual")) r.note += "; no printed dual";
    });
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RowReport> verify_center(const Section& s, int max_degree) {
  if (s.has("skip")) return {skipped_row(s, "3")};
  std::vector<RowReport> out;
  FieldSpec field = parse_field(s.get("field"));
  for (auto& smp : row_samples(s, field)) {
    RowReport r = start(s, "3", smp);
    guarded(r, "pipeline", [&] {
      Built b = build(s, smp);
      GradedAlgebra gs(Presentation{b.amb, b.polys(s.all("rel")), s.head}, max_degree);
      r.add("quantum polynomial", gs.hilbert() == polynomial_hilbert(3, gs.max_degree()),
            join(gs.hilbert(), gs.max_degree()));
      auto z = center_degree(gs, 2);
      std::vector<Vec> got, want;
      for (auto& p : z) got.push_back(gs.coords(p, 2));
      auto spec = s.all("center");
      if (spec.size() == 1 && spec[0] == "all") {
        for (std::size_t i = 0; i < gs.dim(2); ++i) {
          Vec e(gs.dim(2));
          e[i] = 1;
          want.push_back(e);
        }
      } else if (!(spec.size() == 1 && spec[0] == "0")) {
        for (auto& t : spec) want.push_back(gs.coords(b.poly(t), 2));
      }
      std::string shown;
      for (auto& p : z) shown += (shown.empty() ? "" : "; ") + p.str();
      r.add("center dim", got.size() == (want.empty() ? 0 : rank(Matrix::from_rows(want, gs.dim(2)))),
            "computed dim " + std::to_string(got.size()) + (shown.empty() ? "" : ": " + shown));
      r.add("center span", same_span(got, want, gs.dim(2)));
    });
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

Vec parse_point(const std::string& text, const Built& b) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw Error(ErrorKind::Parse, "point '" + text + "'");
  Vec p;
  for (auto& c : split(t.substr(1, t.size() - 2), ':')) p.push_back(in_field(parse_scalar(trim(c), b.field, b.params), b.field));
  if (p.size() != 3) throw Error(ErrorKind::Parse, "point '" + text + "'");
  return p;
}

CommPoly comm_form(const NcPoly& f) {
  std::size_t n = f.ambient()->ngens();
  CommPoly out(n);
  for (auto& [w, c] : f.terms()) {
    Mono m(n, 0);
    for (auto l : w) ++m[l];
    out.add_term(m, c);
  }
  return out;
}

std::string point_str(const Vec& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ":" : "") + p[i].str();
  return s + ")";
}

std::vector<std::size_t> numbers(const std::string& s) {
  std::vector<std::size_t> out;
  for (auto& w : words(s)) out.push_back(std::stoul(w));
  return out;
}


}  // namespace

std::vector<RowReport> verify_pair(const Section& s, int max_degree) {
  if (s.has("skip")) return {skipped_row(s, "4")};
  std::vector<RowReport> out;
  FieldSpec field = parse_field(s.get("field"));
  for (auto& smp : row_samples(s, field)) {
    RowReport r = start(s, "4", smp);
    guarded(r, "pipeline", [&] {
      Built b = build(s, smp);
      auto rels = b.polys(s.all("rel"));
      GradedAlgebra gs(Presentation{b.amb, {rels.begin(), rels.begin() + 3}, s.head}, max_degree);
      auto fc = try_normalize(gs, rels[3]);
      r.add("f central", fc && fc->central, rels[3].str());

      PointScheme ps = point_scheme(rels, b.field);
      for (auto& p : ps.points) {
        bool zero = std::all_of(ps.gens.begin(), ps.gens.end(), [&](auto& m) { return m.eval(p).is_zero(); });
        if (!zero) r.add("points on minors", false, point_str(p));
      }
      if (s.has("points")) {
        r.add("finite", ps.finite, ps.note);
        std::size_t want = std::stoul(s.get("points"));
        std::string pts;
        for (auto& p : ps.points) pts += (pts.empty() ? "" : " ") + point_str(p);
        r.add("point count", ps.points.size() == want,
              std::to_string(ps.points.size()) + " points " + pts);
        std::vector<std::size_t> sorted = ps.sigma;
        std::sort(sorted.begin(), sorted.end());
        bool perm = sorted.size() == ps.points.size();
        for (std::size_t i = 0; perm && i < sorted.size(); ++i) perm = sorted[i] == i;
        r.add("sigma injective", perm);
        auto cyc = cycle_type(ps.sigma);
        std::string cs;
        for (auto c : cyc) cs += (cs.empty() ? "" : " ") + std::to_string(c);
        r.add("sigma cycles", cyc == numbers(s.get("cycles")), cs);
        bool involutive_part = false;
        for (std::size_t i = 0; i < ps.sigma.size(); ++i) involutive_part |= ps.sigma[ps.sigma[i]] == i;
        r.add("sigma squared component", involutive_part);
        auto lines = rich_line_sets(ps.points);
        r.add("collinear triples", lines.size() == std::stoul(s.get("lines3")),
              std::to_string(lines.size()) + " lines");
        if (s.has("shared")) {
          std::vector<std::size_t> shared;
          for (std::size_t i = 0; i < ps.sigma.size(); ++i) {
            std::size_t j = ps.sigma[i];
            if (j <= i || ps.sigma[j] != i) continue;
            std::size_t n = 0;
            for (auto& l : lines)
              n += std::count(l.begin(), l.end(), i) && std::count(l.begin(), l.end(), j);
            shared.push_back(n);
          }
          std::sort(shared.begin(), shared.end());
          std::string ss;
          for (auto c : shared) ss += (ss.empty() ? "" : " ") + std::to_string(c);
          r.add("swap configuration", shared == numbers(s.get("shared")), ss);
        }
      } else {
        r.add("positive dimensional", !ps.finite, ps.note);
        CommPoly c = comm_form(b.poly(s.get("curve")));
        r.add("scheme inside curve", scheme_inside(ps.gens, c), c.str(b.amb->names));
        auto forms = b.polys(split(s.get("map"), ','));
        if (forms.size() != 3) throw Error(ErrorKind::Parse, "map needs 3 forms");
        bool on = true, minors = true, sigma = true;
        std::string bad;
        for (auto& text : split(s.get("on"), ';')) {
          Vec p = parse_point(text, b);
          if (!c.eval(p).is_zero()) on = false, bad += " off " + point_str(p);
          for (auto& m : ps.gens)
            if (!m.eval(p).is_zero()) minors = false;
          Vec q(3);
          for (std::size_t i = 0; i < 3; ++i) q[i] = comm_form(forms[i]).eval(p);
          auto got = sigma_at(rels, p);
          if (!got || !same_point(*got, q)) sigma = false, bad += " sigma" + point_str(p);
        }
        r.add("samples on curve", on, bad);
        r.add("minors vanish on samples", minors);
        r.add("sigma on samples", sigma, bad);
      }
    });
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RowReport> verify_pencil(const Section& s, int max_degree) {
  if (s.has("skip")) return {skipped_row(s, "2")};
  std::vector<RowReport> out;
  FieldSpec field = parse_field(s.get("field"));
  for (auto& smp : row_samples(s, field)) {
    RowReport r = start(s, "2", smp);
    guarded(r, "pipeline", [&] {
      Built b = build(s, smp);
      Pencil e{Presentation{b.amb, {b.poly(s.get("base"))}, s.head}, b.polys(s.all("rel"))};
      std::vector<NcPoly> all = e.s.relations;
      all.insert(all.end(), e.f.begin(), e.f.end());
      FiniteAlgebra alg = from_presentation(b.amb, all);
      std::optional<Scalar> mu;
      if (s.has("mu")) mu = parse_scalar(s.get("mu"), b.field, b.params);
      class_checks(r, alg, s.get("class"), mu);
      StrongRegularity sr = is_strongly_regular_normal(e.s, e.f, max_degree);
      r.add("strongly regular", sr.verdict == Verdict::Yes, sr.reason);
      Presentation a = nabla(e, max_degree);
      GradedAlgebra ga(a, max_degree);
      r.add("nabla hilbert", prefix_is(ga.hilbert(), {1, 3, 5, 7, 9}), join(ga.hilbert(), 4));
      CResult d = delta(a, max_degree);
      Classification ke = classify(alg), kd = classify(d.algebra);
      bool same = ke.cls == kd.cls;
      if (same && ke.cls == FClass::E) same = ke.mu_sum == kd.mu_sum;
      r.add("delta nabla class", same, "E: " + ke.str() + ", delta(nabla(E)): " + kd.str());
    });
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

Matrix parse_matrix(const std::string& text, const Built& b) {
  std::vector<Vec> rows;
  for (auto& row : split(text, ';')) {
    Vec v;
    for (auto& w : words(row)) v.push_back(in_field(parse_scalar(w, b.field, b.params), b.field));
    rows.push_back(v);
  }
  std::size_t n = b.amb->ngens();
  if (rows.size() != n || std::any_of(rows.begin(), rows.end(), [&](auto& r) { return r.size() != n; }))
    throw Error(ErrorKind::Parse, "witness must be " + std::to_string(n) + "x" + std::to_string(n));
  return Matrix::from_rows(rows, n);
}

struct Side {
  Built built;
  Presentation pres;
};

// A conic row at a given sample, or explicit relations.
Side side(const std::vector<Section>& conics, const Section& pair, const std::string& which,
          const std::optional<FieldSpec>& over) {
  std::string label = pair.get(which);
  std::string smp_text = pair.get_or(which + "-sample", "");
  if (label == "explicit") {
    Built b = build(pair, Sample{});
    return {b, Presentation{b.amb, b.polys(pair.all(which + "-rel")), which}};
  }
  auto it = std::find_if(conics.begin(), conics.end(), [&](auto& c) { return c.head == label; });
  if (it == conics.end()) throw Error(ErrorKind::Parse, "unknown row " + label);
  Sample smp{smp_text, {}};
  FieldSpec field = over ? *over : parse_field(it->get("field"));
  if (!smp_text.empty()) {
    Section tmp{"", 0, {{"param", "-"}, {"sample", smp_text}}};
    smp = row_samples(tmp, field).front();
  }
  Built b = build(*it, smp);
  if (over) {
    b.field = *over;
    b.amb = make_ambient(words(it->get("gens")), b.field);
  }
  return {b, Presentation{b.amb, b.polys(it->all("rel")), label}};
}

}  // namespace

std::vector<RowReport> verify_identification(const Section& s, int /*max_degree*/) {
  static const std::vector<Section> conics = read_sections(data_path("conics.txt"));
  RowReport r;
  r.table = "id";
  r.row = s.head;
  guarded(r, "pipeline", [&] {
    std::string kind = s.get("kind");
    std::string w = s.get_or("witness", "none");
    if (kind != "equal" && w == "none") {
      r.status = RowStatus::Skipped;
      r.note = std::string(to_string(ErrorKind::MissingWitness)) + ": " + s.get_or("note", "no witness recorded");
      return;
    }
    std::optional<FieldSpec> over;
    if (s.has("field")) over = parse_field(s.get("field"));
    Side left = side(conics, s, "left", over), right = side(conics, s, "right", over);
    if (!(*left.pres.ambient == *right.pres.ambient) && left.pres.ambient->names == right.pres.ambient->names) {
      // Same generators over different fields: read both over the larger one.
      FieldSpec f = left.built.field.is_rational() ? right.built.field : left.built.field;
      auto amb = make_ambient(left.pres.ambient->names, f);
      for (auto* p : {&left.pres, &right.pres}) {
        for (auto& rel : p->relations) rel = embed(rel, amb);
        p->ambient = amb;
      }
      left.built.amb = right.built.amb = amb;
      left.built.field = right.built.field = f;
    }
    if (kind == "equal") {
      r.add("relation spans equal", relation_span_equal(left.pres, right.pres));
    } else if (kind == "iso") {
      Matrix phi = parse_matrix(w, left.built);
      r.add("witness invertible", !det(phi).is_zero());
      std::vector<NcPoly> moved;
      for (auto& f : left.pres.relations) moved.push_back(apply_linear(f, phi));
      r.add("witness maps relations", relation_span_equal(Presentation{left.pres.ambient, moved, ""}, right.pres));
    } else if (kind == "twist") {
      Matrix phi = parse_matrix(w, left.built);
      r.add("witness invertible", !det(phi).is_zero());
      std::vector<NcPoly> moved;
      for (auto& f : left.pres.relations) moved.push_back(apply_linear(f, phi));
      r.add("witness is an automorphism", relation_span_equal(Presentation{left.pres.ambient, moved, ""}, left.pres));
      Presentation tw{left.pres.ambient, zhang_twist(left.pres.relations, phi), ""};
      r.add("twist matches", relation_span_equal(tw, right.pres));
    } else {
      throw Error(ErrorKind::Parse, "unknown kind '" + kind + "'");
    }
  });
  return {r};
}

std::vector<RowReport> verify_table(const std::string& table, const std::string& row, int max_degree,
                                    unsigned threads) {
  std::string t = canonical_table(table);
  std::vector<Section> sections;
  std::vector<RowReport> (*fn)(const Section&, int) = nullptr;
  if (t == "2") {
    sections = read_sections(data_path("pencils.txt"));
    fn = verify_pencil;
  } else if (t == "3") {
    sections = read_sections(data_path("centers.txt"));
    fn = verify_center;
  } else if (t == "4") {
    sections = read_sections(data_path("pairs.txt"));
    fn = verify_pair;
  } else if (t == "id") {
    sections = read_sections(data_path("identifications.txt"), "pair");
    fn = verify_identification;
  } else {
    for (auto& s : read_sections(data_path("conics.txt")))
      if (s.get_or("table", "") == t) sections.push_back(s);
    fn = verify_conic;
  }
  if (!row.empty()) {
    std::erase_if(sections, [&](auto& s) { return s.head != row; });
    if (sections.empty()) throw Error(ErrorKind::Parse, "no row '" + row + "' in table " + t);
  }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::vector<RowReport>> results(sections.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < sections.size();) {
      try {
        results[i] = fn(sections[i], max_degree);
      } catch (const std::exception& e) {
        RowReport r;
        r.table = t;
        r.row = sections[i].head;
        r.add("row", false, e.what());
        results[i] = {r};
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < std::min<std::size_t>(threads, sections.size()); ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  std::vector<RowReport> out;
  for (auto& v : results)
    for (auto& r : v) {
      if (r.table != t && t != "id") r.table = t;
      out.push_back(std::move(r));
    }
  return out;
}

}  // namespace ncconic

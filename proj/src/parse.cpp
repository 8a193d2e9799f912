#include "ncconic/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ncconic {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  return out;
}

FieldSpec parse_field(const std::string& t0) {
  std::string t;
  for (char c : t0)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "Q") return FieldSpec::rationals();
  if (t == "Q(i)") return FieldSpec::quadratic(-1);
  const std::string pre = "Q(sqrt(", pre2 = "Q(sqrt";
  std::string num;
  if (t.rfind(pre, 0) == 0 && t.size() > pre.size() + 2 && t.substr(t.size() - 2) == "))")
    num = t.substr(pre.size(), t.size() - pre.size() - 2);
  else if (t.rfind(pre2, 0) == 0 && t.back() == ')')
    num = t.substr(pre2.size(), t.size() - pre2.size() - 1);
  else
    throw Error(ErrorKind::Parse, "unknown field '" + t0 + "'");
  try {
    std::size_t used = 0;
    long d = std::stol(num, &used);
    if (used != num.size()) throw Error(ErrorKind::Parse, "bad field parameter");
    return FieldSpec::quadratic(d);
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::Parse, "bad field parameter '" + num + "'");
  }
}

namespace {

class Parser {
 public:
  Parser(const std::string& s, AmbientPtr amb, const ParamMap& params)
      : s_(s), amb_(std::move(amb)), params_(params) {}

  NcPoly parse() {
    NcPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& m) const {
    throw Error(ErrorKind::Parse, m + " at column " + std::to_string(pos_ + 1) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  NcPoly constant(const Scalar& c) const { return NcPoly::constant(amb_, in_field(c, amb_->field)); }

  NcPoly expr() {
    NcPoly acc(amb_);
    bool first = true;
    while (true) {
      char c = peek();
      int sign = 1;
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      NcPoly t = term();
      if (sign < 0)
        acc -= t;
      else
        acc += t;
      first = false;
      c = peek();
      if (c != '+' && c != '-') break;
    }
    return acc;
  }

  NcPoly term() {
    NcPoly acc = power();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * power();
      } else if (c == '/') {
        ++pos_;
        NcPoly d = power();
        if (d.degree() != 0) fail("division by a non-scalar");
        acc = acc * d.coeff({}).inverse();
      } else if (c == '(' || (last_closed_ && (std::isalpha(static_cast<unsigned char>(c)) || c == '_')) ||
                 (last_number_ && (std::isalpha(static_cast<unsigned char>(c)) || c == '('))) {
        acc = acc * power();
      } else {
        break;
      }
    }
    return acc;
  }

  NcPoly power() {
    NcPoly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (st == pos_) fail("exponent must be a nonnegative integer");
      base = base.pow(std::stoul(s_.substr(st, pos_ - st)));
      last_number_ = false;
    }
    return base;
  }

  NcPoly atom() {
    char c = peek();
    last_closed_ = false;
    last_number_ = false;
    if (c == '(') {
      ++pos_;
      NcPoly e = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      last_closed_ = true;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t st = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string num = s_.substr(st, pos_ - st);
      // p/q literal binds tighter than '*'
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        std::size_t st2 = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        num += "/" + s_.substr(st2, pos_ - st2);
      }
      Scalar v = Scalar::from_string(num);
      if (v.is_zero() && num.find('/') != std::string::npos && mpz_class(num.substr(num.find('/') + 1)) == 0)
        fail("zero denominator");
      last_number_ = true;
      return constant(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t st = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
      std::string id = s_.substr(st, pos_ - st);
      for (std::size_t i = 0; i < amb_->ngens(); ++i)
        if (amb_->names[i] == id) return NcPoly::gen(amb_, i);
      if (id == "sqrt") {
        if (peek() != '(') fail("sqrt needs '('");
        ++pos_;
        skip();
        bool neg = false;
        if (peek() == '-') {
          neg = true;
          ++pos_;
        }
        skip();
        std::size_t s2 = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (s2 == pos_) fail("sqrt needs an integer");
        long d = std::stol(s_.substr(s2, pos_ - s2)) * (neg ? -1 : 1);
        if (peek() != ')') fail("expected ')'");
        ++pos_;
        last_closed_ = true;
        return constant(sqrt_in_field(d));
      }
      if (id == "i" && amb_->field.d == -1) {
        last_number_ = true;
        return constant(Scalar::sqrt_of(-1));
      }
      auto it = params_.find(id);
      if (it != params_.end()) {
        last_number_ = true;
        return constant(it->second);
      }
      fail("unknown identifier '" + id + "'");
    }
    fail(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end of input");
  }

  // sqrt(d) for d = k^2 * field.d or a perfect square.
  Scalar sqrt_in_field(long d) {
    long fd = amb_->field.d;
    if (d == 0) return Scalar(0);
    long r = 0;
    while ((r + 1) * (r + 1) <= std::labs(d)) ++r;
    if (d > 0 && r * r == d) return Scalar(r);
    if (fd != 0 && d % fd == 0) {
      long q = d / fd;
      long s = 0;
      while ((s + 1) * (s + 1) <= q) ++s;
      if (q > 0 && s * s == q) return Scalar(0, s, fd);
    }
    fail("sqrt(" + std::to_string(d) + ") not in " + amb_->field.name());
  }

  std::string s_;
  std::size_t pos_ = 0;
  AmbientPtr amb_;
  const ParamMap& params_;
  bool last_closed_ = false;
  bool last_number_ = false;
};

}  // namespace

NcPoly parse_poly(const std::string& text, const AmbientPtr& amb, const ParamMap& params) {
  return Parser(text, amb, params).parse();
}

Scalar parse_scalar(const std::string& text, FieldSpec field, const ParamMap& params) {
  auto amb = make_ambient({"_"}, field);
  NcPoly p = parse_poly(text, amb, params);
  if (p.degree() > 0) throw Error(ErrorKind::Parse, "expected a scalar: " + text);
  return in_field(p.coeff({}), field);
}

PresentationFile parse_presentation(const std::string& text) {
  PresentationFile out;
  FieldSpec field;
  std::vector<std::string> gens;
  std::vector<std::string> rels, elems;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected 'key: value'");
    std::string key = trim(line.substr(0, colon)), val = trim(line.substr(colon + 1));
    if (key == "field") {
      field = parse_field(val);
    } else if (key == "gens") {
      std::istringstream g(val);
      std::string name;
      while (g >> name) gens.push_back(name);
    } else if (key == "rel") {
      rels.push_back(val);
    } else if (key == "elem") {
      elems.push_back(val);
    } else if (key == "expect") {
      auto eq = val.find('=');
      if (eq == std::string::npos)
        throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expect needs 'key = value'");
      out.expectations.push_back({trim(val.substr(0, eq)), trim(val.substr(eq + 1))});
    } else {
      throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": unknown header '" + key + "'");
    }
  }
  if (gens.empty()) throw Error(ErrorKind::Parse, "missing gens header");
  auto amb = make_ambient(gens, field);
  out.presentation.ambient = amb;
  for (auto& r : rels) out.presentation.relations.push_back(parse_poly(r, amb));
  for (auto& e : elems) out.elements.push_back(parse_poly(e, amb));
  return out;
}

PresentationFile read_presentation_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_presentation(ss.str());
}

std::string print_presentation(const Presentation& p) {
  std::string s = "field: " + p.ambient->field.name() + "\ngens:";
  for (auto& n : p.ambient->names) s += " " + n;
  s += "\n";
  for (auto& r : p.relations) s += "rel: " + r.str() + "\n";
  return s;
}

}  // namespace ncconic

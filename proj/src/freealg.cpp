#include "ncconic/freealg.hpp"

#include <algorithm>

namespace ncconic {

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = w.size() * 0x9e3779b97f4a7c15ULL;
  for (Letter c : w) h = (h ^ (c + 1)) * 0x100000001b3ULL;
  return h;
}

bool MonomialOrder::less(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  if (rank_.empty()) return a < b;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return rank_[a[i]] < rank_[b[i]];
  return false;
}

bool MonomialOrder::is_default() const {
  for (std::size_t i = 0; i < rank_.size(); ++i)
    if (rank_[i] != int(i)) return false;
  return true;
}

AmbientPtr make_ambient(std::vector<std::string> names, FieldSpec field) {
  if (names.empty() || names.size() > 64)
    throw Error(ErrorKind::Precondition, "ambient needs between 1 and 64 generators");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw Error(ErrorKind::Precondition, "duplicate generator " + names[i]);
  return std::make_shared<const Ambient>(Ambient{std::move(names), field});
}

AmbientPtr extend_ambient(const AmbientPtr& a, const std::string& extra) {
  auto names = a->names;
  names.push_back(extra);
  return make_ambient(std::move(names), a->field);
}

NcPoly NcPoly::constant(AmbientPtr amb, const Scalar& c) { return monomial(std::move(amb), {}, c); }

NcPoly NcPoly::gen(AmbientPtr amb, std::size_t i) {
  if (i >= amb->ngens()) throw Error(ErrorKind::Precondition, "generator index out of range");
  return monomial(std::move(amb), Word{Letter(i)});
}

NcPoly NcPoly::monomial(AmbientPtr amb, const Word& w, const Scalar& c) {
  NcPoly p(std::move(amb));
  p.add_term(w, c);
  return p;
}

Scalar NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int NcPoly::degree() const { return terms_.empty() ? -1 : int(terms_.rbegin()->first.size()); }
int NcPoly::low_degree() const { return terms_.empty() ? -1 : int(terms_.begin()->first.size()); }
bool NcPoly::is_homogeneous() const { return degree() == low_degree(); }

NcPoly NcPoly::homogeneous_part(int d) const {
  NcPoly r(amb_);
  for (auto& [w, c] : terms_)
    if (int(w.size()) == d) r.terms_.emplace(w, c);
  return r;
}

const Word& NcPoly::leading_word() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroInput, "leading word of zero");
  return terms_.rbegin()->first;
}

Scalar NcPoly::leading_coeff() const {
  if (terms_.empty()) throw Error(ErrorKind::ZeroInput, "leading coefficient of zero");
  return terms_.rbegin()->second;
}

NcPoly NcPoly::monic() const {
  if (terms_.empty()) return *this;
  return *this * leading_coeff().inverse();
}

void NcPoly::check(const NcPoly& o) const {
  if (amb_ && o.amb_ && amb_ != o.amb_ && !(*amb_ == *o.amb_))
    throw Error(ErrorKind::AmbientMismatch, "polynomials over different ambients");
}

NcPoly NcPoly::operator-() const {
  NcPoly r(*this);
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  check(o);
  if (!amb_) amb_ = o.amb_;
  for (auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  check(o);
  if (!amb_) amb_ = o.amb_;
  for (auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  a.check(b);
  NcPoly r(a.amb_ ? a.amb_ : b.amb_);
  for (auto& [u, c] : a.terms_)
    for (auto& [v, e] : b.terms_) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      r.add_term(w, c * e);
    }
  return r;
}

bool NcPoly::operator==(const NcPoly& o) const {
  check(o);
  return terms_ == o.terms_;
}

NcPoly NcPoly::pow(unsigned e) const {
  NcPoly r = constant(amb_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

NcPoly NcPoly::sandwich(const Word& u, const Word& v) const {
  NcPoly r(amb_);
  for (auto& [w, c] : terms_) {
    Word x = u;
    x.insert(x.end(), w.begin(), w.end());
    x.insert(x.end(), v.begin(), v.end());
    r.terms_.emplace(std::move(x), c);
  }
  return r;
}

std::string word_str(const Ambient& amb, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!s.empty()) s += "*";
    s += amb.names[w[i]];
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return s;
}

std::string NcPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Word& w = it->first;
    Scalar c = it->second;
    bool neg = false;
    if (!c.compound() && (c.is_rational() ? sgn(c.a()) < 0 : sgn(c.b()) < 0)) {
      neg = true;
      c = -c;
    }
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    std::string cs = c.compound() ? "(" + c.str() + ")" : c.str();
    if (w.empty())
      s += cs;
    else if (c.is_one())
      s += word_str(*amb_, w);
    else
      s += cs + "*" + word_str(*amb_, w);
  }
  return s;
}

std::vector<Word> words_of_degree(std::size_t ngens, std::size_t d) {
  std::vector<Word> out;
  Word w(d, 0);
  while (true) {
    out.push_back(w);
    std::size_t i = d;
    while (i > 0) {
      if (++w[i - 1] < ngens) break;
      w[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

NcPoly commutator(const NcPoly& a, const NcPoly& b) { return a * b - b * a; }

NcPoly substitute(const NcPoly& p, const std::vector<NcPoly>& images, const AmbientPtr& target) {
  if (images.size() != p.ambient()->ngens())
    throw Error(ErrorKind::Precondition, "substitution needs one image per generator");
  NcPoly r(target);
  for (auto& [w, c] : p.terms()) {
    NcPoly t = NcPoly::constant(target, c);
    for (Letter l : w) t = t * images[l];
    r += t;
  }
  return r;
}

NcPoly embed(const NcPoly& p, const AmbientPtr& target) {
  const auto& src = *p.ambient();
  if (src.ngens() > target->ngens()) throw Error(ErrorKind::AmbientMismatch, "cannot embed");
  for (std::size_t i = 0; i < src.ngens(); ++i)
    if (src.names[i] != target->names[i]) throw Error(ErrorKind::AmbientMismatch, "cannot embed");
  NcPoly r(target);
  for (auto& [w, c] : p.terms()) r.add_term(w, c);
  return r;
}

}  // namespace ncconic

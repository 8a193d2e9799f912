#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ncconic/scalar.hpp"

namespace ncconic {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

// Degree-lexicographic order on words; letters compare by index.
struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Deg-lex with an arbitrary generator precedence: rank[i] is the position of generator i.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(std::vector<int> rank) : rank_(std::move(rank)) {}
  bool less(const Word& a, const Word& b) const;
  bool operator()(const Word& a, const Word& b) const { return less(a, b); }
  bool is_default() const;

 private:
  std::vector<int> rank_;  // empty: identity
};

struct Ambient {
  std::vector<std::string> names;
  FieldSpec field;

  std::size_t ngens() const { return names.size(); }
  bool operator==(const Ambient&) const = default;
};

using AmbientPtr = std::shared_ptr<const Ambient>;
AmbientPtr make_ambient(std::vector<std::string> names, FieldSpec field = {});
// Same generators plus `extra` appended last.
AmbientPtr extend_ambient(const AmbientPtr& a, const std::string& extra);

class NcPoly {
 public:
  using Terms = std::map<Word, Scalar, DegLex>;

  NcPoly() = default;
  explicit NcPoly(AmbientPtr amb) : amb_(std::move(amb)) {}
  static NcPoly constant(AmbientPtr amb, const Scalar& c);
  static NcPoly gen(AmbientPtr amb, std::size_t i);
  static NcPoly monomial(AmbientPtr amb, const Word& w, const Scalar& c = Scalar(1));

  const AmbientPtr& ambient() const { return amb_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(const Word& w) const;
  void add_term(const Word& w, const Scalar& c);

  int degree() const;          // -1 for zero
  int low_degree() const;      // -1 for zero
  bool is_homogeneous() const;
  NcPoly homogeneous_part(int d) const;
  // Leading word under deg-lex with the default precedence.
  const Word& leading_word() const;
  Scalar leading_coeff() const;
  NcPoly monic() const;

  NcPoly operator-() const;
  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const Scalar& c);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(NcPoly a, const Scalar& c) { return a *= c; }
  friend NcPoly operator*(const Scalar& c, NcPoly a) { return a *= c; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  bool operator==(const NcPoly& o) const;
  bool operator!=(const NcPoly& o) const { return !(*this == o); }

  NcPoly pow(unsigned e) const;
  // u * this * v for words u, v.
  NcPoly sandwich(const Word& u, const Word& v) const;

  // Parseable text: terms in descending order, products joined by '*'.
  std::string str() const;

 private:
  void check(const NcPoly& o) const;
  AmbientPtr amb_;
  Terms terms_;
};

std::string word_str(const Ambient& amb, const Word& w);
// All words of length d in deg-lex ascending order.
std::vector<Word> words_of_degree(std::size_t ngens, std::size_t d);
NcPoly commutator(const NcPoly& a, const NcPoly& b);
// Substitute x_i -> images[i] (images in the target ambient).
NcPoly substitute(const NcPoly& p, const std::vector<NcPoly>& images, const AmbientPtr& target);
// Embed a polynomial into a larger ambient whose first generators agree.
NcPoly embed(const NcPoly& p, const AmbientPtr& target);

}  // namespace ncconic

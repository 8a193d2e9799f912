#pragma once
// Independent reference computations used only by tests.

#include <vector>

#include "ncconic/freealg.hpp"
#include "ncconic/linalg.hpp"

namespace oracle {

using namespace ncconic;

// dim of (k<X>/I)_d by ranking the span of u*r*v directly.
inline std::size_t quotient_dim(const AmbientPtr& amb, const std::vector<NcPoly>& rels, std::size_t d) {
  auto words = words_of_degree(amb->ngens(), d);
  std::map<Word, std::size_t> col;
  for (std::size_t i = 0; i < words.size(); ++i) col[words[i]] = i;
  Matrix m(0, words.size());
  for (auto& r : rels) {
    if (r.is_zero() || std::size_t(r.degree()) > d) continue;
    std::size_t rest = d - r.degree();
    for (std::size_t a = 0; a <= rest; ++a)
      for (auto& u : words_of_degree(amb->ngens(), a))
        for (auto& v : words_of_degree(amb->ngens(), rest - a)) {
          Vec row(words.size());
          NcPoly t = r.sandwich(u, v);
          for (auto& [w, c] : t.terms()) row[col[w]] = c;
          m.append_row(row);
        }
  }
  return words.size() - (m.rows() ? rank(m) : 0);
}

// Quadratic relations orthogonal to rels under <x_i x_j, x_k x_l> = delta.
inline std::vector<NcPoly> orthogonal(const AmbientPtr& amb, const std::vector<NcPoly>& rels) {
  auto words = words_of_degree(amb->ngens(), 2);
  Matrix m(0, words.size());
  for (auto& r : rels) {
    Vec row(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) row[i] = r.coeff(words[i]);
    m.append_row(row);
  }
  std::vector<NcPoly> out;
  for (auto& v : kernel(m)) {
    NcPoly p(amb);
    for (std::size_t i = 0; i < words.size(); ++i)
      if (!v[i].is_zero()) p.add_term(words[i], v[i]);
    out.push_back(p);
  }
  return out;
}

}  // namespace oracle

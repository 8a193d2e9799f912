#pragma once
// Seeded generators for property tests.

#include <random>

#include "ncconic/freealg.hpp"
#include "ncconic/linalg.hpp"

namespace gen {

using namespace ncconic;

inline Scalar small(std::mt19937& rng, int lo = -2, int hi = 2) {
  return Scalar(long(std::uniform_int_distribution<int>(lo, hi)(rng)));
}

inline Matrix invertible(std::mt19937& rng, std::size_t n) {
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = small(rng);
    if (!det(m).is_zero()) return m;
  }
}

// Random element with terms of degree lo..hi.
inline NcPoly poly(std::mt19937& rng, const AmbientPtr& amb, int lo, int hi, int terms = 4) {
  NcPoly p(amb);
  std::uniform_int_distribution<int> deg(lo, hi);
  std::uniform_int_distribution<int> letter(0, int(amb->ngens()) - 1);
  for (int t = 0; t < terms; ++t) {
    Word w(deg(rng));
    for (auto& l : w) l = Letter(letter(rng));
    p.add_term(w, small(rng, 1, 3));
  }
  return p;
}

}  // namespace gen

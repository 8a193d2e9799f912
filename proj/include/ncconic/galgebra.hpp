#pragma once

#include <string>
#include <vector>

#include "ncconic/linalg.hpp"
#include "ncconic/rewrite.hpp"

namespace ncconic {

struct Presentation {
  AmbientPtr ambient;
  std::vector<NcPoly> relations;
  std::string label;

  std::size_t ngens() const { return ambient->ngens(); }
  bool is_homogeneous() const;
  bool is_quadratic() const;
};

using HilbertPrefix = std::vector<std::size_t>;

// A homogeneous presentation together with its truncated rewriting system.
class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  explicit GradedAlgebra(Presentation p, int max_degree = default_max_degree(),
                         const MonomialOrder& order = {});

  const Presentation& presentation() const { return pres_; }
  const AmbientPtr& ambient() const { return pres_.ambient; }
  const RewriteSystem& rewrite() const { return rs_; }
  int max_degree() const { return rs_.max_degree(); }
  const HilbertPrefix& hilbert() const { return hilbert_; }
  std::size_t dim(int d) const { return d <= max_degree() ? hilbert_[d] : throw Error(ErrorKind::DegreeExceedsTruncation, "dim"); }

  NcPoly reduce(const NcPoly& p) const { return rs_.normal_form(p); }
  NcPoly mul(const NcPoly& a, const NcPoly& b) const { return reduce(a * b); }
  const std::vector<Word>& basis(int d) const;
  // Coordinates of a degree-d element in basis(d); the element is reduced first.
  Vec coords(const NcPoly& p, int d) const;
  NcPoly from_coords(const Vec& v, int d) const;
  NcPoly gen(std::size_t i) const { return NcPoly::gen(pres_.ambient, i); }
  NcPoly one() const { return NcPoly::constant(pres_.ambient, 1); }

  // A/(extra) with the same truncation.
  GradedAlgebra quotient(const std::vector<NcPoly>& extra) const;

 private:
  Presentation pres_;
  RewriteSystem rs_;
  HilbertPrefix hilbert_;
  std::vector<std::vector<Word>> bases_;
  std::vector<std::unordered_map<Word, std::size_t, WordHash>> index_;
};

// Polynomial ring on n generators as a quadratic presentation.
Presentation polynomial_ring(const AmbientPtr& amb);
// 1/(1-t)^n prefix.
HilbertPrefix polynomial_hilbert(std::size_t n, int d);
std::vector<long> series_mul(const std::vector<long>& a, const HilbertPrefix& h);

enum class Verdict { Yes, No, Unknown };
const char* to_string(Verdict v);

struct RegularityReport {
  Verdict verdict = Verdict::Unknown;
  int certified_to = 0;  // agreement checked through this degree
  std::string reason;
};

}  // namespace ncconic

#pragma once

#include <unordered_map>
#include <vector>

#include "ncconic/freealg.hpp"

namespace ncconic {

// lhs -> rhs with every word of rhs smaller than lhs.
struct Rule {
  Word lhs;
  NcPoly rhs;
  NcPoly poly() const;  // lhs - rhs
};

// Truncated Groebner basis of a homogeneous two-sided ideal, complete up to max_degree.
class RewriteSystem {
 public:
  RewriteSystem() = default;
  static RewriteSystem complete(const AmbientPtr& amb, const std::vector<NcPoly>& relations,
                                int max_degree, const MonomialOrder& order = {});

  const AmbientPtr& ambient() const { return amb_; }
  int max_degree() const { return max_degree_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Rule>& rules() const { return rules_; }

  // Words of degree above max_degree are left untouched and flagged via DegreeExceedsTruncation.
  NcPoly normal_form(const NcPoly& p) const;
  bool is_reduced(const Word& w) const;
  // Reduced words of degree d, ascending in the monomial order.
  std::vector<Word> graded_basis(int d) const;
  std::vector<std::size_t> hilbert_prefix() const;

 private:
  const Rule* find_match(const Word& w, std::size_t& pos) const;
  void add_rule(const NcPoly& monic_poly);

  AmbientPtr amb_;
  int max_degree_ = 0;
  MonomialOrder order_;
  std::vector<Rule> rules_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
  std::size_t max_lhs_ = 0;
  std::size_t min_lhs_ = 0;
  mutable std::vector<std::vector<Word>> basis_cache_;
};

// Leading word and coefficient under an order.
std::pair<Word, Scalar> leading_term(const NcPoly& p, const MonomialOrder& order);
int default_max_degree();

}  // namespace ncconic

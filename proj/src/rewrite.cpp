#include "ncconic/rewrite.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "ncconic/linalg.hpp"

namespace ncconic {

int default_max_degree() {
  if (const char* s = std::getenv("NCCONIC_MAX_DEG")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 6;
}

NcPoly Rule::poly() const { return NcPoly::monomial(rhs.ambient(), lhs) - rhs; }

std::pair<Word, Scalar> leading_term(const NcPoly& p, const MonomialOrder& order) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroInput, "leading term of zero");
  const Word* best = nullptr;
  const Scalar* c = nullptr;
  for (auto& [w, v] : p.terms())
    if (!best || order.less(*best, w)) {
      best = &w;
      c = &v;
    }
  return {*best, *c};
}

const Rule* RewriteSystem::find_match(const Word& w, std::size_t& pos) const {
  if (rules_.empty() || w.size() < min_lhs_) return nullptr;
  Word sub;
  for (std::size_t len = min_lhs_; len <= std::min(max_lhs_, w.size()); ++len)
    for (std::size_t i = 0; i + len <= w.size(); ++i) {
      sub.assign(w.begin() + i, w.begin() + i + len);
      auto it = index_.find(sub);
      if (it != index_.end()) {
        pos = i;
        return &rules_[it->second];
      }
    }
  return nullptr;
}

bool RewriteSystem::is_reduced(const Word& w) const {
  std::size_t pos;
  return find_match(w, pos) == nullptr;
}

NcPoly RewriteSystem::normal_form(const NcPoly& p) const {
  if (p.degree() > max_degree_)
    throw Error(ErrorKind::DegreeExceedsTruncation,
                "degree " + std::to_string(p.degree()) + " above truncation " + std::to_string(max_degree_));
  std::map<Word, Scalar, MonomialOrder> work(order_);
  for (auto& [w, c] : p.terms()) work.emplace(w, c);
  NcPoly out(amb_ ? amb_ : p.ambient());
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Word w = it->first;
    Scalar c = it->second;
    work.erase(it);
    std::size_t pos;
    const Rule* r = find_match(w, pos);
    if (!r) {
      out.add_term(w, c);
      continue;
    }
    Word pre(w.begin(), w.begin() + pos);
    Word post(w.begin() + pos + r->lhs.size(), w.end());
    for (auto& [v, e] : r->rhs.terms()) {
      Word x = pre;
      x.insert(x.end(), v.begin(), v.end());
      x.insert(x.end(), post.begin(), post.end());
      Scalar add = c * e;
      auto [jt, fresh] = work.try_emplace(std::move(x), add);
      if (!fresh) {
        jt->second += add;
        if (jt->second.is_zero()) work.erase(jt);
      }
    }
  }
  return out;
}

void RewriteSystem::add_rule(const NcPoly& q) {
  auto [lw, lc] = leading_term(q, order_);
  NcPoly rhs = NcPoly::monomial(amb_, lw) - q * lc.inverse();
  index_.emplace(lw, rules_.size());
  if (rules_.empty()) {
    min_lhs_ = max_lhs_ = lw.size();
  } else {
    min_lhs_ = std::min(min_lhs_, lw.size());
    max_lhs_ = std::max(max_lhs_, lw.size());
  }
  rules_.push_back({lw, rhs});
}

RewriteSystem RewriteSystem::complete(const AmbientPtr& amb, const std::vector<NcPoly>& relations,
                                      int max_degree, const MonomialOrder& order) {
  RewriteSystem rs;
  rs.amb_ = amb;
  rs.max_degree_ = max_degree;
  rs.order_ = order;
  std::vector<std::vector<NcPoly>> by_degree(max_degree + 1);
  for (auto& r : relations) {
    if (r.is_zero()) continue;
    if (!r.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "relation " + r.str());
    if (r.degree() == 0) throw Error(ErrorKind::Precondition, "constant relation");
    if (r.degree() <= max_degree) by_degree[r.degree()].push_back(embed(r, amb));
  }
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<NcPoly> cand = by_degree[d];
    // Overlaps lhs1 = a.b, lhs2 = b.c with |a.b.c| = d.
    for (const Rule& r1 : rs.rules_)
      for (const Rule& r2 : rs.rules_) {
        std::size_t l1 = r1.lhs.size(), l2 = r2.lhs.size();
        if (l1 + l2 <= std::size_t(d)) continue;
        std::size_t k = l1 + l2 - d;
        if (k == 0 || k >= l1 || k >= l2) continue;
        if (!std::equal(r1.lhs.end() - k, r1.lhs.end(), r2.lhs.begin())) continue;
        Word a(r1.lhs.begin(), r1.lhs.end() - k);
        Word c(r2.lhs.begin() + k, r2.lhs.end());
        cand.push_back(r1.poly().sandwich({}, c) - r2.poly().sandwich(a, {}));
      }
    if (cand.empty()) continue;
    std::vector<NcPoly> reduced;
    for (auto& p : cand) {
      NcPoly q = rs.normal_form(p);
      if (!q.is_zero()) reduced.push_back(std::move(q));
    }
    if (reduced.empty()) continue;
    // Column order: descending monomial order so pivots are leading words.
    std::vector<Word> cols;
    for (auto& q : reduced)
      for (auto& [w, c] : q.terms()) cols.push_back(w);
    std::sort(cols.begin(), cols.end(), [&](const Word& x, const Word& y) { return order.less(y, x); });
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    std::unordered_map<Word, std::size_t, WordHash> col_of;
    for (std::size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = i;
    Matrix m(reduced.size(), cols.size());
    for (std::size_t i = 0; i < reduced.size(); ++i)
      for (auto& [w, c] : reduced[i].terms()) m(i, col_of[w]) = c;
    Echelon e = rref(m);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      NcPoly q(amb);
      for (std::size_t j = 0; j < cols.size(); ++j) q.add_term(cols[j], e.reduced(i, j));
      rs.add_rule(q);
    }
  }
  rs.basis_cache_.clear();
  rs.graded_basis(max_degree);
  return rs;
}

std::vector<Word> RewriteSystem::graded_basis(int d) const {
  if (d > max_degree_)
    throw Error(ErrorKind::DegreeExceedsTruncation, "basis above truncation");
  if (basis_cache_.empty()) basis_cache_.push_back({Word{}});
  while (int(basis_cache_.size()) <= d) {
    const auto& prev = basis_cache_.back();
    std::vector<Word> next;
    std::size_t len = basis_cache_.size();
    for (const Word& w : prev)
      for (std::size_t g = 0; g < amb_->ngens(); ++g) {
        Word x = w;
        x.push_back(Letter(g));
        bool ok = true;
        for (std::size_t l = min_lhs_; ok && !rules_.empty() && l <= std::min(max_lhs_, len); ++l) {
          Word suf(x.end() - l, x.end());
          if (index_.count(suf)) ok = false;
        }
        if (ok) next.push_back(std::move(x));
      }
    std::sort(next.begin(), next.end(), [&](const Word& a, const Word& b) { return order_.less(a, b); });
    basis_cache_.push_back(std::move(next));
  }
  return basis_cache_[d];
}

std::vector<std::size_t> RewriteSystem::hilbert_prefix() const {
  std::vector<std::size_t> h;
  for (int d = 0; d <= max_degree_; ++d) h.push_back(graded_basis(d).size());
  return h;
}

}  // namespace ncconic

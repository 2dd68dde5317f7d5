#pragma once

#include <map>
#include <string>
#include <vector>

#include "symplie/rational.hpp"

namespace symplie {

// Sparse exact vector keyed by arbitrary byte strings (basis monomial
// encodings).  No zero entries are stored.
using SparseVec = std::map<std::string, Rational>;

inline void axpy(SparseVec& v, const Rational& c, const SparseVec& row) {
  if (sgn(c) == 0) return;
  for (const auto& [k, rc] : row) {
    auto [it, inserted] = v.emplace(k, c * rc);
    if (!inserted) {
      it->second += c * rc;
      if (sgn(it->second) == 0) v.erase(it);
    }
  }
}

// Row-echelon span of sparse vectors over Q.  Each stored row has pivot
// coefficient 1 on its smallest key, and pivot keys are distinct, so
// reduce() yields the unique representative of a coset whose support avoids
// all pivot keys.  Insertion order determines the pivot set; all users build
// spans in a deterministic order.
class RowSpan {
 public:
  // Eliminates every pivot key from v; the scan can move forward only,
  // because a subtracted row touches no key below its own pivot.
  SparseVec reduce(SparseVec v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      Rational c = -it->second;
      axpy(v, c, rows_[p->second]);
      it = v.lower_bound(p->first);
    }
    return v;
  }

  // Returns true (and grows the span) iff v is independent of it.
  bool insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Rational lead = v.begin()->second;
    for (auto& [k, c] : v) c /= lead;
    pivots_.emplace(v.begin()->first, rows_.size());
    rows_.push_back(std::move(v));
    return true;
  }

  bool contains(SparseVec v) const { return reduce(std::move(v)).empty(); }

  size_t rank() const { return rows_.size(); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  bool has_pivot(const std::string& key) const { return pivots_.count(key) != 0; }

 private:
  std::vector<SparseVec> rows_;
  std::map<std::string, size_t> pivots_;
};

inline size_t rank_of(const std::vector<SparseVec>& vecs) {
  RowSpan span;
  for (const auto& v : vecs) span.insert(v);
  return span.rank();
}

}  // namespace symplie

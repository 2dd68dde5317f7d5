#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "symplie/genus.hpp"
#include "symplie/lie.hpp"
#include "symplie/linalg.hpp"

namespace symplie {

// dim L_g(k) for the quotient of the free Lie algebra by the ideal generated
// by omega_0 (Labute).  The universal envelope has Hilbert series
// 1/(1 - 2g t + t^2), so the necklace formula runs over the power sums of
// the roots of x^2 - 2gx + 1.
inline long long labute_dimension(int k, int g) {
  std::vector<long long> s(k + 1, 0);
  if (k >= 1) s[1] = 2 * g;
  if (k >= 2) s[2] = 4LL * g * g - 2;
  for (int n = 3; n <= k; ++n) s[n] = 2LL * g * s[n - 1] - s[n - 2];
  auto mobius = [](int m) {
    int result = 1;
    for (int p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) return 0;
        result = -result;
      }
    if (m > 1) result = -result;
    return result;
  };
  long long sum = 0;
  for (int d = 1; d <= k; ++d)
    if (k % d == 0) sum += mobius(d) * s[k / d];
  return sum / k;
}

// Degree-k component of the ideal I generated by omega_0, reduced to
// row-echelon blocks per sp-weight.  Since I is generated by a single
// degree-2 element, the left-normed brackets [y_1,[...,[y_m, omega_0]...]]
// over letter sequences span I(k) (Jacobi rewrites any bracket into the
// ideal against these).  Immutable after construction.
class QuotientContext {
 public:
  QuotientContext(int degree, GenusContext genus) : degree_(degree), ctx_(genus) {
    if (degree < 2) throw std::invalid_argument("ideal component needs degree >= 2");
    generate(omega0_lie(ctx_), degree - 2);
  }

  int degree() const { return degree_; }
  const GenusContext& ctx() const { return ctx_; }

  // Canonical coset representative in L_g(degree): eliminates the ideal's
  // pivot monomials (row reduction against the Lyndon basis order).
  LieElement reduce(const LieElement& x) const {
    if (x.degree != degree_) throw std::invalid_argument("quotient_project: degree mismatch");
    std::map<Weight, SparseVec> parts;
    for (const auto& [w, c] : x.terms) parts[weight_of_word(w, ctx_)][w] = c;
    LieElement out(degree_);
    for (auto& [wt, vec] : parts) {
      auto it = blocks_.find(wt);
      SparseVec red = (it == blocks_.end()) ? vec : it->second.reduce(std::move(vec));
      for (auto& [w, c] : red) out.add_term(w, c);
    }
    return out;
  }

  bool in_ideal(const LieElement& x) const { return reduce(x).is_zero(); }

  size_t ideal_dim() const {
    size_t n = 0;
    for (const auto& [wt, span] : blocks_) n += span.rank();
    return n;
  }

  std::vector<LieElement> ideal_basis() const {
    std::vector<LieElement> basis;
    for (const auto& [wt, span] : blocks_)
      for (const auto& row : span.rows()) {
        LieElement x(degree_);
        for (const auto& [w, c] : row) x.add_term(w, c);
        basis.push_back(std::move(x));
      }
    return basis;
  }

  long long quotient_dim() const {
    return witt_dimension(degree_, ctx_.alphabet_size()) - static_cast<long long>(ideal_dim());
  }

  // Pivot monomials are eliminated; the complementary Lyndon monomials of a
  // weight block form coset coordinates for L_g(degree).
  bool is_pivot(const Word& monomial) const {
    auto it = blocks_.find(weight_of_word(monomial, ctx_));
    return it != blocks_.end() && it->second.has_pivot(monomial);
  }

 private:
  void generate(const LieElement& v, int letters_left) {
    if (letters_left == 0) {
      if (v.is_zero()) return;
      blocks_[weight_of_word(v.terms.begin()->first, ctx_)].insert(v.terms);
      return;
    }
    for (int code = 0; code < ctx_.alphabet_size(); ++code)
      generate(lie_bracket(lie_letter(Letter::from_code(code)), v), letters_left - 1);
  }

  int degree_;
  GenusContext ctx_;
  std::map<Weight, RowSpan> blocks_;
};

// Shared read-only cache; contexts are pure functions of (degree, genus).
inline const QuotientContext& quotient_context(int degree, const GenusContext& ctx) {
  static std::map<std::pair<int, int>, std::unique_ptr<QuotientContext>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(degree, ctx.g);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<QuotientContext>(degree, ctx)).first;
  return *it->second;
}

inline LieElement quotient_project(const LieElement& x, const QuotientContext& qctx) {
  return qctx.reduce(x);
}

}  // namespace symplie

#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "symplie/hl.hpp"
#include "symplie/linalg.hpp"
#include "symplie/multiwedge.hpp"

namespace symplie {

// Irreducible representations of Sp(2g,Q) are labeled by Young diagrams with
// at most g rows; [0] is the trivial representation.
struct YoungDiagram {
  std::vector<int> rows;  // weakly decreasing, all positive; empty = [0]

  YoungDiagram() = default;
  YoungDiagram(std::initializer_list<int> r) : YoungDiagram(std::vector<int>(r)) {}
  explicit YoungDiagram(std::vector<int> r) : rows(std::move(r)) {
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i] <= 0) throw std::invalid_argument("young diagram rows must be positive");
      if (i && rows[i] > rows[i - 1])
        throw std::invalid_argument("young diagram rows must be weakly decreasing");
    }
  }

  int num_rows() const { return static_cast<int>(rows.size()); }
  int boxes() const { return std::accumulate(rows.begin(), rows.end(), 0); }

  void check_rows(const GenusContext& ctx) const {
    if (num_rows() > ctx.g)
      throw std::invalid_argument("diagram " + str() + " has more than g rows");
  }

  Weight highest_weight(const GenusContext& ctx) const {
    Weight w(ctx.g, 0);
    for (size_t i = 0; i < rows.size(); ++i) w[i] = rows[i];
    return w;
  }

  YoungDiagram transpose() const {
    std::vector<int> t;
    for (int c = 1; rows.size() && c <= rows[0]; ++c) {
      int n = 0;
      for (int r : rows) n += (r >= c);
      t.push_back(n);
    }
    return YoungDiagram(std::move(t));
  }

  // Compact bracket notation with exponents for runs: [42], [31^3], [0].
  std::string str() const {
    if (rows.empty()) return "[0]";
    std::string s = "[";
    for (size_t i = 0; i < rows.size();) {
      size_t j = i;
      while (j < rows.size() && rows[j] == rows[i]) ++j;
      s += std::to_string(rows[i]);
      if (j - i > 1) s += "^" + std::to_string(j - i);
      i = j;
    }
    return s + "]";
  }

  // Accepts "[2 2]", "[31^3]", "[4,3,1]", "[0]".
  static YoungDiagram parse(const std::string& text) {
    std::vector<int> r;
    size_t i = 0;
    auto skip = [&] { while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i; };
    if (i < text.size() && text[i] == '[') ++i;
    skip();
    while (i < text.size() && text[i] != ']') {
      if (!isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("bad young diagram: '" + text + "'");
      int v = 0;
      // single-digit rows, matching the bracket notation of the tables
      v = text[i] - '0';
      ++i;
      int rep = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        rep = 0;
        while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
          rep = rep * 10 + (text[i] - '0');
          ++i;
        }
      }
      for (int t = 0; t < rep; ++t)
        if (v > 0) r.push_back(v);
      skip();
    }
    return YoungDiagram(std::move(r));
  }

  auto operator<=>(const YoungDiagram&) const = default;
};

// Weyl dimension formula for type C: with l_i = lambda_i + g - i + 1 and
// rho-parts m_i = g - i + 1,
//   dim = prod_i l_i/m_i * prod_{i<j} (l_i^2 - l_j^2)/(m_i^2 - m_j^2).
inline long long weyl_dim(const YoungDiagram& lambda, const GenusContext& ctx) {
  lambda.check_rows(ctx);
  int g = ctx.g;
  std::vector<long long> l(g), m(g);
  Weight hw = lambda.highest_weight(ctx);
  for (int i = 0; i < g; ++i) {
    l[i] = hw[i] + g - i;
    m[i] = g - i;
  }
  Rational dim(1);
  for (int i = 0; i < g; ++i)
    dim *= Rational(static_cast<long>(l[i]), static_cast<long>(m[i]));
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j)
      dim *= Rational(static_cast<long>(l[i] * l[i] - l[j] * l[j]),
                      static_cast<long>(m[i] * m[i] - m[j] * m[j]));
  dim.canonicalize();
  if (dim.get_den() != 1) throw std::logic_error("weyl_dim: non-integral result");
  return static_cast<long long>(dim.get_num().get_si());
}

// Full weight multiplicity table of an irreducible character.
using WeightTable = std::map<Weight, long long>;

namespace detail {

inline Weight dominant_rep(Weight w) {
  for (int& x : w) x = std::abs(x);
  std::sort(w.begin(), w.end(), std::greater<int>());
  return w;
}

inline long long dot(const Weight& a, const Weight& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

// All dominant mu with lambda - mu in the positive root lattice of C_g:
// partial sums of lambda - mu nonnegative and the total difference even.
inline void dominant_candidates(const Weight& lambda, int g, Weight& cur, int pos, int psum_l,
                                int psum_m, std::vector<Weight>& out) {
  if (pos == g) {
    if ((psum_l - psum_m) % 2 == 0) out.push_back(cur);
    return;
  }
  // weakly decreasing, and partial sums dominated by lambda's
  int hi = psum_l + lambda[pos] - psum_m;
  if (pos > 0) hi = std::min(hi, cur[pos - 1]);
  for (int v = hi; v >= 0; --v) {
    cur[pos] = v;
    dominant_candidates(lambda, g, cur, pos + 1, psum_l + lambda[pos], psum_m + v, out);
  }
  cur[pos] = 0;
}

inline std::vector<Weight> positive_roots(int g) {
  std::vector<Weight> roots;
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j) {
      Weight r(g, 0);
      r[i] = 1;
      r[j] = -1;
      roots.push_back(r);
      r[j] = 1;
      roots.push_back(r);
    }
  for (int i = 0; i < g; ++i) {
    Weight r(g, 0);
    r[i] = 2;
    roots.push_back(r);
  }
  return roots;
}

}  // namespace detail

// Freudenthal's recursion for the full weight multiplicity table, computed
// on dominant weights in increasing distance from lambda and then expanded
// over the Weyl group (signed permutations).
inline const WeightTable& freudenthal(const YoungDiagram& lambda, const GenusContext& ctx) {
  static std::map<std::pair<std::vector<int>, int>, WeightTable> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(lambda.rows, ctx.g);
  auto cached = cache.find(key);
  if (cached != cache.end()) return cached->second;

  lambda.check_rows(ctx);
  const int g = ctx.g;
  const Weight hw = lambda.highest_weight(ctx);
  const int total = lambda.boxes();

  std::vector<Weight> cands;
  Weight cur(g, 0);
  detail::dominant_candidates(hw, g, cur, 0, 0, 0, cands);
  // Height of lambda - mu: sum of the simple-root coefficients.
  auto height = [&](const Weight& mu) {
    long long h = 0, ps = 0;
    for (int t = 0; t < g - 1; ++t) {
      ps += hw[t] - mu[t];
      h += ps;
    }
    ps += hw[g - 1] - mu[g - 1];
    return h + ps / 2;
  };
  std::sort(cands.begin(), cands.end(), [&](const Weight& a, const Weight& b) {
    long long ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });

  Weight rho(g);
  for (int i = 0; i < g; ++i) rho[i] = g - i;
  Weight lr = hw;
  for (int i = 0; i < g; ++i) lr[i] += rho[i];
  const long long lr2 = detail::dot(lr, lr);
  const auto roots = detail::positive_roots(g);

  std::map<Weight, long long> dom_mult;
  for (const Weight& mu : cands) {
    if (mu == hw) {
      dom_mult[mu] = 1;
      continue;
    }
    long long num = 0;
    for (const Weight& alpha : roots) {
      for (int t = 1;; ++t) {
        Weight nu(g);
        int abs_sum = 0;
        for (int i = 0; i < g; ++i) {
          nu[i] = mu[i] + t * alpha[i];
          abs_sum += std::abs(nu[i]);
        }
        if (abs_sum > total) break;
        auto it = dom_mult.find(detail::dominant_rep(nu));
        if (it == dom_mult.end() || it->second == 0) continue;
        num += it->second * detail::dot(nu, alpha);
      }
    }
    Weight mr = mu;
    for (int i = 0; i < g; ++i) mr[i] += rho[i];
    long long den = lr2 - detail::dot(mr, mr);
    if (den <= 0) throw std::logic_error("freudenthal: nonpositive denominator");
    if ((2 * num) % den != 0) throw std::logic_error("freudenthal: non-integral multiplicity");
    dom_mult[mu] = 2 * num / den;
  }

  WeightTable table;
  for (const auto& [mu, m] : dom_mult) {
    if (m == 0) continue;
    Weight sorted = mu;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> nonzero_pos;
    do {
      nonzero_pos.clear();
      for (int i = 0; i < g; ++i)
        if (sorted[i] != 0) nonzero_pos.push_back(i);
      int n = static_cast<int>(nonzero_pos.size());
      for (int mask = 0; mask < (1 << n); ++mask) {
        Weight w = sorted;
        for (int b = 0; b < n; ++b)
          if (mask & (1 << b)) w[nonzero_pos[b]] = -w[nonzero_pos[b]];
        table[w] += m;
      }
    } while (std::next_permutation(sorted.begin(), sorted.end()));
  }
  return cache.emplace(std::move(key), std::move(table)).first->second;
}

// --- character arithmetic ---------------------------------------------------

inline WeightTable char_product(const WeightTable& a, const WeightTable& b) {
  WeightTable out;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) {
      Weight w(wa.size());
      for (size_t i = 0; i < w.size(); ++i) w[i] = wa[i] + wb[i];
      out[w] += ma * mb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

// Character of wedge^2 V from the character of V:
// ch_{^2 V}(w) = (sum_{u+v=w} m(u)m(v) - m(w/2)) / 2.
inline WeightTable char_wedge_square(const WeightTable& a) {
  WeightTable conv = char_product(a, a);
  WeightTable out;
  for (const auto& [w, m] : conv) {
    long long diag = 0;
    bool even = true;
    Weight half(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i] % 2 != 0) even = false;
      half[i] = w[i] / 2;
    }
    if (even) {
      auto it = a.find(half);
      if (it != a.end()) diag = it->second;
    }
    long long val = (m - diag) / 2;
    if ((m - diag) % 2 != 0) throw std::logic_error("char_wedge_square parity");
    if (val != 0) out[w] = val;
  }
  return out;
}

inline WeightTable char_diff(const WeightTable& a, const WeightTable& b) {
  WeightTable out = a;
  for (const auto& [w, m] : b) {
    out[w] -= m;
    if (out[w] == 0) out.erase(w);
  }
  return out;
}

inline long long char_total(const WeightTable& a) {
  long long n = 0;
  for (const auto& [w, m] : a) n += m;
  return n;
}

// --- decomposition ------------------------------------------------------------

struct DecompositionResult {
  std::map<YoungDiagram, long long> mult;

  std::string str() const {
    if (mult.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
      if (!first) s += " + ";
      if (it->second != 1) s += std::to_string(it->second);
      s += it->first.str();
      first = false;
    }
    return s;
  }

  bool operator==(const DecompositionResult&) const = default;
};

// Greedy peeling: repeatedly take the lexicographically largest dominant
// weight with positive multiplicity and subtract its Freudenthal table.
// Fails loudly if the input is not a genuine character.
inline DecompositionResult decompose(WeightTable table, const GenusContext& ctx) {
  DecompositionResult out;
  for (auto it = table.begin(); it != table.end();)
    it = (it->second == 0) ? table.erase(it) : std::next(it);
  while (!table.empty()) {
    auto top = table.rbegin();
    Weight w = top->first;
    long long m = top->second;
    bool dominant = w.back() >= 0;
    for (size_t i = 1; i < w.size(); ++i)
      if (w[i] > w[i - 1]) dominant = false;
    if (!dominant || m < 0)
      throw std::invalid_argument("decompose: weight table is not a character (at " +
                                  weight_str(w) + ")");
    YoungDiagram lambda{std::vector<int>(w.begin(), w.end())};  // ctor strips trailing zeros
    out.mult[lambda] += m;
    for (const auto& [mw, mm] : freudenthal(lambda, ctx)) {
      table[mw] -= m * mm;
      if (table[mw] == 0) table.erase(mw);
    }
  }
  return out;
}

// --- weights of explicitly presented subspaces -------------------------------

// Multiset of sp-weights of a basis of the span: inputs are split into
// weight-homogeneous parts and ranks are taken per weight block.
inline WeightTable weights_of_subspace(const std::vector<Tensor>& basis, const GenusContext& ctx) {
  int degree = -1;
  std::map<Weight, RowSpan> blocks;
  for (const Tensor& t : basis) {
    if (t.is_zero()) continue;
    if (degree < 0) degree = t.degree;
    if (t.degree != degree) throw std::invalid_argument("weights_of_subspace: degree mismatch");
    for (auto& [w, part] : split_by_weight(t, ctx)) blocks[w].insert(part.terms);
  }
  WeightTable out;
  for (const auto& [w, span] : blocks)
    if (span.rank()) out[w] = static_cast<long long>(span.rank());
  return out;
}

// --- highest weight vectors ---------------------------------------------------

// The raising operators are the simple ones: X(i,i+1) for i < g, and U(g).
inline std::vector<SpGenerator> raising_operators(const GenusContext& ctx) {
  std::vector<SpGenerator> ops;
  for (int i = 1; i < ctx.g; ++i) ops.push_back(SpGenerator::x(i, i + 1));
  ops.push_back(SpGenerator::u(ctx.g));
  return ops;
}

template <class Element>
inline bool is_highest_weight_vector(const Element& v, const YoungDiagram& lambda,
                                     const GenusContext& ctx) {
  if (v.is_zero()) throw std::invalid_argument("is_highest_weight_vector: zero vector");
  lambda.check_rows(ctx);
  try {
    if (weight_of(v, ctx) != lambda.highest_weight(ctx)) return false;
  } catch (const std::invalid_argument&) {
    return false;  // not weight-homogeneous
  }
  for (const SpGenerator& gen : raising_operators(ctx))
    if (!sp_apply(gen, v).is_zero()) return false;
  return true;
}

// The paper's explicit highest weight vector of [n_1 ... n_l]: transpose the
// diagram to [m_1 ... m_k] and take (a_1^...^a_{m_1}) (x) ... (x)
// (a_1^...^a_{m_k}).
inline MultiWedgeElement highest_weight_vector(const YoungDiagram& lambda,
                                               const GenusContext& ctx) {
  lambda.check_rows(ctx);
  YoungDiagram tr = lambda.transpose();
  std::vector<int> sizes = tr.rows;
  if (sizes.empty()) sizes.push_back(0);
  MultiWedgeElement v(sizes);
  std::vector<Word> blocks;
  for (int s : sizes) {
    Word b;
    for (int i = 1; i <= s; ++i) b.push_back(static_cast<char>(Letter::a(i).code));
    blocks.push_back(b);
  }
  v.add_blocks(blocks, Rational(1));
  return v;
}

// --- characters of the Johnson-image spaces ----------------------------------

// Character of h_{g,1}(k) = Ker(H (x) L(k+1) -> L(k+2)), per weight block.
inline WeightTable h_weight_table(int k, const GenusContext& ctx) {
  auto monomials = lyndon_words(k + 1, ctx.alphabet_size());
  std::map<Weight, long long> keys_per_weight;
  std::map<Weight, RowSpan> image_blocks;
  for (int code = 0; code < ctx.alphabet_size(); ++code) {
    Letter x = Letter::from_code(code);
    for (const Word& m : monomials) {
      Weight w = weight_of_word(m, ctx);
      add_letter_weight(w, x);
      ++keys_per_weight[w];
      Tensor img = commutator(letter_tensor(x), iota_monomial(m));
      image_blocks[w].insert(img.terms);
    }
  }
  WeightTable out;
  for (const auto& [w, n] : keys_per_weight) {
    long long dim = n - static_cast<long long>(image_blocks[w].rank());
    if (dim != 0) out[w] = dim;
  }
  return out;
}

// Character of h_{g,*}(k) = Ker(H (x) L_g(k+1) -> L_g(k+2)).
inline WeightTable hstar_weight_table(int k, const GenusContext& ctx) {
  const QuotientContext& q1 = quotient_context(k + 1, ctx);
  const QuotientContext& q2 = quotient_context(k + 2, ctx);
  auto monomials = lyndon_words(k + 1, ctx.alphabet_size());
  std::map<Weight, long long> keys_per_weight;
  std::map<Weight, RowSpan> image_blocks;
  for (int code = 0; code < ctx.alphabet_size(); ++code) {
    Letter x = Letter::from_code(code);
    for (const Word& m : monomials) {
      if (q1.is_pivot(m)) continue;  // coset coordinates of L_g(k+1)
      Weight w = weight_of_word(m, ctx);
      add_letter_weight(w, x);
      ++keys_per_weight[w];
      LieElement bracket = lie_bracket(lie_letter(x), [&] {
        LieElement mono(k + 1);
        mono.add_term(m, Rational(1));
        return mono;
      }());
      image_blocks[w].insert(q2.reduce(bracket).terms);
    }
  }
  WeightTable out;
  for (const auto& [w, n] : keys_per_weight) {
    long long dim = n - static_cast<long long>(image_blocks[w].rank());
    if (dim != 0) out[w] = dim;
  }
  return out;
}

// Character of the image of Psi_k inside h_{g,*}(k).
inline WeightTable psi_image_table(int k, const GenusContext& ctx) {
  std::map<Weight, RowSpan> blocks;
  for (const Word& m : lyndon_words(k, ctx.alphabet_size())) {
    LieElement mono(k);
    mono.add_term(m, Rational(1));
    HLElement v = closed_project(eta(phi(mono, ctx)), ctx);
    if (v.is_zero()) continue;
    blocks[weight_of(v, ctx)].insert(v.terms);
  }
  WeightTable out;
  for (const auto& [w, span] : blocks)
    if (span.rank()) out[w] = static_cast<long long>(span.rank());
  return out;
}

// Character of h_g(k) = h_{g,*}(k) / Psi_k(L_g(k)).
inline WeightTable hg_weight_table(int k, const GenusContext& ctx) {
  WeightTable out = char_diff(hstar_weight_table(k, ctx), psi_image_table(k, ctx));
  for (const auto& [w, m] : out)
    if (m < 0) throw std::logic_error("hg_weight_table: negative multiplicity");
  return out;
}

}  // namespace symplie

#pragma once

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "symplie/tensor.hpp"

namespace symplie {

// w is Lyndon iff it is strictly smaller than each of its proper suffixes.
inline bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (size_t i = 1; i < w.size(); ++i)
    if (w.compare(w.substr(i)) >= 0) return false;
  return true;
}

// Standard factorization w = uv with v the lexicographically smallest
// (equivalently, longest Lyndon) proper suffix.  The canonical bracketing of
// the basis monomial b(w) is [b(u), b(v)].
inline std::pair<Word, Word> std_factor(const Word& w) {
  if (w.size() < 2) throw std::invalid_argument("std_factor: word too short");
  size_t best = 1;
  for (size_t i = 2; i < w.size(); ++i)
    if (w.compare(i, Word::npos, w, best, Word::npos) < 0) best = i;
  return {w.substr(0, best), w.substr(best)};
}

// All Lyndon words of length exactly k over letter codes 0..n-1, in
// lexicographic order (Duval's algorithm).
inline std::vector<Word> lyndon_words(int k, int n) {
  if (k < 1) throw std::invalid_argument("lyndon_words: k must be >= 1");
  std::vector<Word> out;
  std::string w(1, static_cast<char>(-1));
  while (!w.empty()) {
    ++w.back();
    if (static_cast<int>(w.size()) == k) out.push_back(w);
    size_t m = w.size();
    while (static_cast<int>(w.size()) < k) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == static_cast<char>(n - 1)) w.pop_back();
  }
  return out;
}

// Witt's necklace formula: dim of the degree-k part of the free Lie algebra
// on n generators.
inline long long witt_dimension(int k, int n) {
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
    if (k % d == 0) {
      long long pw = 1;
      for (int e = 0; e < k / d; ++e) pw *= n;
      sum += mobius(d) * pw;
    }
  return sum / k;
}

// iota(b(w)): canonical inclusion of the basis monomial into H^{(x)k},
// replacing each bracket [X,Y] by X(x)Y - Y(x)X.  Triangular: the expansion
// is w plus lexicographically larger words.  Memoized.
inline const Tensor& iota_monomial(const Word& w) {
  static std::map<Word, Tensor> cache;  // node-stable, so references persist
  static std::recursive_mutex mtx;
  std::lock_guard<std::recursive_mutex> lock(mtx);
  auto it = cache.find(w);
  if (it != cache.end()) return it->second;
  Tensor t(static_cast<int>(w.size()));
  if (w.size() == 1) {
    t.add_term(w, Rational(1));
  } else {
    auto [u, v] = std_factor(w);
    t = commutator(iota_monomial(u), iota_monomial(v));
  }
  return cache.emplace(w, std::move(t)).first->second;
}

// Homogeneous element of the free Lie algebra in Lyndon coordinates.
struct LieElement {
  int degree = 0;
  std::map<Word, Rational> terms;  // keys are Lyndon words of length == degree

  LieElement() = default;
  explicit LieElement(int deg) : degree(deg) {}

  bool is_zero() const { return terms.empty(); }

  void add_term(const Word& w, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms.erase(it);
    }
  }

  LieElement& operator+=(const LieElement& o) {
    if (degree != o.degree) throw std::invalid_argument("lie degree mismatch");
    for (const auto& [w, c] : o.terms) add_term(w, c);
    return *this;
  }
  LieElement& operator-=(const LieElement& o) {
    if (degree != o.degree) throw std::invalid_argument("lie degree mismatch");
    for (const auto& [w, c] : o.terms) add_term(w, -c);
    return *this;
  }
  LieElement& operator*=(const Rational& c) {
    if (sgn(c) == 0) {
      terms.clear();
      return *this;
    }
    for (auto& [w, v] : terms) v *= c;
    return *this;
  }

  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Rational& c, LieElement x) { return x *= c; }

  bool operator==(const LieElement& o) const { return degree == o.degree && terms == o.terms; }
};

inline Tensor iota(const LieElement& x) {
  Tensor t(x.degree);
  for (const auto& [w, c] : x.terms) t += c * iota_monomial(w);
  return t;
}

// Inverts iota by greedy triangular elimination: the lexicographically
// smallest surviving word must be Lyndon and carries its own coefficient.
// Throws if the tensor is not in the image of iota.
inline LieElement lie_from_tensor(Tensor t) {
  LieElement x(t.degree);
  while (!t.is_zero()) {
    const Word w = t.terms.begin()->first;
    const Rational c = t.terms.begin()->second;
    if (!is_lyndon(w))
      throw std::invalid_argument("lie_from_tensor: tensor is not a Lie element (lead word " +
                                  word_str(w) + ")");
    x.add_term(w, c);
    t -= c * iota_monomial(w);
  }
  return x;
}

inline LieElement lie_letter(Letter l) {
  LieElement x(1);
  x.add_term(Word(1, static_cast<char>(l.code)), Rational(1));
  return x;
}

inline LieElement lie_bracket(const LieElement& x, const LieElement& y) {
  return lie_from_tensor(commutator(iota(x), iota(y)));
}

// omega_0 = sum_i [a_i, b_i]; each word a_i b_i is already Lyndon.
inline LieElement omega0_lie(const GenusContext& ctx) {
  LieElement x(2);
  for (int i = 1; i <= ctx.g; ++i)
    x.add_term(word_of({Letter::a(i), Letter::b(i)}), Rational(1));
  return x;
}

inline std::vector<Word> lyndon_basis(int k, const GenusContext& ctx) {
  return lyndon_words(k, ctx.alphabet_size());
}

inline LieElement sp_apply(const SpGenerator& gen, const LieElement& x) {
  return lie_from_tensor(sp_apply(gen, iota(x)));
}

inline Weight weight_of_lie(const Word& monomial, const GenusContext& ctx) {
  return weight_of_word(monomial, ctx);
}

// Nested-bracket rendering of a basis monomial, e.g. "[a1,[a1,b1]]".
inline std::string lie_monomial_str(const Word& w) {
  if (w.size() == 1) return Letter::from_code(static_cast<unsigned char>(w[0])).str();
  auto [u, v] = std_factor(w);
  return "[" + lie_monomial_str(u) + "," + lie_monomial_str(v) + "]";
}

inline std::string lie_str(const LieElement& x) {
  if (x.terms.empty()) return "0";
  std::string s;
  bool leading = true;
  for (const auto& [w, c] : x.terms) {
    s += coeff_prefix(c, leading) + lie_monomial_str(w);
    leading = false;
  }
  return s;
}

}  // namespace symplie

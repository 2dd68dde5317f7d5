#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symplie/genus.hpp"
#include "symplie/rational.hpp"

namespace symplie {

// A degree-k basis word of  H^{(x)k}, stored as one letter code per byte.
// std::string compares bytewise, which is exactly the lexicographic order on
// words induced by the letter order; the empty word is the basis of
// (x)^0 H = Q.
using Word = std::string;

inline Word word_of(std::initializer_list<Letter> ls) {
  Word w;
  for (Letter l : ls) w.push_back(static_cast<char>(l.code));
  return w;
}

inline std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += "⊗";  // tensor sign
    s += Letter::from_code(static_cast<unsigned char>(w[i])).str();
  }
  return s;
}

// Sparse exact element of H^{(x)k}.  Invariants: every stored word has length
// == degree and no stored coefficient is zero.
struct Tensor {
  int degree = 0;
  std::map<Word, Rational> terms;

  Tensor() = default;
  explicit Tensor(int deg) : degree(deg) {}

  bool is_zero() const { return terms.empty(); }

  void add_term(const Word& w, const Rational& c) {
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms.erase(it);
    }
  }

  Tensor& operator+=(const Tensor& o) {
    require_same_degree(o);
    for (const auto& [w, c] : o.terms) add_term(w, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    require_same_degree(o);
    for (const auto& [w, c] : o.terms) add_term(w, -c);
    return *this;
  }
  Tensor& operator*=(const Rational& c) {
    if (sgn(c) == 0) {
      terms.clear();
      return *this;
    }
    for (auto& [w, v] : terms) v *= c;
    return *this;
  }

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Rational& c, Tensor t) { return t *= c; }
  friend Tensor operator-(Tensor t) { return t *= Rational(-1); }

  bool operator==(const Tensor& o) const { return degree == o.degree && terms == o.terms; }

 private:
  static bool is_zero_coeff(const Rational& c) { return sgn(c) == 0; }
  void require_same_degree(const Tensor& o) const {
    if (degree != o.degree) throw std::invalid_argument("tensor degree mismatch");
  }
};

inline Tensor letter_tensor(Letter x) {
  Tensor t(1);
  t.add_term(Word(1, static_cast<char>(x.code)), Rational(1));
  return t;
}

inline Tensor scalar_tensor(const Rational& c) {
  Tensor t(0);
  t.add_term(Word(), c);
  return t;
}

// Concatenation product H^{(x)k} x H^{(x)l} -> H^{(x)(k+l)}.
inline Tensor tensor_product(const Tensor& a, const Tensor& b) {
  Tensor r(a.degree + b.degree);
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) r.add_term(wa + wb, ca * cb);
  return r;
}

// a (x) b - b (x) a, defined for any degrees; iota replaces every Lie
// bracket by this commutator.
inline Tensor commutator(const Tensor& a, const Tensor& b) {
  return tensor_product(a, b) - tensor_product(b, a);
}

// The commutator restricted to equal degrees: the image of X ^ Y under the
// inclusion of wedge^2 into the tensor square.
inline Tensor wedge_square_embed(const Tensor& a, const Tensor& b) {
  if (a.degree != b.degree) throw std::invalid_argument("wedge_square_embed: degree mismatch");
  return commutator(a, b);
}

// Contraction C_k^{(i,j)}: pair positions i<j (1-based) by mu and delete
// them; remaining positions keep their relative order.
inline Tensor contract(const Tensor& t, int i, int j) {
  if (t.degree < 2) throw std::invalid_argument("contract: degree must be >= 2");
  if (!(1 <= i && i < j && j <= t.degree))
    throw std::invalid_argument("contract: need 1 <= i < j <= degree");
  Tensor r(t.degree - 2);
  for (const auto& [w, c] : t.terms) {
    int m = mu(Letter::from_code(static_cast<unsigned char>(w[i - 1])),
               Letter::from_code(static_cast<unsigned char>(w[j - 1])));
    if (m == 0) continue;
    Word v;
    v.reserve(w.size() - 2);
    for (int p = 0; p < t.degree; ++p)
      if (p != i - 1 && p != j - 1) v.push_back(w[p]);
    r.add_term(v, Rational(m) * c);
  }
  return r;
}

// The scalar value of a degree-0 tensor.
inline Rational scalar_of(const Tensor& t) {
  if (t.degree != 0) throw std::invalid_argument("scalar_of: tensor has positive degree");
  if (t.terms.empty()) return Rational(0);
  return t.terms.begin()->second;
}

inline Rational mu_pairing(const Tensor& x, const Tensor& y) {
  if (x.degree != 1 || y.degree != 1) throw std::invalid_argument("mu: degree-1 tensors expected");
  return scalar_of(contract(tensor_product(x, y), 1, 2));
}

// --- sp(2g,Q) generators -------------------------------------------------

// One of X(i,j) (i != j), Y(i,j) (i != j), U(i), V(i), acting on letters by
//   X_{i,j}: a_j -> a_i,  b_i -> -b_j
//   Y_{i,j}: b_i -> a_j,  b_j -> a_i
//   U_i:     b_i -> a_i
//   V_i:     a_i -> b_i
// and by zero elsewhere.
struct SpGenerator {
  enum Kind { X, Y, U, V } kind;
  int i = 0, j = 0;

  static SpGenerator x(int i, int j) {
    if (i == j) throw std::invalid_argument("X(i,j) needs i != j");
    return {X, i, j};
  }
  static SpGenerator y(int i, int j) {
    if (i == j) throw std::invalid_argument("Y(i,j) needs i != j");
    return {Y, i, j};
  }
  static SpGenerator u(int i) { return {U, i, 0}; }
  static SpGenerator v(int i) { return {V, i, 0}; }

  std::string str() const {
    switch (kind) {
      case X: return "X[" + std::to_string(i) + "," + std::to_string(j) + "]";
      case Y: return "Y[" + std::to_string(i) + "," + std::to_string(j) + "]";
      case U: return "U[" + std::to_string(i) + "]";
      default: return "V[" + std::to_string(i) + "]";
    }
  }

  // Image of a single letter: at most one (letter, sign) pair.
  std::vector<std::pair<Letter, int>> on_letter(Letter x) const {
    std::vector<std::pair<Letter, int>> out;
    switch (kind) {
      case X:
        if (x.is_a() && x.index() == j) out.push_back({Letter::a(i), 1});
        if (x.is_b() && x.index() == i) out.push_back({Letter::b(j), -1});
        break;
      case Y:
        if (x.is_b() && x.index() == i) out.push_back({Letter::a(j), 1});
        if (x.is_b() && x.index() == j) out.push_back({Letter::a(i), 1});
        break;
      case U:
        if (x.is_b() && x.index() == i) out.push_back({Letter::a(i), 1});
        break;
      case V:
        if (x.is_a() && x.index() == i) out.push_back({Letter::b(i), 1});
        break;
    }
    return out;
  }
};

// Derivation (Leibniz) action on tensor powers: act on one position at a
// time and sum.
inline Tensor sp_apply(const SpGenerator& gen, const Tensor& t) {
  Tensor r(t.degree);
  for (const auto& [w, c] : t.terms) {
    for (int p = 0; p < t.degree; ++p) {
      for (auto [y, s] : gen.on_letter(Letter::from_code(static_cast<unsigned char>(w[p])))) {
        Word v = w;
        v[p] = static_cast<char>(y.code);
        r.add_term(v, Rational(s) * c);
      }
    }
  }
  return r;
}

inline Tensor sp_apply_word(const std::vector<SpGenerator>& word, Tensor t) {
  // Rightmost generator acts first, matching operator-composition notation.
  for (auto it = word.rbegin(); it != word.rend(); ++it) t = sp_apply(*it, t);
  return t;
}

// An Sp(2g,Q) element permuting basis letters, e.g. the swap
// (a_2 <-> a_3, b_2 <-> b_3).  perm maps letter codes to letter codes.
inline Tensor permute_letters(const Tensor& t, const std::vector<uint8_t>& perm) {
  Tensor r(t.degree);
  for (const auto& [w, c] : t.terms) {
    Word v = w;
    for (char& ch : v) ch = static_cast<char>(perm[static_cast<unsigned char>(ch)]);
    r.add_term(v, c);
  }
  return r;
}

inline std::vector<uint8_t> swap_indices_perm(const GenusContext& ctx, int i, int j) {
  std::vector<uint8_t> perm(2 * ctx.g);
  for (size_t c = 0; c < perm.size(); ++c) perm[c] = static_cast<uint8_t>(c);
  std::swap(perm[Letter::a(i).code], perm[Letter::a(j).code]);
  std::swap(perm[Letter::b(i).code], perm[Letter::b(j).code]);
  return perm;
}

// --- weights --------------------------------------------------------------

inline Weight weight_of_word(const Word& w, const GenusContext& ctx) {
  Weight wt = zero_weight(ctx);
  for (char ch : w) add_letter_weight(wt, Letter::from_code(static_cast<unsigned char>(ch)));
  return wt;
}

// Weight of a weight-homogeneous tensor; throws if the tensor mixes weights.
inline Weight weight_of(const Tensor& t, const GenusContext& ctx) {
  if (t.is_zero()) return zero_weight(ctx);
  Weight wt = weight_of_word(t.terms.begin()->first, ctx);
  for (const auto& [w, c] : t.terms)
    if (weight_of_word(w, ctx) != wt)
      throw std::invalid_argument("weight_of: tensor is not weight-homogeneous");
  return wt;
}

inline std::map<Weight, Tensor> split_by_weight(const Tensor& t, const GenusContext& ctx) {
  std::map<Weight, Tensor> parts;
  for (const auto& [w, c] : t.terms) {
    auto [it, inserted] = parts.emplace(weight_of_word(w, ctx), Tensor(t.degree));
    it->second.add_term(w, c);
  }
  return parts;
}

// --- printing -------------------------------------------------------------

inline std::string coeff_prefix(const Rational& c, bool leading) {
  // "", "-", "c " or "-c " with c printed as a reduced fraction.
  Rational a = abs(c);
  std::string mag = (a == 1) ? "" : a.get_str() + " ";
  if (leading) return (sgn(c) < 0 ? "-" : "") + mag;
  return (sgn(c) < 0 ? " - " : " + ") + mag;
}

inline std::string tensor_str(const Tensor& t) {
  if (t.terms.empty()) return "0";
  std::string s;
  bool leading = true;
  for (const auto& [w, c] : t.terms) {
    if (t.degree == 0) return rat_str(c);
    s += coeff_prefix(c, leading) + word_str(w);
    leading = false;
  }
  return s;
}

}  // namespace symplie

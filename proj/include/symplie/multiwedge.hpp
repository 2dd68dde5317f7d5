#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "symplie/tensor.hpp"

namespace symplie {

// An ordered partition of tensor positions {1..k} into ordered blocks,
// written (1,2,5)(4,3)(6) in the usual projection symbol notation.  Positions
// inside a block are listed in the order they are wedged, so (4,3) means
// x_4 ^ x_3.
struct WedgeShape {
  std::vector<std::vector<int>> blocks;

  WedgeShape() = default;
  WedgeShape(std::initializer_list<std::vector<int>> bs) : blocks(bs) {}

  int total() const {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return n;
  }

  void validate(int degree) const {
    std::vector<char> seen(degree, 0);
    int n = 0;
    for (const auto& b : blocks)
      for (int p : b) {
        if (p < 1 || p > degree) throw std::invalid_argument("wedge shape: position out of range");
        if (seen[p - 1]++) throw std::invalid_argument("wedge shape: repeated position");
        ++n;
      }
    if (n != degree) throw std::invalid_argument("wedge shape does not cover all positions");
  }

  std::vector<int> block_sizes() const {
    std::vector<int> s;
    for (const auto& b : blocks) s.push_back(static_cast<int>(b.size()));
    return s;
  }

  std::string str() const {
    std::string s;
    for (const auto& b : blocks) {
      s += "(";
      for (size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
      s += ")";
    }
    return s;
  }
};

// Sorts letters strictly increasing, accumulating the permutation sign.
// Returns false for a repeated letter (the wedge vanishes).
inline bool sort_wedge_word(Word& w, int& sign) {
  for (size_t i = 1; i < w.size(); ++i)
    for (size_t j = i; j > 0 && static_cast<unsigned char>(w[j]) < static_cast<unsigned char>(w[j - 1]); --j) {
      std::swap(w[j], w[j - 1]);
      sign = -sign;
    }
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1]) return false;
  return true;
}

// Element of (wedge^{k_1} H) (x) ... (x) (wedge^{k_l} H).  Term keys store one
// strictly increasing word per block, concatenated with a separator byte;
// the sort sign is absorbed into the coefficient.
struct MultiWedgeElement {
  std::vector<int> block_sizes;
  std::map<std::string, Rational> terms;

  MultiWedgeElement() = default;
  explicit MultiWedgeElement(std::vector<int> sizes) : block_sizes(std::move(sizes)) {}

  bool is_zero() const { return terms.empty(); }

  static constexpr char kSep = '\x7f';

  static std::string join(const std::vector<Word>& blocks) {
    std::string key;
    for (size_t i = 0; i < blocks.size(); ++i) {
      if (i) key.push_back(kSep);
      key += blocks[i];
    }
    return key;
  }

  static std::vector<Word> split(const std::string& key) {
    std::vector<Word> blocks;
    Word cur;
    for (char ch : key) {
      if (ch == kSep) {
        blocks.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    blocks.push_back(cur);
    return blocks;
  }

  // Adds a not-necessarily-sorted block tuple, canonicalizing with sign.
  void add_blocks(std::vector<Word> blocks, Rational c) {
    if (sgn(c) == 0) return;
    int sign = 1;
    for (auto& b : blocks)
      if (!sort_wedge_word(b, sign)) return;
    add_term(join(blocks), Rational(sign) * c);
  }

  void add_term(const std::string& key, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms.emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms.erase(it);
    }
  }

  MultiWedgeElement& operator+=(const MultiWedgeElement& o) {
    adopt_shape(o);
    for (const auto& [k, c] : o.terms) add_term(k, c);
    return *this;
  }
  MultiWedgeElement& operator-=(const MultiWedgeElement& o) {
    adopt_shape(o);
    for (const auto& [k, c] : o.terms) add_term(k, -c);
    return *this;
  }
  MultiWedgeElement& operator*=(const Rational& c) {
    if (sgn(c) == 0) {
      terms.clear();
      return *this;
    }
    for (auto& [k, v] : terms) v *= c;
    return *this;
  }

  friend MultiWedgeElement operator+(MultiWedgeElement a, const MultiWedgeElement& b) { return a += b; }
  friend MultiWedgeElement operator-(MultiWedgeElement a, const MultiWedgeElement& b) { return a -= b; }
  friend MultiWedgeElement operator*(const Rational& c, MultiWedgeElement m) { return m *= c; }

  bool operator==(const MultiWedgeElement& o) const {
    if (terms.empty() && o.terms.empty()) return true;
    return block_sizes == o.block_sizes && terms == o.terms;
  }

 private:
  // A zero element is shape-agnostic: it takes the other operand's shape.
  void adopt_shape(const MultiWedgeElement& o) {
    if (terms.empty() && !o.terms.empty()) {
      block_sizes = o.block_sizes;
      return;
    }
    if (!o.terms.empty() && block_sizes != o.block_sizes)
      throw std::invalid_argument("multiwedge shape mismatch");
  }
};

// The projection p_k^sigma: route each word's positions into the shape's
// blocks (in listed order), wedge within blocks and canonicalize.
inline MultiWedgeElement project(const Tensor& t, const WedgeShape& shape) {
  shape.validate(t.degree);
  MultiWedgeElement r(shape.block_sizes());
  for (const auto& [w, c] : t.terms) {
    std::vector<Word> blocks;
    blocks.reserve(shape.blocks.size());
    for (const auto& b : shape.blocks) {
      Word bw;
      for (int p : b) bw.push_back(w[p - 1]);
      blocks.push_back(std::move(bw));
    }
    r.add_blocks(std::move(blocks), c);
  }
  return r;
}

inline MultiWedgeElement sp_apply(const SpGenerator& gen, const MultiWedgeElement& m) {
  MultiWedgeElement r(m.block_sizes);
  for (const auto& [key, c] : m.terms) {
    auto blocks = MultiWedgeElement::split(key);
    for (size_t bi = 0; bi < blocks.size(); ++bi)
      for (size_t p = 0; p < blocks[bi].size(); ++p)
        for (auto [y, s] :
             gen.on_letter(Letter::from_code(static_cast<unsigned char>(blocks[bi][p])))) {
          auto nb = blocks;
          nb[bi][p] = static_cast<char>(y.code);
          r.add_blocks(std::move(nb), Rational(s) * c);
        }
  }
  return r;
}

inline Weight weight_of(const MultiWedgeElement& m, const GenusContext& ctx) {
  if (m.is_zero()) return zero_weight(ctx);
  Weight wt;
  bool first = true;
  for (const auto& [key, c] : m.terms) {
    Weight cur = zero_weight(ctx);
    for (char ch : key)
      if (ch != MultiWedgeElement::kSep)
        add_letter_weight(cur, Letter::from_code(static_cast<unsigned char>(ch)));
    if (first) {
      wt = cur;
      first = false;
    } else if (cur != wt) {
      throw std::invalid_argument("weight_of: multiwedge is not weight-homogeneous");
    }
  }
  return wt;
}

inline std::string multiwedge_str(const MultiWedgeElement& m) {
  if (m.terms.empty()) return "0";
  std::string s;
  bool leading = true;
  for (const auto& [key, c] : m.terms) {
    auto blocks = MultiWedgeElement::split(key);
    std::string body;
    for (size_t i = 0; i < blocks.size(); ++i) {
      if (i) body += "⊗";
      if (blocks[i].size() == 1) {
        body += Letter::from_code(static_cast<unsigned char>(blocks[i][0])).str();
      } else {
        body += "(";
        for (size_t p = 0; p < blocks[i].size(); ++p) {
          if (p) body += "∧";  // wedge sign
          body += Letter::from_code(static_cast<unsigned char>(blocks[i][p])).str();
        }
        body += ")";
      }
    }
    if (body.empty()) body = "1";
    s += coeff_prefix(c, leading) + body;
    leading = false;
  }
  return s;
}

}  // namespace symplie

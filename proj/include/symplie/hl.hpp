#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "symplie/linalg.hpp"
#include "symplie/multiwedge.hpp"
#include "symplie/quotient.hpp"
#include "symplie/tree.hpp"

namespace symplie {

// Element of H (x) L_{g,1}(k+1), the home of h_{g,1}(k) and of every
// Johnson-image vector.  Term keys pack the H-factor letter code followed by
// the Lyndon monomial of the L-factor.
struct HLElement {
  int degree = 0;  // k
  std::map<std::string, Rational> terms;

  HLElement() = default;
  explicit HLElement(int deg) : degree(deg) {}

  bool is_zero() const { return terms.empty(); }

  static std::string key(Letter x, const Word& monomial) {
    std::string k(1, static_cast<char>(x.code));
    return k + monomial;
  }
  static Letter key_letter(const std::string& k) {
    return Letter::from_code(static_cast<unsigned char>(k[0]));
  }
  static Word key_monomial(const std::string& k) { return k.substr(1); }

  void add_term(const std::string& k, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms.erase(it);
    }
  }

  void add(Letter x, const LieElement& u, const Rational& c = Rational(1)) {
    if (u.degree != degree + 1) throw std::invalid_argument("hl: Lie factor degree mismatch");
    for (const auto& [w, cw] : u.terms) add_term(key(x, w), c * cw);
  }

  HLElement& operator+=(const HLElement& o) {
    if (degree != o.degree) throw std::invalid_argument("hl degree mismatch");
    for (const auto& [k, c] : o.terms) add_term(k, c);
    return *this;
  }
  HLElement& operator-=(const HLElement& o) {
    if (degree != o.degree) throw std::invalid_argument("hl degree mismatch");
    for (const auto& [k, c] : o.terms) add_term(k, -c);
    return *this;
  }
  HLElement& operator*=(const Rational& c) {
    if (sgn(c) == 0) {
      terms.clear();
      return *this;
    }
    for (auto& [k, v] : terms) v *= c;
    return *this;
  }

  friend HLElement operator+(HLElement a, const HLElement& b) { return a += b; }
  friend HLElement operator-(HLElement a, const HLElement& b) { return a -= b; }
  friend HLElement operator*(const Rational& c, HLElement h) { return h *= c; }
  friend HLElement operator-(HLElement h) { return h *= Rational(-1); }

  bool operator==(const HLElement& o) const { return degree == o.degree && terms == o.terms; }

  // Image under 1 (x) iota in H^{(x)(k+2)}.
  Tensor to_tensor() const {
    Tensor t(degree + 2);
    for (const auto& [k, c] : terms) {
      const Tensor& ui = iota_monomial(key_monomial(k));
      for (const auto& [w, cw] : ui.terms) t.add_term(k.substr(0, 1) + w, c * cw);
    }
    return t;
  }
};

// eta: sum over univalent vertices v of label(v) (x) (rooted reading at v).
inline HLElement eta(const TreeElement& e) {
  HLElement h(e.degree);
  for (const auto& [c, t] : e.terms)
    for (int leaf : t.leaves())
      h.add(Letter::from_code(t.verts[leaf].label), lie_from_tensor(t.read_rooted_at(leaf)), c);
  return h;
}

// The bracket map H (x) L(k+1) -> L(k+2) whose kernel is h_{g,1}(k),
// computed in tensor coordinates (iota is injective, so vanishing there is
// equivalent).
inline Tensor bracket_defect(const HLElement& h) {
  Tensor t(h.degree + 2);
  for (const auto& [k, c] : h.terms) {
    Tensor bracket = commutator(letter_tensor(HLElement::key_letter(k)),
                                        iota_monomial(HLElement::key_monomial(k)));
    t += c * bracket;
  }
  return t;
}

inline bool is_in_h(const HLElement& h) { return bracket_defect(h).is_zero(); }

inline HLElement sp_apply(const SpGenerator& gen, const HLElement& h) {
  HLElement out(h.degree);
  for (const auto& [k, c] : h.terms) {
    Letter x = HLElement::key_letter(k);
    Word m = HLElement::key_monomial(k);
    for (auto [y, s] : gen.on_letter(x)) out.add_term(HLElement::key(y, m), Rational(s) * c);
    LieElement dm = lie_from_tensor(sp_apply(gen, iota_monomial(m)));
    out.add(x, dm, c);
  }
  return out;
}

inline Weight weight_of(const HLElement& h, const GenusContext& ctx) {
  if (h.is_zero()) return zero_weight(ctx);
  Weight wt;
  bool first = true;
  for (const auto& [k, c] : h.terms) {
    Weight cur = zero_weight(ctx);
    for (char ch : k) add_letter_weight(cur, Letter::from_code(static_cast<unsigned char>(ch)));
    if (first) {
      wt = cur;
      first = false;
    } else if (cur != wt) {
      throw std::invalid_argument("weight_of: hl element is not weight-homogeneous");
    }
  }
  return wt;
}

// --- the bracket of h_{g,1} via derivations --------------------------------
//
// An element h = sum x_i (x) u_i acts on letters by x -> sum mu(x_i, x) u_i
// and extends to a derivation D_h of the free Lie algebra.  The bracket is
// the derivation commutator, converted back through Poincare duality
// (T = sum_m a_m (x) T(b_m) - b_m (x) T(a_m)).  This is the independent
// cross-check of the welding bracket; the sign convention is pinned by their
// agreement on the degree-2 bracket computations.

namespace detail {

struct LetterAction {
  // Image of each letter code under the derivation.
  std::vector<LieElement> on;

  LetterAction(const HLElement& h, const GenusContext& ctx)
      : on(2 * ctx.g, LieElement(h.degree + 1)) {
    for (const auto& [k, c] : h.terms) {
      Letter xi = HLElement::key_letter(k);
      Word m = HLElement::key_monomial(k);
      for (int code = 0; code < 2 * ctx.g; ++code) {
        int mv = mu(xi, Letter::from_code(code));
        if (mv != 0) on[code].add_term(m, Rational(mv) * c);
      }
    }
  }
};

// D_h on the basis monomial b(w), by the Leibniz rule along the canonical
// bracketing.  Returns a Lie element of degree |w| + deg.
inline LieElement apply_derivation(const LetterAction& act, const Word& w, int deg,
                                   std::map<Word, LieElement>& memo) {
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;
  LieElement out(static_cast<int>(w.size()) + deg);
  if (w.size() == 1) {
    out = act.on[static_cast<unsigned char>(w[0])];
  } else {
    auto [u, v] = std_factor(w);
    LieElement du = apply_derivation(act, u, deg, memo);
    LieElement dv = apply_derivation(act, v, deg, memo);
    LieElement bu(static_cast<int>(u.size())), bv(static_cast<int>(v.size()));
    bu.add_term(u, Rational(1));
    bv.add_term(v, Rational(1));
    out = lie_bracket(du, bv) + lie_bracket(bu, dv);
  }
  memo.emplace(w, out);
  return out;
}

inline LieElement apply_derivation(const LetterAction& act, const LieElement& x, int deg,
                                   std::map<Word, LieElement>& memo) {
  LieElement out(x.degree + deg);
  for (const auto& [w, c] : x.terms) out += c * apply_derivation(act, w, deg, memo);
  return out;
}

}  // namespace detail

inline HLElement derivation_bracket(const HLElement& h1, const HLElement& h2,
                                    const GenusContext& ctx) {
  if (!is_in_h(h1) || !is_in_h(h2))
    throw std::logic_error("derivation_bracket: inputs must lie in h_{g,1}");
  detail::LetterAction a1(h1, ctx), a2(h2, ctx);
  std::map<Word, LieElement> memo1, memo2;
  HLElement out(h1.degree + h2.degree);
  for (int m = 1; m <= ctx.g; ++m) {
    for (Letter x : {Letter::a(m), Letter::b(m)}) {
      LieElement r = detail::apply_derivation(a1, a2.on[x.code], h1.degree, memo1) -
                     detail::apply_derivation(a2, a1.on[x.code], h2.degree, memo2);
      if (x.is_b())
        out.add(Letter::a(m), r);
      else
        out.add(Letter::b(m), r, Rational(-1));
    }
  }
  return out;
}

// --- detectors on h_{g,1}(2) ------------------------------------------------

inline MultiWedgeElement q12(const HLElement& h) {
  if (h.degree != 2) throw std::invalid_argument("q12: degree-2 element expected");
  return project(contract(h.to_tensor(), 1, 2), WedgeShape{{1, 2}});
}

inline Rational q0(const HLElement& h) {
  if (h.degree != 2) throw std::invalid_argument("q0: degree-2 element expected");
  return scalar_of(contract(contract(h.to_tensor(), 1, 2), 1, 2));
}

// --- closed-surface reductions ----------------------------------------------

// Componentwise projection of the L-factor to Labute's quotient: the image
// of h in H (x) L_g(k+1), written on canonical coset representatives.
inline HLElement closed_project(const HLElement& h, const GenusContext& ctx) {
  const QuotientContext& q = quotient_context(h.degree + 1, ctx);
  std::vector<LieElement> per_letter(2 * ctx.g, LieElement(h.degree + 1));
  for (const auto& [k, c] : h.terms)
    per_letter[static_cast<unsigned char>(k[0])].add_term(HLElement::key_monomial(k), c);
  HLElement out(h.degree);
  for (int code = 0; code < 2 * ctx.g; ++code)
    out.add(Letter::from_code(code), q.reduce(per_letter[code]));
  return out;
}

// The image of Psi_k = closed_project . eta . Phi_k on L(k), reduced per
// sp-weight block and built lazily; shared read-only across checks.
class PsiImage {
 public:
  PsiImage(int k, GenusContext ctx) : k_(k), ctx_(ctx) {}

  bool contains(const HLElement& closed) {
    std::map<Weight, SparseVec> parts;
    for (const auto& [k, c] : closed.terms) {
      Weight wt = zero_weight(ctx_);
      for (char ch : k) add_letter_weight(wt, Letter::from_code(static_cast<unsigned char>(ch)));
      parts[wt][k] = c;
    }
    std::lock_guard<std::mutex> lock(mtx_);
    for (auto& [wt, vec] : parts)
      if (!block(wt).contains(std::move(vec))) return false;
    return true;
  }

 private:
  const RowSpan& block(const Weight& wt) {
    auto it = blocks_.find(wt);
    if (it != blocks_.end()) return it->second;
    RowSpan span;
    for (const Word& m : lyndon_words(k_, ctx_.alphabet_size())) {
      if (weight_of_word(m, ctx_) != wt) continue;
      LieElement mono(k_);
      mono.add_term(m, Rational(1));
      HLElement v = closed_project(eta(phi(mono, ctx_)), ctx_);
      span.insert(v.terms);
    }
    return blocks_.emplace(wt, std::move(span)).first->second;
  }

  int k_;
  GenusContext ctx_;
  std::mutex mtx_;
  std::map<Weight, RowSpan> blocks_;
};

inline PsiImage& psi_image(int k, const GenusContext& ctx) {
  static std::map<std::pair<int, int>, std::unique_ptr<PsiImage>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(k, ctx.g);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<PsiImage>(k, ctx)).first;
  return *it->second;
}

// True iff h dies in h_g(k), i.e. its closed projection lies in the image of
// Psi_k (the bottom row of the Phi/Psi diagram is exact).
inline bool is_in_closed_kernel(const HLElement& h, const GenusContext& ctx) {
  if (!is_in_h(h)) throw std::logic_error("is_in_closed_kernel: input must lie in h_{g,1}");
  return psi_image(h.degree, ctx).contains(closed_project(h, ctx));
}

// --- printing ---------------------------------------------------------------

inline std::string hl_str(const HLElement& h) {
  if (h.terms.empty()) return "0";
  std::string s;
  bool leading = true;
  for (const auto& [k, c] : h.terms) {
    s += coeff_prefix(c, leading) + HLElement::key_letter(k).str() + "⊗" +
         lie_monomial_str(HLElement::key_monomial(k));
    leading = false;
  }
  return s;
}

}  // namespace symplie

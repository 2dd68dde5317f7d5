#pragma once

#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "symplie/lie.hpp"
#include "symplie/tensor.hpp"

namespace symplie {

// A connected unitrivalent tree whose univalent vertices carry basis letters
// and whose trivalent vertices carry a cyclic (counterclockwise) order of
// their incident edges.  Degree = (#univalent) - 2.
//
// The planar figures are read with the counterclockwise convention: rooting
// the tree at a univalent vertex and walking in, the two subtrees at each
// trivalent vertex are taken in cyclic order after the incoming edge.  That
// convention reproduces the reference expansions of the H-tree and the
// 6-leaf caterpillar exactly.
struct LabeledTree {
  struct Vertex {
    std::vector<int> nbr;  // size 1 (leaf) or 3 (trivalent, ccw order)
    int label = -1;        // letter code for leaves, -1 otherwise
  };
  std::vector<Vertex> verts;

  int add_leaf(Letter l) {
    verts.push_back({{}, l.code});
    return static_cast<int>(verts.size()) - 1;
  }
  int add_internal() {
    verts.push_back({{}, -1});
    return static_cast<int>(verts.size()) - 1;
  }
  void wire(int internal, int n0, int n1, int n2) {
    verts[internal].nbr = {n0, n1, n2};
    for (int n : {n0, n1, n2})
      if (verts[n].label >= 0) verts[n].nbr = {internal};
  }

  bool is_leaf(int v) const { return verts[v].label >= 0; }

  int num_leaves() const {
    int n = 0;
    for (const auto& v : verts) n += (v.label >= 0);
    return n;
  }
  int degree() const { return num_leaves() - 2; }

  std::vector<int> leaves() const {
    std::vector<int> ls;
    for (size_t i = 0; i < verts.size(); ++i)
      if (verts[i].label >= 0) ls.push_back(static_cast<int>(i));
    return ls;
  }

  // iota-image of the rooted planar binary tree obtained by entering vertex
  // `v` along the edge from `from`.
  Tensor read_from(int v, int from) const {
    if (is_leaf(v)) return letter_tensor(Letter::from_code(verts[v].label));
    const auto& nb = verts[v].nbr;
    int idx = -1;
    for (int t = 0; t < 3; ++t)
      if (nb[t] == from) idx = t;
    if (idx < 0) throw std::logic_error("tree reading: bad incoming edge");
    Tensor left = read_from(nb[(idx + 1) % 3], v);
    Tensor right = read_from(nb[(idx + 2) % 3], v);
    return commutator(left, right);
  }

  // Rooted reading with the labeled root removed: the Lie element T_v.
  Tensor read_rooted_at(int leaf) const {
    return read_from(verts[leaf].nbr[0], leaf);
  }
};

inline LabeledTree tripod(Letter x, Letter y, Letter z) {
  LabeledTree t;
  int lx = t.add_leaf(x), ly = t.add_leaf(y), lz = t.add_leaf(z);
  int c = t.add_internal();
  t.wire(c, lx, ly, lz);
  return t;
}

// The H-shaped degree-2 tree T^H(a,b,c,d): a upper-left, b lower-left,
// c lower-right, d upper-right.
inline LabeledTree h_tree(Letter a, Letter b, Letter c, Letter d) {
  LabeledTree t;
  int la = t.add_leaf(a), lb = t.add_leaf(b), lc = t.add_leaf(c), ld = t.add_leaf(d);
  int L = t.add_internal(), R = t.add_internal();
  t.wire(L, la, lb, R);
  t.wire(R, L, lc, ld);
  return t;
}

// The degree-4 caterpillar T(a,b,c,d,e,f): spine a--*--*--*--*--f with
// pendant leaves b,c,d,e above the spine.
inline LabeledTree caterpillar(Letter a, Letter b, Letter c, Letter d, Letter e, Letter f) {
  LabeledTree t;
  int la = t.add_leaf(a), lb = t.add_leaf(b), lc = t.add_leaf(c);
  int ld = t.add_leaf(d), le = t.add_leaf(e), lf = t.add_leaf(f);
  int v1 = t.add_internal(), v2 = t.add_internal(), v3 = t.add_internal(), v4 = t.add_internal();
  t.wire(v1, la, v2, lb);
  t.wire(v2, v1, v3, lc);
  t.wire(v3, v2, v4, ld);
  t.wire(v4, v3, lf, le);
  return t;
}

// The degree-3 summand of theta_1: apex leaf a_1, two descending legs, the
// left leg ending in a_i with a pendant a_1, the right leg ending in a_1
// with a pendant b_i, leaves read a_i, a_1, b_i, a_1 along the bottom.
inline LabeledTree theta1_summand(int i) {
  LabeledTree t;
  int top = t.add_leaf(Letter::a(1));
  int lai = t.add_leaf(Letter::a(i));
  int lp = t.add_leaf(Letter::a(1));
  int lbi = t.add_leaf(Letter::b(i));
  int lq = t.add_leaf(Letter::a(1));
  int P = t.add_internal(), L = t.add_internal(), R = t.add_internal();
  t.wire(P, top, L, R);
  t.wire(L, P, lai, lp);
  t.wire(R, P, lbi, lq);
  return t;
}

// Formal rational combination of labeled trees.  Purely syntactic: AS/IHX
// are never rewritten; equality of tree elements means equality of
// eta-images.
struct TreeElement {
  int degree = 0;
  std::vector<std::pair<Rational, LabeledTree>> terms;

  TreeElement() = default;
  explicit TreeElement(int deg) : degree(deg) {}

  void add(const Rational& c, LabeledTree t) {
    if (sgn(c) == 0) return;
    if (t.degree() != degree) throw std::invalid_argument("tree degree mismatch");
    terms.emplace_back(c, std::move(t));
  }

  TreeElement& operator+=(const TreeElement& o) {
    if (degree != o.degree) throw std::invalid_argument("tree degree mismatch");
    for (const auto& [c, t] : o.terms) terms.emplace_back(c, t);
    return *this;
  }
  TreeElement& operator*=(const Rational& c) {
    if (sgn(c) == 0) {
      terms.clear();
      return *this;
    }
    for (auto& [v, t] : terms) v *= c;
    return *this;
  }
  friend TreeElement operator+(TreeElement a, const TreeElement& b) { return a += b; }
  friend TreeElement operator*(const Rational& c, TreeElement t) { return t *= c; }
  friend TreeElement operator-(TreeElement t) { return t *= Rational(-1); }
};

inline TreeElement tree_elem(LabeledTree t, Rational c = Rational(1)) {
  TreeElement e(t.degree());
  e.add(c, std::move(t));
  return e;
}

// Welds two trees at a pair of univalent vertices: both labels are deleted
// and the freed edges are joined.
inline LabeledTree weld(const LabeledTree& t1, int leaf1, const LabeledTree& t2, int leaf2) {
  LabeledTree out;
  int n1 = static_cast<int>(t1.verts.size());
  int n2 = static_cast<int>(t2.verts.size());
  std::vector<int> map1(n1, -1), map2(n2, -1);
  for (int v = 0; v < n1; ++v)
    if (v != leaf1) {
      map1[v] = static_cast<int>(out.verts.size());
      out.verts.push_back(t1.verts[v]);
    }
  for (int v = 0; v < n2; ++v)
    if (v != leaf2) {
      map2[v] = static_cast<int>(out.verts.size());
      out.verts.push_back(t2.verts[v]);
    }
  int p = map1[t1.verts[leaf1].nbr[0]];
  int q = map2[t2.verts[leaf2].nbr[0]];
  for (int v = 0; v < n1; ++v)
    if (v != leaf1)
      for (int& n : out.verts[map1[v]].nbr) n = (n == leaf1) ? -2 : map1[n];
  for (int v = 0; v < n2; ++v)
    if (v != leaf2)
      for (int& n : out.verts[map2[v]].nbr) n = (n == leaf2) ? -3 : map2[n];
  for (auto& vert : out.verts)
    for (int& n : vert.nbr) {
      if (n == -2) n = q;
      if (n == -3) n = p;
    }
  return out;
}

// The welding bracket [T1,T2] = sum over pairs (u in T1, v in T2) of
// mu(label u, label v) times the welded tree.
inline TreeElement weld_bracket(const TreeElement& e1, const TreeElement& e2) {
  TreeElement out(e1.degree + e2.degree);
  for (const auto& [c1, t1] : e1.terms)
    for (const auto& [c2, t2] : e2.terms)
      for (int u : t1.leaves())
        for (int v : t2.leaves()) {
          int m = mu(Letter::from_code(t1.verts[u].label), Letter::from_code(t2.verts[v].label));
          if (m == 0) continue;
          out.add(c1 * c2 * m, weld(t1, u, t2, v));
        }
  return out;
}

// --- rooted bracket expressions and the map Phi ----------------------------

// A fully parenthesized bracket word, used to carry the rooted planar tree
// of a Lie monomial into Phi without normalizing first.
struct BracketExpr {
  int letter = -1;  // >= 0 for a leaf
  std::unique_ptr<BracketExpr> left, right;

  static BracketExpr leaf(Letter l) {
    BracketExpr e;
    e.letter = l.code;
    return e;
  }
  static BracketExpr node(BracketExpr l, BracketExpr r) {
    BracketExpr e;
    e.left = std::make_unique<BracketExpr>(std::move(l));
    e.right = std::make_unique<BracketExpr>(std::move(r));
    return e;
  }
  static BracketExpr from_lyndon(const Word& w) {
    if (w.size() == 1) return leaf(Letter::from_code(static_cast<unsigned char>(w[0])));
    auto [u, v] = std_factor(w);
    return node(from_lyndon(u), from_lyndon(v));
  }
};

namespace detail {
// Builds the subtree for `e` inside `t`; the returned vertex still expects
// its parent as nbr[0].
inline int build_rooted(LabeledTree& t, const BracketExpr& e) {
  if (e.letter >= 0) return t.add_leaf(Letter::from_code(e.letter));
  int l = build_rooted(t, *e.left);
  int r = build_rooted(t, *e.right);
  int v = t.add_internal();
  t.verts[v].nbr = {-1, l, r};  // parent filled in by the caller
  if (t.is_leaf(l))
    t.verts[l].nbr = {v};
  else
    t.verts[l].nbr[0] = v;
  if (t.is_leaf(r))
    t.verts[r].nbr = {v};
  else
    t.verts[r].nbr[0] = v;
  return v;
}
}  // namespace detail

// One summand of Phi(X): the rooted tree of X glued at its root to the
// rooted tree of a_i ^ b_i (incoming edge, then a_i, then b_i in cyclic
// order).
inline LabeledTree phi_summand(const BracketExpr& e, int i) {
  LabeledTree t;
  int top = detail::build_rooted(t, e);
  int la = t.add_leaf(Letter::a(i));
  int lb = t.add_leaf(Letter::b(i));
  int vo = t.add_internal();
  t.wire(vo, top, la, lb);
  if (!t.is_leaf(top)) t.verts[top].nbr[0] = vo;
  return t;
}

inline TreeElement phi_expr(const BracketExpr& e, int expr_degree, const GenusContext& ctx) {
  TreeElement out(expr_degree);
  for (int i = 1; i <= ctx.g; ++i) out.add(Rational(1), phi_summand(e, i));
  return out;
}

// Phi_k on a Lie element, through the canonical bracketing of each Lyndon
// monomial.
inline TreeElement phi(const LieElement& x, const GenusContext& ctx) {
  TreeElement out(x.degree);
  for (const auto& [w, c] : x.terms) {
    BracketExpr e = BracketExpr::from_lyndon(w);
    for (int i = 1; i <= ctx.g; ++i) out.add(c, phi_summand(e, i));
  }
  return out;
}

inline TreeElement theta1(const GenusContext& ctx) {
  TreeElement out(3);
  for (int i = 1; i <= ctx.g; ++i) out.add(Rational(1), theta1_summand(i));
  return out;
}

inline TreeElement theta2(const GenusContext& ctx) {
  TreeElement out(1);
  for (int j = 1; j <= ctx.g; ++j)
    out.add(Rational(1), tripod(Letter::b(1), Letter::a(j), Letter::b(j)));
  return out;
}

// sp acts on trees by the Leibniz rule over leaf labels.
inline TreeElement sp_apply(const SpGenerator& gen, const TreeElement& e) {
  TreeElement out(e.degree);
  for (const auto& [c, t] : e.terms)
    for (int leaf : t.leaves())
      for (auto [y, s] : gen.on_letter(Letter::from_code(t.verts[leaf].label))) {
        LabeledTree nt = t;
        nt.verts[leaf].label = y.code;
        out.add(Rational(s) * c, std::move(nt));
      }
  return out;
}

}  // namespace symplie

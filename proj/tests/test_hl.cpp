#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "symplie/hl.hpp"
#include "symplie/tree.hpp"

using namespace symplie;

namespace {

LieElement L(Letter x) { return lie_letter(x); }
LieElement br(const LieElement& x, const LieElement& y) { return lie_bracket(x, y); }

const Letter a1 = Letter::a(1), b1 = Letter::b(1);
const Letter a2 = Letter::a(2), b2 = Letter::b(2);

MultiWedgeElement wedge2(Letter x, Letter y, Rational c = Rational(1)) {
  MultiWedgeElement m(std::vector<int>{2});
  m.add_blocks({word_of({x, y})}, c);
  return m;
}

MultiWedgeElement omega0_wedge(const GenusContext& ctx, Rational c = Rational(1)) {
  MultiWedgeElement m(std::vector<int>{2});
  for (int i = 1; i <= ctx.g; ++i)
    m.add_blocks({word_of({Letter::a(i), Letter::b(i)})}, c);
  return m;
}

HLElement eta_phi2(const LieElement& x, const GenusContext& ctx) { return eta(phi(x, ctx)); }

HLElement random_h_tree(std::mt19937& rng, int g) {
  std::uniform_int_distribution<int> code(0, 2 * g - 1);
  auto l = [&] { return Letter::from_code(code(rng)); };
  return eta(tree_elem(h_tree(l(), l(), l(), l())));
}

}  // namespace

TEST_CASE("membership in h") {
  CHECK(is_in_h(HLElement(2)));
  HLElement bad(1);
  bad.add(a1, br(L(a1), L(a2)));
  CHECK_FALSE(is_in_h(bad));
  CHECK(is_in_h(eta(tree_elem(h_tree(a1, b2, a1, a2)))));
}

TEST_CASE("q detectors on the generating vectors") {
  // the six displayed values, checked at several genera
  for (int g : {2, 3, 4, 5}) {
    GenusContext ctx(g);
    HLElement t = eta(tree_elem(h_tree(a1, b1, a1, b1)));
    CHECK(q12(t) == wedge2(a1, b1, Rational(12)));
    CHECK(q0(t) == Rational(12));

    HLElement p1 = eta_phi2(br(L(a1), L(b1)), ctx);
    CHECK(q12(p1) == wedge2(a1, b1, Rational(4 * g + 4)) + omega0_wedge(ctx, Rational(4)));
    CHECK(q0(p1) == Rational(8 * g + 4));

    HLElement p0 = eta_phi2(omega0_lie(ctx), ctx);
    CHECK(q12(p0) == omega0_wedge(ctx, Rational(8 * g + 4)));
    CHECK(q0(p0) == Rational(8 * g * g + 4 * g));
  }
}

TEST_CASE("Phi2 of omega0 is the invariant vector v_[0]") {
  GenusContext ctx(3);
  TreeElement v0(2);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      v0.add(Rational(1), h_tree(Letter::a(i), Letter::b(i), Letter::a(j), Letter::b(j)));
  CHECK(eta_phi2(omega0_lie(ctx), ctx) == eta(v0));
}

TEST_CASE("Morita's value of the separating twist") {
  GenusContext ctx(4);
  for (int h = 1; h <= 2; ++h) {
    HLElement lhs(2);
    for (int i = 1; i <= h; ++i)
      for (int j = 1; j <= h; ++j) {
        LieElement w = br(L(Letter::a(j)), L(Letter::b(j)));
        lhs.add(Letter::a(i), br(w, L(Letter::b(i))));
        lhs.add(Letter::b(i), br(w, L(Letter::a(i))), Rational(-1));
      }
    TreeElement sum(2);
    for (int i = 1; i <= h; ++i)
      for (int j = 1; j <= h; ++j)
        sum.add(Rational(1), h_tree(Letter::a(i), Letter::b(i), Letter::a(j), Letter::b(j)));
    CHECK(lhs == rat(-1, 2) * eta(sum));
  }
}

TEST_CASE("the [2^2]-projection of the twist is killed by both detectors") {
  for (int g : {2, 3, 4, 5}) {
    GenusContext ctx(g);
    HLElement v = eta(tree_elem(h_tree(a1, b1, a1, b1))) -
                  rat(3, g + 1) * eta_phi2(br(L(a1), L(b1)), ctx) +
                  rat(3, (2 * g + 1) * (g + 1)) * eta_phi2(omega0_lie(ctx), ctx);
    CHECK(q12(v).is_zero());
    CHECK(q0(v) == Rational(0));
  }
}

TEST_CASE("derivation bracket agrees with welding through eta") {
  GenusContext ctx(3);
  // the pinned anchor pair
  TreeElement t1 = tree_elem(h_tree(a1, a2, a1, a2));
  TreeElement t2 = tree_elem(h_tree(a1, b2, a1, a2));
  HLElement lhs = derivation_bracket(eta(t1), eta(t2), ctx);
  CHECK(lhs == eta(weld_bracket(t1, t2)));
  CHECK(lhs == eta(tree_elem(caterpillar(a1, a2, a1, a1, a2, a1), Rational(2))));

  std::mt19937 rng(61);
  for (int rep = 0; rep < 8; ++rep) {
    HLElement h1 = random_h_tree(rng, 3);
    HLElement h2 = random_h_tree(rng, 3);
    CHECK(derivation_bracket(h1, h2, ctx) ==
          -derivation_bracket(h2, h1, ctx));
  }
  HLElement h = random_h_tree(rng, 3);
  CHECK(derivation_bracket(h, h, ctx).is_zero());
  HLElement bad(1);
  bad.add(a1, br(L(a1), L(a2)));
  CHECK_THROWS_AS(derivation_bracket(bad, bad, ctx), std::logic_error);
}

TEST_CASE("closed projection") {
  GenusContext ctx(2);
  // ideal terms in the Lie factor die componentwise
  HLElement h(2);
  h.add(a1, br(L(b1), omega0_lie(ctx)));
  CHECK(closed_project(h, ctx).is_zero());

  HLElement v = eta(tree_elem(h_tree(a1, a2, a1, a2)));
  CHECK_FALSE(closed_project(v, ctx).is_zero());

  // linearity
  std::mt19937 rng(67);
  HLElement x = random_h_tree(rng, 2), y = random_h_tree(rng, 2);
  CHECK(closed_project(x + y, ctx) == closed_project(x, ctx) + closed_project(y, ctx));
}

TEST_CASE("closed kernel membership at small genus") {
  GenusContext ctx(2);
  // anything in the image of Phi dies in h_g
  LieElement m(2);
  m.add_term(word_of({a1, a2}), Rational(1));
  CHECK(is_in_closed_kernel(eta(phi(m, ctx)), ctx));

  // the [2^2] highest weight vector survives
  CHECK_FALSE(is_in_closed_kernel(eta(tree_elem(h_tree(a1, a2, a1, a2))), ctx));
}

TEST_CASE("eta of phi matches the closed formula after projection") {
  // In H (x) L_{g,1} the image of Phi carries extra terms valued in the
  // ideal; the displayed formula holds in H (x) L_g.
  GenusContext ctx(2);
  for (const Word& w : lyndon_basis(2, ctx)) {
    LieElement x(2);
    x.add_term(w, Rational(1));
    HLElement closed_formula(2);
    for (int i = 1; i <= ctx.g; ++i) {
      closed_formula.add(Letter::a(i), br(L(Letter::b(i)), x));
      closed_formula.add(Letter::b(i), br(L(Letter::a(i)), x), Rational(-1));
    }
    CHECK(closed_project(eta(phi(x, ctx)), ctx) == closed_project(closed_formula, ctx));
  }
}

TEST_CASE("hl printing") {
  // [a2,b1] normalizes to -[b1,a2] in the Lyndon order b1 < a2
  HLElement h(1);
  h.add(a1, br(L(a2), L(b1)), Rational(2));
  CHECK(hl_str(h) == "-2 a1⊗[b1,a2]");
}

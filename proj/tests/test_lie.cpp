#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "symplie/lie.hpp"
#include "symplie/linalg.hpp"

using namespace symplie;

namespace {

// Independent oracle: a word is Lyndon iff it is the strict minimum among
// its rotations.  Enumerate by brute force.
long long count_lyndon_brute(int k, int n) {
  std::vector<int> w(k, 0);
  long long count = 0;
  auto is_min_rotation = [&] {
    Word s;
    for (int x : w) s.push_back(static_cast<char>(x));
    for (int r = 1; r < k; ++r) {
      Word rot = s.substr(r) + s.substr(0, r);
      if (rot <= s) return false;
    }
    return true;
  };
  while (true) {
    if (is_min_rotation()) ++count;
    int p = k - 1;
    while (p >= 0 && w[p] == n - 1) w[p--] = 0;
    if (p < 0) break;
    ++w[p];
  }
  return count;
}

LieElement random_lie(std::mt19937& rng, int degree, int g) {
  auto basis = lyndon_words(degree, 2 * g);
  std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coeff(-4, 4);
  LieElement x(degree);
  for (int t = 0; t < 4; ++t) x.add_term(basis[pick(rng)], Rational(coeff(rng)));
  return x;
}

}  // namespace

TEST_CASE("lyndon basis sizes match Witt's formula") {
  GenusContext g2(2);
  CHECK(lyndon_basis(1, g2).size() == 4);
  CHECK(lyndon_basis(2, GenusContext(1)).size() == 1);
  CHECK(lyndon_basis(3, g2).size() == 20);  // (4^3 - 4)/3

  for (int g = 1; g <= 4; ++g)
    for (int k = 1; k <= 5; ++k) {
      auto basis = lyndon_words(k, 2 * g);
      CHECK(static_cast<long long>(basis.size()) == witt_dimension(k, 2 * g));
      for (const Word& w : basis) CHECK(is_lyndon(w));
    }
}

TEST_CASE("lyndon generation agrees with the rotation oracle") {
  for (int n = 2; n <= 6; n += 2)
    for (int k = 1; k <= 4; ++k)
      CHECK(static_cast<long long>(lyndon_words(k, n).size()) == count_lyndon_brute(k, n));
}

TEST_CASE("iota base cases and hand expansion") {
  Letter a1 = Letter::a(1), b1 = Letter::b(1), a2 = Letter::a(2);
  LieElement x = lie_bracket(lie_letter(a1), lie_letter(b1));
  Tensor want(2);
  want.add_term(word_of({a1, b1}), Rational(1));
  want.add_term(word_of({b1, a1}), Rational(-1));
  CHECK(iota(x) == want);

  CHECK(lie_bracket(lie_letter(a1), lie_letter(a1)).is_zero());

  // iota([[a1,a2],a1]) = 2 a1a2a1 - a2a1a1 - a1a1a2
  LieElement y = lie_bracket(lie_bracket(lie_letter(a1), lie_letter(a2)), lie_letter(a1));
  Tensor w(3);
  w.add_term(word_of({a1, a2, a1}), Rational(2));
  w.add_term(word_of({a2, a1, a1}), Rational(-1));
  w.add_term(word_of({a1, a1, a2}), Rational(-1));
  CHECK(iota(y) == w);
}

TEST_CASE("iota images of the degree-3 basis are independent") {
  GenusContext ctx(2);
  RowSpan span;
  for (const Word& m : lyndon_basis(3, ctx)) span.insert(iota_monomial(m).terms);
  CHECK(span.rank() == 20);
}

TEST_CASE("round trip through lie_from_tensor") {
  std::mt19937 rng(5);
  for (int g = 2; g <= 3; ++g)
    for (int k = 1; k <= 5; ++k)
      for (int rep = 0; rep < 3; ++rep) {
        LieElement x = random_lie(rng, k, g);
        CHECK(lie_from_tensor(iota(x)) == x);
      }
  CHECK_THROWS_AS(lie_from_tensor([] {
                    Tensor t(2);
                    t.add_term(word_of({Letter::a(1), Letter::b(1)}), Rational(1));
                    return t;  // a1 (x) b1 alone is not a Lie element
                  }()),
                  std::invalid_argument);
}

TEST_CASE("bracket is antisymmetric and satisfies Jacobi") {
  std::mt19937 rng(17);
  for (int rep = 0; rep < 6; ++rep) {
    int g = 2 + rep % 2;
    LieElement x = random_lie(rng, 1 + rep % 2, g);
    LieElement y = random_lie(rng, 2, g);
    LieElement z = random_lie(rng, 1 + (rep + 1) % 2, g);
    CHECK((lie_bracket(x, y) + lie_bracket(y, x)).is_zero());
    LieElement jac = lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) +
                     lie_bracket(z, lie_bracket(x, y));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("iota intertwines bracket with the tensor commutator") {
  std::mt19937 rng(23);
  for (int rep = 0; rep < 8; ++rep) {
    int g = 2 + rep % 3;
    LieElement x = random_lie(rng, 1 + rep % 3, g);
    LieElement y = random_lie(rng, 1 + (rep / 2) % 3, g);
    CHECK(iota(lie_bracket(x, y)) == commutator(iota(x), iota(y)));
  }
}

TEST_CASE("sp action on Lie elements commutes with iota") {
  std::mt19937 rng(31);
  GenusContext ctx(3);
  for (int rep = 0; rep < 6; ++rep) {
    LieElement x = random_lie(rng, 2 + rep % 3, 3);
    SpGenerator gen = (rep % 2) ? SpGenerator::x(1, 3) : SpGenerator::u(2);
    CHECK(iota(sp_apply(gen, x)) == sp_apply(gen, iota(x)));
  }
}

TEST_CASE("omega0 in canonical form") {
  GenusContext ctx(3);
  LieElement w0 = omega0_lie(ctx);
  CHECK(w0.terms.size() == 3);
  LieElement direct(2);
  for (int i = 1; i <= 3; ++i)
    direct += lie_bracket(lie_letter(Letter::a(i)), lie_letter(Letter::b(i)));
  CHECK(w0 == direct);
  CHECK(lie_str(w0) == "[a1,b1] + [a2,b2] + [a3,b3]");
}

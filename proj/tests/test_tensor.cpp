#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "symplie/multiwedge.hpp"
#include "symplie/tensor.hpp"

using namespace symplie;

namespace {

Tensor word_tensor(std::initializer_list<Letter> ls, Rational c = Rational(1)) {
  Tensor t(static_cast<int>(ls.size()));
  t.add_term(word_of(ls), c);
  return t;
}

Tensor random_tensor(std::mt19937& rng, int degree, int g, int nterms) {
  std::uniform_int_distribution<int> letter(0, 2 * g - 1);
  std::uniform_int_distribution<int> coeff(-5, 5);
  Tensor t(degree);
  for (int n = 0; n < nterms; ++n) {
    Word w;
    for (int i = 0; i < degree; ++i) w.push_back(static_cast<char>(letter(rng)));
    t.add_term(w, Rational(coeff(rng)));
  }
  return t;
}

SpGenerator random_generator(std::mt19937& rng, int g) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> idx(1, g);
  int i = idx(rng), j = idx(rng);
  while (j == i) j = idx(rng);
  switch (kind(rng)) {
    case 0: return SpGenerator::x(i, j);
    case 1: return SpGenerator::y(i, j);
    case 2: return SpGenerator::u(i);
    default: return SpGenerator::v(i);
  }
}

const Letter a1 = Letter::a(1), b1 = Letter::b(1);
const Letter a2 = Letter::a(2), b2 = Letter::b(2);

}  // namespace

TEST_CASE("intersection form on basis letters") {
  CHECK(mu(a1, b1) == 1);
  CHECK(mu(b1, a1) == -1);
  CHECK(mu(a1, a2) == 0);
  CHECK(mu(b1, b2) == 0);
  CHECK(mu(a1, b2) == 0);
  CHECK(mu_pairing(letter_tensor(a1), letter_tensor(b1)) == 1);
}

TEST_CASE("letter order is a1 < b1 < a2 < b2 < ...") {
  CHECK(a1 < b1);
  CHECK(b1 < a2);
  CHECK(a2 < b2);
  CHECK(Letter::b(2) < Letter::a(3));
}

TEST_CASE("contraction base cases") {
  CHECK(contract(word_tensor({a1, b1}), 1, 2) == scalar_tensor(Rational(1)));

  Tensor t = contract(word_tensor({a1, a2, b1, b2}), 1, 3);
  CHECK(t == word_tensor({a2, b2}));

  CHECK(contract(word_tensor({a1, a2, a1, a2}), 1, 2).is_zero());

  CHECK_THROWS_AS(contract(word_tensor({a1, b1}), 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(contract(word_tensor({a1, b1}), 1, 3), std::invalid_argument);
}

TEST_CASE("iterated contraction bookkeeping matches simultaneous pairing") {
  // Contracting (1,2) twice on degree 8 pairs positions (1,2) then the
  // renumbered (3,4) of the original tensor.
  std::mt19937 rng(2026);
  for (int g = 2; g <= 4; ++g) {
    for (int rep = 0; rep < 5; ++rep) {
      Tensor t = random_tensor(rng, 8, g, 30);
      Tensor twice = contract(contract(t, 1, 2), 1, 2);
      Tensor direct = contract(contract(t, 3, 4), 1, 2);
      CHECK(twice == direct);
    }
  }
}

TEST_CASE("projection examples") {
  GenusContext ctx(2);
  // p_3^{(1,3)(2)} (x1 (x) x2 (x) x3) = (x1 ^ x3) (x) x2
  Tensor t = word_tensor({a1, b2, a2});
  MultiWedgeElement m = project(t, WedgeShape{{1, 3}, {2}});
  MultiWedgeElement want(std::vector<int>{2, 1});
  want.add_blocks({word_of({a1, a2}), word_of({b2})}, Rational(1));
  CHECK(m == want);

  CHECK(project(word_tensor({a1, a1, a2}), WedgeShape{{1, 2}, {3}}).is_zero());

  // sort sign: b1 (x) a1 projects to -(a1 ^ b1)
  MultiWedgeElement s = project(word_tensor({b1, a1}), WedgeShape{{1, 2}});
  MultiWedgeElement wants(std::vector<int>{2});
  wants.add_blocks({word_of({a1, b1})}, Rational(-1));
  CHECK(s == wants);

  CHECK_THROWS_AS(project(t, WedgeShape{{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(project(t, WedgeShape{{1, 2}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("sp generator actions from the defining table") {
  CHECK(sp_apply(SpGenerator::v(1), letter_tensor(a1)) == letter_tensor(b1));
  CHECK(sp_apply(SpGenerator::v(1), letter_tensor(b1)).is_zero());
  CHECK(sp_apply(SpGenerator::u(1), letter_tensor(b1)) == letter_tensor(a1));
  CHECK(sp_apply(SpGenerator::u(1), letter_tensor(a1)).is_zero());
  CHECK(sp_apply(SpGenerator::x(1, 2), letter_tensor(a2)) == letter_tensor(a1));
  CHECK(sp_apply(SpGenerator::x(1, 2), letter_tensor(b1)) == -letter_tensor(b2));
  CHECK(sp_apply(SpGenerator::x(1, 2), letter_tensor(a1)).is_zero());
  CHECK(sp_apply(SpGenerator::y(1, 2), letter_tensor(b1)) == letter_tensor(a2));
  CHECK(sp_apply(SpGenerator::y(1, 2), letter_tensor(b2)) == letter_tensor(a1));
  CHECK(sp_apply(SpGenerator::y(1, 2), letter_tensor(a1)).is_zero());

  // Leibniz rule
  CHECK(sp_apply(SpGenerator::u(1), word_tensor({a1, b1})) == word_tensor({a1, a1}));
  CHECK(sp_apply(SpGenerator::x(1, 2), word_tensor({a2, a2})) ==
        word_tensor({a1, a2}) + word_tensor({a2, a1}));
}

TEST_CASE("sp action commutes with contraction and projection") {
  std::mt19937 rng(7);
  for (int g = 2; g <= 3; ++g) {
    for (int rep = 0; rep < 8; ++rep) {
      Tensor t = random_tensor(rng, 4, g, 12);
      SpGenerator gen = random_generator(rng, g);
      CHECK(sp_apply(gen, contract(t, 1, 3)) == contract(sp_apply(gen, t), 1, 3));

      WedgeShape shape{{1, 3}, {2, 4}};
      MultiWedgeElement lhs = sp_apply(gen, project(t, shape));
      MultiWedgeElement rhs = project(sp_apply(gen, t), shape);
      CHECK((lhs - rhs).is_zero());
    }
  }
}

TEST_CASE("weights of words") {
  GenusContext ctx(3);
  CHECK(weight_of(word_tensor({a1, a2, a1, a2}), ctx) == Weight{2, 2, 0});
  CHECK(weight_of(word_tensor({a1, b1}), ctx) == Weight{0, 0, 0});
  CHECK(weight_of(scalar_tensor(Rational(3)), ctx) == Weight{0, 0, 0});
}

TEST_CASE("sp generators shift weights by their roots") {
  std::mt19937 rng(11);
  GenusContext ctx(3);
  auto shifted = [&](const SpGenerator& gen, Weight w) {
    switch (gen.kind) {
      case SpGenerator::X: w[gen.i - 1] += 1; w[gen.j - 1] -= 1; break;
      case SpGenerator::Y: w[gen.i - 1] += 1; w[gen.j - 1] += 1; break;
      case SpGenerator::U: w[gen.i - 1] += 2; break;
      case SpGenerator::V: w[gen.i - 1] -= 2; break;
    }
    return w;
  };
  for (int rep = 0; rep < 20; ++rep) {
    Word w;
    std::uniform_int_distribution<int> letter(0, 5);
    for (int i = 0; i < 3; ++i) w.push_back(static_cast<char>(letter(rng)));
    Tensor t(3);
    t.add_term(w, Rational(1));
    SpGenerator gen = random_generator(rng, 3);
    Tensor image = sp_apply(gen, t);
    if (image.is_zero()) continue;
    CHECK(weight_of(image, ctx) == shifted(gen, weight_of(t, ctx)));
  }
}

TEST_CASE("wedge square embedding") {
  Tensor u = word_tensor({a1, b2});
  Tensor v = word_tensor({b1, a2}, Rational(3));
  CHECK(wedge_square_embed(u, u).is_zero());
  CHECK((wedge_square_embed(u, v) + wedge_square_embed(v, u)).is_zero());
  CHECK(wedge_square_embed(letter_tensor(a1), letter_tensor(b1)) ==
        word_tensor({a1, b1}) - word_tensor({b1, a1}));
  CHECK_THROWS_AS(wedge_square_embed(u, letter_tensor(a1)), std::invalid_argument);
}

TEST_CASE("printing is canonical and exact") {
  Tensor t(2);
  t.add_term(word_of({b1, a1}), rat(-5, 3));
  t.add_term(word_of({a1, b1}), Rational(1));
  CHECK(tensor_str(t) == "a1⊗b1 - 5/3 b1⊗a1");
  CHECK(rat_parse("-5/3") == rat(-5, 3));
  CHECK(rat_str(rat_parse("10/4")) == "5/2");

  MultiWedgeElement m(std::vector<int>{2, 1});
  m.add_blocks({word_of({a2, a1}), word_of({b1})}, Rational(2));
  CHECK(multiwedge_str(m) == "-2 (a1∧a2)⊗b1");
}

TEST_CASE("letter permutation operators") {
  GenusContext ctx(3);
  auto perm = swap_indices_perm(ctx, 2, 3);
  Tensor t = word_tensor({a2, Letter::b(3), a1});
  CHECK(permute_letters(t, perm) == word_tensor({Letter::a(3), b2, a1}));
}

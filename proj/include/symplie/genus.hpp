#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace symplie {

// Basis letters of H are a_1,b_1,...,a_g,b_g, encoded as one byte each:
//   code(a_i) = 2(i-1),  code(b_i) = 2(i-1)+1.
// Code order realizes the total order a1 < b1 < a2 < b2 < ... used for
// canonical wedge sorting and printing.
struct Letter {
  uint8_t code = 0;

  static Letter a(int index) { return Letter{static_cast<uint8_t>(2 * (index - 1))}; }
  static Letter b(int index) { return Letter{static_cast<uint8_t>(2 * (index - 1) + 1)}; }
  static Letter from_code(int c) { return Letter{static_cast<uint8_t>(c)}; }

  bool is_a() const { return (code & 1) == 0; }
  bool is_b() const { return (code & 1) != 0; }
  int index() const { return code / 2 + 1; }  // 1-based
  Letter partner() const { return Letter{static_cast<uint8_t>(code ^ 1)}; }

  auto operator<=>(const Letter&) const = default;

  std::string str() const { return (is_a() ? "a" : "b") + std::to_string(index()); }
};

// mu(a_i,b_j) = delta_ij, mu(b_j,a_i) = -delta_ij, mu(a,a) = mu(b,b) = 0.
inline int mu(Letter x, Letter y) {
  if (x.index() != y.index()) return 0;
  if (x.is_a() && y.is_b()) return 1;
  if (x.is_b() && y.is_a()) return -1;
  return 0;
}

struct GenusContext {
  int g = 0;

  explicit GenusContext(int genus) : g(genus) {
    if (genus < 1) throw std::invalid_argument("genus must be >= 1");
    if (genus > 120) throw std::invalid_argument("genus too large");
  }

  int alphabet_size() const { return 2 * g; }

  void check(Letter x) const {
    if (x.index() > g)
      throw std::invalid_argument("letter " + x.str() + " out of range for genus " + std::to_string(g));
  }
};

// Weight of a word in the standard weight lattice of sp(2g): a_i contributes
// +e_i, b_i contributes -e_i.
using Weight = std::vector<int>;

inline Weight zero_weight(const GenusContext& ctx) { return Weight(ctx.g, 0); }

inline void add_letter_weight(Weight& w, Letter x) {
  w[x.index() - 1] += x.is_a() ? 1 : -1;
}

inline std::string weight_str(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

}  // namespace symplie

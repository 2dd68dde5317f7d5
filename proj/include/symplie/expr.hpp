#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symplie/hl.hpp"
#include "symplie/lie.hpp"
#include "symplie/multiwedge.hpp"
#include "symplie/tensor.hpp"
#include "symplie/tree.hpp"

namespace symplie {

// The expression DSL mirrors the vocabulary of the reference computer
// session: tens[...], brac[x,y], Ht[a,b,c,d], T[a,...,f], Wedge products,
// contraction/projection/sp-operator application, sum(i,1,g,...) and the
// q-detectors.  Every expression evaluates to a rational scalar, a tensor,
// or a multi-wedge element; Lie, tree and H(x)L values are consumed through
// their canonical tensor images, so printed output parses back to an equal
// value.

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& msg, size_t at)
      : std::runtime_error(msg + " (at offset " + std::to_string(at) + ")"), pos(at) {}
};

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- values ------------------------------------------------------------------

struct Value {
  enum Kind { Scalar, Tens, Wedge } kind = Scalar;
  Rational s;
  Tensor t;
  MultiWedgeElement m;

  static Value scalar(Rational r) {
    Value v;
    v.kind = Scalar;
    v.s = std::move(r);
    return v;
  }
  static Value tensor(Tensor x) {
    Value v;
    v.kind = Tens;
    v.t = std::move(x);
    return v;
  }
  static Value wedge(MultiWedgeElement x) {
    Value v;
    v.kind = Wedge;
    v.m = std::move(x);
    return v;
  }

  bool operator==(const Value& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
      case Scalar: return s == o.s;
      case Tens: return t == o.t;
      default: return m == o.m;
    }
  }
};

inline std::string value_str(const Value& v) {
  switch (v.kind) {
    case Value::Scalar: return rat_str(v.s);
    case Value::Tens: return tensor_str(v.t);
    default: return multiwedge_str(v.m);
  }
}

namespace detail {

inline MultiWedgeElement tensor_to_singleton_wedge(const Tensor& t) {
  MultiWedgeElement m(std::vector<int>(t.degree, 1));
  for (const auto& [w, c] : t.terms) {
    std::vector<Word> blocks;
    for (char ch : w) blocks.push_back(Word(1, ch));
    m.add_blocks(std::move(blocks), c);
  }
  return m;
}

inline MultiWedgeElement concat_wedge(const MultiWedgeElement& a, const MultiWedgeElement& b) {
  std::vector<int> sizes = a.block_sizes;
  sizes.insert(sizes.end(), b.block_sizes.begin(), b.block_sizes.end());
  MultiWedgeElement out(sizes);
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      auto blocks = MultiWedgeElement::split(ka);
      auto more = MultiWedgeElement::split(kb);
      blocks.insert(blocks.end(), more.begin(), more.end());
      out.add_blocks(std::move(blocks), ca * cb);
    }
  return out;
}

}  // namespace detail

inline Value value_add(const Value& a, const Value& b, int sign) {
  if (a.kind != b.kind) throw EvalError("cannot add values of different kinds");
  switch (a.kind) {
    case Value::Scalar: return Value::scalar(sign > 0 ? a.s + b.s : a.s - b.s);
    case Value::Tens: {
      if (a.t.is_zero()) return sign > 0 ? b : Value::tensor(-b.t);
      if (b.t.is_zero()) return a;
      if (a.t.degree != b.t.degree) throw EvalError("cannot add tensors of different degrees");
      return Value::tensor(sign > 0 ? a.t + b.t : a.t - b.t);
    }
    default: return Value::wedge(sign > 0 ? a.m + b.m : a.m - b.m);
  }
}

inline Value value_mul(const Value& a, const Value& b) {
  if (a.kind == Value::Scalar) {
    switch (b.kind) {
      case Value::Scalar: return Value::scalar(a.s * b.s);
      case Value::Tens: return Value::tensor(a.s * b.t);
      default: return Value::wedge(a.s * b.m);
    }
  }
  if (b.kind == Value::Scalar) return value_mul(b, a);
  throw EvalError("cannot multiply two non-scalar values; use tens[...] or ⊗");
}

inline Value value_otimes(const Value& a, const Value& b) {
  if (a.kind == Value::Scalar || b.kind == Value::Scalar) return value_mul(a, b);
  if (a.kind == Value::Tens && b.kind == Value::Tens)
    return Value::tensor(tensor_product(a.t, b.t));
  MultiWedgeElement ma =
      (a.kind == Value::Wedge) ? a.m : detail::tensor_to_singleton_wedge(a.t);
  MultiWedgeElement mb =
      (b.kind == Value::Wedge) ? b.m : detail::tensor_to_singleton_wedge(b.t);
  return Value::wedge(detail::concat_wedge(ma, mb));
}

inline Value value_wedge(const Value& a, const Value& b) {
  auto as_single_block = [](const Value& v) -> MultiWedgeElement {
    if (v.kind == Value::Wedge) {
      if (v.m.block_sizes.size() != 1)
        throw EvalError("wedge of a multi-block element is not defined");
      return v.m;
    }
    if (v.kind == Value::Tens) {
      MultiWedgeElement m(std::vector<int>{v.t.degree});
      for (const auto& [w, c] : v.t.terms) m.add_blocks({w}, c);
      return m;
    }
    throw EvalError("cannot wedge scalars");
  };
  MultiWedgeElement ma = as_single_block(a), mb = as_single_block(b);
  MultiWedgeElement out(std::vector<int>{ma.block_sizes[0] + mb.block_sizes[0]});
  for (const auto& [ka, ca] : ma.terms)
    for (const auto& [kb, cb] : mb.terms) out.add_blocks({ka + kb}, ca * cb);
  return Value::wedge(out);
}

// --- AST ----------------------------------------------------------------------

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum Op {
    Num,        // num
    Genus,      // the symbol g
    LetterRef,  // kind_a + index (concrete or variable)
    Neg,
    Add,
    Sub,
    Mul,
    Div,
    OTimesOp,
    WedgeBin,   // binary ^ between single blocks
    BracOp,     // brac[x,y] / bare [x,y]
    TensOp,     // tens[...]
    HtOp,       // Ht[a,b,c,d]
    CatOp,      // T[a,b,c,d,e,f]
    WedgeFn,    // wedge(x,y)
    SumOp,      // sum(var, lo, hi, body)
    Q12Op,
    Q0Op,
    PhiOp,      // phi<k>(x)
    SpApplyOp,  // X[i,j](x), Y[i,j](x), U[i](x), V[i](x)
    ContractOp, // C[i,j](x)
    ProjectOp,  // p[(..)..](x)
    Omega0Op,
  } op;

  size_t pos = 0;
  Rational num;
  bool letter_a = true;
  std::string letter_index;  // digits or a bound variable name
  std::string var;           // sum variable
  int i = 0, j = 0, k = 0;   // operator indices / phi degree
  char sp_kind = 'X';
  WedgeShape shape;
  std::vector<ExprPtr> args;

  explicit Expr(Op o, size_t at) : op(o), pos(at) {}
};

// --- lexer --------------------------------------------------------------------

namespace detail {

struct Token {
  enum Type { Num, Ident, Plus, Minus, Star, Slash, LPar, RPar, LBrk, RBrk, Comma, OTimes,
              WedgeSym, End } type;
  std::string text;
  size_t pos;
};

inline std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (isdigit(static_cast<unsigned char>(c))) {
      size_t start = i;
      while (i < src.size() && isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Token::Num, src.substr(start, i - start), start});
      continue;
    }
    if (isalpha(static_cast<unsigned char>(c))) {
      size_t start = i;
      while (i < src.size() && isalnum(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Token::Ident, src.substr(start, i - start), start});
      continue;
    }
    if (src.compare(i, 3, "⊗") == 0) {
      out.push_back({Token::OTimes, "⊗", i});
      i += 3;
      continue;
    }
    if (src.compare(i, 3, "∧") == 0) {
      out.push_back({Token::WedgeSym, "∧", i});
      i += 3;
      continue;
    }
    Token::Type t;
    switch (c) {
      case '+': t = Token::Plus; break;
      case '-': t = Token::Minus; break;
      case '*': t = Token::Star; break;
      case '/': t = Token::Slash; break;
      case '(': t = Token::LPar; break;
      case ')': t = Token::RPar; break;
      case '[': t = Token::LBrk; break;
      case ']': t = Token::RBrk; break;
      case ',': t = Token::Comma; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({t, std::string(1, c), i});
    ++i;
  }
  out.push_back({Token::End, "", src.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(lex(src)) {}

  ExprPtr parse() {
    ExprPtr e = parse_expr();
    expect(Token::End, "end of input");
    return e;
  }

 private:
  const Token& peek() const { return toks_[idx_]; }
  Token take() { return toks_[idx_++]; }
  bool accept(Token::Type t) {
    if (peek().type == t) {
      ++idx_;
      return true;
    }
    return false;
  }
  void expect(Token::Type t, const std::string& what) {
    if (!accept(t)) throw ParseError("expected " + what + ", found '" + peek().text + "'", peek().pos);
  }

  static bool starts_primary(const Token& t) {
    return t.type == Token::Num || t.type == Token::Ident || t.type == Token::LPar ||
           t.type == Token::LBrk;
  }

  ExprPtr parse_expr() {
    ExprPtr e = parse_term();
    while (peek().type == Token::Plus || peek().type == Token::Minus) {
      auto op = take();
      auto node = std::make_shared<Expr>(op.type == Token::Plus ? Expr::Add : Expr::Sub, op.pos);
      node->args = {e, parse_term()};
      e = node;
    }
    return e;
  }

  // '*', '/' and juxtaposition
  ExprPtr parse_term() {
    ExprPtr e = parse_unary();
    while (true) {
      if (peek().type == Token::Star || peek().type == Token::Slash) {
        auto op = take();
        auto node = std::make_shared<Expr>(op.type == Token::Star ? Expr::Mul : Expr::Div, op.pos);
        node->args = {e, parse_unary()};
        e = node;
      } else if (starts_primary(peek())) {
        auto node = std::make_shared<Expr>(Expr::Mul, peek().pos);
        node->args = {e, parse_unary()};
        e = node;
      } else {
        break;
      }
    }
    return e;
  }

  ExprPtr parse_unary() {
    if (peek().type == Token::Minus) {
      auto op = take();
      auto node = std::make_shared<Expr>(Expr::Neg, op.pos);
      node->args = {parse_unary()};
      return node;
    }
    return parse_product();
  }

  // tensor and wedge signs bind tighter than multiplication
  ExprPtr parse_product() {
    ExprPtr e = parse_primary();
    while (peek().type == Token::OTimes || peek().type == Token::WedgeSym) {
      auto op = take();
      auto node = std::make_shared<Expr>(
          op.type == Token::OTimes ? Expr::OTimesOp : Expr::WedgeBin, op.pos);
      node->args = {e, parse_primary()};
      e = node;
    }
    return e;
  }

  std::vector<ExprPtr> parse_args(Token::Type open, Token::Type close, const char* what) {
    expect(open, what);
    std::vector<ExprPtr> args;
    if (peek().type != close) {
      args.push_back(parse_expr());
      while (accept(Token::Comma)) args.push_back(parse_expr());
    }
    expect(close, what);
    return args;
  }

  int parse_int() {
    const Token& t = peek();
    if (t.type != Token::Num) throw ParseError("expected an integer index", t.pos);
    take();
    return std::stoi(t.text);
  }

  ExprPtr parse_primary() {
    const Token t = peek();
    switch (t.type) {
      case Token::Num: {
        take();
        auto node = std::make_shared<Expr>(Expr::Num, t.pos);
        node->num = rat_parse(t.text);
        return node;
      }
      case Token::LPar: {
        take();
        ExprPtr e = parse_expr();
        expect(Token::RPar, "')'");
        return e;
      }
      case Token::LBrk: {  // bare bracket [x,y]
        take();
        auto node = std::make_shared<Expr>(Expr::BracOp, t.pos);
        node->args.push_back(parse_expr());
        expect(Token::Comma, "','");
        node->args.push_back(parse_expr());
        expect(Token::RBrk, "']'");
        return node;
      }
      case Token::Ident: return parse_ident();
      default: throw ParseError("expected an expression, found '" + t.text + "'", t.pos);
    }
  }

  ExprPtr parse_ident() {
    const Token t = take();
    const std::string& name = t.text;
    auto node_of = [&](Expr::Op op) { return std::make_shared<Expr>(op, t.pos); };

    if (name == "g") return node_of(Expr::Genus);
    if (name == "omega0") return node_of(Expr::Omega0Op);
    if (name == "tens") {
      auto node = node_of(Expr::TensOp);
      node->args = parse_args(Token::LBrk, Token::RBrk, "'['");
      return node;
    }
    if (name == "brac") {
      auto node = node_of(Expr::BracOp);
      node->args = parse_args(Token::LBrk, Token::RBrk, "'['");
      if (node->args.size() != 2) throw ParseError("brac takes two arguments", t.pos);
      return node;
    }
    if (name == "Ht") {
      auto node = node_of(Expr::HtOp);
      node->args = parse_args(Token::LBrk, Token::RBrk, "'['");
      if (node->args.size() != 4) throw ParseError("Ht takes four arguments", t.pos);
      return node;
    }
    if (name == "T") {
      auto node = node_of(Expr::CatOp);
      node->args = parse_args(Token::LBrk, Token::RBrk, "'['");
      if (node->args.size() != 6) throw ParseError("T takes six arguments", t.pos);
      return node;
    }
    if (name == "wedge") {
      auto node = node_of(Expr::WedgeFn);
      node->args = parse_args(Token::LPar, Token::RPar, "'('");
      if (node->args.size() != 2) throw ParseError("wedge takes two arguments", t.pos);
      return node;
    }
    if (name == "sum") {
      expect(Token::LPar, "'('");
      const Token v = take();
      if (v.type != Token::Ident) throw ParseError("sum needs an index variable", v.pos);
      auto node = node_of(Expr::SumOp);
      node->var = v.text;
      expect(Token::Comma, "','");
      node->args.push_back(parse_expr());
      expect(Token::Comma, "','");
      node->args.push_back(parse_expr());
      expect(Token::Comma, "','");
      node->args.push_back(parse_expr());
      expect(Token::RPar, "')'");
      return node;
    }
    if (name == "q12" || name == "q0") {
      auto node = node_of(name == "q12" ? Expr::Q12Op : Expr::Q0Op);
      node->args = parse_args(Token::LPar, Token::RPar, "'('");
      if (node->args.size() != 1) throw ParseError(name + " takes one argument", t.pos);
      return node;
    }
    if (name.size() > 3 && name.compare(0, 3, "phi") == 0) {
      auto node = node_of(Expr::PhiOp);
      node->k = std::stoi(name.substr(3));
      node->args = parse_args(Token::LPar, Token::RPar, "'('");
      if (node->args.size() != 1) throw ParseError("phi takes one argument", t.pos);
      return node;
    }
    if (name == "X" || name == "Y" || name == "U" || name == "V" || name == "C") {
      auto node = node_of(name == "C" ? Expr::ContractOp : Expr::SpApplyOp);
      node->sp_kind = name[0];
      expect(Token::LBrk, "'['");
      node->i = parse_int();
      if (name == "X" || name == "Y" || name == "C") {
        expect(Token::Comma, "','");
        node->j = parse_int();
      }
      expect(Token::RBrk, "']'");
      node->args = parse_args(Token::LPar, Token::RPar, "'('");
      if (node->args.size() != 1) throw ParseError(name + " applies to one argument", t.pos);
      return node;
    }
    if (name == "p") {
      auto node = node_of(Expr::ProjectOp);
      expect(Token::LBrk, "'['");
      while (peek().type == Token::LPar) {
        take();
        std::vector<int> block;
        block.push_back(parse_int());
        while (accept(Token::Comma)) block.push_back(parse_int());
        expect(Token::RPar, "')'");
        node->shape.blocks.push_back(std::move(block));
      }
      expect(Token::RBrk, "']'");
      node->args = parse_args(Token::LPar, Token::RPar, "'('");
      if (node->args.size() != 1) throw ParseError("p applies to one argument", t.pos);
      return node;
    }
    // letters: a<digits>, b<digits>, or a<var>, b<var>
    if ((name[0] == 'a' || name[0] == 'b') && name.size() >= 2) {
      std::string rest = name.substr(1);
      bool digits = true, alpha = true;
      for (char c : rest) {
        if (!isdigit(static_cast<unsigned char>(c))) digits = false;
        if (!isalpha(static_cast<unsigned char>(c))) alpha = false;
      }
      if (digits || alpha) {
        auto node = node_of(Expr::LetterRef);
        node->letter_a = (name[0] == 'a');
        node->letter_index = rest;
        return node;
      }
    }
    throw ParseError("unknown identifier '" + name + "'", t.pos);
  }

  std::vector<Token> toks_;
  size_t idx_ = 0;
};

}  // namespace detail

inline ExprPtr parse(const std::string& src) { return detail::Parser(src).parse(); }

// --- evaluation ----------------------------------------------------------------

namespace detail {

struct Env {
  GenusContext ctx;
  std::map<std::string, int> bindings;
};

inline long to_int(const Rational& r, const char* what) {
  if (r.get_den() != 1) throw EvalError(std::string(what) + " must be an integer");
  return r.get_num().get_si();
}

inline std::vector<std::pair<Letter, Rational>> letter_terms(const Value& v, const char* what) {
  if (v.kind != Value::Tens || v.t.degree != 1)
    throw EvalError(std::string(what) + " expects degree-1 tensors");
  std::vector<std::pair<Letter, Rational>> out;
  for (const auto& [w, c] : v.t.terms)
    out.emplace_back(Letter::from_code(static_cast<unsigned char>(w[0])), c);
  return out;
}

inline Value eval_node(const Expr& e, Env& env);

inline Value eval_tree_constructor(const Expr& e, Env& env, int arity) {
  // multilinear expansion over the letter terms of each argument
  std::vector<std::vector<std::pair<Letter, Rational>>> slots;
  for (int s = 0; s < arity; ++s)
    slots.push_back(letter_terms(eval_node(*e.args[s], env), arity == 4 ? "Ht" : "T"));
  TreeElement sum(arity - 2);
  std::vector<std::pair<Letter, Rational>> chosen(arity);
  auto rec = [&](auto&& self, int pos, Rational coeff) -> void {
    if (pos == arity) {
      if (arity == 4)
        sum.add(coeff, h_tree(chosen[0].first, chosen[1].first, chosen[2].first, chosen[3].first));
      else
        sum.add(coeff, caterpillar(chosen[0].first, chosen[1].first, chosen[2].first,
                                   chosen[3].first, chosen[4].first, chosen[5].first));
      return;
    }
    for (const auto& lt : slots[pos]) {
      chosen[pos] = lt;
      self(self, pos + 1, coeff * lt.second);
    }
  };
  rec(rec, 0, Rational(1));
  return Value::tensor(eta(sum).to_tensor());
}

inline LieElement value_to_lie(const Value& v, int expected_degree) {
  if (v.kind == Value::Wedge) {
    if (expected_degree != 2 || v.m.block_sizes != std::vector<int>{2})
      throw EvalError("phi: wedge argument must be a single 2-block for phi2");
    LieElement x(2);
    for (const auto& [key, c] : v.m.terms) {
      Word w = MultiWedgeElement::split(key)[0];
      x += c * lie_bracket(lie_letter(Letter::from_code(static_cast<unsigned char>(w[0]))),
                           lie_letter(Letter::from_code(static_cast<unsigned char>(w[1]))));
    }
    return x;
  }
  if (v.kind == Value::Tens) {
    if (v.t.degree != expected_degree)
      throw EvalError("phi" + std::to_string(expected_degree) + ": tensor degree mismatch");
    return lie_from_tensor(v.t);  // throws if not a Lie element
  }
  throw EvalError("phi expects a tensor or a degree-2 wedge");
}

inline Value eval_node(const Expr& e, Env& env) {
  switch (e.op) {
    case Expr::Num: return Value::scalar(e.num);
    case Expr::Genus: return Value::scalar(Rational(env.ctx.g));
    case Expr::LetterRef: {
      int index;
      if (isdigit(static_cast<unsigned char>(e.letter_index[0]))) {
        index = std::stoi(e.letter_index);
      } else {
        auto it = env.bindings.find(e.letter_index);
        if (it == env.bindings.end())
          throw EvalError("unbound index variable '" + e.letter_index + "'");
        index = it->second;
      }
      Letter l = e.letter_a ? Letter::a(index) : Letter::b(index);
      if (index < 1 || index > env.ctx.g)
        throw EvalError("letter " + l.str() + " out of range for genus " +
                        std::to_string(env.ctx.g));
      return Value::tensor(letter_tensor(l));
    }
    case Expr::Neg: return value_mul(Value::scalar(Rational(-1)), eval_node(*e.args[0], env));
    case Expr::Add: return value_add(eval_node(*e.args[0], env), eval_node(*e.args[1], env), +1);
    case Expr::Sub: return value_add(eval_node(*e.args[0], env), eval_node(*e.args[1], env), -1);
    case Expr::Mul: return value_mul(eval_node(*e.args[0], env), eval_node(*e.args[1], env));
    case Expr::Div: {
      Value a = eval_node(*e.args[0], env), b = eval_node(*e.args[1], env);
      if (b.kind != Value::Scalar || sgn(b.s) == 0) throw EvalError("division by a non-scalar or zero");
      return value_mul(Value::scalar(1 / b.s), a);
    }
    case Expr::OTimesOp:
      return value_otimes(eval_node(*e.args[0], env), eval_node(*e.args[1], env));
    case Expr::WedgeBin:
    case Expr::WedgeFn:
      return value_wedge(eval_node(*e.args[0], env), eval_node(*e.args[1], env));
    case Expr::BracOp: {
      Value a = eval_node(*e.args[0], env), b = eval_node(*e.args[1], env);
      if (a.kind != Value::Tens || b.kind != Value::Tens)
        throw EvalError("brac expects tensor arguments");
      return Value::tensor(commutator(a.t, b.t));
    }
    case Expr::TensOp: {
      if (e.args.empty()) return Value::scalar(Rational(1));
      Value v = eval_node(*e.args[0], env);
      for (size_t i = 1; i < e.args.size(); ++i)
        v = value_otimes(v, eval_node(*e.args[i], env));
      return v;
    }
    case Expr::HtOp: return eval_tree_constructor(e, env, 4);
    case Expr::CatOp: return eval_tree_constructor(e, env, 6);
    case Expr::SumOp: {
      long lo = to_int(eval_node(*e.args[0], env).s, "sum lower bound");
      long hi = to_int(eval_node(*e.args[1], env).s, "sum upper bound");
      Value acc = Value::scalar(Rational(0));
      bool first = true;
      for (long v = lo; v <= hi; ++v) {
        env.bindings[e.var] = static_cast<int>(v);
        Value term = eval_node(*e.args[2], env);
        acc = first ? term : value_add(acc, term, +1);
        first = false;
      }
      env.bindings.erase(e.var);
      if (first) return Value::scalar(Rational(0));
      return acc;
    }
    case Expr::Q12Op: {
      Value v = eval_node(*e.args[0], env);
      if (v.kind != Value::Tens || v.t.degree != 4)
        throw EvalError("q12 expects a degree-4 tensor");
      return Value::wedge(project(contract(v.t, 1, 2), WedgeShape{{1, 2}}));
    }
    case Expr::Q0Op: {
      Value v = eval_node(*e.args[0], env);
      if (v.kind != Value::Tens || v.t.degree != 4)
        throw EvalError("q0 expects a degree-4 tensor");
      return Value::scalar(scalar_of(contract(contract(v.t, 1, 2), 1, 2)));
    }
    case Expr::PhiOp: {
      LieElement x = value_to_lie(eval_node(*e.args[0], env), e.k);
      return Value::tensor(eta(phi(x, env.ctx)).to_tensor());
    }
    case Expr::SpApplyOp: {
      SpGenerator gen = [&] {
        switch (e.sp_kind) {
          case 'X': return SpGenerator::x(e.i, e.j);
          case 'Y': return SpGenerator::y(e.i, e.j);
          case 'U': return SpGenerator::u(e.i);
          default: return SpGenerator::v(e.i);
        }
      }();
      if (gen.i > env.ctx.g || gen.j > env.ctx.g)
        throw EvalError(gen.str() + " out of range for genus " + std::to_string(env.ctx.g));
      Value v = eval_node(*e.args[0], env);
      if (v.kind == Value::Tens) return Value::tensor(sp_apply(gen, v.t));
      if (v.kind == Value::Wedge) return Value::wedge(sp_apply(gen, v.m));
      throw EvalError("sp operators act on tensors or wedges");
    }
    case Expr::ContractOp: {
      Value v = eval_node(*e.args[0], env);
      if (v.kind != Value::Tens) throw EvalError("C[i,j] applies to tensors");
      return Value::tensor(contract(v.t, e.i, e.j));
    }
    case Expr::ProjectOp: {
      Value v = eval_node(*e.args[0], env);
      if (v.kind != Value::Tens) throw EvalError("p[...] applies to tensors");
      return Value::wedge(project(v.t, e.shape));
    }
    case Expr::Omega0Op: {
      MultiWedgeElement m(std::vector<int>{2});
      for (int i = 1; i <= env.ctx.g; ++i)
        m.add_blocks({word_of({Letter::a(i), Letter::b(i)})}, Rational(1));
      return Value::wedge(m);
    }
  }
  throw EvalError("unhandled expression node");
}

}  // namespace detail

inline Value eval(const ExprPtr& expr, const GenusContext& ctx) {
  detail::Env env{ctx, {}};
  return detail::eval_node(*expr, env);
}

inline Value eval_str(const std::string& src, const GenusContext& ctx) {
  return eval(parse(src), ctx);
}

}  // namespace symplie

#include "dynseq/parse.hpp"

#include <cctype>
#include <functional>

namespace dynseq {

namespace {

struct Token {
  enum Kind { End, Number, Symbol, Op } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Number, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Symbol, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      out.push_back({Token::Op, std::string(1, c), i});
      ++i;
    } else {
      throw Error(ErrorKind::Parse, "unexpected character '" + std::string(1, c) + "' at position " + std::to_string(i),
                  static_cast<std::int64_t>(i));
    }
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

// Recursive descent over an arbitrary value type.
template <typename V>
class Parser {
 public:
  struct Ops {
    std::function<V(const Integer&)> integer;
    std::function<V(const std::string&, std::size_t pos)> symbol;
    std::function<V(const V&, const V&)> add, sub, mul;
    std::function<V(const V&, const V&, std::size_t pos)> div;
    std::function<V(const V&)> neg;
    std::function<V(const V&, long)> pow;
  };

  Parser(std::string_view text, Ops ops) : toks_(tokenize(text)), ops_(std::move(ops)) {}

  V parse() {
    if (peek().kind == Token::End) fail("expression");
    V v = expr();
    if (peek().kind != Token::End) fail("operator or end of input");
    return v;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool is_op(const char* op) const { return peek().kind == Token::Op && peek().text == op; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    std::string found = t.kind == Token::End ? "end of input" : "'" + t.text + "'";
    throw Error(ErrorKind::Parse, "expected " + expected + " at position " + std::to_string(t.pos) + ", found " + found,
                static_cast<std::int64_t>(t.pos));
  }

  V expr() {
    V v = term();
    while (is_op("+") || is_op("-")) {
      bool plus = peek().text == "+";
      ++pos_;
      V rhs = term();
      v = plus ? ops_.add(v, rhs) : ops_.sub(v, rhs);
    }
    return v;
  }

  V term() {
    V v = factor();
    while (is_op("*") || is_op("/")) {
      bool times = peek().text == "*";
      std::size_t at = peek().pos;
      ++pos_;
      V rhs = factor();
      v = times ? ops_.mul(v, rhs) : ops_.div(v, rhs, at);
    }
    return v;
  }

  V factor() {
    if (is_op("-")) {
      ++pos_;
      return ops_.neg(factor());
    }
    V b = base();
    if (is_op("^")) {
      ++pos_;
      bool negative = false;
      if (is_op("-")) {
        negative = true;
        ++pos_;
      }
      if (peek().kind != Token::Number) fail("integer exponent");
      Integer e(peek().text);
      if (!e.fits_slong_p()) fail("exponent of reasonable size");
      ++pos_;
      b = ops_.pow(b, negative ? -e.get_si() : e.get_si());
    }
    return b;
  }

  V base() {
    const Token& t = peek();
    if (t.kind == Token::Number) {
      ++pos_;
      return ops_.integer(Integer(t.text));
    }
    if (t.kind == Token::Symbol) {
      ++pos_;
      return ops_.symbol(t.text, t.pos);
    }
    if (is_op("(")) {
      ++pos_;
      V v = expr();
      if (!is_op(")")) fail("')'");
      ++pos_;
      return v;
    }
    fail("number, symbol or '('");
  }

  std::vector<Token> toks_;
  Ops ops_;
  std::size_t pos_ = 0;
};

[[noreturn]] void unknown_symbol(const std::string& name, std::size_t pos) {
  throw Error(ErrorKind::Parse, "unknown symbol '" + name + "' at position " + std::to_string(pos),
              static_cast<std::int64_t>(pos));
}

}  // namespace

RatFunc parse_expression(std::string_view text, const RingPtr& ring) {
  const FieldDescriptor& F = ring->F();
  Parser<RatFunc>::Ops ops;
  ops.integer = [&](const Integer& n) { return RatFunc::constant(ring, F.from_rational(Rational(n))); };
  ops.symbol = [&](const std::string& name, std::size_t pos) {
    long i = ring->vars().index_of(name);
    if (i >= 0) return RatFunc::variable(ring, static_cast<std::size_t>(i));
    if (!F.symbol().empty() && name == F.symbol()) return RatFunc::constant(ring, F.generator());
    unknown_symbol(name, pos);
  };
  ops.add = [](const RatFunc& a, const RatFunc& b) { return a + b; };
  ops.sub = [](const RatFunc& a, const RatFunc& b) { return a - b; };
  ops.mul = [](const RatFunc& a, const RatFunc& b) { return a * b; };
  ops.div = [](const RatFunc& a, const RatFunc& b, std::size_t pos) {
    if (b.is_zero())
      throw Error(ErrorKind::DivisionByZero, "division by zero at position " + std::to_string(pos),
                  static_cast<std::int64_t>(pos));
    return a / b;
  };
  ops.neg = [](const RatFunc& a) { return -a; };
  ops.pow = [](const RatFunc& a, long e) { return a.pow(e); };
  return Parser<RatFunc>(text, std::move(ops)).parse();
}

FieldElement parse_constant(std::string_view text, const FieldPtr& field) {
  const FieldDescriptor& F = *field;
  Parser<FieldElement>::Ops ops;
  ops.integer = [&](const Integer& n) { return FieldElement(field, Rational(n)); };
  ops.symbol = [&](const std::string& name, std::size_t pos) {
    if (!F.symbol().empty() && name == F.symbol()) return FieldElement(field, F.generator());
    unknown_symbol(name, pos);
  };
  ops.add = [](const FieldElement& a, const FieldElement& b) { return a + b; };
  ops.sub = [](const FieldElement& a, const FieldElement& b) { return a - b; };
  ops.mul = [](const FieldElement& a, const FieldElement& b) { return a * b; };
  ops.div = [](const FieldElement& a, const FieldElement& b, std::size_t pos) {
    if (b.is_zero())
      throw Error(ErrorKind::DivisionByZero, "division by zero at position " + std::to_string(pos),
                  static_cast<std::int64_t>(pos));
    return a / b;
  };
  ops.neg = [](const FieldElement& a) { return -a; };
  ops.pow = [](const FieldElement& a, long e) {
    if (e < 0 && a.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero raised to a negative power");
    return a.pow(e);
  };
  return Parser<FieldElement>(text, std::move(ops)).parse();
}

MultiPoly parse_polynomial(std::string_view text, const RingPtr& ring) {
  RatFunc f = parse_expression(text, ring);
  if (!f.is_polynomial())
    throw Error(ErrorKind::InvalidArgument, "expected a polynomial, got " + f.to_string());
  return f.num();
}

UPoly parse_upoly(std::string_view text, const std::string& var) {
  Parser<UPoly>::Ops ops;
  ops.integer = [](const Integer& n) { return UPoly::constant(Rational(n)); };
  ops.symbol = [&](const std::string& name, std::size_t pos) {
    if (name != var) unknown_symbol(name, pos);
    return UPoly::monomial(Rational(1), 1);
  };
  ops.add = [](const UPoly& a, const UPoly& b) { return a + b; };
  ops.sub = [](const UPoly& a, const UPoly& b) { return a - b; };
  ops.mul = [](const UPoly& a, const UPoly& b) { return a * b; };
  ops.div = [](const UPoly& a, const UPoly& b, std::size_t pos) {
    if (b.degree() != 0)
      throw Error(ErrorKind::Parse, "only division by nonzero constants is allowed at position " + std::to_string(pos),
                  static_cast<std::int64_t>(pos));
    return a.scaled(Rational(1) / b.lead());
  };
  ops.neg = [](const UPoly& a) { return -a; };
  ops.pow = [](const UPoly& a, long e) {
    if (e < 0) throw Error(ErrorKind::Parse, "negative exponent in a polynomial");
    UPoly r = UPoly::constant(Rational(1));
    for (long k = 0; k < e; ++k) r = r * a;
    return r;
  };
  return Parser<UPoly>(text, std::move(ops)).parse();
}

}  // namespace dynseq

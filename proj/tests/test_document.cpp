#include <doctest.h>

#include <cctype>

#include "support.hpp"

using namespace testing;

namespace {

// Separate recognizer for the expression grammar:
//   expr := term (('+'|'-') term)*     term := factor (('*'|'/') factor)*
//   factor := '-' factor | base ('^' ['-'] integer)?
//   base := integer | symbol | '(' expr ')'
struct Tok {
  char kind;  // 'n' number, 's' symbol, or the operator character
  std::size_t pos, len;
};

std::vector<Tok> lex(const std::string& s) {
  std::vector<Tok> out;
  for (std::size_t i = 0; i < s.size();) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({'n', i, j - i});
      i = j;
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({'s', i, j - i});
      i = j;
    } else {
      out.push_back({s[i], i, 1});
      ++i;
    }
  }
  return out;
}

class Recognizer {
 public:
  explicit Recognizer(std::vector<Tok> t) : t_(std::move(t)) {}
  bool ok() { return expr() && k_ == t_.size(); }

 private:
  char at() const { return k_ < t_.size() ? t_[k_].kind : '\0'; }
  bool eat(char c) { return at() == c ? (++k_, true) : false; }
  bool expr() {
    if (!term()) return false;
    while (at() == '+' || at() == '-') {
      ++k_;
      if (!term()) return false;
    }
    return true;
  }
  bool term() {
    if (!factor()) return false;
    while (at() == '*' || at() == '/') {
      ++k_;
      if (!factor()) return false;
    }
    return true;
  }
  bool factor() {
    if (eat('-')) return factor();
    if (!base()) return false;
    if (eat('^')) {
      eat('-');
      return eat('n');
    }
    return true;
  }
  bool base() {
    if (eat('n') || eat('s')) return true;
    return eat('(') && expr() && eat(')');
  }
  std::vector<Tok> t_;
  std::size_t k_ = 0;
};

bool well_formed(const std::string& s) { return Recognizer(lex(s)).ok(); }

std::vector<std::string> expressions(const SystemDocument& d) {
  std::vector<std::string> out = d.map;
  out.push_back(d.observable);
  out.insert(out.end(), d.relations.begin(), d.relations.end());
  return out;
}

std::vector<std::string> canonical(const DynSeq& s) {
  const auto& g = s.geo();
  std::vector<std::string> out{g.ring->field()->describe(), std::to_string(static_cast<int>(g.ring->order()))};
  for (const auto& v : g.ring->vars().names()) out.push_back(v);
  for (const auto& c : g.map.components()) out.push_back(c.to_string());
  for (const auto& p : g.point) out.push_back(p.to_string());
  out.push_back(g.observable.to_string());
  for (const auto& r : g.relations) out.push_back(r.to_string());
  for (const auto& p : s.prefix()) out.push_back("prefix " + p.to_string());
  return out;
}

}  // namespace

TEST_SUITE("document") {

TEST_CASE("parser examples") {
  auto T = QQ_t();
  auto R = ring(T, {"x", "y", "z"});
  auto h = rf(R, "x - (z - 1)/(t - 1)");
  CHECK(h.eval(fes(T, {"1", "0", "t"})).is_zero());
  CHECK(rf(R, "0").is_zero());
  auto S = ring(QQ(), {"x", "y", "z", "w"});
  CHECK(rf(S, "(w*y + z^2)/x") == RatFunc(mp(S, "w*y + z^2"), mp(S, "x")));
  // '^' binds tighter than unary minus
  CHECK(rf(S, "-x^2") == rf(S, "-(x^2)"));
  CHECK(rf(S, "x^-2") == rf(S, "1/x^2"));
  for (const char* bad : {"2x", "x y", "x +", "(x", "x)", "x^y", "", "x ^ 1/2 ^", "q"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(rf(S, bad), Error);
  }
  try {
    (void)rf(S, "x + * y");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(e.index() == 4);
  }
}

TEST_CASE("every catalog expression parses") {
  for (const auto& name : catalog_system_names()) {
    CAPTURE(name);
    auto doc = catalog_system(name);
    auto R = make_ring(doc.field, VarTable(doc.variables), doc.order.value_or(MonomialOrder::DegRevLex));
    for (const auto& e : expressions(doc)) {
      CHECK(well_formed(e));
      CHECK_NOTHROW(parse_expression(e, R));
    }
    for (const auto& p : doc.point) CHECK_NOTHROW(parse_constant(p, doc.field));
  }
}

TEST_CASE("deleting one token") {
  int rejected = 0, accepted = 0;
  for (const auto& name : catalog_system_names()) {
    auto doc = catalog_system(name);
    auto R = make_ring(doc.field, VarTable(doc.variables));
    for (const auto& e : expressions(doc)) {
      auto toks = lex(e);
      for (const auto& t : toks) {
        std::string m = e.substr(0, t.pos) + " " + e.substr(t.pos + t.len);
        CAPTURE(m);
        if (!well_formed(m)) {
          try {
            (void)parse_expression(m, R);
            FAIL("malformed expression was accepted");
          } catch (const Error& err) {
            CHECK(err.kind() == ErrorKind::Parse);
          }
          ++rejected;
        } else {
          try {
            (void)parse_expression(m, R);
          } catch (const Error& err) {
            // well formed but, say, dividing by zero
            CHECK(err.kind() != ErrorKind::Parse);
          }
          ++accepted;
        }
      }
    }
  }
  CHECK(rejected > 100);
  CHECK(accepted > 0);
}

TEST_CASE("catalog systems round-trip") {
  for (const auto& name : catalog_system_names()) {
    CAPTURE(name);
    auto s = catalog(name);
    auto j = system_to_json(system_document(s));
    auto s2 = build_system(system_from_json(nlohmann::json::parse(j.dump())));
    CHECK(canonical(s2) == canonical(s));
    CHECK(system_to_json(system_document(s2)) == j);
    CHECK(seq_eval(s2, 6) == seq_eval(s, 6));

    // the document form itself is a fixed point
    auto d = catalog_system(name);
    auto jd = system_to_json(d);
    CHECK(system_to_json(system_from_json(jd)) == jd);
  }
}

TEST_CASE("systems built by combinators round-trip") {
  auto F = QQ();
  for (const char* expr : {"partial_products(catalog:factorial)", "interlace(catalog:factorial, catalog:triangular-closed)",
                           "with_prefix(catalog:A006769, [3, 4], 1)", "progression(catalog:A006720, 2, 1)",
                           "poly_exponent(2, x^2 - 2*x + 1)"}) {
    CAPTURE(expr);
    auto s = parse_sequence_expression(expr, F);
    auto s2 = build_system(system_from_json(system_to_json(system_document(s))));
    CHECK(canonical(s2) == canonical(s));
    CHECK(seq_eval(s2, 12) == seq_eval(s, 12));
  }
}

TEST_CASE("combinator expressions") {
  auto F = QQ();
  auto ev = [&](const char* e, std::size_t n) { return strings(seq_eval(parse_sequence_expression(e, F), n)); };
  CHECK(ev("partial_products(catalog:factorial)", 5) == ints({1, 1, 2, 12, 288, 34560}));
  CHECK(ev("sum(catalog:factorial, constant(1), constant(-1))", 4) == ints({1, 1, 2, 6, 24}));
  CHECK(ev("product(catalog:factorial, catalog:factorial)", 4) == ints({1, 1, 4, 36, 576}));
  CHECK(ev("partial_sums(linrec([2, -1], [0, 1]))", 4) == ints({0, 1, 3, 6, 10}));
  CHECK(ev("shift(catalog:factorial, 2)", 3) == ints({2, 6, 24, 120}));
  CHECK(ev("with_prefix(catalog:factorial, [5], 1)", 4) == ints({5, 1, 1, 2, 6}));
  CHECK(ev("progression(catalog:factorial, 2)", 3) == ints({1, 2, 24, 720}));
  CHECK(ev("floor(catalog:factorial, 3)", 9) == ints({1, 1, 1, 1, 1, 1, 2, 2, 2, 6}));
  CHECK(ev("interlace(constant(0), constant(1))", 5) == ints({0, 1, 0, 1, 0, 1}));
  CHECK(ev("scale(catalog:factorial, -2)", 3) == ints({-2, -2, -4, -12}));
  CHECK(ev("somos(5, [1, 1, 1, 1, 1])", 9) == ints({1, 1, 1, 1, 1, 2, 3, 5, 11, 37}));
  CHECK(ev("eds(1, 1, -1, 1)", 6) == ints({0, 1, 1, -1, 1, 2, -1}));
  CHECK(ev("power_tower(2, 2)", 3) == ints({2, 4, 16, 256}));
  CHECK(ev("poly_exponent(2, (x - 1)^2)", 4) == ints({2, 1, 2, 16, 512}));
  CHECK(ev("recurrence(y1*x1, [1], linrec([2, -1], [1, 2]))", 5) == ints({1, 1, 2, 6, 24, 120}));

  for (const char* bad : {"shift(catalog:factorial)", "nosuch(catalog:factorial)", "catalog:nosuch", "shift(catalog:factorial, -1)",
                          "linrec([1], 2)", "sum()"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_sequence_expression(bad, F), Error);
  }
  try {
    (void)parse_sequence_expression("catalog:nosuch", F);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownName);
  }
}

TEST_CASE("document validation") {
  using nlohmann::json;
  auto base = json::parse(R"({"variables": ["x", "y"], "map": ["x + 1", "x*y"], "point": ["1", "1"], "observable": "y"})");
  CHECK_NOTHROW(build_system(system_from_json(base)));
  auto expect = [&](json j, ErrorKind k) {
    CAPTURE(j.dump());
    try {
      (void)build_system(system_from_json(j));
      FAIL("document was accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == k);
    }
  };
  auto j = base;
  j["map"] = {"x + 1"};
  expect(j, ErrorKind::InvalidArgument);
  j = base;
  j["point"] = {"1"};
  expect(j, ErrorKind::InvalidArgument);
  j = base;
  j["observable"] = "y +";
  expect(j, ErrorKind::Parse);
  j = base;
  j["observable"] = "q";
  expect(j, ErrorKind::Parse);
  j = base;
  j["field"] = {{"kind", "algebraic"}, {"generator", "r"}, {"minpoly", {0, 0, 1}}};
  expect(j, ErrorKind::InvalidField);
  j = base;
  j["relations"] = {"x*y - 2"};
  expect(j, ErrorKind::InvalidArgument);

  auto sqrt5 = field_from_json(json::parse(R"({"kind": "algebraic", "generator": "r", "minpoly": "r^2 - 5"})"));
  CHECK(sqrt5->describe() == "QQ[r]/(r^2 - 5)");
  CHECK(field_to_json(sqrt5) == field_to_json(QQ_sqrt5()));
  CHECK(field_from_json(field_to_json(QQ_t()))->describe() == QQ_t()->describe());
}

TEST_CASE("identity documents") {
  for (const auto& name : catalog_identity_names()) {
    CAPTURE(name);
    auto id = load_document("catalog:" + name).identity;
    REQUIRE(id);
    CHECK(same_field(id->lhs.field(), id->rhs.field()));
  }
  auto fib = *load_document("catalog:fib-power-of-two").identity;
  CHECK(fib.options.order == MonomialOrder::Lex);
  CHECK(fib.order_pinned);
  auto prod = *load_document("catalog:product-identity").identity;
  CHECK(prod.options.extra_check_terms == 10);
  auto sys = load_document("catalog:factorial");
  CHECK(sys.system);
  CHECK_FALSE(sys.identity);
  CHECK_THROWS_AS(load_document("/nonexistent/file.json"), Error);
}

}

#include <doctest.h>

#include <algorithm>

#include "support.hpp"

using namespace testing;

TEST_SUITE("multipoly") {

TEST_CASE("arithmetic examples") {
  auto R = ring(QQ(), {"x", "y", "z1", "y2"});
  CHECK(mp(R, "(x+1)") * mp(R, "(x-1)") == mp(R, "x^2 - 1"));
  CHECK((mp(R, "z1 - y2") + mp(R, "y2 - z1")).is_zero());

  auto Fq = QQ_t();
  auto Rt = ring(Fq, {"x"});
  auto p = poly_scale(mp(Rt, "(t - 1)*x"), field_inv(fe(Fq, "t - 1")));
  CHECK(p == mp(Rt, "x"));
}

TEST_CASE("evaluation examples") {
  auto F = QQ();
  auto R = ring(F, {"x", "y", "z"});
  CHECK(poly_eval(mp(R, "x + 1"), fes(F, {"1", "0", "0"})) == fe(F, "2"));
  CHECK(poly_eval(MultiPoly(R), fes(F, {"5", "7", "9"})).is_zero());
  CHECK(poly_eval(mp(R, "y - z*(z+1)/2"), fes(F, {"1", "0", "0"})).is_zero());
}

TEST_CASE("substitution examples") {
  auto F = QQ();
  auto R = ring(F, {"x", "z"});
  auto img = std::vector<RatFunc>{rf(R, "x^2"), rf(R, "z^2")};
  CHECK(poly_substitute(mp(R, "x - z"), img) == rf(R, "x^2 - z^2"));

  auto K = QQ_sqrt5();
  auto R4 = ring(K, {"x", "y", "z", "t"}, MonomialOrder::Lex);
  RatMap chi(R4, {rf(R4, "x*y"), rf(R4, "y^2 - 2"), rf(R4, "z^2"), rf(R4, "t^2")});
  CHECK(ratmap_compose(rf(R4, "x - (z - t)/r"), chi) == rf(R4, "x*y - (z^2 - t^2)/r"));

  auto S = ring(F, {"x", "y", "z", "w"});
  auto somos = std::vector<RatFunc>{rf(S, "y"), rf(S, "z"), rf(S, "w"), rf(S, "(w*y + z^2)/x")};
  CHECK(poly_substitute(mp(S, "x"), somos) == rf(S, "y"));

  // identity images
  Random rnd(7);
  std::vector<RatFunc> id;
  for (std::size_t i = 0; i < S->nvars(); ++i) id.push_back(RatFunc::variable(S, i));
  for (int k = 0; k < 50; ++k) {
    auto p = rnd.poly(S, 6, 4);
    CHECK(poly_substitute(p, id) == RatFunc(p));
  }
}

TEST_CASE("monomial orders") {
  auto lex = ring(QQ(), {"x", "y"}, MonomialOrder::Lex);
  auto grl = ring(QQ(), {"x", "y"}, MonomialOrder::DegRevLex);
  CHECK(mp(lex, "x^2*y + x*y^3").terms().front().mono == mp(lex, "x^2*y").lead_monomial());
  CHECK(mp(grl, "x^2*y + x*y^3").lead_monomial() == mp(grl, "x*y^3").lead_monomial());
  // degrevlex tie-break: x*z < y^2 for x > y > z
  auto R3 = ring(QQ(), {"x", "y", "z"});
  CHECK(mp(R3, "x*z + y^2").lead_monomial() == mp(R3, "y^2").lead_monomial());
  CHECK(mp(R3, "x*z + y^2").to_string() == "y^2 + x*z");
}

TEST_CASE("canonical term order") {
  Random rnd(11);
  for (auto order : {MonomialOrder::Lex, MonomialOrder::DegRevLex}) {
    auto R = ring(QQ(), {"a", "b", "c"}, order);
    for (int k = 0; k < 100; ++k) {
      auto p = rnd.poly(R, 8, 5);
      auto terms = p.terms();
      std::shuffle(terms.begin(), terms.end(), rnd.engine());
      CHECK(MultiPoly(R, terms) == p);
      for (std::size_t i = 1; i < p.size(); ++i) CHECK(R->cmp(p.terms()[i - 1].mono, p.terms()[i].mono) > 0);
    }
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  for (const auto& F : {QQ(), QQ_sqrt5(), QQ_t()}) {
    CAPTURE(F->describe());
    Random rnd(100 + static_cast<int>(F->kind()));
    auto R = ring(F, {"x", "y", "z"});
    for (int k = 0; k < 200; ++k) {
      auto p = rnd.poly(R, 5, 3), q = rnd.poly(R, 5, 3);
      std::vector<FieldElement> pt{rnd.element(F), rnd.element(F), rnd.element(F)};
      REQUIRE(poly_eval(p * q, pt) == poly_eval(p, pt) * poly_eval(q, pt));
      REQUIRE(poly_eval(p + q, pt) == poly_eval(p, pt) + poly_eval(q, pt));
    }
  }
}

TEST_CASE("printing round-trips through the parser") {
  for (const auto& F : {QQ(), QQ_sqrt5(), QQ_t()}) {
    Random rnd(300 + static_cast<int>(F->kind()));
    auto R = ring(F, {"x", "y"});
    for (int k = 0; k < 100; ++k) {
      auto p = poly_scale(rnd.poly(R, 5, 4), rnd.nonzero(F));
      REQUIRE(mp(R, p.to_string()) == p);
    }
  }
}

TEST_CASE("term limit") {
  auto R = ring(QQ(), {"x", "y"});
  auto p = mp(R, "x + y + 1");
  auto saved = term_limit();
  set_term_limit(20);
  try {
    (void)p.pow(10);
    FAIL("expected SizeLimitExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeLimitExceeded);
  }
  set_term_limit(saved);
  CHECK(p.pow(10).size() == 66);
}

TEST_CASE("exact division") {
  auto R = ring(QQ(), {"x", "y"});
  MultiPoly q;
  CHECK(divides_exactly(mp(R, "x - y"), mp(R, "x^2 - y^2"), &q));
  CHECK(q == mp(R, "x + y"));
  CHECK_FALSE(divides_exactly(mp(R, "x - y"), mp(R, "x^2 + y^2"), &q));
}

}

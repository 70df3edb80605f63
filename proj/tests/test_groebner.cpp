#include <doctest.h>

#include <algorithm>

#include "support.hpp"

using namespace testing;

namespace {

// Every S-polynomial of the basis reduces to zero.
bool buchberger_closed(const GroebnerBasis& G) {
  const auto& B = G.basis();
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = i + 1; j < B.size(); ++j)
      if (!normal_form(s_polynomial(B[i], B[j]), G).is_member) return false;
  return true;
}

bool reduced(const GroebnerBasis& G) {
  const auto& B = G.basis();
  for (std::size_t i = 0; i < B.size(); ++i) {
    if (!B[i].F().is_one(B[i].lead_coeff())) return false;
    for (std::size_t j = 0; j < B.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : B[i].terms())
        if (B[j].lead_monomial().divides(t.mono)) return false;
    }
  }
  return true;
}

MultiPoly random_combination(Random& rnd, const std::vector<MultiPoly>& gens) {
  const auto& R = gens.front().ring();
  MultiPoly p(R);
  for (const auto& g : gens) p += rnd.poly(R, 3, 2) * g;
  return p;
}

}  // namespace

TEST_SUITE("groebner") {

TEST_CASE("basic examples") {
  auto F = QQ();
  auto R = ring(F, {"x", "y"}, MonomialOrder::Lex);
  CHECK(groebner_basis(Ideal(R, {}), MonomialOrder::Lex).size() == 0);

  auto G = groebner_basis(Ideal(R, {mp(R, "x - y"), mp(R, "y^2 - 1")}), MonomialOrder::Lex);
  REQUIRE(G.size() == 2);
  CHECK(G.basis()[0] == mp(G.ring(), "y^2 - 1"));
  CHECK(G.basis()[1] == mp(G.ring(), "x - y"));

  CHECK(normal_form(mp(G.ring(), "x - y"), G).remainder.is_zero());
  auto X = ring(F, {"x"});
  auto Gx = groebner_basis(Ideal(X, {mp(X, "x")}), MonomialOrder::DegRevLex);
  auto nf = normal_form(mp(X, "1"), Gx);
  CHECK_FALSE(nf.is_member);
  CHECK(nf.remainder == mp(X, "1"));
  CHECK(groebner_basis(Ideal(R, {mp(R, "x^2 + 1"), mp(R, "x")}), MonomialOrder::Lex).is_unit());
}

TEST_CASE("triangular numbers eliminate to x - z - 1") {
  auto R = ring(QQ(), {"x", "y", "z"}, MonomialOrder::Lex);
  std::vector<MultiPoly> gens{mp(R, "y - z*(z+1)/2"), mp(R, "y + x - (z+1)*(z+2)/2")};
  auto G = groebner_basis(Ideal(R, gens), MonomialOrder::Lex);
  const auto& B = G.basis();
  CHECK(std::find(B.begin(), B.end(), mp(G.ring(), "x - z - 1")) != B.end());
  CHECK(B.size() == 2);
  // any order gives the same variety: x = z + 1, y = z(z+1)/2
  auto Gd = groebner_basis(Ideal(R, gens), MonomialOrder::DegRevLex);
  CHECK(normal_form(mp(Gd.ring(), "x - z - 1"), Gd).is_member);
  CHECK(normal_form(mp(Gd.ring(), "2*y - z^2 - z"), Gd).is_member);
}

TEST_CASE("fibonacci chain over Q(sqrt 5)") {
  auto K = QQ_sqrt5();
  auto R = ring(K, {"x", "y", "z", "t"}, MonomialOrder::Lex);
  RatMap chi(R, {rf(R, "x*y"), rf(R, "y^2 - 2"), rf(R, "z^2"), rf(R, "t^2")});
  auto h0 = rf(R, "x - (z - t)/r");
  auto h1 = ratmap_compose(h0, chi);
  auto h2 = ratmap_compose(h1, chi);
  auto g = mp(R, "z*t - 1");
  auto r0 = ratfunc_numerator_cleared(h0), r1 = ratfunc_numerator_cleared(h1), r2 = ratfunc_numerator_cleared(h2);
  auto G1 = groebner_basis(Ideal(R, {r0, r1, g}), MonomialOrder::Lex);
  auto G2 = groebner_basis(Ideal(R, {r0, r1, r2, g}), MonomialOrder::Lex);
  CHECK(normal_form(r2, G1).is_member);
  CHECK(ideal_equal(G1, G2));
  auto G0 = groebner_basis(Ideal(R, {r0, g}), MonomialOrder::Lex);
  CHECK_FALSE(normal_form(r1, G0).is_member);
  CHECK_FALSE(ideal_equal(G0, G1));
  CHECK(buchberger_closed(G1));
}

TEST_CASE("ideal equality") {
  auto R = ring(QQ(), {"x", "y"});
  auto Gx = groebner_basis(Ideal(R, {mp(R, "x")}), MonomialOrder::DegRevLex);
  auto Gxy = groebner_basis(Ideal(R, {mp(R, "x"), mp(R, "y")}), MonomialOrder::DegRevLex);
  CHECK(ideal_equal(Gx, Gx));
  CHECK_FALSE(ideal_equal(Gx, Gxy));
  auto Glex = groebner_basis(Ideal(R, {mp(R, "x")}), MonomialOrder::Lex);
  try {
    (void)ideal_equal(Gx, Glex);
    FAIL("expected OrderMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderMismatch);
  }
}

TEST_CASE("membership of random combinations") {
  for (const auto& F : {QQ(), QQ_sqrt5(), QQ_t()}) {
    CAPTURE(F->describe());
    Random rnd(2024 + static_cast<int>(F->kind()));
    int members = 0;
    for (int k = 0; k < 220; ++k) {
      auto order = k % 2 ? MonomialOrder::Lex : MonomialOrder::DegRevLex;
      auto R = ring(F, {"x", "y", "z"}, order);
      std::vector<MultiPoly> gens;
      int ngens = static_cast<int>(rnd.integer(1, 3));
      for (int i = 0; i < ngens; ++i) {
        auto g = poly_scale(rnd.poly(R, 3, 2), rnd.nonzero(F));
        if (!g.is_zero()) gens.push_back(g);
      }
      if (gens.empty()) continue;
      auto G = groebner_basis(Ideal(R, gens), order);
      REQUIRE(reduced(G));
      REQUIRE(buchberger_closed(G));
      for (const auto& g : gens) REQUIRE(normal_form(g, G).is_member);
      auto p = random_combination(rnd, gens);
      REQUIRE(normal_form(p, G).is_member);
      ++members;
    }
    CHECK(members >= 200);
  }
}

TEST_CASE("canonical bases from shuffled and duplicated generators") {
  Random rnd(77);
  for (int k = 0; k < 60; ++k) {
    auto R = ring(QQ(), {"x", "y", "z"});
    std::vector<MultiPoly> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(rnd.poly(R, 3, 2));
    auto G = groebner_basis(Ideal(R, gens), MonomialOrder::DegRevLex);
    auto more = gens;
    more.push_back(gens.front());
    more.push_back(random_combination(rnd, gens));
    std::shuffle(more.begin(), more.end(), rnd.engine());
    auto H = groebner_basis(Ideal(R, more), MonomialOrder::DegRevLex);
    REQUIRE(G.basis() == H.basis());
    // extending by members changes nothing; extending by the rest matches
    auto E = groebner_extend(groebner_basis(Ideal(R, {gens[0]}), MonomialOrder::DegRevLex), {gens[1], gens[2]});
    REQUIRE(E.basis() == G.basis());
  }
}

// Ideals whose membership is decidable by hand, used as an oracle for
// polynomials that were not built as combinations.
TEST_CASE("membership against hand-checkable ideals") {
  auto F = QQ();
  auto R = ring(F, {"x", "y", "z"});
  Random rnd(31337);

  // monomial ideal: member iff every term is divisible by a generator
  std::vector<MultiPoly> mono{mp(R, "x^2"), mp(R, "x*y"), mp(R, "y^3"), mp(R, "z^2*y")};
  auto Gm = groebner_basis(Ideal(R, mono), MonomialOrder::DegRevLex);
  // maximal ideal of the point (1, -2, 3): member iff p vanishes there
  auto Gp = groebner_basis(Ideal(R, {mp(R, "x - 1"), mp(R, "y + 2"), mp(R, "z - 3")}), MonomialOrder::DegRevLex);
  auto point = fes(F, {"1", "-2", "3"});
  // graph ideal <x - y^2>: member iff p(y^2, y, z) = 0
  auto Gg = groebner_basis(Ideal(R, {mp(R, "x - y^2")}), MonomialOrder::Lex);
  std::vector<RatFunc> graph{rf(R, "y^2"), rf(R, "y"), rf(R, "z")};

  int agree = 0, positives = 0;
  for (int k = 0; k < 210; ++k) {
    auto p = rnd.poly(R, 4, 4);
    bool expected = false;
    bool got = false;
    switch (k % 3) {
      case 0: {
        expected = std::all_of(p.terms().begin(), p.terms().end(), [&](const Term& t) {
          return std::any_of(mono.begin(), mono.end(), [&](const MultiPoly& g) { return g.lead_monomial().divides(t.mono); });
        });
        got = normal_form(p, Gm).is_member;
        break;
      }
      case 1: {
        if (rnd.coin()) p = p - MultiPoly::constant(R, poly_eval(p, point).value());
        expected = poly_eval(p, point).is_zero();
        got = normal_form(p, Gp).is_member;
        break;
      }
      case 2: {
        if (rnd.coin()) p = p * mp(R, "x - y^2");
        expected = poly_substitute(p, graph).is_zero();
        got = normal_form(p, Gg).is_member;
        break;
      }
    }
    positives += expected;
    agree += expected == got;
    CHECK(expected == got);
  }
  CHECK(agree == 210);
  CHECK(positives > 30);
}

TEST_CASE("pair budget") {
  auto R = ring(QQ(), {"x", "y", "z"});
  GroebnerOptions opts;
  opts.max_pairs = 1;
  std::vector<MultiPoly> gens{mp(R, "x^2*y - z^3 + 1"), mp(R, "x*y^2 - z^2*x"), mp(R, "y^3 - x*z + y")};
  try {
    (void)groebner_basis(Ideal(R, gens), MonomialOrder::DegRevLex, opts);
    FAIL("expected SizeLimitExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeLimitExceeded);
  }
}

}

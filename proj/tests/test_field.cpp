#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_SUITE("field") {

TEST_CASE("rational arithmetic") {
  auto F = QQ();
  CHECK((fe(F, "1/2") + fe(F, "1/3")) == fe(F, "5/6"));
  CHECK(field_inv(fe(F, "2/3")) == fe(F, "3/2"));
  CHECK(fe(F, "6/4").rational() == Rational(3, 2));
  CHECK(fe(F, "-0").is_zero());
}

TEST_CASE("sqrt 5 extension") {
  auto F = QQ_sqrt5();
  auto r = FieldElement(F, F->generator());
  CHECK(r * r == FieldElement(F, 5L));
  CHECK(field_inv(r) == fe(F, "r/5"));
  CHECK(r * field_inv(r) == FieldElement(F, 1L));
  auto rho2 = fe(F, "(3+r)/2");
  CHECK(rho2.coordinates() == std::vector<Rational>{Rational(3, 2), Rational(1, 2)});
  // rho^2 * rho^-2 = 1 with rho^-2 = (3 - r)/2
  CHECK(rho2 * fe(F, "(3-r)/2") == FieldElement(F, 1L));
  CHECK(F->describe() == "QQ[r]/(r^2 - 5)");
}

TEST_CASE("rational function field") {
  auto F = QQ_t();
  auto t = FieldElement(F, F->generator());
  auto one = FieldElement(F, 1L);
  CHECK((t - one) * field_inv(t - one) == one);
  CHECK(field_inv(t * t) == fe(F, "1/t^2"));
  CHECK(fe(F, "(t^2-1)/(t-1)") == t + one);
  CHECK(fe(F, "(t^2-1)/(t-1)").to_string() == "t + 1");
  CHECK(fe(F, "0").is_zero());
  // Denominators are monic after normalization.
  auto e = fe(F, "1/(2*t + 4)");
  const auto& q = std::get<QtFrac>(e.value());
  CHECK(q.den == UPoly({Rational(2), Rational(1)}));
  CHECK(q.num == UPoly::constant(Rational(1, 2)));
}

TEST_CASE("errors") {
  auto Q = QQ();
  auto K = QQ_sqrt5();
  CHECK_THROWS_AS(FieldElement(Q, 1L) + FieldElement(K, 1L), Error);
  try {
    (void)(FieldElement(Q, 1L) * FieldElement(K, 1L));
    FAIL("expected a mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DescriptorMismatch);
  }
  try {
    (void)field_inv(FieldElement(K, 0L));
    FAIL("expected division by zero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
  // s^2 - 1 is squarefree but reducible: s - 1 is a zero divisor.
  auto bad = FieldDescriptor::algebraic("s", {Rational(-1), Rational(0), Rational(1)});
  try {
    (void)field_inv(fe(bad, "s - 1"));
    FAIL("expected reducibility to be detected");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ReducibleMinimalPolynomial);
  }
  CHECK_THROWS_AS(FieldDescriptor::algebraic("s", {Rational(0), Rational(0), Rational(1)}), Error);
  CHECK_THROWS_AS(FieldDescriptor::algebraic("s", {Rational(-5), Rational(0), Rational(2)}), Error);
  CHECK_THROWS_AS(FieldDescriptor::algebraic("s", {Rational(1), Rational(1)}), Error);
}

TEST_CASE("parse errors carry positions") {
  auto F = QQ_sqrt5();
  try {
    (void)fe(F, "(3 + r");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(e.index() == 6);
  }
  try {
    (void)fe(F, "1/0");
    FAIL("expected division by zero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
  CHECK_THROWS_AS(fe(F, "x"), Error);
}

TEST_CASE("field axioms on random elements") {
  for (const auto& F : {QQ(), QQ_sqrt5(), QQ_t()}) {
    CAPTURE(F->describe());
    Random rnd(0xf1e1d + static_cast<int>(F->kind()));
    for (int k = 0; k < 1000; ++k) {
      auto a = rnd.element(F), b = rnd.element(F), c = rnd.element(F);
      REQUIRE(a + (b + c) == (a + b) + c);
      REQUIRE(a * (b * c) == (a * b) * c);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a - a == FieldElement(F, 0L));
      REQUIRE(a + field_neg(a) == FieldElement(F, 0L));
      if (!a.is_zero()) REQUIRE(a * field_inv(a) == FieldElement(F, 1L));
      // canonical form is a fixed point of normalization
      REQUIRE(F->normalize(a.value()) == a.value());
    }
  }
}

TEST_CASE("norm identity in Q(sqrt 5)") {
  auto F = QQ_sqrt5();
  auto r = FieldElement(F, F->generator());
  Random rnd(55);
  for (int k = 0; k < 300; ++k) {
    Rational a = rnd.rational(), b = rnd.rational();
    FieldElement A(F, a), B(F, b);
    CHECK((A + B * r) * (A - B * r) == FieldElement(F, Rational(a * a - 5 * b * b)));
  }
}

TEST_CASE("powers") {
  auto F = QQ_t();
  auto t = FieldElement(F, F->generator());
  CHECK(t.pow(3) == t * t * t);
  CHECK(t.pow(-2) == fe(F, "1/t^2"));
  CHECK(t.pow(0) == FieldElement(F, 1L));
}

}

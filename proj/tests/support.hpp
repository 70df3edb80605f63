#pragma once

#include <random>
#include <string>
#include <vector>

#include "dynseq/document.hpp"
#include "dynseq/parse.hpp"

namespace testing {

using namespace dynseq;

inline FieldPtr QQ() { return FieldDescriptor::rationals(); }
inline FieldPtr QQ_sqrt5() { return FieldDescriptor::algebraic("r", {Rational(-5), Rational(0), Rational(1)}); }
inline FieldPtr QQ_t() { return FieldDescriptor::rational_functions("t"); }

inline FieldElement fe(const FieldPtr& F, const std::string& text) { return parse_constant(text, F); }

inline std::vector<FieldElement> fes(const FieldPtr& F, const std::vector<std::string>& texts) {
  std::vector<FieldElement> out;
  for (const auto& t : texts) out.push_back(fe(F, t));
  return out;
}

inline std::vector<std::string> strings(const std::vector<FieldElement>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

inline std::vector<std::string> ints(std::initializer_list<long> v) {
  std::vector<std::string> out;
  for (long x : v) out.push_back(std::to_string(x));
  return out;
}

inline RatFunc rf(const RingPtr& ring, const std::string& text) { return parse_expression(text, ring); }
inline MultiPoly mp(const RingPtr& ring, const std::string& text) { return parse_polynomial(text, ring); }

inline RingPtr ring(const FieldPtr& F, std::vector<std::string> vars, MonomialOrder o = MonomialOrder::DegRevLex) {
  return make_ring(F, VarTable(std::move(vars)), o);
}

inline DynSeq catalog(const std::string& name) { return *load_document("catalog:" + name).system; }

class Random {
 public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }

  Rational rational(long bound = 9) {
    long den = integer(1, bound);
    Rational q(integer(-bound, bound), den);
    q.canonicalize();
    return q;
  }

  UPoly upoly(long max_degree, long bound = 5) {
    std::vector<Rational> c;
    long d = integer(0, max_degree);
    for (long i = 0; i <= d; ++i) c.push_back(Rational(integer(-bound, bound)));
    return UPoly(std::move(c));
  }

  FieldElement element(const FieldPtr& F) {
    switch (F->kind()) {
      case FieldDescriptor::Kind::Rationals: return FieldElement(F, rational());
      case FieldDescriptor::Kind::AlgebraicExtension: {
        std::vector<Rational> c;
        for (std::size_t i = 0; i < F->extension_degree(); ++i) c.push_back(rational());
        return FieldElement(F, Scalar(AlgNum{UPoly(std::move(c))}));
      }
      case FieldDescriptor::Kind::RationalFunctions: {
        UPoly den;
        do den = upoly(2); while (den.is_zero());
        return FieldElement(F, F->normalize(QtFrac{upoly(3), den}));
      }
    }
    return FieldElement(F, 0L);
  }

  FieldElement nonzero(const FieldPtr& F) {
    for (;;) {
      FieldElement x = element(F);
      if (!x.is_zero()) return x;
    }
  }

  // Random polynomial with up to `terms` terms of total degree <= `degree`.
  MultiPoly poly(const RingPtr& R, int terms, int degree, long bound = 5) {
    std::vector<Term> ts;
    for (int k = 0; k < terms; ++k) {
      Monomial m(R->nvars());
      int budget = static_cast<int>(integer(0, degree));
      for (std::size_t i = 0; i < R->nvars() && budget > 0; ++i) {
        int e = static_cast<int>(integer(0, budget));
        m.set(i, static_cast<std::uint32_t>(e));
        budget -= e;
      }
      ts.push_back(Term{m, R->F().from_rational(Rational(integer(-bound, bound)))});
    }
    return MultiPoly(R, std::move(ts));
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace testing

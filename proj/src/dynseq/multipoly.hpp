#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dynseq/field.hpp"

namespace dynseq {

enum class MonomialOrder { Lex, DegRevLex };

const char* to_string(MonomialOrder order);
MonomialOrder parse_order(const std::string& name);

/// Ordered list of distinct variable symbols; the first symbol is the largest
/// variable under both monomial orders.
class VarTable {
 public:
  VarTable() = default;
  explicit VarTable(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  // -1 when absent.
  long index_of(const std::string& name) const;

  friend bool operator==(const VarTable&, const VarTable&) = default;

 private:
  std::vector<std::string> names_;
};

class Monomial {
 public:
  using Exponents = boost::container::small_vector<std::uint32_t, 10>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(Exponents exps);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  const Exponents& exponents() const { return exps_; }

  void set(std::size_t i, std::uint32_t e);

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  bool divides(const Monomial& other) const;
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  Exponents exps_;
  std::uint64_t degree_ = 0;
};

// Three-way comparison under an order: >0 when a is larger.
int compare(MonomialOrder order, const Monomial& a, const Monomial& b);

/// Variables, coefficient field and monomial order shared by a family of
/// polynomials.
class Ring {
 public:
  Ring(FieldPtr field, VarTable vars, MonomialOrder order)
      : field_(std::move(field)), vars_(std::move(vars)), order_(order) {}

  const FieldPtr& field() const { return field_; }
  const FieldDescriptor& F() const { return *field_; }
  const VarTable& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  MonomialOrder order() const { return order_; }

  int cmp(const Monomial& a, const Monomial& b) const { return compare(order_, a, b); }

  friend bool operator==(const Ring& a, const Ring& b) {
    return same_field(a.field_, b.field_) && a.vars_ == b.vars_ && a.order_ == b.order_;
  }

 private:
  FieldPtr field_;
  VarTable vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(FieldPtr field, VarTable vars, MonomialOrder order = MonomialOrder::DegRevLex);
bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial mono;
  Scalar coeff;
};

// Applies to every polynomial produced by arithmetic; default 2'000'000.
void set_term_limit(std::size_t limit);
std::size_t term_limit();

/// Sparse polynomial: terms sorted strictly descending under the ring order,
/// no zero coefficients.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}
  // Takes arbitrary terms; sorts, merges duplicates and drops zeros.
  MultiPoly(RingPtr ring, std::vector<Term> terms);

  static MultiPoly constant(RingPtr ring, const Scalar& c);
  static MultiPoly constant(RingPtr ring, const Rational& c);
  static MultiPoly variable(RingPtr ring, std::size_t index);
  // Terms must already be strictly descending with nonzero coefficients.
  static MultiPoly from_sorted(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const FieldDescriptor& F() const { return ring_->F(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  const Scalar& lead_coeff() const { return terms_.front().coeff; }
  std::uint64_t total_degree() const;
  // Highest exponent of variable `i` among the terms.
  std::uint32_t degree_in(std::size_t i) const;
  // Monomial gcd of all terms.
  Monomial monomial_content() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

  MultiPoly scaled(const Scalar& c) const;
  MultiPoly mul_term(const Monomial& m, const Scalar& c) const;
  MultiPoly div_monomial(const Monomial& m) const;
  MultiPoly monic() const;
  MultiPoly pow(unsigned e) const;

  // Same polynomial in another ring with identical field and variables.
  MultiPoly with_ring(RingPtr ring) const;

  Scalar eval_scalar(const std::vector<Scalar>& point) const;
  FieldElement eval(const std::vector<FieldElement>& point) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  std::string to_string() const;

 private:
  void check_size() const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_scale(const MultiPoly& p, const FieldElement& c);
FieldElement poly_eval(const MultiPoly& p, const std::vector<FieldElement>& point);

// Exact division: returns true and sets `quotient` when d divides p.
bool divides_exactly(const MultiPoly& d, const MultiPoly& p, MultiPoly* quotient);

// Polynomial under construction with random-access insertion. Terms are kept
// in a map ordered descending by the ring order; used by reduction loops.
class PolyAccumulator {
 public:
  explicit PolyAccumulator(RingPtr ring);
  explicit PolyAccumulator(const MultiPoly& p);

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Monomial& lead_monomial() const { return terms_.begin()->first; }
  const Scalar& lead_coeff() const { return terms_.begin()->second; }
  void pop_lead() { terms_.erase(terms_.begin()); }

  // this += c * m * p
  void add_multiple(const MultiPoly& p, const Monomial& m, const Scalar& c, bool skip_lead = false);
  void add_term(const Monomial& m, const Scalar& c);

  MultiPoly take();

 private:
  struct Cmp {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const { return compare(order, a, b) > 0; }
  };
  RingPtr ring_;
  std::map<Monomial, Scalar, Cmp> terms_;
};

}  // namespace dynseq

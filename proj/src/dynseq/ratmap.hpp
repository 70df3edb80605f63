#pragma once

#include <vector>

#include "dynseq/multipoly.hpp"

namespace dynseq {

/// Quotient num/den of two polynomials over a common ring.
///
/// The denominator is kept factored: a monomial part and a list of monic,
/// pairwise distinct non-monomial factors with multiplicities. Every operation
/// cancels the monomial content and trial-divides the numerator by the known
/// factors, which removes the denominators that disappear under iteration of
/// Laurent-type recurrences (Somos, EDS). There is no general multivariate gcd,
/// so a factor that only partially divides the numerator is kept whole.
class RatFunc {
 public:
  struct Factor {
    MultiPoly poly;
    unsigned mult;
  };

  RatFunc() = default;
  explicit RatFunc(MultiPoly num);
  // Divides by `den`; throws DivisionByZero when den == 0.
  RatFunc(MultiPoly num, const MultiPoly& den);

  static RatFunc constant(RingPtr ring, const Scalar& c) { return RatFunc(MultiPoly::constant(std::move(ring), c)); }
  static RatFunc variable(RingPtr ring, std::size_t i) { return RatFunc(MultiPoly::variable(std::move(ring), i)); }

  const RingPtr& ring() const { return num_.ring(); }
  const MultiPoly& num() const { return num_; }
  // Expanded monic denominator.
  MultiPoly den() const;
  const Monomial& monomial_den() const { return mono_den_; }
  const std::vector<Factor>& den_factors() const { return factors_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return factors_.empty() && mono_den_.is_one(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc inverse() const;
  RatFunc pow(long e) const;
  RatFunc scaled(const Scalar& c) const;

  // Mathematical equality: a.num * b.den == b.num * a.den.
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  Scalar eval_scalar(const std::vector<Scalar>& point, bool* den_zero) const;
  // Throws Indeterminacy when the denominator vanishes at the point.
  FieldElement eval(const std::vector<FieldElement>& point) const;

  RatFunc with_ring(RingPtr ring) const;
  std::string to_string() const;

 private:
  friend RatFunc poly_substitute(const MultiPoly& p, const std::vector<RatFunc>& images);
  void cancel();
  MultiPoly num_;
  Monomial mono_den_;
  std::vector<Factor> factors_;
};

/// Rational map A^dim_in -> A^dim_out given by one RatFunc per output
/// coordinate, all over a ring with dim_in variables.
class RatMap {
 public:
  RatMap() = default;
  explicit RatMap(std::vector<RatFunc> components);
  RatMap(RingPtr ring, std::vector<RatFunc> components);
  static RatMap identity(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  std::size_t dim_in() const { return ring_->nvars(); }
  std::size_t dim_out() const { return components_.size(); }
  const std::vector<RatFunc>& components() const { return components_; }
  const RatFunc& operator[](std::size_t i) const { return components_[i]; }

  std::vector<FieldElement> eval(const std::vector<FieldElement>& point) const;
  std::vector<Scalar> eval_scalar(const std::vector<Scalar>& point) const;

  RatMap with_ring(RingPtr ring) const;

 private:
  RingPtr ring_;
  std::vector<RatFunc> components_;
};

// p(images...). The images must share one ring; the result lives there.
RatFunc poly_substitute(const MultiPoly& p, const std::vector<RatFunc>& images);

RatFunc ratmap_compose(const RatFunc& outer, const RatMap& inner);
RatMap ratmap_compose(const RatMap& outer, const RatMap& inner);
MultiPoly ratfunc_numerator_cleared(const RatFunc& f);
std::vector<FieldElement> ratmap_eval(const RatMap& m, const std::vector<FieldElement>& point);

}  // namespace dynseq

#pragma once

#include <variant>
#include <vector>

#include "dynseq/ratmap.hpp"

namespace dynseq {

/// (X, phi, x0, f) on affine space X = A^dim. `relations` are extra
/// polynomials vanishing on the whole orbit (e.g. z*t - 1 standing for t = 1/z).
struct GeometricData {
  RingPtr ring;
  RatMap map;
  std::vector<FieldElement> point;
  RatFunc observable;
  std::vector<MultiPoly> relations;

  const FieldPtr& field() const { return ring->field(); }
  std::size_t dim() const { return ring->nvars(); }
};

// Checks the invariants (shared ring, sizes, point on the relations).
GeometricData make_geometric_data(RingPtr ring, std::vector<RatFunc> map, std::vector<FieldElement> point,
                                  RatFunc observable, std::vector<MultiPoly> relations = {});

/// a(n) = prefix[n] for n < N, h(chi^(n-N)(z0)) afterwards.
class DynSeq {
 public:
  DynSeq(std::vector<FieldElement> prefix, GeometricData geo);

  const std::vector<FieldElement>& prefix() const { return prefix_; }
  const GeometricData& geo() const { return geo_; }
  const FieldPtr& field() const { return geo_.field(); }

 private:
  std::vector<FieldElement> prefix_;
  GeometricData geo_;
};

/// Walks an orbit on raw scalars. Indeterminacy errors carry
/// `first_index + steps()` of the term that could not be produced.
class OrbitWalker {
 public:
  OrbitWalker(const GeometricData& geo, std::int64_t first_index = 0);

  std::size_t steps() const { return steps_; }
  const std::vector<Scalar>& point() const { return point_; }
  std::vector<FieldElement> point_elements() const;
  Scalar observe() const;
  void advance();

 private:
  const GeometricData* geo_;
  std::int64_t first_;
  std::size_t steps_ = 0;
  std::vector<Scalar> point_;
};

// Terms a(0..n_max). Throws Indeterminacy with the first failing index.
std::vector<FieldElement> seq_eval(const DynSeq& s, std::size_t n_max);
// Same geometry with the base point moved `steps` times.
GeometricData geo_advance(const GeometricData& geo, std::size_t steps);

DynSeq seq_sum(const DynSeq& a, const DynSeq& b);
DynSeq seq_product(const DynSeq& a, const DynSeq& b);
DynSeq seq_partial_sums(const DynSeq& a);
DynSeq seq_partial_products(const DynSeq& a);
DynSeq seq_shift(const DynSeq& a, std::size_t i);
// b(n) = new_prefix[n] for n < |new_prefix|, a(n - j) afterwards.
DynSeq seq_with_prefix(const DynSeq& a, std::vector<FieldElement> new_prefix, std::size_t j);
// b(n) = a(d*n + i).
DynSeq seq_arith_progression(const DynSeq& a, std::size_t d, std::size_t i);
// b(n) = a(floor(n / d)).
DynSeq seq_floor(const DynSeq& a, std::size_t d);
// b(n) = a_{n mod s}(floor(n / s)).
DynSeq seq_interlace(const std::vector<DynSeq>& seqs);
DynSeq seq_scale(const DynSeq& a, const FieldElement& c);

/// Disjoint product of two varieties: variables of `b` are renamed where they
/// clash with those of `a`.
struct ProductEmbedding {
  RingPtr ring;
  RatMap left;   // A -> Z coordinates, as a map from ring(a) variables
  RatMap right;  // B -> Z coordinates
};
ProductEmbedding product_embedding(const RingPtr& a, const RingPtr& b);
/// Same for any number of factors; parts[i] maps the variables of rings[i].
struct ProductLayout {
  RingPtr ring;
  std::vector<RatMap> parts;
};
ProductLayout product_layout(const std::vector<RingPtr>& rings);
RatFunc embed(const RatFunc& f, const RatMap& into);
MultiPoly embed(const MultiPoly& p, const RatMap& into);

// ---------------------------------------------------------------- builders

DynSeq seq_constant(const FieldPtr& field, const FieldElement& c);
// f(n) = sum_i coeffs[i-1] * f(n-i), f(0..d-1) = init.
DynSeq seq_from_linear_recurrence(const std::vector<FieldElement>& coeffs, const std::vector<FieldElement>& init);
// f(n+d) = R(c_1(n), ..., c_s(n), f(n+d-1), ..., f(n)); R lives in a ring
// with s + d variables in that order. f(0..d-1) = init.
DynSeq seq_from_recurrence_with_coeffs(const RatFunc& R, const std::vector<DynSeq>& coeff_seqs,
                                       const std::vector<FieldElement>& init);
// a(n) a(n-k) = sum_{i=1}^{floor(k/2)} a(n-i) a(n-k+i), a(0..k-1) = init.
DynSeq seq_somos(std::size_t k, const std::vector<FieldElement>& init);
// Elliptic divisibility sequence W_0 = 0, W_1..W_4 given.
DynSeq seq_eds(const FieldElement& w1, const FieldElement& w2, const FieldElement& w3, const FieldElement& w4);
// lambda^(d^n).
DynSeq seq_lambda_power_tower(const FieldElement& lambda, unsigned d);
// lambda^(P(n)) for an integer-valued P in Q[x].
DynSeq seq_lambda_poly_exponent(const FieldElement& lambda, const UPoly& P);
// c_i = (Delta^i P)(0); throws NonIntegerValuedPolynomial.
std::vector<Integer> binomial_coefficients(const UPoly& P);

struct ExpPolyEntry {
  FieldElement lambda;
  unsigned j;
  FieldElement c;
};
/// f(n) = sum c * C(n, j) * lambda^n.
struct ExpPolyData {
  std::vector<ExpPolyEntry> entries;
  unsigned M() const;
};
struct PowerOfD {
  unsigned d;
};
struct PolynomialIndex {
  UPoly P;
};
using SubsequenceMode = std::variant<PowerOfD, PolynomialIndex>;
// f(d^n) or f(P(n)).
DynSeq seq_exp_poly_subsequence(const FieldPtr& field, const ExpPolyData& data, const SubsequenceMode& mode);

}  // namespace dynseq

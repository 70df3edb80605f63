#pragma once

#include <vector>

#include "dynseq/multipoly.hpp"

namespace dynseq {

/// Finitely generated ideal; zero generators are dropped on construction.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<MultiPoly> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }

 private:
  RingPtr ring_;
  std::vector<MultiPoly> gens_;
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

struct GroebnerOptions {
  // Aborts with SizeLimitExceeded once this many S-pairs have been reduced.
  std::size_t max_pairs = 1'000'000;
};

/// Reduced Groebner basis: monic elements with pairwise distinct leading
/// monomials, no term of any element divisible by another leading monomial.
/// Elements are stored in ascending order of leading monomial, which makes
/// the representation unique for a given ideal and order.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, std::vector<MultiPoly> reduced_basis, GroebnerStats stats = {});

  const RingPtr& ring() const { return ring_; }
  MonomialOrder order() const { return ring_->order(); }
  const std::vector<MultiPoly>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  bool is_unit() const { return basis_.size() == 1 && basis_[0].is_constant(); }
  const GroebnerStats& stats() const { return stats_; }

 private:
  RingPtr ring_;
  std::vector<MultiPoly> basis_;
  GroebnerStats stats_;
};

struct NormalFormResult {
  MultiPoly remainder;
  bool is_member = false;
};

// Polynomials are moved into a ring with the requested order before the
// computation; the basis lives in that ring.
GroebnerBasis groebner_basis(const Ideal& ideal, MonomialOrder order, const GroebnerOptions& opts = {});
// Basis of <G, extra>. Pairs inside G are not revisited.
GroebnerBasis groebner_extend(const GroebnerBasis& G, const std::vector<MultiPoly>& extra, const GroebnerOptions& opts = {});

NormalFormResult normal_form(const MultiPoly& p, const GroebnerBasis& G);
// Throws OrderMismatch when the bases use different orders or rings.
bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b);

// Leading-term cancellation of two monic polynomials.
MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

}  // namespace dynseq

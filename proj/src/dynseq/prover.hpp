#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dynseq/dynseq.hpp"
#include "dynseq/groebner.hpp"

namespace dynseq {

/// Z = X x Y with chi = phi x psi and h = f - g, plus the prefix terms that
/// are compared directly.
struct DifferenceSystem {
  GeometricData geo;
  RatFunc lhs;  // f lifted to Z
  RatFunc rhs;  // g lifted to Z
  std::size_t prefix_length = 0;
  std::vector<FieldElement> lhs_prefix, rhs_prefix;
};

DifferenceSystem build_difference_system(const DynSeq& a, const DynSeq& b);

struct ProveOptions {
  MonomialOrder order = MonomialOrder::DegRevLex;
  std::size_t max_steps = 64;
  std::size_t extra_check_terms = 20;
  // Detect stabilization by comparing reduced bases of consecutive ideals
  // instead of a membership test.
  bool compare_bases = false;
  GroebnerOptions groebner;
};

enum class Verdict { ProvedEqual, Refuted, Aborted };
enum class AbortReason { None, ChainCap, SizeLimit, Indeterminacy, RelationViolated };

struct Witness {
  std::int64_t index;
  FieldElement lhs, rhs;
};

/// One step of the ideal chain: r_j, whether it already lay in the previous
/// ideal, and the size of the reduced basis after step j.
struct ChainStep {
  std::size_t j;
  bool member;
  std::size_t basis_size;
  std::size_t numerator_terms;
};

struct ProofCertificate {
  Verdict verdict = Verdict::Aborted;
  // Stabilization index; -1 when r_0 already lies in the relation ideal.
  std::optional<long> n0;
  std::vector<std::size_t> chain_basis_sizes;
  std::size_t checked_terms = 0;  // indices 0 .. checked_terms - 1 compared exactly
  std::optional<Witness> witness;
  AbortReason reason = AbortReason::None;
  std::string reason_detail;
  std::optional<std::int64_t> abort_index;
  std::vector<std::size_t> prefix_indices_checked;
  std::vector<ChainStep> chain;
  ProveOptions options;
  double elapsed_seconds = 0;
};

// Runs `steps` steps of the chain (or stops at the first member when
// `stop_at_member`). Throws SizeLimitExceeded.
std::vector<ChainStep> ideal_chain(const DifferenceSystem& sys, const ProveOptions& opts, std::size_t steps,
                                   bool stop_at_member, GroebnerBasis* last = nullptr);

ProofCertificate prove_zero(const DifferenceSystem& sys, const ProveOptions& opts = {});
ProofCertificate prove_equal(const DynSeq& a, const DynSeq& b, const ProveOptions& opts = {});

enum class RenderFormat { Human, Json };
// Deterministic: the elapsed time is not part of the output.
std::string certificate_render(const ProofCertificate& c, RenderFormat format);
std::string chain_render(const std::vector<ChainStep>& chain, RenderFormat format);

const char* to_string(Verdict v);
const char* to_string(AbortReason r);

}  // namespace dynseq

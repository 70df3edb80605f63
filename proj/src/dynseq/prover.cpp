#include "dynseq/prover.hpp"

#include <json.hpp>

#include <chrono>
#include <sstream>

namespace dynseq {

DifferenceSystem build_difference_system(const DynSeq& a, const DynSeq& b) {
  if (!same_field(a.field(), b.field())) throw Error(ErrorKind::DescriptorMismatch, "sequences over different fields");
  DifferenceSystem sys;
  const std::size_t na = a.prefix().size(), nb = b.prefix().size();
  const std::size_t n = std::max(na, nb);
  sys.prefix_length = n;
  if (n > 0) {
    sys.lhs_prefix = seq_eval(a, n - 1);
    sys.rhs_prefix = seq_eval(b, n - 1);
  }
  GeometricData ga = geo_advance(a.geo(), n - na), gb = geo_advance(b.geo(), n - nb);
  ProductEmbedding e = product_embedding(ga.ring, gb.ring);
  std::vector<RatFunc> map;
  for (const auto& c : ga.map.components()) map.push_back(embed(c, e.left));
  for (const auto& c : gb.map.components()) map.push_back(embed(c, e.right));
  std::vector<FieldElement> point = ga.point;
  point.insert(point.end(), gb.point.begin(), gb.point.end());
  std::vector<MultiPoly> rels;
  for (const auto& r : ga.relations) rels.push_back(embed(r, e.left));
  for (const auto& r : gb.relations) rels.push_back(embed(r, e.right));
  sys.lhs = embed(ga.observable, e.left);
  sys.rhs = embed(gb.observable, e.right);
  sys.geo = make_geometric_data(e.ring, std::move(map), std::move(point), sys.lhs - sys.rhs, std::move(rels));
  return sys;
}

std::vector<ChainStep> ideal_chain(const DifferenceSystem& sys, const ProveOptions& opts, std::size_t steps,
                                   bool stop_at_member, GroebnerBasis* last) {
  const auto& geo = sys.geo;
  std::vector<MultiPoly> gens = geo.relations;
  GroebnerBasis G = groebner_basis(Ideal(geo.ring, gens), opts.order, opts.groebner);
  RatMap v = RatMap::identity(geo.ring);
  std::vector<ChainStep> out;
  for (std::size_t j = 0; j < steps; ++j) {
    if (j > 0) v = ratmap_compose(geo.map, v);
    MultiPoly r = ratfunc_numerator_cleared(ratmap_compose(geo.observable, v));
    bool member;
    if (opts.compare_bases) {
      gens.push_back(r);
      GroebnerBasis next = groebner_basis(Ideal(geo.ring, gens), opts.order, opts.groebner);
      member = ideal_equal(G, next);
      G = std::move(next);
    } else {
      member = normal_form(r, G).is_member;
      if (!member) G = groebner_extend(G, {r}, opts.groebner);
    }
    out.push_back(ChainStep{j, member, G.size(), r.size()});
    if (member && stop_at_member) break;
  }
  if (last) *last = G;
  return out;
}

namespace {

ProofCertificate aborted(ProofCertificate c, AbortReason r, std::string detail, std::optional<std::int64_t> idx = {}) {
  c.verdict = Verdict::Aborted;
  c.reason = r;
  c.reason_detail = std::move(detail);
  c.abort_index = idx;
  return c;
}

}  // namespace

ProofCertificate prove_zero(const DifferenceSystem& sys, const ProveOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  ProofCertificate c;
  c.options = opts;
  auto finish = [&](ProofCertificate cert) {
    cert.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return cert;
  };

  for (std::size_t k = 0; k < sys.prefix_length; ++k) {
    c.prefix_indices_checked.push_back(k);
    if (!(sys.lhs_prefix[k] == sys.rhs_prefix[k])) {
      c.verdict = Verdict::Refuted;
      c.witness = Witness{static_cast<std::int64_t>(k), sys.lhs_prefix[k], sys.rhs_prefix[k]};
      c.checked_terms = k + 1;
      return finish(c);
    }
  }

  try {
    c.chain = ideal_chain(sys, opts, opts.max_steps + 1, true);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SizeLimitExceeded) throw;
    return finish(aborted(c, AbortReason::SizeLimit, e.what()));
  }
  for (const auto& s : c.chain)
    if (!s.member) c.chain_basis_sizes.push_back(s.basis_size);
  if (c.chain.empty() || !c.chain.back().member)
    return finish(aborted(c, AbortReason::ChainCap,
                          "ideal chain did not stabilize within " + std::to_string(opts.max_steps) + " steps"));
  const long n0 = static_cast<long>(c.chain.back().j) - 1;
  c.n0 = n0;

  // Exact check of c(n) along the orbit, relations included.
  const auto& geo = sys.geo;
  const std::int64_t base = static_cast<std::int64_t>(sys.prefix_length);
  const std::size_t last = static_cast<std::size_t>(n0 + 1) + opts.extra_check_terms;
  OrbitWalker w(geo, base);
  try {
    for (std::size_t n = 0; n < last; ++n) {
      if (n > 0) w.advance();
      const std::int64_t idx = base + static_cast<std::int64_t>(n);
      auto pt = w.point_elements();
      for (const auto& r : geo.relations)
        if (!r.eval(pt).is_zero())
          return finish(aborted(c, AbortReason::RelationViolated,
                                "relation " + r.to_string() + " fails on the orbit at term " + std::to_string(idx), idx));
      FieldElement lhs, rhs;
      try {
        lhs = sys.lhs.eval(pt);
        rhs = sys.rhs.eval(pt);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Indeterminacy) throw;
        throw Error(ErrorKind::Indeterminacy, "observable is undefined at term " + std::to_string(idx), idx);
      }
      if (!(lhs == rhs)) {
        c.verdict = Verdict::Refuted;
        c.witness = Witness{idx, lhs, rhs};
        c.checked_terms = static_cast<std::size_t>(idx) + 1;
        return finish(c);
      }
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Indeterminacy) throw;
    return finish(aborted(c, AbortReason::Indeterminacy, e.what(), e.index()));
  }
  c.verdict = Verdict::ProvedEqual;
  c.checked_terms = sys.prefix_length + last;
  return finish(c);
}

ProofCertificate prove_equal(const DynSeq& a, const DynSeq& b, const ProveOptions& opts) {
  DifferenceSystem sys;
  try {
    sys = build_difference_system(a, b);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Indeterminacy) throw;
    ProofCertificate c;
    c.options = opts;
    return aborted(c, AbortReason::Indeterminacy, e.what(), e.index());
  }
  return prove_zero(sys, opts);
}

// ---------------------------------------------------------------- output

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::ProvedEqual: return "proved";
    case Verdict::Refuted: return "refuted";
    case Verdict::Aborted: return "aborted";
  }
  return "?";
}

const char* to_string(AbortReason r) {
  switch (r) {
    case AbortReason::None: return "none";
    case AbortReason::ChainCap: return "chain-cap";
    case AbortReason::SizeLimit: return "size-limit";
    case AbortReason::Indeterminacy: return "indeterminacy";
    case AbortReason::RelationViolated: return "relation-violated";
  }
  return "?";
}

namespace {

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s.empty() ? "none" : s;
}

}  // namespace

std::string certificate_render(const ProofCertificate& c, RenderFormat format) {
  if (format == RenderFormat::Json) {
    nlohmann::ordered_json j;
    j["verdict"] = to_string(c.verdict);
    j["n0"] = c.n0 ? nlohmann::ordered_json(*c.n0) : nlohmann::ordered_json(nullptr);
    j["chain_basis_sizes"] = c.chain_basis_sizes;
    j["checked_terms"] = c.checked_terms;
    if (c.witness)
      j["witness"] = {{"index", c.witness->index}, {"lhs", c.witness->lhs.to_string()}, {"rhs", c.witness->rhs.to_string()}};
    else
      j["witness"] = nullptr;
    j["order"] = to_string(c.options.order);
    j["options"] = {{"max_steps", c.options.max_steps},
                    {"extra_check_terms", c.options.extra_check_terms},
                    {"compare_bases", c.options.compare_bases}};
    j["prefix_indices_checked"] = c.prefix_indices_checked;
    if (c.verdict == Verdict::Aborted) {
      j["reason"] = to_string(c.reason);
      j["detail"] = c.reason_detail;
      if (c.abort_index) j["index"] = *c.abort_index;
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  switch (c.verdict) {
    case Verdict::ProvedEqual:
      os << "equal for all n (stabilized at step " << *c.n0 << "; verified n ≤ " << c.checked_terms - 1 << ")\n";
      break;
    case Verdict::Refuted:
      os << "not equal: at n = " << c.witness->index << " lhs = " << c.witness->lhs.to_string()
         << " but rhs = " << c.witness->rhs.to_string() << "\n";
      break;
    case Verdict::Aborted:
      os << "aborted (" << to_string(c.reason) << "): " << c.reason_detail << "\n";
      break;
  }
  os << "order: " << to_string(c.options.order) << "\n";
  os << "chain basis sizes: " << join(c.chain_basis_sizes) << "\n";
  os << "prefix indices checked: " << join(c.prefix_indices_checked) << "\n";
  return os.str();
}

std::string chain_render(const std::vector<ChainStep>& chain, RenderFormat format) {
  if (format == RenderFormat::Json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& s : chain)
      j.push_back({{"step", s.j}, {"member", s.member}, {"basis_size", s.basis_size}, {"numerator_terms", s.numerator_terms}});
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& s : chain)
    os << "step " << s.j << ": " << (s.member ? "member" : "new") << ", basis size " << s.basis_size
       << ", numerator terms " << s.numerator_terms << "\n";
  return os.str();
}

}  // namespace dynseq

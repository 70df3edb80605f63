#include "dynseq/groebner.hpp"

#include <algorithm>

namespace dynseq {

Ideal::Ideal(RingPtr ring, std::vector<MultiPoly> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_) &&
        !(same_field(g.ring()->field(), ring_->field()) && g.ring()->vars() == ring_->vars()))
      throw Error(ErrorKind::VarTableMismatch, "ideal generator lives in a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<MultiPoly> reduced_basis, GroebnerStats stats)
    : ring_(std::move(ring)), basis_(std::move(reduced_basis)), stats_(stats) {}

namespace {

// Bit i is set when variable (i mod 64) occurs; a necessary condition for
// divisibility is mask(a) & ~mask(b) == 0.
std::uint64_t divmask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) mask |= std::uint64_t{1} << (i % 64);
  return mask;
}

struct Element {
  MultiPoly poly;
  std::uint64_t mask;
  bool active = true;
};

class Reducer {
 public:
  explicit Reducer(const std::vector<Element>& elems) : elems_(elems) {}

  // Index of an active element whose leading monomial divides m, preferring
  // the shortest one; -1 if none.
  long find(const Monomial& m) const {
    const std::uint64_t mm = divmask(m);
    long best = -1;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      const auto& e = elems_[i];
      if (!e.active || (e.mask & ~mm) != 0) continue;
      if (!e.poly.lead_monomial().divides(m)) continue;
      if (best < 0 || e.poly.size() < elems_[static_cast<std::size_t>(best)].poly.size()) best = static_cast<long>(i);
    }
    return best;
  }

  // Full reduction. Reducers are monic.
  MultiPoly reduce(const MultiPoly& p, bool tail = true) const {
    const auto& ring = p.ring();
    const auto& F = ring->F();
    PolyAccumulator acc(p);
    std::vector<Term> rem;
    while (!acc.empty()) {
      long r = find(acc.lead_monomial());
      if (r < 0) {
        if (!tail) {
          for (auto& t : rem) acc.add_term(t.mono, t.coeff);
          return acc.take();
        }
        rem.push_back(Term{acc.lead_monomial(), acc.lead_coeff()});
        acc.pop_lead();
        continue;
      }
      const auto& g = elems_[static_cast<std::size_t>(r)].poly;
      Monomial m = acc.lead_monomial() / g.lead_monomial();
      Scalar c = F.neg(acc.lead_coeff());
      acc.pop_lead();
      acc.add_multiple(g, m, c, true);
    }
    return MultiPoly::from_sorted(ring, std::move(rem));
  }

 private:
  const std::vector<Element>& elems_;
};

struct Pair {
  std::size_t i, j;  // i < j
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(RingPtr ring, const GroebnerOptions& opts) : ring_(std::move(ring)), opts_(opts) {}

  // Seeds with a basis that is already Groebner (no pairs among its elements).
  void seed_basis(const std::vector<MultiPoly>& gb) {
    for (const auto& g : gb) elems_.push_back(Element{g, divmask(g.lead_monomial()), true});
  }

  void add(const MultiPoly& p) {
    MultiPoly h = Reducer(elems_).reduce(p);
    if (h.is_zero()) return;
    insert(h.monic());
  }

  void run() {
    while (!pairs_.empty()) {
      // Normal strategy: smallest lcm, ties broken by generator indices.
      auto best = pairs_.begin();
      for (auto it = pairs_.begin(); it != pairs_.end(); ++it) {
        int c = ring_->cmp(it->lcm, best->lcm);
        if (c < 0 || (c == 0 && std::tie(it->i, it->j) < std::tie(best->i, best->j))) best = it;
      }
      Pair pr = *best;
      pairs_.erase(best);
      if (++stats_.pairs_reduced > opts_.max_pairs)
        throw Error(ErrorKind::SizeLimitExceeded, "Groebner computation exceeded the pair budget of " +
                                                      std::to_string(opts_.max_pairs));
      MultiPoly s = s_polynomial(elems_[pr.i].poly, elems_[pr.j].poly);
      MultiPoly h = Reducer(elems_).reduce(s);
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      insert(h.monic());
    }
  }

  // Interreduced, sorted ascending by leading monomial.
  GroebnerBasis result() {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (elems_[i].active) keep.push_back(i);
    std::vector<MultiPoly> out;
    for (std::size_t k : keep) {
      elems_[k].active = false;
      MultiPoly r = Reducer(elems_).reduce(elems_[k].poly);
      elems_[k].active = true;
      out.push_back(r.monic());
    }
    const auto order = ring_->order();
    std::sort(out.begin(), out.end(), [order](const MultiPoly& a, const MultiPoly& b) {
      return compare(order, a.lead_monomial(), b.lead_monomial()) < 0;
    });
    return GroebnerBasis(ring_, std::move(out), stats_);
  }

 private:
  // Gebauer-Moeller update with the new element h.
  void insert(MultiPoly h) {
    const std::size_t hi = elems_.size();
    const Monomial hl = h.lead_monomial();
    elems_.push_back(Element{std::move(h), divmask(hl), true});

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool dropped = false;
    };
    std::vector<Cand> cands;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!elems_[g].active) continue;
      const Monomial& gl = elems_[g].poly.lead_monomial();
      cands.push_back(Cand{g, lcm(hl, gl), hl.coprime(gl)});
      ++stats_.pairs_considered;
    }
    // Chain criterion among the new pairs: drop (h,g1) if some other (h,g2)
    // has an lcm strictly dividing it, or an equal lcm with a smaller index.
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].coprime) continue;
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b || cands[b].dropped) continue;
        if (!cands[b].lcm.divides(cands[a].lcm)) continue;
        if (!(cands[b].lcm == cands[a].lcm) || cands[b].coprime || b < a) {
          cands[a].dropped = true;
          break;
        }
      }
    }
    // Old pairs: drop (g1,g2) when LM(h) | lcm(g1,g2) and both lcm(g1,h) and
    // lcm(g2,h) differ from it.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!hl.divides(p.lcm)) return false;
      const Monomial l1 = lcm(elems_[p.i].poly.lead_monomial(), hl);
      const Monomial l2 = lcm(elems_[p.j].poly.lead_monomial(), hl);
      return !(l1 == p.lcm) && !(l2 == p.lcm);
    });
    for (const auto& c : cands) {
      if (c.dropped || c.coprime) continue;  // coprime: first criterion
      pairs_.push_back(Pair{c.g, hi, c.lcm});
    }
    for (std::size_t g = 0; g < hi; ++g)
      if (elems_[g].active && hl.divides(elems_[g].poly.lead_monomial())) elems_[g].active = false;
  }

  RingPtr ring_;
  GroebnerOptions opts_;
  std::vector<Element> elems_;
  std::vector<Pair> pairs_;
  GroebnerStats stats_;
};

RingPtr ring_with_order(const RingPtr& ring, MonomialOrder order) {
  if (ring->order() == order) return ring;
  return make_ring(ring->field(), ring->vars(), order);
}

}  // namespace

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  const auto& F = f.F();
  const Monomial l = lcm(f.lead_monomial(), g.lead_monomial());
  PolyAccumulator acc(f.ring());
  acc.add_multiple(f, l / f.lead_monomial(), F.inv(f.lead_coeff()), true);
  acc.add_multiple(g, l / g.lead_monomial(), F.neg(F.inv(g.lead_coeff())), true);
  return acc.take();
}

GroebnerBasis groebner_basis(const Ideal& ideal, MonomialOrder order, const GroebnerOptions& opts) {
  if (ideal.ring()->nvars() == 0) throw Error(ErrorKind::InvalidArgument, "Groebner basis over a ring without variables");
  RingPtr ring = ring_with_order(ideal.ring(), order);
  Buchberger bb(ring, opts);
  for (const auto& g : ideal.generators()) {
    bb.add(g.with_ring(ring));
    bb.run();
  }
  return bb.result();
}

GroebnerBasis groebner_extend(const GroebnerBasis& G, const std::vector<MultiPoly>& extra, const GroebnerOptions& opts) {
  Buchberger bb(G.ring(), opts);
  bb.seed_basis(G.basis());
  for (const auto& p : extra) {
    bb.add(p.with_ring(G.ring()));
    bb.run();
  }
  return bb.result();
}

NormalFormResult normal_form(const MultiPoly& p, const GroebnerBasis& G) {
  if (!same_field(p.ring()->field(), G.ring()->field()) || !(p.ring()->vars() == G.ring()->vars()))
    throw Error(ErrorKind::VarTableMismatch, "normal form across different rings");
  std::vector<Element> elems;
  for (const auto& g : G.basis()) elems.push_back(Element{g, divmask(g.lead_monomial()), true});
  MultiPoly r = Reducer(elems).reduce(p.with_ring(G.ring()));
  bool member = r.is_zero();
  return NormalFormResult{std::move(r), member};
}

bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (!same_ring(a.ring(), b.ring()))
    throw Error(ErrorKind::OrderMismatch, "bases were computed for different orders or rings");
  // Reduced bases are sorted by leading monomial, so set equality is
  // element-wise equality.
  return a.basis() == b.basis();
}

}  // namespace dynseq

#include "dynseq/dynseq.hpp"

#include <optional>
#include <set>

namespace dynseq {

namespace {

void check_field(const FieldPtr& f, const FieldElement& x, const char* what) {
  if (!same_field(f, x.field())) throw Error(ErrorKind::DescriptorMismatch, std::string(what) + " is over a different field");
}

std::vector<Scalar> raw(const std::vector<FieldElement>& xs) {
  std::vector<Scalar> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.value());
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& used) {
  if (!used.count(base)) return base;
  for (int k = 2;; ++k) {
    std::string cand = base + "_" + std::to_string(k);
    if (!used.count(cand)) return cand;
  }
}

}  // namespace

GeometricData make_geometric_data(RingPtr ring, std::vector<RatFunc> map, std::vector<FieldElement> point,
                                  RatFunc observable, std::vector<MultiPoly> relations) {
  const std::size_t n = ring->nvars();
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "a system needs at least one variable");
  if (map.size() != n)
    throw Error(ErrorKind::DimensionMismatch,
                "map has " + std::to_string(map.size()) + " components for " + std::to_string(n) + " variables");
  if (point.size() != n)
    throw Error(ErrorKind::DimensionMismatch,
                "point has " + std::to_string(point.size()) + " coordinates for " + std::to_string(n) + " variables");
  for (const auto& c : map)
    if (!same_ring(c.ring(), ring)) throw Error(ErrorKind::VarTableMismatch, "map component over a different ring");
  if (!same_ring(observable.ring(), ring)) throw Error(ErrorKind::VarTableMismatch, "observable over a different ring");
  for (const auto& x : point) check_field(ring->field(), x, "base point");
  for (const auto& r : relations) {
    if (!same_ring(r.ring(), ring)) throw Error(ErrorKind::VarTableMismatch, "relation over a different ring");
    if (!r.eval(point).is_zero())
      throw Error(ErrorKind::InvalidArgument, "base point does not satisfy relation " + r.to_string());
  }
  return GeometricData{ring, RatMap(ring, std::move(map)), std::move(point), std::move(observable), std::move(relations)};
}

DynSeq::DynSeq(std::vector<FieldElement> prefix, GeometricData geo) : prefix_(std::move(prefix)), geo_(std::move(geo)) {
  for (const auto& x : prefix_) check_field(geo_.field(), x, "prefix entry");
}

// ------------------------------------------------------------------ orbits

OrbitWalker::OrbitWalker(const GeometricData& geo, std::int64_t first_index)
    : geo_(&geo), first_(first_index), point_(raw(geo.point)) {}

std::vector<FieldElement> OrbitWalker::point_elements() const {
  std::vector<FieldElement> out;
  for (const auto& s : point_) out.emplace_back(geo_->field(), s);
  return out;
}

Scalar OrbitWalker::observe() const {
  bool zero = false;
  Scalar v = geo_->observable.eval_scalar(point_, &zero);
  if (zero)
    throw Error(ErrorKind::Indeterminacy,
                "observable is undefined at term " + std::to_string(first_ + static_cast<std::int64_t>(steps_)),
                first_ + static_cast<std::int64_t>(steps_));
  return v;
}

void OrbitWalker::advance() {
  const std::int64_t next = first_ + static_cast<std::int64_t>(steps_) + 1;
  try {
    point_ = geo_->map.eval_scalar(point_);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Indeterminacy) throw;
    throw Error(ErrorKind::Indeterminacy, "orbit hits the indeterminacy locus before term " + std::to_string(next) + " (" +
                                              e.what() + ")",
                next);
  }
  ++steps_;
}

std::vector<FieldElement> seq_eval(const DynSeq& s, std::size_t n_max) {
  std::vector<FieldElement> out;
  out.reserve(n_max + 1);
  const auto& pre = s.prefix();
  for (std::size_t n = 0; n < pre.size() && n <= n_max; ++n) out.push_back(pre[n]);
  if (out.size() == n_max + 1) return out;
  OrbitWalker w(s.geo(), static_cast<std::int64_t>(pre.size()));
  for (std::size_t n = pre.size();; ++n) {
    out.emplace_back(s.field(), w.observe());
    if (n == n_max) break;
    w.advance();
  }
  return out;
}

GeometricData geo_advance(const GeometricData& geo, std::size_t steps) {
  if (steps == 0) return geo;
  OrbitWalker w(geo);
  for (std::size_t k = 0; k < steps; ++k) w.advance();
  GeometricData out = geo;
  out.point = w.point_elements();
  return out;
}

// ------------------------------------------------------------ embeddings

ProductLayout product_layout(const std::vector<RingPtr>& rings) {
  if (rings.empty()) throw Error(ErrorKind::InvalidArgument, "empty product");
  std::vector<std::string> names;
  std::set<std::string> used;
  for (const auto& r : rings) {
    if (!same_field(r->field(), rings[0]->field()))
      throw Error(ErrorKind::DescriptorMismatch, "sequences over different fields");
    for (const auto& nm : r->vars().names()) {
      std::string fresh = fresh_name(nm, used);
      used.insert(fresh);
      names.push_back(fresh);
    }
  }
  RingPtr z = make_ring(rings[0]->field(), VarTable(std::move(names)), rings[0]->order());
  ProductLayout out{z, {}};
  std::size_t offset = 0;
  for (const auto& r : rings) {
    std::vector<RatFunc> into;
    for (std::size_t i = 0; i < r->nvars(); ++i) into.push_back(RatFunc::variable(z, offset + i));
    offset += r->nvars();
    out.parts.emplace_back(z, std::move(into));
  }
  return out;
}

ProductEmbedding product_embedding(const RingPtr& a, const RingPtr& b) {
  ProductLayout l = product_layout({a, b});
  return ProductEmbedding{l.ring, l.parts[0], l.parts[1]};
}

RatFunc embed(const RatFunc& f, const RatMap& into) { return ratmap_compose(f, into); }

MultiPoly embed(const MultiPoly& p, const RatMap& into) { return poly_substitute(p, into.components()).num(); }

namespace {

struct Product {
  RingPtr ring;
  std::vector<RatFunc> map;
  std::vector<FieldElement> point;
  std::vector<MultiPoly> relations;
  RatFunc f, g;  // embedded observables
};

Product make_product(const GeometricData& a, const GeometricData& b) {
  ProductEmbedding e = product_embedding(a.ring, b.ring);
  Product p;
  p.ring = e.ring;
  for (const auto& c : a.map.components()) p.map.push_back(embed(c, e.left));
  for (const auto& c : b.map.components()) p.map.push_back(embed(c, e.right));
  p.point = a.point;
  p.point.insert(p.point.end(), b.point.begin(), b.point.end());
  for (const auto& r : a.relations) p.relations.push_back(embed(r, e.left));
  for (const auto& r : b.relations) p.relations.push_back(embed(r, e.right));
  p.f = embed(a.observable, e.left);
  p.g = embed(b.observable, e.right);
  return p;
}

template <typename Op>
DynSeq combine(const DynSeq& a, const DynSeq& b, Op op) {
  if (!same_field(a.field(), b.field())) throw Error(ErrorKind::DescriptorMismatch, "sequences over different fields");
  const std::size_t na = a.prefix().size(), nb = b.prefix().size();
  const std::size_t n = std::max(na, nb);
  std::vector<FieldElement> prefix;
  if (n > 0) {
    auto va = seq_eval(a, n - 1), vb = seq_eval(b, n - 1);
    for (std::size_t k = 0; k < n; ++k) prefix.push_back(op(va[k], vb[k]));
  }
  Product p = make_product(geo_advance(a.geo(), n - na), geo_advance(b.geo(), n - nb));
  RatFunc obs = op(p.f, p.g);
  return DynSeq(std::move(prefix), make_geometric_data(p.ring, std::move(p.map), std::move(p.point), std::move(obs),
                                                       std::move(p.relations)));
}

// System X x A^1 with chi(x, p) = (phi(x), step(p, f(x))) and h = step(p, f(x)).
template <typename Op>
DynSeq accumulate(const DynSeq& a, const FieldElement& start, Op step) {
  const auto& geo = a.geo();
  const auto& F = a.field();
  std::vector<FieldElement> prefix;
  FieldElement acc = start;
  for (const auto& x : a.prefix()) {
    acc = step(acc, x);
    prefix.push_back(acc);
  }
  std::vector<std::string> names = geo.ring->vars().names();
  std::set<std::string> used(names.begin(), names.end());
  names.push_back(fresh_name("p", used));
  RingPtr z = make_ring(F, VarTable(std::move(names)), geo.ring->order());
  std::vector<RatFunc> into;
  for (std::size_t i = 0; i < geo.dim(); ++i) into.push_back(RatFunc::variable(z, i));
  RatMap left(z, std::move(into));
  RatFunc pvar = RatFunc::variable(z, geo.dim());
  RatFunc next = step(pvar, embed(geo.observable, left));
  std::vector<RatFunc> map;
  for (const auto& c : geo.map.components()) map.push_back(embed(c, left));
  map.push_back(next);
  std::vector<FieldElement> point = geo.point;
  point.push_back(acc);  // accumulated value before the first geometric term
  std::vector<MultiPoly> rels;
  for (const auto& r : geo.relations) rels.push_back(embed(r, left));
  return DynSeq(std::move(prefix), make_geometric_data(z, std::move(map), std::move(point), next, std::move(rels)));
}

}  // namespace

// ------------------------------------------------------------ combinators

DynSeq seq_sum(const DynSeq& a, const DynSeq& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}

DynSeq seq_product(const DynSeq& a, const DynSeq& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}

DynSeq seq_partial_sums(const DynSeq& a) {
  return accumulate(a, FieldElement(a.field(), 0L), [](const auto& acc, const auto& x) { return acc + x; });
}

DynSeq seq_partial_products(const DynSeq& a) {
  return accumulate(a, FieldElement(a.field(), 1L), [](const auto& acc, const auto& x) { return x * acc; });
}

DynSeq seq_shift(const DynSeq& a, std::size_t i) {
  const auto& pre = a.prefix();
  if (i <= pre.size()) return DynSeq(std::vector<FieldElement>(pre.begin() + static_cast<long>(i), pre.end()), a.geo());
  return DynSeq({}, geo_advance(a.geo(), i - pre.size()));
}

DynSeq seq_with_prefix(const DynSeq& a, std::vector<FieldElement> new_prefix, std::size_t j) {
  if (j > new_prefix.size())
    throw Error(ErrorKind::InvalidArgument, "offset " + std::to_string(j) + " exceeds the new prefix length " +
                                                std::to_string(new_prefix.size()));
  DynSeq tail = seq_shift(a, new_prefix.size() - j);
  new_prefix.insert(new_prefix.end(), tail.prefix().begin(), tail.prefix().end());
  return DynSeq(std::move(new_prefix), tail.geo());
}

DynSeq seq_arith_progression(const DynSeq& a, std::size_t d, std::size_t i) {
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "progression step must be positive");
  if (i >= d) throw Error(ErrorKind::InvalidArgument, "progression offset must be smaller than the step");
  DynSeq c = seq_shift(a, i);
  if (d == 1) return c;
  const std::size_t n = c.prefix().size();
  const std::size_t m = (n + d - 1) / d;  // prefix indices k with d*k < n
  std::vector<FieldElement> prefix;
  for (std::size_t k = 0; k < m; ++k) prefix.push_back(c.prefix()[d * k]);
  GeometricData geo = geo_advance(c.geo(), d * m - n);
  RatMap power = geo.map;
  for (std::size_t k = 1; k < d; ++k) power = ratmap_compose(power, geo.map);
  geo.map = power;
  return DynSeq(std::move(prefix), std::move(geo));
}

DynSeq seq_floor(const DynSeq& a, std::size_t d) {
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "floor divisor must be positive");
  if (d == 1) return a;
  std::vector<FieldElement> prefix;
  for (const auto& x : a.prefix())
    for (std::size_t k = 0; k < d; ++k) prefix.push_back(x);
  const auto& geo = a.geo();
  const std::size_t dim = geo.dim();
  // Copies u_1..u_d of X; mu(u) = (phi(u_d), u_1, ..., u_{d-1}), e(u) = f(u_d).
  std::vector<std::string> names;
  std::set<std::string> used;
  for (std::size_t c = 1; c <= d; ++c)
    for (const auto& nm : geo.ring->vars().names()) {
      std::string fresh = fresh_name(nm + "_" + std::to_string(c), used);
      used.insert(fresh);
      names.push_back(fresh);
    }
  RingPtr z = make_ring(geo.field(), VarTable(std::move(names)), geo.ring->order());
  std::vector<RatMap> copy;
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<RatFunc> into;
    for (std::size_t i = 0; i < dim; ++i) into.push_back(RatFunc::variable(z, c * dim + i));
    copy.emplace_back(z, std::move(into));
  }
  std::vector<RatFunc> map;
  for (const auto& comp : geo.map.components()) map.push_back(embed(comp, copy[d - 1]));
  for (std::size_t c = 0; c + 1 < d; ++c)
    for (std::size_t i = 0; i < dim; ++i) map.push_back(RatFunc::variable(z, c * dim + i));
  std::vector<FieldElement> point;
  for (std::size_t c = 0; c < d; ++c) point.insert(point.end(), geo.point.begin(), geo.point.end());
  std::vector<MultiPoly> rels;
  for (std::size_t c = 0; c < d; ++c)
    for (const auto& r : geo.relations) rels.push_back(embed(r, copy[c]));
  RatFunc obs = embed(geo.observable, copy[d - 1]);
  return DynSeq(std::move(prefix), make_geometric_data(z, std::move(map), std::move(point), std::move(obs), std::move(rels)));
}

DynSeq seq_interlace(const std::vector<DynSeq>& seqs) {
  if (seqs.empty()) throw Error(ErrorKind::InvalidArgument, "interlacing needs at least one sequence");
  const std::size_t s = seqs.size();
  const FieldPtr& F = seqs[0].field();
  std::vector<FieldElement> coeffs(s, FieldElement(F, 0L));
  coeffs[s - 1] = FieldElement(F, 1L);
  std::optional<DynSeq> out;
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<FieldElement> init(s, FieldElement(F, 0L));
    init[i] = FieldElement(F, 1L);
    DynSeq term = seq_product(seq_from_linear_recurrence(coeffs, init), seq_floor(seqs[i], s));
    out = out ? seq_sum(*out, term) : term;
  }
  return *out;
}

DynSeq seq_scale(const DynSeq& a, const FieldElement& c) {
  check_field(a.field(), c, "scale factor");
  std::vector<FieldElement> prefix;
  for (const auto& x : a.prefix()) prefix.push_back(x * c);
  GeometricData geo = a.geo();
  geo.observable = geo.observable.scaled(c.value());
  return DynSeq(std::move(prefix), std::move(geo));
}

}  // namespace dynseq

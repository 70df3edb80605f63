#include "dynseq/ratmap.hpp"

namespace dynseq {

namespace {

using Factor = RatFunc::Factor;

void add_factor(std::vector<Factor>& fs, const MultiPoly& f, unsigned mult) {
  if (mult == 0) return;
  for (auto& g : fs)
    if (g.poly == f) {
      g.mult += mult;
      return;
    }
  fs.push_back(Factor{f, mult});
}

unsigned multiplicity(const std::vector<Factor>& fs, const MultiPoly& f) {
  for (const auto& g : fs)
    if (g.poly == f) return g.mult;
  return 0;
}

MultiPoly monomial_poly(const RingPtr& ring, const Monomial& m) {
  return MultiPoly::from_sorted(ring, {Term{m, ring->F().one()}});
}

MultiPoly expand(const RingPtr& ring, const Monomial& mono, const std::vector<Factor>& fs) {
  MultiPoly d = monomial_poly(ring, mono);
  for (const auto& f : fs) d = d * f.poly.pow(f.mult);
  return d;
}

// Splits a nonzero polynomial q = c * mono * prod(factors); known factors in
// `hints` are divided out first.
struct Split {
  Scalar c;
  Monomial mono;
  std::vector<Factor> factors;
};

Split split(const MultiPoly& q, const std::vector<const std::vector<Factor>*>& hints) {
  const auto& F = q.F();
  Split s{q.lead_coeff(), q.monomial_content(), {}};
  MultiPoly rest = q.div_monomial(s.mono).scaled(F.inv(s.c));
  for (const auto* hs : hints)
    for (const auto& h : *hs) {
      MultiPoly quot;
      while (!rest.is_constant() && divides_exactly(h.poly, rest, &quot)) {
        add_factor(s.factors, h.poly, 1);
        rest = std::move(quot);
      }
    }
  if (!rest.is_constant()) add_factor(s.factors, rest.monic(), 1);
  return s;
}

void check_ring(const RatFunc& a, const RatFunc& b) {
  if (!same_ring(a.ring(), b.ring()))
    throw Error(ErrorKind::VarTableMismatch, "rational functions live in different rings");
}

}  // namespace

RatFunc::RatFunc(MultiPoly num) : num_(std::move(num)), mono_den_(num_.ring()->nvars()) {}

RatFunc::RatFunc(MultiPoly num, const MultiPoly& den) : num_(std::move(num)) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (!same_ring(num_.ring(), den.ring())) throw Error(ErrorKind::VarTableMismatch, "numerator and denominator rings differ");
  Split s = split(den, {});
  num_ = num_.scaled(num_.F().inv(s.c));
  mono_den_ = std::move(s.mono);
  factors_ = std::move(s.factors);
  cancel();
}

MultiPoly RatFunc::den() const { return expand(ring(), mono_den_, factors_); }

void RatFunc::cancel() {
  if (num_.is_zero()) {
    mono_den_ = Monomial(ring()->nvars());
    factors_.clear();
    return;
  }
  if (!mono_den_.is_one()) {
    Monomial g = gcd(num_.monomial_content(), mono_den_);
    if (!g.is_one()) {
      num_ = num_.div_monomial(g);
      mono_den_ = mono_den_ / g;
    }
  }
  for (auto& f : factors_) {
    MultiPoly quot;
    while (f.mult > 0 && divides_exactly(f.poly, num_, &quot)) {
      num_ = std::move(quot);
      --f.mult;
    }
  }
  std::erase_if(factors_, [](const Factor& f) { return f.mult == 0; });
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  check_ring(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const auto& ring = a.ring();
  bool same_den = a.mono_den_ == b.mono_den_ && a.factors_.size() == b.factors_.size();
  if (same_den)
    for (const auto& f : a.factors_)
      if (multiplicity(b.factors_, f.poly) != f.mult) same_den = false;
  RatFunc r;
  if (same_den) {
    r = a;
    r.num_ = a.num_ + b.num_;
    if (!r.is_polynomial()) r.cancel();
    return r;
  }
  Monomial mono = lcm(a.mono_den_, b.mono_den_);
  std::vector<Factor> fs = a.factors_;
  for (const auto& f : b.factors_) {
    bool found = false;
    for (auto& g : fs)
      if (g.poly == f.poly) {
        g.mult = std::max(g.mult, f.mult);
        found = true;
      }
    if (!found) fs.push_back(f);
  }
  auto cofactor = [&](const RatFunc& x) {
    std::vector<Factor> extra;
    for (const auto& f : fs) add_factor(extra, f.poly, f.mult - multiplicity(x.factors_, f.poly));
    return expand(ring, mono / x.mono_den_, extra);
  };
  r.num_ = a.num_ * cofactor(a) + b.num_ * cofactor(b);
  r.mono_den_ = std::move(mono);
  r.factors_ = std::move(fs);
  r.cancel();
  return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  check_ring(a, b);
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
  // Cross-cancel each numerator against the other denominator first.
  RatFunc x = a, y = b;
  std::swap(x.num_, y.num_);
  x.cancel();
  y.cancel();
  RatFunc r;
  r.num_ = x.num_ * y.num_;
  r.mono_den_ = x.mono_den_ * y.mono_den_;
  r.factors_ = x.factors_;
  for (const auto& f : y.factors_) add_factor(r.factors_, f.poly, f.mult);
  if (r.num_.is_zero()) r.cancel();
  return r;
}

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of the zero rational function");
  Split s = split(num_, {&factors_});
  RatFunc r;
  r.num_ = den().scaled(num_.F().inv(s.c));
  r.mono_den_ = std::move(s.mono);
  r.factors_ = std::move(s.factors);
  r.cancel();
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  check_ring(a, b);
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero rational function");
  if (a.is_zero()) return a;
  Split s = split(b.num_, {&a.factors_, &b.factors_});
  RatFunc q;
  q.num_ = b.den().scaled(a.num_.F().inv(s.c));
  q.mono_den_ = std::move(s.mono);
  q.factors_ = std::move(s.factors);
  return a * q;
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r = *this;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  Monomial::Exponents ex(mono_den_.size());
  for (std::size_t i = 0; i < ex.size(); ++i) ex[i] = mono_den_[i] * static_cast<std::uint32_t>(e);
  r.mono_den_ = Monomial(std::move(ex));
  for (auto& f : r.factors_) f.mult *= static_cast<unsigned>(e);
  if (e == 0) r.factors_.clear();
  return r;
}

RatFunc RatFunc::scaled(const Scalar& c) const {
  RatFunc r = *this;
  r.num_ = num_.scaled(c);
  if (r.num_.is_zero()) r.cancel();
  return r;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (!same_ring(a.ring(), b.ring())) return false;
  if (a.is_polynomial() && b.is_polynomial()) return a.num_ == b.num_;
  return a.num_ * b.den() == b.num_ * a.den();
}

Scalar RatFunc::eval_scalar(const std::vector<Scalar>& point, bool* den_zero) const {
  const auto& F = num_.F();
  *den_zero = false;
  Scalar d = F.one();
  for (std::size_t i = 0; i < mono_den_.size(); ++i)
    if (mono_den_[i] != 0) d = F.mul(d, F.pow(point[i], mono_den_[i]));
  for (const auto& f : factors_) d = F.mul(d, F.pow(f.poly.eval_scalar(point), f.mult));
  if (F.is_zero(d)) {
    *den_zero = true;
    return F.zero();
  }
  return F.div(num_.eval_scalar(point), d);
}

FieldElement RatFunc::eval(const std::vector<FieldElement>& point) const {
  std::vector<Scalar> raw;
  raw.reserve(point.size());
  for (const auto& x : point) {
    if (!same_field(x.field(), ring()->field()))
      throw Error(ErrorKind::DescriptorMismatch, "evaluation point is over a different field");
    raw.push_back(x.value());
  }
  if (raw.size() != ring()->nvars()) throw Error(ErrorKind::DimensionMismatch, "evaluation point has the wrong dimension");
  bool zero = false;
  Scalar v = eval_scalar(raw, &zero);
  if (zero) throw Error(ErrorKind::Indeterminacy, "denominator vanishes at the evaluation point", 0);
  return FieldElement(ring()->field(), std::move(v));
}

RatFunc RatFunc::with_ring(RingPtr ring) const {
  RatFunc r;
  const auto& F = ring->F();
  r.num_ = num_.with_ring(ring);
  r.mono_den_ = mono_den_;
  for (const auto& f : factors_) {
    MultiPoly g = f.poly.with_ring(ring);
    Scalar lc = g.lead_coeff();
    if (!F.is_one(lc)) {
      r.num_ = r.num_.scaled(F.pow(F.inv(lc), f.mult));
      g = g.monic();
    }
    r.factors_.push_back(Factor{std::move(g), f.mult});
  }
  return r;
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den().to_string() + ")";
}

// ---------------------------------------------------------------- RatMap

RatMap::RatMap(std::vector<RatFunc> components) : components_(std::move(components)) {
  if (components_.empty()) throw Error(ErrorKind::DimensionMismatch, "a rational map needs at least one component");
  ring_ = components_[0].ring();
  for (const auto& c : components_)
    if (!same_ring(c.ring(), ring_)) throw Error(ErrorKind::VarTableMismatch, "map components live in different rings");
}

RatMap::RatMap(RingPtr ring, std::vector<RatFunc> components) : ring_(std::move(ring)), components_(std::move(components)) {
  for (const auto& c : components_)
    if (!same_ring(c.ring(), ring_)) throw Error(ErrorKind::VarTableMismatch, "map components live in different rings");
}

RatMap RatMap::identity(RingPtr ring) {
  std::vector<RatFunc> cs;
  for (std::size_t i = 0; i < ring->nvars(); ++i) cs.push_back(RatFunc::variable(ring, i));
  return RatMap(ring, std::move(cs));
}

std::vector<Scalar> RatMap::eval_scalar(const std::vector<Scalar>& point) const {
  std::vector<Scalar> out;
  out.reserve(components_.size());
  for (std::size_t k = 0; k < components_.size(); ++k) {
    bool zero = false;
    out.push_back(components_[k].eval_scalar(point, &zero));
    if (zero)
      throw Error(ErrorKind::Indeterminacy,
                  "component " + std::to_string(k) + " has a vanishing denominator", static_cast<std::int64_t>(k));
  }
  return out;
}

std::vector<FieldElement> RatMap::eval(const std::vector<FieldElement>& point) const {
  if (point.size() != dim_in())
    throw Error(ErrorKind::DimensionMismatch,
                "point has " + std::to_string(point.size()) + " coordinates, map expects " + std::to_string(dim_in()));
  std::vector<Scalar> raw;
  raw.reserve(point.size());
  for (const auto& x : point) {
    if (!same_field(x.field(), ring_->field()))
      throw Error(ErrorKind::DescriptorMismatch, "evaluation point is over a different field");
    raw.push_back(x.value());
  }
  std::vector<FieldElement> out;
  for (auto& s : eval_scalar(raw)) out.emplace_back(ring_->field(), std::move(s));
  return out;
}

RatMap RatMap::with_ring(RingPtr ring) const {
  std::vector<RatFunc> cs;
  for (const auto& c : components_) cs.push_back(c.with_ring(ring));
  return RatMap(std::move(ring), std::move(cs));
}

// ------------------------------------------------------------ operations

RatFunc poly_substitute(const MultiPoly& p, const std::vector<RatFunc>& images) {
  if (images.size() != p.ring()->nvars())
    throw Error(ErrorKind::DimensionMismatch, "substitution needs " + std::to_string(p.ring()->nvars()) + " images, got " +
                                                  std::to_string(images.size()));
  if (images.empty()) throw Error(ErrorKind::DimensionMismatch, "substitution into a ring without variables");
  const RingPtr& target = images[0].ring();
  for (const auto& im : images)
    if (!same_ring(im.ring(), target)) throw Error(ErrorKind::VarTableMismatch, "substitution images live in different rings");
  if (!same_field(target->field(), p.ring()->field()))
    throw Error(ErrorKind::DescriptorMismatch, "substitution across different fields");
  const auto& F = target->F();
  const std::size_t n = images.size();

  std::vector<std::uint32_t> deg(n);
  for (std::size_t i = 0; i < n; ++i) deg[i] = p.degree_in(i);

  // Common denominator prod_i den_i^deg_i.
  RatFunc r;
  r.mono_den_ = Monomial(target->nvars());
  std::vector<MultiPoly> den_expanded(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (deg[i] == 0 || images[i].is_polynomial()) continue;
    Monomial::Exponents ex(target->nvars());
    for (std::size_t k = 0; k < ex.size(); ++k) ex[k] = images[i].mono_den_[k] * deg[i];
    r.mono_den_ = r.mono_den_ * Monomial(std::move(ex));
    for (const auto& f : images[i].factors_) add_factor(r.factors_, f.poly, f.mult * deg[i]);
    den_expanded[i] = images[i].den();
  }

  std::vector<std::vector<MultiPoly>> num_pow(n), den_pow(n);
  auto power = [&](std::vector<MultiPoly>& cache, const MultiPoly& base, std::uint32_t e) -> const MultiPoly& {
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, F.one()));
    while (cache.size() <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };

  PolyAccumulator acc(target);
  for (const auto& t : p.terms()) {
    MultiPoly prod = MultiPoly::constant(target, t.coeff);
    for (std::size_t i = 0; i < n; ++i) {
      if (deg[i] == 0) continue;
      if (t.mono[i] > 0) prod = prod * power(num_pow[i], images[i].num_, t.mono[i]);
      if (!images[i].is_polynomial() && deg[i] > t.mono[i])
        prod = prod * power(den_pow[i], den_expanded[i], deg[i] - t.mono[i]);
    }
    for (const auto& pt : prod.terms()) acc.add_term(pt.mono, pt.coeff);
  }
  r.num_ = acc.take();
  if (!r.is_polynomial()) r.cancel();
  else if (r.num_.is_zero()) r.cancel();
  return r;
}

RatFunc ratmap_compose(const RatFunc& outer, const RatMap& inner) {
  if (outer.ring()->nvars() != inner.dim_out())
    throw Error(ErrorKind::DimensionMismatch, "outer function has " + std::to_string(outer.ring()->nvars()) +
                                                  " variables, inner map has " + std::to_string(inner.dim_out()) +
                                                  " components");
  RatFunc result = poly_substitute(outer.num(), inner.components());
  if (outer.is_polynomial()) return result;
  const Monomial& md = outer.monomial_den();
  for (std::size_t i = 0; i < md.size(); ++i) {
    if (md[i] == 0) continue;
    if (inner[i].is_zero())
      throw Error(ErrorKind::ZeroDenominatorSymbolic, "denominator variable maps to zero; composition is nowhere defined");
    result = result / inner[i].pow(md[i]);
  }
  for (const auto& f : outer.den_factors()) {
    RatFunc g = poly_substitute(f.poly, inner.components());
    if (g.is_zero())
      throw Error(ErrorKind::ZeroDenominatorSymbolic, "denominator substitutes to zero; composition is nowhere defined");
    for (unsigned k = 0; k < f.mult; ++k) result = result / g;
  }
  return result;
}

RatMap ratmap_compose(const RatMap& outer, const RatMap& inner) {
  std::vector<RatFunc> cs;
  cs.reserve(outer.dim_out());
  for (const auto& c : outer.components()) cs.push_back(ratmap_compose(c, inner));
  return RatMap(inner.ring(), std::move(cs));
}

MultiPoly ratfunc_numerator_cleared(const RatFunc& f) { return f.num(); }

std::vector<FieldElement> ratmap_eval(const RatMap& m, const std::vector<FieldElement>& point) { return m.eval(point); }

}  // namespace dynseq

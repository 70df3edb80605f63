#include "dynseq/multipoly.hpp"

#include <algorithm>
#include <atomic>
#include <queue>
#include <unordered_set>

namespace dynseq {

const char* to_string(MonomialOrder order) { return order == MonomialOrder::Lex ? "lex" : "degrevlex"; }

MonomialOrder parse_order(const std::string& name) {
  if (name == "lex") return MonomialOrder::Lex;
  if (name == "degrevlex") return MonomialOrder::DegRevLex;
  throw Error(ErrorKind::InvalidArgument, "unknown monomial order '" + name + "' (expected lex or degrevlex)");
}

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error(ErrorKind::InvalidArgument, "empty variable name");
    if (!seen.insert(n).second) throw Error(ErrorKind::InvalidArgument, "duplicate variable '" + n + "'");
  }
}

long VarTable::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<long>(it - names_.begin());
}

// ------------------------------------------------------------- Monomial

Monomial::Monomial(Exponents exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
}

void Monomial::set(std::size_t i, std::uint32_t e) {
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = e;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.exps_.resize(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    std::uint64_t e = static_cast<std::uint64_t>(a.exps_[i]) + b.exps_[i];
    if (e > 0xffffffffu) throw Error(ErrorKind::SizeLimitExceeded, "exponent overflow");
    r.exps_[i] = static_cast<std::uint32_t>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.exps_.resize(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.exps_.resize(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.exps_.resize(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

int compare(MonomialOrder order, const Monomial& a, const Monomial& b) {
  const auto& x = a.exponents();
  const auto& y = b.exponents();
  const std::size_t n = x.size();
  if (order == MonomialOrder::Lex) {
    for (std::size_t i = 0; i < n; ++i)
      if (x[i] != y[i]) return x[i] > y[i] ? 1 : -1;
    return 0;
  }
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = n; i-- > 0;)
    if (x[i] != y[i]) return x[i] < y[i] ? 1 : -1;
  return 0;
}

// ----------------------------------------------------------------- Ring

RingPtr make_ring(FieldPtr field, VarTable vars, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(field), std::move(vars), order);
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

namespace {

std::atomic<std::size_t> g_term_limit{2'000'000};

void require_same(const MultiPoly& a, const MultiPoly& b) {
  if (!same_ring(a.ring(), b.ring()))
    throw Error(ErrorKind::VarTableMismatch, "polynomials live in different rings");
}

}  // namespace

void set_term_limit(std::size_t limit) { g_term_limit = limit; }
std::size_t term_limit() { return g_term_limit; }

// ------------------------------------------------------------ MultiPoly

void MultiPoly::check_size() const {
  if (terms_.size() > g_term_limit)
    throw Error(ErrorKind::SizeLimitExceeded,
                "polynomial has " + std::to_string(terms_.size()) + " terms (limit " + std::to_string(term_limit()) + ")");
}

MultiPoly::MultiPoly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto order = ring_->order();
  const auto& F = ring_->F();
  for (auto& t : terms)
    if (t.mono.size() != ring_->nvars())
      throw Error(ErrorKind::VarTableMismatch, "monomial length does not match the variable table");
  std::sort(terms.begin(), terms.end(),
            [order](const Term& a, const Term& b) { return compare(order, a.mono, b.mono) > 0; });
  for (std::size_t i = 0; i < terms.size();) {
    Scalar c = std::move(terms[i].coeff);
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].mono == terms[i].mono; ++j) c = F.add(c, terms[j].coeff);
    if (!F.is_zero(c)) terms_.push_back(Term{std::move(terms[i].mono), std::move(c)});
    i = j;
  }
  check_size();
}

MultiPoly MultiPoly::from_sorted(RingPtr ring, std::vector<Term> terms) {
  MultiPoly p(std::move(ring));
  p.terms_ = std::move(terms);
  p.check_size();
  return p;
}

MultiPoly MultiPoly::constant(RingPtr ring, const Scalar& c) {
  MultiPoly p(ring);
  if (!ring->F().is_zero(c)) p.terms_.push_back(Term{Monomial(ring->nvars()), c});
  return p;
}

MultiPoly MultiPoly::constant(RingPtr ring, const Rational& c) {
  auto s = ring->F().from_rational(c);
  return constant(std::move(ring), s);
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  Monomial m(ring->nvars());
  m.set(index, 1);
  MultiPoly p(ring);
  p.terms_.push_back(Term{std::move(m), ring->F().one()});
  return p;
}

std::uint64_t MultiPoly::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t MultiPoly::degree_in(std::size_t i) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[i]);
  return d;
}

Monomial MultiPoly::monomial_content() const {
  if (terms_.empty()) return Monomial(ring_ ? ring_->nvars() : 0);
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) {
    if (g.is_one()) break;
    g = gcd(g, t.mono);
  }
  return g;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono, F().neg(t.coeff)});
  return r;
}

namespace {

MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
  require_same(a, b);
  const auto& ring = a.ring();
  const auto& F = ring->F();
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    int c;
    if (i == x.size()) c = -1;
    else if (j == y.size()) c = 1;
    else c = ring->cmp(x[i].mono, y[j].mono);
    if (c > 0) {
      out.push_back(x[i++]);
    } else if (c < 0) {
      out.push_back(Term{y[j].mono, subtract ? F.neg(y[j].coeff) : y[j].coeff});
      ++j;
    } else {
      Scalar s = subtract ? F.sub(x[i].coeff, y[j].coeff) : F.add(x[i].coeff, y[j].coeff);
      if (!F.is_zero(s)) out.push_back(Term{x[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return MultiPoly::from_sorted(ring, std::move(out));
}

}  // namespace

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, false); }
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, true); }

// Johnson's heap multiplication: one heap entry per term of the shorter
// factor, products emerge in descending order.
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same(a, b);
  const auto& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return MultiPoly(ring);
  const MultiPoly& s = a.size() <= b.size() ? a : b;
  const MultiPoly& l = a.size() <= b.size() ? b : a;
  if (s.size() == 1) return l.mul_term(s.terms()[0].mono, s.terms()[0].coeff);
  const auto& F = ring->F();
  const auto& st = s.terms();
  const auto& lt = l.terms();

  struct Entry {
    Monomial mono;
    std::size_t i, j;
  };
  const auto order = ring->order();
  auto less = [order](const Entry& x, const Entry& y) { return compare(order, x.mono, y.mono) < 0; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(less)> heap(less);
  for (std::size_t i = 0; i < st.size(); ++i) heap.push(Entry{st[i].mono * lt[0].mono, i, 0});

  std::vector<Term> out;
  const std::size_t limit = term_limit();
  while (!heap.empty()) {
    Monomial m = heap.top().mono;
    Scalar acc = F.zero();
    bool first = true;
    while (!heap.empty() && heap.top().mono == m) {
      Entry e = heap.top();
      heap.pop();
      Scalar prod = F.mul(st[e.i].coeff, lt[e.j].coeff);
      if (first) {
        acc = std::move(prod);
        first = false;
      } else {
        acc = F.add(acc, prod);
      }
      if (e.j + 1 < lt.size()) heap.push(Entry{st[e.i].mono * lt[e.j + 1].mono, e.i, e.j + 1});
    }
    if (!F.is_zero(acc)) {
      out.push_back(Term{std::move(m), std::move(acc)});
      if (out.size() > limit)
        throw Error(ErrorKind::SizeLimitExceeded, "product exceeds the term limit of " + std::to_string(limit));
    }
  }
  return MultiPoly::from_sorted(ring, std::move(out));
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
  if (F().is_zero(c)) return MultiPoly(ring_);
  if (F().is_one(c)) return *this;
  MultiPoly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono, F().mul(t.coeff, c)});
  return r;
}

MultiPoly MultiPoly::mul_term(const Monomial& m, const Scalar& c) const {
  if (F().is_zero(c)) return MultiPoly(ring_);
  MultiPoly r(ring_);
  r.terms_.reserve(terms_.size());
  const bool unit = F().is_one(c);
  for (const auto& t : terms_) r.terms_.push_back(Term{t.mono * m, unit ? t.coeff : F().mul(t.coeff, c)});
  return r;
}

MultiPoly MultiPoly::div_monomial(const Monomial& m) const {
  MultiPoly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!m.divides(t.mono)) throw Error(ErrorKind::InvalidArgument, "monomial does not divide polynomial");
    r.terms_.push_back(Term{t.mono / m, t.coeff});
  }
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(F().inv(lead_coeff()));
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(ring_, Rational(1));
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::with_ring(RingPtr ring) const {
  if (!same_field(ring->field(), ring_->field()) || !(ring->vars() == ring_->vars()))
    throw Error(ErrorKind::VarTableMismatch, "with_ring requires identical field and variables");
  if (ring->order() == ring_->order()) {
    MultiPoly r = *this;
    r.ring_ = std::move(ring);
    return r;
  }
  std::vector<Term> terms = terms_;
  const auto order = ring->order();
  std::sort(terms.begin(), terms.end(),
            [order](const Term& a, const Term& b) { return compare(order, a.mono, b.mono) > 0; });
  return from_sorted(std::move(ring), std::move(terms));
}

Scalar MultiPoly::eval_scalar(const std::vector<Scalar>& point) const {
  const auto& F = this->F();
  if (point.size() != ring_->nvars())
    throw Error(ErrorKind::DimensionMismatch, "evaluation point has " + std::to_string(point.size()) +
                                                  " coordinates, ring has " + std::to_string(ring_->nvars()));
  std::vector<std::vector<Scalar>> powers(point.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Scalar& {
    auto& v = powers[i];
    if (v.empty()) v.push_back(F.one());
    while (v.size() <= e) v.push_back(F.mul(v.back(), point[i]));
    return v[e];
  };
  Scalar acc = F.zero();
  for (const auto& t : terms_) {
    Scalar c = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (t.mono[i] != 0) c = F.mul(c, power(i, t.mono[i]));
    acc = F.add(acc, c);
  }
  return acc;
}

FieldElement MultiPoly::eval(const std::vector<FieldElement>& point) const {
  std::vector<Scalar> raw;
  raw.reserve(point.size());
  for (const auto& x : point) {
    if (!same_field(x.field(), ring_->field()))
      throw Error(ErrorKind::DescriptorMismatch, "evaluation point is over a different field");
    raw.push_back(x.value());
  }
  return FieldElement(ring_->field(), eval_scalar(raw));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

namespace {

bool simple_coefficient(const FieldDescriptor& F, const Scalar& c) {
  if (F.kind() == FieldDescriptor::Kind::Rationals) return true;
  if (F.kind() == FieldDescriptor::Kind::AlgebraicExtension) return std::get<AlgNum>(c).rep.degree() <= 0;
  const auto& q = std::get<QtFrac>(c);
  return q.num.degree() <= 0 && q.den.degree() == 0;
}

Rational simple_value(const FieldDescriptor& F, const Scalar& c) {
  if (F.kind() == FieldDescriptor::Kind::Rationals) return std::get<Rational>(c);
  if (F.kind() == FieldDescriptor::Kind::AlgebraicExtension) return std::get<AlgNum>(c).rep.coeff(0);
  return std::get<QtFrac>(c).num.coeff(0);
}

}  // namespace

std::string MultiPoly::to_string() const {
  if (is_zero()) return "0";
  const auto& F = this->F();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->vars()[i];
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (simple_coefficient(F, t.coeff)) {
      Rational c = simple_value(F, t.coeff);
      bool neg = c < 0;
      Rational a = abs(c);
      if (!first) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      if (mono.empty()) out += a.get_str();
      else if (a == 1) out += mono;
      else out += a.get_str() + "*" + mono;
    } else {
      if (!first) out += " + ";
      out += "(" + F.to_string(t.coeff) + ")";
      if (!mono.empty()) out += "*" + mono;
    }
    first = false;
  }
  return out;
}

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

MultiPoly poly_scale(const MultiPoly& p, const FieldElement& c) {
  if (!same_field(c.field(), p.ring()->field()))
    throw Error(ErrorKind::DescriptorMismatch, "scalar is over a different field");
  return p.scaled(c.value());
}

FieldElement poly_eval(const MultiPoly& p, const std::vector<FieldElement>& point) { return p.eval(point); }

bool divides_exactly(const MultiPoly& d, const MultiPoly& p, MultiPoly* quotient) {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
  require_same(d, p);
  const auto& ring = p.ring();
  if (p.is_zero()) {
    if (quotient) *quotient = MultiPoly(ring);
    return true;
  }
  if (d.is_constant()) {
    if (quotient) *quotient = p.scaled(ring->F().inv(d.lead_coeff()));
    return true;
  }
  if (d.total_degree() > p.total_degree()) return false;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (d.degree_in(i) > p.degree_in(i)) return false;
  if (!d.lead_monomial().divides(p.lead_monomial())) return false;

  const auto& F = ring->F();
  Scalar inv_lead = F.inv(d.lead_coeff());
  PolyAccumulator acc(p);
  std::vector<Term> q;
  while (!acc.empty()) {
    const Monomial& lm = acc.lead_monomial();
    if (!d.lead_monomial().divides(lm)) return false;
    Monomial m = lm / d.lead_monomial();
    Scalar c = F.mul(acc.lead_coeff(), inv_lead);
    acc.pop_lead();
    acc.add_multiple(d, m, F.neg(c), true);
    q.push_back(Term{std::move(m), std::move(c)});
  }
  if (quotient) *quotient = MultiPoly::from_sorted(ring, std::move(q));
  return true;
}

// ------------------------------------------------------ PolyAccumulator

PolyAccumulator::PolyAccumulator(RingPtr ring) : ring_(std::move(ring)), terms_(Cmp{ring_->order()}) {}

PolyAccumulator::PolyAccumulator(const MultiPoly& p) : ring_(p.ring()), terms_(Cmp{ring_->order()}) {
  for (const auto& t : p.terms()) terms_.emplace_hint(terms_.end(), t.mono, t.coeff);
}

void PolyAccumulator::add_term(const Monomial& m, const Scalar& c) {
  const auto& F = ring_->F();
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = F.add(it->second, c);
    if (F.is_zero(it->second)) terms_.erase(it);
  }
}

void PolyAccumulator::add_multiple(const MultiPoly& p, const Monomial& m, const Scalar& c, bool skip_lead) {
  const auto& F = ring_->F();
  const auto& ts = p.terms();
  auto hint = terms_.begin();
  for (std::size_t k = skip_lead ? 1 : 0; k < ts.size(); ++k) {
    Monomial mono = ts[k].mono * m;
    Scalar v = F.mul(ts[k].coeff, c);
    hint = terms_.lower_bound(mono);
    if (hint != terms_.end() && hint->first == mono) {
      hint->second = F.add(hint->second, v);
      if (F.is_zero(hint->second)) hint = terms_.erase(hint);
    } else {
      hint = terms_.emplace_hint(hint, std::move(mono), std::move(v));
    }
  }
  if (terms_.size() > term_limit())
    throw Error(ErrorKind::SizeLimitExceeded, "intermediate polynomial exceeds the term limit");
}

MultiPoly PolyAccumulator::take() {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& [m, c] : terms_) out.push_back(Term{m, std::move(c)});
  terms_.clear();
  return MultiPoly::from_sorted(ring_, std::move(out));
}

}  // namespace dynseq

#include "dynseq/field.hpp"

#include <sstream>

namespace dynseq {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ReducibleMinimalPolynomial: return "ReducibleMinimalPolynomial";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::VarTableMismatch: return "VarTableMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::ZeroDenominatorSymbolic: return "ZeroDenominatorSymbolic";
    case ErrorKind::Indeterminacy: return "Indeterminacy";
    case ErrorKind::NonIntegerValuedPolynomial: return "NonIntegerValuedPolynomial";
    case ErrorKind::ZeroBaseNegativeExponent: return "ZeroBaseNegativeExponent";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Sparse-aware: powers of t and products of cyclotomic-like factors are
  // mostly zeros.
  auto support = [](const std::vector<Rational>& c) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (sgn(c[i]) != 0) s.push_back(i);
    return s;
  };
  const auto sa = support(a.coeffs_);
  const auto sb = support(b.coeffs_);
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  Rational prod;
  for (std::size_t i : sa)
    for (std::size_t j : sb) {
      mpq_mul(prod.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      v[i + j] += prod;
    }
  return UPoly(std::move(v));
}

UPoly UPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  UPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return scaled(1 / lead());
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UPoly(std::move(v));
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

std::string coeff_prefix(const Rational& c, bool first, bool has_var, bool& negative) {
  negative = c < 0;
  Rational a = abs(c);
  std::string s;
  if (!first) s += negative ? " - " : " + ";
  else if (negative) s += "-";
  if (!has_var) return s + a.get_str();
  if (a != 1) s += a.get_str() + "*";
  return s;
}

}  // namespace

std::string UPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    bool neg = false;
    out += coeff_prefix(c, first, i > 0, neg);
    if (i > 0) {
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
    first = false;
  }
  return out;
}

void divmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  long db = b.degree();
  long da = a.degree();
  if (da < db) {
    quot = UPoly();
    rem = a;
    return;
  }
  std::vector<Rational> q(static_cast<std::size_t>(da - db + 1));
  Rational inv_lead = 1 / b.lead();
  for (long i = da; i >= db; --i) {
    Rational c = r[static_cast<std::size_t>(i)] * inv_lead;
    q[static_cast<std::size_t>(i - db)] = c;
    if (c == 0) continue;
    for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  quot = UPoly(std::move(q));
  rem = UPoly(std::move(r));
}

namespace {

using ZPoly = std::vector<Integer>;  // ascending, no trailing zeros

// Integer polynomial with coprime coefficients and positive leading
// coefficient, proportional to p.
ZPoly primitive_part(const UPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  z.reserve(p.coeffs().size());
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    z.push_back(c.get_num() * (l / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
  }
  if (z.back() < 0) g = -g;
  for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return z;
}

UPoly from_z(const ZPoly& z) { return UPoly(std::vector<Rational>(z.begin(), z.end())); }

}  // namespace

// Euclid with every remainder replaced by its primitive part; avoids the
// coefficient growth of the plain remainder sequence over Q.
UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  UPoly x = from_z(primitive_part(a)), y = from_z(primitive_part(b));
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    UPoly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = r.is_zero() ? r : from_z(primitive_part(r));
  }
  return x.monic();
}

UPoly xgcd_inverse_part(const UPoly& a, const UPoly& b, UPoly& g) {
  // Invariant: s0*a = r0 (mod b), s1*a = r1 (mod b).
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(1), s1;
  while (!r1.is_zero()) {
    UPoly q, r;
    divmod(r0, r1, q, r);
    UPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.is_zero()) {
    g = UPoly();
    return {};
  }
  Rational l = r0.lead();
  g = r0.scaled(1 / l);
  return s0.scaled(1 / l);
}

// ------------------------------------------------------ FieldDescriptor

std::shared_ptr<const FieldDescriptor> FieldDescriptor::rationals() {
  static const std::shared_ptr<const FieldDescriptor> q(new FieldDescriptor());
  return q;
}

std::shared_ptr<const FieldDescriptor> FieldDescriptor::algebraic(std::string generator, std::vector<Rational> minpoly) {
  UPoly m(std::move(minpoly));
  if (generator.empty()) throw Error(ErrorKind::InvalidField, "algebraic extension needs a generator name");
  if (m.degree() < 2) throw Error(ErrorKind::InvalidField, "minimal polynomial must have degree >= 2");
  if (m.lead() != 1) throw Error(ErrorKind::InvalidField, "minimal polynomial must be monic");
  if (gcd(m, m.derivative()).degree() != 0)
    throw Error(ErrorKind::InvalidField, "minimal polynomial must be squarefree");
  auto* f = new FieldDescriptor();
  f->kind_ = Kind::AlgebraicExtension;
  f->symbol_ = std::move(generator);
  f->minpoly_ = std::move(m);
  return std::shared_ptr<const FieldDescriptor>(f);
}

std::shared_ptr<const FieldDescriptor> FieldDescriptor::rational_functions(std::string variable) {
  if (variable.empty()) throw Error(ErrorKind::InvalidField, "rational function field needs a variable name");
  auto* f = new FieldDescriptor();
  f->kind_ = Kind::RationalFunctions;
  f->symbol_ = std::move(variable);
  return std::shared_ptr<const FieldDescriptor>(f);
}

std::size_t FieldDescriptor::extension_degree() const {
  return kind_ == Kind::AlgebraicExtension ? static_cast<std::size_t>(minpoly_.degree()) : 1;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || *a == *b; }

Scalar FieldDescriptor::zero() const { return from_rational(0); }
Scalar FieldDescriptor::one() const { return from_rational(1); }

Scalar FieldDescriptor::from_rational(const Rational& q) const {
  switch (kind_) {
    case Kind::Rationals: return q;
    case Kind::AlgebraicExtension: return AlgNum{UPoly::constant(q)};
    case Kind::RationalFunctions: return QtFrac{UPoly::constant(q), UPoly::constant(1)};
  }
  return q;
}

Scalar FieldDescriptor::generator() const {
  switch (kind_) {
    case Kind::Rationals: break;
    case Kind::AlgebraicExtension: return AlgNum{UPoly::monomial(1, 1)};
    case Kind::RationalFunctions: return QtFrac{UPoly::monomial(1, 1), UPoly::constant(1)};
  }
  throw Error(ErrorKind::InvalidArgument, "Q has no generator");
}

bool FieldDescriptor::is_zero(const Scalar& a) const {
  switch (kind_) {
    case Kind::Rationals: return std::get<Rational>(a) == 0;
    case Kind::AlgebraicExtension: return std::get<AlgNum>(a).rep.is_zero();
    case Kind::RationalFunctions: return std::get<QtFrac>(a).num.is_zero();
  }
  return false;
}

bool FieldDescriptor::is_one(const Scalar& a) const {
  switch (kind_) {
    case Kind::Rationals: return std::get<Rational>(a) == 1;
    case Kind::AlgebraicExtension: {
      const auto& r = std::get<AlgNum>(a).rep;
      return r.degree() == 0 && r.lead() == 1;
    }
    case Kind::RationalFunctions: {
      const auto& f = std::get<QtFrac>(a);
      return f.num.degree() == 0 && f.num.lead() == 1 && f.den.degree() == 0;
    }
  }
  return false;
}

namespace {

UPoly exact_quotient(const UPoly& a, const UPoly& b) {
  if (b.degree() == 0) return b.lead() == 1 ? a : a.scaled(1 / b.lead());
  UPoly q, r;
  divmod(a, b, q, r);
  return q;
}

UPoly canonical_coeffs(const UPoly& p) {
  std::vector<Rational> c = p.coeffs();
  for (auto& x : c) x.canonicalize();
  return UPoly(std::move(c));
}

QtFrac make_qt(UPoly num, UPoly den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) return QtFrac{UPoly(), UPoly::constant(1)};
  UPoly g = num.degree() == 0 || den.degree() == 0 ? UPoly::constant(1) : gcd(num, den);
  if (g.degree() > 0) {
    UPoly q, r;
    divmod(num, g, q, r);
    num = std::move(q);
    divmod(den, g, q, r);
    den = std::move(q);
  }
  Rational l = den.lead();
  if (l != 1) {
    num = num.scaled(1 / l);
    den = den.scaled(1 / l);
  }
  return QtFrac{std::move(num), std::move(den)};
}

}  // namespace

Scalar FieldDescriptor::normalize(Scalar a) const {
  switch (kind_) {
    case Kind::Rationals: {
      auto q = std::get<Rational>(a);
      q.canonicalize();
      return q;
    }
    case Kind::AlgebraicExtension: {
      UPoly q, r;
      divmod(canonical_coeffs(std::get<AlgNum>(a).rep), minpoly_, q, r);
      return AlgNum{std::move(r)};
    }
    case Kind::RationalFunctions: {
      auto& f = std::get<QtFrac>(a);
      return make_qt(canonical_coeffs(f.num), canonical_coeffs(f.den));
    }
  }
  return a;
}

Scalar FieldDescriptor::add(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case Kind::Rationals: return Rational(std::get<Rational>(a) + std::get<Rational>(b));
    case Kind::AlgebraicExtension: return AlgNum{std::get<AlgNum>(a).rep + std::get<AlgNum>(b).rep};
    case Kind::RationalFunctions: {
      const auto& x = std::get<QtFrac>(a);
      const auto& y = std::get<QtFrac>(b);
      if (x.den == y.den) return make_qt(x.num + y.num, x.den);
      if (x.den.degree() == 0) return QtFrac{x.num * y.den + y.num, y.den};
      if (y.den.degree() == 0) return QtFrac{x.num + y.num * x.den, x.den};
      // With g = gcd of the denominators only gcd(num, g) can be nontrivial.
      UPoly g = gcd(x.den, y.den);
      UPoly xd = exact_quotient(x.den, g), yd = exact_quotient(y.den, g);
      UPoly num = x.num * yd + y.num * xd;
      if (num.is_zero()) return zero();
      UPoly h = g.degree() > 0 ? gcd(num, g) : UPoly::constant(1);
      if (h.degree() > 0) {
        num = exact_quotient(num, h);
        g = exact_quotient(g, h);
      }
      return QtFrac{std::move(num), xd * yd * g};
    }
  }
  return a;
}

Scalar FieldDescriptor::neg(const Scalar& a) const {
  switch (kind_) {
    case Kind::Rationals: return Rational(-std::get<Rational>(a));
    case Kind::AlgebraicExtension: return AlgNum{-std::get<AlgNum>(a).rep};
    case Kind::RationalFunctions: {
      const auto& x = std::get<QtFrac>(a);
      return QtFrac{-x.num, x.den};
    }
  }
  return a;
}

Scalar FieldDescriptor::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Rationals) return Rational(std::get<Rational>(a) - std::get<Rational>(b));
  return add(a, neg(b));
}

Scalar FieldDescriptor::mul(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case Kind::Rationals: return Rational(std::get<Rational>(a) * std::get<Rational>(b));
    case Kind::AlgebraicExtension: {
      UPoly q, r;
      divmod(std::get<AlgNum>(a).rep * std::get<AlgNum>(b).rep, minpoly_, q, r);
      return AlgNum{std::move(r)};
    }
    case Kind::RationalFunctions: {
      const auto& x = std::get<QtFrac>(a);
      const auto& y = std::get<QtFrac>(b);
      if (x.num.is_zero() || y.num.is_zero()) return zero();
      if (x.den.degree() == 0 && y.den.degree() == 0) return QtFrac{x.num * y.num, x.den};
      // Cross cancellation; the inputs are already reduced.
      UPoly g1 = gcd(x.num, y.den), g2 = gcd(y.num, x.den);
      UPoly num = exact_quotient(x.num, g1) * exact_quotient(y.num, g2);
      UPoly den = exact_quotient(x.den, g2) * exact_quotient(y.den, g1);
      Rational l = den.lead();
      return QtFrac{num.scaled(1 / l), den.scaled(1 / l)};
    }
  }
  return a;
}

Scalar FieldDescriptor::inv(const Scalar& a) const {
  if (is_zero(a)) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  switch (kind_) {
    case Kind::Rationals: return Rational(1 / std::get<Rational>(a));
    case Kind::AlgebraicExtension: {
      UPoly g;
      UPoly s = xgcd_inverse_part(std::get<AlgNum>(a).rep, minpoly_, g);
      if (g.degree() != 0)
        throw Error(ErrorKind::ReducibleMinimalPolynomial,
                    "minimal polynomial " + minpoly_.to_string(symbol_) + " has factor " + g.to_string(symbol_));
      UPoly q, r;
      divmod(s, minpoly_, q, r);
      return AlgNum{std::move(r)};
    }
    case Kind::RationalFunctions: {
      const auto& x = std::get<QtFrac>(a);
      return make_qt(x.den, x.num);
    }
  }
  return a;
}

Scalar FieldDescriptor::pow(const Scalar& a, long e) const {
  if (e < 0) return pow(inv(a), -e);
  Scalar result = one();
  Scalar base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

std::string FieldDescriptor::to_string(const Scalar& a) const {
  switch (kind_) {
    case Kind::Rationals: return std::get<Rational>(a).get_str();
    case Kind::AlgebraicExtension: return std::get<AlgNum>(a).rep.to_string(symbol_);
    case Kind::RationalFunctions: {
      const auto& x = std::get<QtFrac>(a);
      if (x.den.degree() == 0) return x.num.to_string(symbol_);
      std::string n = x.num.to_string(symbol_);
      if (x.num.coeffs().size() > 1 || x.num.lead() < 0 || x.num.lead().get_den() != 1) n = "(" + n + ")";
      return n + "/(" + x.den.to_string(symbol_) + ")";
    }
  }
  return {};
}

std::string FieldDescriptor::describe() const {
  switch (kind_) {
    case Kind::Rationals: return "QQ";
    case Kind::AlgebraicExtension: return "QQ[" + symbol_ + "]/(" + minpoly_.to_string(symbol_) + ")";
    case Kind::RationalFunctions: return "QQ(" + symbol_ + ")";
  }
  return {};
}

// -------------------------------------------------------- FieldElement

FieldElement::FieldElement(FieldPtr field, Scalar value) : field_(std::move(field)), value_(std::move(value)) {
  if (value_.index() != static_cast<std::size_t>(field_->kind()))
    throw Error(ErrorKind::DescriptorMismatch, "payload does not match field " + field_->describe());
  value_ = field_->normalize(std::move(value_));
}

FieldElement::FieldElement(FieldPtr field, const Rational& q) : field_(std::move(field)) {
  Rational c = q;
  c.canonicalize();
  value_ = field_->from_rational(c);
}

std::vector<Rational> FieldElement::coordinates() const {
  if (field_->kind() != FieldDescriptor::Kind::AlgebraicExtension)
    throw Error(ErrorKind::InvalidArgument, "coordinates are defined for algebraic extensions only");
  std::vector<Rational> out(field_->extension_degree());
  const auto& rep = std::get<AlgNum>(value_).rep;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = rep.coeff(i);
  return out;
}

const Rational& FieldElement::rational() const {
  if (field_->kind() != FieldDescriptor::Kind::Rationals)
    throw Error(ErrorKind::InvalidArgument, "element of " + field_->describe() + " is not a plain rational");
  return std::get<Rational>(value_);
}

namespace {

const FieldPtr& common(const FieldElement& a, const FieldElement& b) {
  if (!same_field(a.field(), b.field()))
    throw Error(ErrorKind::DescriptorMismatch,
                "field mismatch: " + a.field()->describe() + " vs " + b.field()->describe());
  return a.field();
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const auto& f = common(a, b);
  return {f, f->add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const auto& f = common(a, b);
  return {f, f->sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const auto& f = common(a, b);
  return {f, f->mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const auto& f = common(a, b);
  return {f, f->div(a.value_, b.value_)};
}
bool operator==(const FieldElement& a, const FieldElement& b) {
  return same_field(a.field_, b.field_) && a.value_ == b.value_;
}

FieldElement field_add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement field_mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement field_neg(const FieldElement& a) { return -a; }
FieldElement field_inv(const FieldElement& a) { return a.inverse(); }

}  // namespace dynseq

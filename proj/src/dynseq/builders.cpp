#include <algorithm>
#include <optional>

#include "dynseq/dynseq.hpp"

namespace dynseq {

namespace {

RingPtr numbered_ring(const FieldPtr& F, const std::string& stem, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return make_ring(F, VarTable(std::move(names)));
}

FieldPtr common_field(const std::vector<FieldElement>& xs, const char* what) {
  if (xs.empty()) throw Error(ErrorKind::InvalidArgument, std::string(what) + " must not be empty");
  for (const auto& x : xs)
    if (!same_field(x.field(), xs[0].field()))
      throw Error(ErrorKind::DescriptorMismatch, std::string(what) + " mixes fields");
  return xs[0].field();
}

RatFunc var(const RingPtr& r, std::size_t i) { return RatFunc::variable(r, i); }
RatFunc cst(const RingPtr& r, const Scalar& c) { return RatFunc::constant(r, c); }

}  // namespace

DynSeq seq_constant(const FieldPtr& field, const FieldElement& c) {
  if (!same_field(field, c.field())) throw Error(ErrorKind::DescriptorMismatch, "constant over a different field");
  return seq_from_linear_recurrence({FieldElement(field, 1L)}, {c});
}

DynSeq seq_from_linear_recurrence(const std::vector<FieldElement>& coeffs, const std::vector<FieldElement>& init) {
  if (coeffs.size() != init.size())
    throw Error(ErrorKind::DimensionMismatch, "recurrence of order " + std::to_string(coeffs.size()) + " needs as many initial values");
  const FieldPtr F = common_field(init, "initial values");
  for (const auto& k : coeffs)
    if (!same_field(k.field(), F)) throw Error(ErrorKind::DescriptorMismatch, "coefficients and initial values differ in field");
  const std::size_t d = coeffs.size();
  RingPtr r = numbered_ring(F, "a", d);
  std::vector<RatFunc> map;
  for (std::size_t i = 1; i < d; ++i) map.push_back(var(r, i));
  RatFunc last = cst(r, F->zero());
  for (std::size_t i = 0; i < d; ++i)
    if (!coeffs[i].is_zero()) last = last + var(r, d - 1 - i).scaled(coeffs[i].value());
  map.push_back(last);
  return DynSeq({}, make_geometric_data(r, std::move(map), init, var(r, 0)));
}

DynSeq seq_from_recurrence_with_coeffs(const RatFunc& R, const std::vector<DynSeq>& coeff_seqs,
                                       const std::vector<FieldElement>& init) {
  const std::size_t s = coeff_seqs.size(), d = init.size();
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "recurrence needs at least one initial value");
  if (R.ring()->nvars() != s + d)
    throw Error(ErrorKind::DimensionMismatch, "recurrence function has " + std::to_string(R.ring()->nvars()) +
                                                  " variables, expected " + std::to_string(s + d));
  const FieldPtr& F = R.ring()->field();
  for (const auto& x : init)
    if (!same_field(x.field(), F)) throw Error(ErrorKind::DescriptorMismatch, "initial value over a different field");
  for (const auto& c : coeff_seqs)
    if (!same_field(c.field(), F)) throw Error(ErrorKind::DescriptorMismatch, "coefficient sequence over a different field");

  // Terms before every coefficient sequence has reached its geometric part are
  // produced directly.
  std::size_t p = 0;
  for (const auto& c : coeff_seqs) p = std::max(p, c.prefix().size());
  std::vector<FieldElement> f = init;
  if (p > 0) {
    std::vector<std::vector<FieldElement>> cv;
    for (const auto& c : coeff_seqs) cv.push_back(seq_eval(c, p - 1));
    for (std::size_t n = 0; n < p; ++n) {
      std::vector<FieldElement> args;
      for (std::size_t i = 0; i < s; ++i) args.push_back(cv[i][n]);
      for (std::size_t k = 0; k < d; ++k) args.push_back(f[n + d - 1 - k]);
      try {
        f.push_back(R.eval(args));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Indeterminacy) throw;
        throw Error(ErrorKind::Indeterminacy, "recurrence is undefined at term " + std::to_string(n + d),
                    static_cast<std::int64_t>(n + d));
      }
    }
  }
  std::vector<FieldElement> prefix(f.begin(), f.begin() + static_cast<long>(p));
  std::vector<FieldElement> window(f.begin() + static_cast<long>(p), f.end());

  std::vector<GeometricData> geos;
  std::vector<RingPtr> rings;
  for (const auto& c : coeff_seqs) {
    geos.push_back(geo_advance(c.geo(), p - c.prefix().size()));
    rings.push_back(geos.back().ring);
  }
  rings.push_back(numbered_ring(F, "a", d));
  ProductLayout L = product_layout(rings);
  const RingPtr& z = L.ring;
  const std::size_t acc0 = z->nvars() - d;

  std::vector<RatFunc> map, args;
  std::vector<FieldElement> point;
  std::vector<MultiPoly> rels;
  for (std::size_t i = 0; i < s; ++i) {
    for (const auto& c : geos[i].map.components()) map.push_back(embed(c, L.parts[i]));
    point.insert(point.end(), geos[i].point.begin(), geos[i].point.end());
    for (const auto& r : geos[i].relations) rels.push_back(embed(r, L.parts[i]));
    args.push_back(embed(geos[i].observable, L.parts[i]));
  }
  for (std::size_t k = 0; k < d; ++k) args.push_back(var(z, acc0 + d - 1 - k));
  for (std::size_t k = 1; k < d; ++k) map.push_back(var(z, acc0 + k));
  map.push_back(ratmap_compose(R, RatMap(z, std::move(args))));
  point.insert(point.end(), window.begin(), window.end());
  return DynSeq(std::move(prefix), make_geometric_data(z, std::move(map), std::move(point), var(z, acc0), std::move(rels)));
}

DynSeq seq_somos(std::size_t k, const std::vector<FieldElement>& init) {
  if (k < 4) throw Error(ErrorKind::InvalidArgument, "Somos sequences need order at least 4");
  if (init.size() != k)
    throw Error(ErrorKind::DimensionMismatch, "Somos-" + std::to_string(k) + " needs " + std::to_string(k) + " initial values");
  const FieldPtr F = common_field(init, "initial values");
  RingPtr r = numbered_ring(F, "x", k);
  std::vector<RatFunc> map;
  for (std::size_t i = 1; i < k; ++i) map.push_back(var(r, i));
  MultiPoly num(r);
  for (std::size_t i = 1; i <= k / 2; ++i)
    num = num + MultiPoly::variable(r, k - i) * MultiPoly::variable(r, i);
  map.emplace_back(num, MultiPoly::variable(r, 0));
  return DynSeq({}, make_geometric_data(r, std::move(map), init, var(r, 0)));
}

DynSeq seq_eds(const FieldElement& w1, const FieldElement& w2, const FieldElement& w3, const FieldElement& w4) {
  const FieldPtr F = common_field({w1, w2, w3, w4}, "EDS initial values");
  if (w1.is_zero()) throw Error(ErrorKind::InvalidArgument, "W1 must be nonzero");
  RingPtr r = make_ring(F, VarTable({"x", "y", "z", "w"}));
  auto X = [&](std::size_t i) { return MultiPoly::variable(r, i); };
  MultiPoly num = (X(3) * X(1)).scaled((w2 * w2).value()) - (X(2) * X(2)).scaled((w3 * w1).value());
  MultiPoly den = X(0).scaled((w1 * w1).value());
  std::vector<RatFunc> map{var(r, 1), var(r, 2), var(r, 3), RatFunc(num, den)};
  return DynSeq({FieldElement(F, 0L)}, make_geometric_data(r, std::move(map), {w1, w2, w3, w4}, var(r, 0)));
}

DynSeq seq_lambda_power_tower(const FieldElement& lambda, unsigned d) {
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "tower exponent must be positive");
  RingPtr r = make_ring(lambda.field(), VarTable({"x"}));
  return DynSeq({}, make_geometric_data(r, {var(r, 0).pow(d)}, {lambda}, var(r, 0)));
}

std::vector<Integer> binomial_coefficients(const UPoly& P) {
  const long deg = std::max<long>(P.degree(), 0);
  std::vector<Rational> vals;
  for (long x = 0; x <= deg; ++x) vals.push_back(P.eval(Rational(x)));
  std::vector<Integer> out;
  for (long i = 0; i <= deg; ++i) {
    if (vals[0].get_den() != 1)
      throw Error(ErrorKind::NonIntegerValuedPolynomial,
                  "polynomial " + P.to_string("x") + " is not integer-valued (difference " + std::to_string(i) + " is " +
                      to_string(vals[0]) + ")");
    out.push_back(vals[0].get_num());
    for (std::size_t k = 0; k + 1 < vals.size(); ++k) vals[k] = vals[k + 1] - vals[k];
    vals.pop_back();
  }
  return out;
}

DynSeq seq_lambda_poly_exponent(const FieldElement& lambda, const UPoly& P) {
  std::vector<Integer> c = binomial_coefficients(P);
  const std::size_t d = std::max<std::size_t>(c.size() - 1, 1);
  c.resize(d + 1, Integer(0));
  if (lambda.is_zero() && std::any_of(c.begin(), c.end(), [](const Integer& v) { return v < 0; }))
    throw Error(ErrorKind::ZeroBaseNegativeExponent, "negative binomial coefficient with base 0");
  const FieldPtr& F = lambda.field();
  RingPtr r = numbered_ring(F, "u", d);
  std::vector<RatFunc> map{var(r, 0).scaled(lambda.value())};
  for (std::size_t i = 1; i < d; ++i) map.push_back(var(r, i) * var(r, i - 1));
  Monomial num(d), den(d);
  for (std::size_t i = 1; i <= d; ++i) {
    if (!c[i].fits_ulong_p() && c[i] > 0) throw Error(ErrorKind::SizeLimitExceeded, "exponent too large");
    if (c[i] > 0) num.set(i - 1, static_cast<std::uint32_t>(c[i].get_ui()));
    if (c[i] < 0) den.set(i - 1, static_cast<std::uint32_t>(Integer(-c[i]).get_ui()));
  }
  FieldElement scale = lambda.is_zero() && c[0] == 0 ? FieldElement(F, 1L) : lambda.pow(c[0].get_si());
  RatFunc obs(MultiPoly(r, {Term{num, scale.value()}}), MultiPoly(r, {Term{den, F->one()}}));
  std::vector<FieldElement> point(d, FieldElement(F, 1L));
  return DynSeq({}, make_geometric_data(r, std::move(map), std::move(point), std::move(obs)));
}

unsigned ExpPolyData::M() const {
  unsigned m = 0;
  for (const auto& e : entries) m = std::max(m, e.j);
  return m;
}

DynSeq seq_exp_poly_subsequence(const FieldPtr& F, const ExpPolyData& data, const SubsequenceMode& mode) {
  for (const auto& e : data.entries)
    if (!same_field(e.lambda.field(), F) || !same_field(e.c.field(), F))
      throw Error(ErrorKind::DescriptorMismatch, "exponential-polynomial data over a different field");
  const FieldElement one(F, 1L);

  // index(n) = d^n or P(n), and lambda^index(n).
  auto index_minus = [&](long k) -> DynSeq {
    if (const auto* p = std::get_if<PowerOfD>(&mode)) {
      if (p->d == 0) throw Error(ErrorKind::InvalidArgument, "power base must be positive");
      DynSeq pw = seq_from_linear_recurrence({FieldElement(F, static_cast<long>(p->d))}, {one});
      return k == 0 ? pw : seq_sum(pw, seq_constant(F, FieldElement(F, -k)));
    }
    const UPoly& P = std::get<PolynomialIndex>(mode).P;
    binomial_coefficients(P);
    RingPtr r = make_ring(F, VarTable({"n"}));
    MultiPoly obs(r);
    MultiPoly x = MultiPoly::variable(r, 0);
    MultiPoly xp = MultiPoly::constant(r, Rational(1));
    for (const auto& q : P.coeffs()) {
      obs = obs + xp.scaled(F->from_rational(q));
      xp = xp * x;
    }
    obs = obs - MultiPoly::constant(r, Rational(k));
    return DynSeq({}, make_geometric_data(r, {var(r, 0) + cst(r, F->one())}, {FieldElement(F, 0L)}, RatFunc(obs)));
  };
  auto lambda_power = [&](const FieldElement& lambda) -> DynSeq {
    if (const auto* p = std::get_if<PowerOfD>(&mode)) return seq_lambda_power_tower(lambda, p->d);
    return seq_lambda_poly_exponent(lambda, std::get<PolynomialIndex>(mode).P);
  };

  std::optional<DynSeq> total;
  for (const auto& e : data.entries) {
    if (e.c.is_zero()) continue;
    // C(index, j) = prod_{k<j} (index - k) / j!
    Rational fact(1);
    for (unsigned k = 2; k <= e.j; ++k) fact *= k;
    std::optional<DynSeq> binom;
    for (unsigned k = 0; k < e.j; ++k) {
      DynSeq f = index_minus(k);
      binom = binom ? seq_product(*binom, f) : f;
    }
    FieldElement scale = e.c * FieldElement(F, Rational(Rational(1) / fact));
    DynSeq term = seq_scale(lambda_power(e.lambda), scale);
    if (binom) term = seq_product(*binom, term);
    total = total ? seq_sum(*total, term) : term;
  }
  if (!total) return seq_constant(F, FieldElement(F, 0L));
  return *total;
}

}  // namespace dynseq

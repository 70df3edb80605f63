#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dynseq/error.hpp"

namespace dynseq {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
std::string to_string(const Rational& q);

/// Dense univariate polynomial over Q. Coefficients are stored in ascending
/// order with no trailing zeros; the zero polynomial is the empty vector.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> ascending);
  static UPoly constant(const Rational& c);
  static UPoly monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Rational& lead() const { return coeffs_.back(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly scaled(const Rational& c) const;
  UPoly monic() const;
  UPoly derivative() const;
  Rational eval(const Rational& x) const;

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(std::string_view var) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Quotient and remainder; throws DivisionByZero for a zero divisor.
void divmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem);
// Monic gcd (zero when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
// Returns g = gcd(a, b) (monic) and s with s*a = g mod b.
UPoly xgcd_inverse_part(const UPoly& a, const UPoly& b, UPoly& g);

/// Element payload of Q[alpha]/(m(alpha)), reduced modulo m.
struct AlgNum {
  UPoly rep;
  friend bool operator==(const AlgNum&, const AlgNum&) = default;
};

/// Element payload of Q(t): num/den with den monic and gcd(num, den) = 1.
struct QtFrac {
  UPoly num;
  UPoly den;
  friend bool operator==(const QtFrac&, const QtFrac&) = default;
};

using Scalar = std::variant<Rational, AlgNum, QtFrac>;

/// One of Q, Q[alpha]/(m(alpha)) or Q(t). Descriptors are immutable and
/// shared; the arithmetic on raw Scalar payloads lives here so that polynomial
/// code can hold one descriptor per ring instead of one per coefficient.
class FieldDescriptor {
 public:
  enum class Kind { Rationals, AlgebraicExtension, RationalFunctions };

  static std::shared_ptr<const FieldDescriptor> rationals();
  // `minpoly` is ascending; it must be monic, of degree >= 2 and squarefree.
  static std::shared_ptr<const FieldDescriptor> algebraic(std::string generator, std::vector<Rational> minpoly);
  static std::shared_ptr<const FieldDescriptor> rational_functions(std::string variable);

  Kind kind() const { return kind_; }
  // Generator or transcendental name; empty for Q.
  const std::string& symbol() const { return symbol_; }
  const UPoly& minpoly() const { return minpoly_; }
  std::size_t extension_degree() const;

  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
    return a.kind_ == b.kind_ && a.symbol_ == b.symbol_ && a.minpoly_ == b.minpoly_;
  }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_rational(const Rational& q) const;
  Scalar generator() const;  // alpha or t; throws for Q

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  Scalar pow(const Scalar& a, long e) const;

  // Returns the canonical form of an arbitrary payload of the right variant.
  Scalar normalize(Scalar a) const;
  std::string to_string(const Scalar& a) const;
  std::string describe() const;

 private:
  FieldDescriptor() = default;
  Kind kind_ = Kind::Rationals;
  std::string symbol_;
  UPoly minpoly_;
};

using FieldPtr = std::shared_ptr<const FieldDescriptor>;

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// An exact element together with its field.
class FieldElement {
 public:
  FieldElement() : FieldElement(FieldDescriptor::rationals(), Rational(0)) {}
  FieldElement(FieldPtr field, Scalar value);
  FieldElement(FieldPtr field, const Rational& q);
  FieldElement(FieldPtr field, long q) : FieldElement(std::move(field), Rational(q)) {}

  const FieldPtr& field() const { return field_; }
  const Scalar& value() const { return value_; }

  bool is_zero() const { return field_->is_zero(value_); }
  bool is_one() const { return field_->is_one(value_); }

  // Power-basis coordinates (length = extension degree) for algebraic
  // elements; throws InvalidArgument for other fields.
  std::vector<Rational> coordinates() const;
  const Rational& rational() const;

  FieldElement operator-() const { return {field_, field_->neg(value_)}; }
  FieldElement inverse() const { return {field_, field_->inv(value_)}; }
  FieldElement pow(long e) const { return {field_, field_->pow(value_, e)}; }
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  std::string to_string() const { return field_->to_string(value_); }

 private:
  FieldPtr field_;
  Scalar value_;
};

FieldElement field_add(const FieldElement& a, const FieldElement& b);
FieldElement field_mul(const FieldElement& a, const FieldElement& b);
FieldElement field_neg(const FieldElement& a);
FieldElement field_inv(const FieldElement& a);

}  // namespace dynseq

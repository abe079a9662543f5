#pragma once

// Exact coefficient fields: the rationals Q, prime fields F_p, and the
// rational function field Q(t). All arithmetic is exact; there is no
// floating point anywhere in this library.

#include <cstdint>
#include <gmpxx.h>

#include <string>
#include <variant>
#include <vector>

#include "sepforge/errors.hpp"

namespace sepforge {

enum class FieldKind { Rationals, PrimeField, RationalFunctions };

class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
  static FieldSpec prime_field(std::int64_t p);  // p prime, 2 <= p < 2^31
  static FieldSpec rational_functions() {
    return FieldSpec(FieldKind::RationalFunctions, 0);
  }

  FieldKind kind() const { return kind_; }
  std::int64_t prime() const { return p_; }
  std::int64_t characteristic() const {
    return kind_ == FieldKind::PrimeField ? p_ : 0;
  }
  std::string name() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) {
    return !(a == b);
  }

 private:
  FieldSpec(FieldKind kind, std::int64_t p) : kind_(kind), p_(p) {}
  FieldKind kind_;
  std::int64_t p_;
};

// Polynomial in t with integer coefficients; coeffs_[i] is the coefficient
// of t^i and the top coefficient is nonzero (zero polynomial = empty).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  static IntPoly constant(mpz_class c);
  static IntPoly variable();  // t

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  mpz_class coeff(int i) const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const mpz_class& leading() const { return coeffs_.back(); }

  mpz_class content() const;  // gcd of coefficients, >= 0; 0 for the zero poly
  IntPoly primitive_part() const;

  std::string str() const;  // e.g. "t^2 + 1", "2*t - 3", "0"

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) {
    return !(a == b);
  }

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

IntPoly divexact(const IntPoly& a, const IntPoly& b);
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);  // positive leading coeff

// Reduced fraction of integer polynomials in t. Canonical form: den != 0,
// gcd(num, den) = 1 in Z[t], gcd(content(num), content(den)) = 1, and the
// denominator has positive leading coefficient. Equality of representations
// is then equality of values.
class RatFunc {
 public:
  RatFunc() : den_(IntPoly::constant(1)) {}  // zero
  RatFunc(IntPoly num, IntPoly den);         // canonicalizes; den != 0
  static RatFunc from_rational(const mpq_class& q);
  static RatFunc variable() { return RatFunc(IntPoly::variable(), IntPoly::constant(1)); }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  mpq_class constant_value() const;  // requires is_constant()

  std::string str() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const;
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

 private:
  IntPoly num_, den_;
};

// One exact scalar, tagged with its field. Immutable after construction.
class FieldElement {
 public:
  FieldElement() : spec_(FieldSpec::rationals()), v_(mpq_class(0)) {}

  static FieldElement zero(const FieldSpec& spec);
  static FieldElement one(const FieldSpec& spec);
  static FieldElement from_integer(const FieldSpec& spec, const mpz_class& n);
  static FieldElement rational(const mpq_class& q);              // over Q
  static FieldElement residue(const FieldSpec& spec, std::int64_t r);  // over F_p
  static FieldElement rational_function(RatFunc f);              // over Q(t)
  static FieldElement t();  // the variable of Q(t)

  const FieldSpec& spec() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& as_rational() const { return std::get<mpq_class>(v_); }
  std::int64_t as_residue() const { return std::get<std::int64_t>(v_); }
  const RatFunc& as_rational_function() const { return std::get<RatFunc>(v_); }

  FieldElement inverse() const;  // throws DivisionByZero on 0
  std::string str() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
  }

 private:
  FieldElement(FieldSpec spec, std::variant<mpq_class, std::int64_t, RatFunc> v)
      : spec_(spec), v_(std::move(v)) {}
  static void require_same_spec(const FieldElement& a, const FieldElement& b);

  FieldSpec spec_;
  std::variant<mpq_class, std::int64_t, RatFunc> v_;
};

// True iff a lies in the prime subfield of its field: always for Q and F_p,
// and for Q(t) exactly when a reduces to a constant.
bool is_prime_field_element(const FieldElement& a);

// Coefficients of denominator_clear * a by powers of t (index = power), as
// exact rationals. Requires a over Q(t) and denominator_clear a polynomial
// in t; throws NotPolynomialAfterClearing if the product still has a
// nontrivial denominator. The zero element expands to an empty vector.
std::vector<mpq_class> expand_in_t(const FieldElement& a,
                                   const FieldElement& denominator_clear);

}  // namespace sepforge

#include "sepforge/field.hpp"

#include <sstream>
#include <utility>

namespace sepforge {

namespace {

bool is_small_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

// Extended Euclid; r must be nonzero mod p.
std::int64_t mod_inverse(std::int64_t r, std::int64_t p) {
  std::int64_t a = r, b = p, u = 1, v = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    a -= q * b;
    std::swap(a, b);
    u -= q * v;
    std::swap(u, v);
  }
  return mod_norm(u, p);
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_small_prime(p))
    throw SpecMismatch("prime field modulus must be a prime < 2^31, got " +
                       std::to_string(p));
  return FieldSpec(FieldKind::PrimeField, p);
}

std::string FieldSpec::name() const {
  switch (kind_) {
    case FieldKind::Rationals:
      return "Q";
    case FieldKind::PrimeField:
      return "F" + std::to_string(p_);
    case FieldKind::RationalFunctions:
      return "Q(t)";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(mpz_class c) {
  IntPoly p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

IntPoly IntPoly::variable() {
  IntPoly p;
  p.coeffs_ = {0, 1};
  return p;
}

mpz_class IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  std::vector<mpz_class> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c / g);
  return IntPoly(std::move(out));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly IntPoly::operator-() const {
  std::vector<mpz_class> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(-c);
  return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(out));
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return {};
  std::vector<mpz_class> rem = a.coeffs();
  std::vector<mpz_class> quot(a.degree() - b.degree() + 1, 0);
  for (int d = a.degree(); d >= b.degree();) {
    mpz_class q = rem[d] / b.leading();
    int shift = d - b.degree();
    quot[shift] = q;
    for (int i = 0; i <= b.degree(); ++i) rem[shift + i] -= q * b.coeff(i);
    while (d >= 0 && rem[d] == 0) --d;
    if (d >= 0 && d < b.degree()) break;
  }
  return IntPoly(std::move(quot));
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int shift = a.degree() - b.degree();
    std::vector<mpz_class> scaled(a.coeffs().size(), 0);
    for (size_t i = 0; i < a.coeffs().size(); ++i)
      scaled[i] = a.coeffs()[i] * b.leading();
    mpz_class top = a.leading();
    for (int i = 0; i <= b.degree(); ++i) scaled[shift + i] -= top * b.coeff(i);
    a = IntPoly(std::move(scaled));
  }
  return a;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.leading() < 0 ? -b : b;
  if (b.is_zero()) return a.leading() < 0 ? -a : a;
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  // Primitive PRS on the primitive parts.
  IntPoly u = a.primitive_part(), v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPoly r = pseudo_rem(u, v);
    u = std::move(v);
    v = r.is_zero() ? IntPoly() : r.primitive_part();
  }
  IntPoly g = IntPoly::constant(c) * u;
  return g.leading() < 0 ? -g : g;
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool show_coeff = (mag != 1) || (i == 0);
    if (show_coeff) os << mag.get_str();
    if (i > 0) {
      if (show_coeff) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(IntPoly num, IntPoly den) {
  if (den.is_zero()) throw DivisionByZero("rational function with denominator 0");
  if (num.is_zero()) {
    num_ = IntPoly();
    den_ = IntPoly::constant(1);
    return;
  }
  IntPoly g = poly_gcd(num, den);
  num = divexact(num, g);
  den = divexact(den, g);
  if (den.leading() < 0) {
    num = -num;
    den = -den;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RatFunc RatFunc::from_rational(const mpq_class& q) {
  return RatFunc(IntPoly::constant(q.get_num()), IntPoly::constant(q.get_den()));
}

mpq_class RatFunc::constant_value() const {
  mpq_class q(num_.coeff(0), den_.coeff(0));
  q.canonicalize();
  return q;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZero();
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::string RatFunc::str() const {
  if (den_.degree() == 0 && den_.coeff(0) == 1) return num_.str();
  std::ostringstream os;
  os << "(" << num_.str() << ")/(" << den_.str() << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// FieldElement

void FieldElement::require_same_spec(const FieldElement& a,
                                     const FieldElement& b) {
  if (a.spec_ != b.spec_)
    throw SpecMismatch("field mismatch: " + a.spec_.name() + " vs " +
                       b.spec_.name());
}

FieldElement FieldElement::zero(const FieldSpec& spec) {
  return from_integer(spec, 0);
}

FieldElement FieldElement::one(const FieldSpec& spec) {
  return from_integer(spec, 1);
}

FieldElement FieldElement::from_integer(const FieldSpec& spec,
                                        const mpz_class& n) {
  switch (spec.kind()) {
    case FieldKind::Rationals:
      return FieldElement(spec, mpq_class(n));
    case FieldKind::PrimeField: {
      mpz_class r = n % spec.prime();
      std::int64_t v = r.get_si();
      return FieldElement(spec, mod_norm(v, spec.prime()));
    }
    case FieldKind::RationalFunctions:
      return FieldElement(spec, RatFunc(IntPoly::constant(n), IntPoly::constant(1)));
  }
  throw SpecMismatch("unknown field kind");
}

FieldElement FieldElement::rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return FieldElement(FieldSpec::rationals(), std::move(c));
}

FieldElement FieldElement::residue(const FieldSpec& spec, std::int64_t r) {
  if (spec.kind() != FieldKind::PrimeField)
    throw SpecMismatch("residue() needs a prime field spec");
  return FieldElement(spec, mod_norm(r, spec.prime()));
}

FieldElement FieldElement::rational_function(RatFunc f) {
  return FieldElement(FieldSpec::rational_functions(), std::move(f));
}

FieldElement FieldElement::t() {
  return rational_function(RatFunc::variable());
}

bool FieldElement::is_zero() const {
  switch (spec_.kind()) {
    case FieldKind::Rationals:
      return as_rational() == 0;
    case FieldKind::PrimeField:
      return as_residue() == 0;
    case FieldKind::RationalFunctions:
      return as_rational_function().is_zero();
  }
  return false;
}

bool FieldElement::is_one() const { return *this == one(spec_); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  FieldElement::require_same_spec(a, b);
  switch (a.spec_.kind()) {
    case FieldKind::Rationals:
      return FieldElement(a.spec_, mpq_class(a.as_rational() + b.as_rational()));
    case FieldKind::PrimeField:
      return FieldElement(a.spec_,
                          mod_norm(a.as_residue() + b.as_residue(), a.spec_.prime()));
    case FieldKind::RationalFunctions:
      return FieldElement(a.spec_, a.as_rational_function() + b.as_rational_function());
  }
  throw SpecMismatch("unknown field kind");
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return a + (-b);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldElement::require_same_spec(a, b);
  switch (a.spec_.kind()) {
    case FieldKind::Rationals:
      return FieldElement(a.spec_, mpq_class(a.as_rational() * b.as_rational()));
    case FieldKind::PrimeField:
      return FieldElement(a.spec_,
                          mod_norm(a.as_residue() * b.as_residue(), a.spec_.prime()));
    case FieldKind::RationalFunctions:
      return FieldElement(a.spec_, a.as_rational_function() * b.as_rational_function());
  }
  throw SpecMismatch("unknown field kind");
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  FieldElement::require_same_spec(a, b);
  return a * b.inverse();
}

FieldElement FieldElement::operator-() const {
  switch (spec_.kind()) {
    case FieldKind::Rationals:
      return FieldElement(spec_, mpq_class(-as_rational()));
    case FieldKind::PrimeField:
      return FieldElement(spec_, mod_norm(-as_residue(), spec_.prime()));
    case FieldKind::RationalFunctions:
      return FieldElement(spec_, -as_rational_function());
  }
  throw SpecMismatch("unknown field kind");
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  switch (spec_.kind()) {
    case FieldKind::Rationals:
      return FieldElement(spec_, mpq_class(1 / as_rational()));
    case FieldKind::PrimeField:
      return FieldElement(spec_, mod_inverse(as_residue(), spec_.prime()));
    case FieldKind::RationalFunctions: {
      const RatFunc& f = as_rational_function();
      return FieldElement(spec_, RatFunc(f.den(), f.num()));
    }
  }
  throw SpecMismatch("unknown field kind");
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.spec_ != b.spec_) return false;
  return a.v_ == b.v_;
}

std::string FieldElement::str() const {
  switch (spec_.kind()) {
    case FieldKind::Rationals:
      return as_rational().get_str();
    case FieldKind::PrimeField:
      return std::to_string(as_residue());
    case FieldKind::RationalFunctions:
      return as_rational_function().str();
  }
  return "?";
}

bool is_prime_field_element(const FieldElement& a) {
  switch (a.spec().kind()) {
    case FieldKind::Rationals:
    case FieldKind::PrimeField:
      return true;
    case FieldKind::RationalFunctions:
      return a.as_rational_function().is_constant();
  }
  return false;
}

std::vector<mpq_class> expand_in_t(const FieldElement& a,
                                   const FieldElement& denominator_clear) {
  if (a.spec().kind() != FieldKind::RationalFunctions ||
      denominator_clear.spec().kind() != FieldKind::RationalFunctions)
    throw SpecMismatch("expand_in_t needs Q(t) elements");
  const RatFunc& clear = denominator_clear.as_rational_function();
  if (clear.den().degree() != 0)
    throw NotPolynomialAfterClearing("denominator_clear is not a polynomial");
  RatFunc prod = a.as_rational_function() * clear;
  if (prod.den().degree() != 0)
    throw NotPolynomialAfterClearing("product " + prod.str() +
                                     " is not a polynomial in t");
  std::vector<mpq_class> out;
  out.reserve(prod.num().degree() + 1);
  for (int i = 0; i <= prod.num().degree(); ++i) {
    mpq_class q(prod.num().coeff(i), prod.den().coeff(0));
    q.canonicalize();
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace sepforge

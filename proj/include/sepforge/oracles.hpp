#pragma once

// Brute-force ideal families with independently implemented membership
// tests. These verify separator outputs; nothing here shares code with the
// construction algorithms beyond the linear algebra layer.
//
// Families shipped per presentation:
//   CommPoly  — monomial ideals closed under the declared derivations
//   Jacobson  — the complete nonzero ideal lattice: the socle plus the
//               preimages of Laurent-polynomial ideals under
//               pi: y -> z, x -> z^{-1} (normal form y^i x^j -> z^{i-j})
//   Weyl, MatrixAlg — simple algebras: only (0) and (1)
//   any       — degree-truncated two-sided ideal spans for membership of
//               bounded-degree elements

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sepforge/algebra.hpp"
#include "sepforge/separator.hpp"
#include "sepforge/subspace.hpp"

namespace sepforge {

// Finite-support Laurent polynomial in z over the algebra's field.
class LaurentPoly {
 public:
  explicit LaurentPoly(FieldSpec spec) : spec_(std::move(spec)) {}

  const FieldSpec& spec() const { return spec_; }
  bool is_zero() const { return c_.empty(); }
  void add(int power, const FieldElement& coeff);
  const std::map<int, FieldElement>& coeffs() const { return c_; }

  std::string str() const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.spec_ == b.spec_ && a.c_ == b.c_;
  }

 private:
  FieldSpec spec_;
  std::map<int, FieldElement> c_;  // power -> nonzero coefficient
};

// The quotient map of the Jacobson algebra onto K[z, z^-1].
LaurentPoly jacobson_pi(const AlgebraElement& a);

// True iff divisor | dividend in K[z, z^-1] (units are c z^k).
bool laurent_divides(const LaurentPoly& divisor, const LaurentPoly& dividend);

// ---- Ideal descriptors ----

struct ZeroIdeal {
  AlgebraRef alg;
};

struct UnitIdeal {
  AlgebraRef alg;
};

// Ideal of a polynomial ring generated by monomials; generators form an
// antichain under divisibility. Membership is decided monomial by monomial
// through divisibility, independent of any linear algebra.
class MonomialDiffIdeal {
 public:
  MonomialDiffIdeal(AlgebraRef alg, std::vector<Word> generators);
  const AlgebraRef& algebra() const { return alg_; }
  const std::vector<Word>& generators() const { return gens_; }
  bool contains_word(const Word& w) const;

 private:
  AlgebraRef alg_;
  std::vector<Word> gens_;  // sorted, antichain
};

class JacobsonIdeal {
 public:
  enum class Kind { Socle, Preimage };

  static JacobsonIdeal socle(AlgebraRef alg);
  static JacobsonIdeal preimage(AlgebraRef alg, LaurentPoly f);

  Kind kind() const { return kind_; }
  const AlgebraRef& algebra() const { return alg_; }
  const LaurentPoly& parameter() const { return f_; }

 private:
  JacobsonIdeal(AlgebraRef alg, Kind kind, LaurentPoly f)
      : alg_(std::move(alg)), kind_(kind), f_(std::move(f)) {}
  AlgebraRef alg_;
  Kind kind_;
  LaurentPoly f_;
};

// Degree-truncated two-sided ideal: the span of all products u g w with g a
// generator and nominal degree deg u + deg g + deg w <= degree_bound.
// Membership answers are valid for elements of degree <= degree_bound; in
// algebras whose products can drop degree the span is a conservative
// under-approximation of the true truncated ideal.
class TruncatedIdeal {
 public:
  TruncatedIdeal(AlgebraRef alg, std::vector<AlgebraElement> generators,
                 int degree_bound);
  const AlgebraRef& algebra() const { return alg_; }
  const std::vector<AlgebraElement>& generators() const { return gens_; }
  int degree_bound() const { return bound_; }
  const Subspace& span() const { return span_; }

 private:
  AlgebraRef alg_;
  std::vector<AlgebraElement> gens_;
  int bound_;
  Subspace span_;
};

using IdealDescriptor =
    std::variant<ZeroIdeal, UnitIdeal, MonomialDiffIdeal, JacobsonIdeal,
                 TruncatedIdeal>;

const AlgebraRef& ideal_algebra(const IdealDescriptor& ideal);
std::string ideal_str(const IdealDescriptor& ideal);

bool ideal_contains(const IdealDescriptor& ideal, const AlgebraElement& a);
bool ideal_meets_subspace(const IdealDescriptor& ideal, const Subspace& V);

// ---- Family construction ----

// All monomial ideals of a polynomial ring whose minimal generators have
// degree <= gen_degree_bound, ordered by generator count then generators.
// The unit ideal (1) comes first.
std::vector<MonomialDiffIdeal> enumerate_monomial_ideals(const AlgebraRef& alg,
                                                         int gen_degree_bound);

// True iff D(m) lies in I for every generator monomial m and every D; for
// monomial ideals this is exact (Leibniz pushes closure to generators).
bool diff_closure_check(const MonomialDiffIdeal& I,
                        const std::vector<Derivation>& Ds);

// Socle plus Preimage(f) for every f over the coefficient grid with support
// width <= width, normalized to constant term 1; deduplicated and
// deterministic. The zero ideal is prepended.
std::vector<IdealDescriptor> jacobson_ideal_family(
    const AlgebraRef& alg, const std::vector<FieldElement>& coeff_grid,
    int width);
std::vector<IdealDescriptor> jacobson_default_family(const AlgebraRef& alg);

// ---- Verification ----

struct IdealCheck {
  std::string ideal;
  bool meets_subspace = false;
  std::optional<std::string> witness;    // element found inside the ideal
  std::optional<std::string> violation;  // explanation when the check fails
};

struct VerificationReport {
  std::vector<IdealCheck> checks;
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

// For each ideal meeting V: DiffProduct requires the single output element
// to be a member; ModList requires some output element to be a member.
VerificationReport verify_separation(const SeparationResult& result,
                                     const std::vector<IdealDescriptor>& family,
                                     const Subspace& V);

// At every internal trace node and every family ideal: meeting V implies
// meeting the kernel part or the image part. Returns violation messages.
std::vector<std::string> check_var_coverage(
    const TraceNode& trace, const std::vector<IdealDescriptor>& family);

// ---- Prime-field witness ----

// Nonzero element with prime-subfield coefficients inside the two-sided
// ideal generated by `generators`, searched within the degree truncation.
// Over Q(t): membership of an unknown rational-coefficient combination is
// expanded in powers of t into an exact rational linear system; the witness
// is the canonical kernel vector scaled to coprime integer coefficients
// with positive leading coefficient. Absence at a bound is not a disproof.
std::optional<AlgebraElement> prime_field_witness(
    const AlgebraRef& alg, const std::vector<AlgebraElement>& generators,
    int degree_bound);

}  // namespace sepforge

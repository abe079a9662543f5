#include <random>
#include <set>

#include "doctest.h"
#include "sepforge/errors.hpp"
#include "sepforge/oracles.hpp"
#include "sepforge/parse.hpp"

using namespace sepforge;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

LaurentPoly laurent_of(const FieldSpec& spec, const std::map<int, int>& coeffs) {
  LaurentPoly f(spec);
  for (const auto& [power, c] : coeffs)
    f.add(power, FieldElement::from_integer(spec, c));
  return f;
}

AlgebraElement random_jacobson(const AlgebraRef& jac, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Word> words = jac->words_up_to_degree(3);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  AlgebraElement out = AlgebraElement::zero(jac);
  for (int i = 0; i < 3; ++i)
    out.add_term(words[pick(rng)], FieldElement::from_integer(kQ, coeff(rng)));
  return out;
}

}  // namespace

TEST_SUITE("oracles") {

TEST_CASE("quotient map onto Laurent polynomials") {
  AlgebraRef jac = AlgebraPresentation::jacobson(kQ);
  CHECK(jacobson_pi(parse_element(jac, "y*x^2 - x")).is_zero());
  CHECK(jacobson_pi(parse_element(jac, "1 - y*x")).is_zero());
  LaurentPoly py = jacobson_pi(AlgebraElement::generator(jac, 1));
  CHECK(py == laurent_of(kQ, {{1, 1}}));
  LaurentPoly px = jacobson_pi(AlgebraElement::generator(jac, 0));
  CHECK(px == laurent_of(kQ, {{-1, 1}}));

  std::mt19937 rng(307);
  for (int i = 0; i < 15; ++i) {
    AlgebraElement a = random_jacobson(jac, rng);
    AlgebraElement b = random_jacobson(jac, rng);
    CHECK(jacobson_pi(a * b) == jacobson_pi(a) * jacobson_pi(b));
    CHECK(jacobson_pi(a + b) == jacobson_pi(a) + jacobson_pi(b));
  }
}

TEST_CASE("laurent divisibility") {
  LaurentPoly zm1 = laurent_of(kQ, {{1, 1}, {0, -1}});       // z - 1
  LaurentPoly z2m1 = laurent_of(kQ, {{2, 1}, {0, -1}});      // z^2 - 1
  LaurentPoly zp2 = laurent_of(kQ, {{1, 1}, {0, 2}});        // z + 2
  LaurentPoly unit = laurent_of(kQ, {{-3, 2}});              // 2 z^-3
  LaurentPoly zero(kQ);
  CHECK(laurent_divides(zm1, z2m1));
  CHECK_FALSE(laurent_divides(z2m1, zm1));
  CHECK_FALSE(laurent_divides(zp2, zm1));
  CHECK(laurent_divides(unit, zm1));
  CHECK(laurent_divides(zm1, zero));
  CHECK_FALSE(laurent_divides(zero, zm1));
  CHECK(laurent_divides(zero, zero));
  // Laurent units absorb z-shifts: z(z - 1) is a multiple of z - 1 and
  // vice versa.
  LaurentPoly shifted = laurent_of(kQ, {{2, 1}, {1, -1}});
  CHECK(laurent_divides(zm1, shifted));
  CHECK(laurent_divides(shifted, zm1));
}

TEST_CASE("monomial ideals reduce generators to an antichain") {
  AlgebraRef poly = AlgebraPresentation::comm_poly(2, kQ);
  MonomialDiffIdeal i(poly, {Word{0}, Word{0, 0}, Word{0, 1}});
  REQUIRE(i.generators().size() == 1);
  CHECK(i.generators()[0] == Word{0});
  CHECK(i.contains_word(Word{0, 0, 1}));
  CHECK_FALSE(i.contains_word(Word{1, 1}));
  CHECK_FALSE(i.contains_word(Word{}));

  IdealDescriptor d = MonomialDiffIdeal(poly, {Word{0, 0}});
  CHECK(ideal_str(d) == "(x^2)");
  CHECK(ideal_contains(d, parse_element(poly, "x^4")));
  CHECK(ideal_contains(d, parse_element(poly, "x^2*y + x^3")));
  CHECK_FALSE(ideal_contains(d, parse_element(poly, "x^2 + x")));
}

TEST_CASE("monomial ideal enumeration") {
  AlgebraRef p1 = AlgebraPresentation::comm_poly(1, kQ);
  auto ideals1 = enumerate_monomial_ideals(p1, 3);
  REQUIRE(ideals1.size() == 4);
  CHECK(ideal_str(ideals1[0]) == "(1)");
  CHECK(ideal_str(ideals1[1]) == "(x)");
  CHECK(ideal_str(ideals1[2]) == "(x^2)");
  CHECK(ideal_str(ideals1[3]) == "(x^3)");

  AlgebraRef p2 = AlgebraPresentation::comm_poly(2, kQ);
  auto ideals2 = enumerate_monomial_ideals(p2, 1);
  REQUIRE(ideals2.size() == 4);
  CHECK(ideal_str(ideals2[0]) == "(1)");
  CHECK(ideal_str(ideals2[1]) == "(x)");
  CHECK(ideal_str(ideals2[2]) == "(y)");
  CHECK(ideal_str(ideals2[3]) == "(x, y)");

  auto ideals = enumerate_monomial_ideals(p2, 2);
  std::set<std::string> names;
  for (const auto& i : ideals) {
    names.insert(ideal_str(i));
    const auto& gens = i.generators();
    for (std::size_t a = 0; a < gens.size(); ++a)
      for (std::size_t b = 0; b < gens.size(); ++b)
        if (a != b) {
          MonomialDiffIdeal single(p2, {gens[a]});
          CHECK_FALSE(single.contains_word(gens[b]));
        }
  }
  CHECK(names.size() == ideals.size());
}

TEST_CASE("differential closure of monomial ideals") {
  AlgebraRef p1 = AlgebraPresentation::comm_poly(1, kQ);
  AlgebraElement x = AlgebraElement::generator(p1, 0);
  Derivation euler(p1, {x});
  Derivation ddx(p1, {AlgebraElement::one(p1)});
  for (int k = 1; k <= 3; ++k) {
    MonomialDiffIdeal i(p1, {Word(k, 0)});
    CHECK(diff_closure_check(i, {euler}));
    if (k == 1) CHECK_FALSE(diff_closure_check(i, {ddx}));
  }
  MonomialDiffIdeal unit(p1, {Word{}});
  CHECK(diff_closure_check(unit, {ddx}));
}

TEST_CASE("jacobson ideal membership") {
  AlgebraRef jac = AlgebraPresentation::jacobson(kQ);
  IdealDescriptor socle = JacobsonIdeal::socle(jac);
  CHECK(ideal_str(socle) == "Socle");
  CHECK(ideal_contains(socle, parse_element(jac, "y*x^2 - x")));
  CHECK(ideal_contains(socle, parse_element(jac, "1 - y*x")));
  CHECK_FALSE(ideal_contains(socle, AlgebraElement::generator(jac, 0)));
  CHECK(ideal_contains(socle, AlgebraElement::zero(jac)));

  LaurentPoly f = laurent_of(kQ, {{0, 1}, {1, 1}});  // 1 + z
  IdealDescriptor pre = JacobsonIdeal::preimage(jac, f);
  CHECK(ideal_contains(pre, parse_element(jac, "y + 1")));
  CHECK_FALSE(ideal_contains(pre, parse_element(jac, "y - 1")));
  // Preimage ideals contain every element with zero image.
  CHECK(ideal_contains(pre, parse_element(jac, "y*x^2 - x")));
  CHECK(ideal_contains(pre, parse_element(jac, "1 - y*x")));
}

TEST_CASE("meets tests against pinned subspaces") {
  AlgebraRef p1 = AlgebraPresentation::comm_poly(1, kQ);
  IdealDescriptor x2 = MonomialDiffIdeal(p1, {Word{0, 0}});
  CHECK(ideal_meets_subspace(x2, degree_filtration(p1, 2)));
  CHECK_FALSE(ideal_meets_subspace(x2, degree_filtration(p1, 1)));

  AlgebraRef jac = AlgebraPresentation::jacobson(kQ);
  Subspace v = Subspace::span(
      jac, {AlgebraElement::one(jac), parse_element(jac, "y*x")});
  CHECK(ideal_meets_subspace(JacobsonIdeal::socle(jac), v));
  CHECK_FALSE(ideal_meets_subspace(
      JacobsonIdeal::socle(jac),
      Subspace::span(jac, {AlgebraElement::generator(jac, 0)})));
  CHECK(ideal_meets_subspace(ZeroIdeal{jac}, v) == false);
  CHECK(ideal_meets_subspace(UnitIdeal{jac}, v));
}

TEST_CASE("truncated ideal spans bounded-degree products") {
  AlgebraRef free2 = AlgebraPresentation::free_algebra(2, kQ);
  AlgebraElement x = AlgebraElement::generator(free2, 0);
  IdealDescriptor i = TruncatedIdeal(free2, {x}, 3);
  CHECK(ideal_str(i) == "Truncated(x; deg <= 3)");
  CHECK(ideal_contains(i, parse_element(free2, "y*x")));
  CHECK_FALSE(ideal_contains(i, AlgebraElement::generator(free2, 1)));
  CHECK(ideal_contains(i, parse_element(free2, "x*y*x - y*x^2")));
  CHECK_THROWS_AS(ideal_contains(i, parse_element(free2, "x^4")),
                  DegreeBoundExceeded);
  CHECK_THROWS_AS(TruncatedIdeal(free2, {AlgebraElement::zero(free2)}, 2),
                  ZeroElement);
}

TEST_CASE("jacobson family enumerates the default laurent grid") {
  AlgebraRef jac = AlgebraPresentation::jacobson(kQ);
  auto family = jacobson_default_family(jac);
  // Zero, Socle, and 9 normalized parameters 1 + a z + b z^2.
  REQUIRE(family.size() == 11);
  CHECK(ideal_str(family[0]) == "(0)");
  CHECK(ideal_str(family[1]) == "Socle");
  std::set<std::string> names;
  for (const auto& i : family) names.insert(ideal_str(i));
  CHECK(names.size() == family.size());
}

TEST_CASE("verification passes the pinned separation runs") {
  AlgebraRef p1 = AlgebraPresentation::comm_poly(1, kQ);
  AlgebraElement x = AlgebraElement::generator(p1, 0);
  Derivation euler(p1, {x});
  Subspace l2 = degree_filtration(p1, 2);
  SeparationResult diff = diff_separate(p1, {euler}, l2);
  std::vector<IdealDescriptor> monomials;
  for (const auto& i : enumerate_monomial_ideals(p1, 5)) monomials.push_back(i);
  VerificationReport r1 = verify_separation(diff, monomials, l2);
  CHECK(r1.pass());
  CHECK(check_var_coverage(*diff.trace, monomials).empty());

  AlgebraRef jac = AlgebraPresentation::jacobson(kQ);
  Subspace v = Subspace::span(
      jac, {AlgebraElement::one(jac), parse_element(jac, "y*x")});
  SeparationResult mod = mod_separate(jac, v, 10);
  auto family = jacobson_default_family(jac);
  VerificationReport r2 = verify_separation(mod, family, v);
  CHECK(r2.pass());
  CHECK(check_var_coverage(*mod.trace, family).empty());
}

TEST_CASE("verification reports a planted violation") {
  AlgebraRef p1 = AlgebraPresentation::comm_poly(1, kQ);
  AlgebraElement x = AlgebraElement::generator(p1, 0);
  Derivation euler(p1, {x});
  Subspace l2 = degree_filtration(p1, 2);
  SeparationResult bad = diff_separate(p1, {euler}, l2);
  bad.elements[0] = x;  // wrong: (x^2) meets L_2 but does not contain x
  std::vector<IdealDescriptor> monomials;
  for (const auto& i : enumerate_monomial_ideals(p1, 3)) monomials.push_back(i);
  VerificationReport r = verify_separation(bad, monomials, l2);
  CHECK_FALSE(r.pass());
  REQUIRE_FALSE(r.violations.empty());
  bool saw_x2 = false;
  for (const auto& c : r.checks)
    if (c.ideal == "(x^2)" && c.violation.has_value()) saw_x2 = true;
  CHECK(saw_x2);
}

TEST_CASE("divisibility and spanning membership agree on monomial ideals") {
  std::mt19937 rng(311);
  AlgebraRef p2 = AlgebraPresentation::comm_poly(2, kQ);
  auto ideals = enumerate_monomial_ideals(p2, 2);
  std::uniform_int_distribution<std::size_t> pick_ideal(0, ideals.size() - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::vector<Word> words = p2->words_up_to_degree(2);
  std::uniform_int_distribution<std::size_t> pick_word(0, words.size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    const MonomialDiffIdeal& ideal = ideals[pick_ideal(rng)];
    AlgebraElement f = AlgebraElement::zero(p2);
    for (int i = 0; i < 2; ++i)
      f.add_term(words[pick_word(rng)], FieldElement::from_integer(kQ, coeff(rng)));
    std::vector<AlgebraElement> gens;
    for (const auto& g : ideal.generators())
      gens.push_back(AlgebraElement::basis_word(p2, g));
    int bound = std::max(f.degree(), 2);
    TruncatedIdeal truncated(p2, gens, bound);
    CHECK(ideal_contains(IdealDescriptor(ideal), f) ==
          ideal_contains(IdealDescriptor(truncated), f));
  }
}

TEST_CASE("prime-field witness on pinned generator sets") {
  FieldSpec qt = FieldSpec::rational_functions();
  AlgebraRef free2 = AlgebraPresentation::free_algebra(2, qt);
  FieldElement t = FieldElement::t();

  auto w1 = prime_field_witness(
      free2, {t * AlgebraElement::generator(free2, 0)}, 1);
  REQUIRE(w1.has_value());
  CHECK(w1->str() == "x");

  auto w2 = prime_field_witness(free2, {parse_element(free2, "x*y - 1")}, 2);
  REQUIRE(w2.has_value());
  CHECK(w2->str() == "x*y - 1");

  auto w3 = prime_field_witness(free2, {parse_element(free2, "x + t*y")}, 2);
  REQUIRE(w3.has_value());
  CHECK(w3->str() == "x*y - y*x");

  for (const auto& w : {*w1, *w2, *w3}) {
    CHECK_FALSE(w.is_zero());
    for (const auto& [word, c] : w.terms()) CHECK(is_prime_field_element(c));
  }
  IdealDescriptor confirm = TruncatedIdeal(
      free2, {parse_element(free2, "x + t*y")}, 2);
  CHECK(ideal_contains(confirm, *w3));

  // No rational combination lies in span{x + t y} itself.
  CHECK_FALSE(
      prime_field_witness(free2, {parse_element(free2, "x + t*y")}, 1)
          .has_value());
  CHECK_THROWS_AS(
      prime_field_witness(free2, {parse_element(free2, "x*y - 1")}, 1),
      DegreeBoundExceeded);
}

TEST_CASE("prime-field witness over prime-field and rational coefficients") {
  FieldSpec f5 = FieldSpec::prime_field(5);
  AlgebraRef free5 = AlgebraPresentation::free_algebra(2, f5);
  auto w = prime_field_witness(
      free5,
      {FieldElement::from_integer(f5, 3) * AlgebraElement::generator(free5, 1)},
      1);
  REQUIRE(w.has_value());
  CHECK(w->str() == "y");

  AlgebraRef jac = AlgebraPresentation::jacobson(kQ);
  CHECK_THROWS_AS(
      prime_field_witness(jac, {AlgebraElement::generator(jac, 0)}, 1),
      SpecMismatch);

  AlgebraRef freeq = AlgebraPresentation::free_algebra(2, kQ);
  auto wq = prime_field_witness(
      freeq, {FieldElement::rational(mpq_class(2, 3)) *
              AlgebraElement::generator(freeq, 0)}, 1);
  REQUIRE(wq.has_value());
  CHECK(wq->str() == "x");
}

}  // TEST_SUITE

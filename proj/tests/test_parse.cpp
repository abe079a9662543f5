#include <random>

#include "doctest.h"
#include "sepforge/errors.hpp"
#include "sepforge/parse.hpp"

using namespace sepforge;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

AlgebraElement random_element(const AlgebraRef& alg, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<Word> words = alg->words_up_to_degree(3);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  AlgebraElement out = AlgebraElement::zero(alg);
  for (int i = 0; i < 4; ++i)
    out.add_term(words[pick(rng)], FieldElement::from_integer(alg->field(), coeff(rng)));
  return out;
}

}  // namespace

TEST_SUITE("parse") {

TEST_CASE("element literals over the rationals") {
  AlgebraRef jac = AlgebraPresentation::jacobson(kQ);
  AlgebraElement x = AlgebraElement::generator(jac, 0);
  AlgebraElement y = AlgebraElement::generator(jac, 1);
  CHECK(parse_element(jac, "y*x^2 - x") == y * x * x - x);
  CHECK(parse_element(jac, "1 - y*x") == AlgebraElement::one(jac) - y * x);
  CHECK(parse_element(jac, "x*y") == AlgebraElement::one(jac));
  CHECK(parse_element(jac, "0") == AlgebraElement::zero(jac));
  CHECK(parse_element(jac, "-x") == -x);
  CHECK(parse_element(jac, "2*x - 3") ==
        FieldElement::from_integer(kQ, 2) * x -
            AlgebraElement::scalar(jac, FieldElement::from_integer(kQ, 3)));
  CHECK(parse_element(jac, "x/2") == FieldElement::rational(mpq_class(1, 2)) * x);
  CHECK(parse_element(jac, "(x + y)^2") == (x + y) * (x + y));
  CHECK(parse_element(jac, " y * x ") == y * x);
}

TEST_CASE("element literals over rational functions") {
  AlgebraRef free2 =
      AlgebraPresentation::free_algebra(2, FieldSpec::rational_functions());
  AlgebraElement x = AlgebraElement::generator(free2, 0);
  AlgebraElement y = AlgebraElement::generator(free2, 1);
  FieldElement t = FieldElement::t();
  CHECK(parse_element(free2, "x + t*y") == x + t * y);
  CHECK(parse_element(free2, "t^2*x") == t * t * x);
  FieldElement one = FieldElement::one(t.spec());
  CHECK(parse_element(free2, "(t + 1)*x") == (t + one) * x);
  CHECK(parse_element(free2, "x/t") == t.inverse() * x);
  CHECK(parse_element(free2, "x*y - y*x") == x * y - y * x);
}

TEST_CASE("custom generator names") {
  AlgebraRef alg = AlgebraPresentation::free_algebra(2, kQ, {"a", "b"});
  AlgebraElement a = AlgebraElement::generator(alg, 0);
  AlgebraElement b = AlgebraElement::generator(alg, 1);
  CHECK(parse_element(alg, "a*b - b*a") == a * b - b * a);
  CHECK_THROWS_AS(parse_element(alg, "x"), ParseError);
}

TEST_CASE("matrix unit names parse") {
  AlgebraRef mat2 = AlgebraPresentation::matrix_algebra(2, kQ);
  CHECK(parse_element(mat2, "E12*E21") ==
        AlgebraElement::basis_word(mat2, Word{0}));
  CHECK(parse_element(mat2, "E11 + E22") == AlgebraElement::one(mat2));
}

TEST_CASE("field literals") {
  CHECK(parse_field_literal(kQ, "5/6") == FieldElement::rational(mpq_class(5, 6)));
  CHECK(parse_field_literal(kQ, "-2") == FieldElement::rational(mpq_class(-2)));
  FieldSpec f5 = FieldSpec::prime_field(5);
  CHECK(parse_field_literal(f5, "7") == FieldElement::residue(f5, 2));
  FieldSpec qt = FieldSpec::rational_functions();
  FieldElement t = FieldElement::t();
  CHECK(parse_field_literal(qt, "(t^2 + 1)/(t - 1)") ==
        (t * t + FieldElement::one(qt)) / (t - FieldElement::one(qt)));
  CHECK_THROWS_AS(parse_field_literal(kQ, "x"), ParseError);
}

TEST_CASE("malformed input is rejected with ParseError") {
  AlgebraRef jac = AlgebraPresentation::jacobson(kQ);
  CHECK_THROWS_AS(parse_element(jac, ""), ParseError);
  CHECK_THROWS_AS(parse_element(jac, "x +"), ParseError);
  CHECK_THROWS_AS(parse_element(jac, "(x"), ParseError);
  CHECK_THROWS_AS(parse_element(jac, "x)"), ParseError);
  CHECK_THROWS_AS(parse_element(jac, "z"), ParseError);
  CHECK_THROWS_AS(parse_element(jac, "x^-1"), ParseError);
  CHECK_THROWS_AS(parse_element(jac, "x ** y"), ParseError);
  CHECK_THROWS_AS(parse_element(jac, "t*x"), ParseError);
  CHECK_THROWS_AS(parse_element(jac, "x/y"), ParseError);
  CHECK_THROWS_AS(parse_element(jac, "x/0"), ParseError);
  CHECK_THROWS_AS(parse_element(jac, "x^100"), ParseError);
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937 rng(211);
  std::vector<AlgebraRef> algebras = {
      AlgebraPresentation::jacobson(kQ),
      AlgebraPresentation::free_algebra(2, kQ),
      AlgebraPresentation::comm_poly(2, kQ),
      AlgebraPresentation::free_algebra(2, FieldSpec::rational_functions()),
      AlgebraPresentation::jacobson(FieldSpec::prime_field(7)),
  };
  for (const auto& alg : algebras) {
    for (int i = 0; i < 12; ++i) {
      AlgebraElement e = random_element(alg, rng);
      CHECK(parse_element(alg, e.str()) == e);
    }
  }
}

}  // TEST_SUITE

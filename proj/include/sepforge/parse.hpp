#pragma once

// Element literals: sums and differences of products of integer/fraction
// coefficients, declared generator names, and powers, e.g. "y*x^2 - x",
// "1 - y*x", "(t^2+1)/(t-1)*x". Whitespace is insignificant. Division is
// scalar-only. Over Q(t) the name "t" denotes the field variable unless a
// generator shadows it.

#include <string>

#include "sepforge/algebra.hpp"

namespace sepforge {

AlgebraElement parse_element(const AlgebraRef& alg, const std::string& text);

// Scalar-only literal: "p/q" over Q, integer residue over F_p, polynomial
// fraction in t over Q(t).
FieldElement parse_field_literal(const FieldSpec& spec, const std::string& text);

}  // namespace sepforge

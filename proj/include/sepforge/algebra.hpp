#pragma once

// Presented associative algebras with exact normal-form arithmetic:
//   Free(n)      — free algebra on n generators, basis = all words
//   Jacobson     — K<x,y>/(xy - 1), basis = words y^i x^j
//   Weyl         — K<q,p>/(pq - qp - 1), basis = words q^i p^j, char 0 only
//   MatrixAlg(n) — n x n matrices, basis = matrix units E_kl
//   CommPoly(m)  — commutative polynomials, basis = monomials
//
// Basis words are letter sequences over the generator alphabet; the word
// order is graded (total degree first), then lexicographic with the declared
// generator order. All arithmetic reduces to normal form eagerly.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sepforge/field.hpp"

namespace sepforge {

using Word = std::vector<std::uint8_t>;  // empty word = 1 (absent in MatrixAlg)

// Graded-lex order: degree first, then letters left to right.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

enum class AlgebraId { Free, Jacobson, Weyl, MatrixAlg, CommPoly };

class AlgebraPresentation;
using AlgebraRef = std::shared_ptr<const AlgebraPresentation>;

class AlgebraPresentation {
 public:
  static AlgebraRef free_algebra(int n, const FieldSpec& spec,
                                 std::vector<std::string> names = {});
  static AlgebraRef jacobson(const FieldSpec& spec);
  static AlgebraRef weyl(const FieldSpec& spec);  // throws CharacteristicUnsupported in char p
  static AlgebraRef matrix_algebra(int n, const FieldSpec& spec);  // 1 <= n <= 9
  static AlgebraRef comm_poly(int m, const FieldSpec& spec,
                              std::vector<std::string> names = {});

  AlgebraId id() const { return id_; }
  const FieldSpec& field() const { return spec_; }
  // Number of letters in the word alphabet (n*n for MatrixAlg).
  int letter_count() const;
  // Number of declared generators (n; 2 for Jacobson/Weyl; m for CommPoly).
  int generator_count() const { return n_; }
  const std::string& letter_name(int letter) const { return names_[letter]; }
  const std::vector<std::string>& letter_names() const { return names_; }
  bool is_commutative() const { return id_ == AlgebraId::CommPoly; }
  bool is_finite_dimensional() const { return id_ == AlgebraId::MatrixAlg; }
  long dimension() const;  // -1 if infinite-dimensional

  std::string name() const;

  // All normal-form basis words of the given total degree, lex ascending.
  std::vector<Word> words_of_degree(int d) const;
  // All normal-form basis words of degree <= d in graded-lex order.
  std::vector<Word> words_up_to_degree(int d) const;

  // Normal form of the concatenated product of two normal words, as a list
  // of (word, integer coefficient). Only the Weyl relation produces more
  // than one term.
  std::vector<std::pair<Word, mpz_class>> reduce_product(const Word& a,
                                                         const Word& b) const;

  bool word_is_normal(const Word& w) const;
  std::string word_str(const Word& w) const;  // "y*x^2", "E12", "1"

  friend bool operator==(const AlgebraPresentation& a,
                         const AlgebraPresentation& b) {
    return a.id_ == b.id_ && a.n_ == b.n_ && a.spec_ == b.spec_ &&
           a.names_ == b.names_;
  }

 private:
  AlgebraPresentation(AlgebraId id, int n, FieldSpec spec,
                      std::vector<std::string> names)
      : id_(id), n_(n), spec_(spec), names_(std::move(names)) {}

  AlgebraId id_;
  int n_;
  FieldSpec spec_;
  std::vector<std::string> names_;
};

// Finite linear combination of normal-form basis words. No zero
// coefficients are stored; zero is the empty map.
class AlgebraElement {
 public:
  using Terms = std::map<Word, FieldElement, WordLess>;

  explicit AlgebraElement(AlgebraRef alg) : alg_(std::move(alg)) {}

  static AlgebraElement zero(const AlgebraRef& alg) { return AlgebraElement(alg); }
  static AlgebraElement one(const AlgebraRef& alg);
  static AlgebraElement basis_word(const AlgebraRef& alg, const Word& w);
  static AlgebraElement generator(const AlgebraRef& alg, int j);
  static AlgebraElement scalar(const AlgebraRef& alg, const FieldElement& c);

  const AlgebraRef& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Max word degree; -1 for the zero element.
  int degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size());
  }
  // The largest word with nonzero coefficient; requires nonzero.
  const Word& leading_word() const { return terms_.rbegin()->first; }
  const FieldElement& leading_coeff() const { return terms_.rbegin()->second; }

  // If this element is c * 1 for a scalar c, return c.
  std::optional<FieldElement> as_scalar() const;

  void add_term(const Word& w, const FieldElement& c);  // accumulates, drops zeros

  std::string str() const;

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const FieldElement& c, const AlgebraElement& a);
  AlgebraElement operator-() const;
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) {
    return !(a == b);
  }

 private:
  AlgebraRef alg_;
  Terms terms_;
};

void require_same_algebra(const AlgebraElement& a, const AlgebraElement& b);
void require_same_algebra(const AlgebraRef& a, const AlgebraRef& b);

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

// First upto_index basis words in graded-lex order (fewer when the algebra
// is finite-dimensional and upto_index exceeds its dimension).
std::vector<AlgebraElement> enumerate_basis(const AlgebraRef& alg, long upto_index);

AlgebraElement pow(const AlgebraElement& a, int e);

// For CommPoly: exact single-divisor division. Returns the quotient iff
// divisor | dividend, otherwise nullopt.
std::optional<AlgebraElement> try_divide_exact(const AlgebraElement& dividend,
                                               const AlgebraElement& divisor);

// A derivation of a CommPoly algebra, given by the images of the variables;
// extends by linearity and the Leibniz rule.
class Derivation {
 public:
  Derivation(AlgebraRef alg, std::vector<AlgebraElement> images);
  const AlgebraRef& algebra() const { return alg_; }
  const std::vector<AlgebraElement>& images() const { return images_; }
  std::string str() const;

 private:
  AlgebraRef alg_;
  std::vector<AlgebraElement> images_;
};

AlgebraElement apply_derivation(const Derivation& d, const AlgebraElement& f);

// The shipped faithful modules, used only for diagnostic probes:
//   Jacobson  — shift module: y.e_k = e_{k+1}, x.e_{k+1} = e_k, x.e_0 = 0
//   Weyl      — K[s]: q = multiply by s, p = d/ds
//   MatrixAlg — column space: E_kl.e_m = [l == m] e_k
class ModuleAction {
 public:
  static ModuleAction for_algebra(AlgebraRef alg);  // throws for Free/CommPoly
  const AlgebraRef& algebra() const { return alg_; }

 private:
  explicit ModuleAction(AlgebraRef alg) : alg_(std::move(alg)) {}
  AlgebraRef alg_;
};

// Finite-support vector over the module's indexed basis e_0, e_1, ...
using ModuleVector = std::map<long, FieldElement>;

ModuleVector act(const ModuleAction& m, const AlgebraElement& a,
                 const ModuleVector& v);

// True iff a acts nonzero on one of e_0..e_{n_probe-1}. False only means
// "a annihilates the probe window", not a proof of unfaithfulness.
bool faithfulness_probe(const ModuleAction& m, const AlgebraElement& a,
                        int n_probe);

}  // namespace sepforge

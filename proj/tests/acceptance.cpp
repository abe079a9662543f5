// Acceptance gate: eight criteria, one [PASS]/[FAIL] line each, exit
// nonzero if any criterion fails. Runtime limits are enforced as failures.
// All randomness is seeded, so the run is deterministic.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "sepforge/algebra.hpp"
#include "sepforge/errors.hpp"
#include "sepforge/field.hpp"
#include "sepforge/oracles.hpp"
#include "sepforge/parse.hpp"
#include "sepforge/separator.hpp"
#include "sepforge/subspace.hpp"

using namespace sepforge;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kQt = FieldSpec::rational_functions();

// Traces accumulated by criteria 1-4, re-walked by criterion 5 against the
// same oracle family they were verified with.
struct TracedRun {
  std::shared_ptr<const TraceNode> trace;
  const std::vector<IdealDescriptor>* family;
};
std::vector<TracedRun> g_runs;

FieldElement random_coeff(std::mt19937& rng, const FieldSpec& spec) {
  std::uniform_int_distribution<int> small(-5, 5);
  switch (spec.kind()) {
    case FieldKind::Rationals: {
      int n = small(rng);
      if (n == 0) n = 1;
      std::uniform_int_distribution<int> den(1, 3);
      return FieldElement::rational(mpq_class(n, den(rng)));
    }
    case FieldKind::PrimeField: {
      std::uniform_int_distribution<std::int64_t> r(
          1, spec.characteristic() - 1);
      return FieldElement::residue(spec, r(rng));
    }
    case FieldKind::RationalFunctions: {
      int c0 = small(rng);
      int c1 = small(rng);
      if (c0 == 0 && c1 == 0) c0 = 1;
      return FieldElement::from_integer(spec, c0) +
             FieldElement::from_integer(spec, c1) * FieldElement::t();
    }
  }
  return FieldElement::one(spec);
}

// 1-3 random terms over the normal words of degree <= max_degree.
AlgebraElement random_element(std::mt19937& rng, const AlgebraRef& alg,
                              int max_degree) {
  std::vector<Word> words = alg->words_up_to_degree(max_degree);
  std::uniform_int_distribution<std::size_t> wpick(0, words.size() - 1);
  std::uniform_int_distribution<int> nterms(1, 3);
  AlgebraElement a(alg);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i)
    a.add_term(words[wpick(rng)], random_coeff(rng, alg->field()));
  if (a.is_zero()) a = AlgebraElement::one(alg);
  return a;
}

// Structural splitting invariants at every node of a recursion trace.
void check_trace_structure(const TraceNode& node,
                           std::vector<std::string>& violations) {
  if (node.is_leaf()) {
    if (node.space.dimension() != 1)
      violations.push_back("leaf of dimension " +
                           std::to_string(node.space.dimension()));
    if (!node.element || node.element->is_zero())
      violations.push_back("leaf with zero element");
    return;
  }
  if (!node.kernel_child || !node.image_child || !node.v) {
    violations.push_back("internal node missing a child or v");
    return;
  }
  int dk = node.kernel_child->space.dimension();
  int di = node.image_child->space.dimension();
  if (dk + di != node.space.dimension())
    violations.push_back("split dimensions " + std::to_string(dk) + "+" +
                         std::to_string(di) + " != " +
                         std::to_string(node.space.dimension()));
  if (dk == 0 || di == 0) violations.push_back("trivial part in a split");
  if (node.v->is_zero()) violations.push_back("zero v at a split");
  if (!node.kernel_child->space.coordinates_of(*node.v).has_value())
    violations.push_back("v outside the kernel part");
  check_trace_structure(*node.kernel_child, violations);
  check_trace_structure(*node.image_child, violations);
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

using CriterionFn = std::function<Outcome()>;

// ---- criterion bodies ----

// Family of all monomial ideals of Q[x] with generator degree <= 8, closed
// under the Euler derivation (every monomial ideal is).
std::vector<IdealDescriptor> g_family_c1;
std::vector<IdealDescriptor> g_family_c2;
std::vector<IdealDescriptor> g_family_c4;

Outcome criterion1() {
  AlgebraRef p1 = AlgebraPresentation::comm_poly(1, kQ);
  AlgebraElement x = AlgebraElement::generator(p1, 0);
  Derivation euler(p1, {x});
  for (const auto& ideal : enumerate_monomial_ideals(p1, 8))
    if (diff_closure_check(ideal, {euler})) g_family_c1.push_back(ideal);

  std::mt19937 rng(1001);
  std::uniform_int_distribution<int> bit(0, 1);
  int subsets = 0;
  long checks = 0;
  for (int run = 0; run < 50; ++run) {
    std::vector<AlgebraElement> gens;
    while (gens.empty()) {
      for (int k = 0; k <= 6; ++k)
        if (bit(rng)) gens.push_back(pow(x, k));
    }
    Subspace V = Subspace::span(p1, gens);
    SeparationResult res = diff_separate(p1, {euler}, V);
    const AlgebraElement& a = res.elements.at(0);
    if (a.is_zero()) return {false, "zero separating element"};
    for (const IdealDescriptor& I : g_family_c1) {
      if (!ideal_meets_subspace(I, V)) continue;
      ++checks;
      if (!ideal_contains(I, a))
        return {false, "a not in " + ideal_str(I) + " for V of dim " +
                           std::to_string(V.dimension())};
    }
    g_runs.push_back({res.trace, &g_family_c1});
    ++subsets;
  }
  return {true, std::to_string(subsets) + " subspaces, " +
                    std::to_string(g_family_c1.size()) + " ideals, " +
                    std::to_string(checks) + " memberships, 0 violations"};
}

Outcome criterion2() {
  AlgebraRef p2 = AlgebraPresentation::comm_poly(2, kQ);
  AlgebraElement x = AlgebraElement::generator(p2, 0);
  AlgebraElement y = AlgebraElement::generator(p2, 1);
  AlgebraElement zero = AlgebraElement::zero(p2);
  std::vector<Derivation> Ds = {Derivation(p2, {x, zero}),
                                Derivation(p2, {zero, y})};
  Subspace V = degree_filtration(p2, 2);
  if (V.dimension() != 6) return {false, "L_2 dimension != 6"};
  SeparationResult res = diff_separate(p2, Ds, V);
  for (const auto& ideal : enumerate_monomial_ideals(p2, 6))
    if (diff_closure_check(ideal, Ds)) g_family_c2.push_back(ideal);
  VerificationReport report = verify_separation(res, g_family_c2, V);
  if (!report.pass())
    return {false, "verification: " + report.violations.front()};
  g_runs.push_back({res.trace, &g_family_c2});
  return {true, "element " + res.elements.at(0).str() + ", " +
                    std::to_string(g_family_c2.size()) + " ideals verified"};
}

Outcome criterion3() {
  AlgebraRef p1 = AlgebraPresentation::comm_poly(1, kQ);
  AlgebraElement x = AlgebraElement::generator(p1, 0);
  AlgebraElement one = AlgebraElement::one(p1);
  Derivation euler(p1, {x});

  SeparationResult r1 =
      diff_separate(p1, {euler}, Subspace::span(p1, {one, x}));
  if (r1.elements.at(0) != x)
    return {false, "span{1, x} gave " + r1.elements.at(0).str()};
  SeparationResult r2 =
      diff_separate(p1, {euler}, Subspace::span(p1, {one, x, pow(x, 2)}));
  if (r2.elements.at(0) != parse_element(p1, "x^4"))
    return {false, "span{1, x, x^2} gave " + r2.elements.at(0).str()};
  g_runs.push_back({r1.trace, &g_family_c1});
  g_runs.push_back({r2.trace, &g_family_c1});
  return {true, "span{1, x} -> x, span{1, x, x^2} -> x^4"};
}

Outcome criterion4() {
  AlgebraRef jac = AlgebraPresentation::jacobson(kQ);
  for (const IdealDescriptor& I : jacobson_default_family(jac))
    g_family_c4.push_back(I);

  Subspace V = Subspace::span(
      jac, {AlgebraElement::one(jac), parse_element(jac, "y*x")});
  SeparationResult res = mod_separate(jac, V, 50);
  if (res.elements.size() != 2 || res.elements[0].str() != "1" ||
      res.elements[1].str() != "y*x^2 - x")
    return {false, "pinned list mismatch"};
  VerificationReport report = verify_separation(res, g_family_c4, V);
  if (!report.pass())
    return {false, "pinned run verification: " + report.violations.front()};
  g_runs.push_back({res.trace, &g_family_c4});

  std::mt19937 rng(1004);
  std::uniform_int_distribution<int> dims(2, 4);
  int done = 0;
  while (done < 25) {
    int k = dims(rng);
    std::vector<AlgebraElement> gens;
    for (int i = 0; i < k; ++i) gens.push_back(random_element(rng, jac, 3));
    Subspace W = Subspace::span(jac, gens);
    if (W.dimension() < 2 || W.dimension() > 4) continue;
    SeparationResult r = mod_separate(jac, W, 50);
    VerificationReport v = verify_separation(r, g_family_c4, W);
    if (!v.pass())
      return {false, "random V #" + std::to_string(done) + ": " +
                         v.violations.front()};
    std::vector<std::string> cover = check_var_coverage(*r.trace, g_family_c4);
    if (!cover.empty())
      return {false, "random V #" + std::to_string(done) + ": " +
                         cover.front()};
    g_runs.push_back({r.trace, &g_family_c4});
    ++done;
  }
  return {true, "pinned list [\"1\", \"y*x^2 - x\"], " +
                    std::to_string(g_family_c4.size()) +
                    " ideals, 25 random subspaces covered"};
}

Outcome criterion5() {
  if (g_runs.empty()) return {false, "no traces collected"};
  std::vector<std::string> violations;
  int internal = 0;
  std::function<void(const TraceNode&)> count = [&](const TraceNode& n) {
    if (n.is_leaf()) return;
    ++internal;
    count(*n.kernel_child);
    count(*n.image_child);
  };
  for (const TracedRun& run : g_runs) {
    check_trace_structure(*run.trace, violations);
    std::vector<std::string> cover = check_var_coverage(*run.trace, *run.family);
    violations.insert(violations.end(), cover.begin(), cover.end());
    count(*run.trace);
  }
  if (!violations.empty())
    return {false, std::to_string(violations.size()) +
                       " violations; first: " + violations.front()};
  return {true, std::to_string(g_runs.size()) + " traces, " +
                    std::to_string(internal) +
                    " internal nodes, 0 violations"};
}

Outcome criterion6() {
  AlgebraRef f2 = AlgebraPresentation::free_algebra(2, kQt);
  AlgebraElement gen = parse_element(f2, "x + t*y");
  std::optional<AlgebraElement> w;
  int found_at = -1;
  for (int b = 1; b <= 2 && !w; ++b) {
    w = prime_field_witness(f2, {gen}, b);
    if (w) found_at = b;
  }
  if (!w) return {false, "no witness for {x + t*y} at bound <= 2"};
  if (w->str() != "x*y - y*x")
    return {false, "witness " + w->str() + " != x*y - y*x"};
  if (!ideal_contains(TruncatedIdeal(f2, {gen}, found_at), *w))
    return {false, "witness not confirmed by truncated membership"};
  for (const auto& [word, c] : w->terms())
    if (!is_prime_field_element(c))
      return {false, "witness coefficient outside the prime field"};

  std::mt19937 rng(1006);
  int found = 0, not_found = 0;
  for (int run = 0; run < 10; ++run) {
    AlgebraElement g = random_element(rng, f2, 2);
    int start = std::max(1, g.degree());
    std::optional<AlgebraElement> rw;
    int rb = -1;
    for (int b = start; b <= 4 && !rw; ++b) {
      rw = prime_field_witness(f2, {g}, b);
      if (rw) rb = b;
    }
    if (!rw) {
      ++not_found;
      continue;
    }
    if (rw->is_zero()) return {false, "zero witness reported"};
    if (!ideal_contains(TruncatedIdeal(f2, {g}, rb), *rw))
      return {false, "random witness failed confirmation for " + g.str()};
    for (const auto& [word, c] : rw->terms())
      if (!is_prime_field_element(c))
        return {false, "random witness has a non-prime-field coefficient"};
    ++found;
  }
  return {true, "x*y - y*x at bound 2; random: " + std::to_string(found) +
                    " found+confirmed, " + std::to_string(not_found) +
                    " clean not-found"};
}

Outcome criterion7() {
  std::mt19937 rng(1007);
  std::vector<AlgebraRef> presentations = {
      AlgebraPresentation::free_algebra(2, kQ),
      AlgebraPresentation::jacobson(kQ),
      AlgebraPresentation::weyl(kQ),
      AlgebraPresentation::matrix_algebra(2, kQ),
      AlgebraPresentation::comm_poly(2, kQ),
      AlgebraPresentation::jacobson(FieldSpec::prime_field(5)),
      AlgebraPresentation::free_algebra(2, kQt),
  };
  long assoc = 0;
  for (const AlgebraRef& alg : presentations)
    for (int i = 0; i < 1000; ++i) {
      AlgebraElement a = random_element(rng, alg, 2);
      AlgebraElement b = random_element(rng, alg, 2);
      AlgebraElement c = random_element(rng, alg, 2);
      if ((a * b) * c != a * (b * c))
        return {false, "associativity failed in " + alg->name()};
      ++assoc;
    }

  AlgebraRef p1 = AlgebraPresentation::comm_poly(1, kQ);
  AlgebraRef p2 = AlgebraPresentation::comm_poly(2, kQ);
  AlgebraElement x1 = AlgebraElement::generator(p1, 0);
  AlgebraElement x2 = AlgebraElement::generator(p2, 0);
  AlgebraElement y2 = AlgebraElement::generator(p2, 1);
  AlgebraElement z1 = AlgebraElement::zero(p1);
  AlgebraElement z2 = AlgebraElement::zero(p2);
  std::vector<Derivation> shipped = {
      Derivation(p1, {x1}),                          // x d/dx
      Derivation(p1, {AlgebraElement::one(p1)}),     // d/dx
      Derivation(p2, {x2, z2}),                      // x dx
      Derivation(p2, {z2, y2}),                      // y dy
  };
  (void)z1;
  long leibniz = 0;
  for (const Derivation& D : shipped)
    for (int i = 0; i < 1000; ++i) {
      AlgebraElement a = random_element(rng, D.algebra(), 3);
      AlgebraElement b = random_element(rng, D.algebra(), 3);
      if (apply_derivation(D, a * b) !=
          apply_derivation(D, a) * b + a * apply_derivation(D, b))
        return {false, "Leibniz failed for " + D.str()};
      ++leibniz;
    }

  AlgebraRef jac = AlgebraPresentation::jacobson(kQ);
  long pi_checks = 0;
  for (int i = 0; i < 1000; ++i) {
    AlgebraElement a = random_element(rng, jac, 3);
    AlgebraElement b = random_element(rng, jac, 3);
    if (!(jacobson_pi(a * b) == jacobson_pi(a) * jacobson_pi(b)))
      return {false, "pi multiplicativity failed"};
    ++pi_checks;
  }
  return {true, std::to_string(assoc) + " associativity, " +
                    std::to_string(leibniz) + " Leibniz, " +
                    std::to_string(pi_checks) + " pi checks, 0 failures"};
}

Outcome criterion8() {
  AlgebraRef p1 = AlgebraPresentation::comm_poly(1, kQ);
  AlgebraElement x = AlgebraElement::generator(p1, 0);
  Derivation euler(p1, {x});
  Subspace V = Subspace::span(
      p1, {AlgebraElement::one(p1), x, pow(x, 2)});
  SeparationResult bad = diff_separate(p1, {euler}, V);
  bad.elements[0] = x;  // wrong: (x^2) meets V but does not contain x
  std::vector<IdealDescriptor> family;
  for (const auto& ideal : enumerate_monomial_ideals(p1, 3))
    family.push_back(ideal);
  VerificationReport report = verify_separation(bad, family, V);
  if (report.pass()) return {false, "planted violation not detected"};
  for (const IdealCheck& c : report.checks)
    if (c.ideal == "(x^2)" && c.violation.has_value())
      return {true, "planted x rejected; (x^2) check reports: " +
                        *c.violation};
  return {false, "violation missing on the (x^2) check"};
}

}  // namespace

int main() {
  struct Entry {
    int id;
    std::string label;
    double limit_s;
    CriterionFn fn;
  };
  const std::vector<Entry> entries = {
      {1, "differential separation soundness, Q[x], 50 random subspaces",
       10.0, criterion1},
      {2, "two-variable differential separation, L_2 vs all monomial ideals",
       30.0, criterion2},
      {3, "golden separating elements for span{1, x} and span{1, x, x^2}",
       600.0, criterion3},
      {4, "primitive-algebra separation, Jacobson ideal lattice", 60.0,
       criterion4},
      {5, "splitting invariants and Var coverage across all traces", 600.0,
       criterion5},
      {6, "prime-field witness search over Q(t)", 60.0, criterion6},
      {7, "randomized algebra laws: associativity, Leibniz, pi", 30.0,
       criterion7},
      {8, "adversarial verification flags a planted wrong element", 600.0,
       criterion8},
  };

  int failures = 0;
  for (const Entry& e : entries) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = e.fn();
    } catch (const std::exception& ex) {
      out = {false, std::string("exception: ") + ex.what()};
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (out.pass && secs >= e.limit_s) {
      out.pass = false;
      out.detail += "; over the " + std::to_string((int)e.limit_s) +
                    " s limit";
    }
    std::printf("[%s] criterion %d: %s (%s; %.2fs)\n",
                out.pass ? "PASS" : "FAIL", e.id, e.label.c_str(),
                out.detail.c_str(), secs);
    if (!out.pass) ++failures;
  }
  if (failures) std::printf("%d of 8 criteria failed\n", failures);
  return failures ? 1 : 0;
}

#include "sepforge/oracles.hpp"

#include <algorithm>
#include <sstream>

#include "sepforge/errors.hpp"

namespace sepforge {

// ---- LaurentPoly ----

void LaurentPoly::add(int power, const FieldElement& coeff) {
  if (!(coeff.spec() == spec_))
    throw AlgebraMismatch("Laurent coefficient field mismatch");
  if (coeff.is_zero()) return;
  auto it = c_.find(power);
  if (it == c_.end()) {
    c_.emplace(power, coeff);
  } else {
    it->second = it->second + coeff;
    if (it->second.is_zero()) c_.erase(it);
  }
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [p, c] : b.c_) out.add(p, c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (!(a.spec_ == b.spec_))
    throw AlgebraMismatch("Laurent coefficient field mismatch");
  LaurentPoly out(a.spec_);
  for (const auto& [pa, ca] : a.c_)
    for (const auto& [pb, cb] : b.c_) out.add(pa + pb, ca * cb);
  return out;
}

namespace {

bool laurent_coeff_negative(const FieldElement& c) {
  switch (c.spec().kind()) {
    case FieldKind::Rationals:
      return c.as_rational() < 0;
    case FieldKind::PrimeField:
      return false;
    case FieldKind::RationalFunctions:
      return !c.is_zero() && c.as_rational_function().num().leading() < 0;
  }
  return false;
}

bool laurent_coeff_needs_parens(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(') ++depth;
    else if (ch == ')') --depth;
    else if (depth == 0 && i > 0 && (ch == '+' || ch == '-' || ch == ' '))
      return true;
  }
  return false;
}

}  // namespace

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : c_) {
    bool neg = laurent_coeff_negative(c);
    FieldElement magnitude = neg ? -c : c;
    std::string mag = magnitude.str();
    if (laurent_coeff_needs_parens(mag)) mag = "(" + mag + ")";
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (p == 0) {
      os << mag;
    } else {
      if (mag != "1") os << mag << "*";
      os << "z";
      if (p != 1) os << "^" << p;
    }
  }
  return os.str();
}

LaurentPoly jacobson_pi(const AlgebraElement& a) {
  if (a.algebra()->id() != AlgebraId::Jacobson)
    throw AlgebraMismatch("pi is defined on the Jacobson algebra");
  LaurentPoly out(a.algebra()->field());
  for (const auto& [w, c] : a.terms()) {
    int power = 0;
    for (std::uint8_t l : w) power += (l == 1) ? 1 : -1;
    out.add(power, c);
  }
  return out;
}

namespace {

// Coefficients of z^{-min} * f as a dense polynomial with nonzero constant
// term; f must be nonzero.
std::vector<FieldElement> laurent_to_poly(const LaurentPoly& f) {
  int lo = f.coeffs().begin()->first;
  int hi = f.coeffs().rbegin()->first;
  std::vector<FieldElement> out(hi - lo + 1, FieldElement::zero(f.spec()));
  for (const auto& [p, c] : f.coeffs()) out[p - lo] = c;
  return out;
}

// Remainder of a dense polynomial modulo a monic-normalizable divisor.
std::vector<FieldElement> poly_mod(std::vector<FieldElement> r,
                                   const std::vector<FieldElement>& d,
                                   const FieldSpec& spec) {
  int dd = static_cast<int>(d.size()) - 1;
  FieldElement lead_inv = d.back().inverse();
  for (int i = static_cast<int>(r.size()) - 1; i >= dd; --i) {
    if (r[i].is_zero()) continue;
    FieldElement q = r[i] * lead_inv;
    for (int j = 0; j <= dd; ++j) r[i - dd + j] = r[i - dd + j] - q * d[j];
  }
  r.resize(std::max(dd, 0), FieldElement::zero(spec));
  return r;
}

}  // namespace

bool laurent_divides(const LaurentPoly& divisor, const LaurentPoly& dividend) {
  if (dividend.is_zero()) return true;
  if (divisor.is_zero()) return false;
  std::vector<FieldElement> d = laurent_to_poly(divisor);
  std::vector<FieldElement> p = laurent_to_poly(dividend);
  if (d.size() == 1) return true;  // unit
  for (const auto& c : poly_mod(std::move(p), d, divisor.spec()))
    if (!c.is_zero()) return false;
  return true;
}

// ---- MonomialDiffIdeal ----

namespace {

// Commutative monomial divisibility: u | w as multisets of letters (both
// sorted ascending).
bool word_divides(const Word& u, const Word& w) {
  std::size_t i = 0, j = 0;
  while (i < u.size() && j < w.size()) {
    if (u[i] == w[j]) {
      ++i, ++j;
    } else if (u[i] > w[j]) {
      ++j;
    } else {
      return false;
    }
  }
  return i == u.size();
}

}  // namespace

MonomialDiffIdeal::MonomialDiffIdeal(AlgebraRef alg, std::vector<Word> generators)
    : alg_(std::move(alg)) {
  if (alg_->id() != AlgebraId::CommPoly)
    throw AlgebraMismatch("monomial ideals require a polynomial algebra");
  if (generators.empty())
    throw SpecMismatch("monomial ideal needs at least one generator");
  for (const auto& w : generators)
    if (!alg_->word_is_normal(w))
      throw SpecMismatch("monomial generator is not a sorted normal word");
  std::sort(generators.begin(), generators.end(), WordLess{});
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  // Keep only divisibility-minimal generators: a canonical antichain.
  for (const auto& w : generators) {
    bool redundant = false;
    for (const auto& g : gens_)
      if (word_divides(g, w)) {
        redundant = true;
        break;
      }
    if (!redundant) gens_.push_back(w);
  }
}

bool MonomialDiffIdeal::contains_word(const Word& w) const {
  for (const auto& g : gens_)
    if (word_divides(g, w)) return true;
  return false;
}

// ---- JacobsonIdeal ----

JacobsonIdeal JacobsonIdeal::socle(AlgebraRef alg) {
  if (alg->id() != AlgebraId::Jacobson)
    throw AlgebraMismatch("socle descriptor requires the Jacobson algebra");
  LaurentPoly zero(alg->field());
  return JacobsonIdeal(std::move(alg), Kind::Socle, std::move(zero));
}

JacobsonIdeal JacobsonIdeal::preimage(AlgebraRef alg, LaurentPoly f) {
  if (alg->id() != AlgebraId::Jacobson)
    throw AlgebraMismatch("preimage descriptor requires the Jacobson algebra");
  if (f.is_zero())
    throw SpecMismatch("preimage of the zero Laurent ideal is the socle");
  return JacobsonIdeal(std::move(alg), Kind::Preimage, std::move(f));
}

// ---- TruncatedIdeal ----

TruncatedIdeal::TruncatedIdeal(AlgebraRef alg,
                               std::vector<AlgebraElement> generators,
                               int degree_bound)
    : alg_(std::move(alg)),
      gens_(std::move(generators)),
      bound_(degree_bound),
      span_(Subspace::zero_space(alg_, std::max(degree_bound, 0))) {
  if (bound_ < 0) throw SpecMismatch("negative truncation bound");
  if (gens_.empty()) throw SpecMismatch("truncated ideal needs generators");
  for (const auto& g : gens_) {
    require_same_algebra(g.algebra(), alg_);
    if (g.is_zero()) throw ZeroElement("zero ideal generator");
  }
  // Side factors: 1 plus every basis word of positive degree up to the bound.
  std::vector<std::pair<int, AlgebraElement>> sides;
  sides.emplace_back(0, AlgebraElement::one(alg_));
  for (int d = 1; d <= bound_; ++d)
    for (const Word& w : alg_->words_of_degree(d))
      sides.emplace_back(d, AlgebraElement::basis_word(alg_, w));
  std::vector<AlgebraElement> products;
  for (const auto& g : gens_) {
    int dg = g.degree();
    if (dg > bound_) continue;
    for (const auto& [du, u] : sides) {
      if (du + dg > bound_) continue;
      AlgebraElement ug = multiply(u, g);
      for (const auto& [dw, w] : sides) {
        if (du + dg + dw > bound_) continue;
        AlgebraElement p = multiply(ug, w);
        if (!p.is_zero()) products.push_back(std::move(p));
      }
    }
  }
  span_ = Subspace::span(alg_, products, bound_);
}

// ---- Descriptor dispatch ----

const AlgebraRef& ideal_algebra(const IdealDescriptor& ideal) {
  return std::visit(
      [](const auto& d) -> const AlgebraRef& {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, ZeroIdeal> || std::is_same_v<T, UnitIdeal>)
          return d.alg;
        else
          return d.algebra();
      },
      ideal);
}

std::string ideal_str(const IdealDescriptor& ideal) {
  return std::visit(
      [](const auto& d) -> std::string {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, ZeroIdeal>) {
          return "(0)";
        } else if constexpr (std::is_same_v<T, UnitIdeal>) {
          return "(1)";
        } else if constexpr (std::is_same_v<T, MonomialDiffIdeal>) {
          std::string s = "(";
          for (std::size_t i = 0; i < d.generators().size(); ++i) {
            if (i) s += ", ";
            s += d.algebra()->word_str(d.generators()[i]);
          }
          return s + ")";
        } else if constexpr (std::is_same_v<T, JacobsonIdeal>) {
          if (d.kind() == JacobsonIdeal::Kind::Socle) return "Socle";
          return "Preimage(" + d.parameter().str() + ")";
        } else {
          std::string s = "Truncated(";
          for (std::size_t i = 0; i < d.generators().size(); ++i) {
            if (i) s += ", ";
            s += d.generators()[i].str();
          }
          return s + "; deg <= " + std::to_string(d.degree_bound()) + ")";
        }
      },
      ideal);
}

bool ideal_contains(const IdealDescriptor& ideal, const AlgebraElement& a) {
  return std::visit(
      [&a](const auto& d) -> bool {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, ZeroIdeal>) {
          return a.is_zero();
        } else if constexpr (std::is_same_v<T, UnitIdeal>) {
          return true;
        } else if constexpr (std::is_same_v<T, MonomialDiffIdeal>) {
          for (const auto& [w, c] : a.terms())
            if (!d.contains_word(w)) return false;
          return true;
        } else if constexpr (std::is_same_v<T, JacobsonIdeal>) {
          LaurentPoly img = jacobson_pi(a);
          if (d.kind() == JacobsonIdeal::Kind::Socle) return img.is_zero();
          return laurent_divides(d.parameter(), img);
        } else {
          if (a.degree() > d.degree_bound())
            throw DegreeBoundExceeded(
                "membership is only decidable up to the truncation bound");
          return d.span().contains(a);
        }
      },
      ideal);
}

namespace {

// Nonzero kernel of the composite V -> K[z,z^-1] -> K[z]/(fhat), where fhat
// is empty for the plain pi-kernel (socle) case.
bool jacobson_meets(const JacobsonIdeal& d, const Subspace& V) {
  if (V.is_zero()) return false;
  std::vector<LaurentPoly> images;
  int lo = 0, hi = 0;
  for (const auto& b : V.basis_elements()) {
    LaurentPoly img = jacobson_pi(b);
    if (!img.is_zero()) {
      lo = std::min(lo, img.coeffs().begin()->first);
      hi = std::max(hi, img.coeffs().rbegin()->first);
    }
    images.push_back(std::move(img));
  }
  const FieldSpec& spec = V.algebra()->field();
  if (d.kind() == JacobsonIdeal::Kind::Socle) {
    // Kernel of pi on V: columns are basis images over powers lo..hi.
    Matrix m(spec, hi - lo + 1, V.dimension());
    for (int j = 0; j < V.dimension(); ++j)
      for (const auto& [p, c] : images[j].coeffs()) m.at(p - lo, j) = c;
    return !kernel(m).is_zero();
  }
  std::vector<FieldElement> fhat = laurent_to_poly(d.parameter());
  int m_deg = static_cast<int>(fhat.size()) - 1;
  if (m_deg == 0) return true;  // unit ideal: quotient is the zero ring
  // Shift every image by the same unit power of z, then reduce mod fhat.
  Matrix m(spec, m_deg, V.dimension());
  for (int j = 0; j < V.dimension(); ++j) {
    std::vector<FieldElement> poly(hi - lo + 1, FieldElement::zero(spec));
    for (const auto& [p, c] : images[j].coeffs()) poly[p - lo] = c;
    std::vector<FieldElement> red = poly_mod(std::move(poly), fhat, spec);
    for (int i = 0; i < m_deg; ++i) m.at(i, j) = red[i];
  }
  return !kernel(m).is_zero();
}

}  // namespace

bool ideal_meets_subspace(const IdealDescriptor& ideal, const Subspace& V) {
  return std::visit(
      [&V](const auto& d) -> bool {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, ZeroIdeal>) {
          return false;
        } else if constexpr (std::is_same_v<T, UnitIdeal>) {
          return !V.is_zero();
        } else if constexpr (std::is_same_v<T, MonomialDiffIdeal>) {
          // I cap L_d is spanned by the ideal's monomials of degree <= d.
          std::vector<AlgebraElement> gens;
          for (const Word& w : d.algebra()->words_up_to_degree(V.degree_bound()))
            if (d.contains_word(w))
              gens.push_back(AlgebraElement::basis_word(d.algebra(), w));
          Subspace ideal_span =
              Subspace::span(d.algebra(), gens, V.degree_bound());
          return !intersect(V, ideal_span).is_zero();
        } else if constexpr (std::is_same_v<T, JacobsonIdeal>) {
          return jacobson_meets(d, V);
        } else {
          if (V.degree_bound() > d.degree_bound())
            throw DegreeBoundExceeded(
                "subspace truncation exceeds the ideal's bound");
          return !intersect(V, d.span()).is_zero();
        }
      },
      ideal);
}

// ---- Families ----

namespace {

void antichains_from(const std::vector<Word>& monomials, std::size_t start,
                     std::vector<Word>& current,
                     std::vector<std::vector<Word>>& out) {
  for (std::size_t i = start; i < monomials.size(); ++i) {
    bool comparable = false;
    for (const auto& g : current)
      if (word_divides(g, monomials[i]) || word_divides(monomials[i], g)) {
        comparable = true;
        break;
      }
    if (comparable) continue;
    current.push_back(monomials[i]);
    out.push_back(current);
    antichains_from(monomials, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<MonomialDiffIdeal> enumerate_monomial_ideals(const AlgebraRef& alg,
                                                         int gen_degree_bound) {
  if (alg->id() != AlgebraId::CommPoly)
    throw AlgebraMismatch("monomial ideals require a polynomial algebra");
  if (gen_degree_bound < 1) throw SpecMismatch("generator degree bound must be >= 1");
  std::vector<Word> monomials = alg->words_up_to_degree(gen_degree_bound);
  std::vector<std::vector<Word>> sets;
  std::vector<Word> current;
  antichains_from(monomials, 0, current, sets);
  std::sort(sets.begin(), sets.end(),
            [](const std::vector<Word>& a, const std::vector<Word>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                                  b.end(), WordLess{});
            });
  std::vector<MonomialDiffIdeal> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.emplace_back(alg, std::move(s));
  return out;
}

bool diff_closure_check(const MonomialDiffIdeal& I,
                        const std::vector<Derivation>& Ds) {
  IdealDescriptor desc = I;
  for (const Word& g : I.generators()) {
    AlgebraElement m = AlgebraElement::basis_word(I.algebra(), g);
    for (const auto& D : Ds)
      if (!ideal_contains(desc, apply_derivation(D, m))) return false;
  }
  return true;
}

std::vector<IdealDescriptor> jacobson_ideal_family(
    const AlgebraRef& alg, const std::vector<FieldElement>& coeff_grid,
    int width) {
  if (alg->id() != AlgebraId::Jacobson)
    throw AlgebraMismatch("this family is specific to the Jacobson algebra");
  if (width < 1) throw SpecMismatch("Laurent support width must be >= 1");
  if (coeff_grid.empty()) throw SpecMismatch("empty Laurent coefficient grid");
  // All f = c_0 + c_1 z + ... + c_{width-1} z^{width-1} with c_0 != 0 over
  // the grid, normalized to c_0 = 1 and deduplicated; z-power units are
  // already stripped by fixing a nonzero constant term.
  std::map<std::string, LaurentPoly> polys;
  std::vector<std::size_t> idx(width, 0);
  while (true) {
    LaurentPoly f(alg->field());
    for (int p = 0; p < width; ++p) f.add(p, coeff_grid[idx[p]]);
    if (!f.is_zero() && f.coeffs().begin()->first == 0) {
      FieldElement c0 = f.coeffs().begin()->second;
      LaurentPoly norm(alg->field());
      FieldElement inv = c0.inverse();
      for (const auto& [p, c] : f.coeffs()) norm.add(p, inv * c);
      polys.emplace(norm.str(), norm);
    }
    int k = width - 1;
    while (k >= 0 && idx[k] + 1 == coeff_grid.size()) idx[k--] = 0;
    if (k < 0) break;
    ++idx[k];
  }
  std::vector<IdealDescriptor> out;
  out.push_back(ZeroIdeal{alg});
  out.push_back(JacobsonIdeal::socle(alg));
  for (auto& [key, f] : polys)
    out.push_back(JacobsonIdeal::preimage(alg, std::move(f)));
  return out;
}

std::vector<IdealDescriptor> jacobson_default_family(const AlgebraRef& alg) {
  const FieldSpec& spec = alg->field();
  std::vector<FieldElement> grid = {
      -FieldElement::one(spec), FieldElement::zero(spec), FieldElement::one(spec)};
  return jacobson_ideal_family(alg, grid, 3);
}

// ---- Verification ----

VerificationReport verify_separation(const SeparationResult& result,
                                     const std::vector<IdealDescriptor>& family,
                                     const Subspace& V) {
  VerificationReport report;
  for (const auto& ideal : family) {
    require_same_algebra(ideal_algebra(ideal), V.algebra());
    IdealCheck check;
    check.ideal = ideal_str(ideal);
    check.meets_subspace = ideal_meets_subspace(ideal, V);
    if (check.meets_subspace) {
      if (result.mode == SeparationMode::DiffProduct) {
        const AlgebraElement& a = result.elements[0];
        if (ideal_contains(ideal, a)) {
          check.witness = a.str();
        } else {
          check.violation = "ideal meets V but does not contain " + a.str();
        }
      } else {
        bool hit = false;
        for (const auto& a : result.elements)
          if (ideal_contains(ideal, a)) {
            check.witness = a.str();
            hit = true;
            break;
          }
        if (!hit)
          check.violation = "ideal meets V but contains none of the outputs";
      }
      if (check.violation)
        report.violations.push_back(check.ideal + ": " + *check.violation);
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

namespace {

void coverage_walk(const TraceNode& node, const IdealDescriptor& ideal,
                   std::vector<std::string>& out) {
  if (node.is_leaf()) return;
  if (ideal_meets_subspace(ideal, node.space)) {
    bool k = ideal_meets_subspace(ideal, node.kernel_child->space);
    bool i = ideal_meets_subspace(ideal, node.image_child->space);
    if (!k && !i)
      out.push_back(ideal_str(ideal) +
                    ": meets a split node but neither its kernel nor its "
                    "image part");
  }
  coverage_walk(*node.kernel_child, ideal, out);
  coverage_walk(*node.image_child, ideal, out);
}

}  // namespace

std::vector<std::string> check_var_coverage(
    const TraceNode& trace, const std::vector<IdealDescriptor>& family) {
  std::vector<std::string> out;
  for (const auto& ideal : family) coverage_walk(trace, ideal, out);
  return out;
}

// ---- Prime-field witness ----

namespace {

// Scale a rational vector to coprime integers with the first nonzero entry
// positive.
std::vector<mpq_class> canonical_integer_scaling(const std::vector<mpq_class>& v) {
  mpz_class lcm_den(1), gcd_num(0);
  for (const auto& q : v) {
    if (q == 0) continue;
    mpz_class den = q.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    lcm_den = lcm_den / g * den;
  }
  std::vector<mpq_class> scaled;
  scaled.reserve(v.size());
  for (const auto& q : v) scaled.push_back(q * lcm_den);
  for (const auto& q : scaled) {
    mpz_class num = q.get_num();
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), num.get_mpz_t());
  }
  if (gcd_num == 0) return scaled;
  int sign = 0;
  for (const auto& q : scaled)
    if (q != 0) {
      sign = q > 0 ? 1 : -1;
      break;
    }
  mpz_class div = sign < 0 ? mpz_class(-gcd_num) : gcd_num;
  for (auto& q : scaled) q /= div;
  return scaled;
}

AlgebraElement first_generator_witness(const AlgebraRef& alg,
                                       const AlgebraElement& g) {
  const FieldSpec& spec = alg->field();
  WordCoordinates coords(alg, std::max(0, g.degree()));
  std::vector<FieldElement> vec = coords.vector_of(g);
  if (spec.kind() == FieldKind::PrimeField) {
    for (const auto& c : vec)
      if (!c.is_zero()) return c.inverse() * g;
    return g;
  }
  std::vector<mpq_class> q;
  q.reserve(vec.size());
  for (const auto& c : vec) q.push_back(c.as_rational());
  std::vector<mpq_class> scaled = canonical_integer_scaling(q);
  AlgebraElement out(alg);
  for (std::size_t i = 0; i < scaled.size(); ++i)
    if (scaled[i] != 0)
      out.add_term(coords.word_at(static_cast<int>(i)),
                   FieldElement::rational(scaled[i]));
  return out;
}

}  // namespace

std::optional<AlgebraElement> prime_field_witness(
    const AlgebraRef& alg, const std::vector<AlgebraElement>& generators,
    int degree_bound) {
  if (alg->id() != AlgebraId::Free)
    throw SpecMismatch("the witness search is defined for free algebras");
  std::vector<AlgebraElement> gens;
  for (const auto& g : generators) {
    require_same_algebra(g.algebra(), alg);
    if (!g.is_zero()) gens.push_back(g);
  }
  if (gens.empty()) throw SpecMismatch("no nonzero ideal generators");
  int max_deg = 0;
  for (const auto& g : gens) max_deg = std::max(max_deg, g.degree());
  if (degree_bound < max_deg)
    throw DegreeBoundExceeded(
        "degree bound is below the largest generator degree");

  // Over a prime field every ideal element already qualifies.
  if (alg->field().kind() != FieldKind::RationalFunctions)
    return first_generator_witness(alg, gens[0]);

  TruncatedIdeal ideal(alg, gens, degree_bound);
  const EchelonBasis& S = ideal.span().basis();
  if (S.is_zero()) return std::nullopt;
  const WordCoordinates& coords = ideal.span().coords();
  int N = coords.dim();
  std::vector<bool> is_pivot(N, false);
  for (int p : S.pivot_columns) is_pivot[p] = true;

  // Unknown rational coordinates c_0..c_{N-1}. Membership in span(S) says:
  // for every non-pivot q, c_q - sum_j S[j][q] c_{p_j} = 0 over Q(t).
  // Clearing denominators and expanding in powers of t turns each into a
  // block of exact Q-linear equations.
  std::vector<std::vector<mpq_class>> rows;
  for (int q = 0; q < N; ++q) {
    if (is_pivot[q]) continue;
    FieldElement clear = FieldElement::one(alg->field());
    for (std::size_t j = 0; j < S.vectors.size(); ++j) {
      const FieldElement& s = S.vectors[j][q];
      if (s.is_zero()) continue;
      clear = clear * FieldElement::rational_function(
                          RatFunc(s.as_rational_function().den(),
                                  IntPoly::constant(1)));
    }
    std::vector<std::pair<int, std::vector<mpq_class>>> cols;
    std::size_t height = 0;
    {
      std::vector<mpq_class> e =
          expand_in_t(FieldElement::one(alg->field()), clear);
      height = std::max(height, e.size());
      cols.emplace_back(q, std::move(e));
    }
    for (std::size_t j = 0; j < S.vectors.size(); ++j) {
      const FieldElement& s = S.vectors[j][q];
      if (s.is_zero()) continue;
      std::vector<mpq_class> e = expand_in_t(-s, clear);
      height = std::max(height, e.size());
      cols.emplace_back(S.pivot_columns[j], std::move(e));
    }
    for (std::size_t r = 0; r < height; ++r) {
      std::vector<mpq_class> row(N, 0);
      for (const auto& [col, e] : cols)
        if (r < e.size()) row[col] = e[r];
      rows.push_back(std::move(row));
    }
  }

  FieldSpec rats = FieldSpec::rationals();
  Matrix m(rats, static_cast<int>(rows.size()), N);
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    for (int j = 0; j < N; ++j)
      if (rows[i][j] != 0) m.at(i, j) = FieldElement::rational(rows[i][j]);
  EchelonBasis null = kernel(m);
  if (null.is_zero()) return std::nullopt;

  std::vector<mpq_class> sol;
  sol.reserve(N);
  for (const auto& c : null.vectors[0]) sol.push_back(c.as_rational());
  std::vector<mpq_class> scaled = canonical_integer_scaling(sol);
  AlgebraElement out(alg);
  for (int i = 0; i < N; ++i)
    if (scaled[i] != 0)
      out.add_term(coords.word_at(i),
                   FieldElement::rational_function(RatFunc::from_rational(scaled[i])));
  return out;
}

}  // namespace sepforge

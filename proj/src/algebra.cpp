#include "sepforge/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "sepforge/errors.hpp"

namespace sepforge {

namespace {

std::vector<std::string> default_var_names(int n) {
  if (n <= 3) {
    std::vector<std::string> base = {"x", "y", "z"};
    return std::vector<std::string>(base.begin(), base.begin() + n);
  }
  std::vector<std::string> out;
  out.reserve(n);
  for (int j = 1; j <= n; ++j) out.push_back("x" + std::to_string(j));
  return out;
}

void check_names(int n, const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) != n)
    throw SpecMismatch("generator name count does not match generator count");
  for (const auto& s : names)
    if (s.empty()) throw SpecMismatch("empty generator name");
}

}  // namespace

AlgebraRef AlgebraPresentation::free_algebra(int n, const FieldSpec& spec,
                                             std::vector<std::string> names) {
  if (n < 1) throw SpecMismatch("free algebra needs at least one generator");
  if (n > 200) throw SpecMismatch("generator count exceeds the letter alphabet");
  if (names.empty()) names = default_var_names(n);
  check_names(n, names);
  return AlgebraRef(
      new AlgebraPresentation(AlgebraId::Free, n, spec, std::move(names)));
}

AlgebraRef AlgebraPresentation::jacobson(const FieldSpec& spec) {
  return AlgebraRef(
      new AlgebraPresentation(AlgebraId::Jacobson, 2, spec, {"x", "y"}));
}

AlgebraRef AlgebraPresentation::weyl(const FieldSpec& spec) {
  if (spec.characteristic() != 0)
    throw CharacteristicUnsupported(
        "Weyl algebra is only supported in characteristic 0");
  return AlgebraRef(
      new AlgebraPresentation(AlgebraId::Weyl, 2, spec, {"q", "p"}));
}

AlgebraRef AlgebraPresentation::matrix_algebra(int n, const FieldSpec& spec) {
  if (n < 1 || n > 9)
    throw SpecMismatch("matrix algebra size must be between 1 and 9");
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n) * n);
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l)
      names.push_back("E" + std::to_string(k) + std::to_string(l));
  return AlgebraRef(
      new AlgebraPresentation(AlgebraId::MatrixAlg, n, spec, std::move(names)));
}

AlgebraRef AlgebraPresentation::comm_poly(int m, const FieldSpec& spec,
                                          std::vector<std::string> names) {
  if (m < 1) throw SpecMismatch("polynomial ring needs at least one variable");
  if (m > 200) throw SpecMismatch("variable count exceeds the letter alphabet");
  if (names.empty()) names = default_var_names(m);
  check_names(m, names);
  return AlgebraRef(
      new AlgebraPresentation(AlgebraId::CommPoly, m, spec, std::move(names)));
}

int AlgebraPresentation::letter_count() const {
  return id_ == AlgebraId::MatrixAlg ? n_ * n_ : n_;
}

long AlgebraPresentation::dimension() const {
  return id_ == AlgebraId::MatrixAlg ? static_cast<long>(n_) * n_ : -1;
}

std::string AlgebraPresentation::name() const {
  std::ostringstream os;
  switch (id_) {
    case AlgebraId::Free: os << "Free(" << n_ << ")"; break;
    case AlgebraId::Jacobson: os << "Jacobson"; break;
    case AlgebraId::Weyl: os << "Weyl"; break;
    case AlgebraId::MatrixAlg: os << "MatrixAlg(" << n_ << ")"; break;
    case AlgebraId::CommPoly: os << "CommPoly(" << n_ << ")"; break;
  }
  os << " over " << spec_.name();
  return os.str();
}

std::vector<Word> AlgebraPresentation::words_of_degree(int d) const {
  if (d < 0) throw SpecMismatch("negative degree");
  std::vector<Word> out;
  switch (id_) {
    case AlgebraId::Free: {
      // All n^d letter strings, lex ascending: a base-n odometer.
      Word w(d, 0);
      while (true) {
        out.push_back(w);
        int i = d - 1;
        while (i >= 0 && w[i] == n_ - 1) w[i--] = 0;
        if (i < 0) break;
        ++w[i];
      }
      break;
    }
    case AlgebraId::Jacobson:
      // y^i x^j, i + j = d; ascending lex puts smaller i first.
      for (int i = 0; i <= d; ++i) {
        Word w(d, 0);
        std::fill(w.begin(), w.begin() + i, std::uint8_t{1});
        out.push_back(w);
      }
      break;
    case AlgebraId::Weyl:
      // q^i p^j, i + j = d; ascending lex puts larger i first.
      for (int i = d; i >= 0; --i) {
        Word w(d, 1);
        std::fill(w.begin(), w.begin() + i, std::uint8_t{0});
        out.push_back(w);
      }
      break;
    case AlgebraId::MatrixAlg:
      if (d == 1)
        for (int l = 0; l < n_ * n_; ++l) out.push_back(Word{static_cast<std::uint8_t>(l)});
      break;
    case AlgebraId::CommPoly: {
      // Non-decreasing letter strings of length d, lex ascending.
      Word w(d, 0);
      while (true) {
        out.push_back(w);
        int i = d - 1;
        while (i >= 0 && w[i] == n_ - 1) --i;
        if (i < 0) break;
        std::uint8_t next = static_cast<std::uint8_t>(w[i] + 1);
        for (int j = i; j < d; ++j) w[j] = next;
      }
      break;
    }
  }
  return out;
}

std::vector<Word> AlgebraPresentation::words_up_to_degree(int d) const {
  std::vector<Word> out;
  for (int k = 0; k <= d; ++k) {
    auto layer = words_of_degree(k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

bool AlgebraPresentation::word_is_normal(const Word& w) const {
  for (std::uint8_t l : w)
    if (l >= letter_count()) return false;
  switch (id_) {
    case AlgebraId::Free:
      return true;
    case AlgebraId::Jacobson:
      // No x directly followed by y.
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == 0 && w[i + 1] == 1) return false;
      return true;
    case AlgebraId::Weyl:
      // No p directly followed by q.
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == 1 && w[i + 1] == 0) return false;
      return true;
    case AlgebraId::MatrixAlg:
      return w.size() == 1;
    case AlgebraId::CommPoly:
      return std::is_sorted(w.begin(), w.end());
  }
  return false;
}

std::vector<std::pair<Word, mpz_class>> AlgebraPresentation::reduce_product(
    const Word& a, const Word& b) const {
  Word cat = a;
  cat.insert(cat.end(), b.begin(), b.end());
  switch (id_) {
    case AlgebraId::Free:
      return {{cat, mpz_class(1)}};
    case AlgebraId::Jacobson: {
      // Cancel xy pairs; only the a|b junction can create them.
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < cat.size(); ++i)
          if (cat[i] == 0 && cat[i + 1] == 1) {
            cat.erase(cat.begin() + i, cat.begin() + i + 2);
            changed = true;
            break;
          }
      }
      return {{cat, mpz_class(1)}};
    }
    case AlgebraId::Weyl: {
      // pq -> qp + 1; each pq occurrence branches into a swap and an erase.
      std::map<Word, mpz_class, WordLess> acc;
      std::vector<std::pair<Word, mpz_class>> work{{cat, mpz_class(1)}};
      while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        std::size_t i = 0;
        for (; i + 1 < w.size(); ++i)
          if (w[i] == 1 && w[i + 1] == 0) break;
        if (i + 1 >= w.size()) {
          acc[w] += c;
          continue;
        }
        Word swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        Word erased = w;
        erased.erase(erased.begin() + i, erased.begin() + i + 2);
        work.emplace_back(std::move(swapped), c);
        work.emplace_back(std::move(erased), c);
      }
      std::vector<std::pair<Word, mpz_class>> out;
      for (auto& [w, c] : acc)
        if (c != 0) out.emplace_back(w, c);
      return out;
    }
    case AlgebraId::MatrixAlg: {
      if (cat.empty()) return {{cat, mpz_class(1)}};
      // Fold E_kl * E_rs = [l == r] E_ks left to right.
      int row = cat[0] / n_, col = cat[0] % n_;
      for (std::size_t i = 1; i < cat.size(); ++i) {
        int r2 = cat[i] / n_, c2 = cat[i] % n_;
        if (col != r2) return {};
        col = c2;
      }
      return {{Word{static_cast<std::uint8_t>(row * n_ + col)}, mpz_class(1)}};
    }
    case AlgebraId::CommPoly:
      std::sort(cat.begin(), cat.end());
      return {{cat, mpz_class(1)}};
  }
  return {};
}

std::string AlgebraPresentation::word_str(const Word& w) const {
  if (w.empty()) return "1";
  if (id_ == AlgebraId::MatrixAlg) return names_[w[0]];
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!first) os << "*";
    os << names_[w[i]];
    if (j - i > 1) os << "^" << (j - i);
    first = false;
    i = j;
  }
  return os.str();
}

// ---- AlgebraElement ----

AlgebraElement AlgebraElement::one(const AlgebraRef& alg) {
  AlgebraElement e(alg);
  FieldElement c = FieldElement::one(alg->field());
  if (alg->id() == AlgebraId::MatrixAlg) {
    int n = alg->generator_count();
    for (int k = 0; k < n; ++k)
      e.add_term(Word{static_cast<std::uint8_t>(k * n + k)}, c);
  } else {
    e.add_term(Word{}, c);
  }
  return e;
}

AlgebraElement AlgebraElement::basis_word(const AlgebraRef& alg, const Word& w) {
  if (!alg->word_is_normal(w))
    throw SpecMismatch("word is not in normal form for this presentation");
  AlgebraElement e(alg);
  e.add_term(w, FieldElement::one(alg->field()));
  return e;
}

AlgebraElement AlgebraElement::generator(const AlgebraRef& alg, int j) {
  if (j < 0 || j >= alg->letter_count())
    throw SpecMismatch("generator index out of range");
  return basis_word(alg, Word{static_cast<std::uint8_t>(j)});
}

AlgebraElement AlgebraElement::scalar(const AlgebraRef& alg, const FieldElement& c) {
  return c * one(alg);
}

std::optional<FieldElement> AlgebraElement::as_scalar() const {
  if (terms_.empty()) return FieldElement::zero(alg_->field());
  if (alg_->id() == AlgebraId::MatrixAlg) {
    FieldElement c = terms_.begin()->second;
    if (*this == scalar(alg_, c)) return c;
    return std::nullopt;
  }
  if (terms_.size() == 1 && terms_.begin()->first.empty())
    return terms_.begin()->second;
  return std::nullopt;
}

void AlgebraElement::add_term(const Word& w, const FieldElement& c) {
  if (!(c.spec() == alg_->field()))
    throw AlgebraMismatch("coefficient field does not match the algebra's field");
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

bool coeff_is_negative(const FieldElement& c) {
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

// True when s would not survive re-parsing as a tight product factor:
// any top-level space or sign past position 0.
bool coeff_needs_parens(const std::string& s) {
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

std::string coeff_factor_str(const FieldElement& c) {
  std::string s = c.str();
  return coeff_needs_parens(s) ? "(" + s + ")" : s;
}

}  // namespace

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  // Print order: degree descending, then lex ascending within a degree.
  std::vector<const Terms::value_type*> ordered;
  ordered.reserve(terms_.size());
  for (const auto& t : terms_) ordered.push_back(&t);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Terms::value_type* a, const Terms::value_type* b) {
                     if (a->first.size() != b->first.size())
                       return a->first.size() > b->first.size();
                     return a->first < b->first;
                   });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : ordered) {
    const Word& w = t->first;
    const FieldElement& c = t->second;
    bool neg = coeff_is_negative(c);
    FieldElement mag = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool is_one = (mag == FieldElement::one(mag.spec()));
    if (w.empty()) {
      std::string s = mag.str();
      os << (coeff_needs_parens(s) && neg ? "(" + s + ")" : s);
    } else if (is_one) {
      os << alg_->word_str(w);
    } else {
      os << coeff_factor_str(mag) << "*" << alg_->word_str(w);
    }
  }
  return os.str();
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_algebra(a, b);
  AlgebraElement out = a;
  for (const auto& [w, c] : b.terms_) out.add_term(w, c);
  return out;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_algebra(a, b);
  AlgebraElement out = a;
  for (const auto& [w, c] : b.terms_) out.add_term(w, -c);
  return out;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out(alg_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

AlgebraElement operator*(const FieldElement& c, const AlgebraElement& a) {
  AlgebraElement out(a.alg_);
  if (c.is_zero()) return out;
  for (const auto& [w, x] : a.terms_) out.add_term(w, c * x);
  return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return multiply(a, b);
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return *a.alg_ == *b.alg_ && a.terms_ == b.terms_;
}

void require_same_algebra(const AlgebraRef& a, const AlgebraRef& b) {
  if (!(*a == *b))
    throw AlgebraMismatch("operands belong to different algebras");
}

void require_same_algebra(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_algebra(a.algebra(), b.algebra());
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_algebra(a, b);
  const AlgebraRef& alg = a.algebra();
  AlgebraElement out(alg);
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      FieldElement c = ca * cb;
      for (const auto& [w, m] : alg->reduce_product(wa, wb))
        out.add_term(w, c * FieldElement::from_integer(alg->field(), m));
    }
  }
  return out;
}

std::vector<AlgebraElement> enumerate_basis(const AlgebraRef& alg, long upto_index) {
  if (upto_index < 0) throw SpecMismatch("negative basis count");
  std::vector<AlgebraElement> out;
  long dim = alg->dimension();
  long want = (dim >= 0 && upto_index > dim) ? dim : upto_index;
  int d = 0;
  while (static_cast<long>(out.size()) < want) {
    for (const Word& w : alg->words_of_degree(d)) {
      if (static_cast<long>(out.size()) == want) break;
      out.push_back(AlgebraElement::basis_word(alg, w));
    }
    ++d;
  }
  return out;
}

AlgebraElement pow(const AlgebraElement& a, int e) {
  if (e < 0) throw SpecMismatch("negative exponent on an algebra element");
  AlgebraElement out = AlgebraElement::one(a.algebra());
  for (int i = 0; i < e; ++i) out = multiply(out, a);
  return out;
}

std::optional<AlgebraElement> try_divide_exact(const AlgebraElement& dividend,
                                               const AlgebraElement& divisor) {
  if (!dividend.algebra()->is_commutative())
    throw NonCommutativeAlgebra("exact division requires a commutative algebra");
  require_same_algebra(dividend, divisor);
  if (divisor.is_zero()) throw DivisionByZero("division by the zero polynomial");
  const AlgebraRef& alg = dividend.algebra();
  AlgebraElement rem = dividend;
  AlgebraElement quot(alg);
  // Divide against the largest graded-lex term; monomial orders on CommPoly
  // make this a standard multivariate division with a single divisor.
  const Word& lw = divisor.leading_word();
  const FieldElement& lc = divisor.leading_coeff();
  while (!rem.is_zero()) {
    const Word& rw = rem.leading_word();
    // Does lw divide rw as multisets?
    Word diff;
    {
      std::size_t i = 0, j = 0;
      bool ok = true;
      while (i < rw.size()) {
        if (j < lw.size() && rw[i] == lw[j]) {
          ++i, ++j;
        } else if (j < lw.size() && rw[i] > lw[j]) {
          ok = false;
          break;
        } else {
          diff.push_back(rw[i]);
          ++i;
        }
      }
      if (!ok || j < lw.size()) return std::nullopt;
    }
    FieldElement c = rem.leading_coeff() / lc;
    AlgebraElement mono(alg);
    mono.add_term(diff, c);
    quot = quot + mono;
    rem = rem - multiply(mono, divisor);
  }
  return quot;
}

// ---- Derivation ----

Derivation::Derivation(AlgebraRef alg, std::vector<AlgebraElement> images)
    : alg_(std::move(alg)), images_(std::move(images)) {
  if (alg_->id() != AlgebraId::CommPoly)
    throw SpecMismatch("derivations are defined on polynomial algebras only");
  if (static_cast<int>(images_.size()) != alg_->generator_count())
    throw SpecMismatch("derivation needs one image per variable");
  for (const auto& img : images_) require_same_algebra(img.algebra(), alg_);
}

std::string Derivation::str() const {
  std::ostringstream os;
  os << "D: ";
  for (int j = 0; j < alg_->generator_count(); ++j) {
    if (j) os << ", ";
    os << alg_->letter_name(j) << " -> " << images_[j].str();
  }
  return os.str();
}

AlgebraElement apply_derivation(const Derivation& d, const AlgebraElement& f) {
  require_same_algebra(d.algebra(), f.algebra());
  const AlgebraRef& alg = d.algebra();
  AlgebraElement out(alg);
  // Leibniz on each monomial: D(x_{l1}...x_{lk}) = sum_i x_{l1}..D(x_{li})..x_{lk}.
  for (const auto& [w, c] : f.terms()) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      Word rest;
      rest.reserve(w.size() - 1);
      rest.insert(rest.end(), w.begin(), w.begin() + i);
      rest.insert(rest.end(), w.begin() + i + 1, w.end());
      std::sort(rest.begin(), rest.end());
      AlgebraElement mono(alg);
      mono.add_term(rest, c);
      out = out + multiply(mono, d.images()[w[i]]);
    }
  }
  return out;
}

// ---- ModuleAction ----

ModuleAction ModuleAction::for_algebra(AlgebraRef alg) {
  switch (alg->id()) {
    case AlgebraId::Jacobson:
    case AlgebraId::Weyl:
    case AlgebraId::MatrixAlg:
      return ModuleAction(std::move(alg));
    default:
      throw SpecMismatch("no shipped module action for this presentation");
  }
}

namespace {

void module_add(ModuleVector& v, long k, const FieldElement& c) {
  if (c.is_zero()) return;
  auto it = v.find(k);
  if (it == v.end()) {
    v.emplace(k, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) v.erase(it);
  }
}

ModuleVector act_letter(const AlgebraRef& alg, std::uint8_t letter,
                        const ModuleVector& v) {
  const FieldSpec& spec = alg->field();
  ModuleVector out;
  switch (alg->id()) {
    case AlgebraId::Jacobson:
      for (const auto& [k, c] : v) {
        if (letter == 1) module_add(out, k + 1, c);      // y
        else if (k >= 1) module_add(out, k - 1, c);      // x
      }
      break;
    case AlgebraId::Weyl:
      for (const auto& [k, c] : v) {
        if (letter == 0) {
          module_add(out, k + 1, c);                     // q = multiply by s
        } else if (k >= 1) {
          module_add(out, k - 1, c * FieldElement::from_integer(spec, k));  // p = d/ds
        }
      }
      break;
    case AlgebraId::MatrixAlg: {
      int n = alg->generator_count();
      int row = letter / n, col = letter % n;
      for (const auto& [k, c] : v)
        if (k == col) module_add(out, row, c);
      break;
    }
    default:
      throw SpecMismatch("no shipped module action for this presentation");
  }
  return out;
}

}  // namespace

ModuleVector act(const ModuleAction& m, const AlgebraElement& a,
                 const ModuleVector& v) {
  require_same_algebra(m.algebra(), a.algebra());
  ModuleVector out;
  for (const auto& [w, c] : a.terms()) {
    ModuleVector cur = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      cur = act_letter(m.algebra(), *it, cur);
    for (const auto& [k, x] : cur) module_add(out, k, c * x);
  }
  return out;
}

bool faithfulness_probe(const ModuleAction& m, const AlgebraElement& a,
                        int n_probe) {
  if (n_probe < 1) throw SpecMismatch("probe window must be positive");
  for (long j = 0; j < n_probe; ++j) {
    ModuleVector e{{j, FieldElement::one(m.algebra()->field())}};
    if (!act(m, a, e).empty()) return true;
  }
  return false;
}

}  // namespace sepforge

#include "sepforge/parse.hpp"

#include <cctype>
#include <sstream>

#include "sepforge/errors.hpp"

namespace sepforge {

namespace {

struct Token {
  enum Kind { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    std::size_t start = i_;
    if (i_ >= s_.size()) {
      tok_ = {Token::End, "", start};
      return;
    }
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      tok_ = {Token::Number, s_.substr(i_, j - i_), start};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      tok_ = {Token::Name, s_.substr(i_, j - i_), start};
      i_ = j;
      return;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Plus; break;
      case '-': k = Token::Minus; break;
      case '*': k = Token::Star; break;
      case '/': k = Token::Slash; break;
      case '^': k = Token::Caret; break;
      case '(': k = Token::LParen; break;
      case ')': k = Token::RParen; break;
      default: {
        std::ostringstream os;
        os << "unexpected character '" << c << "' at position " << i_;
        throw ParseError(os.str());
      }
    }
    tok_ = {k, std::string(1, c), start};
    ++i_;
  }

  const std::string& s_;
  std::size_t i_ = 0;
  Token tok_{Token::End, "", 0};
};

class ElementParser {
 public:
  ElementParser(AlgebraRef alg, const std::string& text)
      : alg_(std::move(alg)), lex_(text) {
    for (int j = 0; j < alg_->letter_count(); ++j)
      letters_.emplace(alg_->letter_name(j), j);
  }

  AlgebraElement run() {
    AlgebraElement e = expr();
    if (lex_.peek().kind != Token::End)
      fail("trailing input after a complete expression", lex_.peek().pos);
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t pos) {
    std::ostringstream os;
    os << what << " at position " << pos;
    throw ParseError(os.str());
  }

  AlgebraElement expr() {
    AlgebraElement acc = term();
    while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
      Token op = lex_.take();
      AlgebraElement rhs = term();
      acc = op.kind == Token::Plus ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  AlgebraElement term() {
    AlgebraElement acc = unary();
    while (lex_.peek().kind == Token::Star || lex_.peek().kind == Token::Slash) {
      Token op = lex_.take();
      AlgebraElement rhs = unary();
      if (op.kind == Token::Star) {
        acc = multiply(acc, rhs);
      } else {
        auto c = rhs.as_scalar();
        if (!c) fail("division by a non-scalar element", op.pos);
        if (c->is_zero()) fail("division by zero", op.pos);
        acc = c->inverse() * acc;
      }
    }
    return acc;
  }

  AlgebraElement unary() {
    if (lex_.peek().kind == Token::Minus) {
      lex_.take();
      return -unary();
    }
    return power();
  }

  AlgebraElement power() {
    AlgebraElement base = atom();
    while (lex_.peek().kind == Token::Caret) {
      Token op = lex_.take();
      if (lex_.peek().kind != Token::Number)
        fail("exponent must be a nonnegative integer", op.pos);
      Token e = lex_.take();
      long n = 0;
      try {
        n = std::stol(e.text);
      } catch (const std::exception&) {
        fail("exponent out of range", e.pos);
      }
      if (n > 64) fail("exponent too large", e.pos);
      base = pow(base, static_cast<int>(n));
    }
    return base;
  }

  AlgebraElement atom() {
    Token t = lex_.peek();
    switch (t.kind) {
      case Token::LParen: {
        lex_.take();
        AlgebraElement e = expr();
        if (lex_.peek().kind != Token::RParen)
          fail("missing closing parenthesis", lex_.peek().pos);
        lex_.take();
        return e;
      }
      case Token::Number: {
        lex_.take();
        return AlgebraElement::scalar(
            alg_, FieldElement::from_integer(alg_->field(), mpz_class(t.text, 10)));
      }
      case Token::Name: {
        lex_.take();
        auto it = letters_.find(t.text);
        if (it != letters_.end())
          return AlgebraElement::generator(alg_, it->second);
        if (t.text == "t" &&
            alg_->field().kind() == FieldKind::RationalFunctions)
          return AlgebraElement::scalar(alg_, FieldElement::t());
        fail("unknown name '" + t.text + "'", t.pos);
      }
      default:
        fail("expected a coefficient, a generator name, or '('", t.pos);
    }
  }

  AlgebraRef alg_;
  Lexer lex_;
  std::map<std::string, int> letters_;
};

}  // namespace

AlgebraElement parse_element(const AlgebraRef& alg, const std::string& text) {
  return ElementParser(alg, text).run();
}

FieldElement parse_field_literal(const FieldSpec& spec, const std::string& text) {
  auto host = AlgebraPresentation::comm_poly(1, spec, {"_reserved"});
  AlgebraElement e = parse_element(host, text);
  auto c = e.as_scalar();
  if (!c) throw ParseError("expected a scalar literal");
  return *c;
}

}  // namespace sepforge

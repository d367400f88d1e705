#include "wdeg/parser.hpp"

#include <cctype>

#include "wdeg/errors.hpp"

namespace wdeg {

namespace {

constexpr std::uint32_t kMaxExponent = 1000;

enum class Tok { kEnd, kNumber, kIdent, kPlus, kMinus, kStar, kSlash, kCaret, kLParen, kRParen };

struct Token {
  Tok kind = Tok::kEnd;
  std::string_view text;
  std::size_t offset = 0;
};

class Parser {
 public:
  Parser(std::string_view text, const VariableScheme& scheme)
      : text_(text), scheme_(scheme), n_(scheme.ring_size()) {
    advance();
  }

  Polynomial parse() {
    Polynomial p = expr();
    if (tok_.kind != Tok::kEnd) fail("unexpected '" + std::string(tok_.text) + "'", tok_);
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what, const Token& at) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < at.offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) {
        ++column;  // count code points, not UTF-8 continuation bytes
      }
    }
    throw ParseError(what, line, column);
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok_.offset = pos_;
    if (pos_ >= text_.size()) {
      tok_ = {Tok::kEnd, "end of input", pos_};
      return;
    }
    const char c = text_[pos_];
    // U+2212 MINUS SIGN, as pasted from typeset formulas.
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      tok_ = {Tok::kMinus, text_.substr(pos_, 3), pos_};
      pos_ += 3;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
      tok_ = {Tok::kNumber, text_.substr(pos_, end - pos_), pos_};
      pos_ = end;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
        ++end;
      }
      tok_ = {Tok::kIdent, text_.substr(pos_, end - pos_), pos_};
      pos_ = end;
      return;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::kPlus; break;
      case '-': kind = Tok::kMinus; break;
      case '*': kind = Tok::kStar; break;
      case '/': kind = Tok::kSlash; break;
      case '^': kind = Tok::kCaret; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      default:
        fail("unexpected character '" + std::string(1, c) + "'", {Tok::kEnd, {}, pos_});
    }
    tok_ = {kind, text_.substr(pos_, 1), pos_};
    ++pos_;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (tok_.kind == Tok::kPlus || tok_.kind == Tok::kMinus) {
      const bool minus = tok_.kind == Tok::kMinus;
      advance();
      Polynomial rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (tok_.kind == Tok::kStar || tok_.kind == Tok::kSlash) {
      const bool divide = tok_.kind == Tok::kSlash;
      const Token op = tok_;
      advance();
      Polynomial rhs = unary();
      if (!divide) {
        acc = acc * rhs;
        continue;
      }
      if (!rhs.is_constant()) fail("division by a non-constant", op);
      if (rhs.is_zero()) fail("division by zero", op);
      acc = acc.divided_by(rhs.constant_term());
    }
    return acc;
  }

  Polynomial unary() {
    if (tok_.kind == Tok::kMinus) {
      advance();
      return -unary();
    }
    if (tok_.kind == Tok::kPlus) {
      advance();
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (tok_.kind != Tok::kCaret) return base;
    advance();
    if (tok_.kind != Tok::kNumber) fail("exponent must be a nonnegative integer", tok_);
    const Token at = tok_;
    if (at.text.size() > 4 || std::stoul(std::string(at.text)) > kMaxExponent) {
      fail("exponent larger than " + std::to_string(kMaxExponent), at);
    }
    const auto e = static_cast<std::uint32_t>(std::stoul(std::string(at.text)));
    advance();
    if (tok_.kind == Tok::kCaret) fail("chained exponents need parentheses", tok_);
    return base.pow(e);
  }

  Polynomial primary() {
    const Token at = tok_;
    switch (at.kind) {
      case Tok::kNumber: {
        advance();
        return Polynomial::constant(n_, Rational(std::string(at.text), 10));
      }
      case Tok::kIdent: {
        advance();
        return Polynomial::variable(n_, resolve(at));
      }
      case Tok::kLParen: {
        advance();
        Polynomial inner = expr();
        if (tok_.kind != Tok::kRParen) fail("expected ')'", tok_);
        advance();
        return inner;
      }
      case Tok::kEnd:
        fail("unexpected end of input", at);
      default:
        fail("unexpected '" + std::string(at.text) + "'", at);
    }
  }

  std::size_t resolve(const Token& at) const {
    const std::string_view name = at.text;
    if (scheme_.with_y && name == "y") return scheme_.count;
    const std::string_view prefix = scheme_.prefix;
    if (name.size() > prefix.size() && name.substr(0, prefix.size()) == prefix) {
      const std::string_view digits = name.substr(prefix.size());
      bool numeric = digits.size() <= 6 && digits[0] != '0';
      for (char d : digits) numeric = numeric && std::isdigit(static_cast<unsigned char>(d));
      if (numeric) {
        const std::size_t index = std::stoul(std::string(digits));
        if (index >= 1 && index <= scheme_.count) return index - 1;
        fail("unknown variable '" + std::string(name) + "' (only " + std::string(prefix) +
                 "1.." + std::string(prefix) + std::to_string(scheme_.count) + " exist)",
             at);
      }
    }
    fail("unknown variable '" + std::string(name) + "'", at);
  }

  std::string_view text_;
  const VariableScheme& scheme_;
  std::size_t n_;
  std::size_t pos_ = 0;
  Token tok_;
};

}  // namespace

Polynomial parse_expression(std::string_view text, const VariableScheme& scheme) {
  if (scheme.ring_size() > Monomial::kMaxVars) throw InputError("too many variables");
  return Parser(text, scheme).parse();
}

Polynomial parse_polynomial(std::string_view text, std::size_t n) {
  return parse_expression(text, {"x", n, false});
}

UPoly parse_upoly(std::string_view text, std::size_t n) {
  return UPoly::from_polynomial(parse_expression(text, {"x", n, true}), n);
}

UPoly parse_upoly_over_z(std::string_view text, std::size_t r) {
  return UPoly::from_polynomial(parse_expression(text, {"z", r, true}), r);
}

}  // namespace wdeg

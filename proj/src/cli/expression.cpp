#include "foliate/cli/expression.hpp"

#include <cctype>
#include <climits>

#include "foliate/error.hpp"

namespace foliate::cli {

namespace {

// expr    := term (('+' | '-') term)*
// term    := unary (('*' | '/') unary)*
// unary   := '-' unary | power
// power   := primary ('^' INT)?
// primary := INT | IDENT | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, const VarList& vars) : text_(text), zero_(vars) {}

  RationalFunction parse() {
    skip_space();
    if (at_end()) fail(ErrorCode::SyntaxError, "empty expression");
    RationalFunction r = expr();
    skip_space();
    if (!at_end()) fail(ErrorCode::SyntaxError, std::string("unexpected '") + text_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(ErrorCode code, const std::string& msg) const { throw SyntaxError(code, msg, pos_); }

  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RationalFunction d = unary();
        if (d.is_zero()) throw SyntaxError(ErrorCode::ZeroDenominator, "division by zero", at);
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) {
      fail(ErrorCode::NonIntegerExponent, "exponent must be a nonnegative integer literal");
    }
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) fail(ErrorCode::NonIntegerExponent, "exponent " + digits + " is too large");
    const unsigned e = static_cast<unsigned>(std::stoul(digits));
    skip_space();
    if (!at_end() && text_[pos_] == '^') fail(ErrorCode::SyntaxError, "chained exponents need parentheses");
    return RationalFunction(base.num().pow(e), base.den().pow(e));
  }

  RationalFunction primary() {
    skip_space();
    if (at_end()) fail(ErrorCode::SyntaxError, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction inner = expr();
      if (!accept(')')) fail(ErrorCode::SyntaxError, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const Rational value = Rational::parse(text_.substr(start, pos_ - start));
      return RationalFunction(zero_.constant_like(GaussianRational(value)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "i") return RationalFunction(zero_.constant_like(GaussianRational::i()));
      if (!zero_.find_variable(name)) {
        throw SyntaxError(ErrorCode::UnknownVariable, "unknown variable '" + name + "'", start);
      }
      return RationalFunction(zero_.variable_like(name));
    }
    fail(ErrorCode::SyntaxError, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  MultiPoly zero_;
};

}  // namespace

RationalFunction parse_rational(std::string_view text, const VarList& vars) { return Parser(text, vars).parse(); }

MultiPoly parse_polynomial(std::string_view text, const VarList& vars) {
  const RationalFunction r = parse_rational(text, vars);
  if (auto p = r.as_polynomial()) return *p;
  throw Error(ErrorCode::DivisionNotRational,
              "'" + std::string(text) + "' reduces to " + r.to_string() + ", which is not a polynomial");
}

}  // namespace foliate::cli

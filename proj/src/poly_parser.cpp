#include "arithdyn/poly_parser.hpp"

#include <cctype>
#include <sstream>

#include "arithdyn/error.hpp"

namespace arithdyn {

namespace {

struct Token {
  enum Type { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Type type;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      bump(src_[pos_]);
      ++pos_;
    }
    current_.line = line_;
    current_.col = col_;
    if (pos_ >= src_.size()) {
      current_.type = Token::End;
      current_.text.clear();
      return;
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        bump(src_[pos_]);
        ++pos_;
      }
      current_.type = Token::Number;
      current_.text = src_.substr(start, pos_ - start);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        bump(src_[pos_]);
        ++pos_;
      }
      current_.type = Token::Ident;
      current_.text = src_.substr(start, pos_ - start);
      return;
    }
    bump(c);
    ++pos_;
    current_.text = std::string(1, c);
    switch (c) {
      case '+': current_.type = Token::Plus; return;
      case '-': current_.type = Token::Minus; return;
      case '*': current_.type = Token::Star; return;
      case '/': current_.type = Token::Slash; return;
      case '^': current_.type = Token::Caret; return;
      case '(': current_.type = Token::LParen; return;
      case ')': current_.type = Token::RParen; return;
      default: break;
    }
    std::ostringstream msg;
    msg << "unexpected character '" << c << "' at line " << current_.line << ", column "
        << current_.col;
    fail(ErrorKind::Parse, msg.str());
  }

  void bump(char c) {
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_{};
};

class Parser {
 public:
  Parser(const std::string& src, const VarListPtr& vars) : lex_(src), vars_(vars) {}

  MultiPoly parse() {
    MultiPoly p = parse_sum();
    const Token& t = lex_.peek();
    if (t.type != Token::End) {
      error(t, "unexpected trailing input");
    }
    return p;
  }

 private:
  [[noreturn]] void error(const Token& t, const std::string& what) {
    std::ostringstream msg;
    msg << what << " at line " << t.line << ", column " << t.col;
    if (!t.text.empty()) msg << " (near '" << t.text << "')";
    fail(ErrorKind::Parse, msg.str());
  }

  MultiPoly parse_sum() {
    bool negate = false;
    while (lex_.peek().type == Token::Plus || lex_.peek().type == Token::Minus) {
      if (lex_.take().type == Token::Minus) negate = !negate;
    }
    MultiPoly acc = parse_product();
    if (negate) acc = -acc;
    while (lex_.peek().type == Token::Plus || lex_.peek().type == Token::Minus) {
      const bool minus = lex_.take().type == Token::Minus;
      MultiPoly rhs = parse_product();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  MultiPoly parse_product() {
    MultiPoly acc = parse_power();
    for (;;) {
      const Token& t = lex_.peek();
      if (t.type == Token::Star) {
        lex_.take();
        acc = acc * parse_power();
      } else if (t.type == Token::Slash) {
        Token op = lex_.take();
        MultiPoly d = parse_power();
        if (!d.is_constant() || d.is_zero()) {
          error(op, "division requires a nonzero constant divisor");
        }
        acc = acc * Rational(1 / d.constant_term());
      } else if (t.type == Token::Ident || t.type == Token::LParen || t.type == Token::Number) {
        // Implicit multiplication: "3x", "2(x+y)", "(x+y)(x-y)".
        acc = acc * parse_power();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly parse_power() {
    MultiPoly base = parse_atom();
    if (lex_.peek().type == Token::Caret) {
      Token op = lex_.take();
      const Token& e = lex_.peek();
      if (e.type != Token::Number) {
        error(op, "exponent must be a nonnegative integer");
      }
      Token num = lex_.take();
      unsigned long n = 0;
      try {
        n = std::stoul(num.text);
      } catch (const std::exception&) {
        error(num, "exponent out of range");
      }
      return base.pow(n);
    }
    return base;
  }

  MultiPoly parse_atom() {
    const Token t = lex_.take();
    switch (t.type) {
      case Token::Number:
        return MultiPoly::constant(vars_, parse_rational(t.text));
      case Token::Ident: {
        for (std::size_t i = 0; i < vars_->size(); ++i) {
          if ((*vars_)[i] == t.text) return MultiPoly::variable(vars_, i);
        }
        error(t, "unknown variable '" + t.text + "'");
      }
      case Token::LParen: {
        MultiPoly inner = parse_sum();
        const Token close = lex_.take();
        if (close.type != Token::RParen) error(close, "expected ')'");
        return inner;
      }
      case Token::Minus:
        return -parse_atom();
      case Token::Plus:
        return parse_atom();
      default:
        error(t, "expected a term");
    }
  }

  Lexer lex_;
  VarListPtr vars_;
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const VarListPtr& vars) {
  return Parser(text, vars).parse();
}

}  // namespace arithdyn

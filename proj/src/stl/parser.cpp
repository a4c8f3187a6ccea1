#include "ogan/stl/parser.hpp"

#include <cctype>
#include <cstdlib>
#include <optional>
#include <vector>

namespace ogan::stl {

namespace {

enum class Tok {
  Ident,
  Number,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Plus,
  Minus,
  Star,
  Lt,
  Le,
  Gt,
  Ge,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  double number = 0.0;
  int line = 1;
  int column = 1;
};

bool is_keyword(const std::string& s) {
  return s == "always" || s == "eventually" || s == "until" || s == "not" ||
         s == "and" || s == "or" || s == "implies" || s == "abs" ||
         s == "true";
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  const std::size_t n = text.size();

  auto push = [&](Tok kind, std::string s, int l, int c) {
    Token t;
    t.kind = kind;
    t.text = std::move(s);
    t.line = l;
    t.column = c;
    out.push_back(std::move(t));
  };

  while (i < n) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++col;
      ++i;
      continue;
    }
    const int l = line;
    const int c = col;
    if (ch == '#') {  // comment to end of line
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < n && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                       text[j] == '_')) {
        ++j;
      }
      push(Tok::Ident, text.substr(i, j - i), l, c);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) ||
        (ch == '.' && i + 1 < n &&
         std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t j = i;
      while (j < n && (std::isdigit(static_cast<unsigned char>(text[j])) ||
                       text[j] == '.' || text[j] == 'e' || text[j] == 'E' ||
                       ((text[j] == '+' || text[j] == '-') && j > i &&
                        (text[j - 1] == 'e' || text[j - 1] == 'E')))) {
        ++j;
      }
      const std::string s = text.substr(i, j - i);
      char* end = nullptr;
      const double v = std::strtod(s.c_str(), &end);
      if (end != s.c_str() + s.size()) {
        throw ParseError("bad numeric literal `" + s + "`", l, c);
      }
      Token t;
      t.kind = Tok::Number;
      t.text = s;
      t.number = v;
      t.line = l;
      t.column = c;
      out.push_back(std::move(t));
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    auto two = [&](char second) {
      return i + 1 < n && text[i + 1] == second;
    };
    switch (ch) {
      case '(':
        push(Tok::LParen, "(", l, c);
        break;
      case ')':
        push(Tok::RParen, ")", l, c);
        break;
      case '[':
        push(Tok::LBracket, "[", l, c);
        break;
      case ']':
        push(Tok::RBracket, "]", l, c);
        break;
      case ',':
        push(Tok::Comma, ",", l, c);
        break;
      case '+':
        push(Tok::Plus, "+", l, c);
        break;
      case '-':
        push(Tok::Minus, "-", l, c);
        break;
      case '*':
        push(Tok::Star, "*", l, c);
        break;
      case '<':
        if (two('=')) {
          push(Tok::Le, "<=", l, c);
          ++i;
          ++col;
        } else {
          push(Tok::Lt, "<", l, c);
        }
        break;
      case '>':
        if (two('=')) {
          push(Tok::Ge, ">=", l, c);
          ++i;
          ++col;
        } else {
          push(Tok::Gt, ">", l, c);
        }
        break;
      default:
        throw ParseError(std::string("unexpected character `") + ch + "`", l,
                         c);
    }
    ++i;
    ++col;
  }
  Token end;
  end.kind = Tok::End;
  end.line = line;
  end.column = col;
  out.push_back(std::move(end));
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  FormulaPtr parse() {
    auto f = parse_formula();
    expect_end();
    return f;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;

  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool at(Tok k) const { return peek().kind == k; }

  bool at_ident(const char* word) const {
    return peek().kind == Tok::Ident && peek().text == word;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().column);
  }

  void expect(Tok k, const char* what) {
    if (!at(k)) fail(std::string("expected ") + what);
    advance();
  }

  void expect_end() {
    if (!at(Tok::End)) {
      fail("unexpected trailing input `" + peek().text + "`");
    }
  }

  Interval parse_interval() {
    expect(Tok::LBracket, "`[` to open an interval");
    const Token& lo_tok = peek();
    const double lo = parse_signed_number();
    expect(Tok::Comma, "`,` between interval bounds");
    const double hi = parse_signed_number();
    expect(Tok::RBracket, "`]` to close the interval");
    if (lo < 0.0 || hi < 0.0) {
      throw ParseError("malformed interval: negative bound", lo_tok.line,
                       lo_tok.column);
    }
    if (lo > hi) {
      throw ParseError("malformed interval: lo > hi", lo_tok.line,
                       lo_tok.column);
    }
    return Interval{lo, hi};
  }

  double parse_signed_number() {
    double sign = 1.0;
    if (at(Tok::Minus)) {
      advance();
      sign = -1.0;
    }
    if (!at(Tok::Number)) fail("expected a number");
    return sign * advance().number;
  }

  // implies (right associative, lowest precedence)
  FormulaPtr parse_formula() {
    auto left = parse_or();
    if (at_ident("implies")) {
      advance();
      auto right = parse_formula();
      return implication(std::move(left), std::move(right));
    }
    return left;
  }

  FormulaPtr parse_or() {
    auto left = parse_and();
    while (at_ident("or")) {
      advance();
      left = disjunction(std::move(left), parse_and());
    }
    return left;
  }

  FormulaPtr parse_and() {
    auto left = parse_until();
    while (at_ident("and")) {
      advance();
      left = conjunction(std::move(left), parse_until());
    }
    return left;
  }

  FormulaPtr parse_until() {
    auto left = parse_unary();
    if (at_ident("until")) {
      advance();
      const Interval w = parse_interval();
      auto right = parse_until();
      return until(w, std::move(left), std::move(right));
    }
    return left;
  }

  FormulaPtr parse_unary() {
    if (at_ident("not")) {
      advance();
      return negation(parse_unary());
    }
    if (at_ident("always")) {
      advance();
      const Interval w = parse_interval();
      return always(w, parse_unary());
    }
    if (at_ident("eventually")) {
      advance();
      const Interval w = parse_interval();
      return eventually(w, parse_unary());
    }
    if (at_ident("true")) {
      advance();
      return truth();
    }
    // An identifier directly followed by an interval is a typo'd temporal
    // operator; report it as such instead of a generic predicate error.
    if (at(Tok::Ident) && !is_keyword(peek().text) &&
        pos_ + 1 < tokens_.size() && tokens_[pos_ + 1].kind == Tok::LBracket) {
      fail("unknown operator `" + peek().text + "`");
    }
    if (at(Tok::LParen)) {
      // Either a parenthesized formula or a parenthesized arithmetic
      // expression opening a predicate; try the predicate reading first.
      const std::size_t mark = pos_;
      try {
        return parse_predicate();
      } catch (const ParseError&) {
        pos_ = mark;
      }
      advance();
      auto f = parse_formula();
      expect(Tok::RParen, "`)`");
      return f;
    }
    return parse_predicate();
  }

  FormulaPtr parse_predicate() {
    auto lhs = parse_expr();
    Relation rel;
    switch (peek().kind) {
      case Tok::Lt:
        rel = Relation::Lt;
        break;
      case Tok::Le:
        rel = Relation::Le;
        break;
      case Tok::Gt:
        rel = Relation::Gt;
        break;
      case Tok::Ge:
        rel = Relation::Ge;
        break;
      default:
        fail("expected a relation (<, <=, >, >=)");
    }
    advance();
    auto rhs = parse_expr();
    return predicate(std::move(lhs), rel, std::move(rhs));
  }

  ExprPtr parse_expr() {
    auto left = parse_term();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      const bool plus = at(Tok::Plus);
      advance();
      auto right = parse_term();
      left = plus ? sum(std::move(left), std::move(right))
                  : difference(std::move(left), std::move(right));
    }
    return left;
  }

  ExprPtr parse_term() {
    auto left = parse_factor();
    while (at(Tok::Star)) {
      advance();
      auto right = parse_factor();
      // Scale keeps a constant coefficient; one side must be constant.
      if (left->kind == Expr::Kind::Constant) {
        left = scale(left->value, std::move(right));
      } else if (right->kind == Expr::Kind::Constant) {
        left = scale(right->value, std::move(left));
      } else {
        fail("`*` needs a constant factor");
      }
    }
    return left;
  }

  ExprPtr parse_factor() {
    if (at(Tok::Minus)) {
      advance();
      auto inner = parse_factor();
      if (inner->kind == Expr::Kind::Constant) {
        return constant(-inner->value);
      }
      return scale(-1.0, std::move(inner));
    }
    if (at(Tok::Number)) {
      return constant(advance().number);
    }
    if (at_ident("abs")) {
      advance();
      expect(Tok::LParen, "`(` after abs");
      auto inner = parse_expr();
      expect(Tok::RParen, "`)` after abs argument");
      return abs_of(std::move(inner));
    }
    if (at(Tok::Ident)) {
      if (is_keyword(peek().text)) {
        fail("unexpected keyword `" + peek().text + "` in expression");
      }
      return signal_ref(advance().text);
    }
    if (at(Tok::LParen)) {
      advance();
      auto inner = parse_expr();
      expect(Tok::RParen, "`)`");
      return inner;
    }
    fail("expected an expression");
  }
};

}  // namespace

FormulaPtr parse_stl(const std::string& text) {
  Parser parser(tokenize(text));
  return parser.parse();
}

}  // namespace ogan::stl

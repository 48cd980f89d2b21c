#include "fakepoly/cli/parser.hpp"

#include <cctype>
#include <limits>
#include <optional>

#include "fakepoly/error.hpp"

namespace fakepoly::cli {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, LBracket, RBracket, Comma, Slash, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= src_.size()) return t;
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::Number;
      read_digits(t.text);
      // p/q is a single rational literal when a digit follows the slash.
      if (pos_ + 1 < src_.size() && src_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
        t.text += '/';
        advance();
        read_digits(t.text);
      }
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::Ident;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        t.text += src_[pos_];
        advance();
      }
      return t;
    }
    t.text = std::string(1, c);
    switch (c) {
      case '+': t.kind = Tok::Plus; break;
      case '-': t.kind = Tok::Minus; break;
      case '*': t.kind = Tok::Star; break;
      case '^': t.kind = Tok::Caret; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case '[': t.kind = Tok::LBracket; break;
      case ']': t.kind = Tok::RBracket; break;
      case ',': t.kind = Tok::Comma; break;
      case '/': t.kind = Tok::Slash; break;
      default:
        throw ParseError("unexpected character '" + t.text + "'", t.line, t.column);
    }
    advance();
    return t;
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }
  void read_digits(std::string& out) {
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      out += src_[pos_];
      advance();
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

const char* describe(Tok k) {
  switch (k) {
    case Tok::Number: return "number";
    case Tok::Ident: return "identifier";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Slash: return "'/'";
    case Tok::End: return "end of input";
  }
  return "token";
}

class Parser {
 public:
  Parser(std::string_view src, bool allow_schema) : lexer_(src), allow_schema_(allow_schema) {
    current_ = lexer_.next();
  }

  /// Returns the summand tree and whether the input was a schema.
  std::pair<FormulaPtr, bool> parse_top() {
    if (current_.kind == Tok::Ident && current_.text == "sum_i") {
      if (!allow_schema_) fail("a sum_i schema is not allowed here");
      schema_ = true;
      advance();
    }
    FormulaPtr tree = expr();
    if (current_.kind != Tok::End) {
      fail("unexpected " + std::string(describe(current_.kind)) +
           "; expected one of: '+', '-', '*', '^', end of input");
    }
    return {tree, schema_};
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, current_.line, current_.column);
  }

  void advance() { current_ = lexer_.next(); }

  FormulaPtr expr() {
    FormulaPtr lhs = term();
    while (current_.kind == Tok::Plus || current_.kind == Tok::Minus) {
      auto kind = current_.kind == Tok::Plus ? Formula::Kind::Sum : Formula::Kind::Difference;
      advance();
      lhs = Formula::binary(kind, lhs, term());
    }
    return lhs;
  }

  FormulaPtr term() {
    FormulaPtr lhs = unary();
    while (current_.kind == Tok::Star) {
      advance();
      lhs = Formula::binary(Formula::Kind::Product, lhs, unary());
    }
    return lhs;
  }

  FormulaPtr unary() {
    if (current_.kind == Tok::Minus) {
      advance();
      return Formula::negate(unary());
    }
    return power();
  }

  FormulaPtr power() {
    FormulaPtr base = primary();
    while (current_.kind == Tok::Caret) {
      advance();
      base = exponent(base);
    }
    return base;
  }

  FormulaPtr exponent(FormulaPtr base) {
    static const char* kBadExponent = "exponent must be a nonnegative integer";
    if (current_.kind == Tok::Number) {
      if (current_.text.find('/') != std::string::npos) fail(kBadExponent);
      unsigned long e = 0;
      try {
        e = std::stoul(current_.text);
      } catch (const std::exception&) {
        fail(kBadExponent);
      }
      if (e > 4096) fail("exponent too large (limit 4096)");
      advance();
      return Formula::power(base, static_cast<unsigned>(e));
    }
    if (current_.kind == Tok::Ident && current_.text == "i") {
      if (!schema_) fail("exponent i is only valid inside a sum_i schema");
      advance();
      return Formula::index_power(base);
    }
    if (current_.kind == Tok::Minus || current_.kind == Tok::LParen) fail(kBadExponent);
    fail("unexpected " + std::string(describe(current_.kind)) +
         "; expected one of: nonnegative integer, i");
  }

  FormulaPtr primary() {
    if (current_.kind == Tok::Number) {
      Rational value(current_.text);
      if (sgn(value.get_den()) == 0) fail("zero denominator");
      value.canonicalize();
      advance();
      return Formula::constant(value);
    }
    if (current_.kind == Tok::Ident) {
      const std::string& id = current_.text;
      FormulaPtr out;
      if (id == "x_i") {
        if (!schema_) fail("x_i is only valid inside a sum_i schema");
        out = Formula::schema_coordinate();
      } else if (id == "i") {
        if (!schema_) fail("index i is only valid inside a sum_i schema");
        out = Formula::index();
      } else if (id.size() > 1 && id[0] == 'x' &&
                 id.find_first_not_of("0123456789", 1) == std::string::npos) {
        if (schema_) fail("fixed coordinate " + id + " inside a sum_i schema; use x_i");
        if (id.size() > 9) fail("coordinate index too large");
        const std::size_t k = std::stoul(id.substr(1));
        if (k == 0) fail("coordinate indices are 1-based (x1, x2, ...)");
        out = Formula::coordinate(k - 1);
      } else {
        fail("unknown identifier '" + id + "'; expected x<k>" +
             std::string(schema_ ? ", x_i or i" : ""));
      }
      advance();
      return out;
    }
    if (current_.kind == Tok::LParen) {
      advance();
      FormulaPtr inner = expr();
      if (current_.kind != Tok::RParen) {
        fail("unexpected " + std::string(describe(current_.kind)) + "; expected ')'");
      }
      advance();
      return inner;
    }
    fail("unexpected " + std::string(describe(current_.kind)) +
         "; expected one of: number, variable, '(', '-'");
  }

  Lexer lexer_;
  Token current_;
  bool allow_schema_;
  bool schema_ = false;
};

}  // namespace

std::string FunctionSpec::canonical() const { return family.canonical(); }

FunctionSpec parse_function(std::string_view src) {
  Parser parser(src, true);
  auto [tree, schema] = parser.parse_top();
  FunctionSpec spec;
  spec.source = std::string(src);
  spec.tree = tree;
  if (schema) {
    try {
      spec.family = FunctionFamily::schema(tree);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), 1, 1);
    }
  } else {
    spec.family = FunctionFamily::concrete(tree->evaluate());
  }
  return spec;
}

PolyExpr parse_polynomial(std::string_view src) {
  Parser parser(src, false);
  return parser.parse_top().first->evaluate();
}

Subgroup parse_subgroup(std::string_view src) {
  Lexer lexer(src);
  Token t = lexer.next();
  auto expect = [&](Tok kind) {
    if (t.kind != kind) {
      throw ParseError("malformed matrix: unexpected " + std::string(describe(t.kind)) +
                           "; expected " + describe(kind),
                       t.line, t.column);
    }
    t = lexer.next();
  };
  auto integer = [&]() -> std::int64_t {
    bool negative = false;
    if (t.kind == Tok::Minus) {
      negative = true;
      t = lexer.next();
    }
    if (t.kind != Tok::Number || t.text.find('/') != std::string::npos || t.text.size() > 15) {
      throw ParseError("malformed matrix: expected an integer entry", t.line, t.column);
    }
    std::int64_t v = std::stoll(t.text);
    t = lexer.next();
    return negative ? -v : v;
  };

  std::vector<GroupElement> columns;
  std::optional<std::size_t> width;
  expect(Tok::LBracket);
  if (t.kind != Tok::RBracket) {
    while (true) {
      const Token start = t;
      expect(Tok::LBracket);
      std::vector<std::int64_t> col;
      if (t.kind != Tok::RBracket) {
        col.push_back(integer());
        while (t.kind == Tok::Comma) {
          t = lexer.next();
          col.push_back(integer());
        }
      }
      expect(Tok::RBracket);
      if (width && *width != col.size()) {
        throw ParseError("malformed matrix: generator columns have different lengths", start.line,
                         start.column);
      }
      width = col.size();
      columns.emplace_back(col);
      if (t.kind != Tok::Comma) break;
      t = lexer.next();
    }
  }
  expect(Tok::RBracket);
  expect(Tok::End);
  return Subgroup(std::move(columns), width.value_or(0));
}

}  // namespace fakepoly::cli

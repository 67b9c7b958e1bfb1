#ifndef MULTICOH_PARSE_HPP
#define MULTICOH_PARSE_HPP

#include <cctype>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multicoh/print.hpp"
#include "multicoh/sheaf.hpp"
#include "multicoh/space.hpp"

namespace multicoh {

/// Error report for the expression DSL. `offset` is a byte position inside
/// (or one past the end of) the input. Semantic diagnostics mark input that
/// is well-formed but invalid (arity, ranges); everything else is syntax.
struct ParseDiagnostic {
  size_t offset = 0;
  std::string message;
  std::vector<std::string> expected;
  bool semantic = false;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(ParseDiagnostic diag)
      : std::runtime_error(format(diag)), diag_(std::move(diag)) {}

  const ParseDiagnostic& diagnostic() const { return diag_; }

 private:
  static std::string format(const ParseDiagnostic& d) {
    std::string msg = "at offset " + std::to_string(d.offset) + ": " + d.message;
    if (!d.expected.empty()) {
      msg += " (expected ";
      for (size_t i = 0; i < d.expected.size(); ++i) {
        if (i) msg += ", ";
        msg += d.expected[i];
      }
      msg += ")";
    }
    return msg;
  }

  ParseDiagnostic diag_;
};

namespace detail {

struct Token {
  enum class Type { Ident, Int, Comma, LParen, RParen, Plus, Star, End };
  Type type;
  size_t offset;
  std::string text;
  long long value = 0;
};

inline const char* token_name(Token::Type t) {
  switch (t) {
    case Token::Type::Ident: return "name";
    case Token::Type::Int: return "integer";
    case Token::Type::Comma: return "','";
    case Token::Type::LParen: return "'('";
    case Token::Type::RParen: return "')'";
    case Token::Type::Plus: return "'+'";
    case Token::Type::Star: return "'*'";
    default: return "end of input";
  }
}

/// LL(1) scanner/parser for the bundle DSL.
class Parser {
 public:
  explicit Parser(std::string_view input) : input_(input) { advance(); }

  [[noreturn]] void fail(size_t offset, std::string message,
                         std::vector<std::string> expected = {}, bool semantic = false) const {
    throw ParseError({offset, std::move(message), std::move(expected), semantic});
  }

  const Token& peek() const { return tok_; }

  Token advance() {
    Token prev = tok_;
    tok_ = lex();
    return prev;
  }

  Token expect(Token::Type type) {
    if (tok_.type != type)
      fail(tok_.offset, std::string("unexpected ") + describe(tok_), {token_name(type)});
    return advance();
  }

  long long expect_int() {
    Token t = expect(Token::Type::Int);
    return t.value;
  }

  long long expect_nat(const char* what) {
    if (tok_.type != Token::Type::Int || tok_.value < 0)
      fail(tok_.offset, std::string("expected a nonnegative integer for ") + what,
           {"nonnegative integer"});
    return advance().value;
  }

  void expect_end() {
    if (tok_.type != Token::Type::End)
      fail(tok_.offset, std::string("trailing input: unexpected ") + describe(tok_),
           {token_name(Token::Type::End)});
  }

 private:
  static std::string describe(const Token& t) {
    if (t.type == Token::Type::End) return "end of input";
    return "'" + t.text + "'";
  }

  Token lex() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) ++pos_;
    const size_t start = pos_;
    if (pos_ >= input_.size()) return {Token::Type::End, start, "", 0};
    const char c = input_[pos_];
    switch (c) {
      case ',': ++pos_; return {Token::Type::Comma, start, ",", 0};
      case '(': ++pos_; return {Token::Type::LParen, start, "(", 0};
      case ')': ++pos_; return {Token::Type::RParen, start, ")", 0};
      case '+': ++pos_; return {Token::Type::Plus, start, "+", 0};
      case '*': ++pos_; return {Token::Type::Star, start, "*", 0};
      default: break;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      size_t p = pos_ + (c == '-' ? 1 : 0);
      if (p >= input_.size() || !std::isdigit(static_cast<unsigned char>(input_[p])))
        fail(start, "stray '-' without digits", {"integer"});
      long long v = 0;
      bool overflow = false;
      while (p < input_.size() && std::isdigit(static_cast<unsigned char>(input_[p]))) {
        if (v > (std::numeric_limits<long long>::max() - 9) / 10) overflow = true;
        if (!overflow) v = v * 10 + (input_[p] - '0');
        ++p;
      }
      if (overflow) fail(start, "integer literal out of range");
      const std::string text(input_.substr(start, p - start));
      pos_ = p;
      return {Token::Type::Int, start, text, c == '-' ? -v : v};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t p = pos_;
      while (p < input_.size() && std::isalpha(static_cast<unsigned char>(input_[p]))) ++p;
      const std::string text(input_.substr(start, p - start));
      pos_ = p;
      return {Token::Type::Ident, start, text, 0};
    }
    fail(start, std::string("unexpected character '") + c + "'");
  }

  std::string_view input_;
  size_t pos_ = 0;
  Token tok_{Token::Type::End, 0, "", 0};
};

}  // namespace detail

/// space := nat ("," nat)*, each component >= 1.
inline Space parse_space(std::string_view text) {
  detail::Parser p(text);
  if (p.peek().type == detail::Token::Type::End)
    p.fail(p.peek().offset, "empty input", {"integer"});
  std::vector<int> dims;
  while (true) {
    const size_t off = p.peek().offset;
    const long long n = p.expect_int();
    if (n < 1) p.fail(off, "factor dimension must be >= 1", {}, true);
    if (n > (1 << 20)) p.fail(off, "factor dimension is unreasonably large", {}, true);
    dims.push_back(static_cast<int>(n));
    if (p.peek().type != detail::Token::Type::Comma) break;
    p.advance();
  }
  p.expect_end();
  return Space(dims);
}

namespace detail {

inline FactorSheaf parse_factor(Parser& p, const Space& space, int slot) {
  const Token name = p.expect(Token::Type::Ident);
  if (name.text == "O") {
    p.expect(Token::Type::LParen);
    const long long a = p.expect_int();
    p.expect(Token::Type::RParen);
    return FactorSheaf::line(a);
  }
  if (name.text == "Om") {
    p.expect(Token::Type::LParen);
    const size_t p_off = p.peek().offset;
    const long long power = p.expect_nat("the exterior power");
    p.expect(Token::Type::Comma);
    const long long t = p.expect_int();
    p.expect(Token::Type::RParen);
    const int n = space.dim(slot);
    if (power > n)
      p.fail(p_off,
             "exterior power " + std::to_string(power) + " exceeds the slot dimension " +
                 std::to_string(n),
             {}, true);
    return FactorSheaf::diff(static_cast<int>(power), t);
  }
  p.fail(name.offset, "unknown factor '" + name.text + "'", {"O", "Om"});
}

inline Atom parse_atom(Parser& p, const Space& space) {
  const Token name = p.expect(Token::Type::Ident);
  const int s = space.factors();
  if (name.text == "O") {
    p.expect(Token::Type::LParen);
    Multidegree a;
    a.push_back(p.expect_int());
    while (p.peek().type == Token::Type::Comma) {
      p.advance();
      a.push_back(p.expect_int());
    }
    const size_t close_off = p.peek().offset;
    p.expect(Token::Type::RParen);
    if (static_cast<int>(a.size()) != s)
      p.fail(close_off,
             "atom has " + std::to_string(a.size()) + " component(s), space has " +
                 std::to_string(s),
             {}, true);
    return Atom::line(space, a);
  }
  if (name.text == "box") {
    p.expect(Token::Type::LParen);
    std::vector<FactorSheaf> fs;
    fs.push_back(parse_factor(p, space, 0));
    while (p.peek().type == Token::Type::Comma) {
      p.advance();
      const int slot = static_cast<int>(fs.size());
      if (slot >= s) {
        // parse anyway for a clean arity message at the closing paren
        parse_factor(p, space, s - 1);
        fs.push_back(FactorSheaf::line(0));
        continue;
      }
      fs.push_back(parse_factor(p, space, slot));
    }
    const size_t close_off = p.peek().offset;
    p.expect(Token::Type::RParen);
    if (static_cast<int>(fs.size()) != s)
      p.fail(close_off,
             "box product has " + std::to_string(fs.size()) + " factor(s), space has " +
                 std::to_string(s),
             {}, true);
    return Atom(space, std::move(fs));
  }
  p.fail(name.offset, "unknown atom '" + name.text + "'", {"O", "box"});
}

}  // namespace detail

/// bundle := term ("+" term)*; term := [nat "*"] atom;
/// atom := O(int,...) | box(factor,...). Returns canonical form: summands
/// sorted by atom encoding with equal atoms merged.
inline Bundle parse_bundle(std::string_view text, const Space& space) {
  detail::Parser p(text);
  if (p.peek().type == detail::Token::Type::End)
    p.fail(p.peek().offset, "empty input", {"integer", "O", "box"});
  Bundle b(space);
  while (true) {
    BigInt mult = 1;
    if (p.peek().type == detail::Token::Type::Int) {
      const size_t off = p.peek().offset;
      const long long m = p.expect_int();
      if (m < 1) p.fail(off, "multiplicity must be >= 1", {}, true);
      mult = m;
      p.expect(detail::Token::Type::Star);
    }
    b.add(detail::parse_atom(p, space), mult);
    if (p.peek().type != detail::Token::Type::Plus) break;
    p.advance();
  }
  p.expect_end();
  return canonical_bundle(b);
}

}  // namespace multicoh

#endif  // MULTICOH_PARSE_HPP

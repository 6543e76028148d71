#include "slcs/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace slcs {

namespace {

enum class Tok { Ident, String, Bang, Amp, Bar, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::String: return "string";
    case Tok::Bang: return "'!'";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) return {Tok::End, {}, {start, start}};
    const char c = src_[pos_];
    auto single = [&](Tok k) {
      ++pos_;
      return Token{k, std::string(1, c), {start, pos_}};
    };
    switch (c) {
      case '!': return single(Tok::Bang);
      case '&': return single(Tok::Amp);
      case '|': return single(Tok::Bar);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case ',': return single(Tok::Comma);
      case '"': return string_literal(start);
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      return {Tok::Ident, std::string(src_.substr(start, pos_ - start)), {start, pos_}};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", {start, start + 1});
  }

private:
  Token string_literal(std::size_t start) {
    ++pos_;
    std::string value;
    while (pos_ < src_.size() && src_[pos_] != '"') {
      if (src_[pos_] == '\\') {
        ++pos_;
        if (pos_ >= src_.size()) break;
      }
      value += src_[pos_++];
    }
    if (pos_ >= src_.size()) throw ParseError("unterminated string literal", {start, src_.size()});
    ++pos_;
    return {Tok::String, std::move(value), {start, pos_}};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
public:
  explicit Parser(std::string_view src) : lexer_(src) { advance(); }

  Formula parse_all() {
    Formula out = parse_or();
    expect(Tok::End);
    return out;
  }

private:
  void advance() { cur_ = lexer_.next(); }

  Token expect(Tok kind) {
    if (cur_.kind != kind)
      throw ParseError(std::string("expected ") + describe(kind) + ", found " + describe(cur_.kind) +
                           (cur_.text.empty() ? "" : " '" + cur_.text + "'"),
                       cur_.span);
    Token t = cur_;
    advance();
    return t;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (cur_.kind == Tok::Bar) {
      advance();
      lhs = f::lor(lhs, parse_and());
    }
    return lhs;
  }

  Formula parse_and() {
    std::vector<Formula> parts{parse_not()};
    while (cur_.kind == Tok::Amp) {
      advance();
      parts.push_back(parse_not());
    }
    if (parts.size() == 1) return parts.front();
    return f::land(std::move(parts));
  }

  Formula parse_not() {
    if (cur_.kind == Tok::Bang) {
      advance();
      return f::neg(parse_not());
    }
    return parse_primary();
  }

  Formula parse_primary() {
    switch (cur_.kind) {
      case Tok::String: {
        Token t = expect(Tok::String);
        return f::atom(std::move(t.text));
      }
      case Tok::LParen: {
        advance();
        Formula inner = parse_or();
        expect(Tok::RParen);
        return inner;
      }
      case Tok::Ident: break;
      default:
        throw ParseError(std::string("expected a formula, found ") + describe(cur_.kind), cur_.span);
    }
    Token id = expect(Tok::Ident);
    if (id.text == "true") return f::tt();
    if (id.text == "false") return f::ff();

    const std::optional<int> arity = operator_arity(id.text);
    if (cur_.kind != Tok::LParen) {
      if (arity) throw ParseError("expected '(' after '" + id.text + "'", cur_.span);
      return f::atom(std::move(id.text));
    }
    if (!arity) throw ParseError("unknown operator '" + id.text + "'", id.span);
    advance();
    Formula a = parse_or();
    if (*arity == 1) {
      expect(Tok::RParen);
      return f::near(a);
    }
    expect(Tok::Comma);
    Formula b = parse_or();
    expect(Tok::RParen);
    if (id.text == "reachFwd") return f::reach_fwd(a, b);
    if (id.text == "reachBwd") return f::reach_bwd(a, b);
    if (id.text == "surrounded") return f::surrounded(a, b);
    return f::propagate(a, b);
  }

  static std::optional<int> operator_arity(const std::string& name) {
    if (name == "near") return 1;
    if (name == "reachFwd" || name == "reachBwd" || name == "surrounded" || name == "propagate") return 2;
    return std::nullopt;
  }

  Lexer lexer_;
  Token cur_{Tok::End, {}, {}};
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace slcs

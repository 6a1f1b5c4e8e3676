#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dsmt/error.hpp"
#include "dsmt/lattice.hpp"

namespace dsmt {

enum class TokenKind { kIdent, kAmp, kPipe, kLParen, kRParen, kEnd };

struct ExprToken {
  TokenKind kind;
  std::string text;
  std::size_t position;  // byte offset
};

// Unicode intersection/union signs are accepted as aliases of '&' and '|'.
inline std::vector<ExprToken> tokenize(std::string_view text) {
  static constexpr std::string_view kCap = "\xE2\x88\xA9";
  static constexpr std::string_view kCup = "\xE2\x88\xAA";
  std::vector<ExprToken> out;
  std::size_t i = 0;
  auto ident_char = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_';
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
    } else if (c == '&') {
      out.push_back({TokenKind::kAmp, "&", i++});
    } else if (c == '|') {
      out.push_back({TokenKind::kPipe, "|", i++});
    } else if (c == '(') {
      out.push_back({TokenKind::kLParen, "(", i++});
    } else if (c == ')') {
      out.push_back({TokenKind::kRParen, ")", i++});
    } else if (text.substr(i, 3) == kCap) {
      out.push_back({TokenKind::kAmp, std::string(kCap), i});
      i += 3;
    } else if (text.substr(i, 3) == kCup) {
      out.push_back({TokenKind::kPipe, std::string(kCup), i});
      i += 3;
    } else if (ident_char(c)) {
      std::size_t start = i;
      while (i < text.size() && ident_char(text[i])) ++i;
      out.push_back({TokenKind::kIdent, std::string(text.substr(start, i - start)), start});
    } else {
      throw Error(Errc::kSyntaxError,
                  "unexpected character '" + std::string(1, c) + "' at offset " +
                      std::to_string(i),
                  i);
    }
  }
  out.push_back({TokenKind::kEnd, "", text.size()});
  return out;
}

namespace detail {

class ExprParser {
 public:
  ExprParser(const Frame& frame, std::vector<ExprToken> tokens)
      : frame_(frame), tokens_(std::move(tokens)) {}

  Proposition parse() {
    Proposition p = expr();
    if (peek().kind != TokenKind::kEnd) fail("'&', '|' or end of input");
    return p;
  }

 private:
  const ExprToken& peek() const { return tokens_[pos_]; }

  [[noreturn]] void fail(const std::string& expected) const {
    const ExprToken& t = peek();
    std::string found = t.kind == TokenKind::kEnd ? "end of input" : "'" + t.text + "'";
    throw Error(Errc::kSyntaxError,
                "expected " + expected + " but found " + found + " at offset " +
                    std::to_string(t.position),
                t.position);
  }

  Proposition expr() {
    Proposition p = term();
    while (peek().kind == TokenKind::kPipe) {
      ++pos_;
      p = disjoin(p, term());
    }
    return p;
  }

  Proposition term() {
    Proposition p = factor();
    while (peek().kind == TokenKind::kAmp) {
      ++pos_;
      p = conjoin(p, factor());
    }
    return p;
  }

  Proposition factor() {
    const ExprToken& t = peek();
    if (t.kind == TokenKind::kIdent) {
      std::size_t i = frame_.index_of(t.text);
      if (i == 0)
        throw Error(Errc::kUnknownIdentifier,
                    "'" + t.text + "' at offset " + std::to_string(t.position), t.position);
      ++pos_;
      return singleton(frame_, i);
    }
    if (t.kind == TokenKind::kLParen) {
      ++pos_;
      Proposition p = expr();
      if (peek().kind != TokenKind::kRParen) fail("')'");
      ++pos_;
      return p;
    }
    fail("identifier or '('");
  }

  const Frame& frame_;
  std::vector<ExprToken> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Proposition parse(const Frame& frame, std::string_view text) {
  auto tokens = tokenize(text);
  if (tokens.size() == 1) throw Error(Errc::kEmptyExpression, "expression is empty", 0);
  return detail::ExprParser(frame, std::move(tokens)).parse();
}

// parse(to_expression(p)); the empty proposition prints as EMPTY, which the
// grammar rejects, so it is returned as is.
inline Proposition roundtrip(const Frame& frame, const Proposition& p) {
  if (p.empty()) return empty_proposition(frame);
  return parse(frame, to_expression(p));
}

}  // namespace dsmt

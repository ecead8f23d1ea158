#pragma once

#include <stdexcept>
#include <string>

#include "perfume/source/position.hpp"

namespace perfume {

// Thrown by the lexer and parser on malformed input; converted into a
// failed CompilationUnit by parse_compilation_unit, never propagated
// out of the frontend.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::string message, SourcePosition pos)
      : std::runtime_error(std::move(message)), position(pos) {}

  SourcePosition position;
};

enum class TokenKind {
  End,
  Identifier,
  Keyword,
  IntLiteral,
  FloatLiteral,
  CharLiteral,
  StringLiteral,  // includes text blocks, text kept verbatim
  Punct,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourcePosition pos;
  bool text_block = false;

  bool is_kw(const char* kw) const {
    return kind == TokenKind::Keyword && text == kw;
  }
  bool is_punct(const char* p) const {
    return kind == TokenKind::Punct && text == p;
  }
  bool is_ident() const { return kind == TokenKind::Identifier; }
  // Contextual keywords (var, record, yield, ...) lex as identifiers.
  bool is_ident(const char* name) const {
    return kind == TokenKind::Identifier && text == name;
  }
};

}  // namespace perfume

#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "perfume/source/token.hpp"

namespace perfume {

// Replaces invalid UTF-8 sequences with U+FFFD. Returns true when the
// input was already valid (BOM not counted as invalid, it is stripped).
inline bool utf8_sanitize(const std::string& bytes, std::string& out) {
  out.clear();
  out.reserve(bytes.size());
  std::size_t i = 0;
  bool clean = true;
  if (bytes.size() >= 3 && static_cast<unsigned char>(bytes[0]) == 0xEF &&
      static_cast<unsigned char>(bytes[1]) == 0xBB &&
      static_cast<unsigned char>(bytes[2]) == 0xBF) {
    i = 3;
  }
  auto cont = [&](std::size_t k) {
    return k < bytes.size() && (static_cast<unsigned char>(bytes[k]) & 0xC0) == 0x80;
  };
  while (i < bytes.size()) {
    unsigned char c = static_cast<unsigned char>(bytes[i]);
    std::size_t len = 0;
    if (c < 0x80) len = 1;
    else if ((c & 0xE0) == 0xC0 && c >= 0xC2) len = 2;
    else if ((c & 0xF0) == 0xE0) len = 3;
    else if ((c & 0xF8) == 0xF0 && c <= 0xF4) len = 4;
    if (len == 0) {
      out += "\xEF\xBF\xBD";
      clean = false;
      ++i;
      continue;
    }
    bool ok = true;
    for (std::size_t k = 1; k < len; ++k) ok = ok && cont(i + k);
    if (!ok) {
      out += "\xEF\xBF\xBD";
      clean = false;
      ++i;
      continue;
    }
    out.append(bytes, i, len);
    i += len;
  }
  return clean;
}

namespace detail {

inline const std::unordered_set<std::string>& java_keywords() {
  static const std::unordered_set<std::string> kw = {
      "abstract", "assert",   "boolean",    "break",      "byte",
      "case",     "catch",    "char",       "class",      "const",
      "continue", "default",  "do",         "double",     "else",
      "enum",     "extends",  "final",      "finally",    "float",
      "for",      "goto",     "if",         "implements", "import",
      "instanceof", "int",    "interface",  "long",       "native",
      "new",      "package",  "private",    "protected",  "public",
      "return",   "short",    "static",     "strictfp",   "super",
      "switch",   "synchronized", "this",   "throw",      "throws",
      "transient", "try",     "void",       "volatile",   "while",
      "true",     "false",    "null",
  };
  return kw;
}

inline bool ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c == '$' || c >= 0x80;
}

inline bool ident_part(unsigned char c) {
  return ident_start(c) || (c >= '0' && c <= '9');
}

inline bool digit(unsigned char c) { return c >= '0' && c <= '9'; }
inline bool hex_digit(unsigned char c) {
  return digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

}  // namespace detail

// Hand-written lexer for Java 17 source. Comments and whitespace are
// skipped; text for every token is kept verbatim so the printer can
// reproduce literals exactly.
class Lexer {
 public:
  explicit Lexer(std::string text) : src_(std::move(text)) {}

  std::vector<Token> lex() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      Token t = next_token();
      bool end = (t.kind == TokenKind::End);
      out.push_back(std::move(t));
      if (end) break;
    }
    return out;
  }

 private:
  std::string src_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;

  bool eof() const { return i_ >= src_.size(); }
  unsigned char at(std::size_t off = 0) const {
    return i_ + off < src_.size() ? static_cast<unsigned char>(src_[i_ + off]) : 0;
  }
  SourcePosition here() const { return {line_, col_}; }

  void bump() {
    unsigned char c = at();
    ++i_;
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else if (c == '\r') {
      if (at() == '\n') ++i_;
      ++line_;
      col_ = 1;
    } else if ((c & 0xC0) == 0x80) {
      // continuation byte, column already advanced on the lead byte
    } else {
      ++col_;
    }
  }

  void skip_trivia() {
    for (;;) {
      unsigned char c = at();
      if (c == ' ' || c == '\t' || c == '\f' || c == '\n' || c == '\r') {
        bump();
      } else if (c == '/' && at(1) == '/') {
        while (!eof() && at() != '\n' && at() != '\r') bump();
      } else if (c == '/' && at(1) == '*') {
        SourcePosition start = here();
        bump();
        bump();
        for (;;) {
          if (eof()) throw SyntaxError("unterminated block comment", start);
          if (at() == '*' && at(1) == '/') {
            bump();
            bump();
            break;
          }
          bump();
        }
      } else {
        return;
      }
    }
  }

  Token next_token() {
    if (eof()) return {TokenKind::End, "", here()};
    SourcePosition pos = here();
    unsigned char c = at();

    if (detail::ident_start(c)) return lex_word(pos);
    if (detail::digit(c) || (c == '.' && detail::digit(at(1)))) return lex_number(pos);
    if (c == '"') {
      if (at(1) == '"' && at(2) == '"') return lex_text_block(pos);
      return lex_string(pos);
    }
    if (c == '\'') return lex_char(pos);
    return lex_punct(pos);
  }

  Token lex_word(SourcePosition pos) {
    std::size_t start = i_;
    while (!eof() && detail::ident_part(at())) bump();
    std::string text = src_.substr(start, i_ - start);
    TokenKind kind = detail::java_keywords().count(text) ? TokenKind::Keyword
                                                         : TokenKind::Identifier;
    return {kind, std::move(text), pos};
  }

  Token lex_number(SourcePosition pos) {
    std::size_t start = i_;
    bool is_float = false;
    if (at() == '0' && (at(1) == 'x' || at(1) == 'X')) {
      bump();
      bump();
      while (detail::hex_digit(at()) || at() == '_') bump();
      if (at() == '.') {  // hexadecimal floating point
        is_float = true;
        bump();
        while (detail::hex_digit(at()) || at() == '_') bump();
      }
      if (at() == 'p' || at() == 'P') {
        is_float = true;
        bump();
        if (at() == '+' || at() == '-') bump();
        while (detail::digit(at())) bump();
      }
    } else if (at() == '0' && (at(1) == 'b' || at(1) == 'B')) {
      bump();
      bump();
      while (at() == '0' || at() == '1' || at() == '_') bump();
    } else {
      while (detail::digit(at()) || at() == '_') bump();
      if (at() == '.') {
        unsigned char n = at(1);
        // "1.foo" never appears in valid code; leave the dot for the
        // parser only when it would begin an identifier or another dot.
        if (!detail::ident_start(n) && n != '.') {
          is_float = true;
          bump();
          while (detail::digit(at()) || at() == '_') bump();
        }
      }
      if (at() == 'e' || at() == 'E') {
        is_float = true;
        bump();
        if (at() == '+' || at() == '-') bump();
        while (detail::digit(at())) bump();
      }
    }
    if (at() == 'f' || at() == 'F' || at() == 'd' || at() == 'D') {
      is_float = true;
      bump();
    } else if (at() == 'l' || at() == 'L') {
      bump();
    }
    return {is_float ? TokenKind::FloatLiteral : TokenKind::IntLiteral,
            src_.substr(start, i_ - start), pos};
  }

  void lex_escape(SourcePosition pos) {
    bump();  // backslash
    if (eof()) throw SyntaxError("unterminated escape sequence", pos);
    bump();  // escaped character; \uXXXX digits are ordinary chars after this
  }

  Token lex_string(SourcePosition pos) {
    std::size_t start = i_;
    bump();
    for (;;) {
      if (eof() || at() == '\n' || at() == '\r')
        throw SyntaxError("unterminated string literal", pos);
      if (at() == '\\') {
        lex_escape(pos);
      } else if (at() == '"') {
        bump();
        break;
      } else {
        bump();
      }
    }
    return {TokenKind::StringLiteral, src_.substr(start, i_ - start), pos};
  }

  Token lex_text_block(SourcePosition pos) {
    std::size_t start = i_;
    bump();
    bump();
    bump();
    for (;;) {
      if (eof()) throw SyntaxError("unterminated text block", pos);
      if (at() == '\\') {
        lex_escape(pos);
      } else if (at() == '"' && at(1) == '"' && at(2) == '"') {
        bump();
        bump();
        bump();
        break;
      } else {
        bump();
      }
    }
    Token t{TokenKind::StringLiteral, src_.substr(start, i_ - start), pos};
    t.text_block = true;
    return t;
  }

  Token lex_char(SourcePosition pos) {
    std::size_t start = i_;
    bump();
    for (;;) {
      if (eof() || at() == '\n') throw SyntaxError("unterminated char literal", pos);
      if (at() == '\\') {
        lex_escape(pos);
      } else if (at() == '\'') {
        bump();
        break;
      } else {
        bump();
      }
    }
    return {TokenKind::CharLiteral, src_.substr(start, i_ - start), pos};
  }

  Token lex_punct(SourcePosition pos) {
    static const char* const multi[] = {
        ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "==", "!=", "<=",
        ">=",   "&&",  "||",  "++",  "--",  "+=", "-=", "*=", "/=", "%=",
        "&=",   "|=",  "^=",  "<<",  ">>",
    };
    for (const char* op : multi) {
      std::size_t len = std::string::traits_type::length(op);
      if (src_.compare(i_, len, op) == 0) {
        for (std::size_t k = 0; k < len; ++k) bump();
        return {TokenKind::Punct, op, pos};
      }
    }
    static const std::string singles = "+-*/%=<>!~?:;,.(){}[]@&|^";
    char c = static_cast<char>(at());
    if (singles.find(c) != std::string::npos) {
      bump();
      return {TokenKind::Punct, std::string(1, c), pos};
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos);
  }
};

}  // namespace perfume

#pragma once

#include <cstddef>
#include <string>

namespace perfume {

// Physical-line classification of one source file.
struct LocBreakdown {
  std::size_t code = 0;
  std::size_t comment = 0;
  std::size_t blank = 0;

  std::size_t total() const { return code + comment + blank; }

  LocBreakdown& operator+=(const LocBreakdown& other) {
    code += other.code;
    comment += other.comment;
    blank += other.blank;
    return *this;
  }
  friend bool operator==(const LocBreakdown&, const LocBreakdown&) = default;
};

// Line rules: blank when only whitespace; comment when every bit of
// non-whitespace content sits inside // or /* */ comments (doc comments
// included); code otherwise, so a mixed line counts as code. Block-comment
// state carries across lines, and string/char literals (text blocks too)
// shield comment markers.
inline LocBreakdown count_loc(const std::string& text) {
  LocBreakdown out;
  enum class State { Normal, BlockComment, TextBlock };
  State state = State::Normal;

  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_escaped = [&](std::size_t& k) {
    if (k + 1 < n && text[k] == '\\' && text[k + 1] != '\n') ++k;
  };
  while (i < n) {
    bool saw_code = false;
    bool saw_nonws = false;
    bool in_line_comment = false;
    bool in_string = false;
    bool in_char = false;

    for (; i < n && text[i] != '\n'; ++i) {
      char c = text[i];
      if (c == '\r') continue;
      bool ws = (c == ' ' || c == '\t' || c == '\f' || c == 0x0B);
      if (!ws) saw_nonws = true;

      if (in_line_comment) continue;

      if (state == State::BlockComment) {
        if (c == '*' && i + 1 < n && text[i + 1] == '/') {
          state = State::Normal;
          ++i;
        }
        continue;
      }

      if (state == State::TextBlock) {
        if (!ws) saw_code = true;
        if (c == '\\') {
          skip_escaped(i);
        } else if (c == '"' && i + 2 < n && text[i + 1] == '"' &&
                   text[i + 2] == '"') {
          state = State::Normal;
          i += 2;
        }
        continue;
      }

      if (in_string) {
        saw_code = true;
        if (c == '\\') skip_escaped(i);
        else if (c == '"') in_string = false;
        continue;
      }
      if (in_char) {
        saw_code = true;
        if (c == '\\') skip_escaped(i);
        else if (c == '\'') in_char = false;
        continue;
      }

      if (c == '/' && i + 1 < n && text[i + 1] == '/') {
        in_line_comment = true;
        ++i;
        continue;
      }
      if (c == '/' && i + 1 < n && text[i + 1] == '*') {
        state = State::BlockComment;
        ++i;
        continue;
      }
      if (c == '"') {
        if (i + 2 < n && text[i + 1] == '"' && text[i + 2] == '"') {
          state = State::TextBlock;
          i += 2;
        } else {
          in_string = true;
        }
        saw_code = true;
        continue;
      }
      if (c == '\'') {
        in_char = true;
        saw_code = true;
        continue;
      }
      if (!ws) saw_code = true;
    }
    if (i < n) ++i;  // consume the newline

    if (saw_code) ++out.code;
    else if (!saw_nonws) ++out.blank;
    else ++out.comment;
  }
  return out;
}

}  // namespace perfume

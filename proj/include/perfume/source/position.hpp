#pragma once

#include <string>
#include <tuple>

namespace perfume {

// 1-based line/column location inside a source file.
struct SourcePosition {
  int line = 1;
  int column = 1;

  friend bool operator==(const SourcePosition&, const SourcePosition&) = default;
  friend bool operator<(const SourcePosition& a, const SourcePosition& b) {
    return std::tie(a.line, a.column) < std::tie(b.line, b.column);
  }
  friend bool operator<=(const SourcePosition& a, const SourcePosition& b) {
    return a == b || a < b;
  }
};

// Inclusive source range; begin <= end in (line, column) order.
struct SourceSpan {
  SourcePosition begin;
  SourcePosition end;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;

  bool contains(const SourceSpan& other) const {
    return begin <= other.begin && other.end <= end;
  }
};

inline std::string to_string(const SourcePosition& p) {
  return std::to_string(p.line) + ":" + std::to_string(p.column);
}

inline std::string to_string(const SourceSpan& s) {
  return to_string(s.begin) + "-" + to_string(s.end);
}

}  // namespace perfume

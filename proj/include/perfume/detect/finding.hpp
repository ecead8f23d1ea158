#pragma once

#include <string>
#include <utility>
#include <vector>

#include "perfume/source/position.hpp"

namespace perfume {

// One detected perfume instance.
struct Finding {
  int perfume_id = 0;
  std::string file;
  SourceSpan span;
  std::string element;  // "Outer.Inner#member(paramTypes)"
  std::vector<std::pair<std::string, std::string>> details;  // insertion-ordered

  void detail(std::string key, std::string value) {
    details.emplace_back(std::move(key), std::move(value));
  }
};

inline bool finding_order(const Finding& a, const Finding& b) {
  if (a.file != b.file) return a.file < b.file;
  if (!(a.span.begin == b.span.begin)) return a.span.begin < b.span.begin;
  return a.perfume_id < b.perfume_id;
}

}  // namespace perfume

#pragma once

#include <set>
#include <string>
#include <string_view>
#include <tuple>

#include "qck/graphs.hpp"

namespace support {

inline qck::Word W(const qck::QuasiCrystal& base, std::string_view text) {
  return qck::parse_word(base, text);
}

using NamedEdges = std::set<std::tuple<std::string, std::string, int>>;
using NamedLoops = std::set<std::pair<std::string, int>>;

inline NamedEdges edges_of(const qck::QuasiCrystal& base, const qck::ComponentGraph& g) {
  NamedEdges out;
  for (const auto& e : g.edges)
    out.emplace(qck::format_word(base, e.from), qck::format_word(base, e.to), e.label);
  return out;
}

inline NamedLoops loops_of(const qck::QuasiCrystal& base, const qck::ComponentGraph& g) {
  NamedLoops out;
  for (const auto& l : g.loops) out.emplace(qck::format_word(base, l.vertex), l.label);
  return out;
}

inline std::set<std::string> vertices_of(const qck::QuasiCrystal& base,
                                         const qck::ComponentGraph& g) {
  std::set<std::string> out;
  for (const auto& v : g.vertices) out.insert(qck::format_word(base, v.word));
  return out;
}

// Pair-product element names written compactly: "b21" is 2̄ ⊗ 1.
inline std::string pair_name(std::string_view compact, const char* symbol) {
  std::string left, right;
  std::string* cur = &left;
  for (std::size_t k = 0; k < compact.size(); ++k) {
    if (compact[k] == 'b') {
      *cur += '-';
      continue;
    }
    *cur += compact[k];
    cur = &right;
  }
  return left + symbol + right;
}

}  // namespace support

#include "qck/transform.hpp"

#include <algorithm>
#include <set>

namespace qck {

std::optional<Decomposition> find_blocking_decomposition(const QuasiCrystal& base,
                                                         const Word& w, int i) {
  check_letters(base, w);
  const std::size_t p = base.pos(i);
  std::optional<std::size_t> first_raisable;  // first letter with φ_i > 0
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (first_raisable && base.eps_at(p, w[k]) > 0)
      return Decomposition{w, i, *first_raisable, k};
    if (!first_raisable && base.phi_at(p, w[k]) > 0) first_raisable = k;
  }
  return std::nullopt;
}

DerivedStructure derive_qtensor_structure(const QuasiCrystal& base,
                                          const Word& w, int i) {
  if (find_blocking_decomposition(base, w, i))
    return {std::nullopt, std::nullopt, ExtendedInt::infinity(),
            ExtendedInt::infinity()};
  const WordStats s = word_stats(ProductMode::Tensor, base, i, w);
  return {word_e(ProductMode::Tensor, base, i, w),
          word_f(ProductMode::Tensor, base, i, w), s.eps, s.phi};
}

ComponentGraph transform_graph(const ComponentGraph& g, const QuasiCrystal& base) {
  if (g.mode != ProductMode::Tensor)
    throw DomainError("transform_graph expects a tensor-product graph");
  ComponentGraph out = g;
  out.mode = ProductMode::QuasiTensor;
  out.edges.clear();
  out.loops.clear();

  // Gather the blocked (vertex, label) pairs first, then rewrite in one pass.
  std::set<std::pair<Word, int>> blocked;
  for (auto& v : out.vertices) {
    for (std::size_t p = 0; p < g.indices.size(); ++p) {
      const int i = g.indices[p];
      if (find_blocking_decomposition(base, v.word, i)) {
        blocked.emplace(v.word, i);
        v.eps[p] = v.phi[p] = ExtendedInt::infinity();
      }
    }
  }
  for (const auto& e : g.edges) {
    if (blocked.count({e.from, e.label}) || blocked.count({e.to, e.label}))
      continue;
    out.edges.push_back(e);
  }
  for (const auto& l : g.loops) out.loops.push_back(l);
  for (const auto& [w, i] : blocked) {
    GraphLoop loop{w, i};
    if (std::find(out.loops.begin(), out.loops.end(), loop) == out.loops.end())
      out.loops.push_back(std::move(loop));
  }
  out.normalize();
  return out;
}

LeviWitness levi_decompose(const Word& x1, const Word& y1, const Word& x2,
                           const Word& y2) {
  Word left = x1, right = x2;
  left.insert(left.end(), y1.begin(), y1.end());
  right.insert(right.end(), y2.begin(), y2.end());
  if (left != right) throw DomainError("x1·y1 and x2·y2 are different words");
  if (x1.size() <= x2.size())
    return {Word(x2.begin() + static_cast<std::ptrdiff_t>(x1.size()), x2.end()),
            LeviWitness::Side::SecondExtendsFirst};
  return {Word(x1.begin() + static_cast<std::ptrdiff_t>(x2.size()), x1.end()),
          LeviWitness::Side::FirstExtendsSecond};
}

}  // namespace qck

#pragma once

#include <cstddef>
#include <optional>

#include "qck/graphs.hpp"
#include "qck/words.hpp"

namespace qck {

/// A letter x with φ_i(x) > 0 followed (not necessarily immediately) by a
/// letter y with ε_i(y) > 0. Positions are 0-based.
struct Decomposition {
  Word word;
  int index;
  std::size_t left_pos;
  std::size_t right_pos;
};

/// The left-most blocking letter pair of w for index i, if any. Single
/// linear scan; a pair exists iff w = uv with φ_i(u) > 0 and ε_i(v) > 0.
std::optional<Decomposition> find_blocking_decomposition(const QuasiCrystal& base,
                                                         const Word& w, int i);

/// ⊗̇ structure maps of w derived from the ⊗ structure: (⊥, ⊥, +∞, +∞) when
/// w has a blocking pair, the ⊗ values otherwise.
struct DerivedStructure {
  MaybeWord e;
  MaybeWord f;
  ExtendedInt eps;
  ExtendedInt phi;
  friend bool operator==(const DerivedStructure&, const DerivedStructure&) = default;
};

DerivedStructure derive_qtensor_structure(const QuasiCrystal& base,
                                          const Word& w, int i);

/// Applies the edge-removal / loop-addition recipe to a ⊗ graph: for every
/// vertex w and index i with a blocking pair, drop the i-labelled edges at
/// w and put an i-loop on w. Vertex set is kept; the result may be
/// disconnected. Statistics are replaced by the ⊗̇ values.
ComponentGraph transform_graph(const ComponentGraph& g, const QuasiCrystal& base);

/// Overlap witness for x1·y1 = x2·y2 in the free monoid.
struct LeviWitness {
  enum class Side {
    SecondExtendsFirst,  // x2 = x1·z and y1 = z·y2
    FirstExtendsSecond,  // x1 = x2·z and y2 = z·y1
  };
  Word z;
  Side side;
};

/// Throws DomainError if x1·y1 != x2·y2.
LeviWitness levi_decompose(const Word& x1, const Word& y1, const Word& x2,
                           const Word& y2);

}  // namespace qck

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qck/words.hpp"

namespace qck {

inline constexpr std::size_t kDefaultVertexCap = 1'000'000;

struct VertexInfo {
  Word word;
  Weight wt;
  std::vector<ExtendedInt> eps;  // parallel to ComponentGraph::indices
  std::vector<ExtendedInt> phi;
  friend bool operator==(const VertexInfo&, const VertexInfo&) = default;
};

struct GraphEdge {
  Word from;
  Word to;
  int label;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct GraphLoop {
  Word vertex;
  int label;
  friend bool operator==(const GraphLoop&, const GraphLoop&) = default;
};

/// A connected component of the quasi-crystal graph of the free ⊗- or
/// ⊗̇-monoid, with per-vertex weight and statistics. Vertices are kept in
/// shortlex order, edges and loops sorted by (source, label).
struct ComponentGraph {
  ProductMode mode = ProductMode::Tensor;
  std::string base_id;
  std::vector<std::string> alphabet;  // letter names, in carrier order
  std::vector<int> indices;
  Word root;
  std::vector<VertexInfo> vertices;
  std::vector<GraphEdge> edges;
  std::vector<GraphLoop> loops;

  const VertexInfo* find(const Word& w) const;
  bool contains(const Word& w) const { return find(w) != nullptr; }
  /// Restores the canonical ordering of vertices, edges and loops.
  void normalize();
  std::string word_text(const Word& w) const;  // ε shown as "ε"

  friend bool operator==(const ComponentGraph&, const ComponentGraph&) = default;
};

/// Breadth-first closure of {w} under every defined e_i and f_i. Throws
/// CapExceeded when more than vertex_cap vertices are reached.
ComponentGraph component(ProductMode mode, const QuasiCrystal& base,
                         const Word& w, std::size_t vertex_cap = kDefaultVertexCap);

using WordMap = std::map<Word, Word, ShortlexLess>;

/// The isomorphism Γ(u) → Γ(v) sending u to v, if one exists. The map is
/// forced by commutation with the operators, so it is built by a
/// simultaneous traversal from (u, v) that fails on the first mismatch.
std::optional<WordMap> find_isomorphism(ProductMode mode,
                                        const QuasiCrystal& base, const Word& u,
                                        const Word& v,
                                        std::size_t vertex_cap = kDefaultVertexCap);

bool iso_from(ProductMode mode, const QuasiCrystal& base, const Word& u,
              const Word& v, std::size_t vertex_cap = kDefaultVertexCap);

/// Deterministic Graphviz text; loops are rendered as self-edges.
std::string export_dot(const ComponentGraph& g);

nlohmann::json component_to_json(const ComponentGraph& g);
ComponentGraph component_from_json(const nlohmann::json& j);
std::string export_json(const ComponentGraph& g);
ComponentGraph import_json(const std::string& text);

}  // namespace qck

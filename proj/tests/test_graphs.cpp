#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "support.hpp"

using namespace qck;
using support::edges_of;
using support::loops_of;
using support::vertices_of;
using support::W;

namespace {

const auto T = ProductMode::Tensor;
const auto Q = ProductMode::QuasiTensor;

// Exhaustive search for a bijection Γ(u) → Γ(v) with u ↦ v that preserves
// weights, labelled edges and labelled loops.
bool brute_force_iso(const ComponentGraph& gu, const ComponentGraph& gv) {
  if (gu.vertices.size() != gv.vertices.size() || gu.edges.size() != gv.edges.size() ||
      gu.loops.size() != gv.loops.size())
    return false;
  const std::size_t n = gu.vertices.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;
  std::map<Word, std::size_t> at_u, at_v;
  for (std::size_t k = 0; k < n; ++k) {
    at_u[gu.vertices[k].word] = k;
    at_v[gv.vertices[k].word] = k;
  }
  std::set<std::tuple<std::size_t, std::size_t, int>> ev;
  for (const auto& e : gv.edges) ev.emplace(at_v[e.from], at_v[e.to], e.label);
  std::set<std::pair<std::size_t, int>> lv;
  for (const auto& l : gv.loops) lv.emplace(at_v[l.vertex], l.label);
  do {
    if (perm[at_u[gu.root]] != at_v[gv.root]) continue;
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k)
      ok = gu.vertices[k].wt == gv.vertices[perm[k]].wt;
    for (const auto& e : gu.edges) {
      if (!ok) break;
      ok = ev.count({perm[at_u[e.from]], perm[at_u[e.to]], e.label}) > 0;
    }
    for (const auto& l : gu.loops) {
      if (!ok) break;
      ok = lv.count({perm[at_u[l.vertex]], l.label}) > 0;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("component of 112 in the tensor monoid over A3") {
  const auto a3 = standard_crystal_A(3);
  const auto g = component(T, a3, W(a3, "112"));
  CHECK(vertices_of(a3, g) == std::set<std::string>{"1 1 2", "2 1 2", "3 1 2", "3 1 3",
                                                     "1 1 3", "2 1 3", "2 2 3", "3 2 3"});
  CHECK(edges_of(a3, g) == support::NamedEdges{{"1 1 2", "2 1 2", 1}, {"2 1 2", "3 1 2", 2},
                                               {"3 1 2", "3 1 3", 2}, {"3 1 3", "3 2 3", 1},
                                               {"1 1 2", "1 1 3", 2}, {"1 1 3", "2 1 3", 1},
                                               {"2 1 3", "2 2 3", 1}, {"2 2 3", "3 2 3", 2}});
  CHECK(g.loops.empty());
  CHECK(g.root == W(a3, "112"));
}

TEST_CASE("component of 1 2 -2 over C3 is a six-vertex chain") {
  const auto c3 = standard_crystal_C(3);
  const auto g = component(T, c3, W(c3, "1 2 -2"));
  CHECK(edges_of(c3, g) ==
        support::NamedEdges{{"1 2 -2", "1 2 -1", 1}, {"1 2 -1", "1 3 -1", 2},
                            {"1 3 -1", "1 -3 -1", 3}, {"1 -3 -1", "1 -2 -1", 2},
                            {"1 -2 -1", "2 -2 -1", 1}});
  CHECK(g.vertices.size() == 6);
}

TEST_CASE("hypoplactic component of 2121 over A3") {
  const auto a3 = standard_crystal_A(3);
  const auto g = component(Q, a3, W(a3, "2121"));
  CHECK(edges_of(a3, g) == support::NamedEdges{{"2 1 2 1", "3 1 2 1", 2},
                                               {"3 1 2 1", "3 1 3 1", 2},
                                               {"3 1 3 1", "3 2 3 1", 1},
                                               {"3 2 3 1", "3 2 3 2", 1}});
  CHECK(loops_of(a3, g) == support::NamedLoops{{"2 1 2 1", 1}, {"3 1 2 1", 1},
                                               {"3 2 3 1", 2}, {"3 2 3 2", 2}});
}

TEST_CASE("isolated vertices") {
  for (int n = 2; n <= 4; ++n) {
    const auto c = standard_crystal_C(n);
    const auto g = component(Q, c, W(c, "1 -1"));
    CHECK(g.vertices.size() == 1);
    CHECK(loops_of(c, g) == support::NamedLoops{{"1 -1", 1}});
    CHECK(g.edges.empty());
    const auto e = component(T, c, {});
    CHECK(e.vertices.size() == 1);
    CHECK(e.edges.empty());
    CHECK(e.loops.empty());
  }
}

TEST_CASE("component invariants") {
  for (const auto& base : {standard_crystal_A(3), standard_crystal_C(2)}) {
    for (ProductMode mode : {T, Q}) {
      for (const auto& w : words_up_to(base, 4)) {
        const auto g = component(mode, base, w);
        CHECK(g.contains(w));
        std::set<std::pair<Word, int>> out, in;
        for (const auto& e : g.edges) {
          CHECK(word_f(mode, base, e.label, e.from) == e.to);
          CHECK(out.emplace(e.from, e.label).second);
          CHECK(in.emplace(e.to, e.label).second);
        }
        std::set<std::pair<Word, int>> loops;
        for (const auto& l : g.loops) loops.emplace(l.vertex, l.label);
        for (const auto& v : g.vertices) {
          CHECK(v.wt == word_weight(base, v.word));
          for (std::size_t p = 0; p < g.indices.size(); ++p) {
            const int i = g.indices[p];
            const WordStats st = word_stats(mode, base, i, v.word);
            CHECK(v.eps[p] == st.eps);
            CHECK(v.phi[p] == st.phi);
            CHECK(loops.count({v.word, i}) == (st.eps.is_infinite() ? 1u : 0u));
            if (auto y = word_f(mode, base, i, v.word)) {
              CHECK(g.contains(*y));
              CHECK(out.count({v.word, i}) == 1);
            }
            if (auto y = word_e(mode, base, i, v.word)) CHECK(g.contains(*y));
          }
        }
      }
    }
  }
}

TEST_CASE("vertex cap") {
  const auto a3 = standard_crystal_A(3);
  CHECK_THROWS_AS(component(T, a3, W(a3, "111111"), 5), CapExceeded);
  CHECK_THROWS_AS(iso_from(T, a3, W(a3, "111111"), W(a3, "111111"), 5), CapExceeded);
  CHECK(component(T, a3, W(a3, "1"), 3).vertices.size() == 3);
}

TEST_CASE("iso_from examples") {
  const auto a3 = standard_crystal_A(3);
  const auto c2 = standard_crystal_C(2);
  CHECK(iso_from(T, a3, W(a3, "112"), W(a3, "121")));
  CHECK_FALSE(iso_from(Q, c2, W(c2, "1 -1"), {}));
  CHECK(iso_from(T, a3, W(a3, "2 3 1"), W(a3, "2 3 1")));
  const auto psi = find_isomorphism(T, a3, W(a3, "112"), W(a3, "121"));
  REQUIRE(psi.has_value());
  CHECK(psi->at(W(a3, "223")) == W(a3, "232"));
  CHECK(psi->at(W(a3, "323")) == W(a3, "233"));
  CHECK(psi->at(W(a3, "212")) == W(a3, "122"));
}

TEST_CASE("iso_from agrees with brute-force bijection search over A2") {
  const auto a2 = standard_crystal_A(2);
  const auto words = words_up_to(a2, 4);
  for (ProductMode mode : {T, Q}) {
    std::map<Word, ComponentGraph> graphs;
    for (const auto& w : words) graphs.emplace(w, component(mode, a2, w));
    for (const auto& u : words)
      for (const auto& v : words) {
        ComponentGraph gu = graphs.at(u), gv = graphs.at(v);
        gu.root = u;
        gv.root = v;
        CAPTURE(format_word(a2, u));
        CAPTURE(format_word(a2, v));
        CHECK(iso_from(mode, a2, u, v) == brute_force_iso(gu, gv));
      }
  }
}

TEST_CASE("iso_from is an equivalence preserving weight and statistics") {
  std::mt19937 rng(99);
  for (const auto& base : {standard_crystal_A(3), standard_crystal_C(2)}) {
    for (ProductMode mode : {T, Q}) {
      const auto words = words_of_length(base, 3);
      std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
      for (const auto& u : words) {
        CHECK(iso_from(mode, base, u, u));
        for (const auto& v : words) {
          const bool uv = iso_from(mode, base, u, v);
          CHECK(uv == iso_from(mode, base, v, u));
          if (!uv) continue;
          CHECK(word_weight(base, u) == word_weight(base, v));
          for (int i : base.index_set())
            CHECK(word_stats(mode, base, i, u) == word_stats(mode, base, i, v));
          const Word& x = words[pick(rng)];
          if (iso_from(mode, base, v, x)) CHECK(iso_from(mode, base, u, x));
        }
      }
    }
  }
}

TEST_CASE("DOT export") {
  const auto a3 = standard_crystal_A(3);
  const auto c2 = standard_crystal_C(2);
  const std::string eps = export_dot(component(T, a3, {}));
  CHECK(eps.find("\"ε\" [label=\"ε\\nwt=(0,0,0)\"];") != std::string::npos);
  CHECK(eps.find("->") == std::string::npos);
  const std::string path = export_dot(component(T, a3, W(a3, "1")));
  CHECK(path ==
        "digraph component {\n"
        "  // base A3, mode tensor, root \"1\"\n"
        "  \"1\" [label=\"1\\nwt=(1,0,0)\"];\n"
        "  \"2\" [label=\"2\\nwt=(0,1,0)\"];\n"
        "  \"3\" [label=\"3\\nwt=(0,0,1)\"];\n"
        "  \"1\" -> \"2\" [label=\"1\"];\n"
        "  \"2\" -> \"3\" [label=\"2\"];\n"
        "}\n");
  const std::string loop = export_dot(component(Q, c2, W(c2, "1 -1")));
  CHECK(loop.find("\"1 -1\" -> \"1 -1\" [label=\"1\"];") != std::string::npos);
  CHECK(export_dot(component(T, a3, W(a3, "213"))) == export_dot(component(T, a3, W(a3, "213"))));
}

TEST_CASE("JSON export round trip") {
  const auto a3 = standard_crystal_A(3);
  const auto c3 = standard_crystal_C(3);
  const auto g = component(T, a3, W(a3, "112"));
  CHECK(import_json(export_json(g)) == g);
  CHECK(component_to_json(g)["vertex_count"] == 8);
  const auto h = component(Q, a3, W(a3, "2121"));
  CHECK(import_json(export_json(h)) == h);
  const auto loops = component_to_json(h)["loops"];
  CHECK(loops.size() == 4);
  CHECK(loops[0] == nlohmann::json{{"vertex", "2 1 2 1"}, {"label", 1}});
  const auto k = component(Q, c3, W(c3, "1 2 -2"));
  CHECK(import_json(export_json(k)) == k);
  CHECK_THROWS_AS(import_json("{"), ParseError);
  CHECK_THROWS_AS(import_json("{\"mode\":\"tensor\"}"), ParseError);
}

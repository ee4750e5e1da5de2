#include <doctest.h>

#include <random>

#include "qck/transform.hpp"
#include "support.hpp"

using namespace qck;
using support::edges_of;
using support::loops_of;
using support::W;

namespace {

const auto T = ProductMode::Tensor;
const auto Q = ProductMode::QuasiTensor;
const ExtendedInt kInf = ExtendedInt::infinity();

Word slice(const Word& w, std::size_t a, std::size_t b) {
  return Word(w.begin() + static_cast<std::ptrdiff_t>(a), w.begin() + static_cast<std::ptrdiff_t>(b));
}

// Some split u = u1 u2 with φ_i(u1) > 0 and ε_i(u2) > 0 in the tensor monoid.
bool blocked_split(const QuasiCrystal& base, const Word& u, int i) {
  for (std::size_t k = 0; k <= u.size(); ++k)
    if (word_stats(T, base, i, slice(u, 0, k)).phi > 0 &&
        word_stats(T, base, i, slice(u, k, u.size())).eps > 0)
      return true;
  return false;
}

}  // namespace

TEST_CASE("blocking decompositions") {
  const auto a3 = standard_crystal_A(3);
  const auto c3 = standard_crystal_C(3);
  const auto d = find_blocking_decomposition(a3, W(a3, "112"), 1);
  REQUIRE(d.has_value());
  CHECK(d->left_pos == 0);
  CHECK(d->right_pos == 2);
  CHECK(d->index == 1);
  const auto e = find_blocking_decomposition(c3, W(c3, "1 2 -2"), 2);
  REQUIRE(e.has_value());
  CHECK(e->left_pos == 1);
  CHECK(e->right_pos == 2);
  for (int i : c3.index_set())
    for (ElementId x = 0; x < c3.size(); ++x)
      CHECK_FALSE(find_blocking_decomposition(c3, {x}, i).has_value());
  CHECK_FALSE(find_blocking_decomposition(a3, {}, 1).has_value());
  CHECK_THROWS_AS(find_blocking_decomposition(a3, Word{0, 5}, 1), LetterError);
}

TEST_CASE("blocking pairs are exactly the blocked factorizations") {
  for (const auto& base : {standard_crystal_A(3), standard_crystal_C(2)}) {
    for (const auto& w : words_up_to(base, 5)) {
      for (int i : base.index_set()) {
        const auto d = find_blocking_decomposition(base, w, i);
        CHECK(d.has_value() == blocked_split(base, w, i));
        if (d) {
          CHECK(d->left_pos < d->right_pos);
          CHECK(base.phi(i, w[d->left_pos]) > 0);
          CHECK(base.eps(i, w[d->right_pos]) > 0);
        }
      }
    }
  }
}

TEST_CASE("derived structure examples") {
  const auto a3 = standard_crystal_A(3);
  CHECK(derive_qtensor_structure(a3, W(a3, "112"), 1) ==
        DerivedStructure{std::nullopt, std::nullopt, kInf, kInf});
  const auto s = derive_qtensor_structure(a3, W(a3, "112"), 2);
  CHECK(s.f == W(a3, "113"));
  CHECK(s.eps == 0);
  CHECK(s.phi == 1);
  for (int i : a3.index_set())
    CHECK(derive_qtensor_structure(a3, {}, i) ==
          DerivedStructure{std::nullopt, std::nullopt, 0, 0});
}

TEST_CASE("derived structure equals direct quasi-tensor evaluation") {
  for (const auto& base : {standard_crystal_A(3), standard_crystal_C(2)}) {
    for (const auto& w : words_up_to(base, 5)) {
      for (int i : base.index_set()) {
        const auto d = derive_qtensor_structure(base, w, i);
        const auto st = word_stats(Q, base, i, w);
        CHECK(d.eps == st.eps);
        CHECK(d.phi == st.phi);
        CHECK(d.e == word_e(Q, base, i, w));
        CHECK(d.f == word_f(Q, base, i, w));
      }
    }
  }
}

TEST_CASE("transformed component of 112") {
  const auto a3 = standard_crystal_A(3);
  const auto g = transform_graph(component(T, a3, W(a3, "112")), a3);
  CHECK(g.mode == Q);
  CHECK(g.vertices.size() == 8);
  CHECK(edges_of(a3, g) == support::NamedEdges{{"2 1 2", "3 1 2", 2}, {"3 1 2", "3 1 3", 2},
                                               {"3 1 3", "3 2 3", 1}, {"1 1 2", "1 1 3", 2},
                                               {"1 1 3", "2 1 3", 1}, {"2 1 3", "2 2 3", 1}});
  CHECK(loops_of(a3, g) == support::NamedLoops{{"1 1 2", 1}, {"2 1 2", 1}, {"3 1 2", 1},
                                               {"2 1 3", 2}, {"2 2 3", 2}, {"3 2 3", 2}});
}

TEST_CASE("transformed component of 1 2 -2") {
  const auto c3 = standard_crystal_C(3);
  const auto g = transform_graph(component(T, c3, W(c3, "1 2 -2")), c3);
  CHECK(edges_of(c3, g) == support::NamedEdges{{"1 2 -1", "1 3 -1", 2},
                                               {"1 3 -1", "1 -3 -1", 3},
                                               {"1 -3 -1", "1 -2 -1", 2}});
  support::NamedLoops expected = {{"1 2 -2", 2}, {"2 -2 -1", 2}};
  for (const char* v : {"1 2 -2", "1 2 -1", "1 3 -1", "1 -3 -1", "1 -2 -1", "2 -2 -1"})
    expected.emplace(v, 1);
  CHECK(loops_of(c3, g) == expected);
}

TEST_CASE("transform leaves loop-free isolated vertices alone") {
  const auto a3 = standard_crystal_A(3);
  const auto g = component(T, a3, {});
  const auto t = transform_graph(g, a3);
  CHECK(t.vertices == g.vertices);
  CHECK(t.edges == g.edges);
  CHECK(t.loops.empty());
  CHECK_THROWS_AS(transform_graph(component(Q, a3, {}), a3), DomainError);
}

TEST_CASE("graph recipe reproduces the quasi-tensor graph") {
  for (const auto& [base, len] : {std::pair{standard_crystal_A(2), std::size_t{4}},
                                  std::pair{standard_crystal_A(3), std::size_t{4}},
                                  std::pair{standard_crystal_C(2), std::size_t{3}}}) {
    for (const auto& w : words_up_to(base, len)) {
      const auto g = component(T, base, w);
      if (g.vertices.front().word != w) continue;  // each component once
      const auto t = transform_graph(g, base);
      CHECK(t.vertices.size() == g.vertices.size());
      support::NamedEdges edges;
      support::NamedLoops loops;
      for (const auto& v : g.vertices) {
        for (int i : base.index_set()) {
          if (auto y = word_f(Q, base, i, v.word)) {
            CHECK(g.contains(*y));
            edges.emplace(format_word(base, v.word), format_word(base, *y), i);
          }
          if (word_stats(Q, base, i, v.word).eps.is_infinite())
            loops.emplace(format_word(base, v.word), i);
        }
        const auto* tv = t.find(v.word);
        REQUIRE(tv);
        for (std::size_t p = 0; p < t.indices.size(); ++p)
          CHECK(tv->eps[p] == word_stats(Q, base, t.indices[p], v.word).eps);
      }
      CHECK(edges_of(base, t) == edges);
      CHECK(loops_of(base, t) == loops);
    }
  }
}

TEST_CASE("operators keep a blocked factorization blocked") {
  for (const auto& base : {standard_crystal_A(3), standard_crystal_C(2)}) {
    for (const auto& w : words_up_to(base, 5)) {
      for (int i : base.index_set()) {
        for (std::size_t k = 1; k < w.size(); ++k) {
          const Word x = slice(w, 0, k), y = slice(w, k, w.size());
          if (!(word_stats(T, base, i, x).phi > 0 && word_stats(T, base, i, y).eps > 0)) continue;
          for (auto op : {&word_e, &word_f}) {
            const MaybeWord image = op(T, base, i, w);
            if (!image) continue;
            CHECK(word_stats(T, base, i, slice(*image, 0, k)).phi > 0);
            CHECK(word_stats(T, base, i, slice(*image, k, w.size())).eps > 0);
          }
        }
      }
    }
  }
}

TEST_CASE("every refactorization of a blocked word stays blocked") {
  for (const auto& base : {standard_crystal_A(3), standard_crystal_C(2)}) {
    for (const auto& w : words_up_to(base, 5)) {
      for (int i : base.index_set()) {
        for (std::size_t k = 0; k <= w.size(); ++k) {
          if (!(word_stats(T, base, i, slice(w, 0, k)).phi > 0 &&
                word_stats(T, base, i, slice(w, k, w.size())).eps > 0))
            continue;
          for (std::size_t m = 0; m <= w.size(); ++m) {
            const Word x2 = slice(w, 0, m), y2 = slice(w, m, w.size());
            const bool ok = blocked_split(base, x2, i) || blocked_split(base, y2, i) ||
                            (word_stats(T, base, i, x2).phi > 0 &&
                             word_stats(T, base, i, y2).eps > 0);
            CHECK(ok);
          }
        }
      }
    }
  }
}

TEST_CASE("blocked words stay blocked in any context") {
  std::mt19937 rng(31);
  for (const auto& base : {standard_crystal_A(3), standard_crystal_C(3)}) {
    std::uniform_int_distribution<ElementId> letter(0, static_cast<ElementId>(base.size() - 1));
    std::uniform_int_distribution<int> len(0, 3);
    for (int trial = 0; trial < 2000; ++trial) {
      Word u, x, y;
      for (int k = len(rng) + 1; k > 0; --k) u.push_back(letter(rng));
      for (int k = len(rng); k > 0; --k) x.push_back(letter(rng));
      for (int k = len(rng); k > 0; --k) y.push_back(letter(rng));
      Word xuy = x;
      xuy.insert(xuy.end(), u.begin(), u.end());
      xuy.insert(xuy.end(), y.begin(), y.end());
      for (int i : base.index_set())
        if (find_blocking_decomposition(base, u, i))
          CHECK(find_blocking_decomposition(base, xuy, i).has_value());
    }
  }
}

TEST_CASE("overlap witnesses in the free monoid") {
  const Word a{0}, b{1}, c{2}, d{3};
  const Word ab{0, 1}, cd{2, 3}, abc{0, 1, 2};
  const auto w = levi_decompose(ab, cd, abc, d);
  CHECK(w.z == c);
  CHECK(w.side == LeviWitness::Side::SecondExtendsFirst);
  const auto v = levi_decompose(abc, d, ab, cd);
  CHECK(v.z == c);
  CHECK(v.side == LeviWitness::Side::FirstExtendsSecond);
  const auto e = levi_decompose(abc, {}, abc, {});
  CHECK(e.z.empty());
  CHECK_THROWS_AS(levi_decompose({}, ab, b, a), DomainError);
}

#include <doctest.h>

#include <random>

#include "qck/errors.hpp"
#include "qck/rootsys.hpp"

using qck::RootSystem;
using qck::Weight;

TEST_CASE("simple roots of A and C") {
  const auto a3 = RootSystem::type_A(3);
  const auto c2 = RootSystem::type_C(2);
  CHECK(a3.simple_root(1) == Weight{1, -1, 0});
  CHECK(a3.simple_root(2) == Weight{0, 1, -1});
  CHECK(c2.simple_root(1) == Weight{1, -1});
  CHECK(c2.simple_root(2) == Weight{0, 2});
  CHECK_THROWS_AS(a3.simple_root(3), qck::IndexError);
  CHECK_THROWS_AS(a3.position(0), qck::IndexError);
  CHECK(a3.index_set() == std::vector<int>{1, 2});
  CHECK(c2.index_set() == std::vector<int>{1, 2});
}

TEST_CASE("rank below two is rejected") {
  CHECK_THROWS_AS(RootSystem::type_A(1), qck::DomainError);
  CHECK_THROWS_AS(RootSystem::type_C(1), qck::DomainError);
}

TEST_CASE("coroot pairing") {
  const auto a3 = RootSystem::type_A(3);
  const auto c2 = RootSystem::type_C(2);
  CHECK(a3.coroot_pairing(Weight::unit(3, 1), 1) == 1);
  CHECK(c2.coroot_pairing(Weight::unit(2, 2), 2) == 1);
  CHECK(a3.coroot_pairing(Weight(3), 2) == 0);
  CHECK(c2.coroot_pairing(Weight{3, -5}, 2) == -5);
  CHECK(c2.coroot_pairing(Weight{3, -5}, 1) == 8);
  CHECK_THROWS_AS(a3.coroot_pairing(Weight{1, 0}, 1), qck::ShapeError);
}

TEST_CASE("reflection examples") {
  const auto a3 = RootSystem::type_A(3);
  const auto c2 = RootSystem::type_C(2);
  CHECK(reflection(a3, a3.simple_root(1), Weight::unit(3, 1)) == Weight::unit(3, 2));
  CHECK(reflection(a3, a3.simple_root(1), Weight::unit(3, 3)) == Weight::unit(3, 3));
  CHECK(reflection(c2, c2.simple_root(2), Weight::unit(2, 2)) == -Weight::unit(2, 2));
  CHECK_THROWS_AS(reflection(a3, Weight(3), Weight::unit(3, 1)), qck::DomainError);
}

TEST_CASE("reflections are isometric involutions with integral pairings") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> coord(-6, 6);
  for (const auto& sys : {RootSystem::type_A(4), RootSystem::type_C(3),
                          RootSystem::type_A(2), RootSystem::type_C(2)}) {
    const auto n = static_cast<std::size_t>(sys.rank());
    for (int trial = 0; trial < 200; ++trial) {
      Weight v(n), u(n);
      for (std::size_t k = 0; k < n; ++k) {
        v[k] = coord(rng);
        u[k] = coord(rng);
      }
      for (int i : sys.index_set()) {
        const Weight& a = sys.simple_root(i);
        const Weight rv = reflection(sys, a, v);
        CHECK(reflection(sys, a, rv) == v);
        CHECK(inner_product(rv, reflection(sys, a, u)) == inner_product(v, u));
        CHECK(sys.coroot_pairing(v, i) * inner_product(a, a) == 2 * inner_product(v, a));
        CHECK(rv == v - sys.coroot_pairing(v, i) * a);
      }
    }
  }
}

TEST_CASE("weight arithmetic") {
  const Weight a{1, 2, 3}, b{-4, 0, 7}, zero(3);
  CHECK(a + b == b + a);
  CHECK((a + b) + zero == a + b);
  CHECK(a - a == zero);
  CHECK(2 * a == a + a);
  CHECK(a.to_string() == "(1,2,3)");
}

TEST_CASE("exact rank") {
  CHECK(qck::exact_rank({Weight{1, 0}, Weight{0, 1}}) == 2);
  CHECK(qck::exact_rank({Weight{1, 0}, Weight{-1, 0}}) == 1);
  CHECK(qck::exact_rank({Weight{2, 4, 6}, Weight{1, 2, 3}, Weight{0, 0, 1}}) == 2);
  CHECK(qck::exact_rank({}) == 0);
}

TEST_CASE("generic datum") {
  // A_2 written out by hand.
  const auto g = RootSystem::generic(3, {1, 2},
                                     {{1, Weight{1, -1, 0}}, {2, Weight{0, 1, -1}}},
                                     {{1, Weight{1, -1, 0}}, {2, Weight{0, 1, -1}}});
  const auto a3 = RootSystem::type_A(3);
  const Weight v{4, -2, 5};
  for (int i : {1, 2}) {
    CHECK(g.coroot_pairing(v, i) == a3.coroot_pairing(v, i));
    CHECK(reflection(g, g.simple_root(i), v) == reflection(a3, a3.simple_root(i), v));
  }
  CHECK_THROWS_AS(reflection(g, Weight{1, 0, -1}, v), qck::DomainError);
  const auto back = RootSystem::from_json(g.to_json());
  CHECK(back == g);
  CHECK(back.id() == g.id());
  CHECK(RootSystem::from_json(a3.to_json()) == a3);
  CHECK(a3.id() == "A3");

  CHECK_THROWS_AS(RootSystem::generic(2, {1, 2},
                                      {{1, Weight{1, 1}}, {2, Weight{2, 2}}},
                                      {{1, Weight{1, 0}}, {2, Weight{0, 1}}}),
                  qck::DomainError);
  CHECK_THROWS_AS(RootSystem::from_json(nlohmann::json{{"kind", "Q"}, {"rank", 2}}),
                  qck::ParseError);
}

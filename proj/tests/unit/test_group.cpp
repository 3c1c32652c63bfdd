#include <doctest.h>

#include <algorithm>

#include "cohomoring/group.hpp"
#include "cohomoring/serialize.hpp"
#include "oracles.hpp"

using namespace cohomoring;

TEST_CASE("cyclic and dihedral groups") {
  const auto c6 = make_cyclic(6);
  CHECK(c6->order() == 6);
  CHECK(c6->is_abelian());
  CHECK(c6->element_order(1) == 6);
  CHECK(c6->element_order(2) == 3);

  for (int n = 3; n <= 8; ++n) {
    const auto d = make_dihedral(n);
    CHECK(d->order() == 2 * n);
    CHECK_FALSE(d->is_abelian());
    CHECK(d->generators() == std::vector<Elem>{n, 1});
    const Elem x = n, y = 1;
    CHECK(d->element_order(x) == 2);
    CHECK(d->element_order(y) == n);
    // x y x^-1 = y^-1
    CHECK(d->conj(x, y) == d->inv(y));
    // y^b x^a has index b + n a
    for (int b = 0; b < n; ++b) CHECK(d->mul(d->power(y, b), x) == b + n);
    CHECK(center(d).order() == (n % 2 == 0 ? 2 : 1));
  }
}

TEST_CASE("invalid tables are rejected") {
  // Not a Latin square.
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 1}), Error);
  // Identity not at index 0.
  CHECK_THROWS_AS(FiniteGroup(2, {1, 0, 0, 1}), Error);
  // Latin square with identity 0 that is not associative (order 5 loop).
  const std::vector<Elem> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS_AS(FiniteGroup(5, loop), Error);
  // Generators that do not generate.
  CHECK_THROWS_AS(FiniteGroup(4, make_cyclic(4)->table(), {2}), Error);
}

TEST_CASE("all_homs matches exhaustive search") {
  const std::vector<GroupPtr> groups = {make_cyclic(1), make_cyclic(2), make_cyclic(4),
                                        make_direct_product(make_cyclic(2), make_cyclic(2)), make_dihedral(3)};
  for (const auto& s : groups)
    for (const auto& t : groups) {
      auto expect = oracle::all_hom_maps(*s, *t);
      std::vector<std::vector<Elem>> got;
      for (const auto& h : all_homs(s, t)) got.push_back(h.map);
      std::sort(expect.begin(), expect.end());
      std::sort(got.begin(), got.end());
      CHECK(got == expect);
    }
}

TEST_CASE("hom_make extends generator images and rejects non-homomorphisms") {
  const auto c4 = make_cyclic(4), c2 = make_cyclic(2);
  const auto h = hom_make(c4, c2, std::vector<Elem>{1});
  CHECK(h.map == std::vector<Elem>{0, 1, 0, 1});
  CHECK_FALSE(try_hom_make(c2, c4, std::vector<Elem>{1}).has_value());
  CHECK_THROWS_AS(hom_make(c2, c4, std::vector<Elem>{1}), Error);
}

TEST_CASE("automorphism group orders") {
  CHECK(automorphism_group(make_cyclic(8)).group->order() == 4);
  CHECK(automorphism_group(make_cyclic(7)).group->order() == 6);
  CHECK(automorphism_group(make_direct_product(make_cyclic(2), make_cyclic(2))).group->order() == 6);
  CHECK(automorphism_group(make_dihedral(4)).group->order() == 8);
  const auto aut = automorphism_group(make_dihedral(3));
  CHECK(aut.group->order() == 6);
  for (Elem k = 0; k < 6; ++k) CHECK(aut.maps[k].is_injective());
}

TEST_CASE("all_actions counts homomorphisms into Aut(N)") {
  // Aut(C3) = C2, so C2 has two actions on C3 and C3 has one.
  CHECK(all_actions(make_cyclic(2), make_cyclic(3)).size() == 2);
  CHECK(all_actions(make_cyclic(3), make_cyclic(3)).size() == 1);
  // Hom(C2, GL_2(F_2) = S_3) has 1 + 3 elements.
  CHECK(all_actions(make_cyclic(2), make_direct_product(make_cyclic(2), make_cyclic(2))).size() == 4);
  for (const auto& a : all_actions(make_cyclic(4), make_cyclic(5))) CHECK_NOTHROW(a->validate());
}

TEST_CASE("kernel, image, quotient and normality") {
  const auto d4 = make_dihedral(4);
  const auto c2 = make_cyclic(2);
  // p(y^b x^a) = a
  std::vector<Elem> pm(8);
  for (Elem g = 0; g < 8; ++g) pm[g] = g / 4;
  const GroupHom p{d4, c2, pm};
  CHECK_NOTHROW(p.validate());
  const auto k = kernel(p);
  CHECK(k.elements() == std::vector<Elem>{0, 1, 2, 3});
  CHECK(is_normal(*d4, k.elements()));
  CHECK(image(p).order() == 2);
  const auto q = quotient(d4, k);
  CHECK(q.group->order() == 2);
  const std::vector<Elem> reflection = {0, 4};
  CHECK_FALSE(is_normal(*d4, reflection));
  // Centralizer of the rotations in D4 is the rotations.
  CHECK(centralizer(d4, k.elements()).order() == 4);
}

TEST_CASE("conjugation action on rotations inverts under the reflection") {
  const int n = 5;
  const auto d = make_dihedral(n);
  const auto rot = subgroup_from_elements(d, {0, 1, 2, 3, 4});
  const auto induced = induced_conjugation_action(d, rot);
  const auto& act = *induced.action;
  for (Elem b = 0; b < n; ++b) CHECK(act(1, b) == (n - b) % n);
}

TEST_CASE("semidirect product group") {
  const auto acts = all_actions(make_cyclic(2), make_cyclic(3));
  const auto nontrivial = acts[0]->is_trivial() ? acts[1] : acts[0];
  const auto sd = make_semidirect_group(*nontrivial);
  CHECK(sd.group->order() == 6);
  CHECK_FALSE(sd.group->is_abelian());
  CHECK(find_isomorphism(sd.group, make_dihedral(3)).has_value());
  CHECK_FALSE(find_isomorphism(sd.group, make_cyclic(6)).has_value());
}

TEST_CASE("group JSON round trip and shorthands") {
  const auto d3 = make_dihedral(3);
  const auto back = group_from_json(group_to_json(*d3));
  CHECK(back->table() == d3->table());
  CHECK(group_from_json(Json::parse(R"({"cyclic": 5})"))->order() == 5);
  CHECK(group_from_json(Json::parse(R"({"product": [{"cyclic": 2}, {"dihedral": 3}]})"))->order() == 12);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"order": 2, "table": [[0, 1]]})")), Error);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"order": 2, "table": [[0, 1], [1, 1]]})")), Error);
  CHECK_THROWS_AS(group_from_json(Json::parse(R"({"table": [[0]]})")), Error);
}

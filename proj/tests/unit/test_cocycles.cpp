#include <doctest.h>

#include <algorithm>

#include "cohomoring/cocycles.hpp"
#include "cohomoring/examples.hpp"
#include "oracles.hpp"

using namespace cohomoring;

namespace {

std::vector<std::vector<Elem>> values_of(const std::vector<CrossedHom>& z) {
  std::vector<std::vector<Elem>> out;
  for (const auto& phi : z) out.push_back(phi.values);
  return out;
}

std::vector<ActionPtr> sample_actions() {
  std::vector<ActionPtr> out;
  const auto c2 = make_cyclic(2), c3 = make_cyclic(3), c4 = make_cyclic(4);
  const auto v4 = make_direct_product(c2, c2);
  for (const auto& [g, m] : std::vector<std::pair<GroupPtr, GroupPtr>>{
           {c2, c3}, {c2, c4}, {c4, c4}, {v4, c2}, {c2, v4}, {c3, v4}, {make_dihedral(3), c3}, {make_dihedral(3), c2}})
    for (const auto& a : all_actions(g, m)) out.push_back(a);
  return out;
}

}  // namespace

TEST_CASE("enumerate_z1 matches the exhaustive crossed-hom search") {
  for (const auto& a : sample_actions()) {
    auto expect = oracle::all_crossed_homs(*a->actor, *a->module, [&](Elem x, Elem m) { return (*a)(x, m); });
    std::sort(expect.begin(), expect.end());
    CHECK(values_of(enumerate_z1(a, Z1Strategy::Closure)) == expect);
    CHECK(values_of(enumerate_z1(a, Z1Strategy::FullScan)) == expect);
    CHECK(values_of(enumerate_z1(a)) == expect);
  }
}

TEST_CASE("Z^1 of D_n acting on rotations by conjugation has n^2 members") {
  for (int n = 3; n <= 6; ++n) {
    const auto ext = dihedral_extension(n);
    const auto z = enumerate_z1(ext.g_action);
    CHECK(z.size() == static_cast<std::size_t>(n * n));
    CHECK(z.front() == z1_zero(ext.g_action));
  }
}

TEST_CASE("make_crossed_hom rejects non-cocycles") {
  const auto a = trivial_action(make_cyclic(2), make_cyclic(3));
  CHECK_NOTHROW(make_crossed_hom(a, {0, 0}));
  CHECK_THROWS_AS(make_crossed_hom(a, {0, 1}), Error);
  CHECK(crossed_hom_violation(*a, std::vector<Elem>{0, 1}).has_value());
}

TEST_CASE("Z^1 group operations") {
  const auto ext = dihedral_extension(4);
  const auto z = enumerate_z1(ext.g_action);
  for (const auto& phi : z) {
    CHECK(z1_add(phi, z1_neg(phi)) == z1_zero(ext.g_action));
    for (const auto& psi : z) {
      const auto s = z1_add(phi, psi);
      CHECK(std::find(z.begin(), z.end(), s) != z.end());
      CHECK(s == z1_add(psi, phi));
      const auto d = z1_diamond(phi, psi, ext.i);
      CHECK(std::find(z.begin(), z.end(), d) != z.end());
      for (Elem x = 0; x < ext.G->order(); ++x) CHECK(d(x) == phi(ext.i(psi(x))));
    }
  }
}

TEST_CASE("cocycle ring is a ring and restriction is additive and equivariant") {
  const auto ext = dihedral_extension(5);
  const auto cr = cocycle_ring(ext);
  CHECK(cr.ring->order() == 25);
  CHECK_FALSE(cr.ring->find_axiom_violation().has_value());
  for (const auto& phi : cr.carrier) {
    const auto beta = restrict_to_module(phi, ext);
    CHECK_NOTHROW(beta.validate());
    for (Elem n = 0; n < 5; ++n) CHECK(beta(n) == phi(ext.i(n)));
  }
}

TEST_CASE("inflation of crossed homs along p") {
  const auto ext = dihedral_extension(3);
  for (const auto& phi : enumerate_z1(ext.action)) {
    const auto inf = inflate(phi, ext.p, ext.g_action);
    for (Elem x = 0; x < ext.G->order(); ++x) CHECK(inf(x) == phi(ext.p(x)));
    CHECK_FALSE(crossed_hom_violation(*ext.g_action, inf.values).has_value());
  }
}

TEST_CASE("budget limits are enforced") {
  // C2^10 style blowup: |M|^|G| for a big module fails fast under FullScan.
  const auto a = trivial_action(make_cyclic(8), make_cyclic(12));
  CHECK_THROWS_AS(enumerate_z1(a, Z1Strategy::FullScan), BudgetExceeded);
  CHECK(enumerate_z1(a, Z1Strategy::Closure).size() == 4);  // Hom(C8, C12) = Z/4
}

#include <doctest.h>

#include <numeric>

#include "cohomoring/examples.hpp"
#include "cohomoring/ring.hpp"
#include "cohomoring/serialize.hpp"

using namespace cohomoring;

namespace {

std::vector<Elem> zn_table(int n, bool mul) {
  std::vector<Elem> t(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = mul ? (a * b) % n : (a + b) % n;
  return t;
}

}  // namespace

TEST_CASE("ring axioms are validated") {
  CHECK_NOTHROW(FiniteRing(6, zn_table(6, false), zn_table(6, true), 1));
  auto bad = zn_table(4, true);
  bad[3 * 4 + 3] = 2;  // 3*3 = 2 breaks associativity/distributivity
  CHECK_THROWS_AS(FiniteRing(4, zn_table(4, false), bad), Error);
  const auto un = FiniteRing::unchecked(4, zn_table(4, false), bad);
  const auto v = un.find_axiom_violation();
  REQUIRE(v.has_value());
  CHECK_FALSE(v->axiom.empty());
  // wrong identity
  CHECK_THROWS_AS(FiniteRing(4, zn_table(4, false), zn_table(4, true), 3), Error);
}

TEST_CASE("quasi-regular group and units of Z/n") {
  for (int n = 1; n <= 15; ++n) {
    const auto r = make_zn_ring(n);
    const auto qr = quasi_regular_group(*r);
    // r is quasi-regular iff 1 + r is a unit iff gcd(1 + r, n) = 1
    std::vector<Elem> expect;
    for (int a = 0; a < n; ++a)
      if (std::gcd(a + 1, n) == 1) expect.push_back(a);
    CHECK(qr.members == expect);
    for (std::size_t k = 0; k < qr.members.size(); ++k)
      CHECK(star(*r, qr.members[k], qr.star_inverse[k]) == 0);
    CHECK(qr.group->order() == static_cast<int>(expect.size()));
    CHECK(units(*r).members.size() == expect.size());
    CHECK(qr_to_units_is_isomorphism(*r));
  }
}

TEST_CASE("square-zero ideals and the quasi-regular sequence") {
  const auto z4 = make_zn_ring(4), z2 = make_zn_ring(2);
  const std::vector<Elem> ideal = {0, 2};
  CHECK(is_square_zero_ideal(*z4, ideal));
  CHECK_FALSE(is_square_zero_ideal(*make_zn_ring(6), std::vector<Elem>{0, 2, 4}));
  const RingHom p{z4, z2, {0, 1, 0, 1}};
  CHECK_NOTHROW(p.validate());
  const auto rep = verify_prop_qr(p, ideal);
  CHECK(rep.ok());
  CHECK(rep.qr_r == 2);
  CHECK(rep.qr_s == 1);
  // Z/9 -> Z/3 has square-zero kernel {0, 3, 6}.
  const RingHom q{make_zn_ring(9), make_zn_ring(3), {0, 1, 2, 0, 1, 2, 0, 1, 2}};
  CHECK(verify_prop_qr(q, std::vector<Elem>{0, 3, 6}).ok());
  // A kernel that is not square-zero fails the preconditions.
  const RingHom zero{make_zn_ring(4), make_zn_ring(1), {0, 0, 0, 0}};
  CHECK_FALSE(verify_prop_qr(zero, std::vector<Elem>{0, 1, 2, 3}).preconditions);
}

TEST_CASE("semidirect ring multiplication rule") {
  const auto r = make_zn_ring(3);
  const auto s = make_cyclic(3);
  BimoduleAction b{r, s, std::vector<Elem>(9), std::vector<Elem>(9)};
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) b.left[x * 3 + y] = b.right[y * 3 + x] = (x * y) % 3;
  CHECK_NOTHROW(b.validate());
  const auto ring = semidirect_ring(b);
  CHECK(ring->order() == 9);
  for (int s1 = 0; s1 < 3; ++s1)
    for (int r1 = 0; r1 < 3; ++r1)
      for (int s2 = 0; s2 < 3; ++s2)
        for (int r2 = 0; r2 < 3; ++r2) {
          const int prod = ring->mul(s1 + 3 * r1, s2 + 3 * r2);
          CHECK(prod % 3 == (r1 * s2 + s1 * r2) % 3);
          CHECK(prod / 3 == (r1 * r2) % 3);
        }
}

TEST_CASE("the dihedral and 432-element example rings") {
  for (int n : {3, 4, 6}) {
    const auto r = example1_ring(n);
    CHECK(r->order() == n * n);
    CHECK_FALSE(r->one().has_value());
    for (int a = 0; a < n * n; ++a)
      for (int b = 0; b < n * n; ++b) CHECK(r->mul(a, b) == ((a / n) * (b % n)) % n + n * (((a / n) * (b / n)) % n));
  }
  const auto ex = example2_ring();
  CHECK(ex.ring->order() == 432);
  CHECK(ex.s_elements.size() == 72);
  CHECK(ex.r_elements == std::vector<int>{0, 2, 4, 6, 8, 10});
  CHECK_THROWS_AS(ex.index(1, 0, 0), Error);
}

TEST_CASE("subrings") {
  const auto z12 = make_zn_ring(12);
  const auto evens = make_subring(*z12, {0, 2, 4, 6, 8, 10});
  CHECK(evens.ring->order() == 6);
  CHECK_THROWS_AS(make_subring(*z12, {0, 3}), Error);
}

TEST_CASE("ring JSON round trip") {
  const auto r = make_zn_ring(5);
  const auto back = ring_from_json(ring_to_json(*r));
  CHECK(back->mul_table() == r->mul_table());
  CHECK(back->one() == r->one());
  auto j = ring_to_json(*r);
  j["mul_table"][2][2] = 1;
  CHECK_THROWS_AS(ring_from_json(j), Error);
}

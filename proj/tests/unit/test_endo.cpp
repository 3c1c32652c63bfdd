#include <doctest.h>

#include <set>

#include "cohomoring/endo_rings.hpp"
#include "cohomoring/examples.hpp"
#include "oracles.hpp"

using namespace cohomoring;

namespace {

// End^Q_N(G) by scanning every endomorphism of G.
std::set<std::vector<Elem>> endo_qn_oracle(const AbelianExtension& ext) {
  std::set<std::vector<Elem>> out;
  for (const auto& m : oracle::all_hom_maps(*ext.G, *ext.G)) {
    bool ok = true;
    for (Elem n = 0; n < ext.N->order() && ok; ++n) ok = ext.in_n(m[ext.i(n)]);
    for (Elem x = 0; x < ext.G->order() && ok; ++x) ok = ext.p(m[x]) == ext.p(x);
    if (ok) out.insert(m);
  }
  return out;
}

}  // namespace

TEST_CASE("End^Q_N(G) matches a scan of all endomorphisms") {
  std::vector<AbelianExtension> exts = {dihedral_extension(3), dihedral_extension(4)};
  const auto c2 = make_cyclic(2), c4 = make_cyclic(4);
  exts.push_back(build_extension(GroupHom{c2, c4, {0, 2}}, GroupHom{c4, c2, {0, 1, 0, 1}}));
  exts.push_back(split_extension(trivial_action(c2, make_direct_product(c2, c2))));
  for (const auto& ext : exts) {
    const auto endo = enumerate_endo_qn(ext);
    std::set<std::vector<Elem>> got;
    for (const auto& a : endo.endos) got.insert(a.map);
    CHECK(got == endo_qn_oracle(ext));
    // member 0 is the identity and the ideal fixes N pointwise
    CHECK(endo.endos[0].map == identity_hom(ext.G).map);
    for (Elem k = 0; k < endo.size(); ++k) {
      bool fixes = true;
      for (Elem n = 0; n < ext.N->order(); ++n) fixes = fixes && endo.endos[k](ext.i(n)) == ext.i(n);
      CHECK(endo.in_ideal(k) == fixes);
    }
  }
}

TEST_CASE("[+] and [x] tables follow the pointwise formulas") {
  const auto ext = dihedral_extension(4);
  const auto endo = enumerate_endo_qn(ext);
  const auto& g = *ext.G;
  for (Elem a = 0; a < endo.size(); ++a)
    for (Elem b = 0; b < endo.size(); ++b) {
      const auto& u = endo.endos[a];
      const auto& w = endo.endos[b];
      std::vector<Elem> s(g.order()), t(g.order());
      for (Elem x = 0; x < g.order(); ++x) {
        s[x] = g.mul(g.mul(u(x), g.inv(x)), w(x));
        t[x] = g.mul(g.mul(g.mul(g.mul(u(w(x)), g.inv(w(x))), x), g.inv(u(x))), x);
      }
      CHECK(endo.index_of(s) == endo.ring->add(a, b));
      CHECK(endo.index_of(t) == endo.ring->mul(a, b));
      CHECK(boxplus(u, w).map == s);
      CHECK(boxtimes(u, w).map == t);
    }
  CHECK_FALSE(endo.ring->find_axiom_violation().has_value());
}

TEST_CASE("dihedral f_{k,l} formulas") {
  for (int n = 3; n <= 8; ++n) {
    const auto ext = dihedral_extension(n);
    const auto endo = enumerate_endo_qn(ext);
    auto idx = [&](int k, int l) { return endo.index_of(dihedral_f(ext, ((k % n) + n) % n, ((l % n) + n) % n).map); };
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) {
            CHECK(endo.ring->add(idx(k, l), idx(p, q)) == idx(k + p, l + q));
            CHECK(endo.ring->mul(idx(k, l), idx(p, q)) == idx(l * p, l * q));
          }
    CHECK(endo.ideal.size() == static_cast<std::size_t>(n));
    // rho(f_{k,l}) is y -> y^(l+1); Res subtracts the identity.
    for (int l = 0; l < n; ++l) {
      const auto f = dihedral_f(ext, 0, l);
      for (Elem b = 0; b < n; ++b) {
        CHECK(rho(ext, f)(b) == (b * (l + 1)) % n);
        CHECK(res(ext, f)(b) == (b * l) % n);
      }
    }
  }
}

TEST_CASE("module endomorphisms and the ideal report") {
  const auto ext = dihedral_extension(6);
  const auto m = module_endomorphisms(ext);
  CHECK(m.size() == 6);
  CHECK(m.maps[m.identity].map == identity_hom(ext.N).map);
  CHECK(m.ring->one() == m.identity);
  const auto endo = enumerate_endo_qn(ext);
  const auto rep = ideal_check(endo);
  CHECK(rep.ok());
  CHECK(rep.witness.empty());
}

TEST_CASE("End^N(G) and End^N(Q) monoids") {
  SUBCASE("dihedral: Qbar trivial") {
    const auto ext = dihedral_extension(5);
    const auto cd = centralizer_extension(ext);
    const auto ng = enumerate_endo_n_g(ext, cd);
    const auto nq = enumerate_endo_n_q(ext, cd);
    CHECK(nq.size() == 1);
    // Z^1(C2, C5 with inversion) has 5 members.
    CHECK(ng.size() == 5);
    CHECK(ng.automorphisms().size() == 5);
  }
  SUBCASE("C4 over C2: everything central") {
    const auto c2 = make_cyclic(2), c4 = make_cyclic(4);
    const auto ext = build_extension(GroupHom{c2, c4, {0, 2}}, GroupHom{c4, c2, {0, 1, 0, 1}});
    const auto cd = centralizer_extension(ext);
    const auto ng = enumerate_endo_n_g(ext, cd);
    const auto nq = enumerate_endo_n_q(ext, cd);
    // End^N(Q) = {phi : phi(x) = psi(x) x} for psi in Hom(C2, C2): identity and the zero map.
    CHECK(nq.size() == 2);
    CHECK(bijective_members(nq.endos) == std::vector<Elem>{0});
    for (const auto& a : ng.endos) {
      const auto rb = rho_bar(ext, a);
      CHECK(nq.index_of(rb.map) >= 0);
    }
  }
}

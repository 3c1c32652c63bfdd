#include "cohomoring/endo_rings.hpp"

#include <algorithm>

namespace cohomoring {

namespace {

Elem lookup(const std::map<std::vector<Elem>, Elem>& index, const std::vector<Elem>& map) {
  auto it = index.find(map);
  return it == index.end() ? -1 : it->second;
}

void require_same_group(const GroupHom& a, const GroupHom& b) {
  if (a.source->table() != b.source->table() || a.target->table() != a.source->table() ||
      b.target->table() != b.source->table())
    throw Error("endomorphisms of different groups");
}

}  // namespace

Elem EndoQN::index_of(const std::vector<Elem>& map) const { return lookup(index, map); }

bool EndoQN::in_ideal(Elem k) const { return std::binary_search(ideal.begin(), ideal.end(), k); }

Elem ModuleEndos::index_of(const std::vector<Elem>& map) const { return lookup(index, map); }

Elem EndoMonoid::index_of(const std::vector<Elem>& map) const { return lookup(index, map); }

std::vector<Elem> EndoMonoid::automorphisms() const { return bijective_members(endos); }

GroupHom boxplus(const GroupHom& a1, const GroupHom& a2) {
  require_same_group(a1, a2);
  const auto& g = *a1.source;
  GroupHom out{a1.source, a1.target, std::vector<Elem>(g.order())};
  for (Elem x = 0; x < g.order(); ++x) out.map[x] = g.mul(g.mul(a1(x), g.inv(x)), a2(x));
  return out;
}

GroupHom boxtimes(const GroupHom& a2, const GroupHom& a1) {
  require_same_group(a1, a2);
  const auto& g = *a1.source;
  GroupHom out{a1.source, a1.target, std::vector<Elem>(g.order())};
  for (Elem x = 0; x < g.order(); ++x) {
    Elem v = g.mul(a2(a1(x)), g.inv(a1(x)));
    v = g.mul(g.mul(v, x), g.inv(a2(x)));
    out.map[x] = g.mul(v, x);
  }
  return out;
}

GroupHom boxplus_negate(const GroupHom& a) {
  const auto& g = *a.source;
  GroupHom out{a.source, a.target, std::vector<Elem>(g.order())};
  for (Elem x = 0; x < g.order(); ++x) out.map[x] = g.mul(g.mul(x, g.inv(a(x))), x);
  return out;
}

GroupHom rho(const AbelianExtension& ext, const GroupHom& alpha) {
  GroupHom beta{ext.N, ext.N, {}};
  for (Elem n = 0; n < ext.N->order(); ++n) {
    const Elem image = alpha(ext.i(n));
    if (!ext.in_n(image)) throw Error("endomorphism does not normalize N");
    beta.map.push_back(ext.to_n(image));
  }
  return beta;
}

GroupHom res(const AbelianExtension& ext, const GroupHom& alpha) {
  GroupHom beta = rho(ext, alpha);
  for (Elem n = 0; n < ext.N->order(); ++n) beta.map[n] = ext.N->mul(beta.map[n], ext.N->inv(n));
  return beta;
}

EndoQN enumerate_endo_qn(const AbelianExtension& ext) {
  EndoQN e;
  e.ext = ext;
  e.cocycles = enumerate_z1(ext.g_action);
  const auto& g = *ext.G;
  for (const auto& psi : e.cocycles) {
    GroupHom alpha{ext.G, ext.G, std::vector<Elem>(g.order())};
    for (Elem x = 0; x < g.order(); ++x) alpha.map[x] = g.mul(ext.i(psi(x)), x);
    // Independent re-validation of the defining properties.
    alpha.validate();
    for (Elem n = 0; n < ext.N->order(); ++n)
      if (!ext.in_n(alpha(ext.i(n)))) throw Error("internal: alpha does not normalize N");
    for (Elem x = 0; x < g.order(); ++x)
      if (ext.p(alpha(x)) != ext.p(x)) throw Error("internal: alpha does not induce the identity on Q");
    bool fixes_n = true;
    for (Elem n = 0; n < ext.N->order() && fixes_n; ++n) fixes_n = alpha(ext.i(n)) == ext.i(n);
    const Elem k = static_cast<Elem>(e.endos.size());
    if (fixes_n) e.ideal.push_back(k);
    e.index.emplace(alpha.map, k);
    e.endos.push_back(std::move(alpha));
  }
  if (static_cast<int>(e.index.size()) != e.size()) throw Error("internal: cocycle-to-endomorphism map is not injective");

  // Members are homomorphisms, so [+] and [x] are evaluated pointwise on
  // the generators of G and looked up by generator images.
  const auto& gens = g.generators();
  std::map<std::vector<Elem>, Elem> by_gens;
  for (Elem a = 0; a < e.size(); ++a) {
    std::vector<Elem> key;
    for (Elem x : gens) key.push_back(e.endos[a](x));
    by_gens.emplace(std::move(key), a);
  }
  if (static_cast<int>(by_gens.size()) != e.size()) throw Error("internal: members agree on the generators");

  const int k = e.size();
  std::vector<Elem> add(static_cast<std::size_t>(k) * k), mul(static_cast<std::size_t>(k) * k);
  std::vector<Elem> s_key(gens.size()), t_key(gens.size());
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      const auto& u = e.endos[a];
      const auto& w = e.endos[b];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const Elem x = gens[j];
        const Elem wx = w(x);
        s_key[j] = g.mul(g.mul(u(x), g.inv(x)), wx);
        t_key[j] = g.mul(g.mul(g.mul(g.mul(u(wx), g.inv(wx)), x), g.inv(u(x))), x);
      }
      const auto s = by_gens.find(s_key);
      const auto t = by_gens.find(t_key);
      if (s == by_gens.end() || t == by_gens.end()) throw Error("internal: End^Q_N(G) not closed under [+] or [x]");
      add[static_cast<std::size_t>(a) * k + b] = s->second;
      mul[static_cast<std::size_t>(a) * k + b] = t->second;
    }
  e.ring = std::make_shared<FiniteRing>(FiniteRing::unchecked(k, std::move(add), std::move(mul)));
  return e;
}

ModuleEndos module_endomorphisms(const AbelianExtension& ext) {
  ModuleEndos m;
  for (auto& h : all_homs(ext.N, ext.N)) {
    bool equivariant = true;
    for (Elem q = 0; q < ext.Q->order() && equivariant; ++q)
      for (Elem n = 0; n < ext.N->order() && equivariant; ++n)
        equivariant = h((*ext.action)(q, n)) == (*ext.action)(q, h(n));
    if (equivariant) m.maps.push_back(std::move(h));
  }
  std::sort(m.maps.begin(), m.maps.end(), [](const GroupHom& a, const GroupHom& b) { return a.map < b.map; });
  const int k = m.size();
  for (int a = 0; a < k; ++a) m.index.emplace(m.maps[a].map, a);
  std::vector<Elem> id(ext.N->order());
  for (Elem n = 0; n < ext.N->order(); ++n) id[n] = n;
  m.identity = m.index_of(id);
  const auto& nn = *ext.N;
  std::vector<Elem> add(static_cast<std::size_t>(k) * k), mul(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      std::vector<Elem> s(nn.order()), c(nn.order());
      for (Elem n = 0; n < nn.order(); ++n) {
        s[n] = nn.mul(m.maps[a](n), m.maps[b](n));
        c[n] = m.maps[a](m.maps[b](n));
      }
      add[static_cast<std::size_t>(a) * k + b] = m.index_of(s);
      mul[static_cast<std::size_t>(a) * k + b] = m.index_of(c);
    }
  m.ring = std::make_shared<FiniteRing>(k, std::move(add), std::move(mul), m.identity);
  return m;
}

IdealReport ideal_check(const EndoQN& endo) {
  IdealReport r;
  r.absorbs = r.square_zero = r.plus_is_composition = true;
  const auto& ring = *endo.ring;
  for (Elem a : endo.ideal) {
    for (Elem x = 0; x < endo.size(); ++x) {
      if (!endo.in_ideal(ring.mul(a, x)) || !endo.in_ideal(ring.mul(x, a))) {
        if (r.absorbs) r.witness = "ideal not absorbing at (" + std::to_string(a) + ", " + std::to_string(x) + ")";
        r.absorbs = false;
      }
    }
    for (Elem b : endo.ideal) {
      if (ring.mul(a, b) != 0) {
        if (r.square_zero && r.witness.empty())
          r.witness = "ideal product nonzero at (" + std::to_string(a) + ", " + std::to_string(b) + ")";
        r.square_zero = false;
      }
      if (endo.index_of(compose(endo.endos[a], endo.endos[b]).map) != ring.add(a, b)) {
        if (r.plus_is_composition && r.witness.empty())
          r.witness = "[+] differs from composition at (" + std::to_string(a) + ", " + std::to_string(b) + ")";
        r.plus_is_composition = false;
      }
    }
  }
  return r;
}

EndoMonoid enumerate_endo_n_g(const AbelianExtension& ext, const CentralizerData& data) {
  EndoMonoid m;
  m.cocycles = enumerate_z1(data.cgn_action);
  const auto& g = *ext.G;
  for (const auto& psi : m.cocycles) {
    GroupHom alpha{ext.G, ext.G, std::vector<Elem>(g.order())};
    for (Elem x = 0; x < g.order(); ++x) alpha.map[x] = g.mul(data.cgn.elements()[psi(ext.p(x))], x);
    alpha.validate();
    for (Elem n = 0; n < ext.N->order(); ++n)
      if (alpha(ext.i(n)) != ext.i(n)) throw Error("internal: End^N(G) member moves N");
    m.index.emplace(alpha.map, static_cast<Elem>(m.endos.size()));
    m.endos.push_back(std::move(alpha));
  }
  if (static_cast<int>(m.index.size()) != m.size()) throw Error("internal: End^N(G) correspondence is not injective");
  return m;
}

EndoMonoid enumerate_endo_n_q(const AbelianExtension& ext, const CentralizerData& data) {
  EndoMonoid m;
  m.cocycles = enumerate_z1(data.qbar_action);
  const auto& q = *ext.Q;
  for (const auto& psi : m.cocycles) {
    GroupHom phi{ext.Q, ext.Q, std::vector<Elem>(q.order())};
    for (Elem x = 0; x < q.order(); ++x) phi.map[x] = q.mul(data.qbar.elements()[psi(x)], x);
    phi.validate();
    for (Elem x = 0; x < q.order(); ++x)
      for (Elem n = 0; n < ext.N->order(); ++n)
        if ((*ext.action)(x, n) != (*ext.action)(phi(x), n)) throw Error("internal: End^N(Q) member changes the action");
    m.index.emplace(phi.map, static_cast<Elem>(m.endos.size()));
    m.endos.push_back(std::move(phi));
  }
  if (static_cast<int>(m.index.size()) != m.size()) throw Error("internal: End^N(Q) correspondence is not injective");
  return m;
}

GroupHom rho_bar(const AbelianExtension& ext, const GroupHom& alpha) {
  GroupHom out{ext.Q, ext.Q, std::vector<Elem>(ext.Q->order())};
  for (Elem x = 0; x < ext.G->order(); ++x) {
    const Elem image = ext.p(alpha(x));
    if (x == ext.section[ext.p(x)]) out.map[ext.p(x)] = image;
  }
  // Well defined: alpha maps each fiber of p into a single fiber.
  for (Elem x = 0; x < ext.G->order(); ++x)
    if (ext.p(alpha(x)) != out.map[ext.p(x)]) throw Error("endomorphism does not preserve the fibers of p");
  return out;
}

std::vector<Elem> bijective_members(const std::vector<GroupHom>& endos) {
  std::vector<Elem> out;
  for (Elem k = 0; k < static_cast<Elem>(endos.size()); ++k)
    if (endos[k].is_injective()) out.push_back(k);
  return out;
}

}  // namespace cohomoring

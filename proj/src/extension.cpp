#include "cohomoring/extension.hpp"

#include <algorithm>

namespace cohomoring {

Elem AbelianExtension::to_n(Elem g) const {
  const Elem n = n_index[g];
  if (n < 0) throw Error("element is not in the image of N");
  return n;
}

AbelianExtension build_extension(GroupHom i, GroupHom p) {
  if (i.target != p.source && (i.target->order() != p.source->order() || i.target->table() != p.source->table()))
    throw Error("i and p do not share the middle group");
  i.validate();
  p.validate();
  if (!i.is_injective()) throw Error("i is not injective");
  if (!p.is_surjective()) throw Error("p is not surjective");
  if (!i.source->is_abelian()) throw Error("N is not abelian");

  AbelianExtension ext;
  ext.N = i.source;
  ext.G = i.target;
  ext.Q = p.target;
  const auto& g = *ext.G;

  ext.n_index.assign(g.order(), -1);
  for (Elem n = 0; n < ext.N->order(); ++n) ext.n_index[i(n)] = n;
  for (Elem x = 0; x < g.order(); ++x)
    if ((p(x) == 0) != (ext.n_index[x] >= 0)) throw Error("sequence is not exact at G (image of i differs from kernel of p)");

  ext.section.assign(ext.Q->order(), -1);
  for (Elem x = 0; x < g.order(); ++x)
    if (ext.section[p(x)] < 0) ext.section[p(x)] = x;

  std::vector<Elem> g_act, q_act;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem n = 0; n < ext.N->order(); ++n) g_act.push_back(ext.n_index[g.conj(x, i(n))]);
  for (Elem q = 0; q < ext.Q->order(); ++q)
    for (Elem n = 0; n < ext.N->order(); ++n) q_act.push_back(ext.n_index[g.conj(ext.section[q], i(n))]);
  ext.g_action = make_action(ext.G, ext.N, std::move(g_act));
  ext.action = make_action(ext.Q, ext.N, std::move(q_act));
  // The conjugation action of G factors through p.
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem n = 0; n < ext.N->order(); ++n)
      if ((*ext.g_action)(x, n) != (*ext.action)(p(x), n))
        throw Error("internal: conjugation action does not factor through Q");
  ext.i = std::move(i);
  ext.p = std::move(p);
  return ext;
}

AbelianExtension split_extension(const ActionPtr& action) {
  auto sd = make_semidirect_group(*action);
  return build_extension(std::move(sd.inclusion), std::move(sd.projection));
}

TwoCocycle extension_cocycle(const AbelianExtension& ext, std::span<const Elem> u) {
  const auto& g = *ext.G;
  const auto& q = *ext.Q;
  if (static_cast<int>(u.size()) != q.order() || u[0] != 0) throw Error("section must be normalized");
  for (Elem x = 0; x < q.order(); ++x)
    if (ext.p(u[x]) != x) throw Error("section does not split p");
  std::vector<Elem> values(static_cast<std::size_t>(q.order()) * q.order());
  for (Elem x = 0; x < q.order(); ++x)
    for (Elem y = 0; y < q.order(); ++y)
      values[static_cast<std::size_t>(x) * q.order() + y] =
          ext.to_n(g.mul(g.mul(u[x], u[y]), g.inv(u[q.mul(x, y)])));
  return make_two_cocycle(ext.action, std::move(values));
}

TwoCocycle extension_cocycle(const AbelianExtension& ext) { return extension_cocycle(ext, ext.section); }

AbelianExtension extension_from_cocycle(const TwoCocycle& f) {
  make_two_cocycle(f.action, f.values);  // validates
  const auto& action = *f.action;
  const auto& nn = *action.module;
  const auto& qq = *action.actor;
  const int on = nn.order(), oq = qq.order(), order = on * oq;
  std::vector<Elem> table(static_cast<std::size_t>(order) * order);
  for (int e1 = 0; e1 < order; ++e1) {
    const int n1 = e1 % on, q1 = e1 / on;
    for (int e2 = 0; e2 < order; ++e2) {
      const int n2 = e2 % on, q2 = e2 / on;
      const Elem n = nn.mul(nn.mul(n1, action(q1, n2)), f(q1, q2));
      table[static_cast<std::size_t>(e1) * order + e2] = n + on * qq.mul(q1, q2);
    }
  }
  std::vector<Elem> gens;
  for (Elem g : nn.generators())
    if (g != 0) gens.push_back(g);
  for (Elem g : qq.generators())
    if (g != 0) gens.push_back(on * g);
  auto g = std::make_shared<FiniteGroup>(order, std::move(table), std::move(gens));
  GroupHom i{action.module, g, {}}, p{g, action.actor, {}};
  for (int n = 0; n < on; ++n) i.map.push_back(n);
  for (int e = 0; e < order; ++e) p.map.push_back(e / on);
  return build_extension(std::move(i), std::move(p));
}

std::optional<GroupHom> find_equivalence(const AbelianExtension& a, const AbelianExtension& b) {
  if (a.N->table() != b.N->table() || a.Q->table() != b.Q->table()) return std::nullopt;
  if (a.G->order() != b.G->order()) return std::nullopt;
  const auto& gens = a.G->generators();
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const Elem gen = gens[j];
    if (a.in_n(gen)) {
      candidates[j].push_back(b.i(a.to_n(gen)));
    } else {
      for (Elem y = 0; y < b.G->order(); ++y)
        if (b.p(y) == a.p(gen)) candidates[j].push_back(y);
    }
  }
  std::vector<std::size_t> pos(gens.size(), 0);
  std::vector<Elem> images(gens.size());
  while (true) {
    for (std::size_t j = 0; j < gens.size(); ++j) images[j] = candidates[j][pos[j]];
    if (auto h = try_hom_make(a.G, b.G, images)) {
      bool ok = h->is_injective();
      for (Elem n = 0; ok && n < a.N->order(); ++n) ok = (*h)(a.i(n)) == b.i(n);
      for (Elem x = 0; ok && x < a.G->order(); ++x) ok = b.p((*h)(x)) == a.p(x);
      if (ok) return h;
    }
    std::size_t j = gens.size();
    while (true) {
      if (j == 0) return std::nullopt;
      --j;
      if (++pos[j] < candidates[j].size()) break;
      pos[j] = 0;
    }
  }
}

CentralizerData centralizer_extension(const AbelianExtension& ext) {
  const auto& g = *ext.G;
  const auto& q = *ext.Q;
  CentralizerData d;
  d.cgn = centralizer(ext.G, ext.i.map);

  std::vector<Elem> qbar_el;
  for (Elem c : d.cgn.elements()) qbar_el.push_back(ext.p(c));
  d.qbar = subgroup_from_elements(ext.Q, std::move(qbar_el));

  // Qbar = Ker(Q -> Aut N), checked in both directions.
  for (Elem x = 0; x < q.order(); ++x) {
    bool acts_trivially = true;
    for (Elem n = 0; n < ext.N->order() && acts_trivially; ++n) acts_trivially = (*ext.action)(x, n) == n;
    if (acts_trivially != (d.qbar.index_of(x) >= 0))
      throw Error("internal: Qbar differs from the kernel of the action");
  }

  GroupHom ic{ext.N, d.cgn.group, {}};
  for (Elem n = 0; n < ext.N->order(); ++n) ic.map.push_back(d.cgn.index_of(ext.i(n)));
  GroupHom pc{d.cgn.group, d.qbar.group, {}};
  for (Elem c : d.cgn.elements()) pc.map.push_back(d.qbar.index_of(ext.p(c)));
  d.central_ext = build_extension(std::move(ic), std::move(pc));
  if (!d.central_ext.action->is_trivial()) throw Error("internal: N is not central in C_G(N)");

  std::vector<Elem> qa;
  for (Elem x = 0; x < q.order(); ++x)
    for (Elem k : d.qbar.elements()) qa.push_back(d.qbar.index_of(q.conj(x, k)));
  d.qbar_action = make_action(ext.Q, d.qbar.group, std::move(qa));

  const int oc = d.cgn.order();
  std::vector<Elem> ca(static_cast<std::size_t>(q.order()) * oc, -1);
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem c = 0; c < oc; ++c) {
      Elem& slot = ca[static_cast<std::size_t>(ext.p(x)) * oc + c];
      const Elem v = d.cgn.index_of(g.conj(x, d.cgn.elements()[c]));
      if (slot >= 0 && slot != v) throw Error("internal: Q-action on C_G(N) is not well defined");
      slot = v;
    }
  d.cgn_action = make_action(ext.Q, d.cgn.group, std::move(ca));
  return d;
}

}  // namespace cohomoring

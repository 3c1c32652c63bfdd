#include "cohomoring/cocycles.hpp"

#include <algorithm>
#include <cmath>

namespace cohomoring {

namespace {

double pow_count(int base, int exponent) { return std::pow(static_cast<double>(base), exponent); }

// BFS spanning tree over right multiplication by generators: parent[g] = (h, s)
// with g = h s.
struct SpanningTree {
  std::vector<Elem> order;  // BFS order starting at identity
  std::vector<Elem> parent;
  std::vector<int> via;     // generator position
};

SpanningTree spanning_tree(const FiniteGroup& g) {
  SpanningTree t;
  t.parent.assign(g.order(), -1);
  t.via.assign(g.order(), -1);
  std::vector<char> seen(g.order(), 0);
  seen[0] = 1;
  t.order.push_back(0);
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    const Elem h = t.order[head];
    for (std::size_t j = 0; j < g.generators().size(); ++j) {
      const Elem x = g.mul(h, g.generators()[j]);
      if (!seen[x]) {
        seen[x] = 1;
        t.parent[x] = h;
        t.via[x] = static_cast<int>(j);
        t.order.push_back(x);
      }
    }
  }
  return t;
}

std::vector<CrossedHom> enumerate_closure(const ActionPtr& action, const Budget& budget) {
  const auto& g = *action->actor;
  const auto& m = *action->module;
  const auto& gens = g.generators();
  const auto tree = spanning_tree(g);
  std::vector<CrossedHom> out;
  std::vector<Elem> images(gens.size(), 0);
  std::vector<Elem> phi(g.order());
  while (true) {
    bool ok = true;
    phi[0] = 0;
    for (std::size_t k = 1; k < tree.order.size(); ++k) {
      const Elem x = tree.order[k], h = tree.parent[x];
      phi[x] = m.mul(phi[h], (*action)(h, images[tree.via[x]]));
    }
    // Every Cayley edge must satisfy the law; this forces it on all pairs.
    for (Elem x = 0; x < g.order() && ok; ++x)
      for (std::size_t j = 0; j < gens.size() && ok; ++j)
        ok = phi[g.mul(x, gens[j])] == m.mul(phi[x], (*action)(x, images[j]));
    if (ok) {
      if (static_cast<double>(out.size()) >= budget.z1_max_size) throw BudgetExceeded("Z1 larger than z1_max_size");
      out.push_back(CrossedHom{action, phi});
    }
    std::size_t j = gens.size();
    while (true) {
      if (j == 0) return out;
      --j;
      if (++images[j] < m.order()) break;
      images[j] = 0;
    }
  }
}

std::vector<CrossedHom> enumerate_full_scan(const ActionPtr& action, const Budget& budget) {
  const int ng = action->actor->order();
  const int nm = action->module->order();
  std::vector<CrossedHom> out;
  std::vector<Elem> phi(ng, 0);
  while (true) {
    if (!crossed_hom_violation(*action, phi)) {
      if (static_cast<double>(out.size()) >= budget.z1_max_size) throw BudgetExceeded("Z1 larger than z1_max_size");
      out.push_back(CrossedHom{action, phi});
    }
    int j = ng;
    while (true) {
      if (j == 0) return out;
      --j;
      if (++phi[j] < nm) break;
      phi[j] = 0;
    }
  }
}

void require_abelian(const CrossedHom& phi) {
  if (!phi.module().is_abelian()) throw Error("Z1 group structure needs an abelian module");
}

void require_same(const CrossedHom& a, const CrossedHom& b) {
  if (a.action != b.action && (a.action->act != b.action->act || a.domain().table() != b.domain().table() ||
                               a.module().table() != b.module().table()))
    throw Error("crossed homs live over different actions");
}

}  // namespace

std::optional<std::pair<Elem, Elem>> crossed_hom_violation(const ActionTable& action, std::span<const Elem> values) {
  const auto& g = *action.actor;
  const auto& m = *action.module;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (values[g.mul(x, y)] != m.mul(values[x], action(x, values[y]))) return std::make_pair(x, y);
  return std::nullopt;
}

CrossedHom make_crossed_hom(ActionPtr action, std::vector<Elem> values) {
  if (static_cast<int>(values.size()) != action->actor->order()) throw Error("crossed hom has wrong length");
  for (Elem v : values)
    if (v < 0 || v >= action->module->order()) throw Error("crossed hom value out of range");
  if (auto bad = crossed_hom_violation(*action, values))
    throw Error("crossed hom law fails at (" + std::to_string(bad->first) + ", " + std::to_string(bad->second) + ")");
  return CrossedHom{std::move(action), std::move(values)};
}

std::vector<CrossedHom> enumerate_z1(const ActionPtr& action, Z1Strategy strategy) {
  const Budget& budget = Budget::current();
  const int ng = action->actor->order();
  const int nm = action->module->order();
  const double closure_count = pow_count(nm, static_cast<int>(action->actor->generators().size()));
  const double scan_count = pow_count(nm, ng);
  if (strategy == Z1Strategy::Automatic) {
    if (closure_count <= budget.z1_closure)
      strategy = Z1Strategy::Closure;
    else if (scan_count <= budget.z1_full_scan)
      strategy = Z1Strategy::FullScan;
    else
      throw BudgetExceeded("Z1 enumeration exceeds both closure and full-scan budgets");
  }
  std::vector<CrossedHom> out;
  if (strategy == Z1Strategy::Closure) {
    if (closure_count > budget.z1_closure) throw BudgetExceeded("Z1 closure candidates exceed z1_closure");
    out = enumerate_closure(action, budget);
  } else {
    if (scan_count > budget.z1_full_scan) throw BudgetExceeded("Z1 full scan exceeds z1_full_scan");
    out = enumerate_full_scan(action, budget);
  }
  std::sort(out.begin(), out.end(), [](const CrossedHom& a, const CrossedHom& b) { return a.values < b.values; });
  return out;
}

CrossedHom z1_zero(const ActionPtr& action) {
  return CrossedHom{action, std::vector<Elem>(action->actor->order(), 0)};
}

CrossedHom z1_add(const CrossedHom& phi, const CrossedHom& psi) {
  require_abelian(phi);
  require_same(phi, psi);
  CrossedHom out{phi.action, phi.values};
  for (std::size_t x = 0; x < out.values.size(); ++x) out.values[x] = phi.module().mul(phi.values[x], psi.values[x]);
  return out;
}

CrossedHom z1_neg(const CrossedHom& phi) {
  require_abelian(phi);
  CrossedHom out{phi.action, phi.values};
  for (auto& v : out.values) v = phi.module().inv(v);
  return out;
}

CrossedHom z1_diamond(const CrossedHom& phi, const CrossedHom& psi, const GroupHom& i) {
  require_same(phi, psi);
  if (i.source->order() != phi.module().order() || i.target->order() != phi.domain().order())
    throw Error("diamond needs the module embedded in the domain");
  CrossedHom out{phi.action, phi.values};
  for (std::size_t x = 0; x < out.values.size(); ++x) out.values[x] = phi(i(psi.values[x]));
  return out;
}

GroupHom restrict_to_module(const CrossedHom& phi, const AbelianExtension& ext) {
  GroupHom beta{ext.N, ext.N, {}};
  for (Elem n = 0; n < ext.N->order(); ++n) beta.map.push_back(phi(ext.i(n)));
  beta.validate();
  for (Elem q = 0; q < ext.Q->order(); ++q)
    for (Elem n = 0; n < ext.N->order(); ++n)
      if (beta((*ext.action)(q, n)) != (*ext.action)(q, beta(n))) throw Error("restriction is not Q-equivariant");
  return beta;
}

CrossedHom inflate(const CrossedHom& phi, const GroupHom& p, const ActionPtr& g_action) {
  const auto& act = *phi.action;
  if (g_action->module->order() != act.module->order() || g_action->actor->order() != p.source->order())
    throw Error("inflation: incompatible groups");
  for (Elem x = 0; x < p.source->order(); ++x)
    for (Elem n = 0; n < act.module->order(); ++n)
      if ((*g_action)(x, n) != act(p(x), n)) throw Error("inflation: action does not factor through p");
  std::vector<Elem> values(p.source->order());
  for (Elem x = 0; x < p.source->order(); ++x) values[x] = phi(p(x));
  return CrossedHom{g_action, std::move(values)};
}

Elem CocycleRing::index_of(const CrossedHom& phi) const {
  auto it = index.find(phi.values);
  if (it == index.end()) throw Error("not a member of the cocycle ring");
  return it->second;
}

CocycleRing cocycle_ring(const AbelianExtension& ext) {
  CocycleRing cr;
  cr.carrier = enumerate_z1(ext.g_action);
  const int k = static_cast<int>(cr.carrier.size());
  for (int a = 0; a < k; ++a) cr.index.emplace(cr.carrier[a].values, a);
  std::vector<Elem> add(static_cast<std::size_t>(k) * k), mul(static_cast<std::size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      add[static_cast<std::size_t>(a) * k + b] = cr.index_of(z1_add(cr.carrier[a], cr.carrier[b]));
      mul[static_cast<std::size_t>(a) * k + b] = cr.index_of(z1_diamond(cr.carrier[a], cr.carrier[b], ext.i));
    }
  cr.ring = std::make_shared<FiniteRing>(k, std::move(add), std::move(mul));
  return cr;
}

}  // namespace cohomoring

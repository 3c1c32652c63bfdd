#include "cohomoring/group.hpp"

#include <algorithm>
#include <map>
#include <deque>
#include <numeric>
#include <sstream>

namespace cohomoring {

namespace {

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || (a->order() == b->order() && a->table() == b->table());
}

std::vector<Elem> greedy_generators(const FiniteGroup& g) {
  std::vector<Elem> gens;
  std::vector<Elem> span{FiniteGroup::identity()};
  for (Elem a = 1; a < g.order(); ++a) {
    if (std::binary_search(span.begin(), span.end(), a)) continue;
    gens.push_back(a);
    span = g.closure(gens);
    if (static_cast<int>(span.size()) == g.order()) break;
  }
  if (gens.empty()) gens.push_back(FiniteGroup::identity());
  return gens;
}

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<Elem> table, std::vector<Elem> generators,
                         std::vector<std::string> labels)
    : order_(order), table_(std::move(table)), labels_(std::move(labels)) {
  if (order_ < 1) throw Error("group order must be positive");
  const auto n = static_cast<std::size_t>(order_);
  if (table_.size() != n * n) throw Error("multiplication table has wrong size");
  for (Elem v : table_)
    if (v < 0 || v >= order_) throw Error("multiplication table entry out of range");
  for (Elem a = 0; a < order_; ++a)
    if (mul(0, a) != a || mul(a, 0) != a) throw Error("index 0 is not a two-sided identity");

  // Latin square: every row and column is a permutation.
  std::vector<char> seen(n);
  for (Elem a = 0; a < order_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < order_; ++b) {
      if (seen[mul(a, b)]++) throw Error("multiplication table row is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < order_; ++b) {
      if (seen[mul(b, a)]++) throw Error("multiplication table column is not a permutation");
    }
  }

  inverse_.assign(n, -1);
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = 0; b < order_; ++b)
      if (mul(a, b) == 0) inverse_[a] = b;
  for (Elem a = 0; a < order_; ++a)
    if (mul(inverse_[a], a) != 0) throw Error("left and right inverses differ");

  if (n <= Budget::current().group_check_order) {
    for (Elem a = 0; a < order_; ++a)
      for (Elem b = 0; b < order_; ++b) {
        const Elem ab = mul(a, b);
        for (Elem c = 0; c < order_; ++c)
          if (mul(ab, c) != mul(a, mul(b, c))) {
            std::ostringstream msg;
            msg << "multiplication is not associative at (" << a << ", " << b << ", " << c << ")";
            throw Error(msg.str());
          }
      }
  }

  if (!labels_.empty() && labels_.size() != n) throw Error("label count differs from group order");

  if (generators.empty()) {
    generators_ = greedy_generators(*this);
  } else {
    for (Elem g : generators)
      if (g < 0 || g >= order_) throw Error("generator index out of range");
    if (static_cast<int>(closure(generators).size()) != order_)
      throw Error("generators do not generate the group");
    generators_ = std::move(generators);
  }
}

Elem FiniteGroup::power(Elem a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem r = 0;
  for (long long i = 0; i < k % std::max(1, element_order(a)); ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::element_order(Elem a) const {
  int k = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::string FiniteGroup::label(Elem a) const {
  return labels_.empty() ? std::to_string(a) : labels_[a];
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<Elem> FiniteGroup::closure(std::span<const Elem> gens) const {
  std::vector<char> in(order_, 0);
  std::deque<Elem> queue{0};
  in[0] = 1;
  while (!queue.empty()) {
    const Elem g = queue.front();
    queue.pop_front();
    for (Elem s : gens) {
      const Elem h = mul(g, s);
      if (!in[h]) {
        in[h] = 1;
        queue.push_back(h);
      }
    }
  }
  std::vector<Elem> out;
  for (Elem a = 0; a < order_; ++a)
    if (in[a]) out.push_back(a);
  return out;
}

bool GroupHom::is_injective() const {
  std::vector<char> hit(target->order(), 0);
  for (Elem v : map)
    if (hit[v]++) return false;
  return true;
}

bool GroupHom::is_surjective() const {
  std::vector<char> hit(target->order(), 0);
  for (Elem v : map) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

void GroupHom::validate() const {
  if (static_cast<int>(map.size()) != source->order()) throw Error("homomorphism map has wrong length");
  for (Elem v : map)
    if (v < 0 || v >= target->order()) throw Error("homomorphism value out of range");
  for (Elem a = 0; a < source->order(); ++a)
    for (Elem b = 0; b < source->order(); ++b)
      if (map[source->mul(a, b)] != target->mul(map[a], map[b])) {
        std::ostringstream msg;
        msg << "map is not a homomorphism at (" << a << ", " << b << ")";
        throw Error(msg.str());
      }
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  if (!same_group(inner.target, outer.source)) throw Error("compose: incompatible groups");
  GroupHom h{inner.source, outer.target, std::vector<Elem>(inner.map.size())};
  for (std::size_t a = 0; a < inner.map.size(); ++a) h.map[a] = outer.map[inner.map[a]];
  return h;
}

GroupHom identity_hom(const GroupPtr& g) {
  GroupHom h{g, g, std::vector<Elem>(g->order())};
  std::iota(h.map.begin(), h.map.end(), 0);
  return h;
}

Elem Subgroup::index_of(Elem parent_elem) const {
  const auto& el = elements();
  const auto it = std::lower_bound(el.begin(), el.end(), parent_elem);
  return (it != el.end() && *it == parent_elem) ? static_cast<Elem>(it - el.begin()) : -1;
}

void ActionTable::validate() const {
  const int nq = actor->order();
  const int nm = module->order();
  if (static_cast<int>(act.size()) != nq * nm) throw Error("action table has wrong size");
  for (Elem v : act)
    if (v < 0 || v >= nm) throw Error("action table entry out of range");
  for (Elem q = 0; q < nq; ++q) {
    std::vector<char> seen(nm, 0);
    for (Elem m = 0; m < nm; ++m)
      if (seen[(*this)(q, m)]++) throw Error("action of an element is not a bijection");
    for (Elem a = 0; a < nm; ++a)
      for (Elem b = 0; b < nm; ++b)
        if ((*this)(q, module->mul(a, b)) != module->mul((*this)(q, a), (*this)(q, b)))
          throw Error("action of an element is not a homomorphism");
  }
  for (Elem m = 0; m < nm; ++m)
    if ((*this)(0, m) != m) throw Error("identity does not act trivially");
  for (Elem q1 = 0; q1 < nq; ++q1)
    for (Elem q2 = 0; q2 < nq; ++q2)
      for (Elem m = 0; m < nm; ++m)
        if ((*this)(actor->mul(q1, q2), m) != (*this)(q1, (*this)(q2, m)))
          throw Error("action is not compatible with multiplication");
}

bool ActionTable::is_trivial() const {
  for (Elem q = 0; q < actor->order(); ++q)
    for (Elem m = 0; m < module->order(); ++m)
      if ((*this)(q, m) != m) return false;
  return true;
}

ActionPtr make_action(GroupPtr actor, GroupPtr module, std::vector<Elem> act) {
  auto a = std::make_shared<ActionTable>(ActionTable{std::move(actor), std::move(module), std::move(act)});
  a->validate();
  return a;
}

ActionPtr trivial_action(GroupPtr actor, GroupPtr module) {
  std::vector<Elem> act;
  act.reserve(static_cast<std::size_t>(actor->order()) * module->order());
  for (Elem q = 0; q < actor->order(); ++q)
    for (Elem m = 0; m < module->order(); ++m) act.push_back(m);
  return std::make_shared<ActionTable>(ActionTable{std::move(actor), std::move(module), std::move(act)});
}

ActionPtr pullback_action(const ActionTable& action, const GroupHom& h) {
  if (!same_group(h.target, action.actor)) throw Error("pullback_action: hom target is not the actor");
  std::vector<Elem> act;
  for (Elem g = 0; g < h.source->order(); ++g)
    for (Elem m = 0; m < action.module->order(); ++m) act.push_back(action(h(g), m));
  return std::make_shared<ActionTable>(ActionTable{h.source, action.module, std::move(act)});
}

GroupPtr make_cyclic(int n) {
  if (n < 1) throw Error("cyclic group order must be at least 1");
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  return std::make_shared<FiniteGroup>(n, std::move(table), std::vector<Elem>{n > 1 ? 1 : 0},
                                       std::move(labels));
}

GroupPtr make_dihedral(int n) {
  if (n < 3) throw Error("dihedral group needs n >= 3");
  const int order = 2 * n;
  auto index = [n](int b, int a) { return ((b % n) + n) % n + n * a; };
  std::vector<Elem> table(static_cast<std::size_t>(order) * order);
  std::vector<std::string> labels(order);
  for (int e1 = 0; e1 < order; ++e1) {
    const int b1 = e1 % n, a1 = e1 / n;
    std::string lab = b1 == 0 ? "" : (b1 == 1 ? "y" : "y^" + std::to_string(b1));
    if (a1) lab += "x";
    labels[e1] = lab.empty() ? "e" : lab;
    for (int e2 = 0; e2 < order; ++e2) {
      const int b2 = e2 % n, a2 = e2 / n;
      // y^b1 x^a1 y^b2 x^a2 = y^(b1 + (-1)^a1 b2) x^(a1 + a2)
      table[static_cast<std::size_t>(e1) * order + e2] = index(b1 + (a1 ? -b2 : b2), (a1 + a2) % 2);
    }
  }
  return std::make_shared<FiniteGroup>(order, std::move(table), std::vector<Elem>{n, 1}, std::move(labels));
}

SemidirectProduct make_semidirect_group(const ActionTable& action) {
  const auto& nn = *action.module;
  const auto& qq = *action.actor;
  if (!nn.is_abelian()) throw Error("semidirect product requires an abelian normal factor");
  const int order_n = nn.order(), order_q = qq.order();
  const int order = order_n * order_q;
  std::vector<Elem> table(static_cast<std::size_t>(order) * order);
  for (int e1 = 0; e1 < order; ++e1) {
    const int n1 = e1 % order_n, q1 = e1 / order_n;
    for (int e2 = 0; e2 < order; ++e2) {
      const int n2 = e2 % order_n, q2 = e2 / order_n;
      table[static_cast<std::size_t>(e1) * order + e2] = nn.mul(n1, action(q1, n2)) + order_n * qq.mul(q1, q2);
    }
  }
  std::vector<Elem> gens;
  for (Elem g : nn.generators())
    if (g != 0) gens.push_back(g);
  for (Elem g : qq.generators())
    if (g != 0) gens.push_back(order_n * g);
  std::vector<std::string> labels;
  if (!nn.labels().empty() || !qq.labels().empty()) {
    for (int e = 0; e < order; ++e)
      labels.push_back("(" + nn.label(e % order_n) + "," + qq.label(e / order_n) + ")");
  }
  auto g = std::make_shared<FiniteGroup>(order, std::move(table), std::move(gens), std::move(labels));
  SemidirectProduct out{g, {action.module, g, {}}, {g, action.actor, {}}};
  for (int n = 0; n < order_n; ++n) out.inclusion.map.push_back(n);
  for (int e = 0; e < order; ++e) out.projection.map.push_back(e / order_n);
  return out;
}

GroupPtr make_direct_product(const GroupPtr& a, const GroupPtr& b) {
  return make_semidirect_group(*trivial_action(b, a)).group;
}

std::optional<GroupHom> try_hom_make(const GroupPtr& source, const GroupPtr& target,
                                     std::span<const Elem> generator_images) {
  const auto& gens = source->generators();
  if (generator_images.size() != gens.size()) throw Error("need one image per generator");
  std::vector<Elem> map(source->order(), -1);
  map[0] = 0;
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    const Elem g = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Elem h = source->mul(g, gens[j]);
      const Elem v = target->mul(map[g], generator_images[j]);
      if (map[h] < 0) {
        map[h] = v;
        queue.push_back(h);
      } else if (map[h] != v) {
        return std::nullopt;
      }
    }
  }
  // Consistency on every edge (g, g*s) of the Cayley graph implies the
  // homomorphism law, since every element is a positive word in generators.
  return GroupHom{source, target, std::move(map)};
}

GroupHom hom_make(const GroupPtr& source, const GroupPtr& target, std::span<const Elem> generator_images) {
  for (Elem v : generator_images)
    if (v < 0 || v >= target->order()) throw Error("generator image out of range");
  auto h = try_hom_make(source, target, generator_images);
  if (!h) throw Error("generator images do not extend to a homomorphism");
  h->validate();
  return *h;
}

std::vector<GroupHom> all_homs(const GroupPtr& source, const GroupPtr& target) {
  const auto& gens = source->generators();
  std::vector<std::vector<Elem>> candidates(gens.size());
  double total = 1;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const int ord = source->element_order(gens[j]);
    for (Elem t = 0; t < target->order(); ++t)
      if (ord % target->element_order(t) == 0) candidates[j].push_back(t);
    total *= static_cast<double>(candidates[j].size());
  }
  if (total > static_cast<double>(Budget::current().hom_candidates))
    throw BudgetExceeded("all_homs: too many generator-image candidates");

  std::vector<GroupHom> out;
  std::vector<std::size_t> pos(gens.size(), 0);
  std::vector<Elem> images(gens.size());
  while (true) {
    for (std::size_t j = 0; j < gens.size(); ++j) images[j] = candidates[j][pos[j]];
    if (auto h = try_hom_make(source, target, images)) out.push_back(std::move(*h));
    std::size_t j = gens.size();
    while (j > 0) {
      --j;
      if (++pos[j] < candidates[j].size()) break;
      pos[j] = 0;
      if (j == 0) return out;
    }
  }
}

std::optional<GroupHom> find_isomorphism(const GroupPtr& a, const GroupPtr& b) {
  if (a->order() != b->order() || a->is_abelian() != b->is_abelian()) return std::nullopt;
  const auto& gens = a->generators();
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const int ord = a->element_order(gens[j]);
    for (Elem t = 0; t < b->order(); ++t)
      if (b->element_order(t) == ord) candidates[j].push_back(t);
    if (candidates[j].empty()) return std::nullopt;
  }
  std::vector<std::size_t> pos(gens.size(), 0);
  std::vector<Elem> images(gens.size());
  while (true) {
    for (std::size_t j = 0; j < gens.size(); ++j) images[j] = candidates[j][pos[j]];
    if (auto h = try_hom_make(a, b, images); h && h->is_injective()) return h;
    std::size_t j = gens.size();
    while (true) {
      if (j == 0) return std::nullopt;
      --j;
      if (++pos[j] < candidates[j].size()) break;
      pos[j] = 0;
    }
  }
}

AutomorphismGroup automorphism_group(const GroupPtr& g) {
  AutomorphismGroup a;
  for (auto& h : all_homs(g, g))
    if (h.is_injective()) a.maps.push_back(std::move(h));
  std::sort(a.maps.begin(), a.maps.end(), [](const GroupHom& x, const GroupHom& y) { return x.map < y.map; });
  const int k = static_cast<int>(a.maps.size());
  std::map<std::vector<Elem>, Elem> index;
  for (int i = 0; i < k; ++i) index.emplace(a.maps[i].map, i);
  std::vector<Elem> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) table[static_cast<std::size_t>(i) * k + j] = index.at(compose(a.maps[i], a.maps[j]).map);
  a.group = std::make_shared<FiniteGroup>(k, std::move(table));
  return a;
}

std::vector<ActionPtr> all_actions(const GroupPtr& actor, const GroupPtr& module) {
  const auto aut = automorphism_group(module);
  std::vector<std::vector<Elem>> tables;
  for (const auto& h : all_homs(actor, aut.group)) {
    std::vector<Elem> act;
    for (Elem q = 0; q < actor->order(); ++q)
      for (Elem m = 0; m < module->order(); ++m) act.push_back(aut.maps[h(q)](m));
    tables.push_back(std::move(act));
  }
  std::sort(tables.begin(), tables.end());
  std::vector<ActionPtr> out;
  for (auto& t : tables) out.push_back(make_action(actor, module, std::move(t)));
  return out;
}

Subgroup subgroup_from_elements(const GroupPtr& g, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != 0) throw Error("subgroup must contain the identity");
  const int k = static_cast<int>(elements.size());
  std::vector<Elem> local(g->order(), -1);
  for (int i = 0; i < k; ++i) local[elements[i]] = i;
  std::vector<Elem> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const Elem v = local[g->mul(elements[i], elements[j])];
      if (v < 0) throw Error("subset is not closed under multiplication");
      table[static_cast<std::size_t>(i) * k + j] = v;
    }
  std::vector<std::string> labels;
  if (!g->labels().empty())
    for (Elem e : elements) labels.push_back(g->label(e));
  auto sub = std::make_shared<FiniteGroup>(k, std::move(table), std::vector<Elem>{}, std::move(labels));
  return Subgroup{sub, GroupHom{sub, g, std::move(elements)}};
}

Subgroup kernel(const GroupHom& h) {
  std::vector<Elem> el;
  for (Elem a = 0; a < h.source->order(); ++a)
    if (h(a) == 0) el.push_back(a);
  return subgroup_from_elements(h.source, std::move(el));
}

Subgroup image(const GroupHom& h) { return subgroup_from_elements(h.target, h.map); }

bool is_normal(const FiniteGroup& g, std::span<const Elem> subset) {
  std::vector<char> in(g.order(), 0);
  for (Elem s : subset) in[s] = 1;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem s : subset)
      if (!in[g.conj(x, s)]) return false;
  return true;
}

Quotient quotient(const GroupPtr& g, const Subgroup& normal) {
  const auto& nel = normal.elements();
  if (!is_normal(*g, nel)) throw Error("quotient by a subgroup that is not normal");
  const int n = g->order();
  std::vector<Elem> rep(n);
  for (Elem a = 0; a < n; ++a) {
    Elem best = a;
    for (Elem m : nel) best = std::min(best, g->mul(a, m));
    rep[a] = best;
  }
  std::vector<Elem> reps(rep);
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  const int k = static_cast<int>(reps.size());
  std::vector<Elem> coset_of_rep(n, -1);
  for (int i = 0; i < k; ++i) coset_of_rep[reps[i]] = i;
  std::vector<Elem> proj(n);
  for (Elem a = 0; a < n; ++a) proj[a] = coset_of_rep[rep[a]];
  std::vector<Elem> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) table[static_cast<std::size_t>(i) * k + j] = proj[g->mul(reps[i], reps[j])];
  std::vector<std::string> labels;
  if (!g->labels().empty())
    for (Elem r : reps) labels.push_back(g->label(r) + "N");
  auto q = std::make_shared<FiniteGroup>(k, std::move(table), std::vector<Elem>{}, std::move(labels));
  return Quotient{q, GroupHom{g, q, std::move(proj)}};
}

Subgroup centralizer(const GroupPtr& g, std::span<const Elem> subset) {
  std::vector<Elem> el;
  for (Elem x = 0; x < g->order(); ++x) {
    bool commutes = true;
    for (Elem s : subset)
      if (g->mul(x, s) != g->mul(s, x)) {
        commutes = false;
        break;
      }
    if (commutes) el.push_back(x);
  }
  return subgroup_from_elements(g, std::move(el));
}

Subgroup center(const GroupPtr& g) {
  std::vector<Elem> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return centralizer(g, all);
}

ActionPtr conjugation_action(const GroupPtr& g, const Subgroup& normal) {
  if (!normal.group->is_abelian()) throw Error("conjugation_action requires an abelian subgroup");
  if (!is_normal(*g, normal.elements())) throw Error("conjugation_action requires a normal subgroup");
  std::vector<Elem> act;
  for (Elem x = 0; x < g->order(); ++x)
    for (Elem m : normal.elements()) act.push_back(normal.index_of(g->conj(x, m)));
  return make_action(g, normal.group, std::move(act));
}

InducedAction induced_conjugation_action(const GroupPtr& g, const Subgroup& normal) {
  auto on_g = conjugation_action(g, normal);
  Quotient q = quotient(g, normal);
  const int nm = normal.order();
  std::vector<Elem> act(static_cast<std::size_t>(q.group->order()) * nm, -1);
  for (Elem x = 0; x < g->order(); ++x) {
    const Elem c = q.projection(x);
    for (Elem m = 0; m < nm; ++m) {
      Elem& slot = act[static_cast<std::size_t>(c) * nm + m];
      const Elem v = (*on_g)(x, m);
      if (slot >= 0 && slot != v) throw Error("internal: conjugation action depends on coset representative");
      slot = v;
    }
  }
  auto action = make_action(q.group, normal.group, std::move(act));
  return InducedAction{std::move(q), std::move(action)};
}

}  // namespace cohomoring

#include "cohomoring/ring.hpp"

#include <algorithm>

namespace cohomoring {

FiniteRing FiniteRing::unchecked(int order, std::vector<Elem> add, std::vector<Elem> mul, std::optional<Elem> one,
                                 std::vector<std::string> labels) {
  FiniteRing r;
  r.order_ = order;
  r.add_ = std::move(add);
  r.mul_ = std::move(mul);
  r.one_ = one;
  r.labels_ = std::move(labels);
  const auto n = static_cast<std::size_t>(order);
  if (order < 1 || r.add_.size() != n * n || r.mul_.size() != n * n) throw Error("ring tables have wrong size");
  for (Elem v : r.add_)
    if (v < 0 || v >= order) throw Error("ring table entry out of range");
  for (Elem v : r.mul_)
    if (v < 0 || v >= order) throw Error("ring table entry out of range");
  if (!r.labels_.empty() && r.labels_.size() != n) throw Error("label count differs from ring order");
  r.fill_negation();
  return r;
}

FiniteRing::FiniteRing(int order, std::vector<Elem> add, std::vector<Elem> mul, std::optional<Elem> one,
                       std::vector<std::string> labels) {
  *this = unchecked(order, std::move(add), std::move(mul), one, std::move(labels));
  if (auto bad = find_axiom_violation()) {
    throw Error("ring axiom '" + bad->axiom + "' fails at (" + std::to_string(bad->witness[0]) + ", " +
                std::to_string(bad->witness[1]) + ", " + std::to_string(bad->witness[2]) + ")");
  }
}

void FiniteRing::fill_negation() {
  neg_.assign(order_, -1);
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = 0; b < order_; ++b)
      if (add(a, b) == 0) {
        neg_[a] = b;
        break;
      }
}

std::optional<RingAxiomViolation> FiniteRing::find_axiom_violation() const {
  const int n = order_;
  for (Elem a = 0; a < n; ++a) {
    if (add(0, a) != a || add(a, 0) != a) return RingAxiomViolation{"additive identity", {a, 0, 0}};
    if (neg_[a] < 0) return RingAxiomViolation{"additive inverse", {a, 0, 0}};
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (add(a, b) != add(b, a)) return RingAxiomViolation{"additive commutativity", {a, b, 0}};
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab_sum = add(a, b);
      const Elem ab = mul(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (add(ab_sum, c) != add(a, add(b, c))) return RingAxiomViolation{"additive associativity", {a, b, c}};
        if (mul(ab, c) != mul(a, mul(b, c))) return RingAxiomViolation{"multiplicative associativity", {a, b, c}};
        if (mul(a, add(b, c)) != add(ab, mul(a, c))) return RingAxiomViolation{"left distributivity", {a, b, c}};
        if (mul(ab_sum, c) != add(mul(a, c), mul(b, c))) return RingAxiomViolation{"right distributivity", {a, b, c}};
      }
    }
  if (one_) {
    for (Elem a = 0; a < n; ++a)
      if (mul(*one_, a) != a || mul(a, *one_) != a) return RingAxiomViolation{"multiplicative identity", {a, *one_, 0}};
  }
  return std::nullopt;
}

void RingHom::validate() const {
  const auto& s = *source;
  const auto& t = *target;
  if (static_cast<int>(map.size()) != s.order()) throw Error("ring hom map has wrong length");
  for (Elem a = 0; a < s.order(); ++a)
    for (Elem b = 0; b < s.order(); ++b) {
      if (map[s.add(a, b)] != t.add(map[a], map[b])) throw Error("ring map is not additive");
      if (map[s.mul(a, b)] != t.mul(map[a], map[b])) throw Error("ring map is not multiplicative");
    }
}

bool RingHom::is_surjective() const {
  std::vector<char> hit(target->order(), 0);
  for (Elem v : map) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

Elem star(const FiniteRing& r, Elem a, Elem b) { return r.add(r.add(a, b), r.mul(a, b)); }

bool QuasiRegularGroup::contains(Elem r) const { return std::binary_search(members.begin(), members.end(), r); }

QuasiRegularGroup quasi_regular_group(const FiniteRing& r) {
  QuasiRegularGroup qr;
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem b = 0; b < r.order(); ++b)
      if (star(r, a, b) == 0 && star(r, b, a) == 0) {
        qr.members.push_back(a);
        qr.star_inverse.push_back(b);
        break;
      }
  const int k = static_cast<int>(qr.members.size());
  std::vector<Elem> local(r.order(), -1);
  for (int i = 0; i < k; ++i) local[qr.members[i]] = i;
  std::vector<Elem> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const Elem v = local[star(r, qr.members[i], qr.members[j])];
      if (v < 0) throw Error("QR(R) is not closed under *");
      table[static_cast<std::size_t>(i) * k + j] = v;
    }
  std::vector<std::string> labels;
  if (!r.labels().empty())
    for (Elem m : qr.members) labels.push_back(r.label(m));
  // FiniteGroup validates identity, inverses and associativity of *.
  qr.group = std::make_shared<FiniteGroup>(k, std::move(table), std::vector<Elem>{}, std::move(labels));
  return qr;
}

UnitGroup units(const FiniteRing& r) {
  if (!r.one()) throw Error("units of a non-unital ring");
  const Elem one = *r.one();
  UnitGroup u;
  u.members.push_back(one);
  for (Elem a = 0; a < r.order(); ++a) {
    if (a == one) continue;
    for (Elem b = 0; b < r.order(); ++b)
      if (r.mul(a, b) == one && r.mul(b, a) == one) {
        u.members.push_back(a);
        break;
      }
  }
  const int k = static_cast<int>(u.members.size());
  std::vector<Elem> local(r.order(), -1);
  for (int i = 0; i < k; ++i) local[u.members[i]] = i;
  std::vector<Elem> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) table[static_cast<std::size_t>(i) * k + j] = local[r.mul(u.members[i], u.members[j])];
  u.group = std::make_shared<FiniteGroup>(k, std::move(table));
  return u;
}

bool qr_to_units_is_isomorphism(const FiniteRing& r) {
  const auto qr = quasi_regular_group(r);
  const auto u = units(r);
  if (qr.members.size() != u.members.size()) return false;
  const Elem one = *r.one();
  std::vector<Elem> shifted;
  for (Elem a : qr.members) shifted.push_back(r.add(one, a));
  std::vector<Elem> sorted_units = u.members;
  std::sort(sorted_units.begin(), sorted_units.end());
  std::vector<Elem> sorted_shifted = shifted;
  std::sort(sorted_shifted.begin(), sorted_shifted.end());
  if (sorted_units != sorted_shifted) return false;
  // (1 + a)(1 + b) = 1 + a * b
  for (Elem a : qr.members)
    for (Elem b : qr.members)
      if (r.mul(r.add(one, a), r.add(one, b)) != r.add(one, star(r, a, b))) return false;
  return true;
}

bool is_square_zero_ideal(const FiniteRing& r, std::span<const Elem> subset) {
  std::vector<char> in(r.order(), 0);
  for (Elem a : subset) in[a] = 1;
  if (!in[0]) return false;
  for (Elem a : subset) {
    if (!in[r.neg(a)]) return false;
    for (Elem b : subset) {
      if (!in[r.add(a, b)]) return false;
      if (r.mul(a, b) != 0) return false;
    }
    for (Elem x = 0; x < r.order(); ++x)
      if (!in[r.mul(x, a)] || !in[r.mul(a, x)]) return false;
  }
  return true;
}

PropQrReport verify_prop_qr(const RingHom& p, std::span<const Elem> ideal) {
  PropQrReport rep;
  const auto& rr = *p.source;
  const auto& ss = *p.target;
  try {
    p.validate();
  } catch (const Error& e) {
    rep.witness = e.what();
    return rep;
  }
  std::vector<Elem> ker;
  for (Elem a = 0; a < rr.order(); ++a)
    if (p(a) == 0) ker.push_back(a);
  std::vector<Elem> ideal_sorted(ideal.begin(), ideal.end());
  std::sort(ideal_sorted.begin(), ideal_sorted.end());
  rep.ideal = ideal_sorted.size();
  if (!p.is_surjective()) {
    rep.witness = "p is not surjective";
    return rep;
  }
  if (ker != ideal_sorted) {
    rep.witness = "I differs from the kernel of p";
    return rep;
  }
  if (!is_square_zero_ideal(rr, ideal_sorted)) {
    rep.witness = "I is not a square-zero ideal";
    return rep;
  }
  rep.preconditions = true;

  const auto qr_r = quasi_regular_group(rr);
  const auto qr_s = quasi_regular_group(ss);
  rep.qr_r = qr_r.members.size();
  rep.qr_s = qr_s.members.size();

  rep.part1 = true;
  for (Elem a = 0; a < rr.order() && rep.part1; ++a)
    if (qr_s.contains(p(a)) && !qr_r.contains(a)) {
      rep.part1 = false;
      rep.witness = "part (1) fails at r = " + std::to_string(a);
    }

  rep.ideal_in_qr = true;
  for (Elem a : ideal_sorted) {
    if (!qr_r.contains(a)) rep.ideal_in_qr = false;
    for (Elem b : ideal_sorted)
      if (star(rr, a, b) != rr.add(a, b)) rep.ideal_in_qr = false;
  }

  std::vector<Elem> img;
  for (Elem a : qr_r.members) img.push_back(p(a));
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  rep.image_is_qr = img == qr_s.members;

  std::vector<Elem> ker2;
  for (Elem a : qr_r.members)
    if (p(a) == 0) ker2.push_back(a);
  rep.kernel_is_ideal = ker2 == ideal_sorted;
  if (!rep.ok() && rep.witness.empty()) rep.witness = "exactness of 0 -> I -> QR(R) -> QR(S) -> 0 fails";
  return rep;
}

void BimoduleAction::validate() const {
  const auto& r = *ring;
  const auto& s = *module;
  if (!s.is_abelian()) throw Error("bimodule must be an abelian group");
  const int nr = r.order(), ns = s.order();
  if (static_cast<int>(left.size()) != nr * ns || static_cast<int>(right.size()) != nr * ns)
    throw Error("bimodule tables have wrong size");
  for (Elem a = 0; a < nr; ++a)
    for (Elem b = 0; b < nr; ++b)
      for (Elem x = 0; x < ns; ++x) {
        if (l(r.add(a, b), x) != s.mul(l(a, x), l(b, x))) throw Error("left action is not additive in the ring");
        if (rt(x, r.add(a, b)) != s.mul(rt(x, a), rt(x, b))) throw Error("right action is not additive in the ring");
        if (l(r.mul(a, b), x) != l(a, l(b, x))) throw Error("left action is not associative");
        if (rt(x, r.mul(a, b)) != rt(rt(x, a), b)) throw Error("right action is not associative");
        if (rt(l(a, x), b) != l(a, rt(x, b))) throw Error("left and right actions do not commute");
      }
  for (Elem a = 0; a < nr; ++a)
    for (Elem x = 0; x < ns; ++x)
      for (Elem y = 0; y < ns; ++y) {
        if (l(a, s.mul(x, y)) != s.mul(l(a, x), l(a, y))) throw Error("left action is not additive in the module");
        if (rt(s.mul(x, y), a) != s.mul(rt(x, a), rt(y, a))) throw Error("right action is not additive in the module");
      }
}

RingPtr semidirect_ring(const BimoduleAction& action) {
  action.validate();
  const auto& r = *action.ring;
  const auto& s = *action.module;
  const int nr = r.order(), ns = s.order(), n = nr * ns;
  std::vector<Elem> add(static_cast<std::size_t>(n) * n), mul(static_cast<std::size_t>(n) * n);
  for (int e1 = 0; e1 < n; ++e1) {
    const Elem s1 = e1 % ns, r1 = e1 / ns;
    for (int e2 = 0; e2 < n; ++e2) {
      const Elem s2 = e2 % ns, r2 = e2 / ns;
      add[static_cast<std::size_t>(e1) * n + e2] = s.mul(s1, s2) + ns * r.add(r1, r2);
      mul[static_cast<std::size_t>(e1) * n + e2] = s.mul(action.l(r1, s2), action.rt(s1, r2)) + ns * r.mul(r1, r2);
    }
  }
  std::vector<std::string> labels;
  for (int e = 0; e < n; ++e) labels.push_back("(" + s.label(e % ns) + "," + r.label(e / ns) + ")");
  return std::make_shared<FiniteRing>(n, std::move(add), std::move(mul), std::nullopt, std::move(labels));
}

RingPtr make_zn_ring(int n) {
  if (n < 1) throw Error("Z/n needs n >= 1");
  std::vector<Elem> add(static_cast<std::size_t>(n) * n), mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
      mul[static_cast<std::size_t>(a) * n + b] = (a * b) % n;
    }
  return std::make_shared<FiniteRing>(n, std::move(add), std::move(mul), Elem{n == 1 ? 0 : 1});
}

RingPtr make_zero_ring(const GroupPtr& additive) {
  if (!additive->is_abelian()) throw Error("zero ring needs an abelian group");
  const auto n = static_cast<std::size_t>(additive->order());
  return std::make_shared<FiniteRing>(additive->order(), additive->table(), std::vector<Elem>(n * n, 0),
                                      std::nullopt, additive->labels());
}

Subring make_subring(const FiniteRing& parent, std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != 0) throw Error("subring must contain zero");
  const int k = static_cast<int>(members.size());
  std::vector<Elem> local(parent.order(), -1);
  for (int i = 0; i < k; ++i) local[members[i]] = i;
  std::vector<Elem> add(static_cast<std::size_t>(k) * k), mul(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const Elem a = local[parent.add(members[i], members[j])];
      const Elem m = local[parent.mul(members[i], members[j])];
      if (a < 0 || m < 0) throw Error("subset is not closed under the ring operations");
      add[static_cast<std::size_t>(i) * k + j] = a;
      mul[static_cast<std::size_t>(i) * k + j] = m;
    }
  std::optional<Elem> one;
  if (parent.one() && local[*parent.one()] >= 0) one = local[*parent.one()];
  std::vector<std::string> labels;
  if (!parent.labels().empty())
    for (Elem m : members) labels.push_back(parent.label(m));
  auto ring = std::make_shared<FiniteRing>(k, std::move(add), std::move(mul), one, std::move(labels));
  return Subring{std::move(ring), std::move(members)};
}

GroupPtr additive_group(const FiniteRing& r) {
  return std::make_shared<FiniteGroup>(r.order(), r.add_table(), std::vector<Elem>{}, r.labels());
}

}  // namespace cohomoring

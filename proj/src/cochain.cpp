#include "cohomoring/cochain.hpp"

namespace cohomoring {

std::optional<std::array<Elem, 3>> cocycle_violation(const ActionTable& action, std::span<const Elem> values) {
  const auto& q = *action.actor;
  const auto& n = *action.module;
  const int nq = q.order();
  auto f = [&](Elem x, Elem y) { return values[static_cast<std::size_t>(x) * nq + y]; };
  for (Elem x = 0; x < nq; ++x)
    for (Elem y = 0; y < nq; ++y)
      for (Elem z = 0; z < nq; ++z) {
        // x.f(y,z) + f(x,yz) == f(xy,z) + f(x,y)
        const Elem lhs = n.mul(action(x, f(y, z)), f(x, q.mul(y, z)));
        const Elem rhs = n.mul(f(q.mul(x, y), z), f(x, y));
        if (lhs != rhs) return std::array<Elem, 3>{x, y, z};
      }
  return std::nullopt;
}

bool is_normalized(const ActionTable& action, std::span<const Elem> values) {
  const int nq = action.actor->order();
  for (Elem x = 0; x < nq; ++x)
    if (values[x] != 0 || values[static_cast<std::size_t>(x) * nq] != 0) return false;
  return true;
}

TwoCocycle make_two_cocycle(ActionPtr action, std::vector<Elem> values) {
  if (!action->module->is_abelian()) throw Error("2-cocycles need an abelian module");
  const auto nq = static_cast<std::size_t>(action->actor->order());
  if (values.size() != nq * nq) throw Error("2-cocycle has wrong number of values");
  for (Elem v : values)
    if (v < 0 || v >= action->module->order()) throw Error("2-cocycle value out of range");
  if (!is_normalized(*action, values)) throw Error("2-cocycle is not normalized");
  if (auto bad = cocycle_violation(*action, values)) {
    throw Error("2-cocycle identity fails at (" + std::to_string((*bad)[0]) + ", " + std::to_string((*bad)[1]) +
                ", " + std::to_string((*bad)[2]) + ")");
  }
  return TwoCocycle{std::move(action), std::move(values)};
}

TwoCocycle zero_cocycle(ActionPtr action) {
  const auto nq = static_cast<std::size_t>(action->actor->order());
  return TwoCocycle{std::move(action), std::vector<Elem>(nq * nq, 0)};
}

TwoCocycle add(const TwoCocycle& f, const TwoCocycle& g) {
  TwoCocycle h{f.action, f.values};
  for (std::size_t k = 0; k < h.values.size(); ++k) h.values[k] = f.module().mul(f.values[k], g.values[k]);
  return h;
}

TwoCocycle negate(const TwoCocycle& f) {
  TwoCocycle h{f.action, f.values};
  for (auto& v : h.values) v = f.module().inv(v);
  return h;
}

TwoCocycle scale(const TwoCocycle& f, long long k) {
  TwoCocycle h{f.action, f.values};
  for (auto& v : h.values) v = f.module().power(v, k);
  return h;
}

TwoCocycle coboundary(ActionPtr action, std::span<const Elem> c) {
  const auto& q = *action->actor;
  const auto& n = *action->module;
  const int nq = q.order();
  if (static_cast<int>(c.size()) != nq || c[0] != 0) throw Error("coboundary needs a normalized 1-cochain");
  std::vector<Elem> values(static_cast<std::size_t>(nq) * nq);
  for (Elem x = 0; x < nq; ++x)
    for (Elem y = 0; y < nq; ++y)
      values[static_cast<std::size_t>(x) * nq + y] = n.mul(n.mul((*action)(x, c[y]), n.inv(c[q.mul(x, y)])), c[x]);
  return TwoCocycle{std::move(action), std::move(values)};
}

TwoCocycle pushforward(const TwoCocycle& f, const GroupHom& beta) {
  TwoCocycle h{f.action, f.values};
  for (auto& v : h.values) v = beta(v);
  return h;
}

}  // namespace cohomoring

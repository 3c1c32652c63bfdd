#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "cohomoring/group.hpp"

namespace cohomoring {

/// A function Q x Q -> N for a Q-module N, values row-major by (x, y).
struct TwoCocycle {
  ActionPtr action;
  std::vector<Elem> values;

  const FiniteGroup& acting() const { return *action->actor; }
  const FiniteGroup& module() const { return *action->module; }
  Elem operator()(Elem x, Elem y) const {
    return values[static_cast<std::size_t>(x) * action->actor->order() + y];
  }
  bool operator==(const TwoCocycle& other) const { return values == other.values; }
};

/// First triple (x, y, z) violating x.f(y,z) - f(xy,z) + f(x,yz) - f(x,y) = 0.
std::optional<std::array<Elem, 3>> cocycle_violation(const ActionTable& action, std::span<const Elem> values);
bool is_normalized(const ActionTable& action, std::span<const Elem> values);
/// Throws unless `values` is a normalized 2-cocycle.
TwoCocycle make_two_cocycle(ActionPtr action, std::vector<Elem> values);

TwoCocycle zero_cocycle(ActionPtr action);
TwoCocycle add(const TwoCocycle& f, const TwoCocycle& g);
TwoCocycle negate(const TwoCocycle& f);
TwoCocycle scale(const TwoCocycle& f, long long k);
/// (dc)(x, y) = x.c(y) - c(xy) + c(x) for a 1-cochain c with c(e) = 0.
TwoCocycle coboundary(ActionPtr action, std::span<const Elem> one_cochain);
/// Pushforward along a module endomorphism: (x, y) -> beta(f(x, y)).
TwoCocycle pushforward(const TwoCocycle& f, const GroupHom& beta);

}  // namespace cohomoring

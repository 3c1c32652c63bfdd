#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cohomoring/extension.hpp"
#include "cohomoring/group.hpp"
#include "cohomoring/ring.hpp"

namespace cohomoring {

/// phi: G -> M with phi(xy) = phi(x) (x.phi(y)). The module may be nonabelian.
struct CrossedHom {
  ActionPtr action;
  std::vector<Elem> values;

  const FiniteGroup& domain() const { return *action->actor; }
  const FiniteGroup& module() const { return *action->module; }
  Elem operator()(Elem x) const { return values[x]; }
  bool operator==(const CrossedHom& o) const { return values == o.values; }
};

/// First pair (x, y) breaking the crossed-hom law.
std::optional<std::pair<Elem, Elem>> crossed_hom_violation(const ActionTable& action, std::span<const Elem> values);
/// Throws unless `values` is a crossed homomorphism.
CrossedHom make_crossed_hom(ActionPtr action, std::vector<Elem> values);

enum class Z1Strategy { Automatic, Closure, FullScan };

/// All of Z^1(G, M), sorted lexicographically by value array. The zero map
/// comes first.
std::vector<CrossedHom> enumerate_z1(const ActionPtr& action, Z1Strategy strategy = Z1Strategy::Automatic);

CrossedHom z1_zero(const ActionPtr& action);
CrossedHom z1_add(const CrossedHom& phi, const CrossedHom& psi);
CrossedHom z1_neg(const CrossedHom& phi);

/// (phi <> psi)(x) = phi(i(psi(x))) for phi, psi in Z^1(G, N), N inside G via i.
CrossedHom z1_diamond(const CrossedHom& phi, const CrossedHom& psi, const GroupHom& i);

/// phi o i as an endomorphism of N; throws unless additive and Q-equivariant.
GroupHom restrict_to_module(const CrossedHom& phi, const AbelianExtension& ext);

/// phi o p as a crossed hom on G for the action `g_action`, which must be the
/// pullback of phi's action along p.
CrossedHom inflate(const CrossedHom& phi, const GroupHom& p, const ActionPtr& g_action);

/// (Z^1(G, N), +, <>) for an extension, as a table ring. Member 0 is the zero
/// cocycle.
struct CocycleRing {
  std::vector<CrossedHom> carrier;
  RingPtr ring;
  std::map<std::vector<Elem>, Elem> index;

  Elem index_of(const CrossedHom& phi) const;
};
CocycleRing cocycle_ring(const AbelianExtension& ext);

}  // namespace cohomoring

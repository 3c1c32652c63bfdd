#pragma once

#include <optional>
#include <vector>

#include "cohomoring/cochain.hpp"
#include "cohomoring/group.hpp"

namespace cohomoring {

/// A validated abelian extension 0 -> N -i-> G -p-> Q -> 1.
///
/// `action` is the induced Q-module structure on N, `g_action` the
/// conjugation action of G itself on N, and `section` is the normalized
/// set-section u with u(q) = least element index in p^-1(q).
struct AbelianExtension {
  GroupPtr N, G, Q;
  GroupHom i, p;
  ActionPtr action;
  ActionPtr g_action;
  std::vector<Elem> section;
  std::vector<Elem> n_index;  // G element -> N element, or -1 outside i(N)

  /// i^-1(g); throws when g is not in the image of i.
  Elem to_n(Elem g) const;
  bool in_n(Elem g) const { return n_index[g] >= 0; }
};

AbelianExtension build_extension(GroupHom i, GroupHom p);
AbelianExtension split_extension(const ActionPtr& action);

/// f(q1, q2) = i^-1( u(q1) u(q2) u(q1 q2)^-1 ) for the extension's section.
TwoCocycle extension_cocycle(const AbelianExtension& ext);
/// Same, for any normalized section.
TwoCocycle extension_cocycle(const AbelianExtension& ext, std::span<const Elem> section);

/// Group on pairs (n, q), index n + |N| q, with
/// (n1, q1)(n2, q2) = (n1 + q1.n2 + f(q1, q2), q1 q2).
AbelianExtension extension_from_cocycle(const TwoCocycle& f);

/// An isomorphism G_a -> G_b commuting with i and p (identity on N and Q), if any.
std::optional<GroupHom> find_equivalence(const AbelianExtension& a, const AbelianExtension& b);

/// The central extension 0 -> N -> C_G(N) -> Qbar -> 1 with Qbar realized as
/// the subgroup p(C_G(N)) of Q.
struct CentralizerData {
  Subgroup cgn;                 // C_G(N) inside G
  Subgroup qbar;                // Qbar inside Q
  AbelianExtension central_ext;
  ActionPtr qbar_action;        // Q on Qbar by conjugation in Q
  ActionPtr cgn_action;         // Q on C_G(N) by conjugation with section values
};

CentralizerData centralizer_extension(const AbelianExtension& ext);

}  // namespace cohomoring

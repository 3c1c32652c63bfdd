#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cohomoring/common.hpp"

namespace cohomoring {

/// A finite group stored as its full multiplication table.
///
/// Elements are the indices 0..order-1 and index 0 is always the identity.
/// The table is validated on construction: identity row/column, Latin-square
/// property (which yields two-sided inverses), associativity (exhaustively,
/// up to Budget::group_check_order) and that `generators` generate.
class FiniteGroup {
 public:
  /// `table` is row-major, table[a * order + b] = a*b. Empty `generators`
  /// requests a greedy generating set (smallest indices first).
  FiniteGroup(int order, std::vector<Elem> table, std::vector<Elem> generators = {},
              std::vector<std::string> labels = {});

  int order() const { return order_; }
  static constexpr Elem identity() { return 0; }

  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  /// a * b * a^-1
  Elem conj(Elem a, Elem b) const { return mul(mul(a, b), inv(a)); }
  Elem power(Elem a, long long k) const;
  int element_order(Elem a) const;

  const std::vector<Elem>& table() const { return table_; }
  const std::vector<Elem>& inverses() const { return inverse_; }
  const std::vector<Elem>& generators() const { return generators_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Elem a) const;

  bool is_abelian() const;
  /// Subgroup generated by `gens`, as a sorted element list.
  std::vector<Elem> closure(std::span<const Elem> gens) const;

 private:
  int order_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<Elem> generators_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A homomorphism given by its full value array.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> map;

  Elem operator()(Elem a) const { return map[a]; }
  bool is_injective() const;
  bool is_surjective() const;
  /// Throws unless map is a homomorphism on every pair.
  void validate() const;
};

GroupHom compose(const GroupHom& outer, const GroupHom& inner);
GroupHom identity_hom(const GroupPtr& g);

/// A subgroup realized as its own group together with the inclusion. The
/// subgroup's elements are ordered by their index in the parent group.
struct Subgroup {
  GroupPtr group;
  GroupHom embedding;

  const std::vector<Elem>& elements() const { return embedding.map; }
  int order() const { return group->order(); }
  /// Index inside the subgroup of a parent element, or -1.
  Elem index_of(Elem parent_elem) const;
};

struct Quotient {
  GroupPtr group;
  GroupHom projection;
};

/// Action of `actor` on `module` by automorphisms: act[q * |M| + m] = q . m.
/// The module need not be abelian (conjugation on C_G(N) or on Qbar).
struct ActionTable {
  GroupPtr actor;
  GroupPtr module;
  std::vector<Elem> act;

  Elem operator()(Elem q, Elem m) const {
    return act[static_cast<std::size_t>(q) * module->order() + m];
  }
  /// Throws unless every act[q] is an automorphism, act[e] = id and
  /// act[q1 q2] = act[q1] o act[q2].
  void validate() const;
  bool is_trivial() const;
};

using ActionPtr = std::shared_ptr<const ActionTable>;

ActionPtr make_action(GroupPtr actor, GroupPtr module, std::vector<Elem> act);
ActionPtr trivial_action(GroupPtr actor, GroupPtr module);
/// The action of `g` on `module` obtained by precomposing with `h`.
ActionPtr pullback_action(const ActionTable& action, const GroupHom& h);

// Constructors.
GroupPtr make_cyclic(int n);
/// Dihedral group of order 2n. Element y^b x^a has index b + n*a; generators
/// are x (reflection, index n) then y (rotation, index 1).
GroupPtr make_dihedral(int n);
GroupPtr make_direct_product(const GroupPtr& a, const GroupPtr& b);

struct SemidirectProduct {
  GroupPtr group;
  GroupHom inclusion;   // N -> N x| Q
  GroupHom projection;  // N x| Q -> Q
};
/// Pairs (n, q) with index n + |N| q and (n1,q1)(n2,q2) = (n1 + q1.n2, q1 q2).
SemidirectProduct make_semidirect_group(const ActionTable& action);

// Homomorphisms.
GroupHom hom_make(const GroupPtr& source, const GroupPtr& target, std::span<const Elem> generator_images);
std::optional<GroupHom> try_hom_make(const GroupPtr& source, const GroupPtr& target,
                                     std::span<const Elem> generator_images);
/// Every homomorphism source -> target, in lexicographic order of generator images.
std::vector<GroupHom> all_homs(const GroupPtr& source, const GroupPtr& target);
std::optional<GroupHom> find_isomorphism(const GroupPtr& a, const GroupPtr& b);
/// Automorphisms of `g` as a group under composition; element 0 is the
/// identity and the maps are sorted.
struct AutomorphismGroup {
  GroupPtr group;
  std::vector<GroupHom> maps;
};
AutomorphismGroup automorphism_group(const GroupPtr& g);
/// Every action of `actor` on `module` by automorphisms, sorted by table.
std::vector<ActionPtr> all_actions(const GroupPtr& actor, const GroupPtr& module);

// Subgroups and quotients.
Subgroup subgroup_from_elements(const GroupPtr& g, std::vector<Elem> elements);
Subgroup kernel(const GroupHom& h);
Subgroup image(const GroupHom& h);
bool is_normal(const FiniteGroup& g, std::span<const Elem> subset);
Quotient quotient(const GroupPtr& g, const Subgroup& normal);
Subgroup centralizer(const GroupPtr& g, std::span<const Elem> subset);
Subgroup center(const GroupPtr& g);

/// Action of G on an abelian normal subgroup N by conjugation.
ActionPtr conjugation_action(const GroupPtr& g, const Subgroup& normal);

struct InducedAction {
  Quotient quotient;
  ActionPtr action;  // G/N acting on N
};
/// Action of G/N on an abelian normal N, checked independent of coset representatives.
InducedAction induced_conjugation_action(const GroupPtr& g, const Subgroup& normal);

}  // namespace cohomoring

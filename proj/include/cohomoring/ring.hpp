#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cohomoring/group.hpp"

namespace cohomoring {

struct RingAxiomViolation {
  std::string axiom;
  std::array<Elem, 3> witness;
};

/// Associative, not necessarily unital, finite ring given by its addition
/// and multiplication tables. Index 0 is the zero element.
class FiniteRing {
 public:
  /// Validates every ring axiom exhaustively and throws on failure.
  FiniteRing(int order, std::vector<Elem> add, std::vector<Elem> mul, std::optional<Elem> one = std::nullopt,
             std::vector<std::string> labels = {});
  /// Skips validation; used to build deliberately corrupted fixtures.
  static FiniteRing unchecked(int order, std::vector<Elem> add, std::vector<Elem> mul,
                              std::optional<Elem> one = std::nullopt, std::vector<std::string> labels = {});

  int order() const { return order_; }
  static constexpr Elem zero() { return 0; }
  const std::optional<Elem>& one() const { return one_; }
  Elem add(Elem a, Elem b) const { return add_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  const std::vector<Elem>& add_table() const { return add_; }
  const std::vector<Elem>& mul_table() const { return mul_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Elem a) const { return labels_.empty() ? std::to_string(a) : labels_[a]; }

  /// First failing axiom with a witness triple, scanning additive group laws,
  /// associativity of multiplication, both distributive laws and the identity.
  std::optional<RingAxiomViolation> find_axiom_violation() const;

 private:
  FiniteRing() = default;
  void fill_negation();

  int order_ = 0;
  std::vector<Elem> add_, mul_, neg_;
  std::optional<Elem> one_;
  std::vector<std::string> labels_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

struct RingHom {
  RingPtr source;
  RingPtr target;
  std::vector<Elem> map;

  Elem operator()(Elem a) const { return map[a]; }
  /// Throws unless additive and multiplicative.
  void validate() const;
  bool is_surjective() const;
};

/// r * s := r + s + rs.
Elem star(const FiniteRing& r, Elem a, Elem b);

/// QR(R) as a group under *, with 0 as neutral element. `group` indexes the
/// members in increasing order (member 0 is the ring zero).
struct QuasiRegularGroup {
  std::vector<Elem> members;
  std::vector<Elem> star_inverse;  // ring element per member
  GroupPtr group;

  bool contains(Elem r) const;
};
QuasiRegularGroup quasi_regular_group(const FiniteRing& r);

/// Two-sided units; the group lists `one` first.
struct UnitGroup {
  std::vector<Elem> members;
  GroupPtr group;
};
UnitGroup units(const FiniteRing& r);

/// Checks that r -> 1 + r is a group isomorphism QR(R) -> U(R).
bool qr_to_units_is_isomorphism(const FiniteRing& r);

bool is_square_zero_ideal(const FiniteRing& r, std::span<const Elem> subset);

struct PropQrReport {
  bool preconditions = false;  // p surjective ring hom, I = Ker p, I square-zero
  bool part1 = false;          // p(r) in QR(S) implies r in QR(R)
  bool ideal_in_qr = false;    // I inside QR(R), * restricted to I is +
  bool image_is_qr = false;    // p(QR(R)) = QR(S)
  bool kernel_is_ideal = false;
  std::size_t qr_r = 0, qr_s = 0, ideal = 0;
  std::string witness;

  bool ok() const { return preconditions && part1 && ideal_in_qr && image_is_qr && kernel_is_ideal; }
};
/// Verifies that 0 -> I -> QR(R) -> QR(S) -> 0 is exact for a surjective
/// ring hom p: R -> S with square-zero kernel I.
PropQrReport verify_prop_qr(const RingHom& p, std::span<const Elem> ideal);

/// R-R-bimodule structure on an abelian group S.
struct BimoduleAction {
  RingPtr ring;
  GroupPtr module;
  std::vector<Elem> left;   // |R| x |S|: r.s
  std::vector<Elem> right;  // |S| x |R|: s.r

  Elem l(Elem r, Elem s) const { return left[static_cast<std::size_t>(r) * module->order() + s]; }
  Elem rt(Elem s, Elem r) const { return right[static_cast<std::size_t>(s) * ring->order() + r]; }
  void validate() const;
};

/// Ring on S x R (index s + |S| r) with componentwise addition and
/// (s1, r1)(s2, r2) = (r1 s2 + s1 r2, r1 r2).
RingPtr semidirect_ring(const BimoduleAction& action);

RingPtr make_zn_ring(int n);
/// Ring on an abelian group with all products zero.
RingPtr make_zero_ring(const GroupPtr& additive);

struct Subring {
  RingPtr ring;
  std::vector<Elem> embedding;  // sorted parent indices
};
/// Throws unless `members` is closed under +, - and multiplication.
Subring make_subring(const FiniteRing& parent, std::vector<Elem> members);

/// Additive group of a ring, as a FiniteGroup.
GroupPtr additive_group(const FiniteRing& r);

}  // namespace cohomoring

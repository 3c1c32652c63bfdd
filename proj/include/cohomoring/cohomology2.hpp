#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "cohomoring/cochain.hpp"
#include "cohomoring/cocycles.hpp"
#include "cohomoring/extension.hpp"
#include "cohomoring/linalg.hpp"

namespace cohomoring {

/// A class in H^2 written in the invariant-factor basis.
struct H2Class {
  std::vector<std::int64_t> invariant_factors;
  std::vector<std::int64_t> coefficients;

  bool is_zero() const;
  bool operator==(const H2Class& o) const { return coefficients == o.coefficients; }
};

/// H^2(Q, N) for finite Q and finite abelian N, computed by some backend that
/// supplies elementary-divisor coordinates and one representative cocycle
/// per elementary factor.
class H2Group {
 public:
  struct Backend {
    virtual ~Backend() = default;
    virtual const std::vector<PrimePower>& elementary() const = 0;
    /// Throws unless `f` is a normalized cocycle for the backend's action.
    virtual std::vector<std::int64_t> elementary_coords(const TwoCocycle& f) const = 0;
    virtual const std::vector<TwoCocycle>& elementary_reps() const = 0;
  };

  H2Group(ActionPtr action, std::shared_ptr<const Backend> backend);

  const ActionPtr& action() const { return action_; }
  const std::vector<std::int64_t>& invariant_factors() const { return basis_.invariant_factors(); }
  std::int64_t order() const { return basis_.order(); }

  H2Class zero() const;
  H2Class reduce(const TwoCocycle& f) const;
  H2Class add(const H2Class& a, const H2Class& b) const;
  /// Normalized cocycle in the class; the zero class gives the zero cocycle.
  TwoCocycle representative(const H2Class& c) const;
  /// One representative per invariant factor.
  std::vector<TwoCocycle> generator_reps() const;
  /// Every class, in lexicographic coefficient order; throws past `limit`.
  std::vector<H2Class> all_classes(std::int64_t limit = 100000) const;

 private:
  ActionPtr action_;
  std::shared_ptr<const Backend> backend_;
  InvariantBasis basis_;
};

/// Smith normal form over Z/p^K for each prime p dividing |N|.
H2Group h2_linear(const ActionPtr& action);
/// Enumerates normalized cocycles by backtracking and quotients by all
/// coboundaries. Bounded by Budget::h2_brute_nodes.
H2Group h2_bruteforce(const ActionPtr& action);

/// A normalized 1-cochain c with dc = f, or nullopt when f is not a coboundary.
std::optional<std::vector<Elem>> coboundary_witness(const TwoCocycle& f);

/// f o (p x p), a cocycle on G for `g_action` (the pullback of f's action).
TwoCocycle inflate_cocycle(const TwoCocycle& f, const GroupHom& p, const ActionPtr& g_action);
/// p^*: class of the inflation of f, reduced in H^2(G, N).
H2Class inflation_h2(const TwoCocycle& f, const GroupHom& p, const H2Group& h2g);

/// (x, y) -> beta(f_E(x, y)) for a Q-endomorphism beta of N.
TwoCocycle eta_cocycle(const AbelianExtension& ext, const GroupHom& beta);
H2Class transgression_eta(const AbelianExtension& ext, const GroupHom& beta, const H2Group& h2q);

/// Normalized set-lift Qbar -> C_G(N): entry k is a G element in the fiber
/// over the k-th element of Qbar, with the identity over the identity.
std::vector<Elem> default_lift(const AbelianExtension& ext, const CentralizerData& data);
/// Every normalized lift; throws past Budget::lift_checks.
std::vector<std::vector<Elem>> enumerate_lifts(const AbelianExtension& ext, const CentralizerData& data);

/// c(x, y) = s(phi(x)) (x.s(phi(y))) s(phi(xy))^-1 read in N, for phi in
/// Z^1(Q, Qbar) and Q acting on C_G(N) by conjugation with the section.
TwoCocycle connecting_cocycle(const AbelianExtension& ext, const CentralizerData& data, const CrossedHom& phi,
                              const std::vector<Elem>& lift);
H2Class connecting_delta(const AbelianExtension& ext, const CentralizerData& data, const CrossedHom& phi,
                         const H2Group& h2q, const std::optional<std::vector<Elem>>& lift = std::nullopt);

}  // namespace cohomoring

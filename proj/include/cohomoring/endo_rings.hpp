#pragma once

#include <map>
#include <string>
#include <vector>

#include "cohomoring/cocycles.hpp"
#include "cohomoring/extension.hpp"
#include "cohomoring/ring.hpp"

namespace cohomoring {

/// End^Q_N(G) materialized through Z^1(G, N) by alpha(x) = i(psi(x)) x.
/// Member k corresponds to cocycles[k]; member 0 is id_G, the ring zero.
/// `ring` carries the tables add(a, b) = a [+] b and mul(a, b) = a [x] b.
struct EndoQN {
  AbelianExtension ext;
  std::vector<CrossedHom> cocycles;
  std::vector<GroupHom> endos;
  std::vector<Elem> ideal;  // members of End^{N,Q}(G), ascending
  RingPtr ring;
  std::map<std::vector<Elem>, Elem> index;

  int size() const { return static_cast<int>(endos.size()); }
  /// Member index of an endomorphism map, or -1.
  Elem index_of(const std::vector<Elem>& map) const;
  bool in_ideal(Elem k) const;
};

EndoQN enumerate_endo_qn(const AbelianExtension& ext);

/// (a1 [+] a2)(x) = a1(x) x^-1 a2(x)
GroupHom boxplus(const GroupHom& a1, const GroupHom& a2);
/// (a2 [x] a1)(x) = a2(a1(x)) a1(x)^-1 x a2(x)^-1 x
GroupHom boxtimes(const GroupHom& a2, const GroupHom& a1);
/// x -> x a(x)^-1 x, the [+]-inverse.
GroupHom boxplus_negate(const GroupHom& a);

/// beta = alpha restricted to N.
GroupHom rho(const AbelianExtension& ext, const GroupHom& alpha);
/// beta - id_N = psi restricted to N; a ring map into (End_Q(N), +, o).
GroupHom res(const AbelianExtension& ext, const GroupHom& alpha);

/// End_Q(N) under pointwise addition and composition, with identity as one.
/// Maps are sorted, so member 0 is the zero map.
struct ModuleEndos {
  std::vector<GroupHom> maps;
  RingPtr ring;
  std::map<std::vector<Elem>, Elem> index;
  Elem identity = -1;

  int size() const { return static_cast<int>(maps.size()); }
  Elem index_of(const std::vector<Elem>& map) const;
};
ModuleEndos module_endomorphisms(const AbelianExtension& ext);

struct IdealReport {
  bool absorbs = false;              // ideal [x] R and R [x] ideal stay in the ideal
  bool square_zero = false;          // ideal [x] ideal = {id}
  bool plus_is_composition = false;  // a1 [+] a2 = a1 o a2 on the ideal
  std::string witness;

  bool ok() const { return absorbs && square_zero && plus_is_composition; }
};
IdealReport ideal_check(const EndoQN& endo);

/// End^N(G) built from Z^1(Q, C_G(N)) by alpha(x) = psi(p(x)) x, or End^N(Q)
/// built from Z^1(Q, Qbar) by phi(x) = psi(x) x. Member 0 is the identity.
struct EndoMonoid {
  std::vector<CrossedHom> cocycles;
  std::vector<GroupHom> endos;
  std::map<std::vector<Elem>, Elem> index;

  int size() const { return static_cast<int>(endos.size()); }
  Elem index_of(const std::vector<Elem>& map) const;
  /// Members that are bijective.
  std::vector<Elem> automorphisms() const;
};
EndoMonoid enumerate_endo_n_g(const AbelianExtension& ext, const CentralizerData& data);
EndoMonoid enumerate_endo_n_q(const AbelianExtension& ext, const CentralizerData& data);

/// The map induced on Q by alpha in End^N(G): q -> p(alpha(u(q))).
GroupHom rho_bar(const AbelianExtension& ext, const GroupHom& alpha);

/// Bijective members of a list of endomorphisms, as indices.
std::vector<Elem> bijective_members(const std::vector<GroupHom>& endos);

}  // namespace cohomoring

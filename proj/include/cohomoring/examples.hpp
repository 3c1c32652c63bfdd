#pragma once

#include <utility>
#include <vector>

#include "cohomoring/extension.hpp"
#include "cohomoring/ring.hpp"

namespace cohomoring {

/// 0 -> C_n -> D_n -> C_2 -> 1 with C_n the rotations y^b (index b) and
/// p(y^b x^a) = a.
AbelianExtension dihedral_extension(int n);

/// f_{k,l}: x -> x y^k, y -> y^{l+1} on D_n.
GroupHom dihedral_f(const AbelianExtension& dihedral, int k, int l);

/// Z/n x Z/n with (k1, l1)(k2, l2) = (l1 k2, l1 l2); element (k, l) has
/// index k + n l.
RingPtr example1_ring(int n);

/// S x R with S = {(m, n) in (Z/12)^2 : m + n even}, R = 2Z/12, left action
/// t.(m, n) = (tm, tn) and zero right action.
struct Example2Ring {
  GroupPtr s;
  RingPtr r;
  RingPtr ring;
  std::vector<std::pair<int, int>> s_elements;  // (m, n) per S index
  std::vector<int> r_elements;                  // t per R index

  /// Ring index of ((m, n), t); throws when outside S x R.
  Elem index(int m, int n, int t) const;
};
Example2Ring example2_ring();

}  // namespace cohomoring

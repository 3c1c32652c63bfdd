#include "cohomoring/examples.hpp"

#include <algorithm>

namespace cohomoring {

AbelianExtension dihedral_extension(int n) {
  auto d = make_dihedral(n);
  auto cn = make_cyclic(n);
  auto c2 = make_cyclic(2);
  GroupHom i{cn, d, {}}, p{d, c2, {}};
  for (int b = 0; b < n; ++b) i.map.push_back(b);
  for (int e = 0; e < 2 * n; ++e) p.map.push_back(e / n);
  return build_extension(std::move(i), std::move(p));
}

GroupHom dihedral_f(const AbelianExtension& dihedral, int k, int l) {
  const int n = dihedral.N->order();
  const Elem fx = ((n - k % n) % n) + n;  // x y^k = y^-k x
  const Elem fy = ((l + 1) % n + n) % n;
  const Elem images[] = {fx, fy};
  return hom_make(dihedral.G, dihedral.G, images);
}

RingPtr example1_ring(int n) {
  auto zn = make_zn_ring(n);
  BimoduleAction act{zn, make_cyclic(n), {}, {}};
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) act.left.push_back(r * s % n);
  act.right.assign(static_cast<std::size_t>(n) * n, 0);
  return semidirect_ring(act);
}

Elem Example2Ring::index(int m, int n, int t) const {
  m = ((m % 12) + 12) % 12;
  n = ((n % 12) + 12) % 12;
  t = ((t % 12) + 12) % 12;
  auto si = std::find(s_elements.begin(), s_elements.end(), std::make_pair(m, n));
  auto ri = std::find(r_elements.begin(), r_elements.end(), t);
  if (si == s_elements.end() || ri == r_elements.end()) throw Error("element outside S x R");
  return static_cast<Elem>(si - s_elements.begin()) +
         static_cast<Elem>(s_elements.size()) * static_cast<Elem>(ri - r_elements.begin());
}

Example2Ring example2_ring() {
  Example2Ring e;
  for (int m = 0; m < 12; ++m)
    for (int n = 0; n < 12; ++n)
      if ((m + n) % 2 == 0) e.s_elements.emplace_back(m, n);
  const int ns = static_cast<int>(e.s_elements.size());
  auto s_index = [&](int m, int n) {
    auto it = std::find(e.s_elements.begin(), e.s_elements.end(), std::make_pair(m % 12, n % 12));
    return static_cast<Elem>(it - e.s_elements.begin());
  };
  std::vector<Elem> table;
  std::vector<std::string> labels;
  for (const auto& [m1, n1] : e.s_elements) {
    labels.push_back("(" + std::to_string(m1) + "," + std::to_string(n1) + ")");
    for (const auto& [m2, n2] : e.s_elements) table.push_back(s_index(m1 + m2, n1 + n2));
  }
  e.s = std::make_shared<FiniteGroup>(ns, std::move(table), std::vector<Elem>{}, std::move(labels));

  for (int t = 0; t < 12; t += 2) e.r_elements.push_back(t);
  auto z12 = make_zn_ring(12);
  e.r = make_subring(*z12, e.r_elements).ring;

  BimoduleAction act{e.r, e.s, {}, {}};
  for (int t : e.r_elements)
    for (const auto& [m, n] : e.s_elements) act.left.push_back(s_index(t * m, t * n));
  act.right.assign(static_cast<std::size_t>(ns) * e.r_elements.size(), 0);
  e.ring = semidirect_ring(act);
  return e;
}

}  // namespace cohomoring

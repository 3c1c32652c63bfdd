#pragma once

// Brute-force reference computations shared by the unit tests. They use only
// group tables and never call the routines they are compared against.

#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "cohomoring/group.hpp"

namespace oracle {

using cohomoring::Elem;
using cohomoring::FiniteGroup;

inline bool is_hom(const FiniteGroup& s, const FiniteGroup& t, const std::vector<Elem>& m) {
  for (Elem a = 0; a < s.order(); ++a)
    for (Elem b = 0; b < s.order(); ++b)
      if (m[s.mul(a, b)] != t.mul(m[a], m[b])) return false;
  return true;
}

// Every map s -> t that is a homomorphism, by trying all |t|^|s| maps.
inline std::vector<std::vector<Elem>> all_hom_maps(const FiniteGroup& s, const FiniteGroup& t) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> m(s.order(), 0);
  std::function<void(int)> rec = [&](int x) {
    if (x == s.order()) {
      if (is_hom(s, t, m)) out.push_back(m);
      return;
    }
    for (Elem v = 0; v < t.order(); ++v) {
      m[x] = v;
      rec(x + 1);
    }
  };
  rec(0);
  return out;
}

// phi(xy) = phi(x) (x . phi(y)) for every map G -> M.
template <class Act>
std::vector<std::vector<Elem>> all_crossed_homs(const FiniteGroup& g, const FiniteGroup& m, Act act) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> phi(g.order(), 0);
  std::function<void(int)> rec = [&](int x) {
    if (x == g.order()) {
      for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = 0; b < g.order(); ++b)
          if (phi[g.mul(a, b)] != m.mul(phi[a], act(a, phi[b]))) return;
      out.push_back(phi);
      return;
    }
    for (Elem v = 0; v < m.order(); ++v) {
      phi[x] = v;
      rec(x + 1);
    }
  };
  rec(0);
  return out;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// Determinant by cofactor expansion (small matrices only).
inline std::int64_t det(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    d += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return d;
}

// Nonzero invariant factors d_k / d_{k-1} from gcds of k x k minors.
inline std::vector<std::int64_t> invariant_factors_by_minors(const std::vector<std::vector<std::int64_t>>& a) {
  const int rows = static_cast<int>(a.size()), cols = static_cast<int>(a[0].size());
  std::vector<std::int64_t> dk{1};
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    std::int64_t g = 0;
    std::vector<int> rs(k), cs(k);
    std::function<void(int, int)> pick_cols;
    std::function<void(int, int)> pick_rows = [&](int i, int from) {
      if (i == k) {
        pick_cols(0, 0);
        return;
      }
      for (int r = from; r < rows; ++r) {
        rs[i] = r;
        pick_rows(i + 1, r + 1);
      }
    };
    pick_cols = [&](int i, int from) {
      if (i == k) {
        std::vector<std::vector<std::int64_t>> m(k, std::vector<std::int64_t>(k));
        for (int x = 0; x < k; ++x)
          for (int y = 0; y < k; ++y) m[x][y] = a[rs[x]][cs[y]];
        g = gcd64(g, det(m));
        return;
      }
      for (int c = from; c < cols; ++c) {
        cs[i] = c;
        pick_cols(i + 1, c + 1);
      }
    };
    pick_rows(0, 0);
    if (g == 0) break;
    dk.push_back(g);
  }
  std::vector<std::int64_t> out;
  for (std::size_t k = 1; k < dk.size(); ++k) out.push_back(dk[k] / dk[k - 1]);
  return out;
}

}  // namespace oracle

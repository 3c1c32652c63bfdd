#include "cohomoring/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <tuple>

namespace cohomoring {

namespace {

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error("integer overflow in matrix reduction");
  return static_cast<std::int64_t>(v);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

}  // namespace

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked(static_cast<__int128>(r) * base);
  return r;
}

int p_valuation(std::int64_t x, std::int64_t p, int cap) {
  if (x == 0) return cap;
  int v = 0;
  while (x % p == 0 && v < cap) {
    x /= p;
    ++v;
  }
  return v;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = mod(a, m);
  while (a1 != 0) {
    const std::int64_t q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw Error("element is not invertible modulo m");
  return mod(x, m);
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

IntegerDiagonalization diagonalize_integer(IntMatrix a) {
  const int rows = a.rows, cols = a.cols;
  IntMatrix vinv = IntMatrix::identity(cols);

  auto swap_cols = [&](int c1, int c2) {
    if (c1 == c2) return;
    for (int r = 0; r < rows; ++r) std::swap(a.at(r, c1), a.at(r, c2));
    for (int c = 0; c < cols; ++c) std::swap(vinv.at(c1, c), vinv.at(c2, c));
  };
  auto swap_rows = [&](int r1, int r2) {
    if (r1 == r2) return;
    for (int c = 0; c < cols; ++c) std::swap(a.at(r1, c), a.at(r2, c));
  };

  int t = 0;
  for (; t < std::min(rows, cols); ++t) {
    int br = -1, bc = -1;
    std::int64_t best = 0;
    for (int r = t; r < rows; ++r)
      for (int c = t; c < cols; ++c) {
        const std::int64_t x = std::llabs(a.at(r, c));
        if (x != 0 && (best == 0 || x < best)) {
          best = x;
          br = r;
          bc = c;
        }
      }
    if (br < 0) break;
    swap_rows(t, br);
    swap_cols(t, bc);

    while (true) {
      bool clean = true;
      const std::int64_t piv = a.at(t, t);
      for (int i = t + 1; i < rows; ++i) {
        if (a.at(i, t) == 0) continue;
        const std::int64_t q = floor_div(a.at(i, t), piv);
        for (int c = t; c < cols; ++c) a.at(i, c) = checked(a.at(i, c) - static_cast<__int128>(q) * a.at(t, c));
        if (a.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a.at(t, j) == 0) continue;
        const std::int64_t q = floor_div(a.at(t, j), piv);
        for (int r = t; r < rows; ++r) a.at(r, j) = checked(a.at(r, j) - static_cast<__int128>(q) * a.at(r, t));
        for (int c = 0; c < cols; ++c) vinv.at(t, c) = checked(vinv.at(t, c) + static_cast<__int128>(q) * vinv.at(j, c));
        if (a.at(t, j) != 0) clean = false;
      }
      if (clean) break;
      // Move the smallest remaining entry of row t / column t onto the pivot.
      std::int64_t small = std::llabs(a.at(t, t));
      int sr = t, sc = t;
      for (int i = t + 1; i < rows; ++i)
        if (a.at(i, t) != 0 && std::llabs(a.at(i, t)) < small) {
          small = std::llabs(a.at(i, t));
          sr = i;
          sc = t;
        }
      for (int j = t + 1; j < cols; ++j)
        if (a.at(t, j) != 0 && std::llabs(a.at(t, j)) < small) {
          small = std::llabs(a.at(t, j));
          sr = t;
          sc = j;
        }
      swap_rows(t, sr);
      swap_cols(t, sc);
    }
  }

  IntegerDiagonalization out;
  out.diagonal.assign(cols, 0);
  for (int i = 0; i < t; ++i) out.diagonal[i] = std::llabs(a.at(i, i));
  out.v_inverse = std::move(vinv);
  return out;
}

LocalSmith smith_local(IntMatrix a, std::int64_t p, int k, bool track_u, bool track_v) {
  LocalSmith s;
  s.p = p;
  s.k = k;
  s.modulus = ipow(p, k);
  const std::int64_t m = s.modulus;
  if (m >= (std::int64_t{1} << 31)) throw Error("smith_local: modulus too large");
  const int rows = a.rows, cols = a.cols;
  for (auto& x : a.data) x = mod(x, m);
  if (track_u) {
    s.u = IntMatrix::identity(rows);
    s.u_inverse = IntMatrix::identity(rows);
  }
  if (track_v) s.v = IntMatrix::identity(cols);

  int t = 0;
  while (t < rows && t < cols) {
    int best = k, br = -1, bc = -1;
    for (int r = t; r < rows && best > 0; ++r)
      for (int c = t; c < cols; ++c) {
        const std::int64_t x = a.at(r, c);
        if (x == 0) continue;
        const int v = p_valuation(x, p, k);
        if (v < best) {
          best = v;
          br = r;
          bc = c;
          if (v == 0) break;
        }
      }
    if (br < 0) break;

    if (br != t) {
      for (int c = 0; c < cols; ++c) std::swap(a.at(t, c), a.at(br, c));
      if (track_u) {
        for (int c = 0; c < rows; ++c) std::swap(s.u.at(t, c), s.u.at(br, c));
        for (int r = 0; r < rows; ++r) std::swap(s.u_inverse.at(r, t), s.u_inverse.at(r, br));
      }
    }
    if (bc != t) {
      for (int r = 0; r < rows; ++r) std::swap(a.at(r, t), a.at(r, bc));
      if (track_v)
        for (int r = 0; r < cols; ++r) std::swap(s.v.at(r, t), s.v.at(r, bc));
    }

    const std::int64_t pv = ipow(p, best);
    const std::int64_t unit = a.at(t, t) / pv;
    const std::int64_t w = mod_inverse(unit, m);
    for (int c = t; c < cols; ++c) a.at(t, c) = a.at(t, c) * w % m;
    if (track_u) {
      for (int c = 0; c < rows; ++c) s.u.at(t, c) = s.u.at(t, c) * w % m;
      for (int r = 0; r < rows; ++r) s.u_inverse.at(r, t) = s.u_inverse.at(r, t) * unit % m;
    }

    for (int i = t + 1; i < rows; ++i) {
      const std::int64_t x = a.at(i, t);
      if (x == 0) continue;
      const std::int64_t f = x / pv;
      for (int c = t; c < cols; ++c) a.at(i, c) = mod(a.at(i, c) - f * a.at(t, c), m);
      if (track_u) {
        for (int c = 0; c < rows; ++c) s.u.at(i, c) = mod(s.u.at(i, c) - f * s.u.at(t, c), m);
        for (int r = 0; r < rows; ++r) s.u_inverse.at(r, t) = mod(s.u_inverse.at(r, t) + f * s.u_inverse.at(r, i), m);
      }
    }
    for (int j = t + 1; j < cols; ++j) {
      const std::int64_t x = a.at(t, j);
      if (x == 0) continue;
      const std::int64_t f = x / pv;
      a.at(t, j) = 0;
      if (track_v)
        for (int r = 0; r < cols; ++r) s.v.at(r, j) = mod(s.v.at(r, j) - f * s.v.at(r, t), m);
    }
    s.valuation.push_back(best);
    ++t;
  }
  s.rank = t;
  return s;
}

InvariantBasis::InvariantBasis(std::vector<PrimePower> elementary) : elementary_(std::move(elementary)) {
  std::map<std::int64_t, std::vector<int>> by_prime;
  for (int i = 0; i < static_cast<int>(elementary_.size()); ++i) by_prime[elementary_[i].prime].push_back(i);
  std::size_t slots = 0;
  for (auto& [p, idx] : by_prime) {
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return elementary_[a].exponent > elementary_[b].exponent; });
    slots = std::max(slots, idx.size());
  }
  invariant_.assign(slots, 1);
  slot_.assign(elementary_.size(), -1);
  for (const auto& [p, idx] : by_prime)
    for (std::size_t t = 0; t < idx.size(); ++t) {
      const int s = static_cast<int>(slots - 1 - t);
      slot_[idx[t]] = s;
      invariant_[s] *= elementary_[idx[t]].order();
    }
}

std::int64_t InvariantBasis::order() const {
  std::int64_t o = 1;
  for (auto d : invariant_) o *= d;
  return o;
}

std::vector<std::int64_t> InvariantBasis::to_invariant(std::span<const std::int64_t> elementary_coeffs) const {
  std::vector<std::int64_t> value(invariant_.size(), 0), modulus(invariant_.size(), 1);
  for (std::size_t i = 0; i < elementary_.size(); ++i) {
    const int s = slot_[i];
    const std::int64_t mi = elementary_[i].order();
    const std::int64_t a = mod(elementary_coeffs[i], mi);
    const std::int64_t big = modulus[s];
    const std::int64_t x = value[s];
    const std::int64_t t = mod((a - x) % mi * mod_inverse(big % mi, mi), mi);
    value[s] = x + big * t;
    modulus[s] = big * mi;
  }
  return value;
}

std::vector<std::int64_t> InvariantBasis::to_elementary(std::span<const std::int64_t> invariant_coeffs) const {
  std::vector<std::int64_t> out(elementary_.size());
  for (std::size_t i = 0; i < elementary_.size(); ++i)
    out[i] = mod(invariant_coeffs[slot_[i]], elementary_[i].order());
  return out;
}

AbelianDecomposition::AbelianDecomposition(const FiniteGroup& group) {
  if (!group.is_abelian()) throw Error("abelian decomposition of a nonabelian group");
  const int n = group.order();
  std::vector<Elem> gens;
  for (Elem g : group.generators())
    if (g != 0) gens.push_back(g);
  const int k = static_cast<int>(gens.size());

  if (k > 0) {
    // Coefficient vectors along a breadth-first spanning tree of the Cayley graph.
    std::vector<std::vector<std::int64_t>> vec(n);
    vec[0].assign(k, 0);
    std::deque<Elem> queue{0};
    while (!queue.empty()) {
      const Elem x = queue.front();
      queue.pop_front();
      for (int j = 0; j < k; ++j) {
        const Elem y = group.mul(x, gens[j]);
        if (vec[y].empty()) {
          vec[y] = vec[x];
          ++vec[y][j];
          queue.push_back(y);
        }
      }
    }
    std::vector<std::vector<std::int64_t>> relations;
    for (int j = 0; j < k; ++j) {
      std::vector<std::int64_t> r(k, 0);
      r[j] = group.element_order(gens[j]);
      relations.push_back(std::move(r));
    }
    for (Elem x = 0; x < n; ++x)
      for (int j = 0; j < k; ++j) {
        const Elem y = group.mul(x, gens[j]);
        std::vector<std::int64_t> r(k);
        bool zero = true;
        for (int c = 0; c < k; ++c) {
          r[c] = vec[x][c] + (c == j ? 1 : 0) - vec[y][c];
          zero = zero && r[c] == 0;
        }
        if (!zero) relations.push_back(std::move(r));
      }
    IntMatrix rel(static_cast<int>(relations.size()), k);
    for (int r = 0; r < rel.rows; ++r)
      for (int c = 0; c < k; ++c) rel.at(r, c) = relations[r][c];
    const auto diag = diagonalize_integer(std::move(rel));

    std::vector<std::pair<PrimePower, Elem>> parts;
    for (int i = 0; i < k; ++i) {
      const std::int64_t d = diag.diagonal[i];
      if (d == 0) throw Error("internal: relation lattice of a finite group is not of full rank");
      if (d == 1) continue;
      Elem h = 0;
      for (int j = 0; j < k; ++j) h = group.mul(h, group.power(gens[j], diag.v_inverse.at(i, j)));
      for (const auto& [p, e] : factorize(d)) {
        const std::int64_t pe = ipow(p, e);
        parts.push_back({PrimePower{p, e}, group.power(h, d / pe)});
      }
    }
    std::stable_sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
      if (a.first.prime != b.first.prime) return a.first.prime < b.first.prime;
      return a.first.exponent > b.first.exponent;
    });
    for (const auto& [pp, h] : parts) {
      factors_.push_back(pp);
      generators_.push_back(h);
    }
  }

  std::int64_t total = 1;
  for (const auto& f : factors_) total *= f.order();
  if (total != n) throw Error("internal: cyclic decomposition has the wrong order");

  coords_.assign(n, {});
  element_of_.assign(n, -1);
  std::vector<std::int64_t> c(factors_.size(), 0);
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::int64_t rest = idx;
    Elem x = 0;
    for (std::size_t f = factors_.size(); f-- > 0;) {
      c[f] = rest % factors_[f].order();
      rest /= factors_[f].order();
      x = group.mul(x, group.power(generators_[f], c[f]));
    }
    if (!coords_[x].empty() || (factors_.empty() && idx > 0))
      throw Error("internal: cyclic decomposition is not a bijection");
    coords_[x] = c;
    element_of_[idx] = x;
  }
}

Elem AbelianDecomposition::element(std::span<const std::int64_t> coords) const {
  std::int64_t idx = 0;
  for (std::size_t f = 0; f < factors_.size(); ++f) idx = idx * factors_[f].order() + mod(coords[f], factors_[f].order());
  return element_of_[idx];
}

}  // namespace cohomoring

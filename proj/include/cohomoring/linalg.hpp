#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cohomoring/common.hpp"
#include "cohomoring/group.hpp"

namespace cohomoring {

/// Dense row-major integer matrix.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}
  static IntMatrix identity(int n);

  std::int64_t& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  std::int64_t at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

/// Diagonalizes an integer matrix by unimodular row and column operations,
/// U A V = D. Only V^-1 is tracked (the new generators of Z^cols / rowspace).
/// Arithmetic is overflow-checked.
struct IntegerDiagonalization {
  std::vector<std::int64_t> diagonal;  // length cols; entries >= 0
  IntMatrix v_inverse;                 // cols x cols
};
IntegerDiagonalization diagonalize_integer(IntMatrix a);

/// Smith normal form over the chain ring Z/p^k. Pivots are chosen by minimal
/// p-adic valuation, so the diagonal is p^{v_0}, p^{v_1}, ... with
/// v_0 <= v_1 <= ... < k, followed by zeros.
struct LocalSmith {
  std::int64_t p = 0;
  int k = 0;
  std::int64_t modulus = 0;
  int rank = 0;
  std::vector<int> valuation;  // one per pivot
  IntMatrix u, u_inverse;      // rows x rows, when requested
  IntMatrix v;                 // cols x cols, when requested
};
LocalSmith smith_local(IntMatrix a, std::int64_t p, int k, bool track_u, bool track_v);

int p_valuation(std::int64_t x, std::int64_t p, int cap);
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);
std::int64_t ipow(std::int64_t base, int exp);
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

struct PrimePower {
  std::int64_t prime;
  int exponent;
  std::int64_t order() const { return ipow(prime, exponent); }
};

/// Regroups elementary divisors into invariant factors d_0 | d_1 | ... and
/// converts coefficient vectors between the two bases (by CRT).
class InvariantBasis {
 public:
  InvariantBasis() = default;
  explicit InvariantBasis(std::vector<PrimePower> elementary);

  const std::vector<PrimePower>& elementary() const { return elementary_; }
  const std::vector<std::int64_t>& invariant_factors() const { return invariant_; }
  /// Invariant slot each elementary factor is folded into.
  const std::vector<int>& slot() const { return slot_; }
  std::int64_t order() const;

  std::vector<std::int64_t> to_invariant(std::span<const std::int64_t> elementary_coeffs) const;
  std::vector<std::int64_t> to_elementary(std::span<const std::int64_t> invariant_coeffs) const;

 private:
  std::vector<PrimePower> elementary_;
  std::vector<std::int64_t> invariant_;
  std::vector<int> slot_;
};

/// Explicit decomposition of a finite abelian group into cyclic factors of
/// prime-power order, with coordinates for every element.
class AbelianDecomposition {
 public:
  explicit AbelianDecomposition(const FiniteGroup& group);

  const std::vector<PrimePower>& factors() const { return factors_; }
  const std::vector<Elem>& generators() const { return generators_; }
  const std::vector<std::int64_t>& coords(Elem a) const { return coords_[a]; }
  /// Element with the given coordinates (each reduced mod its factor order).
  Elem element(std::span<const std::int64_t> coords) const;
  std::vector<std::int64_t> invariant_factors() const { return InvariantBasis(factors_).invariant_factors(); }

 private:
  std::vector<PrimePower> factors_;
  std::vector<Elem> generators_;
  std::vector<std::vector<std::int64_t>> coords_;
  std::vector<Elem> element_of_;  // mixed-radix index -> element
};

}  // namespace cohomoring

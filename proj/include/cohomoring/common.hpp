#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cohomoring {

/// Elements of every finite structure are dense indices 0..order-1; index 0 is
/// the identity (or zero) throughout the library.
using Elem = int;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Enumeration and checking limits. `Budget::current()` reads the
/// COHOMORING_BUDGET environment variable once, formatted as a comma
/// separated list of `key=value` pairs, e.g. "z1_closure=2e7,h2g_max_order=24".
struct Budget {
  std::uint64_t group_check_order = 512;  // exhaustive associativity check up to this order
  std::uint64_t hom_candidates = 10'000'000;
  std::uint64_t z1_closure = 10'000'000;   // generator-image tuples tried by closure
  std::uint64_t z1_full_scan = 1'000'000;  // |M|^|G| maps tried by the full scan
  std::uint64_t z1_max_size = 100'000;     // cap on |Z^1| for materialized endomorphism sets
  std::uint64_t h2_cells = 20'000'000;     // entries of the dense cocycle-identity matrix over Z/p^K
  std::uint64_t h2_brute_nodes = 50'000'000;
  std::uint64_t h2g_max_order = 16;  // H^2(G,N) in the five-term check only when |G| <= this
  std::uint64_t lift_checks = 10'000;

  static const Budget& current();
  static Budget parse(const std::string& spec);
};

}  // namespace cohomoring

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cohomoring/cohomology2.hpp"
#include "cohomoring/endo_rings.hpp"
#include "cohomoring/extension.hpp"

namespace cohomoring {

enum class CheckStatus { Pass, Fail, NotChecked };
const char* to_string(CheckStatus s);

struct ExactnessCheck {
  std::string position;
  std::int64_t fiber = 0;  // size of the fiber over the base point (or checked set)
  std::int64_t image = 0;  // size of the incoming image
  CheckStatus status = CheckStatus::NotChecked;
  std::string witness;
};

struct ExactnessReport {
  std::string sequence_name;
  std::vector<std::pair<std::string, std::int64_t>> nodes;  // size -1 when not computed
  std::vector<ExactnessCheck> checks;

  bool passed() const;
  const ExactnessCheck* find(const std::string& position) const;
};

/// Everything the verifiers need about one extension, computed once.
struct InstanceData {
  AbelianExtension ext;
  EndoQN endo;
  ModuleEndos module;
  std::vector<Elem> res_index;  // End^Q_N member -> End_Q(N) index of Res
  H2Group h2q;
  std::vector<H2Class> eta;     // per End_Q(N) member
  CentralizerData central;
  EndoMonoid endo_n_g;
  EndoMonoid endo_n_q;
};
std::shared_ptr<const InstanceData> prepare_instance(const AbelianExtension& ext);

ExactnessReport verify_theorem1(const InstanceData& d, bool check_h2g);
ExactnessReport verify_corollary1(const InstanceData& d);
ExactnessReport verify_theorem2(const InstanceData& d);
ExactnessReport verify_corollary2(const InstanceData& d);
/// Ring axioms of (Z^1, +, <>) and (End^Q_N(G), [+], [x]), the bijection
/// between them, * = composition, the ideal, and quasi-regular groups.
/// `fault` = "boxtimes" corrupts one entry of the [x] table first.
ExactnessReport verify_ring_structures(const InstanceData& d, const std::string& fault = "");

struct CatalogEntry {
  std::string name;
  AbelianExtension ext;
  std::string fault;
};

struct VerifyOptions {
  bool check_h2g = true;
};

struct InstanceResult {
  std::string name;
  int order_n = 0, order_g = 0, order_q = 0;
  std::vector<ExactnessReport> reports;
  std::string error;

  bool passed() const;
};

struct SweepSummary {
  std::vector<InstanceResult> instances;

  int passed() const;
  int failed() const;
  bool all_passed() const { return failed() == 0; }
};

InstanceResult verify_instance(const CatalogEntry& entry, const VerifyOptions& options);
SweepSummary sweep(const std::vector<CatalogEntry>& catalog, const VerifyOptions& options);

/// D_3..D_12; every extension class for Q in {C2, C3, C4}, N in {C2, C3} and
/// every action; every extension class of C2 x C2 by C2; three direct products.
std::vector<CatalogEntry> default_catalog();

}  // namespace cohomoring

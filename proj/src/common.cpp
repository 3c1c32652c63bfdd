#include "cohomoring/common.hpp"

#include <cstdlib>
#include <sstream>

namespace cohomoring {

Budget Budget::parse(const std::string& spec) {
  Budget b;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    item = item.substr(first, item.find_last_not_of(" \t") - first + 1);
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("budget entry without '=': " + item);
    const std::string key = item.substr(0, eq);
    // Accept scientific notation such as 1e7.
    double parsed = 0;
    try {
      parsed = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error("bad budget value: " + item);
    }
    if (parsed < 0) throw Error("negative budget value: " + item);
    const auto value = static_cast<std::uint64_t>(parsed);
    if (key == "group_check_order") b.group_check_order = value;
    else if (key == "hom_candidates") b.hom_candidates = value;
    else if (key == "z1_closure") b.z1_closure = value;
    else if (key == "z1_full_scan") b.z1_full_scan = value;
    else if (key == "z1_max_size") b.z1_max_size = value;
    else if (key == "h2_cells") b.h2_cells = value;
    else if (key == "h2_brute_nodes") b.h2_brute_nodes = value;
    else if (key == "h2g_max_order") b.h2g_max_order = value;
    else if (key == "lift_checks") b.lift_checks = value;
    else throw Error("unknown budget key: " + key);
  }
  return b;
}

const Budget& Budget::current() {
  static const Budget budget = [] {
    const char* env = std::getenv("COHOMORING_BUDGET");
    return env ? parse(env) : Budget{};
  }();
  return budget;
}

}  // namespace cohomoring

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "cohomoring/cohomology2.hpp"
#include "cohomoring/endo_rings.hpp"
#include "cohomoring/ring.hpp"
#include "cohomoring/verify.hpp"

namespace cohomoring {

using Json = nlohmann::ordered_json;

Json group_to_json(const FiniteGroup& g);
/// Accepts {"order", "table", "generators"?, "labels"?}, one of the
/// shorthands {"cyclic": n}, {"dihedral": n}, {"product": [a, b]}, or a
/// string naming a group file, resolved against `base`.
GroupPtr group_from_json(const Json& j, const std::filesystem::path& base = {});
Json read_json_file(const std::filesystem::path& path);

Json hom_to_json(const GroupHom& h);
Json action_to_json(const ActionTable& a);
/// "trivial" or an |actor| x |module| array.
ActionPtr action_from_json(const Json& j, const GroupPtr& actor, const GroupPtr& module);

Json extension_to_json(const AbelianExtension& ext);
/// {"N", "G", "Q": group, "i", "p": maps}; validated by build_extension.
AbelianExtension extension_from_json(const Json& j, const std::filesystem::path& base = {});

Json cocycle_to_json(const TwoCocycle& f);
TwoCocycle cocycle_from_json(const Json& j, const ActionPtr& action);
Json crossed_hom_to_json(const CrossedHom& phi);
Json h2_class_to_json(const H2Class& c);
Json h2_group_to_json(const H2Group& h);

Json ring_to_json(const FiniteRing& r);
/// Carrier size, [+]/[x] tables in member indices, ideal members, and the
/// restriction of each member to N.
Json endo_to_json(const EndoQN& endo);
RingPtr ring_from_json(const Json& j);

Json report_to_json(const ExactnessReport& r);
Json instance_to_json(const InstanceResult& r);
Json summary_to_json(const SweepSummary& s);

/// A catalog is an array of entries (or {"entries": [...]}). Each entry has a
/// "name", an optional "fault", and one of: "builtin" ("default", or
/// "dihedral" with "n"), "extension", or a quadruple "Q", "N", "action",
/// "cocycle" (cocycle defaults to zero).
std::vector<CatalogEntry> catalog_from_json(const Json& j, const std::filesystem::path& base = {});
Json catalog_to_json(const std::vector<CatalogEntry>& catalog);

}  // namespace cohomoring

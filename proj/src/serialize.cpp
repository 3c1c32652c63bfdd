#include "cohomoring/serialize.hpp"

#include <fstream>

#include "cohomoring/examples.hpp"

namespace cohomoring {

namespace {

Json square(const std::vector<Elem>& flat, int rows, int cols) {
  Json out = Json::array();
  for (int r = 0; r < rows; ++r) {
    Json row = Json::array();
    for (int c = 0; c < cols; ++c) row.push_back(flat[static_cast<std::size_t>(r) * cols + c]);
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Elem> flatten(const Json& j, int rows, int cols, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) throw Error(std::string(what) + ": wrong number of rows");
  std::vector<Elem> out;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != cols) throw Error(std::string(what) + ": wrong row length");
    for (const auto& v : row) out.push_back(v.get<Elem>());
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field '") + key + "'");
  return j.at(key);
}

GroupHom hom_from_json(const Json& j, const GroupPtr& source, const GroupPtr& target) {
  GroupHom h{source, target, j.get<std::vector<Elem>>()};
  if (static_cast<int>(h.map.size()) != source->order()) throw Error("map has wrong length");
  for (Elem v : h.map)
    if (v < 0 || v >= target->order()) throw Error("map value out of range");
  return h;
}

Json stats_check(const ExactnessCheck& c) {
  Json j;
  j["position"] = c.position;
  j["fiber"] = c.fiber;
  j["image"] = c.image;
  j["status"] = to_string(c.status);
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

}  // namespace

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["order"] = g.order();
  j["table"] = square(g.table(), g.order(), g.order());
  j["generators"] = g.generators();
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

GroupPtr group_from_json(const Json& j, const std::filesystem::path& base) {
  if (j.is_string()) return group_from_json(read_json_file(base / j.get<std::string>()), base);
  try {
    if (j.contains("cyclic")) return make_cyclic(j.at("cyclic").get<int>());
    if (j.contains("dihedral")) return make_dihedral(j.at("dihedral").get<int>());
    if (j.contains("product")) {
      const auto& parts = j.at("product");
      if (!parts.is_array() || parts.size() != 2) throw Error("product needs two groups");
      return make_direct_product(group_from_json(parts[0], base), group_from_json(parts[1], base));
    }
    const int order = field(j, "order").get<int>();
    if (order < 1) throw Error("group order must be positive");
    auto table = flatten(field(j, "table"), order, order, "group table");
    std::vector<Elem> gens;
    if (j.contains("generators")) gens = j.at("generators").get<std::vector<Elem>>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return std::make_shared<FiniteGroup>(order, std::move(table), std::move(gens), std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed group: ") + e.what());
  }
}

Json hom_to_json(const GroupHom& h) { return h.map; }

Json action_to_json(const ActionTable& a) { return square(a.act, a.actor->order(), a.module->order()); }

ActionPtr action_from_json(const Json& j, const GroupPtr& actor, const GroupPtr& module) {
  if (j.is_string()) {
    if (j.get<std::string>() != "trivial") throw Error("unknown action '" + j.get<std::string>() + "'");
    return trivial_action(actor, module);
  }
  return make_action(actor, module, flatten(j, actor->order(), module->order(), "action"));
}

Json extension_to_json(const AbelianExtension& ext) {
  Json j;
  j["N"] = group_to_json(*ext.N);
  j["G"] = group_to_json(*ext.G);
  j["Q"] = group_to_json(*ext.Q);
  j["i"] = hom_to_json(ext.i);
  j["p"] = hom_to_json(ext.p);
  return j;
}

AbelianExtension extension_from_json(const Json& j, const std::filesystem::path& base) {
  try {
    auto n = group_from_json(field(j, "N"), base);
    auto g = group_from_json(field(j, "G"), base);
    auto q = group_from_json(field(j, "Q"), base);
    return build_extension(hom_from_json(field(j, "i"), n, g), hom_from_json(field(j, "p"), g, q));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed extension: ") + e.what());
  }
}

Json cocycle_to_json(const TwoCocycle& f) { return square(f.values, f.acting().order(), f.acting().order()); }

TwoCocycle cocycle_from_json(const Json& j, const ActionPtr& action) {
  const int q = action->actor->order();
  return make_two_cocycle(action, flatten(j, q, q, "cocycle"));
}

Json crossed_hom_to_json(const CrossedHom& phi) { return phi.values; }

Json h2_class_to_json(const H2Class& c) {
  Json j;
  j["invariant_factors"] = c.invariant_factors;
  j["coefficients"] = c.coefficients;
  return j;
}

Json h2_group_to_json(const H2Group& h) {
  Json j;
  j["invariant_factors"] = h.invariant_factors();
  j["order"] = h.order();
  Json reps = Json::array();
  for (const auto& f : h.generator_reps()) reps.push_back(cocycle_to_json(f));
  j["generator_representatives"] = std::move(reps);
  return j;
}

Json ring_to_json(const FiniteRing& r) {
  Json j;
  j["order"] = r.order();
  j["add_table"] = square(r.add_table(), r.order(), r.order());
  j["mul_table"] = square(r.mul_table(), r.order(), r.order());
  if (r.one()) j["one"] = *r.one();
  return j;
}

RingPtr ring_from_json(const Json& j) {
  try {
    const int n = field(j, "order").get<int>();
    std::optional<Elem> one;
    if (j.contains("one")) one = j.at("one").get<Elem>();
    return std::make_shared<FiniteRing>(n, flatten(field(j, "add_table"), n, n, "add_table"),
                                        flatten(field(j, "mul_table"), n, n, "mul_table"), one);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed ring: ") + e.what());
  }
}

Json endo_to_json(const EndoQN& endo) {
  const int k = endo.size();
  Json j;
  j["size"] = k;
  j["boxplus"] = square(endo.ring->add_table(), k, k);
  j["boxtimes"] = square(endo.ring->mul_table(), k, k);
  j["ideal"] = endo.ideal;
  Json restrictions = Json::array();
  for (const auto& a : endo.endos) restrictions.push_back(rho(endo.ext, a).map);
  j["restrictions"] = std::move(restrictions);
  return j;
}

Json report_to_json(const ExactnessReport& r) {
  Json j;
  j["sequence"] = r.sequence_name;
  Json nodes = Json::array();
  for (const auto& [name, size] : r.nodes) {
    Json node;
    node["name"] = name;
    if (size >= 0)
      node["size"] = size;
    else
      node["size"] = nullptr;
    nodes.push_back(std::move(node));
  }
  j["nodes"] = std::move(nodes);
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(stats_check(c));
  j["checks"] = std::move(checks);
  j["passed"] = r.passed();
  return j;
}

Json instance_to_json(const InstanceResult& r) {
  Json j;
  j["name"] = r.name;
  j["orders"] = {{"N", r.order_n}, {"G", r.order_g}, {"Q", r.order_q}};
  j["passed"] = r.passed();
  if (!r.error.empty()) j["error"] = r.error;
  Json reports = Json::array();
  for (const auto& rep : r.reports) reports.push_back(report_to_json(rep));
  j["reports"] = std::move(reports);
  return j;
}

Json summary_to_json(const SweepSummary& s) {
  Json j;
  j["instances"] = static_cast<int>(s.instances.size());
  j["passed"] = s.passed();
  j["failed"] = s.failed();
  Json results = Json::array();
  for (const auto& i : s.instances) results.push_back(instance_to_json(i));
  j["results"] = std::move(results);
  return j;
}

std::vector<CatalogEntry> catalog_from_json(const Json& root, const std::filesystem::path& base) {
  const Json& entries = root.is_object() && root.contains("entries") ? root.at("entries") : root;
  if (!entries.is_array()) throw Error("catalog must be an array of entries");
  std::vector<CatalogEntry> out;
  for (const auto& e : entries) {
    const std::string name = e.is_object() && e.contains("name") && e.at("name").is_string()
                                 ? e.at("name").get<std::string>()
                                 : "#" + std::to_string(out.size());
    try {
      field(e, "name");
      const std::string fault = e.contains("fault") ? e.at("fault").get<std::string>() : "";
      if (!fault.empty() && fault != "boxtimes") throw Error("unknown fault '" + fault + "'");
      if (e.contains("builtin")) {
        const auto kind = e.at("builtin").get<std::string>();
        if (kind == "default") {
          for (auto& d : default_catalog()) {
            d.fault = fault;
            out.push_back(std::move(d));
          }
        } else if (kind == "dihedral") {
          out.push_back({name, dihedral_extension(field(e, "n").get<int>()), fault});
        } else {
          throw Error("unknown builtin '" + kind + "'");
        }
      } else if (e.contains("extension")) {
        out.push_back({name, extension_from_json(e.at("extension"), base), fault});
      } else if (e.contains("Q") && e.contains("N")) {
        auto q = group_from_json(e.at("Q"), base);
        auto n = group_from_json(e.at("N"), base);
        auto action = action_from_json(e.contains("action") ? e.at("action") : Json("trivial"), q, n);
        auto f = e.contains("cocycle") ? cocycle_from_json(e.at("cocycle"), action) : zero_cocycle(action);
        out.push_back({name, extension_from_cocycle(f), fault});
      } else {
        throw Error("no extension data");
      }
    } catch (const nlohmann::json::exception& ex) {
      throw Error("catalog entry '" + name + "': " + ex.what());
    } catch (const Error& ex) {
      throw Error("catalog entry '" + name + "': " + ex.what());
    }
  }
  return out;
}

Json catalog_to_json(const std::vector<CatalogEntry>& catalog) {
  Json out = Json::array();
  for (const auto& e : catalog) {
    Json j;
    j["name"] = e.name;
    if (!e.fault.empty()) j["fault"] = e.fault;
    j["extension"] = extension_to_json(e.ext);
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace cohomoring

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cohomoring/cocycles.hpp"
#include "cohomoring/cohomology2.hpp"
#include "cohomoring/endo_rings.hpp"
#include "cohomoring/examples.hpp"
#include "cohomoring/serialize.hpp"
#include "cohomoring/verify.hpp"

namespace fs = std::filesystem;
using namespace cohomoring;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

using Row = std::vector<std::string>;

void print_table(std::ostream& out, const Row& header, const std::vector<Row>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  auto measure = [&](const Row& r) {
    for (std::size_t c = 0; c < r.size() && c < width.size(); ++c) width[c] = std::max(width[c], r[c].size());
  };
  measure(header);
  for (const auto& r : rows) measure(r);
  auto emit = [&](const Row& r) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  };
  emit(header);
  Row rule;
  for (auto w : width) rule.push_back(std::string(w, '-'));
  emit(rule);
  for (const auto& r : rows) emit(r);
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep = " ") {
  std::ostringstream s;
  for (std::size_t k = 0; k < v.size(); ++k) s << (k ? sep : "") << v[k];
  return s.str();
}

std::string class_text(const H2Class& c) {
  if (c.invariant_factors.empty()) return "0 (trivial group)";
  std::ostringstream s;
  s << "(" << join(c.coefficients, ", ") << ") in ";
  for (std::size_t k = 0; k < c.invariant_factors.size(); ++k) s << (k ? " + " : "") << "Z/" << c.invariant_factors[k];
  return s.str();
}

std::string group_text(const std::vector<std::int64_t>& factors) {
  if (factors.empty()) return "0";
  std::vector<std::string> parts;
  for (auto f : factors) parts.push_back("Z/" + std::to_string(f));
  return join(parts, " + ");
}

void print_square(std::ostream& out, const std::string& corner, const std::vector<std::string>& labels,
                  const std::vector<Elem>& table, const std::vector<Elem>& order) {
  Row header{corner};
  for (Elem b : order) header.push_back(labels[b]);
  std::vector<Row> rows;
  const std::size_t n = labels.size();
  for (Elem a : order) {
    Row r{labels[a]};
    for (Elem b : order) r.push_back(labels[table[a * n + b]]);
    rows.push_back(std::move(r));
  }
  print_table(out, header, rows);
}

void print_report(std::ostream& out, const ExactnessReport& r) {
  out << r.sequence_name << '\n';
  std::vector<std::string> nodes;
  for (const auto& [name, size] : r.nodes) nodes.push_back(name + "=" + (size >= 0 ? std::to_string(size) : "?"));
  out << "  sizes: " << join(nodes, ", ") << '\n';
  std::vector<Row> rows;
  for (const auto& c : r.checks)
    rows.push_back({"  " + c.position, std::to_string(c.fiber), std::to_string(c.image), to_string(c.status),
                    c.witness});
  print_table(out, {"  check", "fiber", "image", "status", "witness"}, rows);
  out << "  result: " << (r.passed() ? "pass" : "FAIL") << "\n\n";
}

void emit_json(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw Error("cannot write " + out_path);
  f << j.dump(2) << '\n';
}

// Source of an extension shared by several verbs.
struct ExtensionSource {
  int dihedral = 0;
  std::string input;

  void attach(CLI::App* cmd) {
    cmd->add_option("--dihedral", dihedral, "Use 0 -> C_n -> D_n -> C_2 -> 1")->check(CLI::Range(3, 64));
    cmd->add_option("--input", input,
                    "Extension JSON {N,G,Q,i,p} or quadruple {Q,N,action,cocycle}; groups may name files");
  }

  AbelianExtension load() const {
    if (dihedral && !input.empty()) throw Error("give either --dihedral or --input");
    if (dihedral) return dihedral_extension(dihedral);
    if (input.empty()) throw Error("an extension is required (--dihedral or --input)");
    const auto j = read_json_file(input);
    const auto base = fs::path(input).parent_path();
    if (j.contains("G")) return extension_from_json(j, base);
    Json entry = j;
    entry["name"] = "input";
    const auto cat = catalog_from_json(Json::array({entry}), base);
    return cat.front().ext;
  }
};

GroupPtr load_group(int cyclic, int dihedral, const std::string& input) {
  if ((cyclic > 0) + (dihedral > 0) + !input.empty() != 1) throw Error("give exactly one of --cyclic, --dihedral, --input");
  if (cyclic) return make_cyclic(cyclic);
  if (dihedral) return make_dihedral(dihedral);
  return group_from_json(read_json_file(input), fs::path(input).parent_path());
}

int cmd_group(const GroupPtr& g, bool json, bool table, const std::string& out_path) {
  if (json) {
    emit_json(group_to_json(*g), out_path);
    return 0;
  }
  const auto z = center(g);
  std::cout << "order: " << g->order() << '\n'
            << "abelian: " << (g->is_abelian() ? "yes" : "no") << '\n'
            << "generators: " << join(g->generators()) << '\n'
            << "center order: " << z.order() << '\n';
  std::vector<Row> rows;
  for (Elem a = 0; a < g->order(); ++a)
    rows.push_back({std::to_string(a), g->label(a), std::to_string(g->element_order(a)), std::to_string(g->inv(a))});
  print_table(std::cout, {"element", "label", "order", "inverse"}, rows);
  if (table) {
    std::vector<std::string> labels;
    std::vector<Elem> all;
    for (Elem a = 0; a < g->order(); ++a) {
      labels.push_back(std::to_string(a));
      all.push_back(a);
    }
    std::cout << '\n';
    print_square(std::cout, "*", labels, g->table(), all);
  }
  return 0;
}

int cmd_extension(const AbelianExtension& ext, bool json, const std::string& out_path) {
  const auto f = extension_cocycle(ext);
  const auto h2 = h2_linear(ext.action);
  const auto cls = h2.reduce(f);
  const bool split = coboundary_witness(f).has_value();
  if (json) {
    Json j = extension_to_json(ext);
    j["action"] = action_to_json(*ext.action);
    j["section"] = ext.section;
    j["cocycle"] = cocycle_to_json(f);
    j["h2"] = h2_class_to_json(cls);
    j["split"] = split;
    emit_json(j, out_path);
    return 0;
  }
  std::cout << "|N| = " << ext.N->order() << ", |G| = " << ext.G->order() << ", |Q| = " << ext.Q->order() << '\n'
            << "i: " << join(ext.i.map) << '\n'
            << "p: " << join(ext.p.map) << '\n'
            << "section u: " << join(ext.section) << '\n'
            << "action of Q on N (row q lists q.n):\n";
  for (Elem q = 0; q < ext.Q->order(); ++q) {
    std::vector<Elem> row;
    for (Elem n = 0; n < ext.N->order(); ++n) row.push_back((*ext.action)(q, n));
    std::cout << "  " << q << ": " << join(row) << '\n';
  }
  std::cout << "cocycle f(q1, q2) (row q1):\n";
  for (Elem a = 0; a < ext.Q->order(); ++a) {
    std::vector<Elem> row;
    for (Elem b = 0; b < ext.Q->order(); ++b) row.push_back(f(a, b));
    std::cout << "  " << a << ": " << join(row) << '\n';
  }
  std::cout << "H^2(Q,N) = " << group_text(h2.invariant_factors()) << '\n'
            << "class: " << class_text(cls) << '\n'
            << "split: " << (split ? "yes" : "no") << '\n';
  return 0;
}

int cmd_z1(const AbelianExtension& ext, const std::string& over, const std::string& strategy, bool json,
           const std::string& out_path) {
  const ActionPtr action = over == "Q" ? ext.action : ext.g_action;
  Z1Strategy s = Z1Strategy::Automatic;
  if (strategy == "closure") s = Z1Strategy::Closure;
  if (strategy == "scan") s = Z1Strategy::FullScan;
  const auto z1 = enumerate_z1(action, s);
  if (json) {
    Json j;
    j["domain"] = over;
    j["size"] = z1.size();
    Json values = Json::array();
    for (const auto& phi : z1) values.push_back(crossed_hom_to_json(phi));
    j["cocycles"] = std::move(values);
    emit_json(j, out_path);
    return 0;
  }
  std::cout << "|Z^1(" << over << ",N)| = " << z1.size() << '\n';
  std::vector<Row> rows;
  for (std::size_t k = 0; k < z1.size(); ++k) rows.push_back({std::to_string(k), join(z1[k].values)});
  print_table(std::cout, {"#", "values by element"}, rows);
  return 0;
}

int cmd_h2(const AbelianExtension& ext, const std::string& method, bool json, const std::string& out_path) {
  const auto f = extension_cocycle(ext);
  std::vector<std::pair<std::string, H2Group>> groups;
  if (method == "linear" || method == "both") groups.emplace_back("linear", h2_linear(ext.action));
  if (method == "brute" || method == "both") groups.emplace_back("brute", h2_bruteforce(ext.action));
  const bool agree = groups.size() < 2 || groups[0].second.invariant_factors() == groups[1].second.invariant_factors();
  if (json) {
    Json j;
    for (const auto& [name, h] : groups) {
      Json g = h2_group_to_json(h);
      g["extension_class"] = h2_class_to_json(h.reduce(f));
      j[name] = std::move(g);
    }
    if (groups.size() == 2) j["agree"] = agree;
    emit_json(j, out_path);
    return agree ? 0 : kExitFail;
  }
  for (const auto& [name, h] : groups)
    std::cout << name << ": H^2(Q,N) = " << group_text(h.invariant_factors()) << ", order " << h.order()
              << ", extension class " << class_text(h.reduce(f)) << '\n';
  if (groups.size() == 2) std::cout << "backends agree: " << (agree ? "yes" : "NO") << '\n';
  return agree ? 0 : kExitFail;
}

std::vector<std::string> member_labels(int k) {
  std::vector<std::string> out;
  for (int a = 0; a < k; ++a) out.push_back("a" + std::to_string(a));
  return out;
}

int cmd_endo(const AbelianExtension& ext, bool tables, bool json, const std::string& out_path) {
  const auto endo = enumerate_endo_qn(ext);
  const auto module = module_endomorphisms(ext);
  const auto ideal = ideal_check(endo);
  if (json) {
    Json j = endo_to_json(endo);
    j["module_endomorphisms"] = module.size();
    j["ideal_ok"] = ideal.ok();
    emit_json(j, out_path);
    return ideal.ok() ? 0 : kExitFail;
  }
  std::cout << "|End^Q_N(G)| = " << endo.size() << '\n'
            << "|End^{N,Q}(G)| = " << endo.ideal.size() << ", members: " << join(endo.ideal) << '\n'
            << "|End_Q(N)| = " << module.size() << '\n'
            << "ideal absorbs: " << (ideal.absorbs ? "yes" : "no")
            << ", square-zero: " << (ideal.square_zero ? "yes" : "no")
            << ", [+] is composition on it: " << (ideal.plus_is_composition ? "yes" : "no") << '\n';
  if (!ideal.witness.empty()) std::cout << "witness: " << ideal.witness << '\n';
  std::vector<Row> rows;
  for (int k = 0; k < endo.size(); ++k)
    rows.push_back({"a" + std::to_string(k), join(endo.endos[k].map), join(rho(ext, endo.endos[k]).map)});
  print_table(std::cout, {"member", "map on G", "restriction to N"}, rows);
  if (tables || endo.size() <= 16) {
    std::vector<Elem> all(endo.size());
    for (int k = 0; k < endo.size(); ++k) all[k] = k;
    const auto labels = member_labels(endo.size());
    std::cout << "\n[+] table:\n";
    print_square(std::cout, "[+]", labels, endo.ring->add_table(), all);
    std::cout << "\n[x] table:\n";
    print_square(std::cout, "[x]", labels, endo.ring->mul_table(), all);
  }
  return ideal.ok() ? 0 : kExitFail;
}

std::vector<Elem> parse_members(const std::string& s) {
  std::vector<Elem> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ','))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

int cmd_ring(const RingPtr& r, const std::string& ideal_text, bool json, const std::string& out_path) {
  const auto qr = quasi_regular_group(*r);
  std::optional<UnitGroup> u;
  bool iso = true;
  if (r->one()) {
    u = units(*r);
    iso = qr_to_units_is_isomorphism(*r);
  }
  std::optional<bool> square_zero;
  if (!ideal_text.empty()) square_zero = is_square_zero_ideal(*r, parse_members(ideal_text));
  const bool ok = iso && square_zero.value_or(true);
  if (json) {
    Json j = ring_to_json(*r);
    j["quasi_regular"] = qr.members;
    j["star_inverse"] = qr.star_inverse;
    if (u) {
      j["units"] = u->members;
      j["qr_to_units_isomorphism"] = iso;
    }
    if (square_zero) j["square_zero_ideal"] = *square_zero;
    emit_json(j, out_path);
    return ok ? 0 : kExitFail;
  }
  std::cout << "order: " << r->order() << '\n'
            << "unital: " << (r->one() ? "yes (one = " + std::to_string(*r->one()) + ")" : std::string("no")) << '\n'
            << "|QR(R)| = " << qr.members.size() << ": " << join(qr.members) << '\n';
  if (u)
    std::cout << "|U(R)| = " << u->members.size() << ": " << join(u->members) << '\n'
              << "r -> 1 + r is an isomorphism QR(R) -> U(R): " << (iso ? "yes" : "NO") << '\n';
  if (square_zero) std::cout << "square-zero ideal: " << (*square_zero ? "yes" : "no") << '\n';
  return ok ? 0 : kExitFail;
}

std::string slug(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      out += c;
    else if (!out.empty() && out.back() != '_')
      out += '_';
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

std::string first_failure(const InstanceResult& r) {
  if (!r.error.empty()) return "error: " + r.error;
  for (const auto& rep : r.reports)
    for (const auto& c : rep.checks)
      if (c.status == CheckStatus::Fail) return c.position + (c.witness.empty() ? "" : ": " + c.witness);
  return "";
}

int cmd_verify(const std::string& catalog_path, bool skip_h2g, bool json, bool verbose, const std::string& out_dir,
               const std::string& write_default) {
  if (!write_default.empty()) {
    std::ofstream f(write_default);
    if (!f) throw Error("cannot write " + write_default);
    f << Json{{"entries", catalog_to_json(default_catalog())}}.dump(1) << '\n';
    return 0;
  }
  const auto catalog = catalog_path.empty()
                           ? default_catalog()
                           : catalog_from_json(read_json_file(catalog_path), fs::path(catalog_path).parent_path());
  VerifyOptions options;
  options.check_h2g = !skip_h2g;
  const auto summary = sweep(catalog, options);

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    for (std::size_t k = 0; k < summary.instances.size(); ++k) {
      std::ostringstream name;
      name << std::setw(3) << std::setfill('0') << k << '_' << slug(summary.instances[k].name) << ".json";
      std::ofstream f(fs::path(out_dir) / name.str());
      f << instance_to_json(summary.instances[k]).dump(2) << '\n';
    }
    std::ofstream f(fs::path(out_dir) / "summary.json");
    f << summary_to_json(summary).dump(2) << '\n';
  }

  if (json) {
    std::cout << summary_to_json(summary).dump(2) << '\n';
  } else {
    std::vector<Row> rows;
    for (std::size_t k = 0; k < summary.instances.size(); ++k) {
      const auto& r = summary.instances[k];
      int skipped = 0;
      for (const auto& rep : r.reports)
        for (const auto& c : rep.checks) skipped += c.status == CheckStatus::NotChecked;
      rows.push_back({std::to_string(k), r.name, std::to_string(r.order_n), std::to_string(r.order_g),
                      std::to_string(r.order_q), r.passed() ? "pass" : "FAIL", std::to_string(skipped),
                      first_failure(r)});
    }
    print_table(std::cout, {"#", "instance", "|N|", "|G|", "|Q|", "result", "not checked", "first failure"}, rows);
    std::cout << "\npassed " << summary.passed() << " of " << summary.instances.size() << '\n';
    if (verbose)
      for (const auto& r : summary.instances) {
        std::cout << "\n== " << r.name << " ==\n";
        for (const auto& rep : r.reports) print_report(std::cout, rep);
      }
  }
  return summary.all_passed() ? 0 : kExitFail;
}

std::string f_label(int n, Elem idx) { return "f(" + std::to_string(idx % n) + "," + std::to_string(idx / n) + ")"; }

int cmd_dihedral(int n, bool tables, bool skip_h2g, bool json, const std::string& out_path) {
  if (n < 3 || n > 64) throw Error("n must lie in 3..64");
  const auto ext = dihedral_extension(n);
  const auto d = prepare_instance(ext);
  const auto& endo = d->endo;
  if (endo.size() != n * n) throw Error("unexpected size of End^Q_N(G)");

  // member_of[k + n l] = member index of f_{k,l}
  std::vector<Elem> member_of(n * n);
  for (int l = 0; l < n; ++l)
    for (int k = 0; k < n; ++k) {
      const Elem m = endo.index_of(dihedral_f(ext, k, l).map);
      if (m < 0) throw Error("f_{k,l} is not a member of End^Q_N(G)");
      member_of[k + n * l] = m;
    }
  std::vector<Elem> label_of(n * n);
  for (int a = 0; a < n * n; ++a) label_of[member_of[a]] = a;

  std::vector<Elem> plus(n * n * n * n), times(n * n * n * n);
  bool plus_ok = true, times_ok = true;
  std::string witness;
  for (int a = 0; a < n * n; ++a)
    for (int b = 0; b < n * n; ++b) {
      const int k = a % n, l = a / n, p = b % n, q = b / n;
      const Elem s = label_of[endo.ring->add(member_of[a], member_of[b])];
      const Elem t = label_of[endo.ring->mul(member_of[a], member_of[b])];
      plus[a * n * n + b] = s;
      times[a * n * n + b] = t;
      if (s != (k + p) % n + n * ((l + q) % n) && plus_ok) {
        plus_ok = false;
        witness = f_label(n, a) + " [+] " + f_label(n, b);
      }
      if (t != (l * p) % n + n * ((l * q) % n) && times_ok) {
        times_ok = false;
        witness = f_label(n, a) + " [x] " + f_label(n, b);
      }
    }
  std::vector<Elem> ideal_labels;
  for (Elem m : endo.ideal) ideal_labels.push_back(label_of[m]);
  std::sort(ideal_labels.begin(), ideal_labels.end());
  std::vector<Elem> expected_ideal(n);
  for (int k = 0; k < n; ++k) expected_ideal[k] = k;
  const bool ideal_ok = ideal_labels == expected_ideal;
  bool ideal_zero = true;
  for (int k = 0; k < n; ++k)
    for (int p = 0; p < n; ++p) ideal_zero = ideal_zero && times[k * n * n + p] == 0;
  const bool module_ok = d->module.size() == n;

  const auto t1 = verify_theorem1(*d, !skip_h2g);
  const auto c1 = verify_corollary1(*d);
  const bool ok = plus_ok && times_ok && ideal_ok && ideal_zero && module_ok && t1.passed() && c1.passed();
  const bool show_tables = tables || n <= 6;

  if (json) {
    Json j;
    j["n"] = n;
    j["module_endomorphisms"] = d->module.size();
    j["ideal"] = ideal_labels;
    j["ring_order"] = endo.size();
    j["formulas"] = {{"boxplus", plus_ok}, {"boxtimes", times_ok}, {"ideal_square_zero", ideal_zero}};
    if (!witness.empty()) j["witness"] = witness;
    if (show_tables) {
      Json pt = Json::array(), tt = Json::array();
      for (int a = 0; a < n * n; ++a) {
        pt.push_back(std::vector<Elem>(plus.begin() + a * n * n, plus.begin() + (a + 1) * n * n));
        tt.push_back(std::vector<Elem>(times.begin() + a * n * n, times.begin() + (a + 1) * n * n));
      }
      j["boxplus"] = std::move(pt);
      j["boxtimes"] = std::move(tt);
    }
    j["reports"] = Json::array({report_to_json(t1), report_to_json(c1)});
    j["passed"] = ok;
    emit_json(j, out_path);
    return ok ? 0 : kExitFail;
  }

  std::cout << "0 -> C_" << n << " -> D_" << n << " -> C_2 -> 1; f(k,l): x -> x y^k, y -> y^(l+1)\n"
            << "End_{C2}(C" << n << "): " << d->module.size() << " maps y -> y^m, ring Z/" << n
            << (module_ok ? "" : " (UNEXPECTED SIZE)") << '\n'
            << "End^{C2,C" << n << "}(D" << n << "): " << ideal_labels.size() << " members f(k,0)"
            << (ideal_ok ? "" : " (UNEXPECTED MEMBERS)") << ", ring Z/" << n << '\n'
            << "End^{C2}_{C" << n << "}(D" << n << "): " << endo.size() << " members f(k,l), ring Z/" << n << " x| Z/"
            << n << '\n'
            << "f(k,l) [+] f(p,q) = f(k+p,l+q) on all pairs: " << (plus_ok ? "yes" : "NO") << '\n'
            << "f(k,l) [x] f(p,q) = f(lp,lq) on all pairs: " << (times_ok ? "yes" : "NO") << '\n'
            << "f(k,0) [x] f(p,0) = f(0,0) on all pairs: " << (ideal_zero ? "yes" : "NO") << '\n';
  if (!witness.empty()) std::cout << "witness: " << witness << '\n';
  if (show_tables) {
    std::vector<std::string> labels;
    std::vector<Elem> all;
    for (int a = 0; a < n * n; ++a) {
      labels.push_back(f_label(n, a));
      all.push_back(a);
    }
    std::cout << "\n[+] table:\n";
    print_square(std::cout, "[+]", labels, plus, all);
    std::cout << "\n[x] table:\n";
    print_square(std::cout, "[x]", labels, times, all);
  }
  std::cout << '\n';
  print_report(std::cout, t1);
  print_report(std::cout, c1);
  std::cout << "result: " << (ok ? "pass" : "FAIL") << '\n';
  return ok ? 0 : kExitFail;
}

int cmd_ring2(bool json, const std::string& out_path) {
  const auto ex = example2_ring();
  const auto& r = *ex.ring;
  const auto violation = r.find_axiom_violation();
  const int s_size = static_cast<int>(ex.s_elements.size());
  std::vector<Elem> ideal(s_size);
  for (int k = 0; k < s_size; ++k) ideal[k] = k;
  const bool square_zero = is_square_zero_ideal(r, ideal);

  bool plus_ok = true, times_ok = true;
  std::string witness;
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem b = 0; b < r.order(); ++b) {
      const auto [k, l] = ex.s_elements[a % s_size];
      const int s = ex.r_elements[a / s_size];
      const auto [m, n] = ex.s_elements[b % s_size];
      const int t = ex.r_elements[b / s_size];
      if (plus_ok && r.add(a, b) != ex.index(k + m, l + n, s + t)) {
        plus_ok = false;
        witness = "boxplus at " + std::to_string(a) + "," + std::to_string(b);
      }
      if (times_ok && r.mul(a, b) != ex.index(s * m, s * n, s * t)) {
        times_ok = false;
        witness = "boxtimes at " + std::to_string(a) + "," + std::to_string(b);
      }
    }

  RingHom proj{ex.ring, ex.r, std::vector<Elem>(r.order())};
  for (Elem a = 0; a < r.order(); ++a) proj.map[a] = a / s_size;
  proj.validate();
  const auto qr = verify_prop_qr(proj, ideal);
  const bool ok = !violation && square_zero && plus_ok && times_ok && qr.ok();

  if (json) {
    Json j;
    j["order"] = r.order();
    j["s_order"] = s_size;
    j["r_order"] = ex.r->order();
    j["ring_axioms"] = !violation;
    if (violation) j["axiom_witness"] = {violation->axiom, violation->witness};
    j["s_square_zero"] = square_zero;
    j["formulas"] = {{"boxplus", plus_ok}, {"boxtimes", times_ok}};
    if (!witness.empty()) j["witness"] = witness;
    j["quasi_regular"] = {{"exact", qr.ok()}, {"qr_ring", qr.qr_r}, {"qr_quotient", qr.qr_s}, {"ideal", qr.ideal}};
    j["passed"] = ok;
    emit_json(j, out_path);
    return ok ? 0 : kExitFail;
  }
  std::cout << "S = {(m,n) in (Z/12)^2 : m+n even}, |S| = " << s_size << "; R = 2Z/12, |R| = " << ex.r->order()
            << '\n'
            << "S x| R with t.(m,n) = (tm,tn) and zero right action: order " << r.order() << '\n'
            << "ring axioms: " << (violation ? "FAIL (" + violation->axiom + ")" : std::string("pass")) << '\n'
            << "S x {0} square-zero: " << (square_zero ? "yes" : "no") << '\n'
            << "f((k,l),s) [+] f((m,n),t) = f((k+m,l+n),s+t) on all pairs: " << (plus_ok ? "yes" : "NO") << '\n'
            << "f((k,l),s) [x] f((m,n),t) = f((sm,sn),st) on all pairs: " << (times_ok ? "yes" : "NO") << '\n';
  if (!witness.empty()) std::cout << "witness: " << witness << '\n';
  std::cout << "0 -> S -> QR(S x| R) -> QR(R) -> 0 exact: " << (qr.ok() ? "yes" : "NO") << " (|S| = " << qr.ideal
            << ", |QR(S x| R)| = " << qr.qr_r << ", |QR(R)| = " << qr.qr_s << ")\n";
  if (!qr.witness.empty()) std::cout << "witness: " << qr.witness << '\n';
  std::cout << "result: " << (ok ? "pass" : "FAIL") << '\n';
  return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Endomorphism rings and cohomology of finite abelian group extensions"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  std::string out_path;
  app.add_flag("--json", json, "Machine-readable JSON output");
  app.add_option("--out", out_path, "Write JSON output to this file (verify: directory for per-instance reports)");

  int code = 0;
  auto guarded = [&](auto&& fn) {
    return [&, fn] {
      try {
        code = fn();
      } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        code = kExitError;
      }
    };
  };

  int g_cyclic = 0, g_dihedral = 0;
  std::string g_input;
  bool g_table = false;
  auto* group = app.add_subcommand("group", "Describe a finite group");
  group->add_option("--cyclic", g_cyclic, "Cyclic group of this order")->check(CLI::PositiveNumber);
  group->add_option("--dihedral", g_dihedral, "Dihedral group of order 2n")->check(CLI::PositiveNumber);
  group->add_option("--input", g_input, "Group JSON file");
  group->add_flag("--table", g_table, "Print the multiplication table");
  group->callback(guarded([&] { return cmd_group(load_group(g_cyclic, g_dihedral, g_input), json, g_table, out_path); }));

  ExtensionSource e_src;
  auto* extension = app.add_subcommand("extension", "Action, cocycle and cohomology class of an extension");
  e_src.attach(extension);
  extension->callback(guarded([&] { return cmd_extension(e_src.load(), json, out_path); }));

  ExtensionSource z_src;
  std::string z_over = "G", z_strategy = "auto";
  auto* z1 = app.add_subcommand("z1", "Enumerate crossed homomorphisms into N");
  z_src.attach(z1);
  z1->add_option("--over", z_over, "Domain: G (conjugation) or Q (induced action)")
      ->check(CLI::IsMember({"G", "Q"}));
  z1->add_option("--strategy", z_strategy, "auto, closure or scan")->check(CLI::IsMember({"auto", "closure", "scan"}));
  z1->callback(guarded([&] { return cmd_z1(z_src.load(), z_over, z_strategy, json, out_path); }));

  ExtensionSource h_src;
  std::string h_method = "linear";
  auto* h2 = app.add_subcommand("h2", "Second cohomology H^2(Q,N) and the class of the extension");
  h_src.attach(h2);
  h2->add_option("--method", h_method, "linear, brute or both")->check(CLI::IsMember({"linear", "brute", "both"}));
  h2->callback(guarded([&] { return cmd_h2(h_src.load(), h_method, json, out_path); }));

  ExtensionSource n_src;
  bool n_tables = false;
  auto* endo = app.add_subcommand("endo", "The ring End^Q_N(G) with its ideal End^{N,Q}(G)");
  n_src.attach(endo);
  endo->add_flag("--tables", n_tables, "Always print the [+] and [x] tables");
  endo->callback(guarded([&] { return cmd_endo(n_src.load(), n_tables, json, out_path); }));

  std::string r_input, r_ideal;
  int r_zn = 0;
  auto* ring = app.add_subcommand("ring", "Quasi-regular group and units of a finite ring");
  ring->add_option("--input", r_input, "Ring JSON {order, add_table, mul_table, one?}");
  ring->add_option("--zn", r_zn, "The ring Z/n")->check(CLI::PositiveNumber);
  ring->add_option("--ideal", r_ideal, "Comma separated members to test as a square-zero ideal");
  ring->callback(guarded([&] {
    if ((r_zn > 0) == !r_input.empty()) throw Error("give exactly one of --input, --zn");
    return cmd_ring(r_zn ? make_zn_ring(r_zn) : ring_from_json(read_json_file(r_input)), r_ideal, json, out_path);
  }));

  std::string v_catalog, v_write;
  bool v_skip = false, v_verbose = false;
  auto* verify = app.add_subcommand("verify", "Verify every exact sequence on a catalog of extensions");
  verify->add_option("--catalog", v_catalog, "Catalog JSON (default: built-in catalog)");
  verify->add_flag("--skip-h2g", v_skip, "Do not compute H^2(G,N); that node is reported as not checked");
  verify->add_flag("--verbose", v_verbose, "Print every report");
  verify->add_option("--write-default-catalog", v_write, "Write the built-in catalog to this file and exit");
  verify->callback(
      guarded([&] { return cmd_verify(v_catalog, v_skip, json, v_verbose, out_path, v_write); }));

  auto* examples = app.add_subcommand("examples", "Worked examples");
  examples->require_subcommand(1);
  int d_n = 0;
  bool d_tables = false, d_skip = false;
  auto* dihedral = examples->add_subcommand("dihedral", "0 -> C_n -> D_n -> C_2 -> 1");
  dihedral->add_option("--n", d_n, "3 <= n <= 64")->required();
  dihedral->add_flag("--tables", d_tables, "Print the [+] and [x] tables for any n");
  dihedral->add_flag("--skip-h2g", d_skip, "Do not compute H^2(G,N)");
  dihedral->callback(guarded([&] { return cmd_dihedral(d_n, d_tables, d_skip, json, out_path); }));
  auto* ring2 = examples->add_subcommand("ring2", "The 432-element ring S x| R over Z/12");
  ring2->callback(guarded([&] { return cmd_ring2(json, out_path); }));

  CLI11_PARSE(app, argc, argv);
  return code;
}

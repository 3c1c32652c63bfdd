// Acceptance run: one pass/fail line per criterion. Every reference value is
// recomputed here by direct enumeration; library results are only compared.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cohomoring/cocycles.hpp"
#include "cohomoring/cohomology2.hpp"
#include "cohomoring/endo_rings.hpp"
#include "cohomoring/examples.hpp"
#include "cohomoring/verify.hpp"

using namespace cohomoring;

namespace {

constexpr double kLimitExample1 = 10.0;
constexpr double kLimitExample2 = 60.0;
constexpr double kLimitCatalog = 300.0;
constexpr double kLimitOther = 300.0;
constexpr std::uint64_t kScanLimit = 1'000'000;
constexpr std::size_t kLiftLimit = 10'000;
constexpr int kRingAxiomCarrier = 256;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::string failure;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      failure = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

bool report_line(int id, const char* title, double limit, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.failure = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  o.require(secs < limit, "time limit exceeded");
  std::printf("criterion %d %-44s %s  %.2fs < %.0fs  %s%s%s\n", id, title, o.ok ? "PASS" : "FAIL", secs, limit,
              o.detail.c_str(), o.ok ? "" : "  failure: ", o.failure.c_str());
  std::fflush(stdout);
  return o.ok;
}

std::string itos(long long v) { return std::to_string(v); }

// ---- independent constructions ----------------------------------------

// f_{k,l} on D_n from the closed form y^b x^a -> (y^(l+1))^b (x y^k)^a.
std::vector<Elem> dihedral_map(const FiniteGroup& d, int n, int k, int l) {
  const Elem x = n, y = 1;
  const Elem fx = d.mul(x, d.power(y, k));
  const Elem fy = d.power(y, l + 1);
  std::vector<Elem> m(d.order());
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < n; ++b) m[b + n * a] = d.mul(d.power(fy, b), d.power(fx, a));
  return m;
}

std::vector<Elem> formula_plus(const FiniteGroup& g, const std::vector<Elem>& a1, const std::vector<Elem>& a2) {
  std::vector<Elem> out(g.order());
  for (Elem x = 0; x < g.order(); ++x) out[x] = g.mul(g.mul(a1[x], g.inv(x)), a2[x]);
  return out;
}

// (a2 [x] a1)(x) = a2(a1(x)) a1(x)^-1 x a2(x)^-1 x
std::vector<Elem> formula_times(const FiniteGroup& g, const std::vector<Elem>& a2, const std::vector<Elem>& a1) {
  std::vector<Elem> out(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    Elem v = g.mul(a2[a1[x]], g.inv(a1[x]));
    v = g.mul(v, x);
    v = g.mul(v, g.inv(a2[x]));
    out[x] = g.mul(v, x);
  }
  return out;
}

// First associativity/distributivity failure of a table ring, by brute force.
std::string ring_axiom_oracle(const FiniteRing& r) {
  const int k = r.order();
  for (Elem a = 0; a < k; ++a)
    for (Elem b = 0; b < k; ++b) {
      if (r.add(a, b) != r.add(b, a)) return "addition not commutative";
      for (Elem c = 0; c < k; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) return "addition not associative";
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) return "multiplication not associative";
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) return "left distributivity";
        if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c))) return "right distributivity";
      }
    }
  return "";
}

// Quasi-regular elements by searching for a two-sided *-inverse.
std::vector<Elem> qr_oracle(const FiniteRing& r) {
  std::vector<Elem> out;
  auto st = [&](Elem a, Elem b) { return r.add(r.add(a, b), r.mul(a, b)); };
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem s = 0; s < r.order(); ++s)
      if (st(a, s) == 0 && st(s, a) == 0) {
        out.push_back(a);
        break;
      }
  return out;
}

std::vector<Elem> units_oracle(const FiniteRing& r) {
  std::vector<Elem> out;
  const Elem one = *r.one();
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem s = 0; s < r.order(); ++s)
      if (r.mul(a, s) == one && r.mul(s, a) == one) {
        out.push_back(a);
        break;
      }
  return out;
}

// |Z^2| / |B^2| with normalized cochains, both counted by exhaustive search.
std::int64_t h2_order_oracle(const ActionTable& act) {
  const auto& q = *act.actor;
  const auto& n = *act.module;
  const int qo = q.order(), no = n.order();
  std::vector<std::pair<Elem, Elem>> cells;
  for (Elem x = 1; x < qo; ++x)
    for (Elem y = 1; y < qo; ++y) cells.push_back({x, y});
  std::vector<Elem> f(static_cast<std::size_t>(qo) * qo, 0);
  std::int64_t z2 = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cells.size()) {
      z2 += !cocycle_violation(act, f).has_value();
      return;
    }
    for (Elem v = 0; v < no; ++v) {
      f[cells[i].first * qo + cells[i].second] = v;
      rec(i + 1);
    }
  };
  rec(0);
  std::set<std::vector<Elem>> b2;
  std::vector<Elem> c(qo, 0);
  std::function<void(int)> rec1 = [&](int x) {
    if (x == qo) {
      b2.insert(coboundary(std::make_shared<ActionTable>(act), c).values);
      return;
    }
    for (Elem v = 0; v < no; ++v) {
      c[x] = v;
      rec1(x + 1);
    }
  };
  rec1(1);
  return z2 / static_cast<std::int64_t>(b2.size());
}

std::uint64_t power_or_cap(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (int i = 0; i < exp; ++i) {
    if (v > cap / std::max<std::uint64_t>(base, 1)) return cap + 1;
    v *= base;
  }
  return v;
}

// ---- shared catalog data ------------------------------------------------

struct Prepared {
  CatalogEntry entry;
  std::shared_ptr<const InstanceData> data;
  std::vector<ExactnessReport> reports;  // in the order verify_instance runs them
};

std::vector<Prepared>& catalog_data() {
  static std::vector<Prepared> data;
  return data;
}

bool is_check(const ExactnessReport& r, const std::string& position, CheckStatus s) {
  const auto* c = r.find(position);
  return c && c->status == s;
}

// ---- criteria --------------------------------------------------------------

Outcome example1() {
  Outcome o;
  long long pairs = 0;
  for (int n : {3, 4, 5, 6, 12}) {
    const auto ext = dihedral_extension(n);
    const auto& g = *ext.G;
    const auto endo = enumerate_endo_qn(ext);
    const auto module = module_endomorphisms(ext);
    const std::string at = "n=" + itos(n) + ": ";

    // End_{C2}(C_n) = {y -> y^m} with pointwise addition and composition = Z/n.
    o.require(module.size() == n, at + "End_{C2}(C_n) has wrong size");
    std::vector<Elem> pow_index(n);
    for (int m = 0; m < n; ++m) {
      std::vector<Elem> map(n);
      for (int b = 0; b < n; ++b) map[b] = (m * b) % n;
      pow_index[m] = module.index_of(map);
      o.require(pow_index[m] >= 0, at + "y -> y^m missing from End_{C2}(C_n)");
    }
    if (!o.ok) return o;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        o.require(module.ring->add(pow_index[a], pow_index[b]) == pow_index[(a + b) % n], at + "End_Q(N) + is not Z/n");
        o.require(module.ring->mul(pow_index[a], pow_index[b]) == pow_index[(a * b) % n], at + "End_Q(N) o is not Z/n");
      }

    // End^Q_N(D_n) = {f_{k,l}} with the stated formulas.
    o.require(endo.size() == n * n, at + "End^Q_N(G) has wrong size");
    std::vector<Elem> member(n * n);
    std::vector<std::vector<Elem>> maps(n * n);
    for (int l = 0; l < n; ++l)
      for (int k = 0; k < n; ++k) {
        maps[k + n * l] = dihedral_map(g, n, k, l);
        member[k + n * l] = endo.index_of(maps[k + n * l]);
        o.require(member[k + n * l] >= 0, at + "f_{k,l} missing");
      }
    if (!o.ok) return o;
    std::set<Elem> ideal_expected;
    for (int k = 0; k < n; ++k) ideal_expected.insert(member[k]);
    o.require(std::set<Elem>(endo.ideal.begin(), endo.ideal.end()) == ideal_expected,
              at + "End^{N,Q}(G) is not {f_{k,0}}");
    const auto e1 = example1_ring(n);
    for (int a = 0; a < n * n; ++a)
      for (int b = 0; b < n * n; ++b) {
        const int k = a % n, l = a / n, p = b % n, q = b / n;
        const int sum = (k + p) % n + n * ((l + q) % n);
        const int prod = (l * p) % n + n * ((l * q) % n);
        ++pairs;
        o.require(formula_plus(g, maps[a], maps[b]) == maps[sum], at + "f_{k,l} [+] f_{p,q} != f_{k+p,l+q}");
        o.require(formula_times(g, maps[a], maps[b]) == maps[prod], at + "f_{k,l} [x] f_{p,q} != f_{lp,lq}");
        o.require(endo.ring->add(member[a], member[b]) == member[sum], at + "library [+] table disagrees");
        o.require(endo.ring->mul(member[a], member[b]) == member[prod], at + "library [x] table disagrees");
        o.require(e1->add(a, b) == sum && e1->mul(a, b) == prod, at + "Z/n x| Z/n table disagrees");
        if (l == 0 && q == 0) o.require(prod == 0, at + "f_{k,0} [x] f_{p,0} != f_{0,0}");
      }
    if (!o.ok) return o;
  }
  o.detail = "n=3,4,5,6,12; " + itos(pairs) + " index pairs";
  return o;
}

Outcome example2() {
  Outcome o;
  const auto ex = example2_ring();
  const auto& r = *ex.ring;
  o.require(r.order() == 432, "order is not 432");
  o.require(ex.s_elements.size() == 72 && ex.r->order() == 6, "|S| or |R| wrong");
  // Reference tables from the component formulas.
  const int ss = 72;
  for (Elem a = 0; a < r.order() && o.ok; ++a)
    for (Elem b = 0; b < r.order(); ++b) {
      const auto [k, l] = ex.s_elements[a % ss];
      const int s = ex.r_elements[a / ss];
      const auto [m, n] = ex.s_elements[b % ss];
      const int t = ex.r_elements[b / ss];
      o.require((k + l) % 2 == 0 && s % 2 == 0, "element outside S x R");
      o.require(r.add(a, b) == ex.index(k + m, l + n, s + t), "[+] formula fails");
      o.require(r.mul(a, b) == ex.index(s * m, s * n, s * t), "[x] formula fails");
    }
  const auto why = ring_axiom_oracle(r);
  o.require(why.empty(), "ring axiom: " + why);
  for (Elem a = 0; a < ss; ++a)
    for (Elem b = 0; b < ss; ++b) o.require(r.mul(a, b) == 0, "S x {0} is not square-zero");
  o.detail = "432^2 pairs, 432^3 triples";
  return o;
}

Outcome theorem1_suite() {
  Outcome o;
  auto& cat = catalog_data();
  int max_order = 0, nonsplit = 0, h2g_checked = 0;
  for (auto& p : cat) {
    const auto& ext = p.entry.ext;
    max_order = std::max(max_order, ext.G->order());
    if (!coboundary_witness(extension_cocycle(ext))) ++nonsplit;
    p.data = prepare_instance(ext);
    p.reports = {verify_theorem1(*p.data, true), verify_corollary1(*p.data), verify_theorem2(*p.data),
                 verify_corollary2(*p.data), verify_ring_structures(*p.data)};
    const auto& t1 = p.reports[0];
    const std::string at = p.entry.name + ": ";
    for (const char* node : {"End^{N,Q}(G)", "End^Q_N(G)", "End_Q(N)", "Res ring homomorphism"})
      o.require(is_check(t1, node, CheckStatus::Pass), at + node);
    if (ext.G->order() <= 16) {
      o.require(is_check(t1, "H^2(Q,N)", CheckStatus::Pass), at + "H^2(Q,N)");
      ++h2g_checked;
    } else {
      o.require(!is_check(t1, "H^2(Q,N)", CheckStatus::Fail), at + "H^2(Q,N)");
    }
  }
  o.require(cat.size() >= 12, "catalog has fewer than 12 extensions");
  o.require(max_order <= 48, "catalog order above 48");
  o.require(nonsplit >= 2, "fewer than two non-split instances");
  o.detail = itos(cat.size()) + " extensions, " + itos(nonsplit) + " non-split, |G| <= " + itos(max_order) +
             ", H^2(Q,N) node on " + itos(h2g_checked);
  return o;
}

Outcome ring_axiom_suite() {
  Outcome o;
  int checked = 0;
  for (const auto& p : catalog_data()) {
    const auto& d = *p.data;
    const auto& rings = p.reports[4];
    const int k = d.endo.size();
    const std::string at = p.entry.name + ": ";
    for (const char* c : {"bijection intertwines", "star equals composition"})
      o.require(is_check(rings, c, CheckStatus::Pass), at + c);
    if (k > kRingAxiomCarrier) continue;
    ++checked;
    for (const char* c : {"Z^1 ring axioms", "End^Q_N ring axioms"})
      o.require(is_check(rings, c, CheckStatus::Pass), at + c);
    // Tables recomputed from the defining formulas on full maps.
    const auto& g = *d.ext.G;
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        o.require(d.endo.index_of(formula_plus(g, d.endo.endos[a].map, d.endo.endos[b].map)) == d.endo.ring->add(a, b),
                  at + "[+] table");
        o.require(d.endo.index_of(formula_times(g, d.endo.endos[a].map, d.endo.endos[b].map)) ==
                      d.endo.ring->mul(a, b),
                  at + "[x] table");
        std::vector<Elem> comp(g.order());
        for (Elem x = 0; x < g.order(); ++x) comp[x] = d.endo.endos[a](d.endo.endos[b](x));
        const Elem st = d.endo.ring->add(d.endo.ring->add(a, b), d.endo.ring->mul(a, b));
        o.require(d.endo.index_of(comp) == st, at + "f * g != f o g");
        // Z^1 side: sum and diamond of the matching cocycles.
        const auto& phi = d.endo.cocycles[a];
        const auto& psi = d.endo.cocycles[b];
        std::vector<Elem> sum(g.order()), dia(g.order());
        for (Elem x = 0; x < g.order(); ++x) {
          sum[x] = d.ext.N->mul(phi(x), psi(x));
          dia[x] = phi(d.ext.i(psi(x)));
        }
        o.require(d.endo.cocycles[d.endo.ring->add(a, b)].values == sum, at + "bijection breaks +");
        o.require(d.endo.cocycles[d.endo.ring->mul(a, b)].values == dia, at + "bijection breaks <>");
      }
    const auto why = ring_axiom_oracle(*d.endo.ring);
    o.require(why.empty(), at + why);
    if (!o.ok) return o;
  }
  o.detail = itos(checked) + " carriers <= " + itos(kRingAxiomCarrier) + " checked on all triples";
  return o;
}

void check_qr(Outcome& o, const FiniteRing& r, const std::string& name) {
  const auto qr = quasi_regular_group(r);
  o.require(qr.members == qr_oracle(r), name + ": QR membership");
  o.require(qr.group->order() == static_cast<int>(qr.members.size()), name + ": QR group order");
  if (r.one()) {
    const auto u = units(r);
    auto got = u.members;
    std::sort(got.begin(), got.end());
    const auto expect = units_oracle(r);
    o.require(got == expect, name + ": units");
    std::set<Elem> shifted;
    for (Elem m : qr.members) shifted.insert(r.add(*r.one(), m));
    o.require(shifted == std::set<Elem>(expect.begin(), expect.end()), name + ": 1 + QR(R) != U(R)");
    o.require(qr_to_units_is_isomorphism(r), name + ": r -> 1 + r not an isomorphism");
  }
}

void check_prop_qr(Outcome& o, const RingHom& p, const std::vector<Elem>& ideal, const std::string& name) {
  const auto rep = verify_prop_qr(p, ideal);
  o.require(rep.ok(), name + ": " + rep.witness);
  const auto qr_r = qr_oracle(*p.source);
  const auto qr_s = qr_oracle(*p.target);
  o.require(qr_r.size() == ideal.size() * qr_s.size(), name + ": |QR(R)| != |I| |QR(S)|");
  std::set<Elem> qs(qr_s.begin(), qr_s.end());
  for (Elem a = 0; a < p.source->order(); ++a) {
    const bool in_r = std::binary_search(qr_r.begin(), qr_r.end(), a);
    o.require(in_r == (qs.count(p(a)) > 0), name + ": p(r) in QR(S) does not force r in QR(R)");
  }
}

Outcome quasi_regular_suite() {
  Outcome o;
  int rings = 0, pairs = 0;
  for (int n = 1; n <= 12; ++n, ++rings) check_qr(o, *make_zn_ring(n), "Z/" + itos(n));
  for (const auto& p : catalog_data()) {
    const auto& d = *p.data;
    check_qr(o, *d.endo.ring, p.entry.name + " End^Q_N(G)");
    check_qr(o, *d.module.ring, p.entry.name + " End_Q(N)");
    rings += 2;
    if (d.endo.size() <= kRingAxiomCarrier) {
      check_qr(o, *cocycle_ring(d.ext).ring, p.entry.name + " Z^1");
      ++rings;
    }
    o.require(is_check(p.reports[1], "QR sequence over Im(Res)", CheckStatus::Pass), p.entry.name + ": QR sequence over Im(Res)");
    ++pairs;
    if (!o.ok) return o;
  }
  for (int n : {3, 4, 5, 6, 12}) {
    const auto r = example1_ring(n);
    check_qr(o, *r, "Z/" + itos(n) + " x| Z/" + itos(n));
    ++rings;
    // (k, l) -> l onto Z/n with square-zero kernel {(k, 0)}.
    RingHom proj{r, make_zn_ring(n), std::vector<Elem>(r->order())};
    std::vector<Elem> ideal;
    for (Elem a = 0; a < r->order(); ++a) {
      proj.map[a] = a / n;
      if (a / n == 0) ideal.push_back(a);
    }
    check_prop_qr(o, proj, ideal, "Z/" + itos(n) + " x| Z/" + itos(n));
    ++pairs;
  }
  const auto ex = example2_ring();
  check_qr(o, *ex.ring, "S x| R");
  check_qr(o, *ex.r, "R");
  rings += 2;
  RingHom proj{ex.ring, ex.r, std::vector<Elem>(ex.ring->order())};
  std::vector<Elem> ideal;
  for (Elem a = 0; a < ex.ring->order(); ++a) {
    proj.map[a] = a / 72;
    if (a < 72) ideal.push_back(a);
  }
  check_prop_qr(o, proj, ideal, "S x| R");
  ++pairs;
  o.detail = itos(rings) + " rings, " + itos(pairs) + " (R, I) pairs";
  return o;
}

Outcome corollary_suite() {
  Outcome o;
  int checks = 0;
  for (const auto& p : catalog_data()) {
    for (int r = 1; r <= 3; ++r)
      for (const auto& c : p.reports[r].checks) {
        const bool lift_skip = c.position == "delta independent of lift" && c.status == CheckStatus::NotChecked;
        o.require(c.status == CheckStatus::Pass || lift_skip,
                  p.entry.name + ": " + c.position + (c.witness.empty() ? "" : " (" + c.witness + ")"));
        ++checks;
      }
    o.require(is_check(p.reports[1], "Im(rho') direct = via QR(Im Res)", CheckStatus::Pass),
              p.entry.name + ": Aut_Q(N) routes disagree");
  }
  o.detail = itos(checks) + " checks over " + itos(catalog_data().size()) + " instances";
  return o;
}

Outcome oracle_suite() {
  Outcome o;
  auto C = [](int n) { return make_cyclic(n); };
  auto P = [](const GroupPtr& a, const GroupPtr& b) { return make_direct_product(a, b); };
  const std::vector<std::pair<std::string, GroupPtr>> qs = {
      {"C1", C(1)}, {"C2", C(2)}, {"C3", C(3)}, {"C4", C(4)}, {"C2xC2", P(C(2), C(2))}};
  std::vector<std::pair<std::string, GroupPtr>> ns;
  for (int n = 1; n <= 12; ++n) ns.push_back({"C" + itos(n), C(n)});
  ns.push_back({"C2xC2", P(C(2), C(2))});
  ns.push_back({"C2xC4", P(C(2), C(4))});
  ns.push_back({"C2xC2xC2", P(C(2), P(C(2), C(2)))});
  ns.push_back({"C3xC3", P(C(3), C(3))});
  ns.push_back({"C2xC6", P(C(2), C(6))});

  int h2_cases = 0, z1_cases = 0, lift_instances = 0, small_h2 = 0;
  auto compare_z1 = [&](const ActionPtr& a, const std::string& at) {
    if (power_or_cap(a->module->order(), a->actor->order(), kScanLimit) > kScanLimit) return;
    const auto closure = enumerate_z1(a, Z1Strategy::Closure);
    const auto scan = enumerate_z1(a, Z1Strategy::FullScan);
    o.require(closure == scan, at + ": closure and full scan differ");
    ++z1_cases;
  };

  for (const auto& [qn, q] : qs)
    for (const auto& [nn, n] : ns) {
      const auto actions = all_actions(q, n);
      for (std::size_t k = 0; k < actions.size(); ++k) {
        const auto& a = actions[k];
        const std::string at = "Q=" + qn + " N=" + nn + " action " + itos(k);
        const auto lin = h2_linear(a);
        const auto bru = h2_bruteforce(a);
        o.require(lin.invariant_factors() == bru.invariant_factors(), at + ": invariant factors differ");
        // The class map c -> brute(rep_linear(c)) must be a bijective homomorphism.
        const auto classes = lin.all_classes();
        std::set<std::vector<std::int64_t>> images;
        std::vector<H2Class> image_of;
        for (const auto& c : classes) {
          image_of.push_back(bru.reduce(lin.representative(c)));
          images.insert(image_of.back().coefficients);
        }
        o.require(images.size() == classes.size(), at + ": class map not injective");
        for (std::size_t i = 0; i < classes.size() && i < 8; ++i)
          for (std::size_t j = 0; j < classes.size() && j < 8; ++j) {
            const auto sum = lin.add(classes[i], classes[j]);
            const auto idx = std::find(classes.begin(), classes.end(), sum) - classes.begin();
            o.require(bru.add(image_of[i], image_of[j]) == image_of[idx], at + ": class map not additive");
          }
        if (q->order() <= 4 && n->order() <= 4) {
          o.require(h2_order_oracle(*a) == lin.order(), at + ": |Z^2|/|B^2| differs");
          ++small_h2;
        }
        compare_z1(a, at);
        ++h2_cases;
        if (!o.ok) return o;
      }
    }

  for (const auto& p : catalog_data()) {
    const auto& d = *p.data;
    compare_z1(d.ext.g_action, p.entry.name + " Z^1(G,N)");
    compare_z1(d.ext.action, p.entry.name + " Z^1(Q,N)");
    compare_z1(d.central.qbar_action, p.entry.name + " Z^1(Q,Qbar)");
    compare_z1(d.central.cgn_action, p.entry.name + " Z^1(Q,C_G(N))");
    const std::uint64_t lifts = power_or_cap(d.ext.N->order(), d.central.qbar.order() - 1, kLiftLimit);
    if (lifts > kLiftLimit) continue;
    const auto all = enumerate_lifts(d.ext, d.central);
    for (const auto& phi : d.endo_n_q.cocycles) {
      const auto base = connecting_delta(d.ext, d.central, phi, d.h2q, all.front());
      for (const auto& s : all)
        o.require(connecting_delta(d.ext, d.central, phi, d.h2q, s) == base,
                  p.entry.name + ": connecting class depends on the lift");
    }
    ++lift_instances;
    if (!o.ok) return o;
  }
  o.detail = itos(h2_cases) + " (Q,N,action) H^2 cases (" + itos(small_h2) + " also by |Z^2|/|B^2|), " +
             itos(z1_cases) + " Z^1 scans, lifts on " + itos(lift_instances) + " instances";
  return o;
}

Outcome known_values() {
  Outcome o;
  const auto c2 = make_cyclic(2);
  const auto h2 = h2_linear(trivial_action(c2, c2));
  o.require(h2.invariant_factors() == std::vector<std::int64_t>{2}, "H^2(C2,C2) is not Z/2");

  // 0 -> {0,2} -> C4 -> C2 -> 1
  const auto c4 = make_cyclic(4);
  const auto ext = build_extension(GroupHom{c2, c4, {0, 2}}, GroupHom{c4, c2, {0, 1, 0, 1}});
  const auto f = extension_cocycle(ext);
  o.require(!h2.reduce(f).is_zero(), "C4 class is zero");
  o.require(!coboundary_witness(f).has_value(), "C4 cocycle is a coboundary");
  const auto eta_id = transgression_eta(ext, identity_hom(ext.N), h2);
  o.require(!eta_id.is_zero(), "eta(id) = 0");
  const auto h2g = h2_linear(ext.g_action);
  o.require(inflation_h2(f, ext.p, h2g).is_zero(), "p^* of the C4 class is nonzero");
  // Direct check: the inflated cocycle is d of some 1-cochain on C4.
  o.require(coboundary_witness(inflate_cocycle(f, ext.p, ext.g_action)).has_value(), "inflated cocycle not a coboundary");

  int split_cases = 0;
  auto C = [](int n) { return make_cyclic(n); };
  const std::vector<GroupPtr> groups = {C(2), C(3), C(4), make_direct_product(C(2), C(2))};
  for (const auto& q : groups)
    for (const auto& n : groups)
      for (const auto& a : all_actions(q, n)) {
        const auto e = split_extension(a);
        const auto hq = h2_linear(e.action);
        for (const auto& beta : module_endomorphisms(e).maps) {
          o.require(transgression_eta(e, beta, hq).is_zero(), "eta nonzero on a split extension");
          ++split_cases;
        }
      }
  o.detail = "H^2(C2,C2)=Z/2, C4 nonzero, eta(id)!=0, p*=0; eta=0 on " + itos(split_cases) + " split cases";
  return o;
}

}  // namespace

int main() {
  for (auto& e : default_catalog()) catalog_data().push_back(Prepared{std::move(e), nullptr, {}});
  bool all = true;
  all &= report_line(1, "dihedral endomorphism rings", kLimitExample1, example1);
  all &= report_line(2, "432-element ring S x| R", kLimitExample2, example2);
  const bool catalog_ok = report_line(3, "End^Q_N(G) sequence on the catalog", kLimitCatalog, theorem1_suite);
  all &= catalog_ok;
  if (!catalog_ok) {
    // The remaining suites read the prepared catalog.
    for (auto& p : catalog_data())
      if (!p.data) {
        std::printf("later criteria need the catalog; aborting\n");
        return 1;
      }
  }
  all &= report_line(4, "ring axioms and the Z^1 bijection", kLimitOther, ring_axiom_suite);
  all &= report_line(5, "quasi-regular groups", kLimitOther, quasi_regular_suite);
  all &= report_line(6, "Aut and End^N sequences", kLimitOther, corollary_suite);
  all &= report_line(7, "oracle cross-checks", kLimitOther, oracle_suite);
  all &= report_line(8, "known values", kLimitOther, known_values);
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}

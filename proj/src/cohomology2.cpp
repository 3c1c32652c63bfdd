#include "cohomoring/cohomology2.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace cohomoring {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

void require_abelian_module(const ActionTable& action) {
  if (!action.module->is_abelian()) throw Error("H^2 needs an abelian module");
}

bool same_action(const ActionTable& a, const ActionTable& b) {
  return a.act == b.act && a.actor->table() == b.actor->table() && a.module->table() == b.module->table();
}

// Column index helpers for normalized cochains: nonidentity arguments only.
struct CellIndex {
  int q;  // |Q|
  int one_cell(Elem x) const { return x - 1; }
  int two_cell(Elem x, Elem y) const { return (x - 1) * (q - 1) + (y - 1); }
  int two_cells() const { return (q - 1) * (q - 1); }
};

// Linear data for one prime p: coordinates of N_p are the decomposition
// factors with prime p, and all computations happen over Z/p^K.
struct PrimeBlock {
  std::int64_t p = 0;
  int K = 0;
  std::int64_t modulus = 1;
  std::vector<int> factors;  // indices into the decomposition
  std::vector<int> exps;     // a_j per local factor
  int ncols = 0;             // (|Q|-1)^2 * J
  IntMatrix u;               // S-coordinate transform
  std::vector<int> w;        // S = sum of Z/p^{K-w_i}
  IntMatrix s_basis;         // ncols x rank(S)
  IntMatrix u2, u2_inverse;  // class-coordinate transform
  std::vector<int> c;        // class orders p^{c_i}, one per S coordinate
};

std::vector<std::int64_t> matvec(const IntMatrix& a, const std::vector<std::int64_t>& x, std::int64_t m) {
  std::vector<std::int64_t> y(a.rows, 0);
  for (int r = 0; r < a.rows; ++r) {
    std::int64_t acc = 0;
    for (int c = 0; c < a.cols; ++c) {
      const std::int64_t v = a.at(r, c);
      if (v != 0 && x[c] != 0) acc = (acc + v * x[c]) % m;
    }
    y[r] = acc;
  }
  return y;
}

class LinearBackend final : public H2Group::Backend {
 public:
  explicit LinearBackend(const ActionPtr& action);

  const std::vector<PrimePower>& elementary() const override { return elementary_; }
  std::vector<std::int64_t> elementary_coords(const TwoCocycle& f) const override;
  const std::vector<TwoCocycle>& elementary_reps() const override { return reps_; }

 private:
  void build_block(PrimeBlock& b);
  // Action matrix entry A_x[i][j] for local factor indices of a block.
  std::int64_t act_coeff(const PrimeBlock& b, Elem x, int i, int j) const;
  std::vector<std::int64_t> cochain_coords(const PrimeBlock& b, const TwoCocycle& f) const;
  // S-coordinates of a kernel vector; throws when it is not in the kernel.
  std::vector<std::int64_t> s_coords(const PrimeBlock& b, const std::vector<std::int64_t>& x) const;

  ActionPtr action_;
  AbelianDecomposition dec_;
  CellIndex cells_;
  std::vector<PrimeBlock> blocks_;
  std::vector<PrimePower> elementary_;
  std::vector<std::pair<int, int>> elementary_slot_;  // (block, S coordinate)
  std::vector<TwoCocycle> reps_;
};

std::int64_t LinearBackend::act_coeff(const PrimeBlock& b, Elem x, int i, int j) const {
  const Elem image = (*action_)(x, dec_.generators()[b.factors[j]]);
  return dec_.coords(image)[b.factors[i]];
}

std::vector<std::int64_t> LinearBackend::cochain_coords(const PrimeBlock& b, const TwoCocycle& f) const {
  const int J = static_cast<int>(b.factors.size());
  std::vector<std::int64_t> x(b.ncols, 0);
  for (Elem q1 = 1; q1 < cells_.q; ++q1)
    for (Elem q2 = 1; q2 < cells_.q; ++q2) {
      const auto& co = dec_.coords(f(q1, q2));
      for (int j = 0; j < J; ++j) x[cells_.two_cell(q1, q2) * J + j] = co[b.factors[j]];
    }
  return x;
}

std::vector<std::int64_t> LinearBackend::s_coords(const PrimeBlock& b, const std::vector<std::int64_t>& x) const {
  const auto y = matvec(b.u, x, b.modulus);
  const int rank = static_cast<int>(b.w.size());
  std::vector<std::int64_t> t(rank);
  for (int i = 0; i < rank; ++i) {
    const std::int64_t pw = ipow(b.p, b.w[i]);
    if (y[i] % pw != 0) throw Error("cochain is not a cocycle");
    t[i] = y[i] / pw;
  }
  for (int i = rank; i < b.ncols; ++i)
    if (y[i] != 0) throw Error("cochain is not a cocycle");
  return t;
}

void LinearBackend::build_block(PrimeBlock& b) {
  const int q = cells_.q;
  const int J = static_cast<int>(b.factors.size());
  const std::int64_t m = b.modulus;
  b.ncols = cells_.two_cells() * J;
  const std::int64_t nrows = static_cast<std::int64_t>(q - 1) * (q - 1) * (q - 1) * J;
  if (static_cast<double>(nrows) * b.ncols > static_cast<double>(Budget::current().h2_cells))
    throw BudgetExceeded("H^2 cocycle matrix exceeds h2_cells");

  const auto& qq = *action_->actor;
  std::vector<std::vector<std::vector<std::int64_t>>> act(q, std::vector<std::vector<std::int64_t>>(J, std::vector<std::int64_t>(J)));
  for (Elem x = 0; x < q; ++x)
    for (int i = 0; i < J; ++i)
      for (int j = 0; j < J; ++j) act[x][i][j] = act_coeff(b, x, i, j);

  // Cocycle identity, row (x, y, z, i) scaled by p^{K - a_i} so that every
  // row is a congruence mod p^K.
  IntMatrix cond(static_cast<int>(nrows), b.ncols);
  int row = 0;
  for (Elem x = 1; x < q; ++x)
    for (Elem y = 1; y < q; ++y)
      for (Elem z = 1; z < q; ++z) {
        const Elem xy = qq.mul(x, y), yz = qq.mul(y, z);
        for (int i = 0; i < J; ++i, ++row) {
          const std::int64_t s = ipow(b.p, b.K - b.exps[i]);
          for (int j = 0; j < J; ++j) {
            auto& e = cond.at(row, cells_.two_cell(y, z) * J + j);
            e = mod(e + s * act[x][i][j], m);
          }
          if (xy != 0) {
            auto& e = cond.at(row, cells_.two_cell(xy, z) * J + i);
            e = mod(e - s, m);
          }
          if (yz != 0) {
            auto& e = cond.at(row, cells_.two_cell(x, yz) * J + i);
            e = mod(e + s, m);
          }
          auto& e = cond.at(row, cells_.two_cell(x, y) * J + i);
          e = mod(e - s, m);
        }
      }

  const auto ker = smith_local(std::move(cond), b.p, b.K, false, true);
  IntMatrix zgen(b.ncols, b.ncols);
  for (int t = 0; t < b.ncols; ++t) {
    const std::int64_t scale = t < ker.rank ? ipow(b.p, b.K - ker.valuation[t]) : 1;
    for (int r = 0; r < b.ncols; ++r) zgen.at(r, t) = ker.v.at(r, t) * scale % m;
  }
  auto zs = smith_local(std::move(zgen), b.p, b.K, true, false);
  b.u = std::move(zs.u);
  b.w = zs.valuation;
  const int srank = zs.rank;
  b.s_basis = IntMatrix(b.ncols, srank);
  for (int i = 0; i < srank; ++i) {
    const std::int64_t pw = ipow(b.p, b.w[i]);
    for (int r = 0; r < b.ncols; ++r) b.s_basis.at(r, i) = zs.u_inverse.at(r, i) * pw % m;
  }

  // Generators of B^2 + (the lattice of cyclic-order relations), in S coordinates.
  std::vector<std::vector<std::int64_t>> bgens;
  for (Elem q0 = 1; q0 < q; ++q0)
    for (int j = 0; j < J; ++j) {
      std::vector<std::int64_t> v(b.ncols, 0);
      for (Elem x = 1; x < q; ++x)
        for (Elem y = 1; y < q; ++y) {
          const int base = cells_.two_cell(x, y) * J;
          if (y == q0)
            for (int i = 0; i < J; ++i) v[base + i] += act[x][i][j];
          if (qq.mul(x, y) == q0) v[base + j] -= 1;
          if (x == q0) v[base + j] += 1;
        }
      for (auto& e : v) e = mod(e, m);
      bgens.push_back(std::move(v));
    }
  for (int cell = 0; cell < cells_.two_cells(); ++cell)
    for (int j = 0; j < J; ++j) {
      std::vector<std::int64_t> v(b.ncols, 0);
      v[cell * J + j] = ipow(b.p, b.exps[j]) % m;
      bgens.push_back(std::move(v));
    }

  const int nb = static_cast<int>(bgens.size());
  IntMatrix rel(srank, srank + nb);
  for (int i = 0; i < srank; ++i) rel.at(i, i) = ipow(b.p, b.K - b.w[i]) % m;
  for (int g = 0; g < nb; ++g) {
    const auto t = s_coords(b, bgens[g]);
    for (int i = 0; i < srank; ++i) rel.at(i, srank + g) = t[i];
  }
  auto cls = smith_local(std::move(rel), b.p, b.K, true, false);
  b.u2 = std::move(cls.u);
  b.u2_inverse = std::move(cls.u_inverse);
  b.c.assign(srank, b.K);
  for (int i = 0; i < cls.rank; ++i) b.c[i] = cls.valuation[i];
}

LinearBackend::LinearBackend(const ActionPtr& action) : action_(action), dec_(*action->module), cells_{action->actor->order()} {
  require_abelian_module(*action);
  const auto& factors = dec_.factors();
  const int q = cells_.q;
  for (int f = 0; f < static_cast<int>(factors.size()); ++f) {
    if (blocks_.empty() || blocks_.back().p != factors[f].prime) {
      blocks_.emplace_back();
      blocks_.back().p = factors[f].prime;
    }
    auto& b = blocks_.back();
    b.factors.push_back(f);
    b.exps.push_back(factors[f].exponent);
    b.K = std::max(b.K, factors[f].exponent);
  }
  if (q == 1) blocks_.clear();
  for (int bi = 0; bi < static_cast<int>(blocks_.size()); ++bi) {
    auto& b = blocks_[bi];
    b.modulus = ipow(b.p, b.K);
    build_block(b);
    for (int i = 0; i < static_cast<int>(b.c.size()); ++i) {
      if (b.c[i] == 0) continue;
      elementary_.push_back(PrimePower{b.p, b.c[i]});
      elementary_slot_.emplace_back(bi, i);
    }
  }

  const int J_total = static_cast<int>(factors.size());
  for (const auto& [bi, i] : elementary_slot_) {
    const auto& b = blocks_[bi];
    const int J = static_cast<int>(b.factors.size());
    const int srank = static_cast<int>(b.w.size());
    std::vector<std::int64_t> t(srank);
    for (int l = 0; l < srank; ++l) t[l] = b.u2_inverse.at(l, i);
    const auto x = matvec(b.s_basis, t, b.modulus);
    std::vector<Elem> values(static_cast<std::size_t>(q) * q, 0);
    for (Elem q1 = 1; q1 < q; ++q1)
      for (Elem q2 = 1; q2 < q; ++q2) {
        std::vector<std::int64_t> co(J_total, 0);
        for (int j = 0; j < J; ++j) co[b.factors[j]] = x[cells_.two_cell(q1, q2) * J + j];
        values[static_cast<std::size_t>(q1) * q + q2] = dec_.element(co);
      }
    reps_.push_back(make_two_cocycle(action_, std::move(values)));
  }
}

std::vector<std::int64_t> LinearBackend::elementary_coords(const TwoCocycle& f) const {
  if (!same_action(*f.action, *action_)) throw Error("cocycle belongs to a different action");
  make_two_cocycle(f.action, f.values);
  std::vector<std::int64_t> out;
  for (const auto& b : blocks_) {
    const auto t = s_coords(b, cochain_coords(b, f));
    const auto z = matvec(b.u2, t, b.modulus);
    for (int i = 0; i < static_cast<int>(b.c.size()); ++i)
      if (b.c[i] > 0) out.push_back(mod(z[i], ipow(b.p, b.c[i])));
  }
  return out;
}

class BruteBackend final : public H2Group::Backend {
 public:
  explicit BruteBackend(const ActionPtr& action);

  const std::vector<PrimePower>& elementary() const override { return elementary_; }
  std::vector<std::int64_t> elementary_coords(const TwoCocycle& f) const override;
  const std::vector<TwoCocycle>& elementary_reps() const override { return reps_; }

 private:
  ActionPtr action_;
  std::map<std::vector<Elem>, int> coset_of_;
  std::shared_ptr<FiniteGroup> quotient_;
  std::unique_ptr<AbelianDecomposition> dec_;
  std::vector<PrimePower> elementary_;
  std::vector<TwoCocycle> reps_;
};

std::vector<std::vector<Elem>> brute_cocycles(const ActionTable& action, std::uint64_t node_budget) {
  const auto& qq = *action.actor;
  const auto& nn = *action.module;
  const int q = qq.order();
  const CellIndex cells{q};
  const int ncells = cells.two_cells();
  std::vector<std::vector<Elem>> out;
  if (q == 1) {
    out.push_back({0});
    return out;
  }
  struct Constraint {
    Elem x, y, z;
    std::vector<int> cells;
  };
  std::vector<Constraint> cons;
  for (Elem x = 1; x < q; ++x)
    for (Elem y = 1; y < q; ++y)
      for (Elem z = 1; z < q; ++z) {
        Constraint c{x, y, z, {}};
        c.cells.push_back(cells.two_cell(y, z));
        c.cells.push_back(cells.two_cell(x, y));
        if (qq.mul(x, y) != 0) c.cells.push_back(cells.two_cell(qq.mul(x, y), z));
        if (qq.mul(y, z) != 0) c.cells.push_back(cells.two_cell(x, qq.mul(y, z)));
        cons.push_back(std::move(c));
      }

  // Greedy variable order: next cell completes the most constraints.
  std::vector<int> order;
  std::vector<char> placed(ncells, 0);
  std::vector<int> missing(cons.size());
  for (std::size_t k = 0; k < cons.size(); ++k) {
    auto cs = cons[k].cells;
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    cons[k].cells = cs;
    missing[k] = static_cast<int>(cs.size());
  }
  std::vector<std::vector<int>> checks_at(ncells);
  for (int d = 0; d < ncells; ++d) {
    int best = -1, best_score = -1, best_touch = -1;
    for (int c = 0; c < ncells; ++c) {
      if (placed[c]) continue;
      int score = 0, touch = 0;
      for (std::size_t k = 0; k < cons.size(); ++k)
        if (std::find(cons[k].cells.begin(), cons[k].cells.end(), c) != cons[k].cells.end()) {
          ++touch;
          if (missing[k] == 1) ++score;
        }
      if (score > best_score || (score == best_score && touch > best_touch)) {
        best = c;
        best_score = score;
        best_touch = touch;
      }
    }
    placed[best] = 1;
    order.push_back(best);
    for (std::size_t k = 0; k < cons.size(); ++k)
      if (std::find(cons[k].cells.begin(), cons[k].cells.end(), best) != cons[k].cells.end())
        if (--missing[k] == 0) checks_at[d].push_back(static_cast<int>(k));
  }

  std::vector<Elem> values(static_cast<std::size_t>(q) * q, 0);
  auto f = [&](Elem a, Elem b) { return values[static_cast<std::size_t>(a) * q + b]; };
  auto holds = [&](const Constraint& c) {
    const Elem lhs = nn.mul(action(c.x, f(c.y, c.z)), f(c.x, qq.mul(c.y, c.z)));
    const Elem rhs = nn.mul(f(qq.mul(c.x, c.y), c.z), f(c.x, c.y));
    return lhs == rhs;
  };
  auto cell_slot = [&](int cell) {
    const Elem x = cell / (q - 1) + 1, y = cell % (q - 1) + 1;
    return static_cast<std::size_t>(x) * q + y;
  };

  std::uint64_t nodes = 0;
  std::vector<Elem> choice(ncells, -1);
  int d = 0;
  while (d >= 0) {
    if (d == ncells) {
      out.push_back(values);
      --d;
      continue;
    }
    const std::size_t slot = cell_slot(order[d]);
    Elem& cur = choice[d];
    bool advanced = false;
    while (++cur < nn.order()) {
      if (++nodes > node_budget) throw BudgetExceeded("brute-force H^2 exceeds h2_brute_nodes");
      values[slot] = cur;
      bool ok = true;
      for (int k : checks_at[d])
        if (!holds(cons[k])) {
          ok = false;
          break;
        }
      if (ok) {
        advanced = true;
        break;
      }
    }
    if (advanced) {
      ++d;
    } else {
      values[slot] = 0;
      cur = -1;
      --d;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BruteBackend::BruteBackend(const ActionPtr& action) : action_(action) {
  require_abelian_module(*action);
  const auto& qq = *action->actor;
  const auto& nn = *action->module;
  const int q = qq.order();
  const auto budget = Budget::current().h2_brute_nodes;
  const auto z2 = brute_cocycles(*action, budget);

  const double n_one = std::pow(static_cast<double>(nn.order()), q - 1);
  if (n_one > static_cast<double>(budget)) throw BudgetExceeded("brute-force B^2 exceeds h2_brute_nodes");
  std::set<std::vector<Elem>> b2;
  std::vector<Elem> c(q, 0);
  while (true) {
    b2.insert(coboundary(action, c).values);
    int j = q;
    bool done = true;
    while (j > 1) {
      --j;
      if (++c[j] < nn.order()) {
        done = false;
        break;
      }
      c[j] = 0;
    }
    if (done) break;
  }

  auto sum = [&](const std::vector<Elem>& a, const std::vector<Elem>& b) {
    std::vector<Elem> s(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) s[k] = nn.mul(a[k], b[k]);
    return s;
  };
  std::vector<const std::vector<Elem>*> coset_rep;
  for (const auto& f : z2) {
    if (coset_of_.count(f)) continue;
    const int id = static_cast<int>(coset_rep.size());
    coset_rep.push_back(&f);
    for (const auto& b : b2) {
      auto g = sum(f, b);
      if (!std::binary_search(z2.begin(), z2.end(), g)) throw Error("internal: coboundary shift left Z^2");
      coset_of_[std::move(g)] = id;
    }
  }
  const int h = static_cast<int>(coset_rep.size());
  std::vector<Elem> table(static_cast<std::size_t>(h) * h);
  for (int a = 0; a < h; ++a)
    for (int b = 0; b < h; ++b) table[static_cast<std::size_t>(a) * h + b] = coset_of_.at(sum(*coset_rep[a], *coset_rep[b]));
  quotient_ = std::make_shared<FiniteGroup>(h, std::move(table));
  dec_ = std::make_unique<AbelianDecomposition>(*quotient_);
  elementary_ = dec_->factors();
  for (Elem g : dec_->generators()) reps_.push_back(make_two_cocycle(action_, *coset_rep[g]));
}

std::vector<std::int64_t> BruteBackend::elementary_coords(const TwoCocycle& f) const {
  if (!same_action(*f.action, *action_)) throw Error("cocycle belongs to a different action");
  make_two_cocycle(f.action, f.values);
  auto it = coset_of_.find(f.values);
  if (it == coset_of_.end()) throw Error("internal: cocycle missing from brute-force enumeration");
  return dec_->coords(it->second);
}

}  // namespace

bool H2Class::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](std::int64_t c) { return c == 0; });
}

H2Group::H2Group(ActionPtr action, std::shared_ptr<const Backend> backend)
    : action_(std::move(action)), backend_(std::move(backend)), basis_(backend_->elementary()) {}

H2Class H2Group::zero() const {
  return H2Class{invariant_factors(), std::vector<std::int64_t>(invariant_factors().size(), 0)};
}

H2Class H2Group::reduce(const TwoCocycle& f) const {
  const auto e = backend_->elementary_coords(f);
  return H2Class{invariant_factors(), basis_.to_invariant(e)};
}

H2Class H2Group::add(const H2Class& a, const H2Class& b) const {
  H2Class c = zero();
  for (std::size_t i = 0; i < c.coefficients.size(); ++i)
    c.coefficients[i] = mod(a.coefficients[i] + b.coefficients[i], invariant_factors()[i]);
  return c;
}

TwoCocycle H2Group::representative(const H2Class& c) const {
  const auto e = basis_.to_elementary(c.coefficients);
  TwoCocycle f = zero_cocycle(action_);
  const auto& reps = backend_->elementary_reps();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) f = cohomoring::add(f, scale(reps[i], e[i]));
  return f;
}

std::vector<TwoCocycle> H2Group::generator_reps() const {
  std::vector<TwoCocycle> out;
  for (std::size_t s = 0; s < invariant_factors().size(); ++s) {
    H2Class c = zero();
    c.coefficients[s] = 1;
    out.push_back(representative(c));
  }
  return out;
}

std::vector<H2Class> H2Group::all_classes(std::int64_t limit) const {
  if (order() > limit) throw BudgetExceeded("H^2 has too many classes to list");
  std::vector<H2Class> out;
  H2Class c = zero();
  const auto& d = invariant_factors();
  while (true) {
    out.push_back(c);
    int j = static_cast<int>(d.size());
    while (true) {
      if (j == 0) return out;
      --j;
      if (++c.coefficients[j] < d[j]) break;
      c.coefficients[j] = 0;
    }
  }
}

H2Group h2_linear(const ActionPtr& action) { return H2Group(action, std::make_shared<LinearBackend>(action)); }

H2Group h2_bruteforce(const ActionPtr& action) { return H2Group(action, std::make_shared<BruteBackend>(action)); }

std::optional<std::vector<Elem>> coboundary_witness(const TwoCocycle& f) {
  const auto& action = *f.action;
  require_abelian_module(action);
  make_two_cocycle(f.action, f.values);
  const auto& qq = *action.actor;
  const int q = qq.order();
  std::vector<Elem> c(q, 0);
  if (q == 1) return c;
  const AbelianDecomposition dec(*action.module);
  const CellIndex cells{q};
  const auto& factors = dec.factors();
  std::vector<std::vector<std::int64_t>> ccoords(q, std::vector<std::int64_t>(factors.size(), 0));

  std::size_t f0 = 0;
  while (f0 < factors.size()) {
    std::size_t f1 = f0;
    int K = 0;
    while (f1 < factors.size() && factors[f1].prime == factors[f0].prime) K = std::max(K, factors[f1++].exponent);
    const std::int64_t p = factors[f0].prime, m = ipow(p, K);
    const int J = static_cast<int>(f1 - f0);
    const int nrows = cells.two_cells() * J, ncols = (q - 1) * J;
    IntMatrix a(nrows, ncols);
    std::vector<std::int64_t> rhs(nrows);
    for (Elem x = 1; x < q; ++x)
      for (Elem y = 1; y < q; ++y) {
        const auto& fc = dec.coords(f(x, y));
        const Elem xy = qq.mul(x, y);
        for (int i = 0; i < J; ++i) {
          const int row = cells.two_cell(x, y) * J + i;
          const std::int64_t s = ipow(p, K - factors[f0 + i].exponent);
          for (int j = 0; j < J; ++j) {
            const Elem image = action(x, dec.generators()[f0 + j]);
            auto& e = a.at(row, cells.one_cell(y) * J + j);
            e = mod(e + s * dec.coords(image)[f0 + i], m);
          }
          if (xy != 0) {
            auto& e = a.at(row, cells.one_cell(xy) * J + i);
            e = mod(e - s, m);
          }
          auto& e = a.at(row, cells.one_cell(x) * J + i);
          e = mod(e + s, m);
          rhs[row] = mod(s * fc[f0 + i], m);
        }
      }
    const auto sm = smith_local(std::move(a), p, K, true, true);
    const auto ub = matvec(sm.u, rhs, m);
    std::vector<std::int64_t> y(ncols, 0);
    for (int t = 0; t < nrows; ++t) {
      if (t < sm.rank) {
        const std::int64_t pv = ipow(p, sm.valuation[t]);
        if (ub[t] % pv != 0) return std::nullopt;
        y[t] = ub[t] / pv;
      } else if (ub[t] != 0) {
        return std::nullopt;
      }
    }
    const auto sol = matvec(sm.v, y, m);
    for (Elem x = 1; x < q; ++x)
      for (int j = 0; j < J; ++j) ccoords[x][f0 + j] = sol[cells.one_cell(x) * J + j];
    f0 = f1;
  }
  for (Elem x = 1; x < q; ++x) c[x] = dec.element(ccoords[x]);
  if (coboundary(f.action, c).values != f.values) throw Error("internal: coboundary witness check failed");
  return c;
}

TwoCocycle inflate_cocycle(const TwoCocycle& f, const GroupHom& p, const ActionPtr& g_action) {
  const auto& q_action = *f.action;
  const int ng = p.source->order();
  if (g_action->actor->order() != ng || g_action->module->table() != q_action.module->table())
    throw Error("inflation: incompatible groups");
  for (Elem x = 0; x < ng; ++x)
    for (Elem n = 0; n < q_action.module->order(); ++n)
      if ((*g_action)(x, n) != q_action(p(x), n)) throw Error("inflation: action does not factor through p");
  std::vector<Elem> values(static_cast<std::size_t>(ng) * ng);
  for (Elem x = 0; x < ng; ++x)
    for (Elem y = 0; y < ng; ++y) values[static_cast<std::size_t>(x) * ng + y] = f(p(x), p(y));
  return TwoCocycle{g_action, std::move(values)};
}

H2Class inflation_h2(const TwoCocycle& f, const GroupHom& p, const H2Group& h2g) {
  return h2g.reduce(inflate_cocycle(f, p, h2g.action()));
}

TwoCocycle eta_cocycle(const AbelianExtension& ext, const GroupHom& beta) {
  if (beta.source->table() != ext.N->table() || beta.target->table() != ext.N->table())
    throw Error("eta needs an endomorphism of N");
  beta.validate();
  for (Elem q = 0; q < ext.Q->order(); ++q)
    for (Elem n = 0; n < ext.N->order(); ++n)
      if (beta((*ext.action)(q, n)) != (*ext.action)(q, beta(n))) throw Error("eta: endomorphism is not Q-equivariant");
  return pushforward(extension_cocycle(ext), beta);
}

H2Class transgression_eta(const AbelianExtension& ext, const GroupHom& beta, const H2Group& h2q) {
  return h2q.reduce(eta_cocycle(ext, beta));
}

std::vector<Elem> default_lift(const AbelianExtension& ext, const CentralizerData& data) {
  std::vector<Elem> s(data.qbar.order(), -1);
  for (Elem c : data.cgn.elements()) {
    const Elem k = data.qbar.index_of(ext.p(c));
    if (s[k] < 0) s[k] = c;
  }
  return s;
}

std::vector<std::vector<Elem>> enumerate_lifts(const AbelianExtension& ext, const CentralizerData& data) {
  const int kq = data.qbar.order();
  std::vector<std::vector<Elem>> fibers(kq);
  for (Elem c : data.cgn.elements()) fibers[data.qbar.index_of(ext.p(c))].push_back(c);
  double count = 1;
  for (int k = 1; k < kq; ++k) count *= static_cast<double>(fibers[k].size());
  if (count > static_cast<double>(Budget::current().lift_checks)) throw BudgetExceeded("too many set-lifts");
  std::vector<std::vector<Elem>> out;
  std::vector<std::size_t> pos(kq, 0);
  while (true) {
    std::vector<Elem> s(kq);
    s[0] = 0;
    for (int k = 1; k < kq; ++k) s[k] = fibers[k][pos[k]];
    out.push_back(std::move(s));
    int j = kq;
    while (true) {
      if (j <= 1) return out;
      --j;
      if (++pos[j] < fibers[j].size()) break;
      pos[j] = 0;
    }
  }
}

TwoCocycle connecting_cocycle(const AbelianExtension& ext, const CentralizerData& data, const CrossedHom& phi,
                              const std::vector<Elem>& lift) {
  const auto& g = *ext.G;
  const auto& q = *ext.Q;
  const int nq = q.order();
  if (static_cast<int>(lift.size()) != data.qbar.order() || lift[0] != 0) throw Error("lift must be normalized");
  for (int k = 0; k < data.qbar.order(); ++k)
    if (data.cgn.index_of(lift[k]) < 0 || ext.p(lift[k]) != data.qbar.elements()[k])
      throw Error("lift does not split C_G(N) -> Qbar");
  if (phi.domain().order() != nq || phi.module().order() != data.qbar.order()) throw Error("phi must lie in Z^1(Q, Qbar)");
  std::vector<Elem> values(static_cast<std::size_t>(nq) * nq);
  for (Elem x = 0; x < nq; ++x)
    for (Elem y = 0; y < nq; ++y) {
      const Elem sx = lift[phi(x)];
      const Elem xsy = g.conj(ext.section[x], lift[phi(y)]);
      const Elem sxy = lift[phi(q.mul(x, y))];
      const Elem c = g.mul(g.mul(sx, xsy), g.inv(sxy));
      if (!ext.in_n(c)) throw Error("internal: connecting cocycle leaves N");
      values[static_cast<std::size_t>(x) * nq + y] = ext.to_n(c);
    }
  return make_two_cocycle(ext.action, std::move(values));
}

H2Class connecting_delta(const AbelianExtension& ext, const CentralizerData& data, const CrossedHom& phi,
                         const H2Group& h2q, const std::optional<std::vector<Elem>>& lift) {
  return h2q.reduce(connecting_cocycle(ext, data, phi, lift ? *lift : default_lift(ext, data)));
}

}  // namespace cohomoring

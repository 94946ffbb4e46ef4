#include "w0/reducer.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "w0/errors.hpp"
#include "w0/so1n.hpp"

namespace w0 {

// ---------------------------------------------------------------------------
// W0Action

W0Action W0Action::from_counts(std::int64_t plus, std::int64_t minus) {
  W0Action a;
  a.plus = plus;
  a.minus = minus;
  a.dim = plus + minus;
  return a;
}

W0Action::Verdict W0Action::verdict() const {
  if (dim == 0) return Verdict::Zero;
  if (minus == 0) return Verdict::PlusId;
  if (plus == 0) return Verdict::MinusId;
  return Verdict::Mixed;
}

std::string W0Action::verdict_name() const {
  switch (verdict()) {
    case Verdict::Zero: return "zero";
    case Verdict::PlusId: return "plus_id";
    case Verdict::MinusId: return "minus_id";
    case Verdict::Mixed: return "mixed";
  }
  return "?";
}

W0Action tensor(const W0Action& a, const W0Action& b) {
  return W0Action::from_counts(a.plus * b.plus + a.minus * b.minus,
                               a.plus * b.minus + a.minus * b.plus);
}

// ---------------------------------------------------------------------------
// Alternating sums

namespace {

// Data for summing over the Weyl group of a subsystem spanned by some roots
// of g (the roots of s, or the black roots).
struct SubWeyl {
  RootSystem sys;
  std::vector<Labels> root_glabels;  // g-labels of each simple root of sys
  std::vector<Rational> half_norm;   // |alpha_j|^2 / 2 = (alpha_j, rho_sub)
  Vec rho_dominant_in_g;             // g-dominant conjugate of rho_sub

  SubWeyl(const RootSystem& g, const std::vector<Vec>& simple) {
    if (simple.empty()) return;
    sys = RootSystem::from_simple_roots(simple);
    for (const auto& a : sys.simple_roots) {
      root_glabels.push_back(g.integral_labels(a));
      half_norm.push_back(dot(a, a) / 2);
    }
    rho_dominant_in_g = dominate(g, sys.weyl_vector).dominant;
  }
  bool empty() const { return root_glabels.empty(); }
};

// sum over w in W_sub of sign(w) mult_lambda(nu + rho_sub - w rho_sub).
// The walk follows the weak order from rho_sub downwards; (rho - w rho, rho)
// strictly increases along it, and a weight of V_lambda pairs with rho_sub
// to at most (lambda, dom(rho_sub)), so whole subtrees can be cut off.
std::int64_t alternating_sum(const CharacterTable& table, const SubWeyl& sub,
                             const Labels& nu_glabels, const Vec& nu, const Vec& lambda) {
  if (sub.empty()) return table.multiplicity_labels(nu_glabels);
  const int n = sub.sys.rank;
  const Rational fmax = dot(lambda, sub.rho_dominant_in_g) - dot(nu, sub.sys.weyl_vector);
  struct Node {
    Labels labels;   // Dynkin labels of w rho_sub in sub
    Labels coeffs;   // rho_sub - w rho_sub in simple roots of sub
    Rational f;
    int sign;
  };
  std::vector<Node> stack;
  stack.push_back({Labels(n, 1), Labels(n, 0), Rational(0), 1});
  std::int64_t total = 0;
  const std::size_t gr = nu_glabels.size();
  Labels mu(gr);
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    for (std::size_t i = 0; i < gr; ++i) {
      std::int64_t v = nu_glabels[i];
      for (int j = 0; j < n; ++j) v += node.coeffs[j] * sub.root_glabels[j][i];
      mu[i] = v;
    }
    total += node.sign * table.multiplicity_labels(mu);
    for (int i = 0; i < n; ++i) {
      const std::int64_t c = node.labels[i];
      if (c <= 0) continue;
      Rational f = node.f + c * sub.half_norm[i];
      if (f > fmax) continue;
      Labels child = node.labels;
      sub.sys.reflect_labels(child, i);
      bool canonical = true;
      for (int j = 0; j < i && canonical; ++j) canonical = child[j] >= 0;
      if (!canonical) continue;
      Labels coeffs = node.coeffs;
      coeffs[i] += c;
      stack.push_back({std::move(child), std::move(coeffs), std::move(f), -node.sign});
    }
  }
  return total;
}

}  // namespace

// ---------------------------------------------------------------------------
// Reducer

Reducer::Reducer(RealForm form) : form_(std::move(form)) {
  if (form_.is_complex)
    throw InvalidArgument(form_.name + " is complex; use the complex product rule");
  dec_ = build_s(form_);
  s_ = RootSystem::from_simple_roots(dec_.simple_roots);
  for (const auto& sm : dec_.summands) {
    if (sm.kind == Summand::Kind::Abelian) continue;
    std::vector<int> idx;
    for (const auto& r : sm.simple_roots) {
      auto it = std::find(dec_.simple_roots.begin(), dec_.simple_roots.end(), r);
      if (it == dec_.simple_roots.end())
        throw ConsistencyError("summand root missing from the simple roots of s");
      idx.push_back(static_cast<int>(it - dec_.simple_roots.begin()));
    }
    summand_index_.push_back(std::move(idx));
  }
}

void Reducer::require_dominant(const Vec& lambda) const {
  const RootSystem& g = form_.complex_system;
  if (static_cast<int>(lambda.size()) != g.ambient_dim)
    throw InvalidArgument("weight " + to_string(lambda) + " has " +
                          std::to_string(lambda.size()) + " coordinates; " + g.name() +
                          " uses " + std::to_string(g.ambient_dim));
  Vec labels = g.dynkin_labels(lambda);
  if (!is_integral(labels))
    throw NotDominant("weight " + to_string(lambda) + " is not integral for " + g.name() +
                      " (Dynkin labels " + to_string(labels) + ")");
  for (const auto& x : labels)
    if (x < 0)
      throw NotDominant("weight " + to_string(lambda) + " is not dominant for " + g.name() +
                        " (Dynkin labels " + to_string(labels) + ")");
}

namespace {

// lambda with its component off the root span removed (type A ambient).
Vec normalised(const RootSystem& g, const Vec& lambda) {
  return g.from_labels(g.integral_labels(lambda));
}

}  // namespace

std::vector<BranchConstituent> Reducer::branch_to_s(const Vec& lambda) const {
  require_dominant(lambda);
  const RootSystem& g = form_.complex_system;
  const Vec lam = normalised(g, lambda);
  CharacterTable table(g, lam);
  const int gr = g.rank, sr = s_.rank;
  // g-labels -> s-labels and -> abelian charges.
  std::vector<Labels> to_s(sr, Labels(gr));
  for (int j = 0; j < sr; ++j)
    for (int i = 0; i < gr; ++i) {
      Rational v = coroot_pairing(g.fundamental_weights[i], s_.simple_roots[j]);
      if (!is_integral(v)) throw ConsistencyError("coroot of s pairs non-integrally with g");
      to_s[j][i] = v.get_num().get_si();
    }
  const auto& center = dec_.center_basis;
  std::vector<Vec> to_charge(center.size(), Vec(gr));
  for (std::size_t k = 0; k < center.size(); ++k)
    for (int i = 0; i < gr; ++i) to_charge[k][i] = dot(g.fundamental_weights[i], center[k]);

  std::map<std::pair<Labels, Vec>, std::int64_t,
           bool (*)(const std::pair<Labels, Vec>&, const std::pair<Labels, Vec>&)>
      acc([](const std::pair<Labels, Vec>& a, const std::pair<Labels, Vec>& b) {
        if (a.first != b.first) return a.first < b.first;
        return lex_less(a.second, b.second);
      });
  table.for_each_weight([&](const Labels& mu, std::int64_t mult) {
    Labels l(sr);
    for (int j = 0; j < sr; ++j) {
      std::int64_t v = 1;
      for (int i = 0; i < gr; ++i) v += to_s[j][i] * mu[i];
      l[j] = v;
    }
    int sign = s_.dominate_labels(l);
    for (auto x : l)
      if (x == 0) return;
    for (auto& x : l) x -= 1;
    Vec charge(center.size());
    for (std::size_t k = 0; k < center.size(); ++k) {
      Rational v = 0;
      for (int i = 0; i < gr; ++i)
        if (mu[i]) v += to_charge[k][i] * mu[i];
      charge[k] = v;
    }
    acc[{l, charge}] += sign * mult;
  });

  // Recover the off-span part of a constituent from its charges.
  Matrix gram(center.size(), center.size());
  for (std::size_t a = 0; a < center.size(); ++a)
    for (std::size_t b = 0; b < center.size(); ++b) gram(a, b) = dot(center[a], center[b]);

  std::vector<BranchConstituent> out;
  for (const auto& [key, m] : acc) {
    if (m == 0) continue;
    if (m < 0) throw ConsistencyError("negative branching multiplicity");
    BranchConstituent c;
    c.highest_weight = zeros(g.ambient_dim);
    for (int j = 0; j < sr; ++j)
      if (key.first[j]) c.highest_weight += Rational(key.first[j]) * s_.fundamental_weights[j];
    if (!center.empty()) {
      auto x = solve(gram, key.second);
      if (!x) throw ConsistencyError("singular center basis");
      for (std::size_t k = 0; k < center.size(); ++k) c.highest_weight += (*x)[k] * center[k];
    }
    for (const auto& sm : dec_.summands)
      if (sm.kind != Summand::Kind::Abelian) c.chart_weights.push_back(sm.chart(c.highest_weight));
    c.abelian_charges = key.second;
    c.multiplicity = m;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const BranchConstituent& a, const BranchConstituent& b) {
    if (a.highest_weight != b.highest_weight) return lex_less(a.highest_weight, b.highest_weight);
    return lex_less(a.abelian_charges, b.abelian_charges);
  });
  return out;
}

InvariantAnswer constituent_invariants(const BranchConstituent& c,
                                       const SummandDecomposition& dec) {
  InvariantAnswer none;
  for (const auto& q : c.abelian_charges)
    if (q != 0) return none;
  int sign = 1;
  std::size_t k = 0;
  for (const auto& sm : dec.summands) {
    if (sm.kind == Summand::Kind::Abelian) continue;
    const Vec& w = c.chart_weights.at(k++);
    if (sm.kind == Summand::Kind::Compact) {
      if (!is_zero(w)) return none;
      continue;
    }
    if (!check_star(sm.n, w)) return none;
    sign *= so1n_sign(sm.n, w);
  }
  return {1, sign};
}

namespace {

struct Candidate {
  Vec weight;     // in h* of g
  Rational norm;  // |weight|^2
  int sign;
};

// Dominant chart weights of one so(1,n) summand satisfying the existence
// condition, with |weight|^2 <= budget.
std::vector<Candidate> summand_candidates(const Summand& sm, const std::vector<int>& idx,
                                          const RootSystem& s, const Rational& budget) {
  const RootSystem& chart = sm.chart_system();
  Rational kappa_min = -1;
  for (std::size_t i = 0; i < sm.simple_roots.size(); ++i) {
    Rational k = dot(sm.simple_roots[i], sm.simple_roots[i]) /
                 dot(chart.simple_roots[i], chart.simple_roots[i]);
    if (kappa_min < 0 || k < kappa_min) kappa_min = k;
  }
  std::vector<Candidate> out;
  const bool one_coord = chart.ambient_dim == 1;
  const bool signed_second = sm.type.family == "D2special";
  for (std::int64_t a = 0; kappa_min * a * a <= budget; ++a) {
    std::int64_t lo = one_coord ? 0 : (signed_second ? -a : 0);
    std::int64_t hi = one_coord ? 0 : a;
    for (std::int64_t b = lo; b <= hi; ++b) {
      if (!one_coord && (a + b) % 2 != 0) continue;
      Vec cw = zeros(chart.ambient_dim);
      cw[0] = a;
      if (!one_coord) cw[1] = b;
      Vec w = zeros(s.ambient_dim);
      for (std::size_t i = 0; i < idx.size(); ++i) {
        Rational c = coroot_pairing(cw, chart.simple_roots[i]);
        if (c != 0) w += c * s.fundamental_weights[idx[i]];
      }
      Rational nrm = dot(w, w);
      if (nrm > budget) continue;
      out.push_back({w, nrm, so1n_sign(sm.n, cw)});
    }
  }
  return out;
}

}  // namespace

W0Action Reducer::w0_action(const Vec& lambda, bool prune) const {
  require_dominant(lambda);
  if (!prune) {
    std::int64_t plus = 0, minus = 0;
    for (const auto& c : branch_to_s(lambda)) {
      auto ans = constituent_invariants(c, dec_);
      if (!ans.dim) continue;
      (*ans.sign > 0 ? plus : minus) += c.multiplicity;
    }
    return W0Action::from_counts(plus, minus);
  }
  std::int64_t plus = 0, minus = 0;
  for_each_invariant(lambda, [&](const Vec&, std::int64_t m, int sign) {
    (sign > 0 ? plus : minus) += m;
  });
  return W0Action::from_counts(plus, minus);
}

void Reducer::for_each_invariant(
    const Vec& lambda,
    const std::function<void(const Vec&, std::int64_t, int)>& visit_constituent) const {
  const RootSystem& g = form_.complex_system;
  const Vec lam = normalised(g, lambda);
  CharacterTable table(g, lam);
  SubWeyl sub(g, dec_.simple_roots);
  const Rational budget = dot(lam, lam);

  std::vector<std::vector<Candidate>> per;
  std::size_t k = 0;
  for (const auto& sm : dec_.summands) {
    if (sm.kind == Summand::Kind::Abelian) continue;
    const auto& idx = summand_index_[k++];
    if (sm.kind == Summand::Kind::So1n) per.push_back(summand_candidates(sm, idx, s_, budget));
  }
  // Summands are mutually orthogonal, so norms add up.
  auto visit = [&](auto&& self, std::size_t depth, const Vec& nu, const Rational& norm,
                   int sign) -> void {
    if (depth == per.size()) {
      Vec labels = g.dynkin_labels(nu);
      if (!is_integral(labels)) return;
      Labels gl = g.integral_labels(nu);
      if (table.multiplicity_labels(gl) == 0) return;
      std::int64_t m = alternating_sum(table, sub, gl, nu, lam);
      if (m < 0) throw ConsistencyError("negative branching multiplicity");
      if (m > 0) visit_constituent(nu, m, sign);
      return;
    }
    for (const auto& c : per[depth]) {
      Rational n2 = norm + c.norm;
      if (n2 > budget) continue;
      self(self, depth + 1, nu + c.weight, n2, sign * c.sign);
    }
  };
  visit(visit, 0, zeros(g.ambient_dim), Rational(0), 1);
}

std::vector<BranchConstituent> Reducer::invariant_constituents(const Vec& lambda) const {
  require_dominant(lambda);
  std::vector<BranchConstituent> out;
  for_each_invariant(lambda, [&](const Vec& nu, std::int64_t m, int) {
    BranchConstituent c;
    c.highest_weight = nu;
    for (const auto& sm : dec_.summands)
      if (sm.kind != Summand::Kind::Abelian) c.chart_weights.push_back(sm.chart(nu));
    c.abelian_charges = zeros(dec_.center_basis.size());
    c.multiplicity = m;
    out.push_back(std::move(c));
  });
  std::sort(out.begin(), out.end(), [](const BranchConstituent& a, const BranchConstituent& b) {
    return lex_less(a.highest_weight, b.highest_weight);
  });
  return out;
}

std::int64_t Reducer::levi_invariant_dim(const Vec& lambda) const {
  require_dominant(lambda);
  const RootSystem& g = form_.complex_system;
  const Vec lam = normalised(g, lambda);
  CharacterTable table(g, lam);
  std::vector<Vec> black;
  for (int i : form_.black) black.push_back(g.simple_roots[i]);
  SubWeyl sub(g, black);
  return alternating_sum(table, sub, Labels(g.rank, 0), zeros(g.ambient_dim), lam);
}

// ---------------------------------------------------------------------------
// Wrappers

std::shared_ptr<const Reducer> reducer_for(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const Reducer>> cache;
  RealForm f = Catalog::builtin().lookup(name);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(f.name);
  if (it != cache.end()) return it->second;
  auto r = std::make_shared<const Reducer>(std::move(f));
  cache.emplace(r->form().name, r);
  return r;
}

W0Action w0_action(const RealForm& form, const Vec& lambda, bool prune) {
  return Reducer(form).w0_action(lambda, prune);
}

std::string split_form_name(const std::string& family, int rank) {
  auto s = [](int x) { return std::to_string(x); };
  if (family == "A" && rank >= 1) return "sl(" + s(rank + 1) + ",R)";
  if (family == "B" && rank >= 1) return "so(" + s(rank) + "," + s(rank + 1) + ")";
  if (family == "C" && rank >= 1) return "sp(2·" + s(rank) + ",R)";
  if (family == "D" && rank >= 3) return "so(" + s(rank) + "," + s(rank) + ")";
  if (family == "E" && rank == 6) return "EI";
  if (family == "E" && rank == 7) return "EV";
  if (family == "E" && rank == 8) return "EVIII";
  if (family == "F" && rank == 4) return "FI";
  if (family == "G" && rank == 2) return "G";
  throw InvalidArgument("no split real form catalogued for " + family + std::to_string(rank));
}

W0Action complex_w0_action(const std::string& family, int rank, const Vec& lambda1,
                           const Vec& lambda2) {
  auto r = reducer_for(split_form_name(family, rank));
  return tensor(r->w0_action(lambda1), r->w0_action(lambda2));
}

QuasiSplitReport quasi_split_agrees(const RealForm& a, const RealForm& b,
                                    const std::vector<Vec>& weights) {
  if (a.is_complex || b.is_complex)
    throw InvalidArgument("quasi_split_agrees compares real forms");
  if (a.complex_system.simple_roots != b.complex_system.simple_roots)
    throw InvalidArgument(a.name + " and " + b.name + " have different complexifications (" +
                          a.complex_system.name() + " vs " + b.complex_system.name() + ")");
  Reducer ra(a), rb(b);
  QuasiSplitReport rep;
  for (const auto& w : weights) {
    W0Action x = ra.w0_action(w), y = rb.w0_action(w);
    ++rep.compared;
    if (!(x == y))
      rep.mismatches.push_back(to_string(w) + ": " + a.name + " gives " + x.verdict_name() +
                               " (+" + std::to_string(x.plus) + ", -" +
                               std::to_string(x.minus) + "), " + b.name + " gives " +
                               y.verdict_name() + " (+" + std::to_string(y.plus) + ", -" +
                               std::to_string(y.minus) + ")");
  }
  return rep;
}

}  // namespace w0

// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "w0/errors.hpp"
#include "w0/oracle.hpp"
#include "w0/orthoset.hpp"
#include "w0/realforms.hpp"
#include "w0/reducer.hpp"
#include "w0/so1n.hpp"
#include "w0/subalg.hpp"

using namespace w0;

namespace {

struct Outcome {
  bool ok = true;
  std::size_t checked = 0;
  std::string first_failure;

  void expect(bool cond, const std::function<std::string()>& what) {
    ++checked;
    if (!cond && ok) {
      ok = false;
      first_failure = what();
    }
    if (!cond) ok = false;
  }
};

const Catalog& cat() { return Catalog::builtin(); }

std::string so1n_name(int n) { return "so(1," + std::to_string(n) + ")"; }

Rational half(std::int64_t k) {
  Rational q(k, 2);
  q.canonicalize();
  return q;
}

// Dominant integral weights of so1n_type(n) with first coordinate <= bound,
// in epsilon coordinates.
std::vector<Vec> so1n_dominant(int n, std::int64_t bound) {
  const RootSystem& g = cat().lookup(so1n_name(n)).complex_system;
  const int k = g.ambient_dim;
  const bool d_type = n % 2 == 1;  // D_k, including D2 for n = 3
  std::vector<Vec> out;
  for (int spin = 0; spin <= 1; ++spin) {
    // Coordinates in units of 1/2; all odd (spin) or all even.
    std::vector<std::int64_t> c(k);
    std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t cap) {
      if (i == k) {
        Vec v;
        for (auto x : c) v.push_back(half(x));
        out.push_back(v);
        return;
      }
      bool last = i == k - 1;
      std::int64_t lo = (last && d_type) ? -cap : 0;
      for (std::int64_t x = lo; x <= cap; ++x) {
        if (((x % 2) + 2) % 2 != spin) continue;
        c[i] = x;
        rec(i + 1, last ? cap : x);
      }
    };
    rec(0, 2 * bound);
  }
  for (const auto& v : out)
    if (!g.is_dominant(v) || !g.is_integral(v)) throw ConsistencyError("bad enumeration");
  return out;
}

// (*) weights of so(1,n) with coordinates bounded by `bound`.
std::vector<Vec> star_weights(int n, std::int64_t bound) {
  const RootSystem& g = cat().lookup(so1n_name(n)).complex_system;
  std::vector<Vec> out;
  for (std::int64_t a = 0; a <= bound; ++a)
    for (std::int64_t b = (n == 3 ? -a : 0); b <= (n == 2 ? 0 : a); ++b) {
      Vec w = zeros(g.ambient_dim);
      w[0] = a;
      if (n > 2) w[1] = b;
      if (check_star(n, w)) out.push_back(w);
    }
  return out;
}

std::vector<Labels> label_box(int rank, int bound) {
  std::vector<Labels> out;
  Labels l(rank, 0);
  while (true) {
    out.push_back(l);
    int i = 0;
    while (i < rank && l[i] == bound) l[i++] = 0;
    if (i == rank) break;
    ++l[i];
  }
  return out;
}

Outcome criterion1() {
  Outcome o;
  for (int n = 2; n <= 7; ++n) {
    auto r = reducer_for(so1n_name(n));
    for (const auto& l : so1n_dominant(n, 6)) {
      std::int64_t levi = r->levi_invariant_dim(l);
      o.expect(so1n_dim(n, l) == levi, [&] {
        return so1n_name(n) + " " + to_string(l) + ": closed form " +
               std::to_string(so1n_dim(n, l)) + ", alternating sum " + std::to_string(levi);
      });
    }
  }
  for (std::int64_t a = 0; a <= 12; ++a)
    for (std::int64_t b = 0; b <= a && a + b <= 12; ++b) {
      if ((a + b) % 2) continue;
      o.expect(tableau_unique(a, b), [&] {
        return "tableau not unique for (" + std::to_string(a) + "," + std::to_string(b) + ")";
      });
    }
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (const char* name : {"so(1,2)", "so(1,3)", "so(1,4)", "so(1,5)", "so(1,6)", "sl(2,R)",
                           "sl(3,R)", "su(1,2)", "sp(2·,2,R)"}) {
    RealForm f = cat().lookup(name);
    std::vector<MatrixRep> reps{adjoint_rep(f)};
    auto fam = f.complex_system.family;
    if (fam == Family::B || fam == Family::D || fam == Family::D2special)
      reps.push_back(sym2_standard_rep(f));
    for (const auto& rep : reps) {
      W0Action oracle = oracle_w0_on_invariants(rep, f);
      std::int64_t plus = 0, minus = 0;
      for (const auto& hw : rep.highest_weights) {
        auto a = w0_action(f, hw);
        plus += a.plus;
        minus += a.minus;
      }
      W0Action engine = W0Action::from_counts(plus, minus);
      o.expect(oracle == engine, [&] {
        return rep.description + ": oracle +" + std::to_string(oracle.plus) + "/-" +
               std::to_string(oracle.minus) + ", reducer +" + std::to_string(engine.plus) +
               "/-" + std::to_string(engine.minus);
      });
      if (std::string(name) == "sl(3,R)")
        o.expect(oracle == W0Action::from_counts(1, 1),
                 [] { return std::string("sl(3,R) adjoint is not {+1:1, -1:1}"); });
    }
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::vector<std::pair<std::string, int>> types;
  for (const char* fam : {"A", "B", "C", "D", "BC"})
    for (int r = 1; r <= 8; ++r) {
      std::string f = fam;
      if ((f == "B" || f == "C") && r < 2) continue;
      if (f == "D" && r < 3) continue;
      types.emplace_back(f, r);
    }
  types.insert(types.end(), {{"G", 2}, {"F", 4}, {"E", 6}, {"E", 7}, {"E", 8}});
  for (const auto& [fam, r] : types) {
    auto sys = standard_system({fam, r});
    auto xi = ortho_set(fam, r);
    auto v = verify_ortho_set(xi.roots, sys.roots, longest_element_of(sys.simple, sys.ambient_dim));
    o.expect(v.ok, [&, fam = fam, r = r] {
      return fam + std::to_string(r) + ": " + (v.violations.empty() ? "" : v.violations[0]);
    });
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto& tables = GoldenTables::builtin();
  std::set<std::string> footnotes, rows;
  std::vector<std::string> names = cat().instances(8);
  for (const auto& e : tables.exceptional_forms()) names.push_back(e);
  std::set<std::string> seen;
  for (const auto& name : names) {
    RealForm f = cat().lookup(name);
    if (f.is_complex || !seen.insert(f.name).second) continue;
    auto v = golden_check(f, tables);
    if (!v.applicable) continue;
    rows.insert(v.row_id);
    if (auto row = tables.expected(f))
      for (const auto& fn : row->footnotes_applied) footnotes.insert(fn);
    o.expect(v.ok, [&] { return f.name + ": " + (v.diffs.empty() ? "" : v.diffs[0]); });
  }
  o.expect(footnotes.count("so2") && footnotes.count("so13"),
           [] { return std::string("footnote cases were not exercised"); });
  o.expect(seen.count("EIX") && seen.count("G"), [] { return std::string("exceptional rows missing"); });
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (int n = 2; n <= 7; ++n) {
    auto r = reducer_for(so1n_name(n));
    auto ws = star_weights(n, 4);
    auto sigma = [&](const Vec& w) {
      auto a = r->w0_action(w);
      if (a.dim != 1) throw ConsistencyError("no invariant for " + to_string(w));
      return a.plus ? 1 : -1;
    };
    for (const auto& l : ws)
      for (const auto& m : ws) {
        Vec s = l + m;
        o.expect(check_star(n, s), [&] { return "(*) not closed at " + to_string(s); });
        int lhs = sigma(s), rhs = sigma(l) * sigma(m);
        o.expect(lhs == rhs && lhs == so1n_sign(n, s), [&] {
          return so1n_name(n) + ": sigma(" + to_string(l) + "+" + to_string(m) + ") = " +
                 std::to_string(lhs) + ", product " + std::to_string(rhs);
        });
      }
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  // so(1,3) weight (a,b) with |b| <= a <= 6 corresponds to sl2(C) weights
  // c1 = a+b, c2 = a-b.
  for (std::int64_t a2 = 0; a2 <= 12; ++a2)
    for (std::int64_t b2 = -a2; b2 <= a2; b2 += 2) {
      Vec so{half(a2), half(b2)};
      std::int64_t c1 = (a2 + b2) / 2, c2 = (a2 - b2) / 2;
      Vec l1{half(c1), half(-c1)}, l2{half(c2), half(-c2)};
      auto x = complex_w0_action("A", 1, l1, l2);
      int dim = so1n_dim(3, so);
      bool ok = x.dim == dim;
      if (ok && dim) ok = (x.plus ? 1 : -1) == so1n_sign(3, so);
      o.expect(ok, [&] { return "so(1,3) " + to_string(so) + " disagrees with sl2(C)"; });
    }
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (auto [a, b] : {std::pair{"sl(4,R)", "su(2,2)"}, std::pair{"sl(3,R)", "su(1,2)"}}) {
    RealForm fa = cat().lookup(a), fb = cat().lookup(b);
    std::vector<Vec> ws;
    for (const auto& l : label_box(fa.complex_system.rank, 2))
      ws.push_back(fa.complex_system.from_labels(l));
    auto rep = quasi_split_agrees(fa, fb, ws);
    o.checked += rep.compared;
    if (!rep.ok()) {
      o.ok = false;
      if (o.first_failure.empty()) o.first_failure = rep.mismatches[0];
    }
  }
  if (o.checked < 20) {
    o.ok = false;
    o.first_failure = "fewer than 20 shared weights compared";
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (const char* name : {"sl(2,R)", "sl(3,R)", "sl(4,R)", "sl(5,R)", "so(2,3)", "so(3,4)",
                           "so(4,5)", "sp(2·2,R)", "sp(2·3,R)", "sp(2·4,R)", "so(3,3)",
                           "so(4,4)", "G", "FI"}) {
    RealForm f = cat().lookup(name);
    if (!f.split()) throw ConsistencyError(std::string(name) + " is not split");
    const RootSystem& g = f.complex_system;
    auto r = reducer_for(name);
    for (const auto& l : label_box(g.rank, 2)) {
      Vec w = g.from_labels(l);
      std::int64_t dim = r->w0_action(w).dim;
      std::int64_t zero = weight_multiplicity(g, w, zeros(g.ambient_dim));
      o.expect(dim == zero, [&] {
        return std::string(name) + " " + to_string(w) + ": reducer " + std::to_string(dim) +
               ", zero weight " + std::to_string(zero);
      });
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "so(1,n) closed form vs alternating-sum branching, tableau uniqueness", criterion1},
      {2, "sign generators vs matrix oracle", criterion2},
      {3, "strongly orthogonal sets compose to w0", criterion3},
      {4, "golden tables, classical and exceptional", criterion4},
      {5, "semigroup morphism of the sign", criterion5},
      {6, "complex sl2(C) vs so(1,3)", criterion6},
      {7, "split and quasi-split forms agree", criterion7},
      {8, "split forms: dim equals zero weight multiplicity", criterion8},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.first_failure = std::string("exception: ") + e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %d: %s [%zu checks, %.2fs]%s%s\n", o.ok ? "PASS" : "FAIL", c.id,
                c.title, o.checked, secs, o.ok ? "" : " -- ", o.first_failure.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

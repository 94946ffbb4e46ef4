#include "w0/subalg.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "embedded.hpp"
#include "json.hpp"
#include "w0/errors.hpp"
#include "w0/orthoset.hpp"

namespace w0 {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Summands

Summand make_summand(Summand::Kind kind, int n, DynkinType type, std::vector<Vec> simple,
                     std::vector<bool> highlighted) {
  Summand s;
  s.kind = kind;
  s.n = n;
  s.type = type;
  s.simple_roots = std::move(simple);
  s.highlighted = std::move(highlighted);
  if (kind == Summand::Kind::Abelian) {
    s.abelian_dim = type.rank;
  } else {
    s.chart_ = std::make_shared<const RootSystem>(build_root_system(type.family, type.rank));
    const auto& cs = *s.chart_;
    for (int i = 0; i < cs.rank; ++i)
      for (int j = 0; j < cs.rank; ++j)
        if (coroot_pairing(s.simple_roots[i], s.simple_roots[j]) != Rational(cs.cartan[i][j]))
          throw ConsistencyError("summand roots do not match the Cartan matrix of " +
                                 type.name());
  }
  return s;
}

const RootSystem& Summand::chart_system() const {
  if (!chart_) throw InvalidArgument("abelian summands have no chart");
  return *chart_;
}

Vec Summand::chart(const Vec& weight) const {
  const auto& cs = chart_system();
  Vec out = zeros(cs.ambient_dim);
  for (std::size_t i = 0; i < simple_roots.size(); ++i)
    out += coroot_pairing(weight, simple_roots[i]) * cs.fundamental_weights[i];
  return out;
}

std::string Summand::name() const {
  switch (kind) {
    case Kind::So1n:
      return "so(1," + std::to_string(n) + ")";
    case Kind::Compact:
      return "compact " + type.name();
    case Kind::Abelian:
      return "R^" + std::to_string(abelian_dim);
  }
  return "?";
}

int SummandDecomposition::abelian_dim() const {
  int d = 0;
  for (const auto& s : summands)
    if (s.kind == Summand::Kind::Abelian) d += s.abelian_dim;
  return d;
}

int SummandDecomposition::count(Summand::Kind kind) const {
  return static_cast<int>(std::count_if(summands.begin(), summands.end(),
                                        [&](const Summand& s) { return s.kind == kind; }));
}

std::string SummandDecomposition::describe() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& s : summands) {
    if (!first) os << " + ";
    first = false;
    os << s.name();
    if (s.kind == Summand::Kind::Abelian) continue;
    os << " [";
    for (std::size_t i = 0; i < s.simple_roots.size(); ++i) {
      if (i) os << ", ";
      os << (s.highlighted[i] ? "*" : "") << to_string(s.simple_roots[i]);
    }
    os << "]";
  }
  if (first) os << "0";
  return os.str();
}

namespace {

bool vec_list_less(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less);
}

bool summand_less(const Summand& a, const Summand& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  return vec_list_less(a.simple_roots, b.simple_roots);
}

Rational norm2(const Vec& v) { return dot(v, v); }

// so(1,n) ordering: walk away from the white node. The diagram must be a
// chain ending in a double bond towards a short root (B_k), a chain ending in
// a fork of two leaves (D_k), or a single node (B_1).
Summand order_so1n(const std::vector<Vec>& comp, int white) {
  const int k = static_cast<int>(comp.size());
  auto adjacent = [&](int i, int j) { return i != j && dot(comp[i], comp[j]) != 0; };
  auto degree = [&](int i) {
    int d = 0;
    for (int j = 0; j < k; ++j) d += adjacent(i, j);
    return d;
  };
  auto fail = [&]() -> Summand {
    std::string roots;
    for (const auto& v : comp) roots += " " + to_string(v);
    throw ConsistencyError("component with one noncompact root is not of type so(1,n):" +
                           roots);
  };
  std::vector<bool> hl(k, false);
  hl[0] = true;
  if (k == 1) return make_summand(Summand::Kind::So1n, 2, {"B", 1}, comp, hl);

  std::vector<int> order{white};
  int prev = -1, cur = white;
  bool fork = false;
  while (true) {
    std::vector<int> next;
    for (int j = 0; j < k; ++j)
      if (j != prev && adjacent(cur, j)) next.push_back(j);
    if (next.empty()) break;
    if (next.size() == 1) {
      prev = cur;
      cur = next[0];
      order.push_back(cur);
      continue;
    }
    if (next.size() == 2 && degree(next[0]) == 1 && degree(next[1]) == 1) {
      if (lex_less(comp[next[1]], comp[next[0]])) std::swap(next[0], next[1]);
      order.push_back(next[0]);
      order.push_back(next[1]);
      fork = true;
      break;
    }
    return fail();
  }
  if (static_cast<int>(order.size()) != k) return fail();
  std::vector<Vec> ordered;
  for (int i : order) ordered.push_back(comp[i]);
  if (fork) {
    if (k < 3) return fail();
    return make_summand(Summand::Kind::So1n, 2 * k - 1, {"D", k}, ordered, hl);
  }
  // Chain: simply laced except a last double bond towards a short root.
  for (int i = 0; i + 1 < k; ++i) {
    Rational ratio = norm2(ordered[i]) / norm2(ordered[i + 1]);
    bool last = i + 2 == k;
    if (ratio == 1 && !last) continue;
    if (ratio == 2 && last) {
      return make_summand(Summand::Kind::So1n, 2 * k, {"B", k}, ordered, hl);
    }
    return fail();
  }
  return fail();
}

// Basis of the part of span(roots of g) orthogonal to `simple`.
std::vector<Vec> center_basis_of(const RootSystem& g, const std::vector<Vec>& simple) {
  if (simple.empty()) return g.simple_roots;
  Matrix m(simple.size(), g.simple_roots.size());
  for (std::size_t i = 0; i < simple.size(); ++i)
    for (std::size_t j = 0; j < g.simple_roots.size(); ++j)
      m(i, j) = dot(simple[i], g.simple_roots[j]);
  std::vector<Vec> out;
  for (const auto& x : kernel(m)) {
    Vec v = zeros(g.ambient_dim);
    for (std::size_t j = 0; j < x.size(); ++j) v += x[j] * g.simple_roots[j];
    out.push_back(v);
  }
  return out;
}

}  // namespace

Summand classify_component(const std::vector<Vec>& comp, const RealForm& form) {
  if (comp.empty()) return make_summand(Summand::Kind::Abelian, 0, {"", 0}, {}, {});
  std::vector<int> white;
  for (std::size_t i = 0; i < comp.size(); ++i)
    if (!is_zero(form.project(comp[i]))) white.push_back(static_cast<int>(i));
  if (white.empty()) {
    auto od = bourbaki_order(comp);
    std::vector<Vec> ordered;
    for (int i : od.order) ordered.push_back(comp[i]);
    return make_summand(Summand::Kind::Compact, 0, od.type, ordered,
                        std::vector<bool>(ordered.size(), false));
  }
  // The restricted roots of the component must form a single pair.
  std::set<Vec, bool (*)(const Vec&, const Vec&)> projected(&lex_less);
  auto rs = RootSystem::from_simple_roots(comp);
  for (const auto& a : rs.positive_roots) {
    Vec p = form.project(a);
    if (!is_zero(p)) projected.insert(p);
  }
  if (white.size() != 1 || projected.size() != 1)
    throw ConsistencyError("component of s has restricted roots beyond a single A1 (" +
                           std::to_string(projected.size()) + " positive restricted roots)");
  std::vector<Vec> rotated{comp[white[0]]};
  for (std::size_t i = 0; i < comp.size(); ++i)
    if (static_cast<int>(i) != white[0]) rotated.push_back(comp[i]);
  return order_so1n(rotated, 0);
}

SummandDecomposition build_s(const RealForm& form) {
  if (form.is_complex)
    throw InvalidArgument("build_s needs a real form; complex algebras reduce to split ones");
  const RootSystem& g = form.complex_system;
  SummandDecomposition dec;
  dec.real_form = form.name;
  dec.xi = ortho_set(form).roots;

  auto allowed = [&](const Vec& p) {
    if (is_zero(p)) return true;
    for (const auto& x : dec.xi)
      if (p == x || p == -x) return true;
    return false;
  };
  std::vector<Vec> pos;
  for (const auto& a : g.positive_roots)
    if (allowed(form.project(a))) pos.push_back(a);
  for (const auto& a : pos) {
    dec.roots.push_back(a);
    dec.roots.push_back(-a);
  }
  std::sort(dec.roots.begin(), dec.roots.end(), lex_less);

  // Indecomposable positive roots of the closed subsystem.
  auto in_pos = [&](const Vec& v) {
    return std::find(pos.begin(), pos.end(), v) != pos.end();
  };
  for (const auto& a : pos) {
    bool decomposable = false;
    for (const auto& b : pos)
      if (b != a && in_pos(a - b)) {
        decomposable = true;
        break;
      }
    if (!decomposable) dec.simple_roots.push_back(a);
  }

  // Components, with so(1,3) pieces recognised as pairs of A1's sharing one
  // restricted root.
  std::vector<Summand> pieces;
  std::map<Vec, std::vector<Vec>, bool (*)(const Vec&, const Vec&)> lone_a1(&lex_less);
  for (const auto& idx : dynkin_components(dec.simple_roots)) {
    std::vector<Vec> comp;
    for (int i : idx) comp.push_back(dec.simple_roots[i]);
    Summand s = classify_component(comp, form);
    if (s.kind == Summand::Kind::So1n && s.n == 2) {
      Vec p = form.project(comp[0]);
      if (lex_less(p, -p)) p = -p;
      lone_a1[p].push_back(comp[0]);
      continue;
    }
    pieces.push_back(std::move(s));
  }
  std::set<Vec, bool (*)(const Vec&, const Vec&)> so1n_dirs(&lex_less);
  for (const auto& s : pieces)
    if (s.kind == Summand::Kind::So1n) {
      Vec p = form.project(s.simple_roots[0]);
      if (lex_less(p, -p)) p = -p;
      if (!so1n_dirs.insert(p).second)
        throw ConsistencyError("two so(1,n) summands share a restricted root");
    }
  for (auto& [dir, roots] : lone_a1) {
    if (so1n_dirs.count(dir))
      throw ConsistencyError("an A1 component shares its restricted root with another summand");
    if (roots.size() == 1) {
      pieces.push_back(make_summand(Summand::Kind::So1n, 2, {"B", 1}, roots, {true}));
    } else if (roots.size() == 2) {
      // e1+e2 before e1-e2, as in the D2special numbering.
      std::sort(roots.begin(), roots.end(), [](const Vec& a, const Vec& b) { return lex_less(b, a); });
      pieces.push_back(
          make_summand(Summand::Kind::So1n, 3, {"D2special", 2}, roots, {true, true}));
    } else {
      throw ConsistencyError("more than two A1 components share a restricted root");
    }
  }
  dec.center_basis = center_basis_of(g, dec.simple_roots);
  int ab = static_cast<int>(dec.center_basis.size());
  if (ab > 0) pieces.push_back(make_summand(Summand::Kind::Abelian, 0, {"", ab}, {}, {}));
  std::sort(pieces.begin(), pieces.end(), summand_less);
  dec.summands = std::move(pieces);
  return dec;
}

std::vector<std::string> check_decomposition(const SummandDecomposition& dec,
                                             const RealForm& form) {
  std::vector<std::string> bad;
  const RootSystem& g = form.complex_system;
  // Roots of s are exactly the preimages of {0} and the +-Xi.
  std::vector<Vec> expected;
  for (const auto& a : g.roots) {
    Vec p = form.project(a);
    bool ok = is_zero(p);
    for (const auto& x : dec.xi) ok = ok || p == x || p == -x;
    if (ok) expected.push_back(a);
  }
  std::sort(expected.begin(), expected.end(), lex_less);
  if (expected != dec.roots) bad.push_back("root set differs from the preimage of {0} and +-Xi");

  // Summand root systems are mutually orthogonal, strongly orthogonal, and
  // together exhaust the roots of s.
  std::vector<std::vector<Vec>> summand_roots;
  std::size_t total = 0;
  int rank_sum = 0;
  for (const auto& s : dec.summands) {
    if (s.kind == Summand::Kind::Abelian) continue;
    auto rs = RootSystem::from_simple_roots(s.simple_roots);
    summand_roots.push_back(rs.roots);
    total += rs.roots.size();
    rank_sum += rs.rank;
    int hl = static_cast<int>(std::count(s.highlighted.begin(), s.highlighted.end(), true));
    for (std::size_t i = 0; i < s.simple_roots.size(); ++i)
      if (s.highlighted[i] == is_zero(form.project(s.simple_roots[i])))
        bad.push_back(s.name() + ": highlight flag disagrees with the projection");
    if (s.kind == Summand::Kind::So1n && hl != (s.n == 3 ? 2 : 1))
      bad.push_back(s.name() + ": wrong number of noncompact simple roots");
    if (s.kind == Summand::Kind::Compact && hl != 0)
      bad.push_back(s.name() + ": compact summand with a noncompact root");
  }
  if (total != dec.roots.size()) bad.push_back("summand root systems do not exhaust s");
  for (std::size_t i = 0; i < summand_roots.size(); ++i)
    for (std::size_t j = i + 1; j < summand_roots.size(); ++j)
      for (const auto& a : summand_roots[i])
        for (const auto& b : summand_roots[j]) {
          if (dot(a, b) != 0 || g.is_root(a + b)) {
            bad.push_back("summands " + std::to_string(i) + " and " + std::to_string(j) +
                          " are not strongly orthogonal");
            goto next_pair;
          }
        }
      next_pair:;
  if (rank_sum + dec.abelian_dim() != g.rank) bad.push_back("ranks do not add up to rank(g)");
  // Each so(1,n) summand consumes exactly one element of Xi.
  int so1n = dec.count(Summand::Kind::So1n);
  if (so1n != static_cast<int>(dec.xi.size()))
    bad.push_back("number of so(1,n) summands differs from |Xi|");
  // The highlighted reflections compose to the restricted longest element.
  if (!form.compact()) {
    std::vector<Vec> xi_proj;
    for (const auto& s : dec.summands)
      if (s.kind == Summand::Kind::So1n) xi_proj.push_back(form.project(s.simple_roots[0]));
    Matrix prod = reflection_product(xi_proj, g.ambient_dim);
    Matrix w0 = restricted_w0(form);
    if (!(prod * form.projection == w0 * form.projection))
      bad.push_back("reflections in the highlighted roots do not give w0 on a*");
  }
  return bad;
}

// ---------------------------------------------------------------------------
// Golden tables

struct GoldenTables::Data {
  json doc;
};

namespace {

std::int64_t eval_field(const json& j, const Bindings& b) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) return eval_int(j.get<std::string>(), b);
  throw ParseError("golden tables: expected an integer or expression, got " + j.dump());
}

Summand::Kind parse_kind(const std::string& k) {
  if (k == "so1n") return Summand::Kind::So1n;
  if (k == "compact") return Summand::Kind::Compact;
  if (k == "abelian") return Summand::Kind::Abelian;
  throw ParseError("golden tables: unknown summand kind '" + k + "'");
}

Vec template_root(const std::string& expr, const Bindings& b, const RootSystem& g) {
  Vec v = zeros(g.ambient_dim);
  for (const auto& t : eval_linear(expr, b)) {
    if (t.symbol == "e") {
      if (t.index < 1 || t.index > g.ambient_dim)
        throw ConsistencyError("golden template " + expr + " has index out of range");
      v[t.index - 1] += t.coef;
    } else if (t.symbol == "a") {
      if (t.index < 1 || t.index > g.rank)
        throw ConsistencyError("golden template " + expr + " has index out of range");
      v += Rational(t.coef) * g.simple_roots[t.index - 1];
    } else {
      throw ParseError("golden template " + expr + ": unknown symbol " + t.symbol);
    }
  }
  return v;
}

Vec coords_root(const json& c, const RootSystem& g) {
  auto cs = c.get<std::vector<std::int64_t>>();
  if (static_cast<int>(cs.size()) != g.rank)
    throw ParseError("golden tables: coordinate list of the wrong length");
  Vec v = zeros(g.ambient_dim);
  for (std::size_t i = 0; i < cs.size(); ++i) v += Rational(cs[i]) * g.simple_roots[i];
  return v;
}

std::vector<std::pair<std::int64_t, Bindings>> loop(const json& spec, const Bindings& b) {
  std::vector<std::pair<std::int64_t, Bindings>> out;
  if (spec.is_null()) {
    out.push_back({0, b});
    return out;
  }
  std::string var = spec.at("var").get<std::string>();
  std::int64_t from = eval_field(spec.at("from"), b), to = eval_field(spec.at("to"), b);
  for (std::int64_t i = from; i <= to; ++i) {
    Bindings bb = b;
    bb[var] = i;
    out.push_back({i, bb});
  }
  return out;
}

// Expand one summand entry into zero or more golden summands.
void expand_entry(const json& e, const Bindings& b, const RootSystem& g,
                  const std::map<std::string, std::pair<bool, std::string>>& notes,
                  GoldenRow& row) {
  Summand::Kind kind = parse_kind(e.at("kind").get<std::string>());
  if (kind == Summand::Kind::Abelian) {
    row.abelian_dim += static_cast<int>(eval_field(e.at("dim"), b));
    return;
  }
  bool empty = false, all_hl = false;
  if (e.contains("footnotes"))
    for (const auto& f : e.at("footnotes")) {
      auto it = notes.find(f.get<std::string>());
      if (it == notes.end()) throw ParseError("golden tables: unknown footnote " + f.dump());
      if (!it->second.first) continue;
      if (it->second.second == "empty") empty = true;
      else if (it->second.second == "highlight_all") all_hl = true;
      else throw ParseError("golden tables: unknown footnote effect " + it->second.second);
      if (std::find(row.footnotes_applied.begin(), row.footnotes_applied.end(), f) ==
          row.footnotes_applied.end())
        row.footnotes_applied.push_back(f.get<std::string>());
    }
  for (const auto& [idx, bb] : loop(e.value("repeat", json()), b)) {
    (void)idx;
    // A '±' template splits the entry into one summand per sign.
    std::vector<std::string> signs{""};
    for (const auto& r : e.at("roots"))
      if (r.contains("expr") && r.at("expr").get<std::string>().find("±") != std::string::npos)
        signs = {"-", "+"};
    for (const auto& sign : signs) {
      if (empty) {
        row.abelian_dim += 1;
        continue;
      }
      GoldenSummand s;
      s.kind = kind;
      s.label = e.value("label", "");
      if (kind == Summand::Kind::So1n) s.n = static_cast<int>(eval_field(e.at("n"), bb));
      for (const auto& r : e.at("roots")) {
        bool hl = r.value("highlight", false) || all_hl;
        if (r.contains("coords")) {
          s.roots.push_back(coords_root(r.at("coords"), g));
          s.highlighted.push_back(hl);
          continue;
        }
        std::string expr = r.at("expr").get<std::string>();
        if (auto p = expr.find("±"); p != std::string::npos)
          expr.replace(p, std::string("±").size(), sign);
        for (const auto& [k, rb] : loop(r.value("range", json()), bb)) {
          (void)k;
          s.roots.push_back(template_root(expr, rb, g));
          s.highlighted.push_back(hl);
        }
      }
      if (s.roots.empty()) {
        // so(1,1) or so_2: one-dimensional abelian; su(1), so_1, sp(0): zero.
        if (kind == Summand::Kind::So1n && s.n == 1) row.abelian_dim += 1;
        continue;
      }
      row.summands.push_back(std::move(s));
    }
  }
}

}  // namespace

GoldenTables GoldenTables::from_json(const std::string& text) {
  auto d = std::make_shared<Data>();
  try {
    d->doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("golden tables: ") + e.what());
  }
  if (d->doc.value("format", "") != "w0-golden")
    throw ParseError("golden tables: format must be \"w0-golden\"");
  if (!d->doc.contains("classical") || !d->doc.contains("exceptional"))
    throw ParseError("golden tables: missing \"classical\" or \"exceptional\" section");
  GoldenTables t;
  t.data_ = d;
  return t;
}

GoldenTables GoldenTables::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open golden table file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

const GoldenTables& GoldenTables::builtin() {
  static const GoldenTables t = from_json(embedded::golden_tables_json());
  return t;
}

namespace {

const json* find_row(const json& doc, const RealForm& form) {
  if (form.is_complex) return nullptr;
  const json* hit = nullptr;
  try {
    for (const auto& row : doc.at("exceptional"))
      for (const auto& f : row.at("forms"))
        if (f.get<std::string>() == form.family_id) hit = &row;
    if (hit) return hit;
    for (const auto& row : doc.at("classical")) {
      if (row.at("form").get<std::string>() != form.family_id) continue;
      if (!eval_bool(row.value("when", "1"), form.params)) continue;
      if (hit)
        throw ConsistencyError("golden tables: two rows match " + form.name);
      hit = &row;
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("golden tables: ") + e.what());
  }
  return hit;
}

}  // namespace

bool GoldenTables::has_erratum(const RealForm& form) const {
  const json* row = find_row(data_->doc, form);
  return row && row->contains("printed");
}

std::optional<GoldenRow> GoldenTables::expected(const RealForm& form, bool printed) const {
  const json* row = find_row(data_->doc, form);
  if (!row) return std::nullopt;
  try {
    GoldenRow out;
    out.id = row->at("id").get<std::string>();
    out.display = row->value("display", out.id);
    out.printed = printed && row->contains("printed");
    std::map<std::string, std::pair<bool, std::string>> notes;
    if (row->contains("footnotes"))
      for (const auto& [id, f] : row->at("footnotes").items())
        notes[id] = {eval_bool(f.at("when").get<std::string>(), form.params),
                     f.at("effect").get<std::string>()};
    const json& entries = out.printed ? row->at("printed") : row->at("summands");
    for (const auto& e : entries) expand_entry(e, form.params, form.complex_system, notes, out);
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("golden tables, row for ") + form.name + ": " + e.what());
  }
}

std::vector<std::string> GoldenTables::exceptional_forms() const {
  std::vector<std::string> out;
  for (const auto& row : data_->doc.at("exceptional"))
    for (const auto& f : row.at("forms")) out.push_back(f.get<std::string>());
  return out;
}

namespace {

std::string key_of(const std::string& head, std::vector<Vec> roots, std::vector<Vec> hl) {
  std::sort(roots.begin(), roots.end(), lex_less);
  std::sort(hl.begin(), hl.end(), lex_less);
  std::string k = head + " roots{";
  for (const auto& r : roots) k += to_string(r) + " ";
  k += "} highlighted{";
  for (const auto& r : hl) k += to_string(r) + " ";
  return k + "}";
}

}  // namespace

GoldenVerdict compare_with_golden(const SummandDecomposition& dec, const GoldenRow& row) {
  GoldenVerdict v;
  v.applicable = true;
  v.row_id = row.id;
  std::multiset<std::string> have, want;
  for (const auto& s : dec.summands) {
    if (s.kind == Summand::Kind::Abelian) continue;
    std::vector<Vec> hl;
    for (std::size_t i = 0; i < s.simple_roots.size(); ++i)
      if (s.highlighted[i]) hl.push_back(s.simple_roots[i]);
    have.insert(key_of(s.name(), s.simple_roots, hl));
  }
  for (const auto& s : row.summands) {
    if (s.kind == Summand::Kind::So1n) {
      std::vector<Vec> hl;
      for (std::size_t i = 0; i < s.roots.size(); ++i)
        if (s.highlighted[i]) hl.push_back(s.roots[i]);
      want.insert(key_of("so(1," + std::to_string(s.n) + ")", s.roots, hl));
      continue;
    }
    // Compact entries such as so_4 may list several simple pieces at once.
    for (const auto& idx : dynkin_components(s.roots)) {
      std::vector<Vec> comp;
      for (int i : idx) comp.push_back(s.roots[i]);
      std::string head;
      try {
        head = "compact " + bourbaki_order(comp).type.name();
      } catch (const Error&) {
        head = "compact ?";
      }
      want.insert(key_of(head, comp, {}));
    }
  }
  for (const auto& k : have)
    if (want.count(k) < have.count(k) && std::find(v.diffs.begin(), v.diffs.end(),
                                                   "unexpected " + k) == v.diffs.end())
      v.diffs.push_back("unexpected " + k);
  for (const auto& k : want)
    if (have.count(k) < want.count(k) &&
        std::find(v.diffs.begin(), v.diffs.end(), "missing " + k) == v.diffs.end())
      v.diffs.push_back("missing " + k);
  if (dec.abelian_dim() != row.abelian_dim)
    v.diffs.push_back("abelian dimension " + std::to_string(dec.abelian_dim()) +
                      ", table says " + std::to_string(row.abelian_dim));
  v.ok = v.diffs.empty();
  return v;
}

GoldenVerdict golden_check(const RealForm& form, const GoldenTables& tables, bool printed) {
  auto row = tables.expected(form, printed);
  if (!row) return {};
  return compare_with_golden(build_s(form), *row);
}

}  // namespace w0

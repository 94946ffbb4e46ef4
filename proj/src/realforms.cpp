#include "w0/realforms.hpp"

#include <algorithm>
#include <cctype>

#include "embedded.hpp"
#include "json.hpp"
#include "w0/errors.hpp"

namespace w0 {

using ojson = nlohmann::ordered_json;

namespace {

struct TypeCase {
  std::string when;
  std::string family;
  std::string rank;
};

struct NodeGen {
  std::string when = "1";
  std::string var = "k";
  std::string from, to;
  std::string node;                     // black generators
  std::pair<std::string, std::string> pair;  // arrow generators
};

struct Alias {
  std::string pattern;
  std::vector<std::pair<std::string, std::string>> set;
};

struct Constraint {
  std::string expr;
  std::string message;
};

}  // namespace

struct Catalog::Spec {
  std::string id;
  std::string display;
  std::string pattern;
  std::vector<Alias> aliases;
  std::vector<std::pair<std::string, std::string>> let;
  std::vector<Constraint> constraints;
  std::vector<TypeCase> complex;
  std::vector<NodeGen> black;
  std::vector<NodeGen> arrows;
  std::vector<TypeCase> restricted;
};

namespace {

std::string json_string(const ojson& j, const char* key, const std::string& fallback = "") {
  if (!j.contains(key)) {
    if (!fallback.empty()) return fallback;
    throw ParseError(std::string("catalog entry is missing '") + key + "'");
  }
  const auto& v = j.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError(std::string("catalog field '") + key + "' must be a string");
}

std::vector<TypeCase> parse_cases(const ojson& j) {
  std::vector<TypeCase> out;
  auto one = [&](const ojson& c) {
    out.push_back({json_string(c, "when", "1"), json_string(c, "family"), json_string(c, "rank")});
  };
  if (j.is_array())
    for (const auto& c : j) one(c);
  else
    one(j);
  return out;
}

std::vector<NodeGen> parse_gens(const ojson& j, bool arrows) {
  std::vector<NodeGen> out;
  for (const auto& g : j) {
    NodeGen n;
    n.when = json_string(g, "when", "1");
    n.var = json_string(g, "var", "k");
    n.from = json_string(g, "from");
    n.to = json_string(g, "to");
    if (arrows) {
      const auto& p = g.at("pair");
      if (!p.is_array() || p.size() != 2) throw ParseError("arrow 'pair' must have two entries");
      n.pair = {p[0].get<std::string>(), p[1].get<std::string>()};
    } else {
      n.node = json_string(g, "node");
    }
    out.push_back(std::move(n));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> parse_kv(const ojson& j) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_string()) throw ParseError("catalog bindings must be strings");
    out.emplace_back(it.key(), it.value().get<std::string>());
  }
  return out;
}

// Match `input` against a pattern with {var} integer captures.
bool match_pattern(const std::string& pattern, const std::string& input, Bindings& out) {
  std::size_t p = 0, i = 0;
  Bindings caps;
  while (p < pattern.size()) {
    if (pattern[p] == '{') {
      auto close = pattern.find('}', p);
      std::string var = pattern.substr(p + 1, close - p - 1);
      std::size_t start = i;
      while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
      if (i == start || i - start > 9) return false;
      caps[var] = std::stoll(input.substr(start, i - start));
      p = close + 1;
    } else {
      if (i >= input.size() || input[i] != pattern[p]) return false;
      ++p;
      ++i;
    }
  }
  if (i != input.size()) return false;
  out = caps;
  return true;
}

std::string instantiate(const std::string& pattern, const Bindings& b) {
  std::string out;
  for (std::size_t p = 0; p < pattern.size(); ++p) {
    if (pattern[p] == '{') {
      auto close = pattern.find('}', p);
      out += std::to_string(b.at(pattern.substr(p + 1, close - p - 1)));
      p = close;
    } else {
      out += pattern[p];
    }
  }
  return out;
}

std::vector<std::string> pattern_vars(const std::string& pattern) {
  std::vector<std::string> vars;
  for (std::size_t p = pattern.find('{'); p != std::string::npos; p = pattern.find('{', p + 1))
    vars.push_back(pattern.substr(p + 1, pattern.find('}', p) - p - 1));
  return vars;
}

std::string shape(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '{') {
      i = s.find('}', i);
      out += '#';
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      while (i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) ++i;
      out += '#';
    } else {
      out += s[i];
    }
  }
  return out;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] != b[j - 1])});
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

const TypeCase& pick_case(const std::vector<TypeCase>& cases, const Bindings& b,
                          const std::string& what) {
  for (const auto& c : cases)
    if (eval_bool(c.when, b)) return c;
  throw ConsistencyError("no " + what + " case applies");
}

std::vector<int> expand_nodes(const std::vector<NodeGen>& gens, Bindings b) {
  std::vector<int> out;
  for (const auto& g : gens) {
    if (!eval_bool(g.when, b)) continue;
    auto lo = eval_int(g.from, b), hi = eval_int(g.to, b);
    for (auto k = lo; k <= hi; ++k) {
      b[g.var] = k;
      out.push_back(static_cast<int>(eval_int(g.node, b)));
    }
  }
  return out;
}

std::vector<std::pair<int, int>> expand_arrows(const std::vector<NodeGen>& gens, Bindings b) {
  std::vector<std::pair<int, int>> out;
  for (const auto& g : gens) {
    if (!eval_bool(g.when, b)) continue;
    auto lo = eval_int(g.from, b), hi = eval_int(g.to, b);
    for (auto k = lo; k <= hi; ++k) {
      b[g.var] = k;
      out.emplace_back(static_cast<int>(eval_int(g.pair.first, b)),
                       static_cast<int>(eval_int(g.pair.second, b)));
    }
  }
  return out;
}

struct Resolved {
  const Catalog::Spec* spec;
  Bindings bindings;
};

void build_restricted(RealForm& f, const std::string& family, int rank);

}  // namespace

std::string normalize_form_name(const std::string& name) {
  std::string s;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.rfind("sp(", 0) == 0) {
    std::string out = "sp(";
    for (std::size_t i = 3; i < s.size(); ++i) {
      if (s[i] == '.' || s[i] == '*') out += "\xC2\xB7";
      else out += s[i];
    }
    s = out;
  }
  return s;
}

bool RealForm::is_restricted_root(const Vec& v) const {
  return restricted_multiplicity.count(v) > 0;
}

Catalog Catalog::from_json(const std::string& text) {
  Catalog cat;
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("catalog is not valid JSON: ") + e.what());
  }
  try {
    if (doc.value("format", "") != "w0-realforms")
      throw ParseError("catalog has the wrong format tag");
    if (doc.value("version", 0) != 1) throw ParseError("unsupported catalog version");
    for (const auto& j : doc.at("forms")) {
      auto s = std::make_shared<Spec>();
      s->id = json_string(j, "id");
      s->display = json_string(j, "display", s->id);
      s->pattern = json_string(j, "pattern");
      if (j.contains("aliases"))
        for (const auto& a : j.at("aliases"))
          s->aliases.push_back({json_string(a, "pattern"), parse_kv(a.value("set", ojson::object()))});
      if (j.contains("let")) s->let = parse_kv(j.at("let"));
      if (j.contains("constraints"))
        for (const auto& c : j.at("constraints"))
          s->constraints.push_back({json_string(c, "expr"), json_string(c, "message")});
      s->complex = parse_cases(j.at("complex"));
      s->black = parse_gens(j.value("black", ojson::array()), false);
      s->arrows = parse_gens(j.value("arrows", ojson::array()), true);
      s->restricted = parse_cases(j.at("restricted"));
      cat.specs_.push_back(std::move(s));
    }
  } catch (const ojson::exception& e) {
    throw ParseError(std::string("malformed catalog: ") + e.what());
  }
  return cat;
}

const Catalog& Catalog::builtin() {
  static const Catalog cat = from_json(embedded::realforms_json());
  return cat;
}

std::vector<std::pair<std::string, std::string>> Catalog::rows() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& s : specs_) out.emplace_back(s->id, s->display);
  return out;
}

namespace {

Bindings finish_bindings(const Catalog::Spec& spec, Bindings b) {
  for (const auto& [k, e] : spec.let) b[k] = eval_int(e, b);
  for (const auto& c : spec.constraints)
    if (!eval_bool(c.expr, b)) throw ParameterOutOfRange(c.message);
  return b;
}

void build_form(RealForm& f, const Catalog::Spec& spec) {
  const auto& b = f.params;
  const auto& cc = pick_case(spec.complex, b, "complex type");
  int rank = static_cast<int>(eval_int(cc.rank, b));
  f.complex_system = build_root_system(cc.family, rank);
  const auto& rs = f.complex_system;

  for (int node : expand_nodes(spec.black, b)) {
    if (node < 1 || node > rank) throw ConsistencyError("black node out of range in " + f.name);
    f.black.push_back(node - 1);
  }
  std::sort(f.black.begin(), f.black.end());
  f.black.erase(std::unique(f.black.begin(), f.black.end()), f.black.end());
  for (auto [x, y] : expand_arrows(spec.arrows, b)) {
    if (x < 1 || y < 1 || x > rank || y > rank || x == y)
      throw ConsistencyError("bad arrow in " + f.name);
    f.arrows.emplace_back(x - 1, y - 1);
  }

  // theta = -w_B o epsilon on the root span, identity on its complement
  std::vector<Vec> black_roots;
  std::vector<bool> is_black(rank, false);
  for (int i : f.black) {
    black_roots.push_back(rs.simple_roots[i]);
    is_black[i] = true;
  }
  Matrix wb = longest_element_of(black_roots, rs.ambient_dim);
  std::vector<int> partner(rank);
  for (int i = 0; i < rank; ++i) partner[i] = i;
  for (auto [x, y] : f.arrows) {
    if (is_black[x] || is_black[y]) throw ConsistencyError("arrow touches a black node in " + f.name);
    partner[x] = y;
    partner[y] = x;
  }
  std::vector<Vec> from, to;
  for (int i = 0; i < rank; ++i) {
    Vec eps_i = is_black[i] ? -wb.apply(rs.simple_roots[i]) : rs.simple_roots[partner[i]];
    if (is_black[i]) {
      auto it = std::find(black_roots.begin(), black_roots.end(), eps_i);
      if (it == black_roots.end())
        throw ConsistencyError("opposition involution leaves the black nodes in " + f.name);
    }
    from.push_back(rs.simple_roots[i]);
    to.push_back(-wb.apply(eps_i));
  }
  for (const auto& c : kernel(Matrix::from_rows(rs.simple_roots))) {
    from.push_back(c);
    to.push_back(c);
  }
  auto inv = inverse(Matrix::from_columns(from));
  if (!inv) throw ConsistencyError("degenerate basis while building theta");
  f.theta = Matrix::from_columns(to) * *inv;
  Matrix id = Matrix::identity(rs.ambient_dim);
  if (!(f.theta * f.theta == id)) throw ConsistencyError("theta is not an involution for " + f.name);
  for (const auto& a : rs.roots)
    if (!rs.is_root(f.theta.apply(a))) throw ConsistencyError("theta does not preserve roots");
  f.projection = Rational(1, 2) * (id - f.theta);

  const auto& rc = pick_case(spec.restricted, b, "restricted type");
  build_restricted(f, rc.family, static_cast<int>(eval_int(rc.rank, b)));
}

void build_restricted(RealForm& f, const std::string& family, int rank) {
  const auto& rs = f.complex_system;
  for (const auto& a : rs.roots) {
    Vec p = f.project(a);
    if (!is_zero(p)) f.restricted_multiplicity[p] += 1;
  }
  for (const auto& [v, m] : f.restricted_multiplicity) f.restricted_roots.push_back(v);

  std::vector<Vec> simple;
  for (int i = 0; i < rs.rank; ++i) {
    Vec p = f.project(rs.simple_roots[i]);
    if (is_zero(p)) continue;
    if (std::find(simple.begin(), simple.end(), p) == simple.end()) simple.push_back(p);
  }
  if (static_cast<int>(simple.size()) != rank)
    throw ConsistencyError("restricted rank of " + f.name + " is " +
                           std::to_string(simple.size()) + ", catalog says " +
                           std::to_string(rank));
  bool nonreduced = false;
  for (const auto& v : f.restricted_roots)
    if (f.is_restricted_root(Rational(2) * v)) nonreduced = true;
  if (rank > 0 && nonreduced != (family == "BC"))
    throw ConsistencyError("reducedness of the restricted roots of " + f.name +
                           " disagrees with the catalog");
  if (rank == 0) {
    f.restricted_type = {"", 0};
    return;
  }
  auto od = bourbaki_order(simple, family == "BC" ? "B" : family);
  for (int k : od.order) f.restricted_simple.push_back(simple[k]);
  f.restricted_type = family == "BC" ? DynkinType{"BC", rank} : canonical_type({family, rank});
}

}  // namespace

RealForm Catalog::lookup(const std::string& raw) const {
  const std::string name = normalize_form_name(raw);
  if (name.rfind("complex:", 0) == 0) {
    std::string rest = name.substr(8);
    std::size_t k = 0;
    while (k < rest.size() && std::isalpha(static_cast<unsigned char>(rest[k]))) ++k;
    if (k == 0 || k == rest.size())
      throw UnknownAlgebra("expected complex:<family><rank>, e.g. complex:A2; got '" + raw + "'");
    int r = 0;
    try {
      r = std::stoi(rest.substr(k));
    } catch (const std::exception&) {
      throw UnknownAlgebra("bad rank in '" + raw + "'");
    }
    RealForm f;
    f.is_complex = true;
    f.family_id = "complex";
    try {
      f.complex_system = build_root_system(rest.substr(0, k), r);
    } catch (const InvalidArgument& e) {
      throw ParameterOutOfRange(e.what());
    }
    if (f.complex_system.family == Family::D2special)
      throw ParameterOutOfRange("complex:D2special is not simple; use complex:A1+complex:A1");
    f.name = "complex:" + f.complex_system.name();
    f.params = {{"r", r}};
    return f;
  }

  for (const auto& sp : specs_) {
    Bindings b;
    bool hit = match_pattern(sp->pattern, name, b);
    for (std::size_t a = 0; !hit && a < sp->aliases.size(); ++a) {
      if (match_pattern(sp->aliases[a].pattern, name, b)) {
        for (const auto& [k, e] : sp->aliases[a].set) b[k] = eval_int(e, b);
        hit = true;
      }
    }
    if (!hit) continue;
    RealForm f;
    f.family_id = sp->id;
    f.params = finish_bindings(*sp, b);
    f.name = instantiate(sp->pattern, f.params);
    build_form(f, *sp);
    return f;
  }

  // nearest catalogued spelling
  const std::string want = shape(name);
  std::string best;
  std::size_t best_d = std::string::npos;
  for (const auto& sp : specs_) {
    std::vector<std::string> cands{sp->pattern};
    for (const auto& a : sp->aliases) cands.push_back(a.pattern);
    for (const auto& c : cands) {
      auto d = edit_distance(want, shape(c));
      if (d < best_d) {
        best_d = d;
        best = sp->display;
      }
    }
  }
  std::string msg = "unknown algebra '" + raw + "'";
  if (!best.empty()) msg += "; did you mean '" + best + "'?";
  throw UnknownAlgebra(msg);
}

std::vector<std::string> Catalog::instances(int max_rank) const {
  std::vector<std::string> out;
  for (const auto& sp : specs_) {
    auto vars = pattern_vars(sp->pattern);
    const std::int64_t hi = 2 * max_rank + 2;
    std::vector<std::int64_t> vals(vars.size(), 0);
    while (true) {
      Bindings b;
      for (std::size_t i = 0; i < vars.size(); ++i) b[vars[i]] = vals[i];
      try {
        Bindings full = finish_bindings(*sp, b);
        const auto& cc = pick_case(sp->complex, full, "complex type");
        auto rank = eval_int(cc.rank, full);
        if (rank >= 1 && rank <= max_rank) out.push_back(instantiate(sp->pattern, full));
      } catch (const ParameterOutOfRange&) {
      }
      std::size_t i = 0;
      while (i < vals.size() && ++vals[i] > hi) vals[i++] = 0;
      if (i == vals.size()) break;
    }
  }
  return out;
}

Matrix restricted_w0(const RealForm& form) {
  if (form.is_complex) throw InvalidArgument("restricted_w0 needs a real form, not " + form.name);
  return longest_element_of(form.restricted_simple,
                            static_cast<std::size_t>(form.complex_system.ambient_dim));
}

}  // namespace w0

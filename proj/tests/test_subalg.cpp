#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "w0/errors.hpp"
#include "w0/orthoset.hpp"
#include "w0/subalg.hpp"

using namespace w0;
using w0::testing::ints;

namespace {

const RealForm& form(const std::string& name) {
  static std::map<std::string, RealForm> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, Catalog::builtin().lookup(name)).first;
  return it->second;
}

Vec simple_coords(const RealForm& f, std::vector<int> c) {
  Vec v = zeros(f.complex_system.ambient_dim);
  for (std::size_t i = 0; i < c.size(); ++i) v += Rational(c[i]) * f.complex_system.simple_roots[i];
  return v;
}

std::vector<const Summand*> of_kind(const SummandDecomposition& d, Summand::Kind k) {
  std::vector<const Summand*> out;
  for (const auto& s : d.summands)
    if (s.kind == k) out.push_back(&s);
  return out;
}

}  // namespace

TEST_CASE("build_s on sl(4,R)") {
  auto d = build_s(form("sl(4,R)"));
  auto so = of_kind(d, Summand::Kind::So1n);
  REQUIRE(so.size() == 2);
  CHECK(so[0]->n == 2);
  CHECK(so[1]->n == 2);
  std::vector<Vec> hl{so[0]->simple_roots[0], so[1]->simple_roots[0]};
  std::sort(hl.begin(), hl.end(), lex_less);
  CHECK(hl == std::vector<Vec>{ints({0, 1, -1, 0}), ints({1, 0, 0, -1})});
  CHECK(d.abelian_dim() == 1);
  CHECK(of_kind(d, Summand::Kind::Compact).empty());
}

TEST_CASE("build_s on sp(2·,1,1)") {
  auto d = build_s(form("sp(2·,1,1)"));
  REQUIRE(d.summands.size() == 1);
  const auto& s = d.summands[0];
  CHECK(s.kind == Summand::Kind::So1n);
  CHECK(s.n == 4);
  CHECK(s.simple_roots == std::vector<Vec>{ints({0, 2}), ints({1, -1})});
  CHECK(s.highlighted == std::vector<bool>{true, false});
}

TEST_CASE("build_s on FII") {
  const auto& f = form("FII");
  auto d = build_s(f);
  REQUIRE(d.summands.size() == 1);
  const auto& s = d.summands[0];
  CHECK(s.n == 8);
  CHECK(s.type == DynkinType{"B", 4});
  CHECK(s.simple_roots[0] == simple_coords(f, {0, 1, 2, 2}));
  std::vector<Vec> rest(s.simple_roots.begin() + 1, s.simple_roots.end());
  std::sort(rest.begin(), rest.end(), lex_less);
  std::vector<Vec> want{simple_coords(f, {1, 0, 0, 0}), simple_coords(f, {0, 1, 0, 0}),
                        simple_coords(f, {0, 0, 1, 0})};
  std::sort(want.begin(), want.end(), lex_less);
  CHECK(rest == want);
}

TEST_CASE("build_s on so(3,8), odd p") {
  auto d = build_s(form("so(3,8)"));
  auto so = of_kind(d, Summand::Kind::So1n);
  REQUIRE(so.size() == 3);
  std::vector<int> ns;
  for (auto* s : so) ns.push_back(s->n);
  std::sort(ns.begin(), ns.end());
  CHECK(ns == std::vector<int>{2, 2, 6});
  CHECK(d.abelian_dim() == 0);
  CHECK(of_kind(d, Summand::Kind::Compact).empty());
}

TEST_CASE("classify_component examples") {
  const auto& slh = form("sl(2,H)");
  // e2-e3 (white) with alpha1 and alpha3 of A3 is so(1,5) = D3.
  auto s = classify_component({ints({1, -1, 0, 0}), ints({0, 1, -1, 0}), ints({0, 0, 1, -1})},
                              slh);
  CHECK(s.kind == Summand::Kind::So1n);
  CHECK(s.n == 5);
  CHECK(s.type == DynkinType{"D", 3});
  CHECK(s.simple_roots[0] == ints({0, 1, -1, 0}));
  CHECK(s.highlighted == std::vector<bool>{true, false, false});
  // Not a simple system: the Cartan check rejects it.
  CHECK_THROWS_AS(classify_component({ints({0, 1, 0, -1}), ints({1, -1, 0, 0}),
                                      ints({0, 0, 1, -1})},
                                     slh),
                  ConsistencyError);

  const auto& sostar = form("so*(8)");
  auto c = classify_component({ints({1, -1, 0, 0})}, sostar);
  CHECK(c.kind == Summand::Kind::Compact);
  CHECK(c.type.name() == "A1");

  CHECK(classify_component({}, sostar).kind == Summand::Kind::Abelian);

  // Two restricted directions inside one component is a catalog bug.
  CHECK_THROWS_AS(classify_component(form("sl(3,R)").complex_system.simple_roots,
                                     form("sl(3,R)")),
                  ConsistencyError);
}

TEST_CASE("golden rows for EIV, EVI and su(p,p)") {
  const auto& e4 = form("EIV");
  auto d = build_s(e4);
  REQUIRE(d.count(Summand::Kind::So1n) == 1);
  CHECK(d.summands[0].n == 9);
  // The white simple root is the lowest preimage of the restricted root;
  // the highest root (1,2,2,3,2,1) is a root of the same summand.
  CHECK(d.summands[0].simple_roots[0] == simple_coords(e4, {1, 0, 1, 1, 1, 1}));
  auto so19 = RootSystem::from_simple_roots(d.summands[0].simple_roots);
  CHECK(so19.is_root(simple_coords(e4, {1, 2, 2, 3, 2, 1})));
  CHECK(d.abelian_dim() == 1);
  CHECK(golden_check(e4).ok);

  auto e6 = build_s(form("EVI"));
  CHECK(e6.count(Summand::Kind::So1n) == 4);
  CHECK(e6.count(Summand::Kind::Compact) == 3);
  for (const auto& s : e6.summands) {
    if (s.kind == Summand::Kind::So1n) CHECK(s.n == 2);
    if (s.kind == Summand::Kind::Compact) CHECK(s.type.name() == "A1");
  }
  CHECK(golden_check(form("EVI")).ok);

  for (int p = 1; p <= 4; ++p) {
    auto name = "su(" + std::to_string(p) + "," + std::to_string(p) + ")";
    CAPTURE(name);
    auto dd = build_s(form(name));
    CHECK(dd.count(Summand::Kind::So1n) == p);
    CHECK(dd.abelian_dim() == p - 1);
    CHECK(golden_check(form(name)).ok);
  }
}

TEST_CASE("footnotes of the so(p,q) rows") {
  // n - 4 floor(p/2) = 2 with p odd: the so(1,1) summand is abelian.
  auto odd = GoldenTables::builtin().expected(form("so(3,3)"));
  REQUIRE(odd);
  CHECK(odd->abelian_dim == 1);
  CHECK(odd->footnotes_applied == std::vector<std::string>{"so2"});
  CHECK(build_s(form("so(3,3)")).abelian_dim() == 1);
  // Same with p even: so_2 becomes R.
  auto even = GoldenTables::builtin().expected(form("so(2,4)"));
  REQUIRE(even);
  CHECK(even->abelian_dim == 1);
  CHECK(golden_check(form("so(2,4)")).ok);
  // n + 1 - 2p = 3: so(1,3) with both roots highlighted and the D2special chart.
  auto b = GoldenTables::builtin().expected(form("so(3,5)"));
  REQUIRE(b);
  CHECK(b->footnotes_applied == std::vector<std::string>{"so13"});
  auto d = build_s(form("so(3,5)"));
  auto so = of_kind(d, Summand::Kind::So1n);
  auto it = std::find_if(so.begin(), so.end(), [](auto* s) { return s->n == 3; });
  REQUIRE(it != so.end());
  CHECK((*it)->type.name() == "D2special2");
  CHECK((*it)->highlighted == std::vector<bool>{true, true});
  CHECK(golden_check(form("so(3,5)")).ok);
}

TEST_CASE("so(1,3) chart is the D2special basis") {
  auto d = build_s(form("so(1,3)"));
  REQUIRE(d.summands.size() == 1);
  const auto& s = d.summands[0];
  CHECK(s.n == 3);
  // c1 = 3, c2 = 1 on the two simple roots gives (2, 1).
  Vec w = Rational(3) * s.chart_system().fundamental_weights[0] +
          Rational(1) * s.chart_system().fundamental_weights[1];
  CHECK(w == ints({2, 1}));
  CHECK_FALSE(GoldenTables::builtin().expected(form("so(1,3)")));
}

TEST_CASE("charts send weights to summand coordinates") {
  auto d = build_s(form("sp(2·,1,1)"));
  const auto& s = d.summands[0];
  // The highest weight of the defining representation e1 restricts to the
  // spin-like weight of so(1,4) = B2 with labels (0,1).
  CHECK(s.chart(ints({1, 0})) == w0::testing::vec({"1/2", "1/2"}));
}

TEST_CASE("every catalogued form up to rank 8 matches the tables") {
  int checked = 0;
  for (const auto& name : Catalog::builtin().instances(8)) {
    const auto& f = form(name);
    auto d = build_s(f);
    CAPTURE(name);
    CAPTURE(d.describe());
    auto bad = check_decomposition(d, f);
    CHECK(bad.empty());
    if (!bad.empty()) MESSAGE(bad[0]);
    auto v = golden_check(f);
    if (name == "so(1,3)") {
      CHECK_FALSE(v.applicable);
      continue;
    }
    CHECK(v.applicable);
    CHECK(v.ok);
    for (const auto& diff : v.diffs) MESSAGE(diff);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("highlighted roots compose to the restricted w0") {
  for (const char* name : {"sl(5,R)", "su(2,3)", "so(4,7)", "sp(2·,2,3)", "EIII", "G"}) {
    const auto& f = form(name);
    auto d = build_s(f);
    std::vector<Vec> hl;
    for (const auto& s : d.summands)
      if (s.kind == Summand::Kind::So1n) hl.push_back(f.project(s.simple_roots[0]));
    CAPTURE(name);
    CHECK(reflection_product(hl, f.complex_system.ambient_dim) * f.projection ==
          restricted_w0(f) * f.projection);
  }
}

TEST_CASE("errata rows: the printed versions fail") {
  const auto& e3 = form("EIII");
  CHECK(GoldenTables::builtin().has_erratum(e3));
  auto printed = GoldenTables::builtin().expected(e3, true);
  REQUIRE(printed);
  // alpha2 is not orthogonal to the highest root listed as another summand.
  Vec a2 = e3.complex_system.simple_roots[1];
  Vec highest = simple_coords(e3, {1, 2, 2, 3, 2, 1});
  CHECK(dot(a2, highest) != 0);
  CHECK_FALSE(golden_check(e3, GoldenTables::builtin(), true).ok);
  CHECK(golden_check(e3).ok);

  // EIV as printed pairs the highest root positively with alpha2, so its
  // list is not a simple system.
  const auto& e4 = form("EIV");
  CHECK(dot(simple_coords(e4, {1, 2, 2, 3, 2, 1}), e4.complex_system.simple_roots[1]) > 0);
  CHECK_FALSE(golden_check(e4, GoldenTables::builtin(), true).ok);

  for (const char* name : {"so*(8)", "so*(10)"}) {
    const auto& f = form(name);
    auto row = GoldenTables::builtin().expected(f, true);
    REQUIRE(row);
    for (const auto& s : row->summands)
      if (s.kind == Summand::Kind::So1n) CHECK(is_zero(f.project(s.roots[0])));
    CHECK_FALSE(golden_check(f, GoldenTables::builtin(), true).ok);
    CHECK(golden_check(f).ok);
  }
}

TEST_CASE("golden tables reject malformed input and report diffs") {
  CHECK_THROWS_AS(GoldenTables::from_json("{"), ParseError);
  CHECK_THROWS_AS(GoldenTables::from_json(R"({"format":"other"})"), ParseError);
  auto t = GoldenTables::from_json(R"({"format":"w0-golden","version":1,"classical":[],
    "exceptional":[{"id":"G","forms":["G"],"summands":[
      {"kind":"so1n","n":2,"roots":[{"coords":[1,0],"highlight":true}]},
      {"kind":"so1n","n":2,"roots":[{"coords":[1,1],"highlight":true}]}]}]})");
  auto v = golden_check(form("G"), t);
  CHECK(v.applicable);
  CHECK_FALSE(v.ok);
  CHECK(v.diffs.size() == 2);
  CHECK_FALSE(golden_check(form("sl(3,R)"), t).applicable);
  CHECK(t.exceptional_forms() == std::vector<std::string>{"G"});
  CHECK(GoldenTables::builtin().exceptional_forms().size() == 12);
}

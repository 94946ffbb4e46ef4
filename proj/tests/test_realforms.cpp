#include <set>

#include "doctest.h"
#include "support.hpp"
#include "w0/errors.hpp"
#include "w0/realforms.hpp"

using namespace w0;
using w0::testing::ints;

namespace {
const Catalog& cat() { return Catalog::builtin(); }
}  // namespace

TEST_CASE("so(1,5) has restricted type A1 and keeps only the e1 component") {
  auto f = cat().lookup("so(1,5)");
  CHECK(f.restricted_type.name() == "A1");
  Matrix expect(3, 3);
  expect(0, 0) = 1;
  CHECK(f.projection == expect);
  CHECK(f.restricted_roots == std::vector<Vec>{ints({-1, 0, 0}), ints({1, 0, 0})});
}

TEST_CASE("sp(2·,1,1) has restricted type A1") {
  auto f = cat().lookup("sp(2·,1,1)");
  CHECK(f.restricted_type.name() == "A1");
  CHECK(f.name == "sp(2·,1,1)");
  CHECK(cat().lookup("sp(2.,1,1)").name == f.name);
  CHECK(cat().lookup("sp(2*,1,1)").name == f.name);
}

TEST_CASE("sl(2,R) is split with identity projection") {
  auto f = cat().lookup("sl(2,R)");
  CHECK(f.restricted_type.name() == "A1");
  CHECK(f.split());
  // identity on the root span; the trace direction is dropped
  CHECK(f.project(ints({1, -1})) == ints({1, -1}));
}

TEST_CASE("restricted types follow the classification") {
  std::vector<std::pair<std::string, std::string>> expect = {
      {"su(1,2)", "BC1"}, {"su(2,2)", "C2"},   {"su(2,5)", "BC2"}, {"sl(3,H)", "A2"},
      {"so(2,5)", "B2"},  {"so(3,3)", "A3"},   {"so(4,4)", "D4"},  {"so(3,5)", "B3"},
      {"sp(2·3,R)", "C3"}, {"sp(2·,1,3)", "BC1"}, {"sp(2·,2,2)", "C2"}, {"so*(8)", "C2"},
      {"so*(10)", "BC2"}, {"EI", "E6"},     {"EII", "F4"},     {"EIII", "BC2"},
      {"EIV", "A2"},      {"EV", "E7"},     {"EVI", "F4"},     {"EVII", "C3"},
      {"EVIII", "E8"},    {"EIX", "F4"},    {"FI", "F4"},      {"FII", "BC1"},
      {"G", "G2"},        {"so(1,3)", "A1"}, {"so(1,2)", "A1"},
  };
  for (const auto& [name, type] : expect) {
    CAPTURE(name);
    CHECK(cat().lookup(name).restricted_type.name() == type);
  }
}

TEST_CASE("compact forms have an empty restricted system") {
  for (const char* n : {"su(4)", "so(7)", "sp(2·,0,3)", "sl(1,H)"}) {
    auto f = cat().lookup(n);
    CHECK(f.compact());
    CHECK(f.restricted_roots.empty());
    CHECK(f.projection.is_zero());
  }
}

TEST_CASE("name errors") {
  CHECK_THROWS_AS(cat().lookup("so(2,2)"), ParameterOutOfRange);
  CHECK_THROWS_AS(cat().lookup("su(3,1)"), ParameterOutOfRange);
  CHECK_THROWS_AS(cat().lookup("so*(7)"), ParameterOutOfRange);
  CHECK_THROWS_AS(cat().lookup("EX"), UnknownAlgebra);
  try {
    cat().lookup("su(1;2)");
    FAIL("expected an error");
  } catch (const UnknownAlgebra& e) {
    CHECK(std::string(e.what()).find("su(p,q)") != std::string::npos);
  }
  try {
    cat().lookup("so(4,1)");
    FAIL("expected an error");
  } catch (const ParameterOutOfRange& e) {
    CHECK(std::string(e.what()).find("0 <= p <= n/2") != std::string::npos);
  }
}

TEST_CASE("every catalogued form up to rank 8 satisfies the restricted-root invariants") {
  auto names = cat().instances(8);
  CHECK(names.size() > 100);
  for (const auto& name : names) {
    CAPTURE(name);
    auto f = cat().lookup(name);
    const auto& rs = f.complex_system;
    // projection is idempotent
    CHECK(f.projection * f.projection == f.projection);
    // every projected root is zero or a restricted root
    for (const auto& a : rs.roots) {
      Vec p = f.project(a);
      CHECK((is_zero(p) || f.is_restricted_root(p)));
    }
    // restricted roots with multiplicities are closed under negation and
    // under the restricted Weyl group
    for (const auto& [v, m] : f.restricted_multiplicity) {
      CHECK(f.restricted_multiplicity.at(-v) == m);
      for (const auto& s : f.restricted_simple) {
        Vec w = reflect_in(s, v);
        REQUIRE(f.is_restricted_root(w));
        CHECK(f.restricted_multiplicity.at(w) == m);
      }
    }
    Matrix w = restricted_w0(f);
    CHECK(w * w == Matrix::identity(rs.ambient_dim));
    for (const auto& v : f.restricted_roots) CHECK(f.is_restricted_root(w.apply(v)));
    // restricted system of a noncompact simple form is irreducible
    if (!f.compact()) CHECK(dynkin_components(f.restricted_simple).size() == 1);
    if (f.split()) {
      CHECK(f.restricted_type == canonical_type({family_name(rs.family), rs.rank}));
      CHECK(f.black.empty());
    }
  }
}

TEST_CASE("split forms: projection is the identity on the root span") {
  for (const char* n : {"sl(4,R)", "so(3,4)", "so(4,4)", "sp(2·3,R)", "EI", "FI", "G"}) {
    auto f = cat().lookup(n);
    CHECK(f.split());
    for (const auto& a : f.complex_system.roots) CHECK(f.project(a) == a);
  }
}

TEST_CASE("restricted w0 examples") {
  auto a = cat().lookup("so(1,4)");
  auto w = restricted_w0(a);
  CHECK(w.apply(ints({1, 0})) == ints({-1, 0}));
  CHECK(w.apply(ints({0, 1})) == ints({0, 1}));
  auto b = cat().lookup("so(2,3)");
  CHECK(restricted_w0(b) == Rational(-1) * Matrix::identity(2));
}

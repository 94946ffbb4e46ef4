#include "w0/orthoset.hpp"

#include <algorithm>

#include "w0/errors.hpp"
#include "w0/rootsys.hpp"

namespace w0 {

namespace {

// Split rows of the exceptional tables, in simple-root coordinates.
const std::vector<std::vector<int>> kE6 = {
    {0, 0, 0, 1, 0, 0}, {0, 0, 1, 1, 1, 0}, {1, 0, 1, 1, 1, 1}, {1, 2, 2, 3, 2, 1}};
const std::vector<std::vector<int>> kE7 = {
    {0, 1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0}, {0, 1, 1, 2, 1, 0, 0},
    {0, 0, 0, 0, 1, 0, 0}, {0, 1, 1, 2, 2, 2, 1}, {0, 0, 0, 0, 0, 0, 1},
    {2, 2, 3, 4, 3, 2, 1}};
const std::vector<std::vector<int>> kE8 = {
    {0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 0}, {0, 1, 1, 2, 1, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0}, {0, 1, 1, 2, 2, 2, 1, 0}, {0, 0, 0, 0, 0, 0, 1, 0},
    {2, 3, 4, 6, 5, 4, 3, 2}, {2, 2, 3, 4, 3, 2, 1, 0}};
const std::vector<std::vector<int>> kF4 = {
    {0, 1, 0, 0}, {0, 1, 2, 0}, {0, 1, 2, 2}, {2, 3, 4, 2}};
const std::vector<std::vector<int>> kG2 = {{1, 0}, {3, 2}};

Vec combo(const std::vector<Vec>& basis, const std::vector<int>& c) {
  Vec v = zeros(basis[0].size());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) v += Rational(c[i]) * basis[i];
  return v;
}

Vec unit(std::size_t n, std::size_t i, int c = 1) {
  Vec v = zeros(n);
  v[i] = c;
  return v;
}

}  // namespace

StandardSystem standard_system(const DynkinType& type) {
  StandardSystem s;
  s.type = type;
  if (type.family == "BC") {
    auto b = build_root_system(Family::B, type.rank);
    s.simple = b.simple_roots;
    s.roots = b.roots;
    s.ambient_dim = b.ambient_dim;
    for (int i = 0; i < type.rank; ++i) {
      s.roots.push_back(unit(type.rank, i, 2));
      s.roots.push_back(unit(type.rank, i, -2));
    }
  } else {
    auto rs = build_root_system(type.family, type.rank);
    s.simple = rs.simple_roots;
    s.roots = rs.roots;
    s.ambient_dim = rs.ambient_dim;
  }
  std::sort(s.roots.begin(), s.roots.end(), lex_less);
  return s;
}

OrthoSet ortho_set(const std::string& family, int r) {
  OrthoSet out;
  out.type = {family, r};
  auto bad = [&] {
    throw InvalidArgument("no strongly orthogonal set for type " + family + std::to_string(r));
  };
  if (r < 1) bad();
  auto& xi = out.roots;
  if (family == "A") {
    for (int i = 1; i <= (r + 1) / 2; ++i)
      xi.push_back(unit(r + 1, i - 1) - unit(r + 1, r + 1 - i));
  } else if (family == "B" || family == "D") {
    if (family == "D" && r < 3) bad();
    int pairs = (family == "D" && r % 2 == 1) ? (r - 1) / 2 : r / 2;
    for (int i = 1; i <= pairs; ++i) {
      xi.push_back(unit(r, 2 * i - 2) - unit(r, 2 * i - 1));
      xi.push_back(unit(r, 2 * i - 2) + unit(r, 2 * i - 1));
    }
    if (family == "B" && r % 2 == 1) xi.push_back(unit(r, r - 1));
  } else if (family == "C" || family == "BC") {
    for (int i = 0; i < r; ++i) xi.push_back(unit(r, i, 2));
  } else if (family == "E" || family == "F" || family == "G") {
    const std::vector<std::vector<int>>* rows = nullptr;
    if (family == "E" && r == 6) rows = &kE6;
    if (family == "E" && r == 7) rows = &kE7;
    if (family == "E" && r == 8) rows = &kE8;
    if (family == "F" && r == 4) rows = &kF4;
    if (family == "G" && r == 2) rows = &kG2;
    if (!rows) bad();
    auto rs = build_root_system(family, r);
    for (const auto& c : *rows) xi.push_back(combo(rs.simple_roots, c));
  } else {
    bad();
  }
  return out;
}

namespace {

std::vector<Vec> transport(const DynkinType& type, const std::vector<Vec>& target_simple) {
  auto std_sys = standard_system(type);
  auto xi = ortho_set(type.family, type.rank);
  std::vector<Vec> out;
  for (const auto& x : xi.roots) {
    auto c = coordinates_in(std_sys.simple, x);
    if (!c) throw ConsistencyError("strongly orthogonal root outside the root span");
    Vec v = zeros(target_simple[0].size());
    for (std::size_t i = 0; i < c->size(); ++i) v += (*c)[i] * target_simple[i];
    out.push_back(v);
  }
  return out;
}

}  // namespace

OrthoSet ortho_set(const RealForm& form) {
  OrthoSet out;
  out.type = form.restricted_type;
  if (form.compact()) return out;
  if (form.is_complex) throw InvalidArgument("ortho_set needs a real form");
  out.roots = transport(form.restricted_type, form.restricted_simple);
  return out;
}

std::vector<Vec> ortho_set_of_simple_system(const std::vector<Vec>& simple) {
  std::vector<Vec> out;
  for (const auto& comp : dynkin_components(simple)) {
    std::vector<Vec> sub;
    for (int i : comp) sub.push_back(simple[i]);
    auto od = bourbaki_order(sub);
    std::vector<Vec> ordered;
    for (int k : od.order) ordered.push_back(sub[k]);
    for (auto& v : transport(od.type, ordered)) out.push_back(std::move(v));
  }
  return out;
}

Matrix reflection_product(const std::vector<Vec>& xi, std::size_t n) {
  std::vector<Vec> cols;
  for (std::size_t c = 0; c < n; ++c) {
    Vec v = zeros(n);
    v[c] = 1;
    for (const auto& x : xi) v = reflect_in(x, v);
    cols.push_back(v);
  }
  return Matrix::from_columns(cols);
}

OrthoVerdict verify_ortho_set(const std::vector<Vec>& xi, const std::vector<Vec>& roots,
                              const Matrix& w0) {
  auto is_root = [&](const Vec& v) {
    return std::binary_search(roots.begin(), roots.end(), v, lex_less);
  };
  for (const auto& x : xi)
    if (!is_root(x)) throw InvalidArgument(to_string(x) + " is not a root of the system");
  OrthoVerdict v;
  for (std::size_t i = 0; i < xi.size(); ++i)
    for (std::size_t j = i + 1; j < xi.size(); ++j) {
      if (xi[i] == xi[j] || xi[i] == -xi[j]) {
        v.ok = false;
        v.violations.push_back("repeated root " + to_string(xi[i]));
        continue;
      }
      if (is_root(xi[i] + xi[j]) || is_root(xi[i] - xi[j])) {
        v.ok = false;
        v.violations.push_back("not strongly orthogonal: " + to_string(xi[i]) + ", " +
                               to_string(xi[j]));
      }
    }
  Matrix prod = reflection_product(xi, w0.rows());
  if (!(prod == w0)) {
    v.ok = false;
    v.violations.push_back("product of reflections " + prod.to_string() + " differs from w0 " +
                           w0.to_string());
  }
  return v;
}

OrthoVerdict verify_ortho_set(const std::vector<Vec>& xi, const RealForm& form) {
  return verify_ortho_set(xi, form.restricted_roots, restricted_w0(form));
}

}  // namespace w0

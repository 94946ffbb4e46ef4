#include "w0/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "w0/errors.hpp"

namespace w0 {

namespace {

// A classical matrix algebra {X : X^T J + J X = 0} (or sl(N) when there is
// no form), with the standard basis vector i carrying weight weights[i]
// under the diagonal Cartan subalgebra.
struct Model {
  std::size_t N = 0;
  bool has_form = false;
  Matrix J;
  std::vector<Vec> weights;
  std::vector<Matrix> coords;  // coords[k] = diag(weights[i][k])
};

Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

Matrix bracket(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

void require_supported(const RealForm& form) {
  if (form.is_complex)
    throw InvalidArgument("the matrix oracle covers real forms only, not " + form.name);
  const auto& g = form.complex_system;
  if (g.rank > 4)
    throw TooLarge("the matrix oracle is limited to rank 4; " + form.name + " has rank " +
                   std::to_string(g.rank));
  switch (g.family) {
    case Family::A: case Family::B: case Family::C: case Family::D: case Family::D2special:
      return;
    default:
      throw InvalidArgument("no classical matrix model for " + form.name);
  }
}

Model make_model(const RootSystem& g) {
  Model m;
  const std::size_t n = static_cast<std::size_t>(g.rank);
  auto e = [&](std::size_t k, int s) {
    Vec v = zeros(g.ambient_dim);
    v[k] = s;
    return v;
  };
  if (g.family == Family::A) {
    m.N = n + 1;
    for (std::size_t i = 0; i < m.N; ++i) m.weights.push_back(e(i, 1));
  } else {
    const bool odd = g.family == Family::B;
    m.N = 2 * n + (odd ? 1 : 0);
    m.has_form = true;
    m.J = Matrix(m.N, m.N);
    for (std::size_t i = 0; i < m.N; ++i) {
      std::size_t mirror = m.N - 1 - i;
      if (i < n) m.weights.push_back(e(i, 1));
      else if (odd && i == n) m.weights.push_back(zeros(g.ambient_dim));
      else m.weights.push_back(e(mirror, -1));
      // Skew for the symplectic family, symmetric otherwise.
      m.J(i, mirror) = (g.family == Family::C && i >= n) ? -1 : 1;
    }
  }
  for (int k = 0; k < g.ambient_dim; ++k) {
    Matrix d(m.N, m.N);
    for (std::size_t i = 0; i < m.N; ++i) d(i, i) = m.weights[i][k];
    m.coords.push_back(d);
  }
  return m;
}

Matrix cartan_element(const Model& m, const Vec& h) {
  Matrix out(m.N, m.N);
  for (std::size_t k = 0; k < h.size(); ++k)
    if (h[k] != 0) out = out + h[k] * m.coords[k];
  return out;
}

Vec coroot(const Vec& a) { return (Rational(2) / dot(a, a)) * a; }

Matrix root_vector(const Model& m, const Vec& root) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < m.N; ++i)
    for (std::size_t j = 0; j < m.N; ++j)
      if (i != j && m.weights[i] - m.weights[j] == root) cells.emplace_back(i, j);
  if (cells.empty()) throw ConsistencyError("no matrix entry carries root " + to_string(root));
  Matrix x;
  if (!m.has_form) {
    if (cells.size() != 1) throw ConsistencyError("ambiguous root space");
    x = unit(m.N, cells[0].first, cells[0].second);
  } else {
    // Impose X^T J + J X = 0 on the span of the candidate cells.
    std::vector<Vec> columns;
    for (auto [i, j] : cells) {
      Matrix u = unit(m.N, i, j);
      columns.push_back(flatten(u.transpose() * m.J + m.J * u));
    }
    auto ker = kernel(Matrix::from_columns(columns));
    if (ker.size() != 1)
      throw ConsistencyError("root space of " + to_string(root) + " is not a line");
    x = Matrix(m.N, m.N);
    for (std::size_t c = 0; c < cells.size(); ++c) x(cells[c].first, cells[c].second) = ker[0][c];
  }
  return x;
}

// The defining realisation with a Chevalley-type basis.
struct Algebra {
  Model model;
  std::vector<Matrix> basis;  // simple coroots first, then root vectors
  std::vector<Vec> roots;     // root of basis[rank + r]
  std::size_t rank = 0;
  Matrix left_inverse;        // flattened matrix -> basis coordinates

  Vec coordinates(const Matrix& x) const {
    Vec c = left_inverse.apply(flatten(x));
    Matrix back(model.N, model.N);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (c[k] != 0) back = back + c[k] * basis[k];
    if (!(back == x)) throw ConsistencyError("matrix outside the algebra");
    return c;
  }
};

Algebra make_algebra(const RootSystem& g) {
  Algebra a;
  a.model = make_model(g);
  a.rank = static_cast<std::size_t>(g.rank);
  for (const auto& s : g.simple_roots) a.basis.push_back(cartan_element(a.model, coroot(s)));
  std::map<Vec, Matrix, bool (*)(const Vec&, const Vec&)> vectors(&lex_less);
  for (const auto& r : g.positive_roots) {
    Matrix e = root_vector(a.model, r);
    Matrix f = root_vector(a.model, -r);
    Matrix h = cartan_element(a.model, coroot(r));
    Matrix ef = bracket(e, f);
    // ef is a multiple of h; find the factor from one nonzero entry.
    Rational c;
    for (std::size_t i = 0; i < a.model.N && c == 0; ++i)
      if (h(i, i) != 0) c = ef(i, i) / h(i, i);
    if (c == 0 || !(ef == c * h)) throw ConsistencyError("[e, f] is not a coroot multiple");
    vectors.emplace(r, e);
    vectors.emplace(-r, (Rational(1) / c) * f);
  }
  for (const auto& r : g.roots) {
    a.roots.push_back(r);
    a.basis.push_back(vectors.at(r));
  }
  std::vector<Vec> cols;
  for (const auto& b : a.basis) cols.push_back(flatten(b));
  Matrix B = Matrix::from_columns(cols);
  Matrix Bt = B.transpose();
  auto gram_inv = inverse(Bt * B);
  if (!gram_inv) throw ConsistencyError("Chevalley basis is degenerate");
  a.left_inverse = *gram_inv * Bt;
  return a;
}

// Builds a representation from the image of a single algebra element.
MatrixRep assemble(const Algebra& alg, const RootSystem& g, std::string description,
                   const std::function<Matrix(const Matrix&)>& image);

// Joint weight spaces of the coroot images, keyed by Dynkin labels.
std::map<Labels, std::size_t> weight_dimensions(const std::vector<Matrix>& coroots,
                                                std::size_t dim) {
  std::map<Labels, std::size_t> out;
  bool diagonal = true;
  for (const auto& c : coroots)
    for (std::size_t i = 0; i < dim && diagonal; ++i)
      for (std::size_t j = 0; j < dim && diagonal; ++j)
        if (i != j && c(i, j) != 0) diagonal = false;
  if (diagonal) {
    for (std::size_t i = 0; i < dim; ++i) {
      Labels l;
      for (const auto& c : coroots) {
        if (!is_integral(c(i, i))) throw ConsistencyError("non-integral coroot eigenvalue");
        l.push_back(c(i, i).get_num().get_si());
      }
      ++out[l];
    }
    return out;
  }
  std::vector<Vec> start;
  for (std::size_t i = 0; i < dim; ++i) {
    Vec v = zeros(dim);
    v[i] = 1;
    start.push_back(v);
  }
  Labels labels;
  std::function<void(std::size_t, const std::vector<Vec>&)> split =
      [&](std::size_t i, const std::vector<Vec>& space) {
        if (space.empty()) return;
        if (i == coroots.size()) {
          out[labels] = space.size();
          return;
        }
        const std::int64_t bound = static_cast<std::int64_t>(dim);
        std::size_t found = 0;
        for (std::int64_t k = -bound; k <= bound && found < space.size(); ++k) {
          Matrix shifted = coroots[i] - Rational(k) * Matrix::identity(dim);
          std::vector<Vec> images;
          for (const auto& v : space) images.push_back(shifted.apply(v));
          auto ker = kernel(Matrix::from_columns(images));
          if (ker.empty()) continue;
          std::vector<Vec> sub;
          for (const auto& c : ker) {
            Vec v = zeros(dim);
            for (std::size_t j = 0; j < space.size(); ++j)
              if (c[j] != 0) v += c[j] * space[j];
            sub.push_back(v);
          }
          found += sub.size();
          labels.push_back(k);
          split(i + 1, sub);
          labels.pop_back();
        }
        if (found != space.size())
          throw ConsistencyError("coroot image is not diagonalisable over the integers");
      };
  split(0, start);
  return out;
}

std::vector<Vec> peel_constituents(const RootSystem& g, std::map<Labels, std::size_t> dims) {
  std::vector<Vec> out;
  while (!dims.empty()) {
    const Labels* top = nullptr;
    Rational best;
    for (const auto& [l, d] : dims) {
      Rational h = dot(g.from_labels(l), g.weyl_vector);
      if (!top || h > best) {
        top = &l;
        best = h;
      }
    }
    Vec hw = g.from_labels(*top);
    out.push_back(hw);
    CharacterTable table(g, hw);
    table.for_each_weight([&](const Labels& l, std::int64_t mult) {
      auto it = dims.find(l);
      if (it == dims.end() || static_cast<std::int64_t>(it->second) < mult)
        throw ConsistencyError("weights do not decompose into characters");
      it->second -= static_cast<std::size_t>(mult);
      if (it->second == 0) dims.erase(it);
    });
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

MatrixRep assemble(const Algebra& alg, const RootSystem& g, std::string description,
                   const std::function<Matrix(const Matrix&)>& image) {
  MatrixRep rep;
  rep.description = std::move(description);
  for (std::size_t k = 0; k < alg.rank; ++k) rep.coroots.push_back(image(alg.basis[k]));
  for (std::size_t r = 0; r < alg.roots.size(); ++r)
    rep.root_images.emplace_back(alg.roots[r], image(alg.basis[alg.rank + r]));
  rep.dimension = rep.coroots.empty() ? 0 : rep.coroots[0].rows();
  rep.highest_weights = peel_constituents(g, weight_dimensions(rep.coroots, rep.dimension));
  return rep;
}

Matrix rep_exp(const Matrix& x) {
  const std::size_t n = x.rows();
  Matrix result = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = (Rational(1, static_cast<unsigned long>(k))) * (term * x);
    if (term.is_zero()) return result;
    result = result + term;
  }
  if (!(term * x).is_zero()) throw ConsistencyError("exponent is not nilpotent");
  return result;
}

}  // namespace

const Matrix& MatrixRep::root_image(const Vec& root) const {
  for (const auto& [r, m] : root_images)
    if (r == root) return m;
  throw InvalidArgument("not a root: " + to_string(root));
}

MatrixRep adjoint_rep(const RealForm& form) {
  require_supported(form);
  const auto& g = form.complex_system;
  Algebra alg = make_algebra(g);
  return assemble(alg, g, "adjoint of " + form.name, [&](const Matrix& x) {
    std::vector<Vec> cols;
    for (const auto& b : alg.basis) cols.push_back(alg.coordinates(bracket(x, b)));
    return Matrix::from_columns(cols);
  });
}

MatrixRep sym2_standard_rep(const RealForm& form) {
  require_supported(form);
  const auto& g = form.complex_system;
  if (g.family != Family::B && g.family != Family::D && g.family != Family::D2special)
    throw InvalidArgument("the symmetric square model needs an orthogonal algebra, not " +
                          form.name);
  Algebra alg = make_algebra(g);
  const Model& m = alg.model;
  const std::size_t N = m.N;
  // Symmetric matrices as vectors of their upper triangles.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j) cells.emplace_back(i, j);
  auto to_matrix = [&](const Vec& v) {
    Matrix s(N, N);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      s(cells[c].first, cells[c].second) = v[c];
      s(cells[c].second, cells[c].first) = v[c];
    }
    return s;
  };
  auto to_vec = [&](const Matrix& s) {
    Vec v;
    for (auto [i, j] : cells) v.push_back(s(i, j));
    return v;
  };
  // tr(J S) = 0 cuts out the complement of the invariant quadratic form.
  Vec trace_row;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    Matrix s = to_matrix([&] {
      Vec v = zeros(cells.size());
      v[c] = 1;
      return v;
    }());
    Matrix js = m.J * s;
    Rational t;
    for (std::size_t i = 0; i < N; ++i) t += js(i, i);
    trace_row.push_back(t);
  }
  std::vector<Vec> sub = kernel(Matrix::from_rows({trace_row}));
  Matrix S = Matrix::from_columns(sub);
  auto gram_inv = inverse(S.transpose() * S);
  Matrix left = *gram_inv * S.transpose();
  return assemble(alg, g, "traceless Sym^2 of the standard representation of " + form.name,
                  [&](const Matrix& x) {
                    std::vector<Vec> cols;
                    for (const auto& b : sub) {
                      Matrix s = to_matrix(b);
                      Vec img = to_vec(x * s + s * x.transpose());
                      Vec c = left.apply(img);
                      if (!(S.apply(c) == img))
                        throw ConsistencyError("traceless subspace is not stable");
                      cols.push_back(c);
                    }
                    return Matrix::from_columns(cols);
                  });
}

std::size_t bracket_defects(const MatrixRep& rep, const RealForm& form) {
  require_supported(form);
  Algebra alg = make_algebra(form.complex_system);
  std::vector<const Matrix*> images;
  for (const auto& c : rep.coroots) images.push_back(&c);
  for (const auto& [r, mat] : rep.root_images) images.push_back(&mat);
  if (images.size() != alg.basis.size())
    throw InvalidArgument("representation does not match " + form.name);
  std::size_t defects = 0;
  for (std::size_t a = 0; a < alg.basis.size(); ++a)
    for (std::size_t b = a + 1; b < alg.basis.size(); ++b) {
      Vec c = alg.coordinates(bracket(alg.basis[a], alg.basis[b]));
      Matrix expect(rep.dimension, rep.dimension);
      for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) expect = expect + c[k] * *images[k];
      if (!(bracket(*images[a], *images[b]) == expect)) ++defects;
    }
  return defects;
}

std::vector<int> w0_lift_word(const RealForm& form) {
  if (form.is_complex) throw InvalidArgument("w0 lift needs a real form");
  const auto& g = form.complex_system;
  // P(rho) has the roots vanishing on a as its only orthogonal roots, so any
  // Weyl element sending it to its restricted-w0 image is a lift.
  Matrix w0a = restricted_w0(form);
  Vec x = form.project(g.weyl_vector);
  Vec y = w0a.apply(x);
  Dominated dx = dominate(g, x);
  Dominated dy = dominate(g, y);
  if (dx.dominant != dy.dominant)
    throw ConsistencyError("restricted w0 is not induced by the Weyl group of " + form.name);
  std::vector<int> word = dy.word;
  word.insert(word.end(), dx.word.rbegin(), dx.word.rend());
  for (std::size_t c = 0; c < form.projection.cols(); ++c) {
    Vec a = form.projection.column(c);
    Vec v = a;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      v = reflect_in(g.simple_roots[*it], v);
    if (v != w0a.apply(a)) throw ConsistencyError("lifted word misses w0 on a");
  }
  return word;
}

Matrix w0_rep_matrix(const MatrixRep& rep, const RealForm& form) {
  const auto& g = form.complex_system;
  Matrix out = Matrix::identity(rep.dimension);
  for (int i : w0_lift_word(form)) {
    const Matrix& e = rep.root_image(g.simple_roots[i]);
    const Matrix& f = rep.root_image(-g.simple_roots[i]);
    Matrix ee = rep_exp(e);
    out = out * (ee * rep_exp(Rational(-1) * f) * ee);
  }
  return out;
}

std::vector<Vec> invariant_basis(const MatrixRep& rep, const RealForm& form) {
  std::vector<Vec> rows;
  auto add = [&](const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  };
  for (const auto& c : rep.coroots) add(c);
  for (const auto& [r, m] : rep.root_images)
    if (is_zero(form.project(r))) add(m);
  if (rows.empty()) rows.push_back(zeros(rep.dimension));
  return kernel(Matrix::from_rows(rows));
}

W0Action oracle_w0_on_invariants(const MatrixRep& rep, const RealForm& form) {
  require_supported(form);
  auto inv = invariant_basis(rep, form);
  if (inv.empty()) return W0Action::from_counts(0, 0);
  Matrix w = w0_rep_matrix(rep, form);
  const std::size_t d = inv.size();
  std::vector<Vec> cols;
  for (const auto& v : inv) {
    auto c = coordinates_in(inv, w.apply(v));
    if (!c) throw ConsistencyError("l-invariants are not stable under w0 in " + rep.description);
    cols.push_back(*c);
  }
  Matrix a = Matrix::from_columns(cols);
  Matrix id = Matrix::identity(d);
  if (!(a * a == id))
    throw ConsistencyError("w0 does not act as an involution on the invariants of " +
                           rep.description);
  std::size_t plus = kernel(a - id).size();
  std::size_t minus = kernel(a + id).size();
  if (plus + minus != d) throw ConsistencyError("w0 eigenvalues are not +-1");
  return W0Action::from_counts(static_cast<std::int64_t>(plus), static_cast<std::int64_t>(minus));
}

}  // namespace w0

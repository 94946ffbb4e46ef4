#include "w0/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "w0/errors.hpp"

namespace w0 {

namespace {

Vec unit(int n, int i, Rational c = 1) {
  Vec v = zeros(n);
  v[i] = c;
  return v;
}

Vec half_vec(std::initializer_list<int> twice) {
  Vec v;
  for (int t : twice) v.emplace_back(t, 2);
  for (auto& x : v) x.canonicalize();
  return v;
}

std::vector<Vec> bourbaki_simple_roots(Family f, int r) {
  std::vector<Vec> s;
  switch (f) {
    case Family::A:
      for (int i = 0; i < r; ++i) s.push_back(unit(r + 1, i) - unit(r + 1, i + 1));
      break;
    case Family::B:
    case Family::C:
    case Family::D:
      for (int i = 0; i + 1 < r; ++i) s.push_back(unit(r, i) - unit(r, i + 1));
      if (f == Family::B) s.push_back(unit(r, r - 1));
      if (f == Family::C) s.push_back(unit(r, r - 1, 2));
      if (f == Family::D) s.push_back(unit(r, r - 2) + unit(r, r - 1));
      break;
    case Family::E: {
      s.push_back(half_vec({1, -1, -1, -1, -1, -1, -1, 1}));
      s.push_back(unit(8, 0) + unit(8, 1));
      for (int i = 0; i + 2 < r; ++i) s.push_back(unit(8, i + 1) - unit(8, i));
      break;
    }
    case Family::F:
      s.push_back(unit(4, 1) - unit(4, 2));
      s.push_back(unit(4, 2) - unit(4, 3));
      s.push_back(unit(4, 3));
      s.push_back(half_vec({1, -1, -1, -1}));
      break;
    case Family::G:
      s.push_back(unit(3, 0) - unit(3, 1));
      s.push_back(unit(3, 1) + unit(3, 2) - unit(3, 0, 2));
      break;
    case Family::D2special:
      s.push_back(unit(2, 0) + unit(2, 1));
      s.push_back(unit(2, 0) - unit(2, 1));
      break;
  }
  return s;
}

void check_family_rank(Family f, int r) {
  auto bad = [&](const std::string& ranges) {
    throw InvalidArgument("invalid root system " + family_name(f) + std::to_string(r) +
                          ": valid ranges are " + ranges);
  };
  const std::string ranges =
      "A>=1, B>=1, C>=1, D>=3, E in {6,7,8}, F=4, G=2, D2special=2";
  switch (f) {
    case Family::A:
    case Family::B:
    case Family::C:
      if (r < 1) bad(ranges);
      break;
    case Family::D:
      if (r < 3) bad(ranges);
      break;
    case Family::E:
      if (r < 6 || r > 8) bad(ranges);
      break;
    case Family::F:
      if (r != 4) bad(ranges);
      break;
    case Family::G:
    case Family::D2special:
      if (r != 2) bad(ranges);
      break;
  }
}

// Order of an irreducible Weyl group from (rank, number of positive roots).
mpz_class irreducible_weyl_order(int n, std::size_t npos) {
  mpz_class fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  if (npos == std::size_t(n) * (n + 1) / 2) return fact * (n + 1);  // A_n
  if (npos == std::size_t(n) * n) {                                   // B_n, C_n
    mpz_class two = 1;
    two <<= n;
    return two * fact;
  }
  if (n >= 4 && npos == std::size_t(n) * (n - 1)) {  // D_n
    mpz_class two = 1;
    two <<= (n - 1);
    return two * fact;
  }
  if (n == 6 && npos == 36) return 51840;
  if (n == 7 && npos == 63) return 2903040;
  if (n == 8 && npos == 120) return 696729600;
  if (n == 4 && npos == 24) return 1152;
  if (n == 2 && npos == 6) return 12;
  throw ConsistencyError("unrecognised irreducible Weyl group");
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::D2special: return "D2special";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "E") return Family::E;
  if (s == "F") return Family::F;
  if (s == "G") return Family::G;
  if (s == "D2special") return Family::D2special;
  throw InvalidArgument("unknown root system family '" + s + "'");
}

std::size_t LabelsHash::operator()(const Labels& l) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : l) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

RootSystem RootSystem::from_simple_roots(const std::vector<Vec>& simple) {
  RootSystem rs;
  rs.simple_roots = simple;
  rs.rank = static_cast<int>(simple.size());
  rs.ambient_dim = simple.empty() ? 0 : static_cast<int>(simple[0].size());
  rs.finish();
  return rs;
}

void RootSystem::finish() {
  const int n = rank;
  if (n > 0 && rank != static_cast<int>(w0::rank(Matrix::from_rows(simple_roots))))
    throw InvalidArgument("simple roots are linearly dependent");
  simple_coroots_.clear();
  for (const auto& a : simple_roots) simple_coroots_.push_back((2 / dot(a, a)) * a);

  cartan.assign(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational c = coroot_pairing(simple_roots[i], simple_roots[j]);
      if (!w0::is_integral(c)) throw InvalidArgument("simple roots are not crystallographic");
      cartan[i][j] = c.get_num().get_si();
    }

  // connected components and relative lengths
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < n; ++y)
        if (comp[y] < 0 && cartan[x][y] != 0) {
          comp[y] = ncomp;
          stack.push_back(y);
        }
    }
    ++ncomp;
  }
  length_class.assign(n, 1);
  for (int c = 0; c < ncomp; ++c) {
    Rational shortest = -1;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) {
        Rational l = dot(simple_roots[i], simple_roots[i]);
        if (shortest < 0 || l < shortest) shortest = l;
      }
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) {
        Rational ratio = dot(simple_roots[i], simple_roots[i]) / shortest;
        length_class[i] = ratio.get_num().get_si();
      }
  }

  // positive roots by root strings
  positive_root_coords.clear();
  std::set<Labels> seen;
  for (int i = 0; i < n; ++i) {
    Labels e(n, 0);
    e[i] = 1;
    positive_root_coords.push_back(e);
    seen.insert(e);
  }
  for (std::size_t k = 0; k < positive_root_coords.size(); ++k) {
    Labels beta = positive_root_coords[k];
    for (int i = 0; i < n; ++i) {
      std::int64_t pairing = 0;
      for (int j = 0; j < n; ++j) pairing += beta[j] * cartan[j][i];
      int p = 0;
      Labels down = beta;
      while (true) {
        down[i] -= 1;
        if (!seen.count(down)) break;
        ++p;
      }
      if (p - pairing > 0) {
        Labels up = beta;
        up[i] += 1;
        if (seen.insert(up).second) positive_root_coords.push_back(up);
      }
    }
  }
  std::stable_sort(positive_root_coords.begin(), positive_root_coords.end(),
                   [](const Labels& a, const Labels& b) {
                     return std::accumulate(a.begin(), a.end(), std::int64_t{0}) <
                            std::accumulate(b.begin(), b.end(), std::int64_t{0});
                   });

  positive_roots.clear();
  positive_root_labels.clear();
  for (const auto& c : positive_root_coords) {
    Vec v = zeros(ambient_dim);
    Labels lab(n, 0);
    for (int j = 0; j < n; ++j) {
      if (c[j] == 0) continue;
      v += Rational(c[j]) * simple_roots[j];
      for (int i = 0; i < n; ++i) lab[i] += c[j] * cartan[j][i];
    }
    positive_roots.push_back(v);
    positive_root_labels.push_back(lab);
  }
  roots = positive_roots;
  for (const auto& p : positive_roots) roots.push_back(-p);
  std::sort(roots.begin(), roots.end(), lex_less);

  fundamental_weights.clear();
  if (n > 0) {
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = cartan[i][j];
    auto inv = inverse(a);
    if (!inv) throw InvalidArgument("degenerate Cartan matrix");
    for (int j = 0; j < n; ++j) {
      Vec w = zeros(ambient_dim);
      for (int m = 0; m < n; ++m) w += (*inv)(j, m) * simple_roots[m];
      fundamental_weights.push_back(w);
    }
  }
  weyl_vector = zeros(ambient_dim);
  for (const auto& w : fundamental_weights) weyl_vector += w;
}

std::string RootSystem::name() const {
  return family_name(family) + std::to_string(rank);
}

bool RootSystem::is_root(const Vec& v) const {
  return std::binary_search(roots.begin(), roots.end(), v, lex_less);
}

Vec RootSystem::dynkin_labels(const Vec& v) const {
  Vec l(rank);
  for (int i = 0; i < rank; ++i) l[i] = dot(v, simple_coroots_[i]);
  return l;
}

Labels RootSystem::integral_labels(const Vec& v) const {
  Vec l = dynkin_labels(v);
  Labels out(rank);
  for (int i = 0; i < rank; ++i) {
    if (!w0::is_integral(l[i]))
      throw InvalidArgument("weight " + to_string(v) + " is not integral for " + name());
    out[i] = l[i].get_num().get_si();
  }
  return out;
}

Vec RootSystem::from_labels(const Labels& l) const {
  Vec v = zeros(ambient_dim);
  for (int i = 0; i < rank; ++i)
    if (l[i] != 0) v += Rational(l[i]) * fundamental_weights[i];
  return v;
}

Vec RootSystem::from_labels(const Vec& l) const {
  Vec v = zeros(ambient_dim);
  for (int i = 0; i < rank; ++i)
    if (l[i] != 0) v += l[i] * fundamental_weights[i];
  return v;
}

bool RootSystem::is_integral(const Vec& v) const {
  return w0::is_integral(dynkin_labels(v));
}

bool RootSystem::is_dominant(const Vec& v) const {
  for (const auto& x : dynkin_labels(v))
    if (x < 0) return false;
  return true;
}

bool RootSystem::labels_dominant(const Labels& l) {
  for (auto x : l)
    if (x < 0) return false;
  return true;
}

void RootSystem::reflect_labels(Labels& l, int i) const {
  const std::int64_t c = l[i];
  if (c == 0) return;
  const auto& row = cartan[i];
  for (int j = 0; j < rank; ++j) l[j] -= c * row[j];
}

int RootSystem::dominate_labels(Labels& l) const {
  int sign = 1;
  while (true) {
    int i = 0;
    while (i < rank && l[i] >= 0) ++i;
    if (i == rank) return sign;
    reflect_labels(l, i);
    sign = -sign;
  }
}

Matrix RootSystem::longest_element() const {
  Dominated d = dominate(*this, -weyl_vector);
  Matrix m = Matrix::identity(ambient_dim);
  std::vector<Vec> cols;
  for (int c = 0; c < ambient_dim; ++c) {
    Vec v = unit(ambient_dim, c);
    for (int i : d.word) v = reflect_in(simple_roots[i], v);
    cols.push_back(v);
  }
  return Matrix::from_columns(cols);
}

RootSystem build_root_system(Family family, int rank) {
  check_family_rank(family, rank);
  RootSystem rs = RootSystem::from_simple_roots(bourbaki_simple_roots(family, rank));
  rs.family = family;
  return rs;
}

RootSystem build_root_system(const std::string& family, int rank) {
  return build_root_system(parse_family(family), rank);
}

Vec reflect(const RootSystem& system, const Vec& root, const Vec& v) {
  if (!system.is_root(root))
    throw InvalidArgument(to_string(root) + " is not a root of " + system.name());
  return reflect_in(root, v);
}

Dominated dominate(const RootSystem& system, const Vec& v) {
  Dominated out;
  out.dominant = v;
  Vec labels = system.dynkin_labels(v);
  while (true) {
    int i = 0;
    while (i < system.rank && labels[i] >= 0) ++i;
    if (i == system.rank) break;
    Rational c = labels[i];
    out.dominant -= c * system.simple_roots[i];
    for (int j = 0; j < system.rank; ++j) labels[j] -= c * system.cartan[i][j];
    out.word.push_back(i);
    out.sign = -out.sign;
  }
  out.regular = std::all_of(labels.begin(), labels.end(),
                            [](const Rational& x) { return x > 0; });
  return out;
}

Vec apply_inverse_word(const RootSystem& system, const std::vector<int>& word,
                       const Vec& v) {
  Vec r = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    r = reflect_in(system.simple_roots[*it], r);
  return r;
}

Matrix longest_element_of(const std::vector<Vec>& simple, std::size_t ambient_dim) {
  if (simple.empty()) return Matrix::identity(ambient_dim);
  return RootSystem::from_simple_roots(simple).longest_element();
}

std::vector<std::pair<Vec, int>> signed_orbit(const std::vector<Vec>& generators,
                                              const Vec& seed, std::size_t limit) {
  std::map<Vec, int, decltype(&lex_less)> seen(&lex_less);
  std::vector<std::pair<Vec, int>> out;
  std::deque<std::pair<Vec, int>> queue;
  seen.emplace(seed, 1);
  queue.emplace_back(seed, 1);
  while (!queue.empty()) {
    auto [v, s] = queue.front();
    queue.pop_front();
    out.emplace_back(v, s);
    for (const auto& g : generators) {
      Vec w = reflect_in(g, v);
      if (seen.emplace(w, -s).second) {
        if (seen.size() > limit) throw TooLarge("Weyl orbit exceeds size limit");
        queue.emplace_back(std::move(w), -s);
      }
    }
  }
  return out;
}

mpz_class weyl_dimension(const RootSystem& system, const Vec& highest_weight) {
  Rational d = 1;
  Vec shifted = highest_weight + system.weyl_vector;
  for (const auto& a : system.positive_roots)
    d *= dot(shifted, a) / dot(system.weyl_vector, a);
  if (!is_integral(d)) throw ConsistencyError("Weyl dimension is not an integer");
  return d.get_num();
}

CharacterTable::CharacterTable(const RootSystem& system, const Vec& highest_weight,
                               std::size_t max_dominant)
    : system_(&system) {
  highest_ = system.integral_labels(highest_weight);
  if (!RootSystem::labels_dominant(highest_))
    throw NotDominant("weight " + to_string(highest_weight) + " is not dominant for " +
                      system.name());
  const int n = system.rank;
  const auto& d = system.length_class;

  // dominant weights below the highest one, with their depth in root
  // coordinates
  std::vector<std::pair<Labels, Labels>> found;  // (labels, depth)
  std::unordered_map<Labels, std::size_t, LabelsHash> pos;
  found.emplace_back(highest_, Labels(n, 0));
  pos.emplace(highest_, 0);
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (std::size_t r = 0; r < system.positive_root_labels.size(); ++r) {
      Labels mu = found[k].first;
      const auto& lab = system.positive_root_labels[r];
      bool dom = true;
      for (int i = 0; i < n; ++i) {
        mu[i] -= lab[i];
        if (mu[i] < 0) dom = false;
      }
      if (!dom || pos.count(mu)) continue;
      Labels depth = found[k].second;
      for (int i = 0; i < n; ++i) depth[i] += system.positive_root_coords[r][i];
      pos.emplace(mu, found.size());
      found.emplace_back(std::move(mu), std::move(depth));
      if (found.size() > max_dominant)
        throw TooLarge("too many dominant weights in V_lambda for " + system.name());
    }
  }
  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  auto height = [&](std::size_t i) {
    return std::accumulate(found[i].second.begin(), found[i].second.end(),
                           std::int64_t{0});
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return height(a) < height(b); });

  // labels of lambda + 2 rho, reused in every denominator
  Labels lam2rho(n);
  for (int i = 0; i < n; ++i) lam2rho[i] = highest_[i] + 2;

  for (std::size_t idx : order) {
    const Labels& mu = found[idx].first;
    const Labels& depth = found[idx].second;
    std::int64_t m = 1;
    if (idx != 0) {
      std::int64_t num = 0;
      for (std::size_t r = 0; r < system.positive_root_labels.size(); ++r) {
        const auto& lab = system.positive_root_labels[r];
        const auto& coords = system.positive_root_coords[r];
        Labels x = mu;
        while (true) {
          for (int i = 0; i < n; ++i) x[i] += lab[i];
          std::int64_t mx = multiplicity_labels(x);
          if (mx == 0) break;
          std::int64_t pair = 0;
          for (int i = 0; i < n; ++i) pair += x[i] * coords[i] * d[i];
          num += mx * pair;
        }
      }
      num *= 2;
      std::int64_t den = 0;
      for (int i = 0; i < n; ++i) den += depth[i] * d[i] * (lam2rho[i] + mu[i]);
      if (den <= 0 || num % den != 0)
        throw ConsistencyError("Freudenthal recursion produced a non-integer");
      m = num / den;
    }
    index_.emplace(mu, m);
  }
  for (std::size_t idx : order) dominant_.emplace_back(found[idx].first, index_[found[idx].first]);
}

std::int64_t CharacterTable::multiplicity_labels(Labels labels) const {
  system_->dominate_labels(labels);
  auto it = index_.find(labels);
  return it == index_.end() ? 0 : it->second;
}

std::int64_t CharacterTable::multiplicity(const Vec& weight) const {
  Vec l = system_->dynkin_labels(weight);
  if (!is_integral(l)) return 0;
  Labels li(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) li[i] = l[i].get_num().get_si();
  return multiplicity_labels(std::move(li));
}

std::size_t CharacterTable::orbit_size(const Labels& dom) const {
  const auto& rs = *system_;
  auto order_of = [&](const std::vector<int>& subset) {
    // product over connected components of the induced subdiagram
    mpz_class total = 1;
    std::vector<bool> done(rs.rank, true);
    for (int i : subset) done[i] = false;
    for (int s : subset) {
      if (done[s]) continue;
      std::vector<int> comp{s};
      done[s] = true;
      for (std::size_t k = 0; k < comp.size(); ++k)
        for (int t : subset)
          if (!done[t] && rs.cartan[comp[k]][t] != 0) {
            done[t] = true;
            comp.push_back(t);
          }
      std::vector<bool> in(rs.rank, false);
      for (int c : comp) in[c] = true;
      std::size_t npos = 0;
      for (const auto& coords : rs.positive_root_coords) {
        bool inside = true;
        for (int i = 0; i < rs.rank; ++i)
          if (coords[i] != 0 && !in[i]) inside = false;
        if (inside) ++npos;
      }
      total *= irreducible_weyl_order(static_cast<int>(comp.size()), npos);
    }
    return total;
  };
  std::vector<int> all(rs.rank), stab;
  std::iota(all.begin(), all.end(), 0);
  for (int i = 0; i < rs.rank; ++i)
    if (dom[i] == 0) stab.push_back(i);
  mpz_class q = order_of(all) / order_of(stab);
  return q.get_ui();
}

mpz_class CharacterTable::dimension() const {
  mpz_class total = 0;
  for (const auto& [labels, m] : dominant_) total += mpz_class(m) * orbit_size(labels);
  return total;
}

void CharacterTable::for_each_weight(
    const std::function<void(const Labels&, std::int64_t)>& visit,
    std::size_t limit) const {
  const auto& rs = *system_;
  std::size_t count = 0;
  std::vector<Labels> stack;
  for (const auto& [dom, m] : dominant_) {
    stack.clear();
    stack.push_back(dom);
    while (!stack.empty()) {
      Labels x = std::move(stack.back());
      stack.pop_back();
      if (++count > limit) throw TooLarge("V_lambda has too many weights to enumerate");
      visit(x, m);
      // children: s_i x with x_i > 0 whose first negative label is at i
      for (int i = 0; i < rs.rank; ++i) {
        if (x[i] <= 0) continue;
        Labels y = x;
        rs.reflect_labels(y, i);
        bool ok = true;
        for (int j = 0; j < i; ++j)
          if (y[j] < 0) {
            ok = false;
            break;
          }
        if (ok) stack.push_back(std::move(y));
      }
    }
  }
}

std::int64_t weight_multiplicity(const RootSystem& system, const Vec& lambda,
                                 const Vec& mu) {
  CharacterTable table(system, lambda);
  return table.multiplicity(mu);
}

}  // namespace w0

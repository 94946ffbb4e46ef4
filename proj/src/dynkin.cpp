#include "w0/dynkin.hpp"

#include <algorithm>

#include "w0/errors.hpp"

namespace w0 {

DynkinType canonical_type(DynkinType t) {
  if (t.rank == 1 && (t.family == "B" || t.family == "C")) return {"A", 1};
  if (t.rank == 3 && t.family == "D") return {"A", 3};
  return t;
}

std::vector<std::vector<int>> dynkin_components(const std::vector<Vec>& simple) {
  const int n = static_cast<int>(simple.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> members{i};
    comp[i] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < members.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (comp[j] < 0 && dot(simple[members[k]], simple[j]) != 0) {
          comp[j] = comp[i];
          members.push_back(j);
        }
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  return out;
}

namespace {

struct Graph {
  int n;
  std::vector<std::vector<std::int64_t>> bond;  // C_ij * C_ji
  std::vector<Rational> length;                 // squared lengths

  std::vector<int> neighbours(int i) const {
    std::vector<int> out;
    for (int j = 0; j < n; ++j)
      if (j != i && bond[i][j] != 0) out.push_back(j);
    return out;
  }
};

// Walk from `start` away from `prev` until a leaf, collecting nodes.
std::vector<int> walk(const Graph& g, int start, int prev) {
  std::vector<int> path{start};
  while (true) {
    int cur = path.back();
    int next = -1;
    for (int j : g.neighbours(cur))
      if (j != prev) {
        if (next >= 0) throw ConsistencyError("Dynkin diagram has a cycle or extra branch");
        next = j;
      }
    if (next < 0) return path;
    prev = cur;
    path.push_back(next);
  }
}

void check_hint(const DynkinType& found, const std::string& hint) {
  if (hint.empty() || hint == "BC") return;
  auto a = canonical_type(found);
  auto b = canonical_type({hint, found.rank});
  bool same = a == b || (found.rank == 2 && (a.family == "B" || a.family == "C") &&
                         (b.family == "B" || b.family == "C"));
  if (!same)
    throw ConsistencyError("expected a diagram of type " + hint + std::to_string(found.rank) +
                           ", found " + found.name());
}

}  // namespace

OrderedDiagram bourbaki_order(const std::vector<Vec>& simple, const std::string& hint) {
  const int n = static_cast<int>(simple.size());
  if (n == 0) throw InvalidArgument("empty simple system");
  Graph g{n, std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n, 0)), {}};
  for (int i = 0; i < n; ++i) {
    g.length.push_back(dot(simple[i], simple[i]));
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Rational c = coroot_pairing(simple[i], simple[j]) * coroot_pairing(simple[j], simple[i]);
      if (!is_integral(c) || c > 3)
        throw ConsistencyError("simple roots do not form a crystallographic system");
      g.bond[i][j] = c.get_num().get_si();
    }
  }
  if (dynkin_components(simple).size() != 1)
    throw ConsistencyError("Dynkin diagram is not connected");

  OrderedDiagram out;
  if (n == 1) {
    out.type = {"A", 1};
    out.order = {0};
    check_hint(out.type, hint);
    return out;
  }

  int branch = -1;
  for (int i = 0; i < n; ++i) {
    auto d = g.neighbours(i).size();
    if (d > 3) throw ConsistencyError("Dynkin node of degree > 3");
    if (d == 3) {
      if (branch >= 0) throw ConsistencyError("Dynkin diagram with two branch nodes");
      branch = i;
    }
  }

  if (branch >= 0) {
    std::vector<std::vector<int>> legs;
    for (int j : g.neighbours(branch)) legs.push_back(walk(g, j, branch));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (g.bond[i][j] > 1) throw ConsistencyError("branched diagram with a multiple bond");
    std::stable_sort(legs.begin(), legs.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    std::vector<std::size_t> len{legs[0].size(), legs[1].size(), legs[2].size()};
    if (len[0] == 1 && len[1] == 1) {
      // D_n: long leg from its leaf, then the branch node, then the fork
      out.type = {"D", n};
      std::vector<int> longleg(legs[2].rbegin(), legs[2].rend());
      out.order = longleg;
      out.order.push_back(branch);
      int x = legs[0][0], y = legs[1][0];
      out.order.push_back(std::min(x, y));
      out.order.push_back(std::max(x, y));
    } else if (len[0] == 1 && len[1] == 2 && len[2] >= 2 && len[2] <= 4) {
      out.type = {"E", n};
      // alpha1 - alpha3 is a leg of length two; alpha2 hangs off alpha4
      const auto& two = legs[1];
      out.order = {two[1], legs[0][0], two[0], branch};
      for (int x : legs[2]) out.order.push_back(x);
    } else {
      throw ConsistencyError("unrecognised branched Dynkin diagram");
    }
    check_hint(out.type, hint);
    return out;
  }

  // chain
  std::vector<int> ends;
  for (int i = 0; i < n; ++i)
    if (g.neighbours(i).size() == 1) ends.push_back(i);
  if (ends.size() != 2) throw ConsistencyError("Dynkin diagram is not a chain");
  std::vector<int> path = walk(g, std::min(ends[0], ends[1]), -1);
  int multi = -1;  // position k with a multiple bond between path[k], path[k+1]
  for (int k = 0; k + 1 < n; ++k)
    if (g.bond[path[k]][path[k + 1]] > 1) {
      if (multi >= 0) throw ConsistencyError("chain with two multiple bonds");
      multi = k;
    }
  if (multi < 0) {
    out.type = {"A", n};
    out.order = path;
  } else if (g.bond[path[multi]][path[multi + 1]] == 3) {
    if (n != 2) throw ConsistencyError("triple bond outside G2");
    out.type = {"G", 2};
    // alpha1 short
    out.order = g.length[path[0]] < g.length[path[1]] ? path
                                                      : std::vector<int>{path[1], path[0]};
  } else if (n == 2) {
    bool c = hint == "C";
    bool first_long = g.length[path[0]] > g.length[path[1]];
    out.type = {c ? "C" : "B", 2};
    // B2: alpha1 long; C2: alpha1 short
    if (first_long != !c) std::reverse(path.begin(), path.end());
    out.order = path;
  } else if (multi == 0 || multi == n - 2) {
    if (multi == 0) std::reverse(path.begin(), path.end());
    bool last_short = g.length[path[n - 1]] < g.length[path[n - 2]];
    out.type = {last_short ? "B" : "C", n};
    out.order = path;
  } else if (n == 4 && multi == 1) {
    // F4: alpha1, alpha2 long
    if (g.length[path[0]] < g.length[path[3]]) std::reverse(path.begin(), path.end());
    out.type = {"F", 4};
    out.order = path;
  } else {
    throw ConsistencyError("unrecognised Dynkin chain");
  }
  check_hint(out.type, hint);
  return out;
}

}  // namespace w0

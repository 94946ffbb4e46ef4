#pragma once

// Root systems in Bourbaki epsilon-coordinates, Weyl group actions, and
// Freudenthal weight multiplicities.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "w0/linalg.hpp"

namespace w0 {

enum class Family { A, B, C, D, E, F, G, D2special };

std::string family_name(Family f);
Family parse_family(const std::string& s);

using Labels = std::vector<std::int64_t>;

struct LabelsHash {
  std::size_t operator()(const Labels& l) const noexcept;
};

/// A root system with an ordered simple system. Built either from the
/// Bourbaki tables (build_root_system) or from an arbitrary linearly
/// independent set of simple roots living in some ambient Euclidean space
/// (from_simple_roots), in which case `family` is meaningless and the system
/// may be reducible.
class RootSystem {
 public:
  Family family = Family::A;
  int rank = 0;
  int ambient_dim = 0;
  std::vector<Vec> simple_roots;
  std::vector<Vec> fundamental_weights;
  std::vector<Vec> positive_roots;
  std::vector<Vec> roots;
  Vec weyl_vector;

  // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<std::vector<std::int64_t>> cartan;
  // (alpha_i, alpha_i) / (shortest simple root)^2, an integer in {1, 2, 3}
  // within each irreducible component.
  std::vector<std::int64_t> length_class;
  // simple-root coordinates of each positive root (same order as
  // positive_roots)
  std::vector<Labels> positive_root_coords;
  // Dynkin labels of each positive root
  std::vector<Labels> positive_root_labels;

  static RootSystem from_simple_roots(const std::vector<Vec>& simple);

  std::string name() const;
  bool is_root(const Vec& v) const;

  /// Dynkin labels <v, alpha_i^vee>. Throws InvalidArgument unless integral
  /// when `require_integral` is set.
  Vec dynkin_labels(const Vec& v) const;
  Labels integral_labels(const Vec& v) const;
  Vec from_labels(const Labels& l) const;
  Vec from_labels(const Vec& l) const;

  bool is_integral(const Vec& v) const;
  bool is_dominant(const Vec& v) const;

  /// Half the sum over positive roots, as a 0/1 test helper for dominance
  /// on Dynkin labels.
  static bool labels_dominant(const Labels& l);

  /// Reflect Dynkin labels in simple root i.
  void reflect_labels(Labels& l, int i) const;

  /// Map Dynkin labels to the dominant chamber; returns the parity of the
  /// number of reflections used (+1/-1).
  int dominate_labels(Labels& l) const;

  /// Matrix of the longest Weyl group element on epsilon coordinates.
  Matrix longest_element() const;

 private:
  void finish();
  std::vector<Vec> simple_coroots_;
};

RootSystem build_root_system(Family family, int rank);
RootSystem build_root_system(const std::string& family, int rank);

/// s_alpha(v) = v - <v, alpha^vee> alpha; `root` must belong to `system`.
Vec reflect(const RootSystem& system, const Vec& root, const Vec& v);

struct Dominated {
  Vec dominant;
  int sign = 1;           // determinant of the reducing Weyl word
  bool regular = false;   // no reflection fixes the input
  std::vector<int> word;  // dominant = s_{word.back()} ... s_{word.front()} v
};

Dominated dominate(const RootSystem& system, const Vec& v);

/// Apply s_{word.front()} ... s_{word.back()} to v, i.e. undo dominate().
Vec apply_inverse_word(const RootSystem& system, const std::vector<int>& word,
                       const Vec& v);

/// Longest element of the subgroup generated by reflections in `simple`
/// (a set of simple roots of some root system, in ambient coordinates), as
/// an ambient matrix acting trivially on the orthogonal complement.
Matrix longest_element_of(const std::vector<Vec>& simple, std::size_t ambient_dim);

/// The W-orbit of `seed` under reflections in `generators`, each element
/// paired with the parity of a word reaching it. Throws TooLarge past
/// `limit` elements.
std::vector<std::pair<Vec, int>> signed_orbit(const std::vector<Vec>& generators,
                                              const Vec& seed,
                                              std::size_t limit = 2000000);

/// Weyl dimension formula.
mpz_class weyl_dimension(const RootSystem& system, const Vec& highest_weight);

/// Dominant-weight multiplicities of an irreducible module V_lambda, computed
/// once by the Freudenthal recursion. Lookups for arbitrary weights go
/// through the dominant chamber. Instances are immutable after
/// construction.
class CharacterTable {
 public:
  CharacterTable(const RootSystem& system, const Vec& highest_weight,
                 std::size_t max_dominant = 500000);

  const RootSystem& system() const { return *system_; }
  const Labels& highest_labels() const { return highest_; }

  std::int64_t multiplicity(const Vec& weight) const;
  std::int64_t multiplicity_labels(Labels labels) const;

  /// Dominant weights (Dynkin labels) with their multiplicities, ordered by
  /// depth below the highest weight.
  const std::vector<std::pair<Labels, std::int64_t>>& dominant() const {
    return dominant_;
  }

  mpz_class dimension() const;

  /// Visit every weight of V_lambda (Dynkin labels) with its multiplicity.
  /// Throws TooLarge when more than `limit` distinct weights would be
  /// visited.
  void for_each_weight(const std::function<void(const Labels&, std::int64_t)>& visit,
                       std::size_t limit = 20000000) const;

  std::size_t orbit_size(const Labels& dominant_labels) const;

 private:
  const RootSystem* system_;
  Labels highest_;
  std::vector<std::pair<Labels, std::int64_t>> dominant_;
  std::unordered_map<Labels, std::int64_t, LabelsHash> index_;
};

/// Multiplicity of mu in V_lambda.
std::int64_t weight_multiplicity(const RootSystem& system, const Vec& lambda,
                                 const Vec& mu);

}  // namespace w0

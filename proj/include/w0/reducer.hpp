#pragma once

// Action of the restricted longest Weyl element on the l-invariants of an
// irreducible representation, computed by restricting to the reduction
// subalgebra s and applying the so(1,n) closed form to each summand.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "w0/linalg.hpp"
#include "w0/realforms.hpp"
#include "w0/subalg.hpp"

namespace w0 {

struct W0Action {
  enum class Verdict { Zero, PlusId, MinusId, Mixed };
  std::int64_t dim = 0;
  std::int64_t plus = 0;
  std::int64_t minus = 0;

  static W0Action from_counts(std::int64_t plus, std::int64_t minus);
  Verdict verdict() const;
  std::string verdict_name() const;  // "zero", "plus_id", "minus_id", "mixed"
  friend bool operator==(const W0Action&, const W0Action&) = default;
};

/// Eigenvalue multisets multiply under tensor products.
W0Action tensor(const W0Action& a, const W0Action& b);

struct BranchConstituent {
  Vec highest_weight;               // in h* of g
  std::vector<Vec> chart_weights;   // one per non-abelian summand, in order
  Vec abelian_charges;              // pairings with the center basis
  std::int64_t multiplicity = 0;
};

/// Precomputed data for one real form: the decomposition of s and the root
/// systems used by the alternating sums. Immutable; share freely.
class Reducer {
 public:
  explicit Reducer(RealForm form);

  const RealForm& form() const { return form_; }
  const SummandDecomposition& decomposition() const { return dec_; }
  const RootSystem& s_system() const { return s_; }

  /// Dominant integral check on the Dynkin labels of g; throws NotDominant.
  void require_dominant(const Vec& lambda) const;

  /// Every constituent of V_lambda restricted to s, by the alternating sum
  /// over all weights of V_lambda. Sorted by highest weight, then charges.
  std::vector<BranchConstituent> branch_to_s(const Vec& lambda) const;

  /// With pruning, only highest weights that can carry l-invariants are
  /// examined; without it, the full branching is used.
  W0Action w0_action(const Vec& lambda, bool prune = true) const;

  /// dim V_lambda^l straight from the Levi subalgebra l = h + black roots,
  /// without going through s.
  std::int64_t levi_invariant_dim(const Vec& lambda) const;

  /// The constituents of V_lambda restricted to s that carry l-invariants,
  /// found along the pruned path. Sorted by highest weight.
  std::vector<BranchConstituent> invariant_constituents(const Vec& lambda) const;

 private:
  void for_each_invariant(
      const Vec& lambda,
      const std::function<void(const Vec&, std::int64_t, int)>& visit) const;

  RealForm form_;
  SummandDecomposition dec_;
  RootSystem s_;
  std::vector<std::vector<int>> summand_index_;  // simple roots of summand k in s_
};

struct InvariantAnswer {
  int dim = 0;
  std::optional<int> sign;
};

/// l-invariants of one constituent: 1 exactly when every so(1,n) weight
/// satisfies the existence condition, every compact weight vanishes and
/// every abelian charge vanishes; the sign is the product of the so(1,n)
/// signs.
InvariantAnswer constituent_invariants(const BranchConstituent& c,
                                       const SummandDecomposition& dec);

/// Shared, lazily built reducer for a catalogued form name. Thread-safe.
std::shared_ptr<const Reducer> reducer_for(const std::string& name);

/// Convenience wrapper around Reducer. Complex forms are rejected here; use
/// complex_w0_action.
W0Action w0_action(const RealForm& form, const Vec& lambda, bool prune = true);

/// Name of the split real form of a complex type, e.g. "sl(3,R)" for A2.
std::string split_form_name(const std::string& family, int rank);

/// Restriction of scalars: V_{lambda1} (x) conj V_{lambda2}, each factor
/// answered by the split real form of the family.
W0Action complex_w0_action(const std::string& family, int rank, const Vec& lambda1,
                           const Vec& lambda2);

struct QuasiSplitReport {
  std::size_t compared = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Compare two real forms of the same complex algebra on a list of weights.
QuasiSplitReport quasi_split_agrees(const RealForm& a, const RealForm& b,
                                    const std::vector<Vec>& weights);

}  // namespace w0

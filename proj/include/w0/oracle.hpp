#pragma once

// Matrix-level brute force for small real forms. Representations are built
// from explicit classical matrix algebras, the l-invariants are found as a
// joint kernel, and w0 is applied through an explicit group element. Nothing
// here uses the branching machinery of the reducer.

#include <string>
#include <utility>
#include <vector>

#include "w0/linalg.hpp"
#include "w0/realforms.hpp"
#include "w0/reducer.hpp"

namespace w0 {

/// Images of a Chevalley-type basis of the complexification: the simple
/// coroots, then one root vector per root. Root vectors are normalised so
/// that [e_a, e_{-a}] is the coroot of a.
struct MatrixRep {
  std::string description;
  std::size_t dimension = 0;
  std::vector<Matrix> coroots;                      // images of h_i, simple i
  std::vector<std::pair<Vec, Matrix>> root_images;  // (a, image of e_a)
  std::vector<Vec> highest_weights;  // irreducible constituents, with repeats

  bool reducible() const { return highest_weights.size() != 1; }
  const Matrix& root_image(const Vec& root) const;
};

/// Adjoint representation. Forms of rank above 4 and forms without a
/// classical matrix model (complex forms, exceptional types) are rejected.
MatrixRep adjoint_rep(const RealForm& form);

/// Traceless symmetric square of the standard representation of an
/// orthogonal algebra, so(p,q) with p+q <= 8.
MatrixRep sym2_standard_rep(const RealForm& form);

/// Number of stored generator pairs (x, y) for which
/// [rho(x), rho(y)] != rho([x, y]). Zero for a genuine representation.
std::size_t bracket_defects(const MatrixRep& rep, const RealForm& form);

/// Word (s_{word[0]} ... s_{word.back()}) in the Weyl group of the
/// complexification whose action on a* is the restricted w0.
std::vector<int> w0_lift_word(const RealForm& form);

/// Matrix of the lifted w0 on the representation space, as the product of
/// exp(e) exp(-f) exp(e) over the word.
Matrix w0_rep_matrix(const MatrixRep& rep, const RealForm& form);

/// Basis of the joint kernel of all of l acting on the representation.
std::vector<Vec> invariant_basis(const MatrixRep& rep, const RealForm& form);

/// Action of w0 on the l-invariants, read off from eigenvalue counts.
/// Throws ConsistencyError if the invariants are not stable or the action is
/// not an involution there.
W0Action oracle_w0_on_invariants(const MatrixRep& rep, const RealForm& form);

}  // namespace w0

#pragma once

// Invariants of the Levi-type subalgebra l in irreducible representations of
// so(1,n): existence, dimension, the sign of w0, and the unique doubled
// Young tableau that witnesses the dimension.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "w0/dynkin.hpp"
#include "w0/linalg.hpp"

namespace w0 {

/// Complex type of so(1,n): B1 for n = 2, D2special for n = 3, B_{n/2} for
/// even n, D_{(n+1)/2} otherwise.
DynkinType so1n_type(int n);

/// Throws InvalidArgument (n < 2, wrong length) or NotDominant unless
/// `lambda` is a dominant integral weight of so1n_type(n) in epsilon
/// coordinates.
void validate_so1n_weight(int n, const Vec& lambda);

/// The existence condition: for n = 2, lambda_1 is an integer; for n >= 3,
/// only lambda_1 and lambda_2 may be nonzero, both integers with even sum.
bool check_star(int n, const Vec& lambda);

/// Dimension of the l-invariants: 1 when check_star holds, else 0.
int so1n_dim(int n, const Vec& lambda);

/// (-1)^{lambda_1}; throws InvalidArgument when there are no invariants.
int so1n_sign(int n, const Vec& lambda);

/// Row parameters of a two-row doubled tableau with symbols 1 < 2 < 2bar <
/// 1bar. a_s (b_s) is half the number of boxes of the first (second) row
/// holding symbols not exceeding s.
struct DoubledTableau {
  Rational a1, a2, a2bar, a1bar;
  Rational b1, b2, b2bar, b1bar;

  /// Violated structural invariants (monotone rows, nullity, grid,
  /// a1bar = lambda1, b1bar = lambda2); empty when all hold.
  std::vector<std::string> violations(const Rational& lambda1, const Rational& lambda2) const;
  /// The two rows, box by box.
  std::vector<std::string> rows() const;
  std::string describe() const;
  friend bool operator==(const DoubledTableau&, const DoubledTableau&) = default;
};

/// The closed form. Requires integers lambda1 >= lambda2 >= 0 of even sum.
DoubledTableau invariant_tableau(const Rational& lambda1, const Rational& lambda2);

struct TableauSearch {
  std::size_t examined = 0;
  std::vector<DoubledTableau> survivors;
};

/// Enumerate every parameter tuple on the quarter-integer grid within the
/// row bounds and keep those meeting the constraints derived in the
/// uniqueness argument.
TableauSearch search_tableaux(const Rational& lambda1, const Rational& lambda2);

/// Exactly one survivor, and it equals invariant_tableau.
bool tableau_unique(const Rational& lambda1, const Rational& lambda2);

}  // namespace w0

#pragma once

// Exact rational vectors and dense matrices. Everything in the engine is
// computed over Q; there is no floating point anywhere.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace w0 {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Vec& v);

Vec zeros(std::size_t n);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Rational& s, const Vec& a);
Vec& operator+=(Vec& a, const Vec& b);
Vec& operator-=(Vec& a, const Vec& b);
Rational dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);
bool is_integral(const Vec& v);
bool is_integral(const Rational& q);

// <v, a^vee> = 2 (v, a) / (a, a).
Rational coroot_pairing(const Vec& v, const Vec& a);
// Euclidean reflection of v in the hyperplane orthogonal to a.
Vec reflect_in(const Vec& a, const Vec& v);

// Lexicographic comparison, used for deterministic orderings.
bool lex_less(const Vec& a, const Vec& b);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix from_columns(const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  Matrix transpose() const;
  Vec apply(const Vec& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

  bool is_zero() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(const Matrix& m);
// Basis of {x : m x = 0}, as column vectors.
std::vector<Vec> kernel(const Matrix& m);
// Some x with m x = b, if one exists.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);

// Coordinates of v in the basis given by `basis` (which must be linearly
// independent); nullopt when v is outside their span.
std::optional<Vec> coordinates_in(const std::vector<Vec>& basis, const Vec& v);

}  // namespace w0

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace strat {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Parses "p" or "p/q" (optional leading sign). Throws Error(InvalidScalar).
Scalar parseScalar(std::string_view text);
/// Formats as "p" or "p/q" with q > 0 and gcd(p, q) = 1.
std::string formatScalar(const Scalar &s);

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

  static Matrix identity(std::size_t n);
  static Matrix fromRows(const std::vector<std::vector<Scalar>> &rows,
                         std::size_t cols = 0);
  /// Matrix whose columns are the given vectors, each of length `rows`.
  static Matrix fromColumns(const std::vector<Vector> &cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  const std::vector<Scalar> &data() const { return data_; }

  Vector column(std::size_t c) const;
  std::vector<Vector> columns() const;
  Vector row(std::size_t r) const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void setBlock(std::size_t r0, std::size_t c0, const Matrix &b);
  Matrix selectColumns(const std::vector<std::size_t> &idx) const;
  Matrix selectRows(const std::vector<std::size_t> &idx) const;

  bool isZero() const;
  bool isIdentity() const;

  Matrix operator*(const Matrix &o) const;
  Vector operator*(const Vector &v) const;
  Matrix operator+(const Matrix &o) const;
  Matrix operator-(const Matrix &o) const;
  Matrix operator*(const Scalar &s) const;
  Matrix &operator+=(const Matrix &o);

  bool operator==(const Matrix &o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix hstack(const Matrix &a, const Matrix &b);
Matrix vstack(const Matrix &a, const Matrix &b);
/// Block-diagonal matrix diag(blocks...).
Matrix blockDiagonal(const std::vector<Matrix> &blocks);

/// Reduced row echelon form and the pivot column of each nonzero row.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
Echelon rowReduce(Matrix m);

std::size_t rank(const Matrix &m);
std::vector<Vector> kernelBasis(const Matrix &m);
std::vector<Vector> imageBasis(const Matrix &m);
/// Kernel and image bases packed as the columns of a matrix.
Matrix kernelMatrix(const Matrix &m);
Matrix imageMatrix(const Matrix &m);
/// Some x with m x = b, or nullopt. Throws Error(DimensionMismatch).
std::optional<Vector> solve(const Matrix &m, const Vector &b);
/// Some X with m X = b, column by column, or nullopt.
std::optional<Matrix> solve(const Matrix &m, const Matrix &b);
std::optional<Matrix> inverse(const Matrix &m);

/// Column space of `basis` together with a complement, and the coordinate
/// map of the ambient space with respect to [basis | complement].
class SplitBasis {
 public:
  /// `spanning` columns span the subspace of k^n; they need not be independent.
  SplitBasis(const Matrix &spanning, std::size_t n);

  std::size_t ambient() const { return n_; }
  std::size_t subDim() const { return sub_.cols(); }
  std::size_t quotDim() const { return complement_.cols(); }
  const Matrix &sub() const { return sub_; }
  const Matrix &complement() const { return complement_; }
  /// subDim x n: coordinates of a vector in the subspace basis (valid on the subspace).
  Matrix subCoords() const;
  /// quotDim x n: projection onto the quotient, killing the subspace.
  Matrix quotCoords() const;

 private:
  std::size_t n_;
  Matrix sub_;
  Matrix complement_;
  Matrix inv_;
};

/// Intersection of the column spaces of a and b (both with a.rows() rows).
Matrix intersectColumnSpaces(const Matrix &a, const Matrix &b);

/// Characteristic polynomial det(xI - m), coefficients from constant term up.
std::vector<Scalar> characteristicPolynomial(const Matrix &m);
/// Distinct rational roots of a polynomial (coefficients constant term first).
/// Returns nullopt when the coefficients are too large to search exhaustively.
std::optional<std::vector<Scalar>> rationalRoots(const std::vector<Scalar> &poly);

}  // namespace strat

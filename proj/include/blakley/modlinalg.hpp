#ifndef BLAKLEY_MODLINALG_HPP
#define BLAKLEY_MODLINALG_HPP

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>

#include <Eigen/Core>

#include "blakley/field.hpp"

namespace blakley {

using Index = Eigen::Index;

template <typename Scalar>
using DenseMatrix =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// A vector over GF(p). Entries are stored as canonical residues.
class ModVector {
 public:
  ModVector(PrimeModulus m, Index size);
  /// Throws RangeViolation if any residue is not reduced.
  ModVector(PrimeModulus m, DenseVector<Residue> residues);

  static ModVector from_signed(PrimeModulus m,
                               std::initializer_list<std::int64_t> values);

  Index size() const noexcept { return data_.size(); }
  PrimeModulus modulus() const noexcept { return modulus_; }
  FieldElement operator[](Index i) const { return {data_(i), modulus_}; }
  void set(Index i, const FieldElement& v);
  const DenseVector<Residue>& residues() const noexcept { return data_; }

  friend bool operator==(const ModVector& a, const ModVector& b) {
    return a.modulus_ == b.modulus_ && a.data_ == b.data_;
  }

 private:
  DenseVector<Residue> data_;
  PrimeModulus modulus_;
};

/// Dense row-major matrix over GF(p).
class ModMatrix {
 public:
  /// Zero matrix.
  ModMatrix(PrimeModulus m, Index rows, Index cols);
  /// Throws RangeViolation if any residue is not reduced.
  ModMatrix(PrimeModulus m, DenseMatrix<Residue> residues);

  static ModMatrix identity(PrimeModulus m, Index n);
  /// Rows of signed integers, each reduced mod p. Rows must be equal length.
  static ModMatrix from_signed(
      PrimeModulus m,
      std::initializer_list<std::initializer_list<std::int64_t>> rows);

  Index rows() const noexcept { return data_.rows(); }
  Index cols() const noexcept { return data_.cols(); }
  PrimeModulus modulus() const noexcept { return modulus_; }
  FieldElement operator()(Index r, Index c) const { return {data_(r, c), modulus_}; }
  void set(Index r, Index c, const FieldElement& v);
  const DenseMatrix<Residue>& residues() const noexcept { return data_; }

  ModVector row(Index r) const;
  /// Copy of this matrix with `v` appended as a new last row.
  ModMatrix with_row(const ModVector& v) const;
  /// Rows picked by index, in the given order.
  ModMatrix select_rows(std::span<const Index> picks) const;

  friend bool operator==(const ModMatrix& a, const ModMatrix& b) {
    return a.modulus_ == b.modulus_ && a.data_.rows() == b.data_.rows() &&
           a.data_.cols() == b.data_.cols() && a.data_ == b.data_;
  }

 private:
  DenseMatrix<Residue> data_;
  PrimeModulus modulus_;
};

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
ModVector operator*(const ModMatrix& a, const ModVector& x);

/// Throws NotSquare.
FieldElement determinant(const ModMatrix& m);

/// Unique x with A x = b (mod p), by Gauss-Jordan elimination pivoting on the
/// first nonzero entry of each column. Throws NotSquare, DimensionMismatch,
/// ModulusMismatch or SingularMatrix.
ModVector solve(const ModMatrix& a, const ModVector& b);

Index rank(const ModMatrix& m);

/// True iff v is a GF(p)-linear combination of the rows of m.
bool in_rowspace(const ModVector& v, const ModMatrix& m);

std::ostream& operator<<(std::ostream& os, const ModMatrix& m);
std::ostream& operator<<(std::ostream& os, const ModVector& v);

}  // namespace blakley

#endif  // BLAKLEY_MODLINALG_HPP

#include "blakley/modlinalg.hpp"

#include <ostream>
#include <string>
#include <utility>

namespace blakley {

namespace {

void require_same(PrimeModulus a, PrimeModulus b) {
  if (a != b) {
    throw Error(ErrorCode::ModulusMismatch,
                "mod " + std::to_string(a.value()) + " vs mod " +
                    std::to_string(b.value()));
  }
}

template <typename Derived>
void require_reduced(const Eigen::DenseBase<Derived>& residues, PrimeModulus m) {
  if (residues.size() != 0 && residues.maxCoeff() >= m.value()) {
    throw Error(ErrorCode::RangeViolation,
                "entry not reduced mod " + std::to_string(m.value()));
  }
}

struct Echelon {
  Index rank = 0;
  // Product of pivots times the sign of the row permutation; meaningful for
  // square inputs of full rank.
  Residue det = 1;
};

// Forward elimination in place over the first `pivot_cols` columns. Rows
// below each pivot are cleared; rows above are left untouched unless
// `jordan`, in which case pivots are normalised to 1 and whole columns are
// cleared.
Echelon eliminate(DenseMatrix<Residue>& w, PrimeModulus m, Index pivot_cols,
                  bool jordan) {
  Echelon out;
  bool odd_swaps = false;
  const Index rows = w.rows();
  const Index cols = w.cols();
  for (Index col = 0; col < pivot_cols && out.rank < rows; ++col) {
    Index pivot = out.rank;
    while (pivot < rows && w(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != out.rank) {
      w.row(pivot).swap(w.row(out.rank));
      odd_swaps = !odd_swaps;
    }
    const Index pr = out.rank;
    out.det = mod_mul(out.det, w(pr, col), m);
    if (jordan) {
      const Residue scale = mod_inv(w(pr, col), m);
      for (Index c = col; c < cols; ++c) w(pr, c) = mod_mul(w(pr, c), scale, m);
    }
    const Residue pivot_inv = jordan ? 1 : mod_inv(w(pr, col), m);
    for (Index r = jordan ? 0 : pr + 1; r < rows; ++r) {
      if (r == pr || w(r, col) == 0) continue;
      const Residue factor = mod_mul(w(r, col), pivot_inv, m);
      for (Index c = col; c < cols; ++c) {
        w(r, c) = mod_sub(w(r, c), mod_mul(factor, w(pr, c), m), m);
      }
    }
    ++out.rank;
  }
  if (odd_swaps) out.det = mod_neg(out.det, m);
  return out;
}

}  // namespace

ModVector::ModVector(PrimeModulus m, Index size)
    : data_(DenseVector<Residue>::Zero(size)), modulus_(m) {}

ModVector::ModVector(PrimeModulus m, DenseVector<Residue> residues)
    : data_(std::move(residues)), modulus_(m) {
  require_reduced(data_, m);
}

ModVector ModVector::from_signed(PrimeModulus m,
                                 std::initializer_list<std::int64_t> values) {
  ModVector v(m, static_cast<Index>(values.size()));
  Index i = 0;
  for (std::int64_t x : values) v.data_(i++) = mod_reduce(x, m);
  return v;
}

void ModVector::set(Index i, const FieldElement& v) {
  require_same(modulus_, v.modulus());
  data_(i) = v.value();
}

ModMatrix::ModMatrix(PrimeModulus m, Index rows, Index cols)
    : data_(DenseMatrix<Residue>::Zero(rows, cols)), modulus_(m) {}

ModMatrix::ModMatrix(PrimeModulus m, DenseMatrix<Residue> residues)
    : data_(std::move(residues)), modulus_(m) {
  require_reduced(data_, m);
}

ModMatrix ModMatrix::identity(PrimeModulus m, Index n) {
  return {m, DenseMatrix<Residue>::Identity(n, n)};
}

ModMatrix ModMatrix::from_signed(
    PrimeModulus m, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const Index n_rows = static_cast<Index>(rows.size());
  const Index n_cols = n_rows == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  ModMatrix out(m, n_rows, n_cols);
  Index r = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != n_cols) {
      throw Error(ErrorCode::DimensionMismatch, "ragged row list");
    }
    Index c = 0;
    for (std::int64_t x : row) out.data_(r, c++) = mod_reduce(x, m);
    ++r;
  }
  return out;
}

void ModMatrix::set(Index r, Index c, const FieldElement& v) {
  require_same(modulus_, v.modulus());
  data_(r, c) = v.value();
}

ModVector ModMatrix::row(Index r) const {
  return {modulus_, data_.row(r).transpose()};
}

ModMatrix ModMatrix::with_row(const ModVector& v) const {
  require_same(modulus_, v.modulus());
  if (v.size() != cols()) {
    throw Error(ErrorCode::DimensionMismatch, "appended row has wrong length");
  }
  DenseMatrix<Residue> grown(rows() + 1, cols());
  grown.topRows(rows()) = data_;
  grown.row(rows()) = v.residues().transpose();
  return {modulus_, std::move(grown)};
}

ModMatrix ModMatrix::select_rows(std::span<const Index> picks) const {
  DenseMatrix<Residue> out(static_cast<Index>(picks.size()), cols());
  for (std::size_t i = 0; i < picks.size(); ++i) {
    out.row(static_cast<Index>(i)) = data_.row(picks[i]);
  }
  return {modulus_, std::move(out)};
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  require_same(a.modulus(), b.modulus());
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
  }
  const PrimeModulus m = a.modulus();
  DenseMatrix<Residue> out = DenseMatrix<Residue>::Zero(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index k = 0; k < a.cols(); ++k) {
      const Residue aik = a.residues()(i, k);
      if (aik == 0) continue;
      for (Index j = 0; j < b.cols(); ++j) {
        out(i, j) = mod_add(out(i, j), mod_mul(aik, b.residues()(k, j), m), m);
      }
    }
  }
  return {m, std::move(out)};
}

ModVector operator*(const ModMatrix& a, const ModVector& x) {
  require_same(a.modulus(), x.modulus());
  if (a.cols() != x.size()) {
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from cols");
  }
  const PrimeModulus m = a.modulus();
  DenseVector<Residue> out = DenseVector<Residue>::Zero(a.rows());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index k = 0; k < a.cols(); ++k) {
      out(i) = mod_add(out(i), mod_mul(a.residues()(i, k), x.residues()(k), m), m);
    }
  }
  return {m, std::move(out)};
}

FieldElement determinant(const ModMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::NotSquare, std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()));
  }
  DenseMatrix<Residue> work = m.residues();
  const Echelon e = eliminate(work, m.modulus(), work.cols(), false);
  if (e.rank < m.rows()) return FieldElement::zero(m.modulus());
  return {e.det, m.modulus()};
}

ModVector solve(const ModMatrix& a, const ModVector& b) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::NotSquare, std::to_string(a.rows()) + "x" +
                                          std::to_string(a.cols()));
  }
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "right-hand side length differs");
  }
  require_same(a.modulus(), b.modulus());
  const Index n = a.rows();
  DenseMatrix<Residue> aug(n, n + 1);
  aug.leftCols(n) = a.residues();
  aug.col(n) = b.residues();
  const Echelon e = eliminate(aug, a.modulus(), n, true);
  if (e.rank < n) throw Error(ErrorCode::SingularMatrix, "determinant is zero");
  return {a.modulus(), aug.col(n)};
}

Index rank(const ModMatrix& m) {
  DenseMatrix<Residue> work = m.residues();
  return eliminate(work, m.modulus(), work.cols(), false).rank;
}

bool in_rowspace(const ModVector& v, const ModMatrix& m) {
  if (v.size() != m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from cols");
  }
  return rank(m.with_row(v)) == rank(m);
}

std::ostream& operator<<(std::ostream& os, const ModMatrix& m) {
  for (Index r = 0; r < m.rows(); ++r) {
    os << (r == 0 ? "[" : " ");
    for (Index c = 0; c < m.cols(); ++c) {
      os << (c == 0 ? "[" : ", ") << m.residues()(r, c);
    }
    os << ']' << (r + 1 == m.rows() ? "]" : "\n");
  }
  return os << " (mod " << m.modulus().value() << ')';
}

std::ostream& operator<<(std::ostream& os, const ModVector& v) {
  os << '(';
  for (Index i = 0; i < v.size(); ++i) os << (i == 0 ? "" : ", ") << v.residues()(i);
  return os << ") (mod " << v.modulus().value() << ')';
}

}  // namespace blakley

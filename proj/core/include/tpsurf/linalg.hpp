#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tpsurf/field.hpp"

namespace tpsurf {

using FieldVector = std::vector<Fp>;

class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static FieldMatrix identity(std::size_t n);
  static FieldMatrix from_rows(const std::vector<FieldVector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Fp& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  Fp operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  Fp* row(std::size_t i) noexcept { return data_.data() + i * cols_; }
  const Fp* row(std::size_t i) const noexcept { return data_.data() + i * cols_; }
  FieldVector row_vector(std::size_t i) const { return FieldVector(row(i), row(i) + cols_); }
  FieldVector col_vector(std::size_t j) const;

  bool is_zero() const noexcept;
  FieldMatrix transpose() const;

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldVector operator*(const FieldMatrix& a, const FieldVector& x);
  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Fp> data_;
};

struct RrefResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  FieldMatrix reduced;
};

// Reduced row echelon form, leftmost nonzero pivot, rows scanned top-down.
RrefResult rref(FieldMatrix m);
std::size_t rank(FieldMatrix m);

// Free-variable canonical basis, ordered by free column.
std::vector<FieldVector> kernel_basis(const FieldMatrix& m);

// Value assigned to every free variable in an under-determined solve.
enum class FreeConvention { Zero, One };

// Solution with free variables fixed by `conv`, or nullopt if inconsistent.
std::optional<FieldVector> solve_particular(const FieldMatrix& m, const FieldVector& rhs,
                                            FreeConvention conv = FreeConvention::Zero);

// Throws std::invalid_argument if m is not square.
Fp det_field(FieldMatrix m);

}  // namespace tpsurf

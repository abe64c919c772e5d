#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bqtop/scalar.hpp"

namespace bqtop {

/// Sparse vector sorted by index, no explicit zeros.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

SparseVec make_sparse(std::map<std::size_t, Scalar> entries);
SparseVec add_scaled(const SparseVec& a, const SparseVec& b, const Scalar& c);  // a + c*b
SparseVec scaled(const SparseVec& a, const Scalar& c);
Scalar coefficient(const SparseVec& v, std::size_t index);

/// Incremental row reduction over a field. Rows are kept fully reduced
/// against each other, so reduce() returns a canonical normal form modulo
/// the span. With tracking on, every stored row remembers which inserted
/// vectors it combines.
class Eliminator {
 public:
  explicit Eliminator(Field field = Field::rationals(), bool track = false)
      : field_(field), track_(track) {}

  /// Inserts v; returns true when v was independent of the current span.
  bool insert(const SparseVec& v);
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }
  const Field& field() const { return field_; }

  /// Tracked reduction: residual and the combination of inserted vectors
  /// subtracted from v to reach it (v - sum c_i v_i = residual).
  std::pair<SparseVec, SparseVec> reduce_tracked(const SparseVec& v) const;

  /// Kernel relations among inserted vectors (tracking only).
  const std::vector<SparseVec>& dependencies() const { return deps_; }

 private:
  struct Row {
    SparseVec vec;    // pivot entry equals one
    SparseVec combo;  // over insertion indices
  };
  Field field_;
  bool track_;
  std::size_t inserted_ = 0;
  std::map<std::size_t, Row> rows_;  // pivot = smallest index
  std::vector<SparseVec> deps_;
};

/// Rank over a field of a matrix given as sparse columns.
std::size_t rank_of(const std::vector<SparseVec>& columns, const Field& field);
/// Basis of the kernel of the column matrix (coefficient vectors over column indices).
std::vector<SparseVec> kernel_of(const std::vector<SparseVec>& columns, const Field& field);

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, BigInt(0)) {}
  static IntMatrix identity(std::size_t n);
  BigInt& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  IntMatrix transposed() const;
  bool is_zero() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
};

/// Integer matrix stored as sparse columns (the shape of boundary maps).
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::size_t, BigInt>>> columns;

  std::size_t cols() const { return columns.size(); }
  IntMatrix dense() const;
  std::vector<SparseVec> over(const Field& field) const;
};

}  // namespace bqtop

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "clusterhall/numeric.hpp"

namespace clusterhall {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

class FMatrix {
 public:
  FMatrix() = default;
  FMatrix(int rows, int cols, std::uint32_t p);
  static FMatrix identity(int n, std::uint32_t p);
  // Entries are reduced mod p (negative values allowed).
  static FMatrix from_rows(const std::vector<std::vector<long long>>& rows, std::uint32_t p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint32_t prime() const { return p_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::uint32_t operator()(int r, int c) const { return data_[idx(r, c)]; }
  void set(int r, int c, long long v);
  std::span<std::uint32_t> row(int r) { return {data_.data() + idx(r, 0), static_cast<std::size_t>(cols_)}; }
  std::span<const std::uint32_t> row(int r) const {
    return {data_.data() + idx(r, 0), static_cast<std::size_t>(cols_)};
  }

  FMatrix transpose() const;
  FMatrix operator*(const FMatrix& o) const;
  FMatrix operator+(const FMatrix& o) const;
  FMatrix operator-(const FMatrix& o) const;
  FMatrix scaled(std::uint32_t c) const;
  bool is_zero() const;
  // Columns [c0, c0 + n) / rows [r0, r0 + n).
  FMatrix columns(int c0, int n) const;
  FMatrix row_block(int r0, int n) const;
  FMatrix select_columns(const std::vector<int>& cols) const;
  FMatrix select_rows(const std::vector<int>& rows) const;
  void copy_block(const FMatrix& src, int r0, int c0);

  friend bool operator==(const FMatrix&, const FMatrix&) = default;

 private:
  std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }
  int rows_ = 0;
  int cols_ = 0;
  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> data_;
};

FMatrix hstack(const FMatrix& a, const FMatrix& b);
FMatrix vstack(const FMatrix& a, const FMatrix& b);

struct Echelon {
  FMatrix reduced;          // reduced row echelon form
  std::vector<int> pivots;  // pivot column of each nonzero row
  int rank() const { return static_cast<int>(pivots.size()); }
};

Echelon rref(FMatrix m);
int rank(const FMatrix& m);
// Reference elimination without the kernel layer, used as a test oracle.
int rank_reference(const FMatrix& m);

// Null space basis: columns of the result (cols x nullity), one per free
// column of the reduced echelon form, with a 1 in that free position.
FMatrix solve_kernel(const FMatrix& m);
// Rows y with y * m = 0, as rows of the result.
FMatrix left_kernel(const FMatrix& m);
// Basis of the column space, as columns (taken from pivot columns of m).
FMatrix column_basis(const FMatrix& m);
// Extends the independent columns of `sub` (a x s) to a basis [sub | C] of
// the column space of `ambient` (a x w), which must contain sub. Returns C.
FMatrix complement_in(const FMatrix& sub, const FMatrix& ambient);
// X with a * X = b; a must have independent columns and b in its image.
FMatrix solve_left(const FMatrix& a, const FMatrix& b);

// Enumerates sub_dim-dimensional subspaces of F_p^ambient. Each subspace is
// produced once as the row space of a reduced echelon matrix (sub_dim x
// ambient), in lexicographic order of pivot columns, then of free entries.
class SubspaceStream {
 public:
  SubspaceStream(int ambient, int sub_dim, std::uint32_t p);
  bool next(FMatrix& out);
  BigInt total() const;

 private:
  bool advance_pivots();
  void reset_free();
  int ambient_;
  int dim_;
  std::uint32_t p_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> pivots_;
  std::vector<std::pair<int, int>> free_;
  std::vector<std::uint32_t> digits_;
};

// Checks the Gaussian binomial against `budget` before constructing the stream.
SubspaceStream subspaces(int ambient, int sub_dim, std::uint32_t p, std::uint64_t budget);

}  // namespace clusterhall

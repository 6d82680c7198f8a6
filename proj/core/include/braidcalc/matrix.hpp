#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "braidcalc/scalar.hpp"

namespace braidcalc {

// Dense exact matrix, row-major. Every entry carries the matrix conductor.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, int conductor = 1);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix column(const std::vector<Scalar>& v);
  static Matrix row(const std::vector<Scalar>& v);
  static Matrix scalar(const Scalar& s);
  // e_i as a column of length n
  static Matrix unit_column(std::size_t n, std::size_t i);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int conductor() const { return conductor_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  // Caller keeps the value at this matrix's conductor.
  Scalar& ref(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Scalar& s);
  void add_to(std::size_t i, std::size_t j, const Scalar& s);

  Matrix promote(int m) const;
  bool is_zero() const;
  bool is_identity() const;
  std::size_t nnz() const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix col(std::size_t j) const { return block(0, j, rows_, 1); }
  Matrix select_cols(const std::vector<std::size_t>& js) const;
  Matrix select_rows(const std::vector<std::size_t>& is) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  Matrix operator-() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  Matrix& operator+=(const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int conductor_ = 1;
  std::vector<Scalar> e_;
};

// f∘g: apply g first.
Matrix compose(const Matrix& f, const Matrix& g);
Matrix compose(std::initializer_list<Matrix> fs);
// Basis (i,j) of X⊗Y has index i*dim(Y)+j.
Matrix kron(const Matrix& f, const Matrix& g);
Matrix kron(std::initializer_list<Matrix> fs);
// Flip A⊗B -> B⊗A.
Matrix swap_matrix(std::size_t a, std::size_t b);
Matrix hstack(const std::vector<Matrix>& ms);
Matrix vstack(const std::vector<Matrix>& ms);
Matrix direct_sum(const Matrix& a, const Matrix& b);

// First (row, col) at which a and b differ, or (-1,-1). Shapes must agree.
std::pair<long, long> first_difference(const Matrix& a, const Matrix& b);

}  // namespace braidcalc

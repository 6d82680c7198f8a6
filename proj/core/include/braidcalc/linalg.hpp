#pragma once

#include <vector>

#include "braidcalc/matrix.hpp"

namespace braidcalc {

struct Rref {
  Matrix r;                          // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of row i
};

// Leftmost-pivot Gauss-Jordan elimination.
Rref rref(const Matrix& a);
std::size_t rank(const Matrix& a);

// Columns span Ker f. One vector per free column, with a 1 in that column.
Matrix kernel_basis(const Matrix& f);
// Columns span Im f; the transpose is in reduced row echelon form.
Matrix image_basis(const Matrix& f);

struct KernelImage {
  Matrix kernel_basis;
  Matrix image_basis;
  Matrix coimage_proj;   // f = image_basis ∘ coimage_proj
  Matrix cokernel_proj;  // cokernel_proj ∘ image_basis = 0
};
KernelImage kernel_image(const Matrix& f);

// Unique x with a∘x = b for a of full column rank; FactorizationError if none.
Matrix solve_left(const Matrix& a, const Matrix& b);
// Unique x with x∘a = b for a of full row rank; FactorizationError if none.
Matrix solve_right(const Matrix& a, const Matrix& b);
// Unique g with mono∘g∘epi = h.
Matrix solve_factor(const Matrix& mono, const Matrix& epi, const Matrix& h);

Matrix inverse(const Matrix& a);
// A right inverse s of a full-row-rank epi (epi∘s = id), supported on pivot columns.
Matrix right_inverse(const Matrix& epi);
// A left inverse of a full-column-rank mono.
Matrix left_inverse(const Matrix& mono);

// Column spans agree.
bool same_span(const Matrix& a, const Matrix& b);
// Im b ⊆ Im a.
bool span_contains(const Matrix& a, const Matrix& b);
// Coordinates of the columns of b in the column basis a (requires Im b ⊆ Im a).
Matrix coordinates(const Matrix& a, const Matrix& b);

}  // namespace braidcalc

// Copyright 2025 The vipbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VIP_LINALG_HPP
#define VIP_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "vip/rng.hpp"

namespace vip {

using Vector = std::vector<double>;

// Dense real matrix, row-major. Dimensions here stay small (d <= ~500), so
// everything below is plain O(d^3) with no blocking.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0);

  static Matrix identity(int d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  const double* data() const { return data_.data(); }
  double* data() { return data_.data(); }

  const double* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * cols_; }

  bool operator==(const Matrix& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

namespace linalg {

// Pseudoinverse truncation: singular values below this fraction of the
// largest are treated as zero.
inline constexpr double kPinvTruncation = 1e-10;

double dot(const Vector& a, const Vector& b);
double norm_sq(const Vector& a);
double norm(const Vector& a);

Vector matvec(const Matrix& m, const Vector& x);
// out = m * x; raw-pointer form for hot loops, no allocation.
void matvec_into(const Matrix& m, const double* x, double* out);
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
double frobenius_norm(const Matrix& m);

// Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.
// Returns eigenvalues sorted ascending and the matching orthonormal
// eigenvectors as columns. Convergence: off-diagonal Frobenius mass below
// 1e-13 * ||M||_F, at most 100 sweeps (NumericalError beyond that).
// Input must be square and symmetric within 1e-12 relative tolerance.
std::pair<Vector, Matrix> sym_eigen(const Matrix& m);

// Singular values, sorted descending. Computed from the eigenvalues of
// M^T M, which squares the condition number; acceptable at the scales and
// conditioning this library generates, and kept for dependency-freedom.
Vector singular_values(const Matrix& m);

// SVD-derived data from the Gram matrix M^T M: singular values descending,
// right singular vectors as columns (same order), and the numerical rank
// at the kPinvTruncation threshold. Shares the squared-condition-number
// caveat of singular_values().
struct GramSvd {
  Vector singular;       // descending
  Matrix right_vectors;  // cols x cols, column i pairs with singular[i]
  int rank = 0;
};
GramSvd gram_svd(const Matrix& m);

// Minimum-Euclidean-norm x minimizing ||M x - v||. Singular directions
// below kPinvTruncation * sigma_max are truncated.
Vector least_squares_min_norm(const Matrix& m, const Vector& v);

// Haar-like random orthogonal matrix: standard-normal fill, Householder
// QR, then each column flipped by the sign of the matching R diagonal to
// remove the factorization's sign ambiguity.
Matrix random_orthogonal(int d, Rng& rng);

}  // namespace linalg
}  // namespace vip

#endif  // VIP_LINALG_HPP

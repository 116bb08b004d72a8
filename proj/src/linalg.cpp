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

#include "vip/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "vip/errors.hpp"

namespace vip {

Matrix::Matrix(int rows, int cols, double fill)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * cols, fill) {
  if (rows < 1 || cols < 1) {
    throw ContractViolation("Matrix: rows and cols must be >= 1");
  }
}

Matrix Matrix::identity(int d) {
  Matrix m(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

namespace linalg {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ContractViolation(what);
}

}  // namespace

double dot(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), "dot: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm_sq(const Vector& a) { return dot(a, a); }

double norm(const Vector& a) { return std::sqrt(norm_sq(a)); }

Vector matvec(const Matrix& m, const Vector& x) {
  require(static_cast<int>(x.size()) == m.cols(), "matvec: size mismatch");
  Vector out(m.rows());
  matvec_into(m, x.data(), out.data());
  return out;
}

void matvec_into(const Matrix& m, const double* x, double* out) {
  const int rows = m.rows();
  const int cols = m.cols();
  const double* a = m.data();
  for (int r = 0; r < rows; ++r) {
    double s = 0.0;
    const double* arow = a + static_cast<std::size_t>(r) * cols;
    for (int c = 0; c < cols; ++c) s += arow[c] * x[c];
    out[r] = s;
  }
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "matmul: size mismatch");
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

double frobenius_norm(const Matrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) s += m(i, j) * m(i, j);
  return std::sqrt(s);
}

std::pair<Vector, Matrix> sym_eigen(const Matrix& m) {
  require(m.rows() == m.cols(), "sym_eigen: matrix must be square");
  const int d = m.rows();
  const double scale = frobenius_norm(m);
  double asym = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      asym += (m(i, j) - m(j, i)) * (m(i, j) - m(j, i));
  if (std::sqrt(2.0 * asym) > 1e-12 * scale) {
    throw ContractViolation("sym_eigen: matrix not symmetric within 1e-12");
  }

  Matrix a = m;
  // Work on the symmetrized copy so the rotations see exact symmetry.
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const double v = 0.5 * (a(i, j) + a(j, i));
      a(i, j) = v;
      a(j, i) = v;
    }
  Matrix vecs = Matrix::identity(d);

  const double target = 1e-13 * scale;
  constexpr int kMaxSweeps = 100;
  double off = 0.0;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    off = 0.0;
    for (int p = 0; p < d; ++p)
      for (int q = p + 1; q < d; ++q) off += a(p, q) * a(p, q);
    off = std::sqrt(2.0 * off);
    if (off <= target || off == 0.0) {
      Vector vals(d);
      for (int i = 0; i < d; ++i) vals[i] = a(i, i);
      std::vector<int> idx(d);
      std::iota(idx.begin(), idx.end(), 0);
      std::stable_sort(idx.begin(), idx.end(),
                       [&](int x, int y) { return vals[x] < vals[y]; });
      Vector sorted(d);
      Matrix sorted_vecs(d, d);
      for (int i = 0; i < d; ++i) {
        sorted[i] = vals[idx[i]];
        for (int r = 0; r < d; ++r) sorted_vecs(r, i) = vecs(r, idx[i]);
      }
      return {sorted, sorted_vecs};
    }
    for (int p = 0; p < d; ++p) {
      for (int q = p + 1; q < d; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double app = a(p, p);
        const double aqq = a(q, q);
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int i = 0; i < d; ++i) {
          if (i != p && i != q) {
            const double aip = a(i, p);
            const double aiq = a(i, q);
            a(i, p) = aip - s * (aiq + tau * aip);
            a(i, q) = aiq + s * (aip - tau * aiq);
            a(p, i) = a(i, p);
            a(q, i) = a(i, q);
          }
          const double vip_ = vecs(i, p);
          const double viq = vecs(i, q);
          vecs(i, p) = vip_ - s * (viq + tau * vip_);
          vecs(i, q) = viq + s * (vip_ - tau * viq);
        }
      }
    }
  }
  throw NumericalError("sym_eigen: Jacobi did not converge in 100 sweeps",
                       off);
}

GramSvd gram_svd(const Matrix& m) {
  const int n = m.cols();
  Matrix gram(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int r = 0; r < m.rows(); ++r) s += m(r, i) * m(r, j);
      gram(i, j) = s;
      gram(j, i) = s;
    }
  }
  auto [vals, vecs] = sym_eigen(gram);

  GramSvd out;
  out.singular.resize(n);
  out.right_vectors = Matrix(n, n);
  // sym_eigen sorts ascending; flip to descending singular order.
  for (int i = 0; i < n; ++i) {
    const int src = n - 1 - i;
    out.singular[i] = std::sqrt(std::max(vals[src], 0.0));
    for (int r = 0; r < n; ++r) out.right_vectors(r, i) = vecs(r, src);
  }
  const double smax = out.singular.empty() ? 0.0 : out.singular[0];
  out.rank = 0;
  for (int i = 0; i < n; ++i) {
    if (out.singular[i] > kPinvTruncation * smax && out.singular[i] > 0.0) {
      ++out.rank;
    }
  }
  return out;
}

Vector singular_values(const Matrix& m) {
  // Work with the smaller Gram matrix; singular values are shared.
  if (m.rows() < m.cols()) return gram_svd(transpose(m)).singular;
  return gram_svd(m).singular;
}

Vector least_squares_min_norm(const Matrix& m, const Vector& v) {
  require(static_cast<int>(v.size()) == m.rows(),
          "least_squares_min_norm: size mismatch");
  const int n = m.cols();
  const GramSvd svd = gram_svd(m);

  // Project M^T v onto the retained right singular directions:
  //   x = sum_i v_i (v_i . M^T v) / sigma_i^2
  Vector mtv(n, 0.0);
  for (int r = 0; r < m.rows(); ++r) {
    const double vr = v[r];
    for (int c = 0; c < n; ++c) mtv[c] += m(r, c) * vr;
  }
  Vector x(n, 0.0);
  for (int i = 0; i < svd.rank; ++i) {
    double coeff = 0.0;
    for (int r = 0; r < n; ++r) coeff += svd.right_vectors(r, i) * mtv[r];
    coeff /= svd.singular[i] * svd.singular[i];
    for (int r = 0; r < n; ++r) x[r] += coeff * svd.right_vectors(r, i);
  }
  return x;
}

Matrix random_orthogonal(int d, Rng& rng) {
  require(d >= 1, "random_orthogonal: d must be >= 1");
  Matrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = rng.normal();

  // Householder QR; reflectors kept to assemble Q explicitly.
  std::vector<Vector> reflectors;
  reflectors.reserve(d);
  Vector rdiag(d, 0.0);
  for (int k = 0; k < d; ++k) {
    Vector v(d - k);
    double xnorm = 0.0;
    for (int i = k; i < d; ++i) {
      v[i - k] = a(i, k);
      xnorm += a(i, k) * a(i, k);
    }
    xnorm = std::sqrt(xnorm);
    const double alpha = (v[0] >= 0.0 ? -xnorm : xnorm);
    v[0] -= alpha;
    double vnorm = std::sqrt(norm_sq(v));
    if (vnorm == 0.0) {
      // Column already zero below the diagonal; identity reflector.
      v.assign(d - k, 0.0);
      vnorm = 1.0;
    }
    for (auto& e : v) e /= vnorm;
    for (int j = k; j < d; ++j) {
      double s = 0.0;
      for (int i = k; i < d; ++i) s += v[i - k] * a(i, j);
      s *= 2.0;
      for (int i = k; i < d; ++i) a(i, j) -= s * v[i - k];
    }
    rdiag[k] = a(k, k);
    reflectors.push_back(std::move(v));
  }

  // Q = H_0 H_1 ... H_{d-1} applied to the identity.
  Matrix q = Matrix::identity(d);
  for (int k = d - 1; k >= 0; --k) {
    const Vector& v = reflectors[k];
    for (int j = 0; j < d; ++j) {
      double s = 0.0;
      for (int i = k; i < d; ++i) s += v[i - k] * q(i, j);
      s *= 2.0;
      for (int i = k; i < d; ++i) q(i, j) -= s * v[i - k];
    }
  }
  // Fix the QR sign ambiguity so the distribution is Haar-like.
  for (int j = 0; j < d; ++j) {
    if (rdiag[j] < 0.0) {
      for (int i = 0; i < d; ++i) q(i, j) = -q(i, j);
    }
  }
  return q;
}

}  // namespace linalg
}  // namespace vip

// Copyright 2026 The ccqsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ccq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ccq/errors.hpp"

namespace ccq {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagThreshold = 1e-12;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (i != j) {
        s += std::norm(a(i, j));
      }
    }
  }
  return std::sqrt(s);
}

}  // namespace

// Cyclic Jacobi for complex Hermitian matrices. Each rotation zeroes one
// off-diagonal pair a(p,q) with the unitary
//
//   R(p,p) = c, R(p,q) = s e^{i phi}, R(q,p) = -s e^{-i phi}, R(q,q) = c,
//
// where a(p,q) = g e^{i phi} and tan(2 theta) = 2g / (a(q,q) - a(p,p)).
// Sweeps run until the off-diagonal Frobenius norm drops below 1e-12 relative
// to the matrix scale, up to 100 sweeps.
EigResult hermitian_eig(const ComplexMatrix& m, double hermiticity_tol) {
  if (!m.is_square()) {
    throw ParameterError("hermitian_eig requires a square matrix");
  }
  if (!m.all_finite()) {
    throw ValidationError("hermitian_eig input has non-finite entries");
  }
  const double herm_dev = m.hermiticity_deviation();
  if (herm_dev > hermiticity_tol) {
    throw ValidationError("hermitian_eig input deviates from Hermitian by " +
                          std::to_string(herm_dev));
  }

  const int n = m.rows();
  // Symmetrize so roundoff in the input cannot push rotations off course.
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(1.0, a.frobenius_norm());
  const double threshold = kOffDiagThreshold * scale;
  const double rotate_floor = threshold / (2.0 * n);

  bool converged = (n == 1) || off_diagonal_norm(a) <= threshold;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double g = std::abs(a(p, q));
        if (g <= rotate_floor) {
          continue;
        }
        const Complex phase = a(p, q) / g;
        const double alpha = a(p, p).real();
        const double beta = a(q, q).real();
        const double tau = (beta - alpha) / (2.0 * g);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (int i = 0; i < n; ++i) {  // A <- A R
          const Complex aip = a(i, p);
          const Complex aiq = a(i, q);
          a(i, p) = c * aip - s * std::conj(phase) * aiq;
          a(i, q) = s * phase * aip + c * aiq;
        }
        for (int j = 0; j < n; ++j) {  // A <- R' A
          const Complex apj = a(p, j);
          const Complex aqj = a(q, j);
          a(p, j) = c * apj - s * phase * aqj;
          a(q, j) = s * std::conj(phase) * apj + c * aqj;
        }
        a(p, q) = Complex(0.0, 0.0);
        a(q, p) = Complex(0.0, 0.0);
        for (int i = 0; i < n; ++i) {  // V <- V R
          const Complex vip = v(i, p);
          const Complex viq = v(i, q);
          v(i, p) = c * vip - s * std::conj(phase) * viq;
          v(i, q) = s * phase * vip + c * viq;
        }
      }
    }
    converged = off_diagonal_norm(a) <= threshold;
  }
  if (!converged) {
    throw NumericalError("Jacobi eigensolver did not converge in " + std::to_string(kMaxSweeps) +
                         " sweeps (dim " + std::to_string(n) + ")");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int x, int y) { return a(x, x).real() > a(y, y).real(); });

  EigResult out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (int i = 0; i < n; ++i) {
      out.eigenvectors(i, j) = v(i, order[j]);
    }
  }
  return out;
}

namespace {

// V f(Lambda) V' for a spectral function given as mapped eigenvalues.
ComplexMatrix reassemble(const EigResult& eig, const std::vector<double>& mapped) {
  const int n = eig.eigenvectors.rows();
  ComplexMatrix out(n, n);
  for (int j = 0; j < n; ++j) {
    if (mapped[j] == 0.0) {
      continue;
    }
    for (int r = 0; r < n; ++r) {
      const Complex vr = eig.eigenvectors(r, j) * mapped[j];
      for (int c = 0; c < n; ++c) {
        out(r, c) += vr * std::conj(eig.eigenvectors(c, j));
      }
    }
  }
  return out;
}

}  // namespace

ComplexMatrix inv_sqrt_psd(const ComplexMatrix& m, double tol) {
  const EigResult eig = hermitian_eig(m, std::max(tol, kDefaultTol));
  std::vector<double> mapped(eig.eigenvalues.size());
  for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i) {
    const double lambda = eig.eigenvalues[i];
    if (lambda < -tol) {
      throw ValidationError("inv_sqrt_psd input is not PSD: eigenvalue " + std::to_string(lambda));
    }
    mapped[i] = lambda > tol ? 1.0 / std::sqrt(lambda) : 0.0;
  }
  return reassemble(eig, mapped);
}

ComplexMatrix support_projector(const ComplexMatrix& m, double tol) {
  const EigResult eig = hermitian_eig(m, std::max(tol, kDefaultTol));
  std::vector<double> mapped(eig.eigenvalues.size());
  for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i) {
    mapped[i] = eig.eigenvalues[i] > tol ? 1.0 : 0.0;
  }
  return reassemble(eig, mapped);
}

double min_eigenvalue(const ComplexMatrix& m, double hermiticity_tol) {
  const EigResult eig = hermitian_eig(m, hermiticity_tol);
  return eig.eigenvalues.back();
}

}  // namespace ccq

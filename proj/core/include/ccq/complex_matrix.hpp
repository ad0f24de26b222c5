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

#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace ccq {

using Complex = std::complex<double>;

/// Largest Hilbert-space dimension the toolkit will materialize. Tensor
/// products that would exceed this refuse to run instead of thrashing.
inline constexpr int kDefaultDimCap = 4096;

/// Default tolerance for all operator validity checks. Leaves headroom for
/// double-precision roundoff accumulated by k-fold tensor products.
inline constexpr double kDefaultTol = 1e-9;

// Dense row-major complex matrix for small Hilbert-space dimensions. Values
// are immutable in practice: every operation returns a fresh matrix, so
// instances are safe to share across threads once built.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);

  static ComplexMatrix zero(int rows, int cols);
  static ComplexMatrix identity(int dim);
  static ComplexMatrix diagonal(const std::vector<double>& entries);
  /// |index><index| in the computational basis of the given dimension.
  static ComplexMatrix basis_projector(int dim, int index);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Complex& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const std::vector<Complex>& data() const { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  ComplexMatrix adjoint() const;
  Complex trace() const;

  /// Largest entry modulus (the max norm used by all validity checks).
  double max_abs() const;
  double frobenius_norm() const;
  /// ||A - A'||_max; requires a square matrix.
  double hermiticity_deviation() const;
  bool all_finite() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scale);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Re tr(E * S) without forming the product; the acceptance probability of
/// effect E on state S when both are Hermitian.
double real_inner_trace(const ComplexMatrix& effect, const ComplexMatrix& state);

/// Kronecker product. Dimensions multiply; refuses to build a result whose
/// row or column count exceeds dim_cap.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, int dim_cap = kDefaultDimCap);

}  // namespace ccq

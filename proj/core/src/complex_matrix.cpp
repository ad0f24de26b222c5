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

#include "ccq/complex_matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "ccq/errors.hpp"

namespace ccq {

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) {
    throw ParameterError("matrix dimensions must be positive, got " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
  data_.assign(static_cast<std::size_t>(rows) * cols, Complex(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::zero(int rows, int cols) { return ComplexMatrix(rows, cols); }

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    m(i, i) = Complex(1.0, 0.0);
  }
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& entries) {
  ComplexMatrix m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    m(static_cast<int>(i), static_cast<int>(i)) = Complex(entries[i], 0.0);
  }
  return m;
}

ComplexMatrix ComplexMatrix::basis_projector(int dim, int index) {
  if (index < 0 || index >= dim) {
    throw ParameterError("basis index " + std::to_string(index) + " out of range for dim " +
                         std::to_string(dim));
  }
  ComplexMatrix m(dim, dim);
  m(index, index) = Complex(1.0, 0.0);
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  ComplexMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) {
      throw ParameterError("ragged initializer for matrix rows");
    }
    int j = 0;
    for (const Complex& v : row) {
      m(i, j++) = v;
    }
    ++i;
  }
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw ParameterError("matrix shape mismatch in addition");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    data_[i] += other.data_[i];
  }
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw ParameterError("matrix shape mismatch in subtraction");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    data_[i] -= other.data_[i];
  }
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& v : data_) {
    v *= scale;
  }
  return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      m(j, i) = std::conj((*this)(i, j));
    }
  }
  return m;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) {
    throw ParameterError("trace of a non-square matrix");
  }
  Complex t(0.0, 0.0);
  for (int i = 0; i < rows_; ++i) {
    t += (*this)(i, i);
  }
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& v : data_) {
    m = std::max(m, std::abs(v));
  }
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& v : data_) {
    s += std::norm(v);
  }
  return std::sqrt(s);
}

double ComplexMatrix::hermiticity_deviation() const {
  if (!is_square()) {
    throw ParameterError("hermiticity check on a non-square matrix");
  }
  double dev = 0.0;
  for (int i = 0; i < rows_; ++i) {
    for (int j = i; j < cols_; ++j) {
      dev = std::max(dev, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return dev;
}

bool ComplexMatrix::all_finite() const {
  for (const Complex& v : data_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      return false;
    }
  }
  return true;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  a += b;
  return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
  a -= b;
  return a;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix m) {
  m *= scale;
  return m;
}

ComplexMatrix operator*(ComplexMatrix m, Complex scale) {
  m *= scale;
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ParameterError("matrix shape mismatch in product");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) {
        continue;
      }
      for (int j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ParameterError("matrix shape mismatch in comparison");
  }
  double dev = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    dev = std::max(dev, std::abs(a.data()[i] - b.data()[i]));
  }
  return dev;
}

double real_inner_trace(const ComplexMatrix& effect, const ComplexMatrix& state) {
  if (!effect.is_square() || effect.rows() != state.rows() || effect.cols() != state.cols()) {
    throw ParameterError("shape mismatch between effect and state");
  }
  // tr(E S) = sum_{i,j} E(i,j) S(j,i)
  double acc = 0.0;
  const int n = effect.rows();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Complex& e = effect(i, j);
      const Complex& s = state(j, i);
      acc += e.real() * s.real() - e.imag() * s.imag();
    }
  }
  return acc;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, int dim_cap) {
  const long long out_rows = static_cast<long long>(a.rows()) * b.rows();
  const long long out_cols = static_cast<long long>(a.cols()) * b.cols();
  if (out_rows > dim_cap || out_cols > dim_cap) {
    throw DimensionLimitError("kron result " + std::to_string(out_rows) + "x" +
                              std::to_string(out_cols) + " exceeds dimension cap " +
                              std::to_string(dim_cap));
  }
  ComplexMatrix out(static_cast<int>(out_rows), static_cast<int>(out_cols));
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0, 0.0)) {
        continue;
      }
      for (int k = 0; k < b.rows(); ++k) {
        for (int l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

}  // namespace ccq

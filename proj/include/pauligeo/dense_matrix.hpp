// Copyright 2026 The pauligeo Authors
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

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "pauligeo/pauli_operator.hpp"

namespace pauligeo {

inline constexpr double kOracleTolerance = 1e-9;
inline constexpr int kOracleDimensionCap = 64;

/// Small dense complex matrix. Exists only to back the numeric commutation
/// oracle; the rest of the library never touches floating point.
class DenseMatrix {
 public:
  explicit DenseMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {
    if (dim <= 0) throw std::invalid_argument("DenseMatrix: dimension must be positive");
  }

  static DenseMatrix identity(int dim) {
    DenseMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
  }

  int dim() const { return dim_; }

  std::complex<double>& at(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
  const std::complex<double>& at(int r, int c) const {
    return a_[static_cast<size_t>(r) * dim_ + c];
  }

  DenseMatrix operator*(const DenseMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("DenseMatrix: dimension mismatch");
    DenseMatrix out(dim_);
    for (int i = 0; i < dim_; ++i) {
      for (int k = 0; k < dim_; ++k) {
        const std::complex<double> v = at(i, k);
        if (v == 0.0) continue;
        for (int j = 0; j < dim_; ++j) out.at(i, j) += v * o.at(k, j);
      }
    }
    return out;
  }

  DenseMatrix kron(const DenseMatrix& o) const {
    DenseMatrix out(dim_ * o.dim_);
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j) {
        const std::complex<double> v = at(i, j);
        if (v == 0.0) continue;
        for (int r = 0; r < o.dim_; ++r) {
          for (int c = 0; c < o.dim_; ++c) {
            out.at(i * o.dim_ + r, j * o.dim_ + c) = v * o.at(r, c);
          }
        }
      }
    }
    return out;
  }

  double max_abs_diff(const DenseMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("DenseMatrix: dimension mismatch");
    double m = 0.0;
    for (size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - o.a_[i]));
    return m;
  }

  bool is_unitary(double tol = kOracleTolerance) const {
    DenseMatrix prod(dim_);
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j) {
        std::complex<double> s = 0.0;
        for (int k = 0; k < dim_; ++k) s += at(k, i) * std::conj(at(k, j));
        prod.at(i, j) = s;
      }
    }
    return prod.max_abs_diff(identity(dim_)) <= tol;
  }

 private:
  int dim_;
  std::vector<std::complex<double>> a_;
};

/// X_d^x Z_d^z on one factor: entry [(n + x) mod d][n] = omega_d^(n z).
inline DenseMatrix shift_clock_matrix(int d, int x, int z) {
  DenseMatrix m(d);
  for (int n = 0; n < d; ++n) {
    const int phase = (n * z) % d;
    m.at((n + x) % d, n) =
        std::polar(1.0, 2.0 * std::numbers::pi * phase / d);
  }
  return m;
}

inline DenseMatrix build_matrix(const PauliOperator& op, const SystemSpec& spec) {
  check_conforms(op, spec);
  DenseMatrix m = shift_clock_matrix(spec.factor_dim(0), op.factors[0].x, op.factors[0].z);
  for (int k = 1; k < spec.factor_count(); ++k) {
    m = m.kron(shift_clock_matrix(spec.factor_dim(k), op.factors[k].x, op.factors[k].z));
  }
  return m;
}

/// Numeric commutation oracle: ||AB - BA||_max < tolerance on the explicit
/// matrices. Independent of the residue arithmetic by construction.
inline bool matrix_commutes(const PauliOperator& a, const PauliOperator& b,
                            const SystemSpec& spec,
                            int dimension_cap = kOracleDimensionCap,
                            double tolerance = kOracleTolerance) {
  if (spec.total_dim() > dimension_cap) {
    throw std::domain_error("matrix_commutes: dimension " +
                            std::to_string(spec.total_dim()) + " exceeds cap " +
                            std::to_string(dimension_cap));
  }
  const DenseMatrix ma = build_matrix(a, spec);
  const DenseMatrix mb = build_matrix(b, spec);
  return (ma * mb).max_abs_diff(mb * ma) < tolerance;
}

}  // namespace pauligeo

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

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "pauligeo/system_spec.hpp"

namespace pauligeo {

/// Exponents of the shift/clock pair for one tensor factor: X^x Z^z.
struct FactorExponents {
  int x = 0;
  int z = 0;
  friend auto operator<=>(const FactorExponents&, const FactorExponents&) = default;
};

/// A generalized Pauli operator modulo global phase. Factor k carries the
/// exponent pair of X_{d_k}^x Z_{d_k}^z; the identity has all exponents zero.
struct PauliOperator {
  std::vector<FactorExponents> factors;

  bool is_identity() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const FactorExponents& f) { return f.x == 0 && f.z == 0; });
  }

  friend auto operator<=>(const PauliOperator&, const PauliOperator&) = default;
};

inline void check_conforms(const PauliOperator& op, const SystemSpec& spec) {
  if (static_cast<int>(op.factors.size()) != spec.factor_count()) {
    throw std::invalid_argument("operator factor count does not match system");
  }
  for (int k = 0; k < spec.factor_count(); ++k) {
    const auto& f = op.factors[k];
    const int d = spec.factor_dim(k);
    if (f.x < 0 || f.x >= d || f.z < 0 || f.z >= d) {
      throw std::invalid_argument("operator exponent out of range for factor " +
                                  std::to_string(k));
    }
  }
}

inline PauliOperator identity_operator(const SystemSpec& spec) {
  PauliOperator op;
  op.factors.resize(spec.factor_count());
  return op;
}

/// All D^2 - 1 non-identity operators in lexicographic order over the
/// flattened exponent tuple (x_1, z_1, x_2, z_2, ...).
inline std::vector<PauliOperator> enumerate_operators(const SystemSpec& spec) {
  const int n = spec.factor_count();
  std::vector<PauliOperator> out;
  out.reserve(static_cast<size_t>(spec.total_dim()) * spec.total_dim());
  PauliOperator cur = identity_operator(spec);
  while (true) {
    // advance cur like a mixed-radix counter, least significant position last
    int pos = 2 * n - 1;
    for (; pos >= 0; --pos) {
      const int d = spec.factor_dim(pos / 2);
      int& e = (pos % 2 == 0) ? cur.factors[pos / 2].x : cur.factors[pos / 2].z;
      if (e + 1 < d) {
        ++e;
        break;
      }
      e = 0;
    }
    if (pos < 0) break;
    out.push_back(cur);
  }
  // the counter emits tuples in ascending lexicographic order already
  return out;
}

/// Commutation residue mod the phase period L: A and B commute exactly when
/// the residue is zero. Factor k contributes (x_A z_B - z_A x_B) * (L / d_k);
/// the weighted sum is what makes repeated prime factors interact correctly.
inline int symplectic_residue(const PauliOperator& a, const PauliOperator& b,
                              const SystemSpec& spec) {
  check_conforms(a, spec);
  check_conforms(b, spec);
  const int L = spec.phase_period();
  long long s = 0;
  for (int k = 0; k < spec.factor_count(); ++k) {
    const long long cross = static_cast<long long>(a.factors[k].x) * b.factors[k].z -
                            static_cast<long long>(a.factors[k].z) * b.factors[k].x;
    s += cross * (L / spec.factor_dim(k));
  }
  return static_cast<int>(((s % L) + L) % L);
}

inline bool commutes(const PauliOperator& a, const PauliOperator& b,
                     const SystemSpec& spec) {
  return symplectic_residue(a, b, spec) == 0;
}

/// Componentwise exponent sum mod d_k: the phase-free operator product.
inline PauliOperator product(const PauliOperator& a, const PauliOperator& b,
                             const SystemSpec& spec) {
  check_conforms(a, spec);
  check_conforms(b, spec);
  PauliOperator out;
  out.factors.resize(spec.factor_count());
  for (int k = 0; k < spec.factor_count(); ++k) {
    const int d = spec.factor_dim(k);
    out.factors[k].x = (a.factors[k].x + b.factors[k].x) % d;
    out.factors[k].z = (a.factors[k].z + b.factors[k].z) % d;
  }
  return out;
}

/// The p + 1 maximal commuting classes of a single prime-dimensional factor:
/// the clock class {Z^k} and, for each m in 0..p-1, the class {(X Z^m)^k},
/// k = 1..p-1. Classes are pairwise disjoint and exhaust the p^2 - 1
/// operators; operators from distinct classes never commute.
inline std::vector<std::vector<PauliOperator>> mub_classes_prime(int p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("mub_classes_prime: " + std::to_string(p) +
                                " is not prime");
  }
  std::vector<std::vector<PauliOperator>> classes;
  classes.reserve(p + 1);
  std::vector<PauliOperator> clock;
  for (int k = 1; k < p; ++k) {
    clock.push_back(PauliOperator{{FactorExponents{0, k}}});
  }
  classes.push_back(std::move(clock));
  for (int m = 0; m < p; ++m) {
    std::vector<PauliOperator> cls;
    for (int k = 1; k < p; ++k) {
      cls.push_back(PauliOperator{{FactorExponents{k, (m * k) % p}}});
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

/// Canonical text form, factors joined by '.': e.g. "X^2Z.I".
inline std::string to_string(const PauliOperator& op) {
  std::string s;
  for (size_t k = 0; k < op.factors.size(); ++k) {
    if (k) s += '.';
    const auto& f = op.factors[k];
    if (f.x == 0 && f.z == 0) {
      s += 'I';
      continue;
    }
    if (f.x > 0) {
      s += 'X';
      if (f.x > 1) s += '^' + std::to_string(f.x);
    }
    if (f.z > 0) {
      s += 'Z';
      if (f.z > 1) s += '^' + std::to_string(f.z);
    }
  }
  return s;
}

}  // namespace pauligeo

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

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "pauligeo/graph.hpp"

namespace pauligeo {

inline constexpr int kSpectrumVertexCap = 512;

/// Exact adjacency spectrum. `eigenvalues` lists (value, multiplicity)
/// ascending; `residual_factor` is the monic integer polynomial (ascending
/// powers) left after all integer roots are divided out, empty when the
/// spectrum splits completely over the integers.
struct Spectrum {
  std::vector<std::pair<int, int>> eigenvalues;
  std::vector<mpz_class> residual_factor;

  /// "{-2:6, 1:3, 2:2, 5:1}", with "; residual [c0, c1, ...]" appended
  /// when an unsplit factor remains.
  std::string to_string() const {
    std::string s = "{";
    for (size_t i = 0; i < eigenvalues.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(eigenvalues[i].first) + ":" +
           std::to_string(eigenvalues[i].second);
    }
    s += "}";
    if (!residual_factor.empty()) {
      s += "; residual [";
      for (size_t i = 0; i < residual_factor.size(); ++i) {
        if (i) s += ", ";
        s += residual_factor[i].get_str();
      }
      s += "]";
    }
    return s;
  }
};

/// Coefficients of det(xI - A), ascending powers, c[n] = 1. Exact integer
/// arithmetic throughout (the trace divisions in the Faddeev-LeVerrier
/// recurrence are exact); adjacency weights are ignored.
inline std::vector<mpz_class> characteristic_polynomial(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<mpz_class> coeff(n + 1);
  coeff[n] = 1;
  if (n == 0) return coeff;

  // M starts as the identity; one step is B = A*M, c = -tr(B)/k, M = B + cI.
  // A is 0/1 so A*M only needs row additions over neighbor lists.
  std::vector<std::vector<int>> nbrs(n);
  for (int v = 0; v < n; ++v) nbrs[v] = g.neighbors(v);

  std::vector<mpz_class> M(static_cast<size_t>(n) * n), B(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) M[static_cast<size_t>(i) * n + i] = 1;

  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i) {
      mpz_class* brow = B.data() + static_cast<size_t>(i) * n;
      for (int j = 0; j < n; ++j) brow[j] = 0;
      for (int t : nbrs[i]) {
        const mpz_class* mrow = M.data() + static_cast<size_t>(t) * n;
        for (int j = 0; j < n; ++j) brow[j] += mrow[j];
      }
    }
    mpz_class trace = 0;
    for (int i = 0; i < n; ++i) trace += B[static_cast<size_t>(i) * n + i];
    mpz_class c;
    mpz_divexact_ui(c.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
    c = -c;
    coeff[n - k] = c;
    M.swap(B);
    for (int i = 0; i < n; ++i) M[static_cast<size_t>(i) * n + i] += c;
  }
  return coeff;
}

namespace detail {

inline mpz_class eval_poly(const std::vector<mpz_class>& p, long t) {
  mpz_class v = 0;
  for (size_t i = p.size(); i-- > 0;) {
    v *= t;
    v += p[i];
  }
  return v;
}

// quotient of p by (x - t); only valid when t is a root
inline std::vector<mpz_class> deflate(const std::vector<mpz_class>& p, long t) {
  std::vector<mpz_class> q(p.size() - 1);
  mpz_class carry = p.back();
  for (size_t i = p.size() - 1; i-- > 0;) {
    q[i] = carry;
    carry = p[i] + carry * t;
  }
  return q;
}

}  // namespace detail

/// Integer eigenvalues with multiplicities, found by exact root extraction
/// from the characteristic polynomial. Candidate roots range over the
/// integers bounded by the maximum degree and are screened against the
/// constant term; whatever does not split stays in residual_factor.
inline Spectrum spectrum_exact(const Graph& g, int vertex_cap = kSpectrumVertexCap) {
  if (g.vertex_count() > vertex_cap) {
    throw std::domain_error("spectrum_exact: vertex count " +
                            std::to_string(g.vertex_count()) + " exceeds cap " +
                            std::to_string(vertex_cap));
  }
  Spectrum out;
  std::vector<mpz_class> poly = characteristic_polynomial(g);
  long bound = 0;
  for (int v = 0; v < g.vertex_count(); ++v) bound = std::max<long>(bound, g.degree(v));

  // peel zero roots first so the constant term screens the remaining ones
  int zero_mult = 0;
  while (poly.size() > 1 && poly[0] == 0) {
    poly = detail::deflate(poly, 0);
    ++zero_mult;
  }
  for (long t = -bound; t <= bound; ++t) {
    if (t == 0) {
      if (zero_mult > 0) out.eigenvalues.emplace_back(0, zero_mult);
      continue;
    }
    int mult = 0;
    while (poly.size() > 1 &&
           mpz_divisible_ui_p(poly[0].get_mpz_t(),
                              static_cast<unsigned long>(t < 0 ? -t : t)) &&
           detail::eval_poly(poly, t) == 0) {
      poly = detail::deflate(poly, t);
      ++mult;
    }
    if (mult > 0) out.eigenvalues.emplace_back(static_cast<int>(t), mult);
  }
  if (poly.size() > 1) out.residual_factor = std::move(poly);
  return out;
}

}  // namespace pauligeo

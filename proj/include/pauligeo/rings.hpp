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
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pauligeo/graph.hpp"

namespace pauligeo {

/// Direct product of integer residue rings Z_{m_1} x ... x Z_{m_r} with
/// componentwise arithmetic. Elements are indices 0..size-1 in mixed-radix
/// order, first component most significant, so the element order matches the
/// primed-label convention for Z_2 x Z_3 (0'=(0,0), 1'=(0,1), ..., 5'=(1,2)).
class ProductRing {
 public:
  explicit ProductRing(std::vector<int> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw std::invalid_argument("ProductRing: no moduli");
    size_ = 1;
    for (int m : moduli_) {
      if (m < 2) throw std::invalid_argument("ProductRing: modulus must be at least 2");
      if (size_ > kMaxElements / m) {
        throw std::invalid_argument("ProductRing: size exceeds " +
                                    std::to_string(kMaxElements));
      }
      size_ *= m;
    }
  }

  // keeps the exhaustive projective-line search tractable
  static constexpr int kMaxElements = 256;

  const std::vector<int>& moduli() const { return moduli_; }
  int components() const { return static_cast<int>(moduli_.size()); }
  int size() const { return size_; }

  std::vector<int> tuple_of(int e) const {
    check_element(e);
    std::vector<int> t(moduli_.size());
    for (size_t k = moduli_.size(); k-- > 0;) {
      t[k] = e % moduli_[k];
      e /= moduli_[k];
    }
    return t;
  }

  int index_of(const std::vector<int>& tuple) const {
    if (tuple.size() != moduli_.size()) {
      throw std::invalid_argument("ProductRing: tuple arity mismatch");
    }
    int e = 0;
    for (size_t k = 0; k < moduli_.size(); ++k) {
      if (tuple[k] < 0 || tuple[k] >= moduli_[k]) {
        throw std::invalid_argument("ProductRing: tuple entry out of range");
      }
      e = e * moduli_[k] + tuple[k];
    }
    return e;
  }

  int zero() const { return 0; }

  int one() const {
    std::vector<int> t(moduli_.size(), 1);
    return index_of(t);
  }

  int add(int a, int b) const {
    auto ta = tuple_of(a), tb = tuple_of(b);
    for (size_t k = 0; k < moduli_.size(); ++k) ta[k] = (ta[k] + tb[k]) % moduli_[k];
    return index_of(ta);
  }

  int sub(int a, int b) const {
    auto ta = tuple_of(a), tb = tuple_of(b);
    for (size_t k = 0; k < moduli_.size(); ++k) {
      ta[k] = ((ta[k] - tb[k]) % moduli_[k] + moduli_[k]) % moduli_[k];
    }
    return index_of(ta);
  }

  int mul(int a, int b) const {
    auto ta = tuple_of(a), tb = tuple_of(b);
    for (size_t k = 0; k < moduli_.size(); ++k) ta[k] = (ta[k] * tb[k]) % moduli_[k];
    return index_of(ta);
  }

  bool is_unit(int a) const {
    auto t = tuple_of(a);
    for (size_t k = 0; k < moduli_.size(); ++k) {
      if (std::gcd(t[k], moduli_[k]) != 1) return false;
    }
    return true;
  }

 private:
  void check_element(int e) const {
    if (e < 0 || e >= size_) throw std::out_of_range("ProductRing: element out of range");
  }

  std::vector<int> moduli_;
  int size_;
};

struct RingClassification {
  std::vector<int> units;
  std::vector<int> zero_divisors;  // the non-units; zero is counted here
};

/// Units and zero divisors. Following the classical usage for these lines,
/// zero itself is listed among the zero divisors.
inline RingClassification classify_elements(const ProductRing& ring) {
  RingClassification out;
  for (int e = 0; e < ring.size(); ++e) {
    (ring.is_unit(e) ? out.units : out.zero_divisors).push_back(e);
  }
  return out;
}

struct CayleyTables {
  std::vector<std::vector<int>> addition;
  std::vector<std::vector<int>> multiplication;
};

inline CayleyTables ring_tables(const ProductRing& ring) {
  const int n = ring.size();
  CayleyTables t{std::vector<std::vector<int>>(n, std::vector<int>(n)),
                 std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      t.addition[a][b] = ring.add(a, b);
      t.multiplication[a][b] = ring.mul(a, b);
    }
  }
  return t;
}

/// Admissibility of the pair (alpha, beta): some completion (gamma, delta)
/// makes the determinant a unit. Decided by exhaustive search over all
/// completions; closed-form shortcuts are deliberately avoided at these
/// sizes so the definition itself is what runs.
inline bool is_admissible(const ProductRing& ring, int alpha, int beta) {
  for (int gamma = 0; gamma < ring.size(); ++gamma) {
    for (int delta = 0; delta < ring.size(); ++delta) {
      const int det = ring.sub(ring.mul(alpha, delta), ring.mul(beta, gamma));
      if (ring.is_unit(det)) return true;
    }
  }
  return false;
}

/// A point of the projective line: the unit-multiple class of an admissible
/// pair. The representative is the lexicographically least member.
struct ProjectivePoint {
  std::pair<int, int> representative;
  std::vector<std::pair<int, int>> members;  // ascending
};

/// The projective line over the ring: unit-orbit classes of admissible
/// pairs, sorted by representative.
inline std::vector<ProjectivePoint> projective_line(const ProductRing& ring) {
  std::vector<int> units;
  for (int e = 0; e < ring.size(); ++e) {
    if (ring.is_unit(e)) units.push_back(e);
  }
  const int n = ring.size();
  std::vector<bool> seen(static_cast<size_t>(n) * n, false);
  std::vector<ProjectivePoint> out;
  for (int alpha = 0; alpha < n; ++alpha) {
    for (int beta = 0; beta < n; ++beta) {
      if (seen[static_cast<size_t>(alpha) * n + beta]) continue;
      if (!is_admissible(ring, alpha, beta)) continue;
      ProjectivePoint pt;
      for (int rho : units) {
        const int a = ring.mul(rho, alpha);
        const int b = ring.mul(rho, beta);
        if (!seen[static_cast<size_t>(a) * n + b]) {
          seen[static_cast<size_t>(a) * n + b] = true;
          pt.members.emplace_back(a, b);
        }
      }
      std::sort(pt.members.begin(), pt.members.end());
      pt.representative = pt.members.front();
      out.push_back(std::move(pt));
    }
  }
  std::sort(out.begin(), out.end(), [](const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.representative < b.representative;
  });
  return out;
}

struct PointTypeCounts {
  int one_unit = 0;            // exactly one entry is a unit
  int both_units = 0;
  int both_zero_divisors = 0;  // neither entry is a unit
};

/// Entry-type census of the points. Unit multiplication preserves entry
/// types, so the census does not depend on the choice of representatives.
inline PointTypeCounts classify_points(const ProductRing& ring,
                                       const std::vector<ProjectivePoint>& points) {
  PointTypeCounts out;
  for (const auto& pt : points) {
    const int units = (ring.is_unit(pt.representative.first) ? 1 : 0) +
                      (ring.is_unit(pt.representative.second) ? 1 : 0);
    if (units == 2) {
      ++out.both_units;
    } else if (units == 1) {
      ++out.one_unit;
    } else {
      ++out.both_zero_divisors;
    }
  }
  return out;
}

/// Neighbor relation: the matrix stacked from the two representatives has a
/// non-unit determinant. Unit rescaling multiplies the determinant by a
/// unit, so the relation is representative-independent. Identical points are
/// rejected.
inline bool neighbor(const ProductRing& ring, const ProjectivePoint& x,
                     const ProjectivePoint& y) {
  if (x.representative == y.representative) {
    throw std::invalid_argument("neighbor: points must be distinct");
  }
  const int det = ring.sub(ring.mul(x.representative.first, y.representative.second),
                           ring.mul(x.representative.second, y.representative.first));
  return !ring.is_unit(det);
}

/// Graph of the projective line: vertex i is the i-th point (sorted by
/// representative), edges join neighbor pairs.
inline Graph neighbor_graph(const ProductRing& ring) {
  const auto points = projective_line(ring);
  Graph g(static_cast<int>(points.size()));
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = i + 1; j < points.size(); ++j) {
      if (neighbor(ring, points[i], points[j])) {
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return g;
}

/// "(0,1)" tuple rendering of a ring element.
inline std::string ring_element_label(const ProductRing& ring, int e) {
  const auto t = ring.tuple_of(e);
  std::string s = "(";
  for (size_t k = 0; k < t.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(t[k]);
  }
  s += ')';
  return s;
}

/// Primed labels 0', 1', ... index the elements in canonical order; the
/// customary presentation for Z_2 x Z_3.
inline std::string primed_label(int e) { return std::to_string(e) + "'"; }

}  // namespace pauligeo

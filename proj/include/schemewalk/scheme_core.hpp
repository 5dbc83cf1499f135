// Copyright 2026 The schemewalk Authors
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

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

namespace schemewalk {

/// Tolerance used for every algebraic identity on P/Q matrices.
inline constexpr double kMatrixTolerance = 1e-9;

/// Intersection array of a distance-regular graph, stored in "outward /
/// backward" orientation:
///
///   forward[i]  = c_i, neighbours one stratum further out, i = 0..d-1
///   backward[i] = b_{i+1}, neighbours one stratum back,   i = 0..d-1
///
/// The boundary values b_0 = 0 and c_d = 0 are implied and never stored.
/// Note that this is the reverse of the usual {b_0,..;c_1,..} notation.
struct IntersectionArray {
  int diameter = 0;
  std::vector<std::int64_t> forward;
  std::vector<std::int64_t> backward;

  /// c_i with c_d = 0.
  std::int64_t c(int i) const;
  /// b_i with b_0 = 0.
  std::int64_t b(int i) const;
  std::int64_t degree() const { return forward.empty() ? 0 : forward.front(); }

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

/// Stratum sizes a_0..a_d (equivalently the valencies of the distance
/// relations) and their sum n.
struct ValencyVector {
  std::vector<std::int64_t> sizes;
  std::int64_t order = 0;

  int diameter() const { return static_cast<int>(sizes.size()) - 1; }
  friend bool operator==(const ValencyVector&, const ValencyVector&) = default;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Eigenmatrix P (row i = primitive idempotent E_i, column j = relation A_j),
/// dual eigenmatrix Q (row = relation, column = idempotent), multiplicities
/// and valencies. Row 0 of P is the trivial idempotent J/n.
struct SchemeEigenstructure {
  Eigen::MatrixXd P;
  Eigen::MatrixXd Q;
  Eigen::VectorXd multiplicities;
  ValencyVector valencies;

  int classes() const { return static_cast<int>(P.rows()); }
};

/// Largest deviations of the identities an eigenstructure must satisfy.
struct EigenstructureResiduals {
  double pq = 0.0;            // max |PQ - nI|
  double qp = 0.0;            // max |QP - nI|
  double boundary = 0.0;      // P_i0 = Q_i0 = 1, P_0i = a_i, Q_0i = m_i
  double multiplicity = 0.0;  // max |m_j P_ji - a_i Q_ij|
  double multiplicitySum = 0.0;

  double worst() const;
};

/// a_k = c_0...c_{k-1} / (b_1...b_k). Throws NonIntegerValency when any
/// quotient is fractional and InvalidIntersectionArray when the array is
/// structurally malformed.
ValencyVector derive_stratum_sizes(const IntersectionArray& array);

/// Collects every violated constraint instead of throwing.
ValidationReport validate_intersection_array(const IntersectionArray& array);

/// Throws InvalidIntersectionArray (or NonIntegerValency) with the first
/// violation when the array does not validate.
void require_valid(const IntersectionArray& array);

/// Eigenmatrices of the P-polynomial scheme with the given array. Rows are
/// ordered by decreasing eigenvalue of A_1, so row 0 is the degree.
/// Throws DuplicateAtoms if two eigenvalues coincide within 1e-9.
SchemeEigenstructure eigenstructure_from_array(const IntersectionArray& array);

EigenstructureResiduals check_eigenstructure(const SchemeEigenstructure& es);

void to_json(nlohmann::json& j, const IntersectionArray& array);
/// Strict: requires exactly {"d", "c_forward", "b_backward"}.
void from_json(const nlohmann::json& j, IntersectionArray& array);

}  // namespace schemewalk

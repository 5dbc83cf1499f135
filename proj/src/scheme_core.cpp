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

#include "schemewalk/scheme_core.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "schemewalk/errors.hpp"
#include "schemewalk/spectral.hpp"

namespace schemewalk {

std::int64_t IntersectionArray::c(int i) const {
  if (i < 0 || i >= diameter) return 0;
  return forward[static_cast<std::size_t>(i)];
}

std::int64_t IntersectionArray::b(int i) const {
  if (i <= 0 || i > diameter) return 0;
  return backward[static_cast<std::size_t>(i - 1)];
}

double EigenstructureResiduals::worst() const {
  return std::max({pq, qp, boundary, multiplicity, multiplicitySum});
}

namespace {

std::vector<std::string> structural_violations(const IntersectionArray& ia) {
  std::vector<std::string> out;
  if (ia.diameter < 1) {
    out.push_back("diameter must be at least 1");
    return out;
  }
  const auto d = static_cast<std::size_t>(ia.diameter);
  if (ia.forward.size() != d) out.push_back("c_forward must have d entries");
  if (ia.backward.size() != d) out.push_back("b_backward must have d entries");
  if (!out.empty()) return out;

  if (ia.forward[0] < 1) out.push_back("c_0 must be positive (graph is disconnected)");
  for (int i = 1; i < ia.diameter; ++i) {
    if (ia.c(i) < 1) {
      out.push_back("c_" + std::to_string(i) + " must be positive (stratum " +
                    std::to_string(i + 1) + " unreachable)");
    }
  }
  for (int i = 1; i <= ia.diameter; ++i) {
    if (ia.b(i) < 1) out.push_back("b_" + std::to_string(i) + " must be positive");
  }
  if (!out.empty()) return out;

  if (ia.b(1) != 1) {
    out.push_back("degree mismatch: a_1 = c_0 / b_1 differs from c_0 (b_1 = " +
                  std::to_string(ia.b(1)) + ")");
  }
  for (int i = 1; i <= ia.diameter; ++i) {
    if (ia.c(i) + ia.b(i) > ia.degree()) {
      out.push_back("c_" + std::to_string(i) + " + b_" + std::to_string(i) +
                    " exceeds the degree c_0");
    }
  }
  return out;
}

/// Sizes or the index of the first non-integer quotient.
std::pair<ValencyVector, int> try_stratum_sizes(const IntersectionArray& ia) {
  ValencyVector v;
  v.sizes.reserve(static_cast<std::size_t>(ia.diameter) + 1);
  v.sizes.push_back(1);
  std::int64_t current = 1;
  for (int k = 1; k <= ia.diameter; ++k) {
    // a_k = a_{k-1} c_{k-1} / b_k; exact at every step iff every a_k is an integer.
    const std::int64_t numerator = current * ia.c(k - 1);
    if (numerator % ia.b(k) != 0) return {v, k};
    current = numerator / ia.b(k);
    v.sizes.push_back(current);
  }
  v.order = 0;
  for (auto a : v.sizes) v.order += a;
  return {v, -1};
}

}  // namespace

ValidationReport validate_intersection_array(const IntersectionArray& array) {
  ValidationReport report;
  report.violations = structural_violations(array);
  if (!report.ok()) return report;
  auto [sizes, bad] = try_stratum_sizes(array);
  if (bad >= 0) {
    report.violations.push_back("a_" + std::to_string(bad) + " is not an integer");
  }
  return report;
}

ValencyVector derive_stratum_sizes(const IntersectionArray& array) {
  auto structural = structural_violations(array);
  if (!structural.empty()) fail(ErrorCode::InvalidIntersectionArray, structural.front());
  auto [sizes, bad] = try_stratum_sizes(array);
  if (bad >= 0) {
    fail(ErrorCode::NonIntegerValency,
         "a_" + std::to_string(bad) + " = c_0...c_" + std::to_string(bad - 1) + " / b_1...b_" +
             std::to_string(bad) + " is not an integer");
  }
  return sizes;
}

void require_valid(const IntersectionArray& array) {
  auto structural = structural_violations(array);
  if (!structural.empty()) fail(ErrorCode::InvalidIntersectionArray, structural.front());
  (void)derive_stratum_sizes(array);
}

SchemeEigenstructure eigenstructure_from_array(const IntersectionArray& array) {
  require_valid(array);
  const auto valencies = derive_stratum_sizes(array);
  const auto jc = jacobi_from_intersection(array);
  const auto dist = gauss_quadrature(jc);
  const int d = array.diameter;
  const auto n = static_cast<double>(valencies.order);

  for (std::size_t l = 1; l < dist.atoms.size(); ++l) {
    if (dist.atoms[l] - dist.atoms[l - 1] <= 1e-9) {
      fail(ErrorCode::DuplicateAtoms, "eigenvalues " + std::to_string(dist.atoms[l - 1]) +
                                          " and " + std::to_string(dist.atoms[l]) + " coincide");
    }
  }

  SchemeEigenstructure es;
  es.valencies = valencies;
  es.P.resize(d + 1, d + 1);
  es.Q.resize(d + 1, d + 1);
  es.multiplicities.resize(d + 1);

  // Row i <-> atom in decreasing order; v_j = Q_j / (b_1...b_j) so A_j = v_j(A_1).
  for (int i = 0; i <= d; ++i) {
    const auto l = static_cast<std::size_t>(d - i);
    const auto q = evaluate_polynomials(jc, dist.atoms[l], d);
    double bProduct = 1.0;
    for (int j = 0; j <= d; ++j) {
      if (j > 0) bProduct *= static_cast<double>(array.b(j));
      es.P(i, j) = q[static_cast<std::size_t>(j)] / bProduct;
    }
    es.multiplicities[i] = n * dist.weights[l];
  }
  for (int i = 0; i <= d; ++i) {
    const auto ai = static_cast<double>(valencies.sizes[static_cast<std::size_t>(i)]);
    for (int j = 0; j <= d; ++j) {
      es.Q(i, j) = es.multiplicities[j] * es.P(j, i) / ai;
    }
  }
  return es;
}

EigenstructureResiduals check_eigenstructure(const SchemeEigenstructure& es) {
  EigenstructureResiduals r;
  const auto d1 = es.P.rows();
  const auto n = static_cast<double>(es.valencies.order);
  const Eigen::MatrixXd nI = n * Eigen::MatrixXd::Identity(d1, d1);
  r.pq = (es.P * es.Q - nI).cwiseAbs().maxCoeff();
  r.qp = (es.Q * es.P - nI).cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < d1; ++i) {
    const auto ai = static_cast<double>(es.valencies.sizes[static_cast<std::size_t>(i)]);
    r.boundary = std::max({r.boundary, std::abs(es.P(i, 0) - 1.0), std::abs(es.Q(i, 0) - 1.0),
                           std::abs(es.P(0, i) - ai), std::abs(es.Q(0, i) - es.multiplicities[i])});
    for (Eigen::Index j = 0; j < d1; ++j) {
      r.multiplicity =
          std::max(r.multiplicity, std::abs(es.multiplicities[j] * es.P(j, i) - ai * es.Q(i, j)));
    }
  }
  r.multiplicitySum = std::abs(es.multiplicities.sum() - n);
  r.boundary = std::max(r.boundary, std::abs(es.multiplicities[0] - 1.0));
  return r;
}

void to_json(nlohmann::json& j, const IntersectionArray& array) {
  j = nlohmann::json{{"d", array.diameter},
                     {"c_forward", array.forward},
                     {"b_backward", array.backward}};
}

void from_json(const nlohmann::json& j, IntersectionArray& array) {
  static const std::set<std::string> allowed{"d", "c_forward", "b_backward"};
  if (!j.is_object()) fail(ErrorCode::SchemaError, "/: intersection array must be an object");
  for (const auto& [key, _] : j.items()) {
    if (!allowed.contains(key)) fail(ErrorCode::SchemaError, "/" + key + ": unknown field");
  }
  for (const auto& key : allowed) {
    if (!j.contains(key)) fail(ErrorCode::SchemaError, "/" + key + ": missing field");
  }
  if (!j.at("d").is_number_integer()) fail(ErrorCode::SchemaError, "/d: expected integer");
  auto readList = [&](const std::string& key) {
    const auto& node = j.at(key);
    if (!node.is_array()) fail(ErrorCode::SchemaError, "/" + key + ": expected array");
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < node.size(); ++i) {
      if (!node[i].is_number_integer()) {
        fail(ErrorCode::SchemaError, "/" + key + "/" + std::to_string(i) + ": expected integer");
      }
      out.push_back(node[i].get<std::int64_t>());
    }
    return out;
  };
  array.diameter = j.at("d").get<int>();
  array.forward = readList("c_forward");
  array.backward = readList("b_backward");
  const auto d = static_cast<std::size_t>(std::max(array.diameter, 0));
  if (array.forward.size() != d) fail(ErrorCode::SchemaError, "/c_forward: expected d entries");
  if (array.backward.size() != d) fail(ErrorCode::SchemaError, "/b_backward: expected d entries");
}

}  // namespace schemewalk

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

#include "schemewalk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "schemewalk/errors.hpp"

namespace schemewalk::linalg {
namespace {

constexpr double kDeflationTolerance = 1e-14;

SymmetricEigensystem sorted(Eigen::VectorXd values, Eigen::MatrixXd vectors,
                            int iterations) {
  const auto n = values.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return values[a] < values[b]; });
  SymmetricEigensystem out;
  out.values.resize(n);
  out.vectors.resize(vectors.rows(), n);
  for (Eigen::Index j = 0; j < n; ++j) {
    out.values[j] = values[order[static_cast<std::size_t>(j)]];
    out.vectors.col(j) = vectors.col(order[static_cast<std::size_t>(j)]);
  }
  out.iterations = iterations;
  return out;
}

}  // namespace

SymmetricEigensystem tridiagonal_eigen(std::span<const double> diagonal,
                                       std::span<const double> offDiagonal) {
  const int n = static_cast<int>(diagonal.size());
  if (n == 0) return {};
  if (static_cast<int>(offDiagonal.size()) != n - 1) {
    fail(ErrorCode::InconsistentInputs,
         "tridiagonal_eigen: off-diagonal must have n-1 entries");
  }
  std::vector<double> d(diagonal.begin(), diagonal.end());
  std::vector<double> e(offDiagonal.begin(), offDiagonal.end());
  e.push_back(0.0);
  Eigen::MatrixXd z = Eigen::MatrixXd::Identity(n, n);

  const int cap = 100 * n;
  int sweeps = 0;
  for (int l = 0; l < n; ++l) {
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kDeflationTolerance * dd ||
            std::abs(e[m]) < std::numeric_limits<double>::min()) {
          break;
        }
      }
      if (m == l) break;
      if (++sweeps > cap) {
        fail(ErrorCode::EigensolverNoConvergence,
             "tridiagonal QL exceeded " + std::to_string(cap) + " sweeps");
      }
      // Wilkinson shift from the leading 2x2 block.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      int i = m - 1;
      for (; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        for (int k = 0; k < n; ++k) {
          f = z(k, i + 1);
          z(k, i + 1) = s * z(k, i) + c * f;
          z(k, i) = c * z(k, i) - s * f;
        }
      }
      if (r == 0.0 && i >= l) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
  Eigen::VectorXd values = Eigen::Map<const Eigen::VectorXd>(d.data(), n);
  return sorted(std::move(values), std::move(z), sweeps);
}

SymmetricEigensystem jacobi_eigen(const Eigen::MatrixXd& matrix, int maxSweeps) {
  const Eigen::Index n = matrix.rows();
  if (matrix.cols() != n) {
    fail(ErrorCode::InconsistentInputs, "jacobi_eigen: matrix must be square");
  }
  Eigen::MatrixXd a = matrix;
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double frob = a.norm();
  if (n <= 1 || frob == 0.0) {
    return sorted(a.diagonal(), v, 0);
  }
  const double target = 1e-14 * frob;
  const double negligible = 1e-18 * frob;

  auto offNorm = [&] {
    double sum = 0.0;
    for (Eigen::Index q = 1; q < n; ++q)
      for (Eigen::Index p = 0; p < q; ++p) sum += a(p, q) * a(p, q);
    return std::sqrt(2.0 * sum);
  };

  for (int sweep = 1; sweep <= maxSweeps; ++sweep) {
    if (offNorm() <= target) return sorted(a.diagonal(), v, sweep - 1);
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= negligible) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // A <- J^T A J with J the (p, q) rotation; columns first, then rows.
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (offNorm() <= target) return sorted(a.diagonal(), v, maxSweeps);
  fail(ErrorCode::EigensolverNoConvergence,
       "cyclic Jacobi did not converge in " + std::to_string(maxSweeps) + " sweeps");
}

}  // namespace schemewalk::linalg

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

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace schemewalk::linalg {

/// Eigenpairs of a real symmetric matrix. Column j of `vectors` belongs to
/// `values[j]`; values are sorted ascending.
struct SymmetricEigensystem {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
  int iterations = 0;
};

/// Symmetric tridiagonal eigenproblem by implicit-shift QL with Wilkinson
/// shifts. `diagonal` has n entries, `offDiagonal` n-1. The input spans are
/// copied; the solver never touches caller storage.
///
/// An off-diagonal element is treated as zero once
/// |e_m| <= 1e-14 * (|d_m| + |d_{m+1}|). Throws EigensolverNoConvergence after
/// 100 * n QL sweeps.
SymmetricEigensystem tridiagonal_eigen(std::span<const double> diagonal,
                                       std::span<const double> offDiagonal);

/// Dense cyclic Jacobi rotations. Slow (O(n^3) per sweep) but each step is an
/// exact orthogonal similarity, which is what the oracle needs.
/// Throws EigensolverNoConvergence after `maxSweeps` sweeps.
SymmetricEigensystem jacobi_eigen(const Eigen::MatrixXd& matrix,
                                  int maxSweeps = 60);

}  // namespace schemewalk::linalg

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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "schemewalk/scheme_core.hpp"

namespace schemewalk {

/// Szego-Jacobi coefficients of the three-term recurrence
///   x Q_n = Q_{n+1} + alpha_{n+1} Q_n + omega_n Q_{n-1}.
/// `omega[k-1]` holds omega_k (k = 1..d), `alpha[k-1]` holds alpha_k
/// (k = 1..d+1).
struct JacobiCoefficients {
  std::vector<double> omega;
  std::vector<double> alpha;

  int diameter() const { return static_cast<int>(omega.size()); }
};

/// Finitely supported measure: ascending atoms with positive weights.
struct DiscreteDistribution {
  std::vector<double> atoms;
  std::vector<double> weights;

  std::size_t size() const { return atoms.size(); }
};

/// Absolutely continuous measure with an attached quadrature rule. The rule
/// integrates against the measure itself, i.e.
///   integral f dmu ~= sum_j ruleWeights[j] * f(ruleNodes[j]).
struct ContinuousDistribution {
  std::function<double(double)> density;
  double lower = 0.0;
  double upper = 0.0;
  int quadratureNodes = 0;
  std::vector<double> ruleNodes;
  std::vector<double> ruleWeights;
};

/// Countably supported measure given by an atom generator, truncated once the
/// remaining tail mass drops below `truncationTolerance`.
struct InfiniteDiscreteDistribution {
  std::function<std::pair<double, double>(std::size_t)> atom;
  std::function<double(std::size_t)> tailMass;  // mass of atoms with index >= k
  double truncationTolerance = 1e-12;

  /// First index whose tail mass is below the tolerance.
  std::size_t truncation() const;
  DiscreteDistribution truncated() const;
};

using SpectralDistribution =
    std::variant<DiscreteDistribution, ContinuousDistribution, InfiniteDiscreteDistribution>;

/// Nodes and weights to integrate against any distribution: the atoms
/// themselves, the quadrature rule, or the truncated atom list.
DiscreteDistribution quadrature_view(const SpectralDistribution& dist);

/// omega_k = c_{k-1} b_k and alpha_k = a_1 - b_{k-1} - c_{k-1}.
JacobiCoefficients jacobi_from_intersection(const IntersectionArray& array);

/// Gauss quadrature of the Jacobi matrix (diagonal alpha, off-diagonal
/// sqrt(omega)). Atoms ascending; weight = squared first eigenvector
/// component. Throws DegenerateAtoms if atoms are not separated by > 1e-9.
DiscreteDistribution golub_welsch(const JacobiCoefficients& jc);

/// Same as golub_welsch but without the separation check.
DiscreteDistribution gauss_quadrature(const JacobiCoefficients& jc);

/// Q_0(x), ..., Q_upToK(x) by the three-term recurrence.
std::vector<double> evaluate_polynomials(const JacobiCoefficients& jc, double x, int upToK);

/// G(z) = sum_l B_l / (z - x_l) (or its quadrature for continuous measures).
/// Throws PoleProximity when z is within 1e-12 of an atom.
std::complex<double> stieltjes_transform(const SpectralDistribution& dist, std::complex<double> z);

/// Continued-fraction side of the Stieltjes identity, evaluated bottom-up.
std::complex<double> stieltjes_continued_fraction(const JacobiCoefficients& jc,
                                                  std::complex<double> z);

// -- closed-form families ---------------------------------------------------

struct SrgParameters {
  std::int64_t n = 0;
  std::int64_t kappa = 0;   // valency
  std::int64_t lambda = 0;  // common neighbours of adjacent vertices
  std::int64_t eta = 0;     // common neighbours of non-adjacent vertices
};

/// Intersection array {c_0 = kappa, c_1 = kappa - lambda - 1; b_1 = 1, b_2 = eta}.
/// Throws InfeasibleParameters when the counts are inconsistent.
IntersectionArray srg_intersection_array(const SrgParameters& p);

/// Closed-form three-atom distribution of a strongly regular graph.
DiscreteDistribution srg_distribution(const SrgParameters& p);

IntersectionArray complete_graph_array(int n);
IntersectionArray cycle_array(int n);
/// H(d, n): c_i = (n-1)(d-i), b_i = i.
IntersectionArray hamming_array(int n, int d);
/// J(v, d): c_i = (d-i)(v-d-i), b_i = i^2.
IntersectionArray johnson_array(int v, int d);

/// Binomial distribution of H(d, n): atoms n l - d with weight
/// C(d, l) (n-1)^(d-l) / n^d.
DiscreteDistribution hamming_distribution(int n, int d);

/// Krawtchouk polynomial K_j(x) = sum_h (-1)^h (n-1)^(j-h) C(x, h) C(d-x, j-h).
double krawtchouk(int j, int x, int n, int d);

/// Eigenmatrices of the Hamming scheme from Krawtchouk polynomials
/// (P_ij = K_j(i)), independent of the tridiagonal route.
SchemeEigenstructure hamming_eigenstructure(int n, int d);

/// Arcsine law 1 / (pi sqrt(4 - x^2)) on [-2, 2] with a Gauss-Chebyshev rule
/// on x = 2 cos(theta).
ContinuousDistribution continuous_line_distribution(int nodes = 256);

/// Jacobi coefficients of the infinite line truncated to `strata` levels:
/// omega = (2, 1, 1, ...), alpha = 0.
JacobiCoefficients line_jacobi(int strata);

/// Geometric atoms of the Johnson-graph limit with 0 < p < 1.
/// Throws BadParameter outside (0, 1).
InfiniteDiscreteDistribution meixner_distribution(double p, double tailTolerance = 1e-12);

/// Modified Meixner recurrence: omega_n = n^2, alpha_{n+1} = 2n / sqrt(p(2-p)).
JacobiCoefficients meixner_jacobi(double p, int strata);

/// Laguerre recurrence: omega_n = n^2, alpha_{n+1} = 2n + 1.
JacobiCoefficients laguerre_jacobi(int strata);

// -- catalog ------------------------------------------------------------------

struct CatalogEntry {
  std::string name;
  std::vector<std::string> paramNames;
  std::vector<std::int64_t> params;
  IntersectionArray array;
  /// Distribution as tabulated in the reference list, if one exists.
  std::optional<DiscreteDistribution> expected;
  std::string description;
};

struct CatalogInfo {
  std::string name;
  std::vector<std::string> paramNames;
  std::string description;
};

/// Registered names, sorted.
std::vector<CatalogInfo> catalog_names();

/// Throws UnknownCatalogName or BadParams.
CatalogEntry catalog(const std::string& name, const std::vector<std::int64_t>& params);

}  // namespace schemewalk

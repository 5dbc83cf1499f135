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
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "schemewalk/group_schemes.hpp"
#include "schemewalk/scheme_core.hpp"
#include "schemewalk/scheme_spec.hpp"
#include "schemewalk/spectral.hpp"

namespace schemewalk {

enum class Normalization { Stratum, Vertex };

/// Amplitudes <phi_k | e^{-iHt} | phi_0> on a time grid. Row = time,
/// column = stratum. Vertex-level amplitudes are stratum amplitudes divided
/// by sqrt(a_k).
struct AmplitudeSeries {
  std::vector<double> times;
  ValencyVector strataSizes;
  Eigen::MatrixXcd amplitudes;
  Normalization normalization = Normalization::Stratum;

  int strata() const { return static_cast<int>(amplitudes.cols()); }
  AmplitudeSeries to_vertex_level() const;
  /// max over times of |sum_k a_k^{(vertex)} |amp_k|^2 - 1|.
  double unitarity_defect() const;
};

// -- engines --------------------------------------------------------------------

/// amp_k = (1/sqrt(a_k)) sum_l B_l e^{-i x_l t} P_k(x_l) with
/// P_k = Q_k / (b_1...b_k). Throws InconsistentInputs on mismatched sizes.
AmplitudeSeries amplitudes_spectral(const SpectralDistribution& dist, const JacobiCoefficients& jc,
                                    const IntersectionArray& array, std::span<const double> times);

/// Orthonormal-polynomial form for measures without a finite array (infinite
/// line, Johnson limits): amp_k = sum_l B_l e^{-i x_l t} Q_k(x_l) /
/// sqrt(omega_1...omega_k) for k = 0..strata.
Eigen::MatrixXcd amplitudes_orthonormal(const SpectralDistribution& dist,
                                        const JacobiCoefficients& jc, int strata,
                                        std::span<const double> times);

/// amp_k = (sqrt(a_k)/n) sum_i e^{-i P_{i,g} t} Q_{k,i}, g the generating
/// relation.
AmplitudeSeries amplitudes_eigen(const SchemeEigenstructure& es, std::span<const double> times,
                                 int generatingRelation = 1);

/// Character route over an arbitrary class fusion. The vertex amplitude at
/// g is (1/|G|) sum_chi d_chi e^{-i lambda_chi t} conj(chi(g)) with
/// lambda_chi = sum_{c in generating block} kappa_c chi(c) / d_chi.
AmplitudeSeries amplitudes_group(const CharacterTable& table, const ClassBlocks& blocks,
                                 int generatingBlock, std::span<const double> times);

/// Unfused class scheme. Throws NonRealGeneratingClass when the generating
/// class is not closed under inversion.
AmplitudeSeries amplitudes_group(const CharacterTable& table, int generatingClass,
                                 std::span<const double> times);

// -- long-time averages -----------------------------------------------------------

struct AverageProbabilities {
  std::vector<double> stratum;
  std::vector<double> vertex;
};

/// Coincident eigenvalues of the generating relation (within 1e-9) are
/// merged before the cross terms are dropped.
AverageProbabilities average_probabilities(const SchemeEigenstructure& es,
                                           int generatingRelation = 1);

/// (1/a_k) sum_l B_l^2 P_k(x_l)^2 after merging coincident atoms. Throws
/// DegenerateSpectrumUnmerged if merging leaves other than d+1 atoms.
AverageProbabilities average_probabilities(const DiscreteDistribution& dist,
                                           const JacobiCoefficients& jc,
                                           const IntersectionArray& array);

/// Character form, merging irreps with equal lambda_chi.
AverageProbabilities average_probabilities(const CharacterTable& table, const ClassBlocks& blocks,
                                           int generatingBlock);

// -- closed forms -----------------------------------------------------------------

struct HammingWalk {
  AmplitudeSeries series;
  DiscreteDistribution distribution;
};

/// H(d, n) as the d-fold product of K_n: the vertex amplitude at Hamming
/// weight k is u^{d-k} v^k with u, v the K_n origin and neighbour amplitudes.
HammingWalk hamming_walk(int n, int d, std::span<const double> times);

/// Origin amplitude of K_n for the raw adjacency matrix.
std::complex<double> complete_graph_origin_amplitude(int n, double t);

/// p = 1: (it)^k / (1 + it)^{k+1}. 0 < p < 1: truncated Meixner sum with
/// orthonormal polynomials. Throws BadParameter outside (0, 1].
std::vector<std::complex<double>> johnson_limit_amplitudes(double p, int k,
                                                           std::span<const double> times,
                                                           double tailTolerance = 1e-12);

// -- dispatch -----------------------------------------------------------------------

enum class Engine { Eigen, Character, Spectral, Product, Auto };

std::string to_string(Engine engine);
/// "eigen" | "character" | "spectral" | "product" | "auto"; throws UsageError.
Engine parse_engine(const std::string& name);

struct WalkRequest {
  SchemeSpec spec;
  std::vector<double> times;
  Engine engine = Engine::Auto;
  bool normalizedAdjacency = false;
};

/// Engine actually used for `engine` on `spec` (resolves Auto).
Engine resolve_engine(const SchemeSpec& spec, Engine engine);

/// Throws EngineSpecMismatch when the engine cannot handle the spec.
AmplitudeSeries dispatch(const WalkRequest& request);

AverageProbabilities dispatch_average(const SchemeSpec& spec, Engine engine);

/// Spectral distribution of the generating relation seen from the root.
DiscreteDistribution spectrum_of(const SchemeSpec& spec);

/// Degree of the walk's Hamiltonian (a_1, or the generating block size).
double spec_degree(const SchemeSpec& spec);

}  // namespace schemewalk

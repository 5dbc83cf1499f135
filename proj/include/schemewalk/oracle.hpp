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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "schemewalk/group_schemes.hpp"
#include "schemewalk/scheme_spec.hpp"
#include "schemewalk/spectral.hpp"

namespace schemewalk::oracle {

inline constexpr int kMaxVertices = 2000;

/// Explicit simple graph. Adjacency is a symmetric 0/1 matrix with zero
/// diagonal.
struct VertexGraph {
  int n = 0;
  Eigen::MatrixXi adjacency;
  std::vector<std::string> vertexLabels;
  int root = 0;

  int degree(int v) const { return adjacency.row(v).sum(); }
  /// Symmetric, zero diagonal, 0/1 entries.
  bool well_formed() const;
  bool is_regular() const;
};

/// Vertex sets Gamma_0..Gamma_d around the root.
struct DistancePartition {
  std::vector<std::vector<int>> strata;
  /// Stratum index of every vertex.
  std::vector<int> distances;

  int diameter() const { return static_cast<int>(strata.size()) - 1; }
};

/// Finite group as an explicit multiplication table; element 0 is the
/// identity. `classOf` maps each element to its column in the matching
/// CharacterTable.
struct FiniteGroup {
  std::string name;
  std::vector<std::vector<int>> mul;
  std::vector<int> inverse;
  std::vector<int> classOf;
  std::vector<std::string> labels;

  int order() const { return static_cast<int>(mul.size()); }
};

// -- groups -----------------------------------------------------------------------

FiniteGroup cyclic_group(int n);
/// Z_n^d with elements in base-n digit order, matching character_table_cyclic_power.
FiniteGroup cyclic_power_group(int n, int d);
/// Element a^r b^s stored as index r + m s.
FiniteGroup dihedral_group(int m);
/// All permutations of {0..n-1}, lexicographic order. Capped at n = 6.
FiniteGroup symmetric_group(int n);
FiniteGroup finite_group(const GroupDescriptor& group);

/// Conjugacy classes by brute force, each sorted, ordered by smallest element.
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& group);

// -- graphs -------------------------------------------------------------------------

VertexGraph cycle_graph(int n);
VertexGraph complete_graph(int n);
/// Vertices are k-subsets of {1..v}; adjacent iff disjoint.
VertexGraph kneser_graph(int v, int k);
VertexGraph petersen_graph();
/// Vertices are d-subsets of {1..v}; adjacent iff d - |x cap y| = 1.
VertexGraph johnson_graph(int v, int d);
/// Words of length d over n letters; adjacent iff they differ in one place.
VertexGraph hamming_graph(int d, int n);
VertexGraph complete_bipartite_graph(int m);

/// alpha ~ beta iff alpha^{-1} beta lies in `connection`. Throws
/// NonSymmetricGeneratingSet unless the set is inverse-closed and avoids the
/// identity.
VertexGraph cayley_graph(const FiniteGroup& group, const std::vector<int>& connection);

/// Throws TooLarge above kMaxVertices and NoConstruction for specs without
/// an explicit builder.
VertexGraph build_graph(const SchemeSpec& spec);

// -- analysis ------------------------------------------------------------------------

/// Throws InconsistentInputs if the graph is disconnected.
DistancePartition bfs_strata(const VertexGraph& g);

/// Strata of a Cayley graph given by blocks of conjugacy classes.
DistancePartition class_partition(const FiniteGroup& group, const ClassBlocks& blocks);

/// Stratum partition matching the walk engines for `spec`: class blocks for
/// group specs, BFS distance otherwise.
DistancePartition spec_partition(const SchemeSpec& spec, const VertexGraph& g);

/// c_i, b_i from the BFS partition. Throws NotDistanceRegular when counts
/// vary inside a stratum.
IntersectionArray derive_intersection_array(const VertexGraph& g, const DistancePartition& p);

struct ExactWalk {
  std::vector<double> times;
  /// Row = time, column = vertex.
  Eigen::MatrixXcd amplitudes;
  double eigenResidual = 0.0;         // max |A U - U Lambda|
  double orthogonalityDefect = 0.0;   // max |U U^T - I|
  double unitarityDefect = 0.0;       // max_t |sum |amp|^2 - 1|
};

/// e^{-iAt} e_root from a cyclic-Jacobi eigendecomposition of A.
ExactWalk exact_walk(const VertexGraph& g, std::span<const double> times);

/// (1/sqrt|Gamma_k|) sum_{beta in Gamma_k} amp_beta, row = time.
Eigen::MatrixXcd stratum_amplitudes(const ExactWalk& walk, const DistancePartition& p);

/// max over time and stratum of max_{beta, beta'} |amp_beta - amp_beta'|.
double stratum_spread(const ExactWalk& walk, const DistancePartition& p);

struct QuantumDecomposition {
  Eigen::MatrixXi raising;   // A+
  Eigen::MatrixXi lowering;  // A-
  Eigen::MatrixXi diagonal;  // A0
};

QuantumDecomposition quantum_decomposition(const VertexGraph& g, const DistancePartition& p);

struct LadderReport {
  bool sumExact = false;       // A = A+ + A- + A0
  bool transposeExact = false; // (A-)^T = A+
  bool blocksExact = false;    // A0 only within strata, A+ only to the next one
  double raising = 0.0;        // max |A+ phi_k - sqrt(omega_{k+1}) phi_{k+1}|
  double lowering = 0.0;       // max |A- phi_k - sqrt(omega_k) phi_{k-1}|
  double diagonal = 0.0;       // max |A0 phi_k - alpha_{k+1} phi_k|

  double worst() const;
  bool exact() const { return sumExact && transposeExact && blocksExact; }
};

LadderReport check_ladder(const VertexGraph& g, const DistancePartition& p,
                          const QuantumDecomposition& q, const JacobiCoefficients& jc);

}  // namespace schemewalk::oracle

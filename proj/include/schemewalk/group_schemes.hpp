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
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "schemewalk/scheme_core.hpp"

namespace schemewalk {

enum class GroupFamily { Cyclic, Dihedral, Symmetric };

/// Cyclic(n >= 3), Dihedral(m >= 3, order 2m) or Symmetric(2 <= n <= 8).
struct GroupDescriptor {
  GroupFamily family = GroupFamily::Cyclic;
  int n = 3;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

std::string to_string(const GroupDescriptor& group);
/// "cyclic" | "dihedral" | "symmetric"; throws SchemaError otherwise.
GroupFamily parse_group_family(const std::string& name);
/// Throws InvalidOrder / UnsupportedOrder for out-of-range parameters.
void validate_group(const GroupDescriptor& group);

/// Character table: rows are irreducible characters, columns conjugacy
/// classes. Class 0 is the identity and irrep 0 the trivial character.
struct CharacterTable {
  std::string groupName;
  std::vector<std::int64_t> classSizes;
  std::vector<std::string> classLabels;
  std::vector<std::int64_t> irrepDims;
  std::vector<std::string> irrepLabels;
  Eigen::MatrixXcd values;
  /// Class k^{-1} for every class k.
  std::vector<int> inverseClassMap;

  std::int64_t order() const;
  int class_count() const { return static_cast<int>(classSizes.size()); }
  /// Every class is closed under inversion (all character values real).
  bool is_real() const;
  bool class_is_real(int k) const { return inverseClassMap[static_cast<std::size_t>(k)] == k; }
};

struct CharacterTableResiduals {
  double orderMismatch = 0.0;  // |sum d_i^2 - |G|| + |sum kappa_k - |G||
  double rowOrthogonality = 0.0;
  double columnOrthogonality = 0.0;
  double identityColumn = 0.0;

  double worst() const;
};

CharacterTableResiduals check_character_table(const CharacterTable& table);

/// chi_j(k) = exp(2 pi i jk / n). Throws InvalidOrder for n < 3.
CharacterTable character_table_cyclic(int n);

/// Table of the direct power Z_n^d with classes and irreps indexed by
/// base-n digit tuples (most significant digit first). n >= 2.
/// Throws TooLarge when n^d exceeds 4096.
CharacterTable character_table_cyclic_power(int n, int d);

/// Odd m: classes {1}, reflections, rotation pairs {a^h, a^-h}.
/// Even m = 2l: classes {1}, {a^l}, rotation pairs h = 1..l-1, {a^{2j} b},
/// {a^{2j+1} b}. Throws InvalidOrder for m < 3.
CharacterTable character_table_dihedral(int m);

/// One class per cycle type (lexicographically ascending, identity first,
/// transpositions second), one irrep per partition (lexicographically
/// descending, trivial first). Values by the Murnaghan-Nakayama rule.
/// Throws InvalidOrder for n < 2 and UnsupportedOrder for n > 8.
CharacterTable character_table_symmetric(int n);

CharacterTable character_table(const GroupDescriptor& group);

// -- symmetric-group combinatorics -------------------------------------------

using Partition = std::vector<int>;

/// Partitions of n with parts in non-increasing order, lexicographically
/// ascending.
std::vector<Partition> partitions(int n);
Partition conjugate_partition(const Partition& lambda);

/// n! / prod_j (j^{nu_j} nu_j!). Throws InvalidCycleType when the parts are
/// not positive or do not sum to n.
std::int64_t class_size_symmetric(const Partition& cycleType, int n);

/// sum_j [C(lambda_j, 2) - C(lambda'_j, 2)].
std::int64_t transposition_eigenvalue(const Partition& lambda);

/// Hook-length formula.
std::int64_t irrep_dimension(const Partition& lambda);

/// chi_lambda(mu) by Murnaghan-Nakayama on beta-numbers.
std::int64_t symmetric_character(const Partition& lambda, const Partition& mu);

// -- schemes from tables ------------------------------------------------------

using ClassBlocks = std::vector<std::vector<int>>;

/// Fusion of a conjugacy-class scheme. Blocks partition the classes,
/// block 0 is {identity} and every block is closed under inversion. Irreps
/// with identical block eigenvalues are grouped; the fusion is a scheme
/// exactly when the number of groups equals the number of blocks.
struct SymmetrizedScheme {
  ClassBlocks mergedClasses;
  /// true for blocks consisting of a single self-inverse class.
  std::vector<bool> realClass;
  /// Irreps behind each eigenspace (row of Ptilde), first-appearance order.
  std::vector<std::vector<int>> mergedIrreps;
  Eigen::MatrixXd Ptilde;
  Eigen::MatrixXd Qtilde;
  SchemeEigenstructure eigenstructure;
};

/// Throws InvalidFusion if the blocks do not define an association scheme.
SymmetrizedScheme fuse_classes(const CharacterTable& table, const ClassBlocks& blocks);

/// Merges each complex class with its inverse; real classes stay singletons.
/// Blocks are ordered by their smallest class index.
SymmetrizedScheme symmetrize(const CharacterTable& table);

/// P_ik = kappa_k chi_i(alpha_k) / d_i, Q_ik = d_k conj(chi_k(alpha_i)),
/// m_i = d_i^2. Complex tables require needSymmetrization, otherwise
/// ComplexClassesWithoutSymmetrization is thrown.
SchemeEigenstructure group_eigenstructure(const CharacterTable& table, bool needSymmetrization);

/// Class partition used for walks: cyclic groups merge inverse pairs,
/// even dihedral groups merge the two reflection classes into block 1 and
/// follow with {a^l} and the rotation pairs, everything else is singletons.
ClassBlocks default_blocks(const GroupDescriptor& group, const CharacterTable& table);

/// Blocks of Z_n^d by Hamming weight of the class tuple.
ClassBlocks hamming_weight_blocks(int n, int d);

/// p_ij^k = (|C_i||C_j|/|G|) sum_chi chi(a_i) chi(a_j) conj(chi(a_k)) / chi(1).
/// Throws NonIntegerResult when the sum is not within 1e-6 of an integer.
std::int64_t intersection_numbers_group(const CharacterTable& table, int i, int j, int k);

/// Intersection number of a fused scheme: sum over i in I, j in J of p_ij^k
/// for the first class k of block K.
std::int64_t intersection_numbers_fused(const CharacterTable& table, const ClassBlocks& blocks,
                                        int I, int J, int K);

}  // namespace schemewalk

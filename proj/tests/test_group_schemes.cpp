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

#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <random>
#include <thread>

#include "schemewalk/errors.hpp"
#include "schemewalk/group_schemes.hpp"
#include "schemewalk/oracle.hpp"
#include "support/reference.hpp"

using namespace schemewalk;
using testing::cd;

namespace {

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::UsageError;
}

// Left-multiplication class sum: (C)_{x, y} = 1 iff y = c x for some c in the block.
Eigen::MatrixXd class_sum(const oracle::FiniteGroup& g, const std::vector<int>& classes) {
  const int n = g.order();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int c = 0; c < n; ++c) {
    if (std::find(classes.begin(), classes.end(), g.classOf[static_cast<std::size_t>(c)]) == classes.end()) {
      continue;
    }
    for (int x = 0; x < n; ++x) m(x, g.mul[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)]) += 1.0;
  }
  return m;
}

// Eigenvalues of a random combination of real class sums, compared as a
// multiset with the table prediction sum_k r_k kappa_k chi_i(k)/d_i (mult d_i^2).
double class_sum_spectrum_gap(const oracle::FiniteGroup& g, const CharacterTable& t, std::mt19937& rng) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  const int n = g.order();
  Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(n, n);
  std::vector<double> r(static_cast<std::size_t>(t.class_count()));
  for (int k = 0; k < t.class_count(); ++k) {
    r[static_cast<std::size_t>(k)] = coef(rng);
    combo += r[static_cast<std::size_t>(k)] * class_sum(g, {k});
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(combo);
  std::vector<double> expected;
  for (int i = 0; i < t.values.rows(); ++i) {
    const auto d = t.irrepDims[static_cast<std::size_t>(i)];
    double value = 0.0;
    for (int k = 0; k < t.class_count(); ++k) {
      value += r[static_cast<std::size_t>(k)] * static_cast<double>(t.classSizes[static_cast<std::size_t>(k)]) *
               t.values(i, k).real() / static_cast<double>(d);
    }
    for (std::int64_t c = 0; c < d * d; ++c) expected.push_back(value);
  }
  std::sort(expected.begin(), expected.end());
  double gap = 0.0;
  for (int i = 0; i < n; ++i) gap = std::max(gap, std::abs(expected[static_cast<std::size_t>(i)] - solver.eigenvalues()[i]));
  return gap;
}

// Number of (x, y) with x in C_i, y in C_j and x y = z for a fixed z in C_k.
std::int64_t brute_intersection(const oracle::FiniteGroup& g, int i, int j, int k) {
  int z = 0;
  while (g.classOf[static_cast<std::size_t>(z)] != k) ++z;
  std::int64_t count = 0;
  for (int x = 0; x < g.order(); ++x) {
    if (g.classOf[static_cast<std::size_t>(x)] != i) continue;
    const int y = g.mul[static_cast<std::size_t>(g.inverse[static_cast<std::size_t>(x)])][static_cast<std::size_t>(z)];
    count += g.classOf[static_cast<std::size_t>(y)] == j;
  }
  return count;
}

}  // namespace

TEST_CASE("cyclic characters") {
  const auto t4 = character_table_cyclic(4);
  CHECK(std::abs(t4.values(1, 1) - cd(0, 1)) < 1e-15);
  CHECK(std::abs(t4.values(1, 2) - cd(-1, 0)) < 1e-15);
  for (int n = 3; n <= 12; ++n) {
    const auto t = character_table_cyclic(n);
    for (int k = 0; k < n; ++k) CHECK(std::abs(t.values(0, k) - cd(1, 0)) < 1e-15);
    CHECK(check_character_table(t).worst() < 1e-12);
    CHECK_FALSE(t.is_real());
  }
  CHECK(code_of([] { character_table_cyclic(2); }) == ErrorCode::InvalidOrder);
}

TEST_CASE("cyclic power characters") {
  const auto t = character_table_cyclic_power(3, 2);
  CHECK(t.order() == 9);
  CHECK(check_character_table(t).worst() < 1e-12);
  CHECK(character_table_cyclic_power(2, 3).is_real());
  CHECK(code_of([] { character_table_cyclic_power(5, 6); }) == ErrorCode::TooLarge);
}

TEST_CASE("dihedral characters") {
  const auto t5 = character_table_dihedral(5);
  CHECK(t5.classSizes == std::vector<std::int64_t>{1, 5, 2, 2});
  const auto t3 = character_table_dihedral(3);
  CHECK(t3.irrepDims == std::vector<std::int64_t>{1, 1, 2});
  for (int m = 3; m <= 12; ++m) {
    const auto t = character_table_dihedral(m);
    CHECK(t.class_count() == (m % 2 ? (m + 3) / 2 : m / 2 + 3));
    CHECK(check_character_table(t).worst() < 1e-12);
    for (int i = 0; i < t.values.rows(); ++i) {
      CHECK(t.values(i, 0).real() == static_cast<double>(t.irrepDims[static_cast<std::size_t>(i)]));
    }
  }
  CHECK(code_of([] { character_table_dihedral(2); }) == ErrorCode::InvalidOrder);
}

TEST_CASE("symmetric characters") {
  const auto t4 = character_table_symmetric(4);
  CHECK(t4.classSizes == std::vector<std::int64_t>{1, 6, 3, 8, 6});
  for (int n = 2; n <= 8; ++n) {
    const auto t = character_table_symmetric(n);
    CHECK(check_character_table(t).worst() < 1e-9);
    const auto parts = partitions(n);
    const int ncycle = t.class_count() - 1;  // (n) sorts last
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto& lambda = parts[i];
      const bool hook = lambda.size() == 1 || lambda[1] == 1;
      const int row = t.class_count() - 1 - static_cast<int>(i);  // irreps are descending
      const double value = t.values(row, ncycle).real();
      if (hook) {
        const int k = lambda[0];
        CHECK(value == ((n - k) % 2 ? -1.0 : 1.0));
        double binom = 1.0;
        for (int j = 1; j <= k - 1; ++j) binom = binom * (n - k + j) / j;
        CHECK(static_cast<double>(irrep_dimension(lambda)) == binom);
      } else {
        CHECK(value == 0.0);
      }
    }
  }
  CHECK(code_of([] { character_table_symmetric(9); }) == ErrorCode::UnsupportedOrder);
}

TEST_CASE("symmetric class sizes") {
  CHECK(class_size_symmetric({1, 1, 1, 1, 1}, 5) == 1);
  CHECK(class_size_symmetric({2, 1, 1}, 4) == 6);
  std::int64_t factorial = 1;
  for (int n = 2; n <= 8; ++n) {
    CHECK(class_size_symmetric({n}, n) == factorial);
    factorial *= n;
  }
  CHECK(code_of([] { class_size_symmetric({2, 2}, 5); }) == ErrorCode::InvalidCycleType);
  CHECK(code_of([] { class_size_symmetric({3, 0}, 3); }) == ErrorCode::InvalidCycleType);
}

TEST_CASE("transposition eigenvalues") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      Partition hook{k};
      hook.resize(static_cast<std::size_t>(n - k + 1), 1);
      CHECK(2 * transposition_eigenvalue(hook) == 2 * n * k - n * n - n);
    }
    CHECK(transposition_eigenvalue({n}) == n * (n - 1) / 2);
  }
  CHECK(transposition_eigenvalue({2, 2}) == 0);
  CHECK(transposition_eigenvalue({3, 1}) == 2);
  // Against kappa_1 chi(transposition)/d from the table.
  for (int n = 2; n <= 7; ++n) {
    const auto t = character_table_symmetric(n);
    const auto parts = partitions(n);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const int row = t.class_count() - 1 - static_cast<int>(i);
      const double expected = static_cast<double>(t.classSizes[1]) * t.values(row, 1).real() /
                              static_cast<double>(t.irrepDims[static_cast<std::size_t>(row)]);
      CHECK(static_cast<double>(transposition_eigenvalue(parts[i])) == doctest::Approx(expected));
    }
  }
}

TEST_CASE("class sums reproduce the tables") {
  std::mt19937 rng(7);
  for (int n = 3; n <= 6; ++n) {
    CHECK(class_sum_spectrum_gap(oracle::symmetric_group(n), character_table_symmetric(n), rng) < 1e-6);
  }
  for (int m = 3; m <= 8; ++m) {
    CHECK(class_sum_spectrum_gap(oracle::dihedral_group(m), character_table_dihedral(m), rng) < 1e-6);
  }
}

TEST_CASE("oracle classes agree with table class sizes") {
  for (const auto& [group, table] : std::vector<std::pair<oracle::FiniteGroup, CharacterTable>>{
           {oracle::symmetric_group(5), character_table_symmetric(5)},
           {oracle::dihedral_group(7), character_table_dihedral(7)},
           {oracle::dihedral_group(8), character_table_dihedral(8)},
           {oracle::cyclic_group(6), character_table_cyclic(6)}}) {
    const auto classes = oracle::conjugacy_classes(group);
    REQUIRE(static_cast<int>(classes.size()) == table.class_count());
    for (const auto& cls : classes) {
      const int k = group.classOf[static_cast<std::size_t>(cls.front())];
      CHECK(static_cast<std::int64_t>(cls.size()) == table.classSizes[static_cast<std::size_t>(k)]);
      for (int x : cls) CHECK(group.classOf[static_cast<std::size_t>(x)] == k);
    }
  }
}

TEST_CASE("group eigenstructure") {
  SUBCASE("cyclic symmetrized") {
    for (int n = 3; n <= 11; ++n) {
      const auto sym = symmetrize(character_table_cyclic(n));
      const auto& P = sym.Ptilde;
      for (Eigen::Index j = 0; j < P.rows(); ++j) {
        const int irrep = sym.mergedIrreps[static_cast<std::size_t>(j)].front();
        CHECK(P(j, 1) == doctest::Approx(2 * std::cos(2 * std::numbers::pi * irrep / n)).epsilon(1e-12));
      }
      for (Eigen::Index k = 0; k < P.cols(); ++k) {
        const int cls = sym.mergedClasses[static_cast<std::size_t>(k)].front();
        for (Eigen::Index j = 1; j < P.rows(); ++j) {
          const int irrep = sym.mergedIrreps[static_cast<std::size_t>(j)].front();
          if (k == 0 || sym.mergedIrreps[static_cast<std::size_t>(j)].size() != 2) continue;
          CHECK(sym.Qtilde(k, j) == doctest::Approx(2 * std::cos(2 * std::numbers::pi * irrep * cls / n)).epsilon(1e-12));
        }
      }
      const Eigen::MatrixXd pq = sym.Ptilde * sym.Qtilde;
      CHECK((pq - n * Eigen::MatrixXd::Identity(P.rows(), P.rows())).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
  SUBCASE("S_3 transposition column") {
    const auto es = group_eigenstructure(character_table_symmetric(3), false);
    // Irreps [3], [2 1], [1 1 1].
    CHECK(es.P(0, 1) == doctest::Approx(3));
    CHECK(es.P(1, 1) == doctest::Approx(0));
    CHECK(es.P(2, 1) == doctest::Approx(-3));
    CHECK(check_eigenstructure(es).worst() < 1e-9);
  }
  SUBCASE("Q row 0 holds multiplicities") {
    for (int n = 3; n <= 6; ++n) {
      const auto t = character_table_symmetric(n);
      const auto es = group_eigenstructure(t, false);
      for (int k = 0; k < es.classes(); ++k) {
        const auto d = static_cast<double>(t.irrepDims[static_cast<std::size_t>(k)]);
        CHECK(es.Q(0, k) == doctest::Approx(d * d));
        CHECK(es.multiplicities[k] == doctest::Approx(d * d));
      }
    }
  }
  SUBCASE("complex tables need symmetrization") {
    CHECK(code_of([] { group_eigenstructure(character_table_cyclic(5), false); }) ==
          ErrorCode::ComplexClassesWithoutSymmetrization);
    CHECK(check_eigenstructure(group_eigenstructure(character_table_cyclic(5), true)).worst() < 1e-9);
  }
  SUBCASE("PQ = nI for every supported table") {
    for (const auto& g : std::vector<GroupDescriptor>{{GroupFamily::Cyclic, 9},
                                                      {GroupFamily::Dihedral, 7},
                                                      {GroupFamily::Dihedral, 10},
                                                      {GroupFamily::Symmetric, 7}}) {
      const auto t = character_table(g);
      CHECK_MESSAGE(check_eigenstructure(group_eigenstructure(t, !t.is_real())).worst() < 1e-9, to_string(g));
    }
  }
}

TEST_CASE("class fusions") {
  SUBCASE("even dihedral merged reflections") {
    for (int m = 4; m <= 12; m += 2) {
      const GroupDescriptor g{GroupFamily::Dihedral, m};
      const auto t = character_table(g);
      const auto blocks = default_blocks(g, t);
      CHECK(blocks.size() == static_cast<std::size_t>(m / 2 + 2));
      const auto fused = fuse_classes(t, blocks);
      CHECK(check_eigenstructure(fused.eigenstructure).worst() < 1e-9);
    }
  }
  SUBCASE("hamming weight fusion") {
    const auto t = character_table_cyclic_power(3, 3);
    const auto fused = fuse_classes(t, hamming_weight_blocks(3, 3));
    CHECK(fused.mergedClasses.size() == 4);
    CHECK(check_eigenstructure(fused.eigenstructure).worst() < 1e-9);
  }
  SUBCASE("invalid fusion") {
    // Transpositions with 3-cycles in S_4 is not a scheme.
    const auto t = character_table_symmetric(4);
    CHECK(code_of([&] { fuse_classes(t, {{0}, {1, 3}, {2}, {4}}); }) == ErrorCode::InvalidFusion);
  }
}

TEST_CASE("intersection numbers") {
  const auto s3 = character_table_symmetric(3);
  CHECK(intersection_numbers_group(s3, 1, 1, 0) == 3);
  for (int j = 0; j < s3.class_count(); ++j) {
    for (int k = 0; k < s3.class_count(); ++k) CHECK(intersection_numbers_group(s3, 0, j, k) == (j == k));
  }
  const auto z5 = character_table_cyclic(5);
  const auto blocks = default_blocks({GroupFamily::Cyclic, 5}, z5);
  CHECK(intersection_numbers_fused(z5, blocks, 1, 1, 2) == 1);

  for (const auto& [group, table] : std::vector<std::pair<oracle::FiniteGroup, CharacterTable>>{
           {oracle::symmetric_group(4), character_table_symmetric(4)},
           {oracle::dihedral_group(5), character_table_dihedral(5)},
           {oracle::cyclic_group(6), character_table_cyclic(6)}}) {
    const int c = table.class_count();
    for (int i = 0; i < c; ++i) {
      for (int j = 0; j < c; ++j) {
        std::int64_t weighted = 0;
        for (int k = 0; k < c; ++k) {
          const auto p = intersection_numbers_group(table, i, j, k);
          CHECK(p == brute_intersection(group, i, j, k));
          CHECK(p == intersection_numbers_group(table, j, i, k));
          weighted += p * table.classSizes[static_cast<std::size_t>(k)];
        }
        CHECK(weighted == table.classSizes[static_cast<std::size_t>(i)] * table.classSizes[static_cast<std::size_t>(j)]);
      }
    }
  }
}

TEST_CASE("concurrent table construction") {
  const auto reference = character_table_symmetric(8);
  std::vector<CharacterTable> results(4);
  std::vector<std::thread> workers;
  for (auto& r : results) workers.emplace_back([&r] { r = character_table_symmetric(8); });
  for (auto& w : workers) w.join();
  for (const auto& r : results) CHECK(r.values == reference.values);
}

TEST_CASE("descriptor parsing") {
  CHECK(parse_group_family("dihedral") == GroupFamily::Dihedral);
  CHECK(code_of([] { parse_group_family("alternating"); }) == ErrorCode::SchemaError);
  CHECK(code_of([] { validate_group({GroupFamily::Symmetric, 9}); }) == ErrorCode::UnsupportedOrder);
}

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

#include "schemewalk/group_schemes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <utility>

#include "schemewalk/errors.hpp"

namespace schemewalk {
namespace {

constexpr double kRowMatch = 1e-9;
constexpr int kMaxPowerOrder = 4096;

/// exp(2 pi i num / den) with the fraction reduced first, so the phase is
/// exact up to a single rounding in sin/cos.
std::complex<double> root_of_unity(std::int64_t num, std::int64_t den) {
  num %= den;
  if (num < 0) num += den;
  if (num == 0) return {1.0, 0.0};
  if (2 * num == den) return {-1.0, 0.0};
  if (4 * num == den) return {0.0, 1.0};
  if (4 * num == 3 * den) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

std::string partition_label(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p[i]);
  }
  return s + "]";
}

void generate_partitions(int remaining, int maxPart, Partition& current,
                         std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, maxPart); part >= 1; --part) {
    current.push_back(part);
    generate_partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

/// Murnaghan-Nakayama with a per-call memo keyed by (shape, next part).
class MurnaghanNakayama {
 public:
  explicit MurnaghanNakayama(Partition mu) : mu_(std::move(mu)) {
    std::sort(mu_.begin(), mu_.end(), std::greater<>());
  }

  std::int64_t operator()(const Partition& lambda) { return evaluate(lambda, 0); }

 private:
  std::int64_t evaluate(const Partition& lambda, std::size_t next) {
    if (next == mu_.size()) return lambda.empty() ? 1 : 0;
    const auto key = std::make_pair(lambda, next);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int r = mu_[next];
    const auto length = static_cast<int>(lambda.size());
    std::vector<int> beta(lambda.size());
    for (int i = 0; i < length; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (length - 1 - i);
    const std::set<int> betaSet(beta.begin(), beta.end());

    std::int64_t total = 0;
    for (int b : beta) {
      const int moved = b - r;
      if (moved < 0 || betaSet.contains(moved)) continue;
      // Each bead jumped over flips the sign (rim-hook height parity).
      int jumped = 0;
      for (int c : beta) {
        if (c > moved && c < b) ++jumped;
      }
      std::vector<int> next_beta;
      for (int c : beta) next_beta.push_back(c == b ? moved : c);
      std::sort(next_beta.begin(), next_beta.end(), std::greater<>());
      Partition shape;
      for (int i = 0; i < length; ++i) {
        const int part = next_beta[static_cast<std::size_t>(i)] - (length - 1 - i);
        if (part > 0) shape.push_back(part);
      }
      const std::int64_t sub = evaluate(shape, next + 1);
      total += (jumped % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(key, total);
    return total;
  }

  Partition mu_;
  std::map<std::pair<Partition, std::size_t>, std::int64_t> memo_;
};

void check_blocks(const CharacterTable& table, const ClassBlocks& blocks) {
  const int classes = table.class_count();
  std::vector<int> owner(static_cast<std::size_t>(classes), -1);
  if (blocks.empty() || blocks[0] != std::vector<int>{0}) {
    fail(ErrorCode::InvalidFusion, "block 0 must be exactly the identity class");
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) fail(ErrorCode::InvalidFusion, "empty block " + std::to_string(b));
    for (int k : blocks[b]) {
      if (k < 0 || k >= classes) {
        fail(ErrorCode::InvalidFusion, "class index " + std::to_string(k) + " out of range");
      }
      if (owner[static_cast<std::size_t>(k)] != -1) {
        fail(ErrorCode::InvalidFusion, "class " + std::to_string(k) + " appears twice");
      }
      owner[static_cast<std::size_t>(k)] = static_cast<int>(b);
    }
  }
  for (int k = 0; k < classes; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    if (owner[uk] == -1) {
      fail(ErrorCode::InvalidFusion, "class " + std::to_string(k) + " is not covered");
    }
    const auto inverse = static_cast<std::size_t>(table.inverseClassMap[uk]);
    if (owner[inverse] != owner[uk]) {
      fail(ErrorCode::InvalidFusion,
           "block " + std::to_string(owner[uk]) + " is not closed under inversion");
    }
  }
}

}  // namespace

std::string to_string(const GroupDescriptor& group) {
  switch (group.family) {
    case GroupFamily::Cyclic: return "Z_" + std::to_string(group.n);
    case GroupFamily::Dihedral: return "D_" + std::to_string(2 * group.n);
    case GroupFamily::Symmetric: return "S_" + std::to_string(group.n);
  }
  return "?";
}

GroupFamily parse_group_family(const std::string& name) {
  if (name == "cyclic") return GroupFamily::Cyclic;
  if (name == "dihedral") return GroupFamily::Dihedral;
  if (name == "symmetric") return GroupFamily::Symmetric;
  fail(ErrorCode::SchemaError, "unknown group family '" + name + "'");
}

void validate_group(const GroupDescriptor& group) {
  switch (group.family) {
    case GroupFamily::Cyclic:
      if (group.n < 3) fail(ErrorCode::InvalidOrder, "cyclic group needs n >= 3");
      return;
    case GroupFamily::Dihedral:
      if (group.n < 3) fail(ErrorCode::InvalidOrder, "dihedral group needs m >= 3");
      return;
    case GroupFamily::Symmetric:
      if (group.n < 2) fail(ErrorCode::InvalidOrder, "symmetric group needs n >= 2");
      if (group.n > 8) fail(ErrorCode::UnsupportedOrder, "symmetric group is capped at n = 8");
      return;
  }
}

std::int64_t CharacterTable::order() const {
  return std::accumulate(classSizes.begin(), classSizes.end(), std::int64_t{0});
}

bool CharacterTable::is_real() const {
  for (int k = 0; k < class_count(); ++k) {
    if (!class_is_real(k)) return false;
  }
  return true;
}

double CharacterTableResiduals::worst() const {
  return std::max({orderMismatch, rowOrthogonality, columnOrthogonality, identityColumn});
}

CharacterTableResiduals check_character_table(const CharacterTable& table) {
  CharacterTableResiduals r;
  const auto g = static_cast<double>(table.order());
  std::int64_t dimSquares = 0;
  for (auto d : table.irrepDims) dimSquares += d * d;
  r.orderMismatch = std::abs(static_cast<double>(dimSquares) - g);
  const auto irreps = table.values.rows();
  const auto classes = table.values.cols();
  if (irreps != classes) r.orderMismatch += 1.0;
  for (Eigen::Index i = 0; i < irreps; ++i) {
    r.identityColumn =
        std::max(r.identityColumn,
                 std::abs(table.values(i, 0) -
                          static_cast<double>(table.irrepDims[static_cast<std::size_t>(i)])));
    for (Eigen::Index j = 0; j < irreps; ++j) {
      std::complex<double> s = 0.0;
      for (Eigen::Index k = 0; k < classes; ++k) {
        s += static_cast<double>(table.classSizes[static_cast<std::size_t>(k)]) *
             table.values(i, k) * std::conj(table.values(j, k));
      }
      r.rowOrthogonality = std::max(r.rowOrthogonality, std::abs(s - (i == j ? g : 0.0)));
    }
  }
  for (Eigen::Index k = 0; k < classes; ++k) {
    for (Eigen::Index l = 0; l < classes; ++l) {
      std::complex<double> s = 0.0;
      for (Eigen::Index i = 0; i < irreps; ++i) s += table.values(i, k) * std::conj(table.values(i, l));
      const double expected =
          k == l ? g / static_cast<double>(table.classSizes[static_cast<std::size_t>(k)]) : 0.0;
      r.columnOrthogonality = std::max(r.columnOrthogonality, std::abs(s - expected));
    }
  }
  return r;
}

CharacterTable character_table_cyclic_power(int n, int d) {
  if (n < 2 || d < 1) fail(ErrorCode::InvalidOrder, "Z_n^d needs n >= 2 and d >= 1");
  std::int64_t order = 1;
  for (int i = 0; i < d; ++i) {
    order *= n;
    if (order > kMaxPowerOrder) {
      fail(ErrorCode::TooLarge, "Z_" + std::to_string(n) + "^" + std::to_string(d) +
                                    " exceeds " + std::to_string(kMaxPowerOrder) + " elements");
    }
  }
  const auto size = static_cast<int>(order);
  auto digits = [&](int index) {
    std::vector<int> out(static_cast<std::size_t>(d));
    for (int p = d - 1; p >= 0; --p) {
      out[static_cast<std::size_t>(p)] = index % n;
      index /= n;
    }
    return out;
  };
  auto label = [&](int index) {
    const auto digs = digits(index);
    std::string s;
    for (std::size_t p = 0; p < digs.size(); ++p) {
      if (p) s += '.';
      s += std::to_string(digs[p]);
    }
    return s;
  };

  CharacterTable t;
  t.groupName = d == 1 ? "Z_" + std::to_string(n) : "Z_" + std::to_string(n) + "^" + std::to_string(d);
  t.classSizes.assign(static_cast<std::size_t>(size), 1);
  t.irrepDims.assign(static_cast<std::size_t>(size), 1);
  t.values.resize(size, size);
  std::vector<std::vector<int>> tuples;
  tuples.reserve(static_cast<std::size_t>(size));
  for (int k = 0; k < size; ++k) tuples.push_back(digits(k));
  for (int k = 0; k < size; ++k) {
    t.classLabels.push_back(d == 1 ? "g^" + std::to_string(k) : label(k));
    t.irrepLabels.push_back("chi_" + (d == 1 ? std::to_string(k) : label(k)));
    int inverse = 0;
    for (int p = 0; p < d; ++p) {
      inverse = inverse * n + (n - tuples[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)]) % n;
    }
    t.inverseClassMap.push_back(inverse);
  }
  for (int j = 0; j < size; ++j) {
    for (int k = 0; k < size; ++k) {
      std::int64_t phase = 0;
      for (int p = 0; p < d; ++p) {
        phase += static_cast<std::int64_t>(tuples[static_cast<std::size_t>(j)][static_cast<std::size_t>(p)]) *
                 tuples[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)];
      }
      t.values(j, k) = root_of_unity(phase, n);
    }
  }
  return t;
}

CharacterTable character_table_cyclic(int n) {
  validate_group({GroupFamily::Cyclic, n});
  return character_table_cyclic_power(n, 1);
}

CharacterTable character_table_dihedral(int m) {
  validate_group({GroupFamily::Dihedral, m});
  CharacterTable t;
  t.groupName = "D_" + std::to_string(2 * m);
  auto rotationChar = [&](int h, int j) { return 2.0 * root_of_unity(static_cast<std::int64_t>(h) * j, m).real(); };

  if (m % 2 == 1) {
    const int r = (m - 1) / 2;
    t.classSizes = {1, m};
    t.classLabels = {"e", "b"};
    for (int h = 1; h <= r; ++h) {
      t.classSizes.push_back(2);
      t.classLabels.push_back("a^" + std::to_string(h));
    }
    t.irrepDims = {1, 1};
    t.irrepLabels = {"trivial", "sign"};
    for (int h = 1; h <= r; ++h) {
      t.irrepDims.push_back(2);
      t.irrepLabels.push_back("rho_" + std::to_string(h));
    }
    const int size = r + 2;
    t.values = Eigen::MatrixXcd::Zero(size, size);
    for (int k = 0; k < size; ++k) {
      const bool reflection = k == 1;
      t.values(0, k) = 1.0;
      t.values(1, k) = reflection ? -1.0 : 1.0;
      for (int h = 1; h <= r; ++h) {
        const int j = k == 0 ? 0 : k - 1;  // rotation exponent of class k >= 2
        t.values(h + 1, k) = reflection ? 0.0 : rotationChar(h, j);
      }
    }
  } else {
    const int l = m / 2;
    t.classSizes = {1, 1};
    t.classLabels = {"e", "a^" + std::to_string(l)};
    for (int h = 1; h <= l - 1; ++h) {
      t.classSizes.push_back(2);
      t.classLabels.push_back("a^" + std::to_string(h));
    }
    t.classSizes.push_back(l);
    t.classLabels.push_back("a^2j b");
    t.classSizes.push_back(l);
    t.classLabels.push_back("a^2j+1 b");
    const int size = l + 3;
    // Rotation exponent of each rotation class, -1 for reflection classes.
    std::vector<int> exponent(static_cast<std::size_t>(size), -1);
    exponent[0] = 0;
    exponent[1] = l;
    for (int h = 1; h <= l - 1; ++h) exponent[static_cast<std::size_t>(h + 1)] = h;

    const std::vector<std::pair<int, int>> signs{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    t.values = Eigen::MatrixXcd::Zero(size, size);
    for (std::size_t s = 0; s < signs.size(); ++s) {
      const auto [ea, eb] = signs[s];
      t.irrepDims.push_back(1);
      t.irrepLabels.push_back(std::string("eps(") + (ea > 0 ? "+" : "-") + "," + (eb > 0 ? "+" : "-") + ")");
      for (int k = 0; k < size; ++k) {
        const int e = exponent[static_cast<std::size_t>(k)];
        double v = 0.0;
        if (e >= 0) {
          v = (ea < 0 && e % 2 == 1) ? -1.0 : 1.0;
        } else {
          v = k == size - 2 ? eb : ea * eb;
        }
        t.values(static_cast<Eigen::Index>(s), k) = v;
      }
    }
    for (int h = 1; h <= l - 1; ++h) {
      t.irrepDims.push_back(2);
      t.irrepLabels.push_back("rho_" + std::to_string(h));
      for (int k = 0; k < size; ++k) {
        const int e = exponent[static_cast<std::size_t>(k)];
        t.values(h + 3, k) = e >= 0 ? rotationChar(h, e) : 0.0;
      }
    }
  }
  t.inverseClassMap.resize(t.classSizes.size());
  std::iota(t.inverseClassMap.begin(), t.inverseClassMap.end(), 0);
  return t;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition current;
  generate_partitions(n, n, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

Partition conjugate_partition(const Partition& lambda) {
  Partition out;
  if (lambda.empty()) return out;
  for (int j = 1; j <= lambda.front(); ++j) {
    int count = 0;
    for (int part : lambda) count += part >= j ? 1 : 0;
    out.push_back(count);
  }
  return out;
}

std::int64_t class_size_symmetric(const Partition& cycleType, int n) {
  int sum = 0;
  std::map<int, int> multiplicity;
  for (int part : cycleType) {
    if (part < 1) fail(ErrorCode::InvalidCycleType, "cycle lengths must be positive");
    sum += part;
    ++multiplicity[part];
  }
  if (sum != n) {
    fail(ErrorCode::InvalidCycleType,
         "cycle type sums to " + std::to_string(sum) + ", expected " + std::to_string(n));
  }
  if (n > 20) fail(ErrorCode::UnsupportedOrder, "n! overflows for n > 20");
  std::int64_t denominator = 1;
  for (const auto& [j, nu] : multiplicity) {
    for (int i = 0; i < nu; ++i) denominator *= j;
    denominator *= factorial(nu);
  }
  return factorial(n) / denominator;
}

std::int64_t transposition_eigenvalue(const Partition& lambda) {
  std::int64_t total = 0;
  for (int part : lambda) total += choose2(part);
  for (int part : conjugate_partition(lambda)) total -= choose2(part);
  return total;
}

std::int64_t irrep_dimension(const Partition& lambda) {
  const auto conj = conjugate_partition(lambda);
  int n = 0;
  for (int part : lambda) n += part;
  // Multiply and divide alternately to stay exact for n <= 20.
  std::vector<std::int64_t> hooks;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      hooks.push_back(lambda[i] - j + conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1);
    }
  }
  std::int64_t product = 1;
  for (auto h : hooks) product *= h;
  return factorial(n) / product;
}

std::int64_t symmetric_character(const Partition& lambda, const Partition& mu) {
  return MurnaghanNakayama(mu)(lambda);
}

CharacterTable character_table_symmetric(int n) {
  validate_group({GroupFamily::Symmetric, n});
  const auto types = partitions(n);  // ascending: identity first, transposition second
  auto shapes = types;
  std::reverse(shapes.begin(), shapes.end());  // descending: trivial first

  CharacterTable t;
  t.groupName = "S_" + std::to_string(n);
  const auto size = static_cast<Eigen::Index>(types.size());
  t.values.resize(size, size);
  for (const auto& type : types) {
    t.classSizes.push_back(class_size_symmetric(type, n));
    t.classLabels.push_back(partition_label(type));
  }
  for (const auto& shape : shapes) {
    t.irrepDims.push_back(irrep_dimension(shape));
    t.irrepLabels.push_back(partition_label(shape));
  }
  for (Eigen::Index k = 0; k < size; ++k) {
    MurnaghanNakayama mn(types[static_cast<std::size_t>(k)]);
    for (Eigen::Index i = 0; i < size; ++i) {
      t.values(i, k) = static_cast<double>(mn(shapes[static_cast<std::size_t>(i)]));
    }
  }
  t.inverseClassMap.resize(types.size());
  std::iota(t.inverseClassMap.begin(), t.inverseClassMap.end(), 0);
  return t;
}

CharacterTable character_table(const GroupDescriptor& group) {
  switch (group.family) {
    case GroupFamily::Cyclic: return character_table_cyclic(group.n);
    case GroupFamily::Dihedral: return character_table_dihedral(group.n);
    case GroupFamily::Symmetric: return character_table_symmetric(group.n);
  }
  fail(ErrorCode::SchemaError, "unknown group family");
}

SymmetrizedScheme fuse_classes(const CharacterTable& table, const ClassBlocks& blocks) {
  check_blocks(table, blocks);
  const auto irreps = table.values.rows();
  const auto blockCount = static_cast<Eigen::Index>(blocks.size());

  Eigen::MatrixXd full(irreps, blockCount);
  for (Eigen::Index i = 0; i < irreps; ++i) {
    const auto di = static_cast<double>(table.irrepDims[static_cast<std::size_t>(i)]);
    for (Eigen::Index b = 0; b < blockCount; ++b) {
      std::complex<double> s = 0.0;
      for (int k : blocks[static_cast<std::size_t>(b)]) {
        s += static_cast<double>(table.classSizes[static_cast<std::size_t>(k)]) * table.values(i, k);
      }
      s /= di;
      if (std::abs(s.imag()) > kRowMatch) {
        fail(ErrorCode::InvalidFusion, "block eigenvalue is not real");
      }
      full(i, b) = s.real();
    }
  }

  SymmetrizedScheme out;
  out.mergedClasses = blocks;
  for (const auto& block : blocks) {
    out.realClass.push_back(block.size() == 1 && table.class_is_real(block.front()));
  }
  for (Eigen::Index i = 0; i < irreps; ++i) {
    bool placed = false;
    for (auto& group : out.mergedIrreps) {
      if ((full.row(i) - full.row(group.front())).cwiseAbs().maxCoeff() < kRowMatch) {
        group.push_back(static_cast<int>(i));
        placed = true;
        break;
      }
    }
    if (!placed) out.mergedIrreps.push_back({static_cast<int>(i)});
  }
  if (static_cast<Eigen::Index>(out.mergedIrreps.size()) != blockCount) {
    fail(ErrorCode::InvalidFusion,
         std::to_string(blocks.size()) + " blocks but " + std::to_string(out.mergedIrreps.size()) +
             " distinct eigenvalue rows; the partition is not a fusion scheme");
  }

  auto& es = out.eigenstructure;
  es.valencies.order = table.order();
  for (const auto& block : blocks) {
    std::int64_t size = 0;
    for (int k : block) size += table.classSizes[static_cast<std::size_t>(k)];
    es.valencies.sizes.push_back(size);
  }
  es.P.resize(blockCount, blockCount);
  es.Q.resize(blockCount, blockCount);
  es.multiplicities.resize(blockCount);
  for (Eigen::Index I = 0; I < blockCount; ++I) {
    const auto& group = out.mergedIrreps[static_cast<std::size_t>(I)];
    es.P.row(I) = full.row(group.front());
    double m = 0.0;
    for (int i : group) {
      const auto d = static_cast<double>(table.irrepDims[static_cast<std::size_t>(i)]);
      m += d * d;
    }
    es.multiplicities[I] = m;
  }
  for (Eigen::Index K = 0; K < blockCount; ++K) {
    const auto aK = static_cast<double>(es.valencies.sizes[static_cast<std::size_t>(K)]);
    for (Eigen::Index I = 0; I < blockCount; ++I) {
      es.Q(K, I) = es.multiplicities[I] * es.P(I, K) / aK;
    }
  }
  out.Ptilde = es.P;
  out.Qtilde = es.Q;
  return out;
}

SymmetrizedScheme symmetrize(const CharacterTable& table) {
  ClassBlocks blocks;
  std::vector<bool> seen(static_cast<std::size_t>(table.class_count()), false);
  for (int k = 0; k < table.class_count(); ++k) {
    if (seen[static_cast<std::size_t>(k)]) continue;
    const int inverse = table.inverseClassMap[static_cast<std::size_t>(k)];
    seen[static_cast<std::size_t>(k)] = true;
    seen[static_cast<std::size_t>(inverse)] = true;
    if (inverse == k) {
      blocks.push_back({k});
    } else {
      blocks.push_back({k, inverse});
    }
  }
  return fuse_classes(table, blocks);
}

SchemeEigenstructure group_eigenstructure(const CharacterTable& table, bool needSymmetrization) {
  if (table.is_real()) {
    ClassBlocks singletons;
    for (int k = 0; k < table.class_count(); ++k) singletons.push_back({k});
    return fuse_classes(table, singletons).eigenstructure;
  }
  if (!needSymmetrization) {
    fail(ErrorCode::ComplexClassesWithoutSymmetrization,
         table.groupName + " has non-real classes; symmetrize first");
  }
  return symmetrize(table).eigenstructure;
}

ClassBlocks default_blocks(const GroupDescriptor& group, const CharacterTable& table) {
  if (group.family == GroupFamily::Cyclic) return symmetrize(table).mergedClasses;
  ClassBlocks blocks;
  if (group.family == GroupFamily::Dihedral && group.n % 2 == 0) {
    const int l = group.n / 2;
    blocks.push_back({0});
    blocks.push_back({l + 1, l + 2});
    for (int k = 1; k <= l; ++k) blocks.push_back({k});
    return blocks;
  }
  for (int k = 0; k < table.class_count(); ++k) blocks.push_back({k});
  return blocks;
}

ClassBlocks hamming_weight_blocks(int n, int d) {
  int size = 1;
  for (int i = 0; i < d; ++i) size *= n;
  ClassBlocks blocks(static_cast<std::size_t>(d) + 1);
  for (int index = 0; index < size; ++index) {
    int weight = 0;
    for (int rest = index; rest > 0; rest /= n) weight += (rest % n) != 0 ? 1 : 0;
    blocks[static_cast<std::size_t>(weight)].push_back(index);
  }
  return blocks;
}

std::int64_t intersection_numbers_group(const CharacterTable& table, int i, int j, int k) {
  const int classes = table.class_count();
  for (int idx : {i, j, k}) {
    if (idx < 0 || idx >= classes) fail(ErrorCode::InconsistentInputs, "class index out of range");
  }
  std::complex<double> sum = 0.0;
  for (Eigen::Index r = 0; r < table.values.rows(); ++r) {
    sum += table.values(r, i) * table.values(r, j) * std::conj(table.values(r, k)) /
           static_cast<double>(table.irrepDims[static_cast<std::size_t>(r)]);
  }
  sum *= static_cast<double>(table.classSizes[static_cast<std::size_t>(i)]) *
         static_cast<double>(table.classSizes[static_cast<std::size_t>(j)]) /
         static_cast<double>(table.order());
  const double rounded = std::round(sum.real());
  if (std::abs(sum.real() - rounded) > 1e-6 || std::abs(sum.imag()) > 1e-6 || rounded < 0) {
    fail(ErrorCode::NonIntegerResult, "p_" + std::to_string(i) + std::to_string(j) + "^" +
                                          std::to_string(k) + " is not a nonnegative integer");
  }
  return static_cast<std::int64_t>(rounded);
}

std::int64_t intersection_numbers_fused(const CharacterTable& table, const ClassBlocks& blocks,
                                        int I, int J, int K) {
  const auto count = static_cast<int>(blocks.size());
  for (int idx : {I, J, K}) {
    if (idx < 0 || idx >= count) fail(ErrorCode::InconsistentInputs, "block index out of range");
  }
  const int k = blocks[static_cast<std::size_t>(K)].front();
  std::int64_t total = 0;
  for (int i : blocks[static_cast<std::size_t>(I)]) {
    for (int j : blocks[static_cast<std::size_t>(J)]) total += intersection_numbers_group(table, i, j, k);
  }
  return total;
}

}  // namespace schemewalk

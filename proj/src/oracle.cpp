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

#include "schemewalk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "schemewalk/errors.hpp"
#include "schemewalk/linalg.hpp"

namespace schemewalk::oracle {
namespace {

using cd = std::complex<double>;

void require_size(std::int64_t vertices, const std::string& what) {
  if (vertices > kMaxVertices) {
    fail(ErrorCode::TooLarge, what + " has " + std::to_string(vertices) + " vertices (limit " +
                                  std::to_string(kMaxVertices) + ")");
  }
}

VertexGraph empty_graph(int n) {
  VertexGraph g;
  g.n = n;
  g.adjacency = Eigen::MatrixXi::Zero(n, n);
  g.vertexLabels.resize(static_cast<std::size_t>(n));
  return g;
}

void connect(VertexGraph& g, int a, int b) {
  g.adjacency(a, b) = 1;
  g.adjacency(b, a) = 1;
}

std::vector<std::vector<int>> subsets(int v, int k) {
  std::vector<std::vector<int>> out;
  std::vector<bool> mask(static_cast<std::size_t>(v), false);
  std::fill(mask.begin(), mask.begin() + k, true);
  do {
    std::vector<int> s;
    for (int i = 0; i < v; ++i) {
      if (mask[static_cast<std::size_t>(i)]) s.push_back(i + 1);
    }
    out.push_back(s);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

std::string set_label(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return static_cast<int>(common.size());
}

VertexGraph subset_graph(int v, int k, int wantedIntersection, const std::string& prefix) {
  auto sets = subsets(v, k);
  require_size(static_cast<std::int64_t>(sets.size()), prefix);
  VertexGraph g = empty_graph(static_cast<int>(sets.size()));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    g.vertexLabels[i] = set_label(sets[i]);
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (intersection_size(sets[i], sets[j]) == wantedIntersection) {
        connect(g, static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return g;
}

std::int64_t integer_power(std::int64_t base, int exponent) {
  std::int64_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    out *= base;
    if (out > 1000000000) return out;
  }
  return out;
}

std::optional<VertexGraph> graph_for_array(const IntersectionArray& ia) {
  const auto c0 = ia.degree();
  const int d = ia.diameter;
  if (ia == complete_graph_array(static_cast<int>(c0 + 1))) {
    return complete_graph(static_cast<int>(c0 + 1));
  }
  for (int n : {2 * d, 2 * d + 1}) {
    if (n >= 3 && ia == cycle_array(n)) return cycle_graph(n);
  }
  if (ia == IntersectionArray{2, {3, 2}, {1, 1}}) return petersen_graph();
  if (c0 % d == 0 && c0 / d >= 1 && ia == hamming_array(static_cast<int>(c0 / d) + 1, d)) {
    const int n = static_cast<int>(c0 / d) + 1;
    require_size(integer_power(n, d), "H(" + std::to_string(d) + "," + std::to_string(n) + ")");
    return hamming_graph(d, n);
  }
  if (c0 % d == 0) {
    const int v = static_cast<int>(c0 / d) + d;
    if (2 * d <= v && ia == johnson_array(v, d)) return johnson_graph(v, d);
  }
  if (d == 2 && ia.c(0) >= 2 && ia == IntersectionArray{2, {ia.c(0), ia.c(0) - 1}, {1, ia.c(0)}}) {
    return complete_bipartite_graph(static_cast<int>(ia.c(0)));
  }
  return std::nullopt;
}

}  // namespace

bool VertexGraph::well_formed() const {
  if (adjacency.rows() != n || adjacency.cols() != n) return false;
  for (int i = 0; i < n; ++i) {
    if (adjacency(i, i) != 0) return false;
    for (int j = 0; j < n; ++j) {
      const int a = adjacency(i, j);
      if ((a != 0 && a != 1) || a != adjacency(j, i)) return false;
    }
  }
  return true;
}

bool VertexGraph::is_regular() const {
  for (int v = 1; v < n; ++v) {
    if (degree(v) != degree(0)) return false;
  }
  return true;
}

FiniteGroup cyclic_power_group(int n, int d) {
  if (n < 2 || d < 1) fail(ErrorCode::InvalidOrder, "Z_n^d needs n >= 2 and d >= 1");
  const auto order = integer_power(n, d);
  require_size(order, "Z_" + std::to_string(n) + "^" + std::to_string(d));
  const int size = static_cast<int>(order);
  auto digits = [&](int x) {
    std::vector<int> out(static_cast<std::size_t>(d));
    for (int p = d - 1; p >= 0; --p) {
      out[static_cast<std::size_t>(p)] = x % n;
      x /= n;
    }
    return out;
  };
  auto index = [&](const std::vector<int>& digs) {
    int x = 0;
    for (int v : digs) x = x * n + v;
    return x;
  };
  FiniteGroup g;
  g.name = d == 1 ? "Z_" + std::to_string(n) : "Z_" + std::to_string(n) + "^" + std::to_string(d);
  g.mul.assign(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size)));
  for (int a = 0; a < size; ++a) {
    const auto da = digits(a);
    std::vector<int> inv(da.size());
    for (std::size_t p = 0; p < da.size(); ++p) inv[p] = (n - da[p]) % n;
    g.inverse.push_back(index(inv));
    g.classOf.push_back(a);
    g.labels.push_back(std::to_string(a));
    for (int b = 0; b < size; ++b) {
      const auto db = digits(b);
      std::vector<int> sum(da.size());
      for (std::size_t p = 0; p < da.size(); ++p) sum[p] = (da[p] + db[p]) % n;
      g.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = index(sum);
    }
  }
  return g;
}

FiniteGroup cyclic_group(int n) { return cyclic_power_group(n, 1); }

FiniteGroup dihedral_group(int m) {
  if (m < 3) fail(ErrorCode::InvalidOrder, "dihedral group needs m >= 3");
  require_size(2 * static_cast<std::int64_t>(m), "D_" + std::to_string(2 * m));
  const int size = 2 * m;
  auto encode = [m](int r, int s) { return ((r % m) + m) % m + m * s; };
  FiniteGroup g;
  g.name = "D_" + std::to_string(size);
  g.mul.assign(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size)));
  const int l = m / 2;
  for (int x = 0; x < size; ++x) {
    const int r = x % m;
    const int s = x / m;
    g.labels.push_back("a^" + std::to_string(r) + (s ? " b" : ""));
    g.inverse.push_back(s ? x : encode(-r, 0));
    for (int y = 0; y < size; ++y) {
      const int r2 = y % m;
      const int s2 = y / m;
      // a^r b^s a^r2 b^s2 = a^{r + (-1)^s r2} b^{s + s2}
      g.mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          encode(s ? r - r2 : r + r2, (s + s2) % 2);
    }
    int cls = 0;
    const int h = std::min(r, m - r);
    if (m % 2 == 1) {
      cls = s ? 1 : (r == 0 ? 0 : h + 1);
    } else if (s) {
      cls = r % 2 == 0 ? l + 1 : l + 2;
    } else {
      cls = r == 0 ? 0 : (r == l ? 1 : h + 1);
    }
    g.classOf.push_back(cls);
  }
  return g;
}

FiniteGroup symmetric_group(int n) {
  if (n < 2) fail(ErrorCode::InvalidOrder, "symmetric group needs n >= 2");
  if (n > 6) fail(ErrorCode::TooLarge, "symmetric-group oracle is capped at n = 6");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);

  const auto types = partitions(n);
  FiniteGroup g;
  g.name = "S_" + std::to_string(n);
  const auto size = perms.size();
  g.mul.assign(size, std::vector<int>(size));
  for (std::size_t a = 0; a < size; ++a) {
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) inv[static_cast<std::size_t>(perms[a][static_cast<std::size_t>(x)])] = x;
    g.inverse.push_back(index.at(inv));
    std::string label;
    for (int v : perms[a]) label += std::to_string(v + 1);
    g.labels.push_back(label);
    for (std::size_t b = 0; b < size; ++b) {
      std::vector<int> composed(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) {
        composed[static_cast<std::size_t>(x)] =
            perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(x)])];
      }
      g.mul[a][b] = index.at(composed);
    }
    // Cycle type, parts in non-increasing order.
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    Partition type;
    for (int x = 0; x < n; ++x) {
      if (seen[static_cast<std::size_t>(x)]) continue;
      int length = 0;
      for (int y = x; !seen[static_cast<std::size_t>(y)]; y = perms[a][static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        ++length;
      }
      type.push_back(length);
    }
    std::sort(type.begin(), type.end(), std::greater<>());
    g.classOf.push_back(
        static_cast<int>(std::find(types.begin(), types.end(), type) - types.begin()));
  }
  return g;
}

FiniteGroup finite_group(const GroupDescriptor& group) {
  validate_group(group);
  switch (group.family) {
    case GroupFamily::Cyclic: return cyclic_group(group.n);
    case GroupFamily::Dihedral: return dihedral_group(group.n);
    case GroupFamily::Symmetric: return symmetric_group(group.n);
  }
  fail(ErrorCode::SchemaError, "unknown group family");
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& group) {
  const int n = group.order();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < n; ++x) {
    if (owner[static_cast<std::size_t>(x)] != -1) continue;
    std::set<int> cls;
    for (int g = 0; g < n; ++g) {
      const int gx = group.mul[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)];
      cls.insert(group.mul[static_cast<std::size_t>(gx)][static_cast<std::size_t>(group.inverse[static_cast<std::size_t>(g)])]);
    }
    for (int y : cls) owner[static_cast<std::size_t>(y)] = static_cast<int>(classes.size());
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

VertexGraph cycle_graph(int n) {
  if (n < 3) fail(ErrorCode::BadParams, "cycle needs n >= 3");
  require_size(n, "C_" + std::to_string(n));
  VertexGraph g = empty_graph(n);
  for (int v = 0; v < n; ++v) {
    g.vertexLabels[static_cast<std::size_t>(v)] = std::to_string(v);
    connect(g, v, (v + 1) % n);
  }
  return g;
}

VertexGraph complete_graph(int n) {
  if (n < 2) fail(ErrorCode::BadParams, "complete graph needs n >= 2");
  require_size(n, "K_" + std::to_string(n));
  VertexGraph g = empty_graph(n);
  for (int v = 0; v < n; ++v) {
    g.vertexLabels[static_cast<std::size_t>(v)] = std::to_string(v);
    for (int w = v + 1; w < n; ++w) connect(g, v, w);
  }
  return g;
}

VertexGraph kneser_graph(int v, int k) {
  if (k < 1 || 2 * k > v) fail(ErrorCode::BadParams, "kneser graph needs 1 <= k <= v/2");
  return subset_graph(v, k, 0, "K(" + std::to_string(v) + "," + std::to_string(k) + ")");
}

VertexGraph petersen_graph() { return kneser_graph(5, 2); }

VertexGraph johnson_graph(int v, int d) {
  if (d < 1 || d >= v) fail(ErrorCode::BadParams, "johnson graph needs 1 <= d < v");
  return subset_graph(v, d, d - 1, "J(" + std::to_string(v) + "," + std::to_string(d) + ")");
}

VertexGraph hamming_graph(int d, int n) {
  if (d < 1 || n < 2) fail(ErrorCode::BadParams, "hamming graph needs d >= 1 and n >= 2");
  const auto size = integer_power(n, d);
  require_size(size, "H(" + std::to_string(d) + "," + std::to_string(n) + ")");
  VertexGraph g = empty_graph(static_cast<int>(size));
  std::vector<std::vector<int>> words;
  for (int x = 0; x < static_cast<int>(size); ++x) {
    std::vector<int> w(static_cast<std::size_t>(d));
    int rest = x;
    for (int p = d - 1; p >= 0; --p) {
      w[static_cast<std::size_t>(p)] = rest % n;
      rest /= n;
    }
    std::string label;
    for (int letter : w) label += std::to_string(letter);
    g.vertexLabels[static_cast<std::size_t>(x)] = label;
    words.push_back(std::move(w));
  }
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      int differ = 0;
      for (int p = 0; p < d; ++p) differ += words[a][static_cast<std::size_t>(p)] != words[b][static_cast<std::size_t>(p)];
      if (differ == 1) connect(g, static_cast<int>(a), static_cast<int>(b));
    }
  }
  return g;
}

VertexGraph complete_bipartite_graph(int m) {
  if (m < 1) fail(ErrorCode::BadParams, "K_{m,m} needs m >= 1");
  require_size(2 * static_cast<std::int64_t>(m), "K_{m,m}");
  VertexGraph g = empty_graph(2 * m);
  for (int v = 0; v < 2 * m; ++v) {
    g.vertexLabels[static_cast<std::size_t>(v)] = (v < m ? "L" : "R") + std::to_string(v % m);
  }
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) connect(g, a, m + b);
  }
  return g;
}

VertexGraph cayley_graph(const FiniteGroup& group, const std::vector<int>& connection) {
  const int n = group.order();
  require_size(n, group.name);
  const std::set<int> s(connection.begin(), connection.end());
  if (s.contains(0)) fail(ErrorCode::NonSymmetricGeneratingSet, "connection set contains identity");
  for (int x : s) {
    if (x < 0 || x >= n) fail(ErrorCode::NonSymmetricGeneratingSet, "element out of range");
    if (!s.contains(group.inverse[static_cast<std::size_t>(x)])) {
      fail(ErrorCode::NonSymmetricGeneratingSet,
           "connection set is not closed under inversion (" +
               group.labels[static_cast<std::size_t>(x)] + ")");
    }
  }
  VertexGraph g = empty_graph(n);
  g.vertexLabels = group.labels;
  for (int a = 0; a < n; ++a) {
    for (int x : s) g.adjacency(a, group.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)]) = 1;
  }
  return g;
}

VertexGraph build_graph(const SchemeSpec& spec) {
  validate_spec(spec);
  if (const auto* grp = std::get_if<FromGroup>(&spec)) {
    const auto realization = *group_realization(spec);
    const auto group = finite_group(grp->group);
    const auto& block = realization.blocks[static_cast<std::size_t>(realization.generatingBlock)];
    std::vector<int> connection;
    for (int x = 0; x < group.order(); ++x) {
      if (std::find(block.begin(), block.end(), group.classOf[static_cast<std::size_t>(x)]) != block.end()) {
        connection.push_back(x);
      }
    }
    return cayley_graph(group, connection);
  }
  if (const auto* p = std::get_if<Product>(&spec)) return hamming_graph(p->copies, p->baseOrder);
  if (const auto* c = std::get_if<FromCatalog>(&spec)) {
    const auto& name = c->name;
    if (name == "petersen") return petersen_graph();
    if (name == "complete") return complete_graph(static_cast<int>(c->params[0]));
    if (name == "cycle") return cycle_graph(static_cast<int>(c->params[0]));
    if (name == "hamming") {
      return hamming_graph(static_cast<int>(c->params[0]), static_cast<int>(c->params[1]));
    }
    if (name == "johnson") {
      return johnson_graph(static_cast<int>(c->params[0]), static_cast<int>(c->params[1]));
    }
    fail(ErrorCode::NoConstruction, "no explicit construction for catalog entry '" + name + "'");
  }
  const auto array = intersection_array_of(spec);
  require_size(derive_stratum_sizes(array).order, describe(spec));
  if (auto g = graph_for_array(array)) return *g;
  fail(ErrorCode::NoConstruction, "no explicit construction for " + describe(spec));
}

DistancePartition bfs_strata(const VertexGraph& g) {
  DistancePartition p;
  p.distances.assign(static_cast<std::size_t>(g.n), -1);
  std::deque<int> queue{g.root};
  p.distances[static_cast<std::size_t>(g.root)] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w = 0; w < g.n; ++w) {
      if (g.adjacency(v, w) && p.distances[static_cast<std::size_t>(w)] < 0) {
        p.distances[static_cast<std::size_t>(w)] = p.distances[static_cast<std::size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  int diameter = 0;
  for (int d : p.distances) {
    if (d < 0) fail(ErrorCode::InconsistentInputs, "graph is disconnected");
    diameter = std::max(diameter, d);
  }
  p.strata.resize(static_cast<std::size_t>(diameter) + 1);
  for (int v = 0; v < g.n; ++v) p.strata[static_cast<std::size_t>(p.distances[static_cast<std::size_t>(v)])].push_back(v);
  return p;
}

DistancePartition class_partition(const FiniteGroup& group, const ClassBlocks& blocks) {
  DistancePartition p;
  std::vector<int> blockOf(group.classOf.size() + blocks.size() + 64, -1);
  std::map<int, int> owner;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int c : blocks[b]) owner[c] = static_cast<int>(b);
  }
  p.strata.resize(blocks.size());
  for (int x = 0; x < group.order(); ++x) {
    const int b = owner.at(group.classOf[static_cast<std::size_t>(x)]);
    p.distances.push_back(b);
    p.strata[static_cast<std::size_t>(b)].push_back(x);
  }
  return p;
}

DistancePartition spec_partition(const SchemeSpec& spec, const VertexGraph& g) {
  if (const auto* grp = std::get_if<FromGroup>(&spec)) {
    const auto realization = *group_realization(spec);
    return class_partition(finite_group(grp->group), realization.blocks);
  }
  return bfs_strata(g);
}

IntersectionArray derive_intersection_array(const VertexGraph& g, const DistancePartition& p) {
  const int d = p.diameter();
  IntersectionArray ia;
  ia.diameter = d;
  ia.forward.assign(static_cast<std::size_t>(d), -1);
  ia.backward.assign(static_cast<std::size_t>(d), -1);
  for (int i = 0; i <= d; ++i) {
    std::int64_t forward = -1;
    std::int64_t backward = -1;
    for (int v : p.strata[static_cast<std::size_t>(i)]) {
      std::int64_t up = 0;
      std::int64_t down = 0;
      for (int w = 0; w < g.n; ++w) {
        if (!g.adjacency(v, w)) continue;
        const int dw = p.distances[static_cast<std::size_t>(w)];
        if (dw == i + 1) ++up;
        if (dw == i - 1) ++down;
      }
      if ((forward >= 0 && up != forward) || (backward >= 0 && down != backward)) {
        fail(ErrorCode::NotDistanceRegular,
             "neighbour counts vary within stratum " + std::to_string(i));
      }
      forward = up;
      backward = down;
    }
    if (i < d) ia.forward[static_cast<std::size_t>(i)] = forward;
    if (i > 0) ia.backward[static_cast<std::size_t>(i - 1)] = backward;
  }
  return ia;
}

ExactWalk exact_walk(const VertexGraph& g, std::span<const double> times) {
  require_size(g.n, "graph");
  const Eigen::MatrixXd a = g.adjacency.cast<double>();
  const auto eig = linalg::jacobi_eigen(a, 100);
  const auto& u = eig.vectors;
  ExactWalk out;
  out.times.assign(times.begin(), times.end());
  out.eigenResidual = (a * u - u * eig.values.asDiagonal()).cwiseAbs().maxCoeff();
  out.orthogonalityDefect =
      (u * u.transpose() - Eigen::MatrixXd::Identity(g.n, g.n)).cwiseAbs().maxCoeff();
  out.amplitudes.resize(static_cast<Eigen::Index>(times.size()), g.n);
  const Eigen::MatrixXcd uc = u.cast<cd>();
  Eigen::VectorXcd w(g.n);
  for (std::size_t r = 0; r < times.size(); ++r) {
    for (int j = 0; j < g.n; ++j) {
      w[j] = std::polar(1.0, -eig.values[j] * times[r]) * u(g.root, j);
    }
    out.amplitudes.row(static_cast<Eigen::Index>(r)) = (uc * w).transpose();
    out.unitarityDefect =
        std::max(out.unitarityDefect, std::abs(out.amplitudes.row(static_cast<Eigen::Index>(r)).squaredNorm() - 1.0));
  }
  return out;
}

Eigen::MatrixXcd stratum_amplitudes(const ExactWalk& walk, const DistancePartition& p) {
  const auto strata = static_cast<Eigen::Index>(p.strata.size());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(walk.amplitudes.rows(), strata);
  for (Eigen::Index k = 0; k < strata; ++k) {
    const auto& members = p.strata[static_cast<std::size_t>(k)];
    for (int v : members) out.col(k) += walk.amplitudes.col(v);
    out.col(k) /= std::sqrt(static_cast<double>(members.size()));
  }
  return out;
}

double stratum_spread(const ExactWalk& walk, const DistancePartition& p) {
  double spread = 0.0;
  for (Eigen::Index r = 0; r < walk.amplitudes.rows(); ++r) {
    for (const auto& members : p.strata) {
      for (std::size_t a = 1; a < members.size(); ++a) {
        spread = std::max(spread, std::abs(walk.amplitudes(r, members[a]) - walk.amplitudes(r, members[0])));
      }
    }
  }
  return spread;
}

QuantumDecomposition quantum_decomposition(const VertexGraph& g, const DistancePartition& p) {
  QuantumDecomposition q;
  q.raising = Eigen::MatrixXi::Zero(g.n, g.n);
  q.lowering = Eigen::MatrixXi::Zero(g.n, g.n);
  q.diagonal = Eigen::MatrixXi::Zero(g.n, g.n);
  for (int beta = 0; beta < g.n; ++beta) {
    for (int alpha = 0; alpha < g.n; ++alpha) {
      if (!g.adjacency(beta, alpha)) continue;
      const int gap = p.distances[static_cast<std::size_t>(beta)] - p.distances[static_cast<std::size_t>(alpha)];
      if (gap == 1) {
        q.raising(beta, alpha) = 1;
      } else if (gap == -1) {
        q.lowering(beta, alpha) = 1;
      } else if (gap == 0) {
        q.diagonal(beta, alpha) = 1;
      } else {
        fail(ErrorCode::NotDistanceRegular, "edge joins strata more than one apart");
      }
    }
  }
  return q;
}

double LadderReport::worst() const { return std::max({raising, lowering, diagonal}); }

LadderReport check_ladder(const VertexGraph& g, const DistancePartition& p,
                          const QuantumDecomposition& q, const JacobiCoefficients& jc) {
  LadderReport r;
  r.sumExact = (q.raising + q.lowering + q.diagonal) == g.adjacency;
  r.transposeExact = Eigen::MatrixXi(q.lowering.transpose()) == q.raising;
  r.blocksExact = true;
  for (int beta = 0; beta < g.n; ++beta) {
    for (int alpha = 0; alpha < g.n; ++alpha) {
      const int db = p.distances[static_cast<std::size_t>(beta)];
      const int da = p.distances[static_cast<std::size_t>(alpha)];
      if ((q.diagonal(beta, alpha) && db != da) || (q.raising(beta, alpha) && db != da + 1) ||
          (q.lowering(beta, alpha) && db != da - 1)) {
        r.blocksExact = false;
      }
    }
  }
  const int d = p.diameter();
  if (jc.diameter() != d) fail(ErrorCode::InconsistentInputs, "Jacobi coefficients do not match strata");
  auto phi = [&](int k) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(g.n);
    if (k < 0 || k > d) return v;
    const auto& members = p.strata[static_cast<std::size_t>(k)];
    for (int x : members) v[x] = 1.0 / std::sqrt(static_cast<double>(members.size()));
    return v;
  };
  const Eigen::MatrixXd plus = q.raising.cast<double>();
  const Eigen::MatrixXd minus = q.lowering.cast<double>();
  const Eigen::MatrixXd zero = q.diagonal.cast<double>();
  for (int k = 0; k <= d; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const double up = k < d ? std::sqrt(jc.omega[uk]) : 0.0;
    const double down = k > 0 ? std::sqrt(jc.omega[uk - 1]) : 0.0;
    r.raising = std::max(r.raising, (plus * phi(k) - up * phi(k + 1)).cwiseAbs().maxCoeff());
    r.lowering = std::max(r.lowering, (minus * phi(k) - down * phi(k - 1)).cwiseAbs().maxCoeff());
    r.diagonal = std::max(r.diagonal, (zero * phi(k) - jc.alpha[uk] * phi(k)).cwiseAbs().maxCoeff());
  }
  return r;
}

}  // namespace schemewalk::oracle

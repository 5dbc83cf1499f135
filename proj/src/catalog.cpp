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

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>

#include "schemewalk/errors.hpp"
#include "schemewalk/spectral.hpp"

namespace schemewalk {
namespace {

using Params = std::vector<std::int64_t>;
using Builder = std::function<CatalogEntry(const Params&)>;

struct Registration {
  std::vector<std::string> paramNames;
  std::string description;
  Builder build;
};

IntersectionArray make_array(std::vector<std::int64_t> c, std::vector<std::int64_t> b) {
  const int d = static_cast<int>(c.size());
  return IntersectionArray{d, std::move(c), std::move(b)};
}

/// Sorts the printed atoms ascending. Duplicated atoms are kept as printed.
DiscreteDistribution printed(std::vector<std::pair<double, double>> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  DiscreteDistribution out;
  for (const auto& [x, w] : terms) {
    out.atoms.push_back(x);
    out.weights.push_back(w);
  }
  return out;
}

void require_range(const std::string& name, std::int64_t value, std::int64_t lo, std::int64_t hi) {
  if (value < lo || value > hi) {
    fail(ErrorCode::BadParams, name + " = " + std::to_string(value) + " outside [" +
                                   std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

CatalogEntry fixed(std::string name, IntersectionArray ia, DiscreteDistribution expected,
                   std::string description) {
  return CatalogEntry{std::move(name), {}, {}, std::move(ia), std::move(expected),
                      std::move(description)};
}

const std::map<std::string, Registration>& registry() {
  static const std::map<std::string, Registration> table = [] {
    std::map<std::string, Registration> r;

    r["petersen"] = {{}, "Petersen graph, srg(10,3,0,1)", [](const Params&) {
                       return fixed("petersen", make_array({3, 2}, {1, 1}),
                                    printed({{3, 0.1}, {1, 0.5}, {-2, 0.4}}),
                                    "Petersen graph, srg(10,3,0,1)");
                     }};

    r["complete"] = {{"n"}, "complete graph K_n", [](const Params& p) {
                       require_range("n", p[0], 2, 100000);
                       const auto n = static_cast<double>(p[0]);
                       return CatalogEntry{"complete", {"n"}, p,
                                           complete_graph_array(static_cast<int>(p[0])),
                                           printed({{n - 1.0, 1.0 / n}, {-1.0, (n - 1.0) / n}}),
                                           "complete graph K_n"};
                     }};

    r["cycle"] = {{"n"}, "cycle graph C_n", [](const Params& p) {
                    require_range("n", p[0], 3, 100000);
                    const int n = static_cast<int>(p[0]);
                    std::vector<std::pair<double, double>> terms;
                    for (int l = 0; l <= n / 2; ++l) {
                      const bool single = (l == 0) || (2 * l == n);
                      terms.emplace_back(2.0 * std::cos(2.0 * std::numbers::pi * l / n),
                                         (single ? 1.0 : 2.0) / n);
                    }
                    return CatalogEntry{"cycle", {"n"}, p, cycle_array(n), printed(terms),
                                        "cycle graph C_n"};
                  }};

    r["hamming"] = {{"d", "n"}, "Hamming graph H(d, n)", [](const Params& p) {
                      require_range("d", p[0], 1, 64);
                      require_range("n", p[1], 2, 100000);
                      const int d = static_cast<int>(p[0]);
                      const int n = static_cast<int>(p[1]);
                      return CatalogEntry{"hamming", {"d", "n"}, p, hamming_array(n, d),
                                          hamming_distribution(n, d), "Hamming graph H(d, n)"};
                    }};

    r["johnson"] = {{"v", "d"}, "Johnson graph J(v, d), 1 <= d <= v/2", [](const Params& p) {
                      require_range("v", p[0], 2, 100000);
                      require_range("d", p[1], 1, p[0] / 2);
                      return CatalogEntry{"johnson", {"v", "d"}, p,
                                          johnson_array(static_cast<int>(p[0]),
                                                        static_cast<int>(p[1])),
                                          std::nullopt, "Johnson graph J(v, d)"};
                    }};

    r["generalized_octagon"] = {
        {"s", "t"}, "collinearity graph of a generalized octagon GO(s, t)", [](const Params& p) {
          require_range("s", p[0], 1, 10000);
          require_range("t", p[1], 1, 10000);
          const auto s = static_cast<double>(p[0]);
          const auto t = static_cast<double>(p[1]);
          const double r = std::sqrt(2.0 * s * t);
          const double side = s * t * (t + 1.0) / (4.0 * (s * t + 1.0 - r) * (s + t + r));
          auto expected = printed({
              {s * (t + 1.0), 1.0 / ((s + 1.0) * (s * t + 1.0) * (s * s * t * t + 1.0))},
              {s - 1.0 + r, side},
              {s - 1.0, s * t * (t + 1.0) / (2.0 * (s * t + 1.0) * (s + t))},
              {s - 1.0 - r, side},
              {-t - 1.0, std::pow(s, 4) / ((s + 1.0) * (s + t) * (s * s + t * t))},
          });
          const auto st = p[0] * p[1];
          return CatalogEntry{"generalized_octagon", {"s", "t"}, p,
                              make_array({p[0] * (p[1] + 1), st, st, st}, {1, 1, 1, p[1] + 1}),
                              expected, "collinearity graph of a generalized octagon GO(s, t)"};
        }};

    r["generalized_dodecagon"] = {
        {"s"}, "collinearity graph of a generalized dodecagon GD(s, 1)", [](const Params& p) {
          require_range("s", p[0], 1, 10000);
          const auto s = static_cast<double>(p[0]);
          const double r3 = std::sqrt(3.0 * s);
          const double r1 = std::sqrt(s);
          const double u = (s + 1.0) * (s + 1.0) - 3.0 * s;
          const double v = (s + 1.0) * (s + 1.0) - s;
          const double w = (s + 1.0) * (s + 1.0);
          auto expected = printed({
              {2.0 * s, 1.0 / (u * v * w)},
              {s - 1.0 + r3, (s - 1.0 + r3) / (12.0 * u)},
              {s - 1.0 - r3, (s - 1.0 - r3) / (12.0 * u)},
              {s - 1.0 - r1, (s - 1.0 + r1) / (4.0 * v)},
              {s - 1.0 - r1, (s - 1.0 - r1) / (4.0 * v)},
              {-2.0, std::pow(s, 5) / (u * v * w)},
          });
          const auto q = p[0];
          return CatalogEntry{"generalized_dodecagon", {"s"}, p,
                              make_array({2 * q, q, q, q, q, q}, {1, 1, 1, 1, 1, 2}), expected,
                              "collinearity graph of a generalized dodecagon GD(s, 1)"};
        }};

    r["m22"] = {{}, "M22 graph", [](const Params&) {
                  return fixed("m22", make_array({7, 6, 4, 4}, {1, 1, 1, 6}),
                               printed({{-4, 7.0 / 110},
                                        {-3, 3.0 / 10},
                                        {1, 7.0 / 15},
                                        {4, 1.0 / 6},
                                        {7, 1.0 / 330}}),
                               "M22 graph");
                }};

    r["pg_incidence"] = {
        {"k"}, "incidence graph of pg(k-1, k-1, k-1)", [](const Params& p) {
          require_range("k", p[0], 2, 100000);
          const auto k = static_cast<double>(p[0]);
          const double r = std::sqrt(k);
          auto expected = printed({{k, 1.0 / (2.0 * k * k)},
                                   {-k, 1.0 / (2.0 * k * k)},
                                   {0.0, (k - 1.0) / (k * k)},
                                   {r, (k - 1.0) / (2.0 * k)},
                                   {-r, (k - 1.0) / (2.0 * k)}});
          return CatalogEntry{"pg_incidence", {"k"}, p,
                              make_array({p[0], p[0] - 1, p[0] - 1, 1}, {1, 1, p[0] - 1, p[0]}),
                              expected, "incidence graph of pg(k-1, k-1, k-1)"};
        }};

    r["golay_binary_coset"] = {
        {}, "coset graph of the doubly truncated binary Golay code", [](const Params&) {
          return fixed("golay_binary_coset", make_array({21, 20, 16}, {1, 2, 12}),
                       printed({{-11, 21.0 / 512}, {-3, 35.0 / 64}, {5, 105.0 / 256},
                                {21, 1.0 / 512}}),
                       "coset graph of the doubly truncated binary Golay code");
        }};

    r["golay_ternary_coset"] = {
        {}, "coset graph of the extended ternary Golay code", [](const Params&) {
          return fixed("golay_ternary_coset", make_array({24, 22, 20}, {1, 2, 12}),
                       printed({{-12, 8.0 / 243}, {-3, 440.0 / 729}, {6, 88.0 / 243},
                                {24, 1.0 / 729}}),
                       "coset graph of the extended ternary Golay code");
        }};

    r["wells"] = {{}, "Wells graph", [](const Params&) {
                    const double r5 = std::sqrt(5.0);
                    return fixed("wells", make_array({5, 4, 1, 1}, {1, 1, 4, 5}),
                                 printed({{-3, 1.0 / 16}, {-r5, 0.25}, {r5, 0.25}, {1, 0.25},
                                          {5, 3.0 / 16}}),
                                 "Wells graph");
                  }};

    r["gq22_triple_cover"] = {{}, "3-cover of GQ(2, 2)", [](const Params&) {
                                return fixed("gq22_triple_cover",
                                             make_array({6, 4, 2, 1}, {1, 1, 4, 6}),
                                             printed({{-3, 1.0 / 9},
                                                      {-2, 2.0 / 5},
                                                      {3, 4.0 / 15},
                                                      {1, 1.0 / 5},
                                                      {6, 1.0 / 45}}),
                                             "3-cover of GQ(2, 2)");
                              }};

    r["double_hoffman_singleton"] = {
        {}, "bipartite double of the Hoffman-Singleton graph", [](const Params&) {
          return fixed("double_hoffman_singleton", make_array({7, 6, 6, 1, 1}, {1, 1, 6, 6, 7}),
                       printed({{-2, 7.0 / 25}, {2, 7.0 / 25}, {-3, 21.0 / 100}, {3, 21.0 / 100},
                                {-7, 1.0 / 100}, {7, 1.0 / 100}}),
                       "bipartite double of the Hoffman-Singleton graph");
        }};

    r["foster"] = {{}, "Foster graph", [](const Params&) {
                     const double r6 = std::sqrt(6.0);
                     return fixed("foster",
                                  make_array({3, 2, 2, 2, 2, 1, 1, 1}, {1, 1, 1, 1, 2, 2, 2, 3}),
                                  printed({{0, 1.0 / 9}, {-1, 1.0 / 5}, {1, 1.0 / 5},
                                           {-2, 1.0 / 10}, {2, 1.0 / 10}, {-3, 1.0 / 90},
                                           {3, 1.0 / 90}, {-r6, 2.0 / 15}, {r6, 2.0 / 15}}),
                                  "Foster graph");
                   }};
    return r;
  }();
  return table;
}

}  // namespace

std::vector<CatalogInfo> catalog_names() {
  std::vector<CatalogInfo> out;
  for (const auto& [name, reg] : registry()) {
    out.push_back(CatalogInfo{name, reg.paramNames, reg.description});
  }
  return out;
}

CatalogEntry catalog(const std::string& name, const std::vector<std::int64_t>& params) {
  const auto& table = registry();
  const auto it = table.find(name);
  if (it == table.end()) fail(ErrorCode::UnknownCatalogName, "no catalog entry named '" + name + "'");
  if (params.size() != it->second.paramNames.size()) {
    fail(ErrorCode::BadParams, name + " expects " + std::to_string(it->second.paramNames.size()) +
                                   " parameter(s), got " + std::to_string(params.size()));
  }
  auto entry = it->second.build(params);
  require_valid(entry.array);
  return entry;
}

}  // namespace schemewalk

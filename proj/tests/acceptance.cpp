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

// Acceptance suite. Prints one line per criterion:
//   criterion <N> <PASS|FAIL> <title>: <measurements>
// and exits non-zero if any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "schemewalk/errors.hpp"
#include "schemewalk/oracle.hpp"
#include "schemewalk/walk.hpp"
#include "support/rational.hpp"
#include "support/reference.hpp"

using namespace schemewalk;
using testing::cd;
using testing::I;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok) { pass = pass && ok; }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

AmplitudeSeries run(const SchemeSpec& spec, Engine engine, const std::vector<double>& times) {
  return dispatch(WalkRequest{spec, times, engine, false});
}

SchemeSpec cat(std::string name, std::vector<std::int64_t> params = {}) {
  return FromCatalog{std::move(name), std::move(params)};
}

double max_dev(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
  return testing::max_abs(a - b);
}

Eigen::MatrixXcd oracle_strata(const SchemeSpec& spec, const std::vector<double>& times) {
  const auto g = oracle::build_graph(spec);
  return oracle::stratum_amplitudes(oracle::exact_walk(g, times), oracle::spec_partition(spec, g));
}

// Collapses class-block amplitudes of a Cayley graph onto distance strata:
// amp_dist = (1/sqrt a) sum_K sqrt(a_K) amp_K.
Eigen::MatrixXcd to_distance_strata(const SchemeSpec& spec, const AmplitudeSeries& series) {
  const auto g = oracle::build_graph(spec);
  const auto classes = oracle::spec_partition(spec, g);
  const auto distance = oracle::bfs_strata(g);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(series.amplitudes.rows(), distance.diameter() + 1);
  for (std::size_t b = 0; b < classes.strata.size(); ++b) {
    const int k = distance.distances[static_cast<std::size_t>(classes.strata[b].front())];
    out.col(k) += std::sqrt(static_cast<double>(classes.strata[b].size())) * series.amplitudes.col(static_cast<Eigen::Index>(b));
  }
  for (int k = 0; k <= distance.diameter(); ++k) {
    out.col(k) /= std::sqrt(static_cast<double>(distance.strata[static_cast<std::size_t>(k)].size()));
  }
  return out;
}

// 1. Petersen amplitudes against the printed closed forms.
void criterion_1(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto times = testing::standard_grid();
  const auto series = run(cat("petersen"), Engine::Spectral, times);
  double dev[3] = {0, 0, 0};
  for (std::size_t r = 0; r < times.size(); ++r) {
    const double t = times[r];
    const cd e1 = std::exp(-I * t), e2 = std::exp(2.0 * I * t), e3 = std::exp(-3.0 * I * t);
    const cd printed[3] = {0.5 * e1 + 0.4 * e2 + 0.1 * e3,
                           (0.5 * e1 - 0.8 * e2 + 0.3 * e3) / std::sqrt(3.0),
                           (-e1 + 0.4 * e2 + 0.4 * e3) / std::sqrt(6.0)};
    for (int k = 0; k < 3; ++k) dev[k] = std::max(dev[k], std::abs(series.amplitudes(static_cast<Eigen::Index>(r), k) - printed[k]));
  }
  const double oracle = max_dev(series.amplitudes, oracle_strata(cat("petersen"), times));
  const double elapsed = seconds_since(start);
  for (double d : dev) o.require(d < 1e-10);
  o.require(oracle < 1e-8);
  o.require(elapsed < 1.0);
  o.detail << "printed phi0 dev " << sci(dev[0]) << ", phi1 dev " << sci(dev[1]) << ", phi2 dev " << sci(dev[2])
           << " (tol 1e-10); oracle dev " << sci(oracle) << " (tol 1e-8); " << sci(elapsed) << " s";
}

// 2. Tabulated distance-regular distributions.
void criterion_2(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  struct Item {
    std::string name;
    std::vector<std::int64_t> params;
    bool reportOnly;
  };
  const std::vector<Item> items{{"generalized_octagon", {2, 2}, true},
                                {"generalized_dodecagon", {2}, true},
                                {"m22", {}, false},
                                {"pg_incidence", {4}, false},
                                {"pg_incidence", {5}, false},
                                {"pg_incidence", {7}, false},
                                {"pg_incidence", {8}, false},
                                {"golay_binary_coset", {}, false},
                                {"golay_ternary_coset", {}, false},
                                {"wells", {}, false},
                                {"gq22_triple_cover", {}, false},
                                {"double_hoffman_singleton", {}, false},
                                {"foster", {}, false}};
  std::vector<std::string> mismatched;
  std::vector<std::string> reported;
  for (const auto& item : items) {
    const auto entry = catalog(item.name, item.params);
    const auto jc = jacobi_from_intersection(entry.array);
    const auto truth = golub_welsch(jc);
    // Ground-truth sanity: weights positive and normalized.
    double total = 0.0;
    for (double w : truth.weights) {
      o.require(w > 0.0);
      total += w;
    }
    o.require(std::abs(total - 1.0) < 1e-12);
    const auto& printed = *entry.expected;
    double dev = printed.size() == truth.size() ? 0.0 : INFINITY;
    for (std::size_t l = 0; std::isfinite(dev) && l < truth.size(); ++l) {
      dev = std::max({dev, std::abs(printed.atoms[l] - truth.atoms[l]), std::abs(printed.weights[l] - truth.weights[l])});
    }
    if (dev >= 1e-9) {
      std::string label = item.name;
      for (auto v : item.params) label += " " + std::to_string(v);
      (item.reportOnly ? reported : mismatched).push_back(label + " (" + sci(dev) + ")");
    }
  }
  const double elapsed = seconds_since(start);
  o.require(mismatched.empty());
  o.require(elapsed < 1.0);
  o.detail << items.size() - mismatched.size() - reported.size() << "/" << items.size() << " printed forms match at 1e-9";
  if (!mismatched.empty()) {
    o.detail << "; mismatched:";
    for (const auto& m : mismatched) o.detail << " " << m;
  }
  if (!reported.empty()) {
    o.detail << "; general-parameter formulas differing from quadrature (reported):";
    for (const auto& m : reported) o.detail << " " << m;
  }
  o.detail << "; " << sci(elapsed) << " s";
}

// 3. Group engine closed forms.
void criterion_3(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto times = testing::standard_grid();
  o.detail << "S_n n-cycle dev";
  for (int n = 3; n <= 5; ++n) {
    const SchemeSpec spec{FromGroup{{GroupFamily::Symmetric, n}}};
    const auto series = run(spec, Engine::Character, times);
    double factorial = 1.0;
    for (int j = 2; j <= n; ++j) factorial *= j;
    double dev = 0.0;
    for (std::size_t r = 0; r < times.size(); ++r) {
      const cd printed = std::pow(2.0 * I * std::sin(n * times[r] / 2), n - 1) / std::sqrt(n * factorial);
      dev = std::max(dev, std::abs(series.amplitudes(static_cast<Eigen::Index>(r), series.strata() - 1) - printed));
    }
    const double oracle = max_dev(series.amplitudes, oracle_strata(spec, times));
    o.require(dev < 1e-9);
    o.require(oracle < 1e-8);
    o.detail << " n=" << n << ":" << sci(dev) << "/oracle " << sci(oracle);
  }
  o.detail << "; D_2m dev";
  for (int m : {3, 5, 7}) {
    const SchemeSpec spec{FromGroup{{GroupFamily::Dihedral, m}}};
    const auto series = run(spec, Engine::Character, times);
    double dev = 0.0;
    for (std::size_t r = 0; r < times.size(); ++r) {
      const double c = std::cos(m * times[r]);
      const double s = std::sin(m * times[r]);
      for (int k = 0; k < series.strata(); ++k) {
        const cd printed = k == 0 ? cd((m - 1 + c) / m) : (k == 1 ? cd(0, -s / std::sqrt(m)) : cd(std::sqrt(2.0) * (c - 1) / m));
        dev = std::max(dev, std::abs(series.amplitudes(static_cast<Eigen::Index>(r), k) - printed));
      }
    }
    const auto avg = dispatch_average(spec, Engine::Character);
    const double dm = m;
    double avgDev = std::abs(avg.stratum[0] - ((dm - 1) * (dm - 1) + 0.5) / (dm * dm));
    avgDev = std::max(avgDev, std::abs(avg.stratum[1] - 1 / (2 * dm)));
    for (std::size_t k = 2; k < avg.stratum.size(); ++k) avgDev = std::max(avgDev, std::abs(avg.stratum[k] - 3 / (dm * dm)));
    const double oracle = max_dev(series.amplitudes, oracle_strata(spec, times));
    o.require(dev < 1e-10);
    o.require(avgDev < 1e-10);
    o.require(oracle < 1e-8);
    o.detail << " m=" << m << ":" << sci(dev) << "/avg " << sci(avgDev) << "/oracle " << sci(oracle);
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 10.0);
  o.detail << "; " << sci(elapsed) << " s";
}

// 4. Long-time averages.
void criterion_4(Outcome& o) {
  double kn = 0.0;
  for (int n = 2; n <= 10; ++n) {
    const auto avg = dispatch_average(cat("complete", {n}), Engine::Eigen);
    const double dn = n;
    kn = std::max(kn, std::abs(avg.vertex[0] - (1 - 2 * (dn - 1) / (dn * dn))));
    kn = std::max(kn, std::abs(avg.vertex[1] - 2 / (dn * dn)));
  }
  o.require(kn < 1e-12);
  o.detail << "K_2..K_10 closed-form dev " << sci(kn) << " (tol 1e-12)";
  for (const auto& spec : {cat("petersen"), cat("complete", {5})}) {
    const auto eigenAvg = dispatch_average(spec, Engine::Eigen);
    const auto spectralAvg = dispatch_average(spec, Engine::Spectral);
    const double step = 0.05;
    const int samples = static_cast<int>(std::lround(2000.0 / step)) + 1;
    std::vector<double> times(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) times[static_cast<std::size_t>(i)] = i * step;
    const auto series = run(spec, Engine::Spectral, times);
    double dev = 0.0;
    for (int k = 0; k < series.strata(); ++k) {
      double integral = 0.0;
      for (int i = 0; i + 1 < samples; ++i) {
        integral += 0.5 * step * (std::norm(series.amplitudes(i, k)) + std::norm(series.amplitudes(i + 1, k)));
      }
      const double numeric = integral / 2000.0;
      dev = std::max({dev, std::abs(numeric - eigenAvg.stratum[static_cast<std::size_t>(k)]),
                      std::abs(numeric - spectralAvg.stratum[static_cast<std::size_t>(k)]),
                      std::abs(eigenAvg.stratum[static_cast<std::size_t>(k)] - spectralAvg.stratum[static_cast<std::size_t>(k)])});
    }
    o.require(dev < 5e-3);
    o.detail << "; " << describe(spec) << " three-way dev " << sci(dev) << " (tol 5e-3)";
  }
}

// 5. Engine agreement.
void criterion_5(Outcome& o) {
  const auto times = testing::standard_grid();
  double worst = 0.0;
  int pairs = 0;
  std::vector<std::string> noCharacter;
  std::vector<SchemeSpec> specs{cat("cycle", {5}), cat("cycle", {7}), cat("cycle", {9}), cat("petersen"),
                                cat("hamming", {2, 3}), cat("hamming", {3, 2})};
  for (int n = 3; n <= 8; ++n) specs.push_back(cat("complete", {n}));
  for (const auto& spec : specs) {
    const auto e = run(spec, Engine::Eigen, times).amplitudes;
    const auto s = run(spec, Engine::Spectral, times).amplitudes;
    worst = std::max(worst, max_dev(e, s));
    ++pairs;
    if (group_realization(spec)) {
      const auto c = run(spec, Engine::Character, times).amplitudes;
      worst = std::max({worst, max_dev(e, c), max_dev(s, c)});
      pairs += 2;
    } else {
      noCharacter.push_back(describe(spec));
    }
  }
  // D_6 and D_10: class-block engines against the spectral route on the
  // distance strata of the same Cayley graph, srg(2m, m, 0, m).
  for (int m : {3, 5}) {
    const SchemeSpec group{FromGroup{{GroupFamily::Dihedral, m}}};
    const auto character = run(group, Engine::Character, times);
    const auto eigen = run(group, Engine::Eigen, times);
    const auto spectral = run(FromSrg{{2 * m, m, 0, m}}, Engine::Spectral, times).amplitudes;
    worst = std::max({worst, max_dev(character.amplitudes, eigen.amplitudes),
                      max_dev(to_distance_strata(group, character), spectral),
                      max_dev(to_distance_strata(group, eigen), spectral)});
    pairs += 3;
  }
  o.require(worst < 1e-10);
  o.detail << pairs << " engine pairs, max dev " << sci(worst) << " (tol 1e-10)";
  if (!noCharacter.empty()) {
    o.detail << "; no group realization (character engine n/a):";
    for (const auto& n : noCharacter) o.detail << " " << n;
  }
}

// 6. Unitarity and within-stratum uniformity.
void criterion_6(Outcome& o) {
  const auto times = testing::standard_grid();
  double unitarity = 0.0;
  int graphs = 0;
  std::vector<SchemeSpec> specs{cat("petersen"), cat("cycle", {5}), cat("cycle", {7}), cat("cycle", {9}), cat("cycle", {10}),
                                cat("hamming", {2, 3}), cat("hamming", {3, 2}), cat("johnson", {5, 2}), cat("johnson", {7, 3}),
                                FromSrg{{16, 5, 0, 2}}, Product{4, 3}};
  for (int n = 3; n <= 8; ++n) specs.push_back(cat("complete", {n}));
  for (int n = 3; n <= 5; ++n) specs.push_back(FromGroup{{GroupFamily::Symmetric, n}});
  for (int m = 3; m <= 8; ++m) specs.push_back(FromGroup{{GroupFamily::Dihedral, m}});
  for (int n : {5, 8, 12}) specs.push_back(FromGroup{{GroupFamily::Cyclic, n}});
  for (const auto& info : catalog_names()) {
    if (info.paramNames.empty()) specs.push_back(cat(info.name));
  }
  specs.push_back(cat("generalized_octagon", {2, 2}));
  specs.push_back(cat("generalized_dodecagon", {2}));
  specs.push_back(cat("pg_incidence", {4}));
  double spread = 0.0;
  int built = 0;
  for (const auto& spec : specs) {
    unitarity = std::max(unitarity, run(spec, Engine::Auto, times).unitarity_defect());
    ++graphs;
    try {
      const auto g = oracle::build_graph(spec);
      const auto walk = oracle::exact_walk(g, times);
      unitarity = std::max(unitarity, walk.unitarityDefect);
      spread = std::max(spread, oracle::stratum_spread(walk, oracle::spec_partition(spec, g)));
      ++built;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoConstruction) throw;
    }
  }
  o.require(unitarity < 1e-9);
  o.require(spread < 1e-9);
  o.detail << graphs << " graphs: unitarity defect " << sci(unitarity) << " (tol 1e-9); " << built
           << " oracle-built graphs: stratum spread " << sci(spread) << " (tol 1e-9)";
}

// 7. Quantum decomposition.
void criterion_7(Outcome& o) {
  double worst = 0.0;
  bool exact = true;
  for (const auto& g : {oracle::petersen_graph(), oracle::cycle_graph(7), oracle::johnson_graph(5, 2), oracle::hamming_graph(2, 3)}) {
    const auto part = oracle::bfs_strata(g);
    const auto q = oracle::quantum_decomposition(g, part);
    const auto report = oracle::check_ladder(g, part, q, jacobi_from_intersection(oracle::derive_intersection_array(g, part)));
    exact = exact && report.exact();
    worst = std::max(worst, report.worst());
  }
  o.require(exact);
  o.require(worst < 1e-10);
  o.detail << "integer identities " << (exact ? "exact" : "violated") << "; ladder dev " << sci(worst) << " (tol 1e-10)";
}

// 8. Hamming factorization and binomial weights.
void criterion_8(Outcome& o) {
  const auto times = testing::standard_grid();
  double dev = 0.0;
  bool weightsExact = true;
  for (int n = 2; n <= 5; ++n) {
    for (int d = 1; d <= 4; ++d) {
      const auto h = hamming_walk(n, d, times);
      for (std::size_t r = 0; r < times.size(); ++r) {
        const cd product = std::pow(complete_graph_origin_amplitude(n, times[r]), d);
        dev = std::max(dev, std::abs(h.series.amplitudes(static_cast<Eigen::Index>(r), 0) - product));
      }
      testing::Rational total(0);
      const auto nd = testing::power(testing::Rational(n), d);
      for (int l = 0; l <= d; ++l) {
        const auto w = testing::binomial(d, l) * testing::power(testing::Rational(n - 1), d - l) / nd;
        total = total + w;
        const auto count = w * nd;  // eigenvalue multiplicity, an integer
        const double got = h.distribution.weights[static_cast<std::size_t>(l)];
        weightsExact = weightsExact && count.is_integer() &&
                       std::llround(got * nd.to_double()) == static_cast<long long>(count.num()) &&
                       std::abs(got - w.to_double()) <= 2 * std::numeric_limits<double>::epsilon() &&
                       h.distribution.atoms[static_cast<std::size_t>(l)] == double(n * l - d);
      }
      weightsExact = weightsExact && total == testing::Rational(1);
    }
  }
  o.require(dev < 1e-12);
  o.require(weightsExact);
  o.detail << "origin factorization dev " << sci(dev) << " (tol 1e-12); binomial weights "
           << (weightsExact ? "exact" : "mismatched");
}

// 9. Johnson-graph limits.
void criterion_9(Outcome& o) {
  const auto times = testing::grid(0.0, 20.0, 201);
  std::vector<double> total(times.size(), 0.0);
  for (int k = 0; k <= 200; ++k) {
    const auto a = johnson_limit_amplitudes(1.0, k, times);
    for (std::size_t r = 0; r < times.size(); ++r) total[r] += std::norm(a[r]);
  }
  double dev = 0.0;
  double worstT = 0.0;
  double lastGood = 0.0;
  for (std::size_t r = 0; r < times.size(); ++r) {
    const double d = std::abs(total[r] - 1.0);
    if (d > dev) {
      dev = d;
      worstT = times[r];
    }
    if (d < 1e-9 && lastGood == times[r] - (r ? times[r] - times[r - 1] : 0.0)) lastGood = times[r];
  }
  o.require(dev < 1e-9);
  o.detail << "p=1 truncated norm dev " << sci(dev) << " at t=" << worstT << " (tol 1e-9, holds for t <= "
           << lastGood << ")";
  // Meixner origin amplitude against a direct 128-term sum.
  const double p = 0.5;
  const auto amp = johnson_limit_amplitudes(p, 0, times);
  double meixner = 0.0;
  for (std::size_t r = 0; r < times.size(); ++r) {
    cd sum = 0.0;
    for (int k = 0; k < 128; ++k) {
      const double x = (-p + 2 * (1 - p) * k) / std::sqrt(p * (2 - p));
      const double w = 2 * (1 - p) / (2 - p) * std::pow(p / (2 - p), k);
      sum += w * std::exp(-I * x * times[r]);
    }
    meixner = std::max(meixner, std::abs(amp[r] - sum));
  }
  o.require(meixner < 1e-10);
  o.detail << "; Meixner p=1/2 origin dev " << sci(meixner) << " (tol 1e-10)";
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Outcome&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "Petersen amplitudes", criterion_1},   {2, "spectral catalog", criterion_2},
      {3, "group engine", criterion_3},          {4, "average probabilities", criterion_4},
      {5, "engine agreement", criterion_5},      {6, "unitarity and uniformity", criterion_6},
      {7, "quantum decomposition", criterion_7}, {8, "Hamming factorization", criterion_8},
      {9, "Johnson limit", criterion_9}};
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--list") == 0) {
      for (const auto& c : criteria()) std::cout << c.id << " " << c.title << "\n";
      return 0;
    } else {
      std::cerr << "usage: schemewalk_acceptance [--criterion N] [--list]\n";
      return 2;
    }
  }
  int failures = 0;
  int selected = 0;
  for (const auto& c : criteria()) {
    if (only && c.id != only) continue;
    ++selected;
    Outcome outcome;
    try {
      c.run(outcome);
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail << "exception: " << e.what();
    }
    failures += !outcome.pass;
    std::cout << "criterion " << c.id << " " << (outcome.pass ? "PASS" : "FAIL") << " " << c.title << ": "
              << outcome.detail.str() << std::endl;
  }
  if (!selected) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return failures ? 1 : 0;
}

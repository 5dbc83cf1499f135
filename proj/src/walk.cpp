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

#include "schemewalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "schemewalk/errors.hpp"

namespace schemewalk {
namespace {

using cd = std::complex<double>;

constexpr double kMergeTolerance = 1e-9;

cd phase(double eigenvalue, double t) { return std::polar(1.0, -eigenvalue * t); }

void check_times(std::span<const double> times) {
  for (double t : times) {
    if (!std::isfinite(t) || t < 0.0) {
      fail(ErrorCode::InconsistentInputs, "times must be finite and nonnegative");
    }
  }
}

/// Indices grouped by value (within kMergeTolerance of the group's first
/// member), groups in ascending value order.
std::vector<std::vector<int>> group_by_value(const std::vector<double>& values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)];
  });
  std::vector<std::vector<int>> groups;
  for (int idx : order) {
    if (!groups.empty() && std::abs(values[static_cast<std::size_t>(idx)] -
                                    values[static_cast<std::size_t>(groups.back().front())]) <=
                               kMergeTolerance) {
      groups.back().push_back(idx);
    } else {
      groups.push_back({idx});
    }
  }
  return groups;
}

std::vector<double> block_eigenvalues(const CharacterTable& table, const std::vector<int>& block) {
  std::vector<double> lambda;
  for (Eigen::Index i = 0; i < table.values.rows(); ++i) {
    cd s = 0.0;
    for (int c : block) {
      s += static_cast<double>(table.classSizes[static_cast<std::size_t>(c)]) * table.values(i, c);
    }
    s /= static_cast<double>(table.irrepDims[static_cast<std::size_t>(i)]);
    if (std::abs(s.imag()) > kMergeTolerance) {
      fail(ErrorCode::NonRealGeneratingClass,
           "generating set is not closed under inversion; merge it with its inverse class");
    }
    lambda.push_back(s.real());
  }
  return lambda;
}

ValencyVector block_sizes(const CharacterTable& table, const ClassBlocks& blocks) {
  ValencyVector v;
  v.order = table.order();
  for (const auto& block : blocks) {
    std::int64_t size = 0;
    for (int c : block) size += table.classSizes[static_cast<std::size_t>(c)];
    v.sizes.push_back(size);
  }
  return v;
}

void check_block_partition(const CharacterTable& table, const ClassBlocks& blocks, int generating) {
  std::vector<int> seen(static_cast<std::size_t>(table.class_count()), 0);
  for (const auto& block : blocks) {
    for (int c : block) {
      if (c < 0 || c >= table.class_count() || seen[static_cast<std::size_t>(c)]++) {
        fail(ErrorCode::InconsistentInputs, "blocks must partition the classes");
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    fail(ErrorCode::InconsistentInputs, "blocks must partition the classes");
  }
  if (blocks.empty() || blocks.front() != std::vector<int>{0}) {
    fail(ErrorCode::InconsistentInputs, "block 0 must be the identity class");
  }
  if (generating < 1 || generating >= static_cast<int>(blocks.size())) {
    fail(ErrorCode::InconsistentInputs, "generating block index out of range");
  }
}

/// Per-class weights (1/sqrt(a_K)) kappa_c / |G| used to project vertex
/// amplitudes onto the stratum vectors.
std::vector<std::vector<std::pair<int, double>>> projection_weights(const CharacterTable& table,
                                                                    const ClassBlocks& blocks) {
  const auto sizes = block_sizes(table, blocks);
  const auto g = static_cast<double>(table.order());
  std::vector<std::vector<std::pair<int, double>>> out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const double norm = 1.0 / std::sqrt(static_cast<double>(sizes.sizes[b]));
    std::vector<std::pair<int, double>> entries;
    for (int c : blocks[b]) {
      entries.emplace_back(c, norm * static_cast<double>(table.classSizes[static_cast<std::size_t>(c)]) / g);
    }
    out.push_back(std::move(entries));
  }
  return out;
}

}  // namespace

AmplitudeSeries AmplitudeSeries::to_vertex_level() const {
  if (normalization == Normalization::Vertex) return *this;
  AmplitudeSeries out = *this;
  out.normalization = Normalization::Vertex;
  for (Eigen::Index k = 0; k < amplitudes.cols(); ++k) {
    out.amplitudes.col(k) /= std::sqrt(static_cast<double>(strataSizes.sizes[static_cast<std::size_t>(k)]));
  }
  return out;
}

double AmplitudeSeries::unitarity_defect() const {
  double worst = 0.0;
  for (Eigen::Index r = 0; r < amplitudes.rows(); ++r) {
    double total = 0.0;
    for (Eigen::Index k = 0; k < amplitudes.cols(); ++k) {
      const double weight = normalization == Normalization::Vertex
                                ? static_cast<double>(strataSizes.sizes[static_cast<std::size_t>(k)])
                                : 1.0;
      total += weight * std::norm(amplitudes(r, k));
    }
    worst = std::max(worst, std::abs(total - 1.0));
  }
  return worst;
}

AmplitudeSeries amplitudes_spectral(const SpectralDistribution& dist, const JacobiCoefficients& jc,
                                    const IntersectionArray& array, std::span<const double> times) {
  check_times(times);
  const int d = array.diameter;
  if (jc.diameter() != d) {
    fail(ErrorCode::InconsistentInputs, "Jacobi coefficients and array differ in diameter");
  }
  if (const auto* discrete = std::get_if<DiscreteDistribution>(&dist);
      discrete && discrete->size() != static_cast<std::size_t>(d) + 1) {
    fail(ErrorCode::InconsistentInputs, "distribution needs d + 1 atoms");
  }
  const auto sizes = derive_stratum_sizes(array);
  const auto view = quadrature_view(dist);

  // basis(l, k) = B_l P_k(x_l) / sqrt(a_k)
  Eigen::MatrixXd basis(static_cast<Eigen::Index>(view.size()), d + 1);
  for (std::size_t l = 0; l < view.size(); ++l) {
    const auto q = evaluate_polynomials(jc, view.atoms[l], d);
    double bProduct = 1.0;
    for (int k = 0; k <= d; ++k) {
      if (k > 0) bProduct *= static_cast<double>(array.b(k));
      const double ak = static_cast<double>(sizes.sizes[static_cast<std::size_t>(k)]);
      basis(static_cast<Eigen::Index>(l), k) =
          view.weights[l] * (q[static_cast<std::size_t>(k)] / bProduct) / std::sqrt(ak);
    }
  }

  AmplitudeSeries out;
  out.times.assign(times.begin(), times.end());
  out.strataSizes = sizes;
  out.amplitudes = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(times.size()), d + 1);
  for (std::size_t r = 0; r < times.size(); ++r) {
    for (std::size_t l = 0; l < view.size(); ++l) {
      const cd e = phase(view.atoms[l], times[r]);
      for (int k = 0; k <= d; ++k) {
        out.amplitudes(static_cast<Eigen::Index>(r), k) += e * basis(static_cast<Eigen::Index>(l), k);
      }
    }
  }
  return out;
}

Eigen::MatrixXcd amplitudes_orthonormal(const SpectralDistribution& dist,
                                        const JacobiCoefficients& jc, int strata,
                                        std::span<const double> times) {
  check_times(times);
  if (strata < 0 || strata > jc.diameter()) {
    fail(ErrorCode::InconsistentInputs, "not enough Jacobi coefficients for the strata requested");
  }
  const auto view = quadrature_view(dist);
  std::vector<double> norms(static_cast<std::size_t>(strata) + 1, 1.0);
  for (int k = 1; k <= strata; ++k) {
    norms[static_cast<std::size_t>(k)] =
        norms[static_cast<std::size_t>(k - 1)] * std::sqrt(jc.omega[static_cast<std::size_t>(k - 1)]);
  }
  Eigen::MatrixXd basis(static_cast<Eigen::Index>(view.size()), strata + 1);
  for (std::size_t l = 0; l < view.size(); ++l) {
    const auto q = evaluate_polynomials(jc, view.atoms[l], strata);
    for (int k = 0; k <= strata; ++k) {
      basis(static_cast<Eigen::Index>(l), k) =
          view.weights[l] * q[static_cast<std::size_t>(k)] / norms[static_cast<std::size_t>(k)];
    }
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(times.size()), strata + 1);
  for (std::size_t r = 0; r < times.size(); ++r) {
    for (std::size_t l = 0; l < view.size(); ++l) {
      const cd e = phase(view.atoms[l], times[r]);
      for (int k = 0; k <= strata; ++k) {
        out(static_cast<Eigen::Index>(r), k) += e * basis(static_cast<Eigen::Index>(l), k);
      }
    }
  }
  return out;
}

AmplitudeSeries amplitudes_eigen(const SchemeEigenstructure& es, std::span<const double> times,
                                 int generatingRelation) {
  check_times(times);
  const int classes = es.classes();
  if (generatingRelation < 1 || generatingRelation >= classes) {
    fail(ErrorCode::InconsistentInputs, "generating relation out of range");
  }
  const auto n = static_cast<double>(es.valencies.order);
  AmplitudeSeries out;
  out.times.assign(times.begin(), times.end());
  out.strataSizes = es.valencies;
  out.amplitudes = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(times.size()), classes);
  for (std::size_t r = 0; r < times.size(); ++r) {
    for (int i = 0; i < classes; ++i) {
      const cd e = phase(es.P(i, generatingRelation), times[r]);
      for (int k = 0; k < classes; ++k) {
        out.amplitudes(static_cast<Eigen::Index>(r), k) += e * es.Q(k, i);
      }
    }
  }
  for (int k = 0; k < classes; ++k) {
    out.amplitudes.col(k) *= std::sqrt(static_cast<double>(es.valencies.sizes[static_cast<std::size_t>(k)])) / n;
  }
  return out;
}

AmplitudeSeries amplitudes_group(const CharacterTable& table, const ClassBlocks& blocks,
                                 int generatingBlock, std::span<const double> times) {
  check_times(times);
  check_block_partition(table, blocks, generatingBlock);
  const auto lambda = block_eigenvalues(table, blocks[static_cast<std::size_t>(generatingBlock)]);
  const auto weights = projection_weights(table, blocks);
  const auto irreps = table.values.rows();
  const auto classes = table.values.cols();

  // conjChi(i, c) = d_i conj(chi_i(c)), so the vertex amplitude is
  // (1/|G|) sum_i e^{-i lambda_i t} conjChi(i, c).
  Eigen::MatrixXcd conjChi(irreps, classes);
  for (Eigen::Index i = 0; i < irreps; ++i) {
    const auto di = static_cast<double>(table.irrepDims[static_cast<std::size_t>(i)]);
    for (Eigen::Index c = 0; c < classes; ++c) conjChi(i, c) = di * std::conj(table.values(i, c));
  }

  AmplitudeSeries out;
  out.times.assign(times.begin(), times.end());
  out.strataSizes = block_sizes(table, blocks);
  const auto blockCount = static_cast<Eigen::Index>(blocks.size());
  out.amplitudes = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(times.size()), blockCount);
  Eigen::VectorXcd phases(irreps);
  for (std::size_t r = 0; r < times.size(); ++r) {
    for (Eigen::Index i = 0; i < irreps; ++i) phases[i] = phase(lambda[static_cast<std::size_t>(i)], times[r]);
    for (Eigen::Index b = 0; b < blockCount; ++b) {
      cd total = 0.0;
      for (const auto& [c, w] : weights[static_cast<std::size_t>(b)]) {
        cd vertex = 0.0;
        for (Eigen::Index i = 0; i < irreps; ++i) vertex += phases[i] * conjChi(i, c);
        total += w * vertex;
      }
      out.amplitudes(static_cast<Eigen::Index>(r), b) = total;
    }
  }
  return out;
}

AmplitudeSeries amplitudes_group(const CharacterTable& table, int generatingClass,
                                 std::span<const double> times) {
  if (generatingClass < 1 || generatingClass >= table.class_count()) {
    fail(ErrorCode::InconsistentInputs, "generating class out of range");
  }
  if (!table.class_is_real(generatingClass)) {
    fail(ErrorCode::NonRealGeneratingClass,
         "class " + table.classLabels[static_cast<std::size_t>(generatingClass)] +
             " is not closed under inversion");
  }
  ClassBlocks singletons;
  for (int k = 0; k < table.class_count(); ++k) singletons.push_back({k});
  return amplitudes_group(table, singletons, generatingClass, times);
}

AverageProbabilities average_probabilities(const SchemeEigenstructure& es, int generatingRelation) {
  const int classes = es.classes();
  if (generatingRelation < 1 || generatingRelation >= classes) {
    fail(ErrorCode::InconsistentInputs, "generating relation out of range");
  }
  std::vector<double> eigenvalues;
  for (int i = 0; i < classes; ++i) eigenvalues.push_back(es.P(i, generatingRelation));
  const auto groups = group_by_value(eigenvalues);
  const auto n = static_cast<double>(es.valencies.order);
  AverageProbabilities out;
  for (int k = 0; k < classes; ++k) {
    const auto ak = static_cast<double>(es.valencies.sizes[static_cast<std::size_t>(k)]);
    double total = 0.0;
    for (const auto& group : groups) {
      double s = 0.0;
      for (int i : group) s += es.Q(k, i);
      total += (ak / (n * n)) * s * s;
    }
    out.stratum.push_back(total);
    out.vertex.push_back(total / ak);
  }
  return out;
}

AverageProbabilities average_probabilities(const DiscreteDistribution& dist,
                                           const JacobiCoefficients& jc,
                                           const IntersectionArray& array) {
  const int d = array.diameter;
  if (jc.diameter() != d) {
    fail(ErrorCode::InconsistentInputs, "Jacobi coefficients and array differ in diameter");
  }
  const auto groups = group_by_value(dist.atoms);
  if (groups.size() != static_cast<std::size_t>(d) + 1) {
    fail(ErrorCode::DegenerateSpectrumUnmerged,
         std::to_string(groups.size()) + " distinct atoms after merging, expected " +
             std::to_string(d + 1));
  }
  const auto sizes = derive_stratum_sizes(array);
  AverageProbabilities out;
  out.stratum.assign(static_cast<std::size_t>(d) + 1, 0.0);
  for (const auto& group : groups) {
    double weight = 0.0;
    for (int l : group) weight += dist.weights[static_cast<std::size_t>(l)];
    const auto q = evaluate_polynomials(jc, dist.atoms[static_cast<std::size_t>(group.front())], d);
    double bProduct = 1.0;
    for (int k = 0; k <= d; ++k) {
      if (k > 0) bProduct *= static_cast<double>(array.b(k));
      const double pk = q[static_cast<std::size_t>(k)] / bProduct;
      out.stratum[static_cast<std::size_t>(k)] += weight * weight * pk * pk;
    }
  }
  for (int k = 0; k <= d; ++k) {
    const auto ak = static_cast<double>(sizes.sizes[static_cast<std::size_t>(k)]);
    out.stratum[static_cast<std::size_t>(k)] /= ak;
    out.vertex.push_back(out.stratum[static_cast<std::size_t>(k)] / ak);
  }
  return out;
}

AverageProbabilities average_probabilities(const CharacterTable& table, const ClassBlocks& blocks,
                                           int generatingBlock) {
  check_block_partition(table, blocks, generatingBlock);
  const auto lambda = block_eigenvalues(table, blocks[static_cast<std::size_t>(generatingBlock)]);
  const auto groups = group_by_value(lambda);
  const auto weights = projection_weights(table, blocks);
  const auto sizes = block_sizes(table, blocks);
  AverageProbabilities out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    double total = 0.0;
    for (const auto& group : groups) {
      cd s = 0.0;
      for (const auto& [c, w] : weights[b]) {
        for (int i : group) {
          s += w * static_cast<double>(table.irrepDims[static_cast<std::size_t>(i)]) *
               std::conj(table.values(i, c));
        }
      }
      total += std::norm(s);
    }
    out.stratum.push_back(total);
    out.vertex.push_back(total / static_cast<double>(sizes.sizes[b]));
  }
  return out;
}

std::complex<double> complete_graph_origin_amplitude(int n, double t) {
  const auto nn = static_cast<double>(n);
  return (phase(nn - 1.0, t) + (nn - 1.0) * phase(-1.0, t)) / nn;
}

HammingWalk hamming_walk(int n, int d, std::span<const double> times) {
  if (n < 2 || d < 1) fail(ErrorCode::BadParams, "hamming walk needs n >= 2 and d >= 1");
  check_times(times);
  HammingWalk out;
  out.distribution = hamming_distribution(n, d);
  auto& series = out.series;
  series.times.assign(times.begin(), times.end());
  series.strataSizes = derive_stratum_sizes(hamming_array(n, d));
  series.amplitudes.resize(static_cast<Eigen::Index>(times.size()), d + 1);
  const auto nn = static_cast<double>(n);
  for (std::size_t r = 0; r < times.size(); ++r) {
    const double t = times[r];
    const cd u = complete_graph_origin_amplitude(n, t);
    const cd v = (phase(nn - 1.0, t) - phase(-1.0, t)) / nn;
    for (int k = 0; k <= d; ++k) {
      const auto ak = static_cast<double>(series.strataSizes.sizes[static_cast<std::size_t>(k)]);
      series.amplitudes(static_cast<Eigen::Index>(r), k) = std::sqrt(ak) * std::pow(u, d - k) * std::pow(v, k);
    }
  }
  return out;
}

std::vector<std::complex<double>> johnson_limit_amplitudes(double p, int k,
                                                           std::span<const double> times,
                                                           double tailTolerance) {
  if (!(p > 0.0 && p <= 1.0)) fail(ErrorCode::BadParameter, "johnson limit needs 0 < p <= 1");
  if (k < 0) fail(ErrorCode::BadParameter, "stratum index must be nonnegative");
  check_times(times);
  std::vector<cd> out;
  out.reserve(times.size());
  if (p == 1.0) {
    for (double t : times) {
      const cd it(0.0, t);
      out.push_back(std::pow(it, k) / std::pow(1.0 + it, k + 1));
    }
    return out;
  }
  const auto dist = meixner_distribution(p, tailTolerance);
  const auto jc = meixner_jacobi(p, std::max(k, 1));
  const auto amps = amplitudes_orthonormal(dist, jc, k, times);
  for (Eigen::Index r = 0; r < amps.rows(); ++r) out.push_back(amps(r, k));
  return out;
}

std::string to_string(Engine engine) {
  switch (engine) {
    case Engine::Eigen: return "eigen";
    case Engine::Character: return "character";
    case Engine::Spectral: return "spectral";
    case Engine::Product: return "product";
    case Engine::Auto: return "auto";
  }
  return "?";
}

Engine parse_engine(const std::string& name) {
  if (name == "eigen") return Engine::Eigen;
  if (name == "character") return Engine::Character;
  if (name == "spectral") return Engine::Spectral;
  if (name == "product") return Engine::Product;
  if (name == "auto") return Engine::Auto;
  fail(ErrorCode::UsageError, "unknown engine '" + name + "'");
}

Engine resolve_engine(const SchemeSpec& spec, Engine engine) {
  if (engine != Engine::Auto) return engine;
  if (std::holds_alternative<FromGroup>(spec)) return Engine::Character;
  if (std::holds_alternative<Product>(spec)) return Engine::Product;
  return Engine::Spectral;
}

namespace {

struct EigenInput {
  SchemeEigenstructure es;
  int generatingRelation = 1;
};

EigenInput eigen_input(const SchemeSpec& spec) {
  if (std::holds_alternative<FromGroup>(spec)) {
    auto realization = *group_realization(spec);
    return {fuse_classes(realization.table, realization.blocks).eigenstructure,
            realization.generatingBlock};
  }
  return {eigenstructure_from_array(intersection_array_of(spec)), 1};
}

GroupRealization require_realization(const SchemeSpec& spec) {
  auto realization = group_realization(spec);
  if (!realization) {
    fail(ErrorCode::EngineSpecMismatch, "no group realization for " + describe(spec));
  }
  return std::move(*realization);
}

DiscreteDistribution distance_distribution(const SchemeSpec& spec, const IntersectionArray& array) {
  if (const auto* srg = std::get_if<FromSrg>(&spec)) return srg_distribution(srg->params);
  return golub_welsch(jacobi_from_intersection(array));
}

std::pair<int, int> product_parameters(const SchemeSpec& spec) {
  if (const auto* p = std::get_if<Product>(&spec)) return {p->baseOrder, p->copies};
  if (const auto* c = std::get_if<FromCatalog>(&spec); c && c->name == "hamming") {
    return {static_cast<int>(c->params[1]), static_cast<int>(c->params[0])};
  }
  fail(ErrorCode::EngineSpecMismatch, "product engine needs a product of complete graphs");
}

}  // namespace

double spec_degree(const SchemeSpec& spec) {
  if (std::holds_alternative<FromGroup>(spec)) {
    const auto r = *group_realization(spec);
    std::int64_t size = 0;
    for (int c : r.blocks[static_cast<std::size_t>(r.generatingBlock)]) {
      size += r.table.classSizes[static_cast<std::size_t>(c)];
    }
    return static_cast<double>(size);
  }
  return static_cast<double>(intersection_array_of(spec).degree());
}

AmplitudeSeries dispatch(const WalkRequest& request) {
  validate_spec(request.spec);
  check_times(request.times);
  std::vector<double> times = request.times;
  if (request.normalizedAdjacency) {
    // e^{-i (A/a_1) t} = e^{-i A (t/a_1)}
    const double degree = spec_degree(request.spec);
    for (double& t : times) t /= degree;
  }

  AmplitudeSeries series;
  switch (resolve_engine(request.spec, request.engine)) {
    case Engine::Eigen: {
      const auto input = eigen_input(request.spec);
      series = amplitudes_eigen(input.es, times, input.generatingRelation);
      break;
    }
    case Engine::Character: {
      const auto r = require_realization(request.spec);
      series = amplitudes_group(r.table, r.blocks, r.generatingBlock, times);
      break;
    }
    case Engine::Spectral: {
      if (std::holds_alternative<FromGroup>(request.spec)) {
        fail(ErrorCode::EngineSpecMismatch,
             "spectral engine needs an intersection array; " + describe(request.spec) +
                 " is a class scheme");
      }
      const auto array = intersection_array_of(request.spec);
      series = amplitudes_spectral(distance_distribution(request.spec, array),
                                   jacobi_from_intersection(array), array, times);
      break;
    }
    case Engine::Product: {
      const auto [n, d] = product_parameters(request.spec);
      series = hamming_walk(n, d, times).series;
      break;
    }
    case Engine::Auto: break;
  }
  series.times = request.times;
  return series;
}

AverageProbabilities dispatch_average(const SchemeSpec& spec, Engine engine) {
  validate_spec(spec);
  switch (resolve_engine(spec, engine)) {
    case Engine::Eigen: {
      const auto input = eigen_input(spec);
      return average_probabilities(input.es, input.generatingRelation);
    }
    case Engine::Character: {
      const auto r = require_realization(spec);
      return average_probabilities(r.table, r.blocks, r.generatingBlock);
    }
    case Engine::Spectral:
    case Engine::Product: {
      if (std::holds_alternative<FromGroup>(spec)) {
        fail(ErrorCode::EngineSpecMismatch, "spectral averages need an intersection array");
      }
      if (engine == Engine::Product) (void)product_parameters(spec);
      const auto array = intersection_array_of(spec);
      return average_probabilities(distance_distribution(spec, array),
                                   jacobi_from_intersection(array), array);
    }
    case Engine::Auto: break;
  }
  fail(ErrorCode::UsageError, "unresolved engine");
}

DiscreteDistribution spectrum_of(const SchemeSpec& spec) {
  validate_spec(spec);
  if (std::holds_alternative<FromGroup>(spec)) {
    const auto r = *group_realization(spec);
    const auto lambda = block_eigenvalues(r.table, r.blocks[static_cast<std::size_t>(r.generatingBlock)]);
    const auto g = static_cast<double>(r.table.order());
    DiscreteDistribution out;
    for (const auto& group : group_by_value(lambda)) {
      double weight = 0.0;
      for (int i : group) {
        const auto d = static_cast<double>(r.table.irrepDims[static_cast<std::size_t>(i)]);
        weight += d * d / g;
      }
      out.atoms.push_back(lambda[static_cast<std::size_t>(group.front())]);
      out.weights.push_back(weight);
    }
    return out;
  }
  if (const auto* p = std::get_if<Product>(&spec)) return hamming_distribution(p->baseOrder, p->copies);
  const auto array = intersection_array_of(spec);
  return distance_distribution(spec, array);
}

}  // namespace schemewalk

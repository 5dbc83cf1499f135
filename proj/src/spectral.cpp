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

#include "schemewalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "schemewalk/errors.hpp"
#include "schemewalk/linalg.hpp"

namespace schemewalk {

namespace {

constexpr double kAtomSeparation = 1e-9;
constexpr double kPoleDistance = 1e-12;

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

}  // namespace

std::size_t InfiniteDiscreteDistribution::truncation() const {
  std::size_t k = 0;
  while (tailMass(k) >= truncationTolerance) {
    ++k;
    if (k > 100000000) fail(ErrorCode::BadParameter, "tail mass does not decay");
  }
  return k;
}

DiscreteDistribution InfiniteDiscreteDistribution::truncated() const {
  DiscreteDistribution out;
  const std::size_t count = truncation();
  out.atoms.reserve(count);
  out.weights.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    auto [x, w] = atom(k);
    out.atoms.push_back(x);
    out.weights.push_back(w);
  }
  return out;
}

DiscreteDistribution quadrature_view(const SpectralDistribution& dist) {
  if (const auto* discrete = std::get_if<DiscreteDistribution>(&dist)) return *discrete;
  if (const auto* continuous = std::get_if<ContinuousDistribution>(&dist)) {
    return DiscreteDistribution{continuous->ruleNodes, continuous->ruleWeights};
  }
  return std::get<InfiniteDiscreteDistribution>(dist).truncated();
}

JacobiCoefficients jacobi_from_intersection(const IntersectionArray& array) {
  require_valid(array);
  const int d = array.diameter;
  const auto a1 = static_cast<double>(array.degree());
  JacobiCoefficients jc;
  jc.omega.reserve(static_cast<std::size_t>(d));
  jc.alpha.reserve(static_cast<std::size_t>(d) + 1);
  for (int k = 1; k <= d; ++k) {
    jc.omega.push_back(static_cast<double>(array.c(k - 1) * array.b(k)));
  }
  for (int k = 1; k <= d + 1; ++k) {
    jc.alpha.push_back(a1 - static_cast<double>(array.b(k - 1) + array.c(k - 1)));
  }
  return jc;
}

DiscreteDistribution gauss_quadrature(const JacobiCoefficients& jc) {
  if (jc.alpha.size() != jc.omega.size() + 1) {
    fail(ErrorCode::InconsistentInputs, "alpha must have one more entry than omega");
  }
  std::vector<double> offDiagonal;
  offDiagonal.reserve(jc.omega.size());
  for (double w : jc.omega) {
    if (!(w > 0.0)) fail(ErrorCode::InconsistentInputs, "omega entries must be positive");
    offDiagonal.push_back(std::sqrt(w));
  }
  const auto eig = linalg::tridiagonal_eigen(jc.alpha, offDiagonal);
  DiscreteDistribution out;
  const auto n = static_cast<std::size_t>(eig.values.size());
  out.atoms.resize(n);
  out.weights.resize(n);
  for (std::size_t l = 0; l < n; ++l) {
    const auto j = static_cast<Eigen::Index>(l);
    out.atoms[l] = eig.values[j];
    out.weights[l] = eig.vectors(0, j) * eig.vectors(0, j);
  }
  return out;
}

DiscreteDistribution golub_welsch(const JacobiCoefficients& jc) {
  auto out = gauss_quadrature(jc);
  for (std::size_t l = 1; l < out.atoms.size(); ++l) {
    if (out.atoms[l] - out.atoms[l - 1] <= kAtomSeparation) {
      fail(ErrorCode::DegenerateAtoms, "atoms " + std::to_string(out.atoms[l - 1]) + " and " +
                                           std::to_string(out.atoms[l]) + " are not separated");
    }
  }
  return out;
}

std::vector<double> evaluate_polynomials(const JacobiCoefficients& jc, double x, int upToK) {
  if (upToK < 0 || upToK > static_cast<int>(jc.alpha.size())) {
    fail(ErrorCode::InconsistentInputs, "polynomial degree out of range");
  }
  std::vector<double> q(static_cast<std::size_t>(upToK) + 1);
  q[0] = 1.0;
  if (upToK >= 1) q[1] = x - jc.alpha[0];
  for (int n = 1; n < upToK; ++n) {
    const auto un = static_cast<std::size_t>(n);
    q[un + 1] = (x - jc.alpha[un]) * q[un] - jc.omega[un - 1] * q[un - 1];
  }
  return q;
}

std::complex<double> stieltjes_transform(const SpectralDistribution& dist,
                                         std::complex<double> z) {
  if (const auto* continuous = std::get_if<ContinuousDistribution>(&dist)) {
    if (std::abs(z.imag()) < kPoleDistance && z.real() >= continuous->lower - kPoleDistance &&
        z.real() <= continuous->upper + kPoleDistance) {
      fail(ErrorCode::PoleProximity, "z lies on the support of the density");
    }
  }
  const auto view = quadrature_view(dist);
  const bool discrete = !std::holds_alternative<ContinuousDistribution>(dist);
  std::complex<double> g = 0.0;
  for (std::size_t l = 0; l < view.size(); ++l) {
    const std::complex<double> gap = z - view.atoms[l];
    if (discrete && std::abs(gap) < kPoleDistance) {
      fail(ErrorCode::PoleProximity, "z is within 1e-12 of atom " + std::to_string(view.atoms[l]));
    }
    g += view.weights[l] / gap;
  }
  return g;
}

std::complex<double> stieltjes_continued_fraction(const JacobiCoefficients& jc,
                                                  std::complex<double> z) {
  const int d = jc.diameter();
  std::complex<double> tail = z - jc.alpha[static_cast<std::size_t>(d)];
  for (int k = d; k >= 1; --k) {
    const auto uk = static_cast<std::size_t>(k);
    if (std::abs(tail) < kPoleDistance) fail(ErrorCode::PoleProximity, "continued fraction pole");
    tail = z - jc.alpha[uk - 1] - jc.omega[uk - 1] / tail;
  }
  if (std::abs(tail) < kPoleDistance) fail(ErrorCode::PoleProximity, "continued fraction pole");
  return 1.0 / tail;
}

// -- closed-form families ---------------------------------------------------

IntersectionArray srg_intersection_array(const SrgParameters& p) {
  const auto bad = [&](const std::string& why) {
    fail(ErrorCode::InfeasibleParameters,
         "srg(" + std::to_string(p.n) + "," + std::to_string(p.kappa) + "," +
             std::to_string(p.lambda) + "," + std::to_string(p.eta) + "): " + why);
  };
  if (p.n < 3 || p.kappa < 1 || p.lambda < 0 || p.eta < 1) bad("parameters out of range");
  if (p.kappa >= p.n - 1) bad("complete graph has diameter 1");
  if (p.kappa - p.lambda - 1 < 1) bad("c_1 = kappa - lambda - 1 < 1");
  if (p.eta > p.kappa) bad("eta exceeds kappa");
  if (p.kappa * (p.kappa - p.lambda - 1) != p.eta * (p.n - p.kappa - 1)) {
    bad("kappa (kappa - lambda - 1) != eta (n - kappa - 1)");
  }
  IntersectionArray ia{2, {p.kappa, p.kappa - p.lambda - 1}, {1, p.eta}};
  if (!validate_intersection_array(ia).ok()) bad("induced intersection array is invalid");
  return ia;
}

DiscreteDistribution srg_distribution(const SrgParameters& p) {
  (void)srg_intersection_array(p);
  const auto k = static_cast<double>(p.kappa);
  const auto l = static_cast<double>(p.lambda);
  const auto e = static_cast<double>(p.eta);
  const double disc = (l - e) * (l - e) - 4.0 * (e - k);
  if (disc <= 0.0) fail(ErrorCode::InfeasibleParameters, "discriminant is not positive");
  const double root = std::sqrt(disc);
  const double x1 = k;
  const double x2 = 0.5 * (l - e + root);
  const double x3 = 0.5 * (l - e - root);
  const double b1 = e / (k * k - k * (l - e) + (e - k));
  const double b2 = (-k * root + k * (l - e) + 2.0 * k) / ((l - e - 2.0 * k) * root + disc);
  const double b3 = (k * root + k * (l - e) + 2.0 * k) / ((-l + e + 2.0 * k) * root + disc);
  for (double b : {b1, b2, b3}) {
    if (!(b > 0.0 && b < 1.0)) fail(ErrorCode::InfeasibleParameters, "weights outside (0, 1)");
  }
  return DiscreteDistribution{{x3, x2, x1}, {b3, b2, b1}};
}

IntersectionArray complete_graph_array(int n) {
  if (n < 2) fail(ErrorCode::BadParams, "complete graph needs n >= 2");
  return IntersectionArray{1, {n - 1}, {1}};
}

IntersectionArray cycle_array(int n) {
  if (n < 3) fail(ErrorCode::BadParams, "cycle needs n >= 3");
  const int d = n / 2;
  IntersectionArray ia;
  ia.diameter = d;
  ia.forward.assign(static_cast<std::size_t>(d), 1);
  ia.backward.assign(static_cast<std::size_t>(d), 1);
  ia.forward[0] = 2;
  if (n % 2 == 0) ia.backward.back() = 2;
  return ia;
}

IntersectionArray hamming_array(int n, int d) {
  if (n < 2 || d < 1) fail(ErrorCode::BadParams, "hamming needs n >= 2 and d >= 1");
  IntersectionArray ia;
  ia.diameter = d;
  for (int i = 0; i < d; ++i) ia.forward.push_back(static_cast<std::int64_t>(n - 1) * (d - i));
  for (int i = 1; i <= d; ++i) ia.backward.push_back(i);
  return ia;
}

IntersectionArray johnson_array(int v, int d) {
  if (d < 1 || 2 * d > v) fail(ErrorCode::BadParams, "johnson needs 1 <= d <= v/2");
  IntersectionArray ia;
  ia.diameter = d;
  for (int i = 0; i < d; ++i) ia.forward.push_back(static_cast<std::int64_t>(d - i) * (v - d - i));
  for (int i = 1; i <= d; ++i) ia.backward.push_back(static_cast<std::int64_t>(i) * i);
  return ia;
}

DiscreteDistribution hamming_distribution(int n, int d) {
  if (n < 2 || d < 1) fail(ErrorCode::BadParams, "hamming needs n >= 2 and d >= 1");
  DiscreteDistribution out;
  const double total = std::pow(static_cast<double>(n), d);
  for (int l = 0; l <= d; ++l) {
    out.atoms.push_back(static_cast<double>(n * l - d));
    out.weights.push_back(binomial(d, l) * std::pow(static_cast<double>(n - 1), d - l) / total);
  }
  return out;
}

double krawtchouk(int j, int x, int n, int d) {
  double sum = 0.0;
  for (int h = 0; h <= j; ++h) {
    const double term = binomial(x, h) * binomial(d - x, j - h) *
                        std::pow(static_cast<double>(n - 1), j - h);
    sum += (h % 2 == 0) ? term : -term;
  }
  return sum;
}

SchemeEigenstructure hamming_eigenstructure(int n, int d) {
  if (n < 2 || d < 1) fail(ErrorCode::BadParams, "hamming needs n >= 2 and d >= 1");
  SchemeEigenstructure es;
  es.P.resize(d + 1, d + 1);
  es.Q.resize(d + 1, d + 1);
  es.multiplicities.resize(d + 1);
  es.valencies.order = 1;
  for (int i = 0; i < d; ++i) es.valencies.order *= n;
  for (int i = 0; i <= d; ++i) {
    const auto a = static_cast<std::int64_t>(std::llround(binomial(d, i) * std::pow(n - 1.0, i)));
    es.valencies.sizes.push_back(a);
    es.multiplicities[i] = static_cast<double>(a);
  }
  // Row i is the eigenspace with A_1-eigenvalue (n-1)d - n i, already descending.
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      es.P(i, j) = krawtchouk(j, i, n, d);
    }
  }
  // The Hamming scheme is self-dual, so Q = P.
  es.Q = es.P;
  return es;
}

ContinuousDistribution continuous_line_distribution(int nodes) {
  if (nodes < 1) fail(ErrorCode::BadParameter, "quadrature needs at least one node");
  ContinuousDistribution out;
  out.density = [](double x) {
    if (x <= -2.0 || x >= 2.0) return 0.0;
    return 1.0 / (std::numbers::pi * std::sqrt(4.0 - x * x));
  };
  out.lower = -2.0;
  out.upper = 2.0;
  out.quadratureNodes = nodes;
  // Gauss-Chebyshev: theta_j = (2j - 1) pi / 2N, equal weights; reversed so x ascends.
  for (int j = nodes; j >= 1; --j) {
    const double theta = (2.0 * j - 1.0) * std::numbers::pi / (2.0 * nodes);
    out.ruleNodes.push_back(2.0 * std::cos(theta));
    out.ruleWeights.push_back(1.0 / nodes);
  }
  return out;
}

JacobiCoefficients line_jacobi(int strata) {
  if (strata < 1) fail(ErrorCode::BadParameter, "need at least one stratum");
  JacobiCoefficients jc;
  jc.alpha.assign(static_cast<std::size_t>(strata) + 1, 0.0);
  jc.omega.assign(static_cast<std::size_t>(strata), 1.0);
  jc.omega[0] = 2.0;
  return jc;
}

InfiniteDiscreteDistribution meixner_distribution(double p, double tailTolerance) {
  if (!(p > 0.0 && p < 1.0)) fail(ErrorCode::BadParameter, "meixner needs 0 < p < 1");
  if (!(tailTolerance > 0.0)) fail(ErrorCode::BadParameter, "tail tolerance must be positive");
  const double scale = std::sqrt(p * (2.0 - p));
  const double ratio = p / (2.0 - p);
  const double lead = 2.0 * (1.0 - p) / (2.0 - p);
  InfiniteDiscreteDistribution out;
  out.atom = [=](std::size_t k) {
    const auto kk = static_cast<double>(k);
    return std::pair{(-p + 2.0 * (1.0 - p) * kk) / scale, lead * std::pow(ratio, kk)};
  };
  out.tailMass = [=](std::size_t k) { return std::pow(ratio, static_cast<double>(k)); };
  out.truncationTolerance = tailTolerance;
  return out;
}

JacobiCoefficients meixner_jacobi(double p, int strata) {
  if (!(p > 0.0 && p < 1.0)) fail(ErrorCode::BadParameter, "meixner needs 0 < p < 1");
  if (strata < 1) fail(ErrorCode::BadParameter, "need at least one stratum");
  const double scale = std::sqrt(p * (2.0 - p));
  JacobiCoefficients jc;
  for (int n = 1; n <= strata; ++n) jc.omega.push_back(static_cast<double>(n) * n);
  for (int n = 0; n <= strata; ++n) jc.alpha.push_back(2.0 * n / scale);
  return jc;
}

JacobiCoefficients laguerre_jacobi(int strata) {
  if (strata < 1) fail(ErrorCode::BadParameter, "need at least one stratum");
  JacobiCoefficients jc;
  for (int n = 1; n <= strata; ++n) jc.omega.push_back(static_cast<double>(n) * n);
  for (int n = 0; n <= strata; ++n) jc.alpha.push_back(2.0 * n + 1.0);
  return jc;
}

}  // namespace schemewalk

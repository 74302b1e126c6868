// Copyright 2026 The contam Authors
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

#include "contam/quadrature.hpp"

#include <Eigen/Cholesky>
#include <Eigen/QR>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "contam/numerics.hpp"
#include "contam/parallel.hpp"

namespace contam {

namespace {

constexpr double kBoundaryFactorLog = 13.815510557964274;  // log(1e6)

struct Axis {
  std::vector<double> nodes;
  std::vector<double> weights;
};

Axis make_axis(const AxisSpec& spec) {
  if (spec.points < 2) {
    throw std::invalid_argument("quadrature axis needs at least 2 points");
  }
  if (!(spec.hi > spec.lo)) {
    throw std::invalid_argument("quadrature axis needs hi > lo");
  }
  Axis axis;
  axis.nodes.resize(static_cast<std::size_t>(spec.points));
  axis.weights.resize(static_cast<std::size_t>(spec.points));
  const auto last = static_cast<std::size_t>(spec.points - 1);
  if (spec.log_spaced) {
    if (!(spec.lo > 0.0)) {
      throw std::invalid_argument("log-spaced axis needs lo > 0");
    }
    const double u0 = std::log(spec.lo);
    const double du = (std::log(spec.hi) - u0) / static_cast<double>(last);
    for (std::size_t i = 0; i <= last; ++i) {
      const double x = std::exp(u0 + du * static_cast<double>(i));
      axis.nodes[i] = x;
      axis.weights[i] = x * du;  // dx = x du
    }
  } else {
    const double h = (spec.hi - spec.lo) / static_cast<double>(last);
    for (std::size_t i = 0; i <= last; ++i) {
      axis.nodes[i] = spec.lo + h * static_cast<double>(i);
      axis.weights[i] = h;
    }
  }
  axis.weights.front() *= 0.5;
  axis.weights.back() *= 0.5;
  return axis;
}

struct SliceStats {
  double log_integral = -std::numeric_limits<double>::infinity();
  double kl_sum = 0.0;
  double max_interior = -std::numeric_limits<double>::infinity();
  double max_boundary = -std::numeric_limits<double>::infinity();
};

// Walks sigma slices in parallel, beta points within a slice serially, and
// leaves one SliceStats per sigma node for an in-order reduction.
template <typename SliceVisitor>
std::vector<SliceStats> walk_slices(const GridSpec& grid,
                                    const SliceVisitor& visit) {
  const Axis sigma_axis = make_axis(grid.sigma);
  std::vector<Axis> beta_axes;
  beta_axes.reserve(grid.beta.size());
  for (const auto& spec : grid.beta) beta_axes.push_back(make_axis(spec));

  std::vector<SliceStats> slices(sigma_axis.nodes.size());
  parallel_for(sigma_axis.nodes.size(), [&](std::size_t begin, std::size_t end) {
    Eigen::VectorXd beta(static_cast<Eigen::Index>(beta_axes.size()));
    for (std::size_t si = begin; si < end; ++si) {
      const bool sigma_edge = si == 0 || si + 1 == sigma_axis.nodes.size();
      visit(slices[si], beta_axes, beta, sigma_axis.nodes[si],
            sigma_axis.weights[si], sigma_edge);
    }
  });
  return slices;
}

}  // namespace

void GridSpec::validate() const {
  if (beta.empty() || beta.size() > 2) {
    throw std::invalid_argument("GridSpec: beta dimension must be 1 or 2");
  }
  for (const auto& axis : beta) {
    if (axis.points < 16) {
      throw std::invalid_argument("GridSpec: need >= 16 points per axis");
    }
  }
  if (sigma.points < 16) {
    throw std::invalid_argument("GridSpec: need >= 16 points per axis");
  }
  if (!(sigma.lo > 0.0)) {
    throw std::invalid_argument("GridSpec: sigma range must start above 0");
  }
}

LogIntegral quadrature_normalizer(const LogKernel& log_kernel,
                                  const GridSpec& grid) {
  grid.validate();
  const bool two_d = grid.beta.size() == 2;
  std::vector<SliceStats> slices = walk_slices(
      grid, [&](SliceStats& out, const std::vector<Axis>& axes,
                Eigen::VectorXd& beta, double sigma, double w_sigma,
                bool sigma_edge) {
        const Axis& a0 = axes[0];
        const std::size_t n0 = a0.nodes.size();
        const std::size_t n1 = two_d ? axes[1].nodes.size() : 1;
        std::vector<double> vals;
        vals.reserve(n0 * n1);
        const double log_w_sigma = std::log(w_sigma);
        for (std::size_t i0 = 0; i0 < n0; ++i0) {
          beta[0] = a0.nodes[i0];
          const bool edge0 = i0 == 0 || i0 + 1 == n0;
          for (std::size_t i1 = 0; i1 < n1; ++i1) {
            bool edge = sigma_edge || edge0;
            double log_w = log_w_sigma + std::log(a0.weights[i0]);
            if (two_d) {
              beta[1] = axes[1].nodes[i1];
              edge = edge || i1 == 0 || i1 + 1 == n1;
              log_w += std::log(axes[1].weights[i1]);
            }
            const double v = log_kernel(beta, sigma);
            vals.push_back(v + log_w);
            if (edge) {
              out.max_boundary = std::max(out.max_boundary, v);
            } else {
              out.max_interior = std::max(out.max_interior, v);
            }
          }
        }
        out.log_integral = log_sum_exp(vals);
      });

  std::vector<double> parts;
  parts.reserve(slices.size());
  double max_interior = -std::numeric_limits<double>::infinity();
  double max_boundary = -std::numeric_limits<double>::infinity();
  for (const auto& s : slices) {
    parts.push_back(s.log_integral);
    max_interior = std::max(max_interior, s.max_interior);
    max_boundary = std::max(max_boundary, s.max_boundary);
  }
  LogIntegral result;
  result.log_value = log_sum_exp(parts);
  result.boundary_warning = max_boundary >= max_interior - kBoundaryFactorLog;
  return result;
}

double quadrature_kl(const LogKernel& log_p, const LogKernel& log_q,
                     const GridSpec& grid) {
  grid.validate();
  const bool two_d = grid.beta.size() == 2;
  std::vector<SliceStats> slices = walk_slices(
      grid, [&](SliceStats& out, const std::vector<Axis>& axes,
                Eigen::VectorXd& beta, double sigma, double w_sigma,
                bool /*sigma_edge*/) {
        const Axis& a0 = axes[0];
        const std::size_t n0 = a0.nodes.size();
        const std::size_t n1 = two_d ? axes[1].nodes.size() : 1;
        double acc = 0.0;
        for (std::size_t i0 = 0; i0 < n0; ++i0) {
          beta[0] = a0.nodes[i0];
          for (std::size_t i1 = 0; i1 < n1; ++i1) {
            double w = w_sigma * a0.weights[i0];
            if (two_d) {
              beta[1] = axes[1].nodes[i1];
              w *= axes[1].weights[i1];
            }
            const double lp = log_p(beta, sigma);
            if (lp == -std::numeric_limits<double>::infinity()) {
              continue;  // zero-mass point contributes nothing
            }
            const double lq = log_q(beta, sigma);
            acc += w * std::exp(lp) * (lp - lq);
          }
        }
        out.kl_sum = acc;
      });
  double total = 0.0;
  for (const auto& s : slices) total += s.kl_sum;
  return total;
}

std::vector<std::pair<double, double>> normalizer_growth(
    const RegressionData& data, const NigParams& prior, double s,
    const ErrorDensity& error, const std::vector<double>& omegas,
    int beta_points, int sigma_points) {
  data.validate();
  prior.validate();
  if (data.p() < 1 || data.p() > 2) {
    throw std::invalid_argument("normalizer_growth: p must be 1 or 2");
  }
  if (!(s > 0.0 && s < 1.0)) {
    throw std::domain_error("normalizer_growth: s must be in (0, 1)");
  }
  if (prior.mu.norm() != 0.0) {
    throw std::invalid_argument(
        "normalizer_growth: requires the zero-mean conjugate prior");
  }
  const int p = data.p();
  const Eigen::MatrixXd lambda_inv =
      prior.lambda.llt().solve(Eigen::MatrixXd::Identity(p, p));
  const Eigen::LLT<Eigen::MatrixXd> prior_llt(prior.lambda);
  double log_det = 0.0;
  for (int k = 0; k < p; ++k) {
    log_det += 2.0 * std::log(prior_llt.matrixLLT()(k, k));
  }
  // The beta integral is evaluated in the scale-free coordinate t =
  // beta/sigma, where the conditional prior is N(0, Lambda^-1) at every
  // sigma. A fixed t-grid then resolves the integrand uniformly over the
  // whole sigma range, which spans [1e-2, 10 omega].
  const double c_prior_t = -0.5 * p * std::log(2.0 * M_PI) + 0.5 * log_det;
  const double c_sigma = std::log(2.0) + prior.shape * std::log(prior.scale) -
                         log_gamma(prior.shape);
  const double log_odds = std::log1p(-s) - std::log(s);

  std::vector<std::pair<double, double>> result;
  result.reserve(omegas.size());
  for (double omega : omegas) {
    const Eigen::VectorXd y = materialize_outliers(data, omega);
    // constant outlier factor pieces: (1-s)/s / f1(y_i) and the Gaussian
    // normalizer per outlier
    double c_outlier = 0.0;
    for (std::size_t k = 0; k < data.outlier_indices.size(); ++k) {
      const int i = data.outlier_indices[k];
      c_outlier += log_odds - 0.5 * std::log(2.0 * M_PI) - error.log_pdf(y[i]);
    }

    GridSpec grid;
    grid.sigma = AxisSpec{1e-2, 10.0 * omega, sigma_points, true};
    for (int k = 0; k < p; ++k) {
      const double half = 8.0 * std::sqrt(lambda_inv(k, k));
      grid.beta.push_back(AxisSpec{-half, half, beta_points, false});
    }

    const auto kernel = [&](const Eigen::VectorXd& t, double sigma) {
      double quad = 0.0;
      for (int k = 0; k < p; ++k) {
        for (int l = 0; l < p; ++l) {
          quad += t[k] * prior.lambda(k, l) * t[l];
        }
      }
      const double log_sigma = std::log(sigma);
      double v = c_prior_t - 0.5 * quad + c_sigma -
                 (2.0 * prior.shape + 1.0) * log_sigma -
                 prior.scale / (sigma * sigma) + c_outlier;
      const auto n_out = data.outlier_indices.size();
      for (std::size_t k = 0; k < n_out; ++k) {
        const int i = data.outlier_indices[k];
        const double u = y[i] / sigma - data.x.row(i).dot(t);
        v += -log_sigma - 0.5 * u * u;
      }
      return v;
    };
    result.emplace_back(omega, quadrature_normalizer(kernel, grid).log_value);
  }
  return result;
}

GridSpec posterior_grid(const RegressionData& data, const NigParams& prior,
                        int beta_points, int sigma_points) {
  data.validate();
  prior.validate();
  const int p = data.p();
  if (p < 1 || p > 2) {
    throw std::invalid_argument("posterior_grid: p must be 1 or 2");
  }
  const std::vector<int> clean = data.clean_indices();
  Eigen::MatrixXd xc(clean.size(), p);
  Eigen::VectorXd yc(clean.size());
  for (std::size_t k = 0; k < clean.size(); ++k) {
    xc.row(static_cast<Eigen::Index>(k)) = data.x.row(clean[k]);
    yc[static_cast<Eigen::Index>(k)] = data.y[clean[k]];
  }
  Eigen::VectorXd center;
  if (static_cast<int>(clean.size()) >= p) {
    center = xc.colPivHouseholderQr().solve(yc);
  } else {
    center = prior.mu;
  }
  const Eigen::MatrixXd lambda_inv =
      prior.lambda.llt().solve(Eigen::MatrixXd::Identity(p, p));
  const double s0 = std::sqrt(prior.scale / prior.shape);

  GridSpec grid;
  for (int k = 0; k < p; ++k) {
    const double half = 10.0 * s0 * std::sqrt(lambda_inv(k, k));
    grid.beta.push_back(
        AxisSpec{center[k] - half, center[k] + half, beta_points, false});
  }
  grid.sigma = AxisSpec{s0 / 50.0, s0 * 50.0, sigma_points, true};
  return grid;
}

}  // namespace contam

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

#ifndef CONTAM_REGRESSION_DATA_HPP
#define CONTAM_REGRESSION_DATA_HPP

#include <Eigen/Core>
#include <vector>

namespace contam {

// Responses, design matrix, and the outlier schedule y_i = a_i + b_i * omega
// for i in the outlier index set. Indices are 0-based here; the JSON config
// surface uses 1-based indices.
struct RegressionData {
  Eigen::VectorXd y;                  // n responses
  Eigen::MatrixXd x;                  // n x p design
  std::vector<int> outlier_indices;   // L, strictly increasing
  Eigen::VectorXd outlier_offset;     // a_i over L
  Eigen::VectorXd outlier_slope;      // b_i over L, all nonzero

  int n() const { return static_cast<int>(y.size()); }
  int p() const { return static_cast<int>(x.cols()); }

  /// Complement of the outlier set, ascending.
  std::vector<int> clean_indices() const;

  /// Checks index bounds, slope nonzeroness, and full column rank of x
  /// (rank-revealing QR at 1e-10 relative tolerance). Throws on violation.
  void validate() const;
};

/// y with y_i replaced by a_i + b_i * omega on the outlier set.
Eigen::VectorXd materialize_outliers(const RegressionData& data, double omega);

}  // namespace contam

#endif  // CONTAM_REGRESSION_DATA_HPP

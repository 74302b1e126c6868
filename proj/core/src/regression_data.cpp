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

#include "contam/regression_data.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <stdexcept>

namespace contam {

std::vector<int> RegressionData::clean_indices() const {
  std::vector<int> out;
  out.reserve(y.size());
  for (int i = 0; i < n(); ++i) {
    if (!std::binary_search(outlier_indices.begin(), outlier_indices.end(), i)) {
      out.push_back(i);
    }
  }
  return out;
}

void RegressionData::validate() const {
  if (y.size() != x.rows()) {
    throw std::invalid_argument("RegressionData: |y| must match rows of X");
  }
  const auto n_out = static_cast<Eigen::Index>(outlier_indices.size());
  if (outlier_offset.size() != n_out || outlier_slope.size() != n_out) {
    throw std::invalid_argument(
        "RegressionData: outlier offsets/slopes must match index count");
  }
  int prev = -1;
  for (int i : outlier_indices) {
    if (i < 0 || i >= n()) {
      throw std::invalid_argument("RegressionData: outlier index out of range");
    }
    if (i <= prev) {
      throw std::invalid_argument(
          "RegressionData: outlier indices must be strictly increasing");
    }
    prev = i;
  }
  for (Eigen::Index k = 0; k < outlier_slope.size(); ++k) {
    if (outlier_slope[k] == 0.0) {
      throw std::invalid_argument("RegressionData: outlier slope b_i = 0");
    }
  }
  if (p() > 0) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x);
    qr.setThreshold(1e-10);
    if (qr.rank() < p()) {
      throw std::invalid_argument(
          "RegressionData: X is column-rank deficient at 1e-10 tolerance");
    }
  }
}

Eigen::VectorXd materialize_outliers(const RegressionData& data, double omega) {
  if (!(omega > 0.0)) {
    throw std::domain_error("materialize_outliers: omega must be positive");
  }
  Eigen::VectorXd out = data.y;
  for (std::size_t k = 0; k < data.outlier_indices.size(); ++k) {
    out[data.outlier_indices[k]] =
        data.outlier_offset[static_cast<Eigen::Index>(k)] +
        data.outlier_slope[static_cast<Eigen::Index>(k)] * omega;
  }
  return out;
}

}  // namespace contam

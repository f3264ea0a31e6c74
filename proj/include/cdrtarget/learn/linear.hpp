#pragma once

// Linear-family learners on dense, finite feature matrices:
//   - ordinary least squares / weighted logistic regression (IRLS)
//   - lasso and L1-penalized logistic regression via coordinate descent
//     with soft-thresholding, intercept unpenalized
// Penalties are on the mean-loss scale: (1/sum_w) * sum_i w_i * loss_i
// + penalty * sum_j |beta_j|.

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "cdrtarget/learn/dataset.hpp"

namespace cdrtarget::learn {

struct LinearFit {
  double intercept = 0.0;
  std::vector<double> coef;

  double linear_value(const double* row, std::size_t n_cols) const {
    double v = intercept;
    for (std::size_t c = 0; c < n_cols; ++c) v += coef[c] * row[c];
    return v;
  }

  nlohmann::json to_json() const;
  static LinearFit from_json(const nlohmann::json& j);
};

double sigmoid(double z);

// l1_penalty == 0 selects the unpenalized solver.
LinearFit fit_linear_regression(const Dataset& d, double l1_penalty);
LinearFit fit_logistic_regression(const Dataset& d, double l1_penalty);

}  // namespace cdrtarget::learn

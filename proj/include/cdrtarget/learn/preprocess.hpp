#pragma once

// Feature preprocessing fitted on training rows only. Stages, in order:
//   1. drop columns whose training missing rate exceeds drop_missing_threshold
//   2. winsorize to the training [limit, 1-limit] quantiles (limit 0 = off)
//   3. drop columns whose post-winsor variance is <= drop_variance_threshold
//   4. mean-impute and scale to zero mean / unit variance (linear and forest
//      families; boosting leaves missing values in place and skips scaling)

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdrtarget/learn/dataset.hpp"

namespace cdrtarget::learn {

struct PreprocessRecipe {
  double drop_missing_threshold = 1.0;   // {0.5, 0.8, 1.0}
  double drop_variance_threshold = 0.0;  // {0, 0.01, 0.1}
  double winsor_limit = 0.0;             // {0, 0.01, 0.05}
  bool impute_standardize = true;
};

struct FittedPreprocess {
  PreprocessRecipe recipe;
  std::vector<std::size_t> kept;  // original column indices, ascending
  std::vector<double> winsor_lo;  // per kept column
  std::vector<double> winsor_hi;
  std::vector<double> impute_mean;
  std::vector<double> center;
  std::vector<double> scale;  // 1.0 where variance is zero

  nlohmann::json to_json() const;
  static FittedPreprocess from_json(const nlohmann::json& j);
};

FittedPreprocess fit_preprocess(const PreprocessRecipe& recipe, const Dataset& train);

// Applies fitted statistics; never recomputes anything from `data`.
// Throws std::runtime_error naming the column if a non-finite (infinite)
// value survives preprocessing. NaN survives only on the no-impute path.
Dataset apply_preprocess(const FittedPreprocess& fp, const Dataset& data);

// Empirical quantile with linear interpolation between order statistics.
double quantile_type7(std::vector<double> sorted_values, double q);

}  // namespace cdrtarget::learn

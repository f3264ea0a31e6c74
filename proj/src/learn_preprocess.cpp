#include "cdrtarget/learn/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cdrtarget::learn {

double quantile_type7(std::vector<double> sorted_values, double q) {
  const std::size_t n = sorted_values.size();
  if (n == 0) throw std::invalid_argument("quantile of empty set");
  if (n == 1) return sorted_values[0];
  const double h = q * static_cast<double>(n - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, n - 1);
  const double frac = h - static_cast<double>(lo);
  return sorted_values[lo] + frac * (sorted_values[hi] - sorted_values[lo]);
}

FittedPreprocess fit_preprocess(const PreprocessRecipe& recipe, const Dataset& train) {
  FittedPreprocess fp;
  fp.recipe = recipe;
  const std::size_t n = train.n_rows;

  for (std::size_t c = 0; c < train.n_cols; ++c) {
    std::vector<double> observed;
    observed.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
      const double v = train.at(r, c);
      if (!std::isnan(v)) observed.push_back(v);
    }
    const double missing_rate =
        n == 0 ? 1.0 : 1.0 - static_cast<double>(observed.size()) / static_cast<double>(n);
    if (missing_rate > recipe.drop_missing_threshold) continue;

    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    if (recipe.winsor_limit > 0.0 && !observed.empty()) {
      std::vector<double> sorted = observed;
      std::sort(sorted.begin(), sorted.end());
      lo = quantile_type7(sorted, recipe.winsor_limit);
      hi = quantile_type7(sorted, 1.0 - recipe.winsor_limit);
    }

    double mean = 0.0, var = 0.0;
    if (!observed.empty()) {
      for (double v : observed) mean += std::clamp(v, lo, hi);
      mean /= static_cast<double>(observed.size());
      for (double v : observed) {
        const double d = std::clamp(v, lo, hi) - mean;
        var += d * d;
      }
      var = observed.size() > 1 ? var / static_cast<double>(observed.size() - 1) : 0.0;
    }
    if (var <= recipe.drop_variance_threshold) continue;

    fp.kept.push_back(c);
    fp.winsor_lo.push_back(lo);
    fp.winsor_hi.push_back(hi);
    fp.impute_mean.push_back(mean);
    fp.center.push_back(mean);
    fp.scale.push_back(var > 0.0 ? std::sqrt(var) : 1.0);
  }
  return fp;
}

Dataset apply_preprocess(const FittedPreprocess& fp, const Dataset& data) {
  Dataset out;
  out.n_rows = data.n_rows;
  out.n_cols = fp.kept.size();
  out.x.resize(out.n_rows * out.n_cols);
  out.y = data.y;
  out.w = data.w;
  out.row_ids = data.row_ids;
  out.feature_names.reserve(fp.kept.size());
  for (std::size_t k = 0; k < fp.kept.size(); ++k) {
    out.feature_names.push_back(data.feature_names.empty()
                                    ? "f" + std::to_string(fp.kept[k])
                                    : data.feature_names[fp.kept[k]]);
  }

  for (std::size_t r = 0; r < data.n_rows; ++r) {
    for (std::size_t k = 0; k < fp.kept.size(); ++k) {
      double v = data.at(r, fp.kept[k]);
      if (std::isnan(v)) {
        if (fp.recipe.impute_standardize) {
          v = fp.impute_mean[k];
        } else {
          out.at(r, k) = v;
          continue;
        }
      }
      v = std::clamp(v, fp.winsor_lo[k], fp.winsor_hi[k]);
      if (fp.recipe.impute_standardize) v = (v - fp.center[k]) / fp.scale[k];
      if (std::isinf(v)) {
        throw std::runtime_error("non-finite value after preprocessing in column " +
                                 out.feature_names[k]);
      }
      out.at(r, k) = v;
    }
  }
  return out;
}

namespace {

// JSON cannot represent infinities; winsor bounds are null when inactive.
nlohmann::json bounds_to_json(const std::vector<double>& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (double x : v) {
    if (std::isinf(x)) {
      arr.push_back(nullptr);
    } else {
      arr.push_back(x);
    }
  }
  return arr;
}

std::vector<double> bounds_from_json(const nlohmann::json& arr, double inf_value) {
  std::vector<double> v;
  for (const auto& x : arr) v.push_back(x.is_null() ? inf_value : x.get<double>());
  return v;
}

}  // namespace

nlohmann::json FittedPreprocess::to_json() const {
  nlohmann::json j;
  j["recipe"] = {{"drop_missing_threshold", recipe.drop_missing_threshold},
                 {"drop_variance_threshold", recipe.drop_variance_threshold},
                 {"winsor_limit", recipe.winsor_limit},
                 {"impute_standardize", recipe.impute_standardize}};
  j["kept"] = kept;
  j["winsor_lo"] = bounds_to_json(winsor_lo);
  j["winsor_hi"] = bounds_to_json(winsor_hi);
  j["impute_mean"] = impute_mean;
  j["center"] = center;
  j["scale"] = scale;
  return j;
}

FittedPreprocess FittedPreprocess::from_json(const nlohmann::json& j) {
  FittedPreprocess fp;
  const auto& r = j.at("recipe");
  fp.recipe.drop_missing_threshold = r.at("drop_missing_threshold").get<double>();
  fp.recipe.drop_variance_threshold = r.at("drop_variance_threshold").get<double>();
  fp.recipe.winsor_limit = r.at("winsor_limit").get<double>();
  fp.recipe.impute_standardize = r.at("impute_standardize").get<bool>();
  fp.kept = j.at("kept").get<std::vector<std::size_t>>();
  fp.winsor_lo = bounds_from_json(j.at("winsor_lo"),
                                  -std::numeric_limits<double>::infinity());
  fp.winsor_hi = bounds_from_json(j.at("winsor_hi"),
                                  std::numeric_limits<double>::infinity());
  fp.impute_mean = j.at("impute_mean").get<std::vector<double>>();
  fp.center = j.at("center").get<std::vector<double>>();
  fp.scale = j.at("scale").get<std::vector<double>>();
  return fp;
}

}  // namespace cdrtarget::learn

#pragma once

// Ranking metrics. AUC is the weighted Mann-Whitney statistic with ties
// counted as half; the trapezoidal integral of the ROC built here agrees
// with it to floating-point accuracy by construction.

#include <span>
#include <stdexcept>
#include <vector>

namespace cdrtarget::metrics {

struct SingleClassError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;
  double threshold = 0.0;
};

// labels are 0/1; weights may be empty (unweighted). Higher score = predicted
// positive. Throws SingleClassError if either class is absent/weightless.
double mann_whitney_auc(std::span<const double> scores, std::span<const double> labels,
                        std::span<const double> weights = {});

std::vector<RocPoint> roc_curve(std::span<const double> scores,
                                std::span<const double> labels,
                                std::span<const double> weights = {});

double trapezoid_area(const std::vector<RocPoint>& points);

// Weighted coefficient of determination.
double r_squared(std::span<const double> y, std::span<const double> y_hat,
                 std::span<const double> weights = {});

}  // namespace cdrtarget::metrics

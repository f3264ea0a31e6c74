#include "cdrtarget/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>

namespace cdrtarget::metrics {

namespace {

std::vector<std::size_t> order_by_score(std::span<const double> scores, bool ascending) {
  std::vector<std::size_t> idx(scores.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return ascending ? scores[a] < scores[b] : scores[a] > scores[b];
  });
  return idx;
}

inline double weight_at(std::span<const double> weights, std::size_t i) {
  return weights.empty() ? 1.0 : weights[i];
}

}  // namespace

double mann_whitney_auc(std::span<const double> scores, std::span<const double> labels,
                        std::span<const double> weights) {
  const auto idx = order_by_score(scores, /*ascending=*/true);
  long double w_pos_total = 0.0L, w_neg_total = 0.0L;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    (labels[i] > 0.5 ? w_pos_total : w_neg_total) += weight_at(weights, i);
  }
  if (w_pos_total <= 0.0L || w_neg_total <= 0.0L) {
    throw SingleClassError("AUC undefined: both classes must be present");
  }

  long double concordant = 0.0L;
  long double cum_neg_below = 0.0L;
  std::size_t i = 0;
  while (i < idx.size()) {
    std::size_t j = i;
    long double tie_pos = 0.0L, tie_neg = 0.0L;
    while (j < idx.size() && scores[idx[j]] == scores[idx[i]]) {
      const double w = weight_at(weights, idx[j]);
      (labels[idx[j]] > 0.5 ? tie_pos : tie_neg) += w;
      ++j;
    }
    concordant += tie_pos * (cum_neg_below + 0.5L * tie_neg);
    cum_neg_below += tie_neg;
    i = j;
  }
  return static_cast<double>(concordant / (w_pos_total * w_neg_total));
}

std::vector<RocPoint> roc_curve(std::span<const double> scores,
                                std::span<const double> labels,
                                std::span<const double> weights) {
  const auto idx = order_by_score(scores, /*ascending=*/false);
  long double w_pos_total = 0.0L, w_neg_total = 0.0L;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    (labels[i] > 0.5 ? w_pos_total : w_neg_total) += weight_at(weights, i);
  }
  if (w_pos_total <= 0.0L || w_neg_total <= 0.0L) {
    throw SingleClassError("ROC undefined: both classes must be present");
  }

  std::vector<RocPoint> points;
  points.push_back({0.0, 0.0, std::numeric_limits<double>::infinity()});
  long double cum_pos = 0.0L, cum_neg = 0.0L;
  std::size_t i = 0;
  while (i < idx.size()) {
    const double s = scores[idx[i]];
    std::size_t j = i;
    while (j < idx.size() && scores[idx[j]] == s) {
      const double w = weight_at(weights, idx[j]);
      (labels[idx[j]] > 0.5 ? cum_pos : cum_neg) += w;
      ++j;
    }
    points.push_back({static_cast<double>(cum_neg / w_neg_total),
                      static_cast<double>(cum_pos / w_pos_total), s});
    i = j;
  }
  return points;
}

double trapezoid_area(const std::vector<RocPoint>& points) {
  long double area = 0.0L;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const long double dx = static_cast<long double>(points[i].fpr) - points[i - 1].fpr;
    const long double avg_y =
        (static_cast<long double>(points[i].tpr) + points[i - 1].tpr) / 2.0L;
    area += dx * avg_y;
  }
  return static_cast<double>(area);
}

double r_squared(std::span<const double> y, std::span<const double> y_hat,
                 std::span<const double> weights) {
  long double w_total = 0.0L, mean = 0.0L;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double w = weight_at(weights, i);
    w_total += w;
    mean += w * y[i];
  }
  if (w_total <= 0.0L) throw std::invalid_argument("r_squared: empty input");
  mean /= w_total;
  long double ss_res = 0.0L, ss_tot = 0.0L;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double w = weight_at(weights, i);
    ss_res += w * (y[i] - y_hat[i]) * (y[i] - y_hat[i]);
    ss_tot += w * (y[i] - mean) * (y[i] - mean);
  }
  if (ss_tot <= 0.0L) return ss_res <= 0.0L ? 1.0 : 0.0;
  return static_cast<double>(1.0L - ss_res / ss_tot);
}

}  // namespace cdrtarget::metrics

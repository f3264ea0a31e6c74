#pragma once

// Decision trees. Two builders share one node layout:
//   - build_exact_tree: depth-first exact splits over sorted feature values,
//     gini (classification) or variance (regression) criterion; used by the
//     random forest on imputed data (missing values are a caller error).
//   - build_hist_tree: histogram splits on binned features with a learned
//     default direction for missing values, grown best-gain-first up to a
//     leaf budget; used by gradient boosting on (gradient, hessian) pairs.
// Split ties break toward the lowest feature index, then lowest threshold,
// then missing-left, so rebuilt trees are bit-identical.

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "cdrtarget/learn/dataset.hpp"
#include "cdrtarget/rng.hpp"

namespace cdrtarget::learn {

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  bool missing_left = true;
  int left = -1;
  int right = -1;
  double value = 0.0;  // leaf prediction
};

struct Tree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root; empty = constant 0

  double predict(const double* row) const {
    if (nodes.empty()) return 0.0;
    int i = 0;
    while (nodes[static_cast<std::size_t>(i)].feature >= 0) {
      const TreeNode& nd = nodes[static_cast<std::size_t>(i)];
      const double v = row[nd.feature];
      const bool go_left = std::isnan(v) ? nd.missing_left : v <= nd.threshold;
      i = go_left ? nd.left : nd.right;
    }
    return nodes[static_cast<std::size_t>(i)].value;
  }

  int n_leaves() const {
    int n = 0;
    for (const auto& nd : nodes) n += nd.feature < 0 ? 1 : 0;
    return n;
  }

  nlohmann::json to_json() const;
  static Tree from_json(const nlohmann::json& j);
};

struct ExactTreeParams {
  bool classification = true;
  int max_depth = 6;
  int min_leaf = 1;
  int features_per_split = 0;  // 0 = all features
};

// rows may contain repeats (bootstrap). feature_gain, when non-null, is
// accumulated with each accepted split's impurity decrease.
Tree build_exact_tree(const Dataset& d, const std::vector<std::size_t>& rows,
                      const ExactTreeParams& params, Rng& rng,
                      std::vector<double>* feature_gain = nullptr);

// Quantile-binned feature codes for histogram trees. Bin code 255 = missing.
struct BinnedMatrix {
  static constexpr std::uint8_t kMissingCode = 255;
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::vector<std::uint8_t> codes;           // row-major
  std::vector<std::vector<double>> cuts;     // per column; value <= cuts[k] -> bin k
  std::uint8_t code_at(std::size_t r, std::size_t c) const { return codes[r * n_cols + c]; }
  int n_bins(std::size_t c) const { return static_cast<int>(cuts[c].size()) + 1; }
};

// Cut points are midpoints between distinct training values; when a column
// has more than 255 distinct values, 254 evenly spaced rank cuts are used.
BinnedMatrix bin_features(const Dataset& d);

struct HistTreeParams {
  int num_leaves = 10;
  int min_data_in_leaf = 5;
  int max_depth = 0;  // 0 = unlimited
};

// Fits leaf values -sum(g)/(sum(h)+eps) (a Newton step on the loss whose
// gradient/hessian per row are g/h). The caller applies shrinkage.
Tree build_hist_tree(const BinnedMatrix& bins, const std::vector<std::size_t>& rows,
                     const std::vector<double>& grad, const std::vector<double>& hess,
                     const HistTreeParams& params,
                     std::vector<double>* feature_gain = nullptr);

}  // namespace cdrtarget::learn

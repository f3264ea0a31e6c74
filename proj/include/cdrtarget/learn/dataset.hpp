#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace cdrtarget::learn {

// Row-major feature matrix with NaN encoding missing values. Weights are
// optional; empty means unweighted.
struct Dataset {
  std::size_t n_rows = 0;
  std::size_t n_cols = 0;
  std::vector<double> x;  // n_rows * n_cols
  std::vector<double> y;
  std::vector<double> w;
  std::vector<std::string> feature_names;
  std::vector<std::string> row_ids;

  double at(std::size_t r, std::size_t c) const { return x[r * n_cols + c]; }
  double& at(std::size_t r, std::size_t c) { return x[r * n_cols + c]; }
  const double* row(std::size_t r) const { return x.data() + r * n_cols; }
  double weight(std::size_t r) const { return w.empty() ? 1.0 : w[r]; }

  static Dataset create(std::size_t rows, std::size_t cols) {
    Dataset d;
    d.n_rows = rows;
    d.n_cols = cols;
    d.x.assign(rows * cols, 0.0);
    d.y.assign(rows, 0.0);
    return d;
  }

  // Row subset, preserving column structure.
  Dataset select_rows(const std::vector<std::size_t>& rows) const {
    Dataset d;
    d.n_rows = rows.size();
    d.n_cols = n_cols;
    d.x.reserve(d.n_rows * n_cols);
    d.y.reserve(d.n_rows);
    d.feature_names = feature_names;
    for (std::size_t r : rows) {
      d.x.insert(d.x.end(), x.begin() + static_cast<std::ptrdiff_t>(r * n_cols),
                 x.begin() + static_cast<std::ptrdiff_t>((r + 1) * n_cols));
      d.y.push_back(y[r]);
      if (!w.empty()) d.w.push_back(w[r]);
      if (!row_ids.empty()) d.row_ids.push_back(row_ids[r]);
    }
    return d;
  }
};

}  // namespace cdrtarget::learn

#include "cdrtarget/wealth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cdrtarget::wealth {

namespace {

// Full cyclic Jacobi sweep eigen-solver for small symmetric matrices.
// Deterministic; converges quadratically. n here is at most kNumAssets.
void jacobi_eigen(std::vector<double> a, int n, std::vector<double>& eigenvalues,
                  std::vector<double>& vectors /* row-major, rows = eigenvectors */) {
  vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) vectors[static_cast<std::size_t>(i) * n + i] = 1.0;

  auto at = [&](int r, int c) -> double& { return a[static_cast<std::size_t>(r) * n + c]; };
  auto vt = [&](int r, int c) -> double& {
    return vectors[static_cast<std::size_t>(r) * n + c];
  };

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    if (off < 1e-26) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = vt(p, k);
          const double vkq = vt(q, k);
          vt(p, k) = c * vkp - s * vkq;
          vt(q, k) = s * vkp + c * vkq;
        }
      }
    }
  }
  eigenvalues.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eigenvalues[static_cast<std::size_t>(i)] = at(i, i);
}

}  // namespace

void largest_eigenpair(const std::vector<double>& matrix, int n, double& eigenvalue,
                       std::vector<double>& eigenvector) {
  std::vector<double> evals;
  std::vector<double> vecs;
  jacobi_eigen(matrix, n, evals, vecs);
  int best = 0;
  for (int i = 1; i < n; ++i)
    if (evals[static_cast<std::size_t>(i)] > evals[static_cast<std::size_t>(best)]) best = i;
  eigenvalue = evals[static_cast<std::size_t>(best)];
  eigenvector.assign(vecs.begin() + static_cast<std::ptrdiff_t>(best) * n,
                     vecs.begin() + static_cast<std::ptrdiff_t>(best + 1) * n);
  double norm = 0.0;
  for (double v : eigenvector) norm += v * v;
  norm = std::sqrt(norm);
  for (double& v : eigenvector) v /= norm;
}

AssetIndexModel fit_asset_index(const std::vector<Household>& households) {
  std::vector<const Household*> complete;
  for (const auto& h : households)
    if (h.assets_complete()) complete.push_back(&h);

  const int p = kNumAssets;
  const std::size_t n = complete.size();
  if (n < static_cast<std::size_t>(p)) {
    throw std::runtime_error(
        "asset index fit is ill-conditioned: " + std::to_string(n) +
        " complete-asset households for " + std::to_string(p) + " assets");
  }

  AssetIndexModel m;
  m.means.assign(p, 0.0);
  m.sds.assign(p, 0.0);
  for (const auto* h : complete)
    for (int j = 0; j < p; ++j) m.means[static_cast<std::size_t>(j)] += h->assets[static_cast<std::size_t>(j)];
  for (int j = 0; j < p; ++j) m.means[static_cast<std::size_t>(j)] /= static_cast<double>(n);
  for (const auto* h : complete)
    for (int j = 0; j < p; ++j) {
      const double d = h->assets[static_cast<std::size_t>(j)] - m.means[static_cast<std::size_t>(j)];
      m.sds[static_cast<std::size_t>(j)] += d * d;
    }
  for (int j = 0; j < p; ++j)
    m.sds[static_cast<std::size_t>(j)] =
        std::sqrt(m.sds[static_cast<std::size_t>(j)] / static_cast<double>(n - 1));

  std::vector<int> kept;
  for (int j = 0; j < p; ++j) {
    if (m.sds[static_cast<std::size_t>(j)] > 0.0) {
      kept.push_back(j);
    } else {
      m.dropped.push_back(j);
    }
  }
  const int k = static_cast<int>(kept.size());
  if (k == 0) throw std::runtime_error("asset index fit: all assets have zero variance");

  // Correlation matrix of the kept assets.
  std::vector<double> corr(static_cast<std::size_t>(k) * k, 0.0);
  std::vector<double> z(n * static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < n; ++i)
    for (int jj = 0; jj < k; ++jj) {
      const int j = kept[static_cast<std::size_t>(jj)];
      z[i * static_cast<std::size_t>(k) + static_cast<std::size_t>(jj)] =
          (complete[i]->assets[static_cast<std::size_t>(j)] - m.means[static_cast<std::size_t>(j)]) /
          m.sds[static_cast<std::size_t>(j)];
    }
  for (int aa = 0; aa < k; ++aa)
    for (int bb = aa; bb < k; ++bb) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        s += z[i * static_cast<std::size_t>(k) + static_cast<std::size_t>(aa)] *
             z[i * static_cast<std::size_t>(k) + static_cast<std::size_t>(bb)];
      s /= static_cast<double>(n - 1);
      corr[static_cast<std::size_t>(aa) * k + static_cast<std::size_t>(bb)] = s;
      corr[static_cast<std::size_t>(bb) * k + static_cast<std::size_t>(aa)] = s;
    }

  double lambda = 0.0;
  std::vector<double> v;
  largest_eigenpair(corr, k, lambda, v);

  m.loadings.assign(p, 0.0);
  for (int jj = 0; jj < k; ++jj)
    m.loadings[static_cast<std::size_t>(kept[static_cast<std::size_t>(jj)])] =
        v[static_cast<std::size_t>(jj)];

  double load_sum = 0.0;
  for (double l : m.loadings) load_sum += l;
  m.orientation_sign = load_sum < 0.0 ? -1 : 1;
  if (m.orientation_sign < 0)
    for (double& l : m.loadings) l = -l;

  m.explained_variance_ratio = lambda / static_cast<double>(k);
  return m;
}

std::optional<double> score_assets(const AssetIndexModel& model, const Household& h) {
  if (!h.assets_complete()) return std::nullopt;
  double score = 0.0;
  for (int j = 0; j < kNumAssets; ++j) {
    const auto sj = static_cast<std::size_t>(j);
    if (model.sds[sj] <= 0.0) continue;  // dropped asset, loading 0
    score += model.loadings[sj] * (h.assets[sj] - model.means[sj]) / model.sds[sj];
  }
  return score;
}

std::optional<double> log_consumption(const Household& h) {
  if (!h.consumption_pc_monthly || *h.consumption_pc_monthly <= 0.0) return std::nullopt;
  return std::log(*h.consumption_pc_monthly);
}

bool ultra_poor_rule(bool cwr_extreme_poor, const std::array<bool, kNumCriteria>& criteria) {
  if (!cwr_extreme_poor) return false;
  int met = 0;
  for (bool c : criteria) met += c ? 1 : 0;
  return met >= 3;
}

nlohmann::json AssetIndexModel::to_json() const {
  nlohmann::json j;
  j["means"] = means;
  j["sds"] = sds;
  j["loadings"] = loadings;
  j["dropped"] = dropped;
  j["explained_variance_ratio"] = explained_variance_ratio;
  j["orientation_sign"] = orientation_sign;
  return j;
}

AssetIndexModel AssetIndexModel::from_json(const nlohmann::json& j) {
  AssetIndexModel m;
  m.means = j.at("means").get<std::vector<double>>();
  m.sds = j.at("sds").get<std::vector<double>>();
  m.loadings = j.at("loadings").get<std::vector<double>>();
  m.dropped = j.at("dropped").get<std::vector<int>>();
  m.explained_variance_ratio = j.at("explained_variance_ratio").get<double>();
  m.orientation_sign = j.at("orientation_sign").get<int>();
  return m;
}

}  // namespace cdrtarget::wealth

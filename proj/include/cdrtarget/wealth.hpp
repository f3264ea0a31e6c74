#pragma once

// Survey-derived wellbeing measures: the asset index (first principal
// component of standardized asset ownership), log per-capita consumption,
// and the deterministic ultra-poor eligibility rule.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdrtarget/types.hpp"

namespace cdrtarget::wealth {

struct AssetIndexModel {
  std::vector<double> means;     // per asset, over the fitting population
  std::vector<double> sds;       // sample (n-1) standard deviations
  std::vector<double> loadings;  // unit Euclidean norm; 0 for dropped assets
  std::vector<int> dropped;      // zero-variance asset indices
  double explained_variance_ratio = 0.0;
  int orientation_sign = 1;  // applied flip: loadings stored post-orientation

  nlohmann::json to_json() const;
  static AssetIndexModel from_json(const nlohmann::json& j);
};

// Fits the first principal component of the asset correlation matrix over
// households with complete asset data. Zero-variance assets are dropped
// (loading 0) and listed in `dropped`. Orientation: loadings are flipped if
// their sum is negative, so the wealthiest-by-index household is stable
// across runs. Throws if there are fewer complete households than assets.
AssetIndexModel fit_asset_index(const std::vector<Household>& households);

// Standardized assets dotted with the oriented loadings.
// Returns nullopt for households with incomplete assets.
std::optional<double> score_assets(const AssetIndexModel& model, const Household& h);

// Natural log of per-capita monthly consumption; nullopt when absent or <= 0.
std::optional<double> log_consumption(const Household& h);

// True iff flagged extreme-poor in the community wealth ranking AND meeting
// at least three of the six deprivation criteria.
bool ultra_poor_rule(bool cwr_extreme_poor, const std::array<bool, kNumCriteria>& criteria);

// Symmetric eigen-decomposition helper used by the index fit: largest
// eigenpair of a dense symmetric matrix via cyclic Jacobi rotations.
// Exposed for reuse; `matrix` is row-major n x n.
void largest_eigenpair(const std::vector<double>& matrix, int n,
                       double& eigenvalue, std::vector<double>& eigenvector);

}  // namespace cdrtarget::wealth

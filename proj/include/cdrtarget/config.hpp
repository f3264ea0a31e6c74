#pragma once

// Run configuration: one JSON document drives the whole pipeline. The seed is
// mandatory; nothing in the system falls back to wall-clock randomness.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cdrtarget {

// Local-time classification of events. Day is [day_start_hour, day_end_hour)
// in local time; weekend is a set of weekdays (0 = Sunday .. 6 = Saturday).
struct TimePolicy {
  int tz_offset_s = 16200;  // UTC+04:30
  int day_start_hour = 7;
  int day_end_hour = 19;
  std::array<bool, 7> weekend{true, false, false, false, false, false, true};

  bool is_day(std::int64_t utc_ts) const {
    const std::int64_t local = utc_ts + tz_offset_s;
    const std::int64_t sec_of_day = ((local % 86400) + 86400) % 86400;
    const int hour = static_cast<int>(sec_of_day / 3600);
    return hour >= day_start_hour && hour < day_end_hour;
  }

  bool is_weekend(std::int64_t utc_ts) const {
    return weekend[static_cast<std::size_t>(day_of_week(utc_ts))];
  }

  // 0 = Sunday .. 6 = Saturday, in local time.
  int day_of_week(std::int64_t utc_ts) const {
    const std::int64_t day = local_day_index(utc_ts);
    return static_cast<int>(((day + 4) % 7 + 7) % 7);
  }

  // Days since 1970-01-01 in local time; identifies the local calendar day.
  std::int64_t local_day_index(std::int64_t utc_ts) const {
    const std::int64_t local = utc_ts + tz_offset_s;
    return local >= 0 ? local / 86400 : (local - 86399) / 86400;
  }
};

struct EventRateConfig {
  double base_per_day = 1.0;   // events/day at latent wealth 0
  double wealth_log_slope = 0.0;  // rate multiplier exp(slope * wealth)
};

// Knobs for the synthetic population + CDR generator. Distributional forms
// are artifact choices; latent wealth is standard normal plus a village
// effect, and every wealth-dependent quantity goes through a logistic or a
// log-linear rate in that latent value.
struct GeneratorConfig {
  int n_villages = 80;
  int households_per_village = 260;

  double wealth_mean = 0.0;
  double wealth_sd = 1.0;
  double village_effect_sd = 0.35;

  std::array<double, 16> asset_loadings{0.9, 0.7,  1.1, 0.5, 0.8, 1.0, 0.6, 0.4,
                                        1.2, 0.75, 0.3, 0.95, 0.55, 0.85, 0.45, 0.65};
  double asset_missing_rate = 0.021;  // applied to unmatched phone owners only
  double consumption_log_base = 8.0;
  double consumption_wealth_slope = 0.35;
  double consumption_noise_sd = 0.45;
  double consumption_missing_rate = 0.012;

  double phone_intercept = 1.75;
  double phone_wealth_slope = 0.9;
  double multi_phone_rate = 0.12;
  double head_phone_share = 0.88;
  double operator_intercept = -1.15;  // per-phone, logistic in wealth
  double operator_wealth_slope = 0.45;

  double cwr_village_quantile = 0.43;
  std::array<double, 6> criteria_intercepts{-2.05, -2.05, -2.05, -2.05, -2.05, -2.05};
  std::array<double, 6> criteria_wealth_slopes{1.0, 1.0, 1.0, 1.0, 1.0, 1.0};
  int survey_nonup_per_village = 20;

  EventRateConfig calls{3.25, 0.32};
  EventRateConfig texts{3.20, 0.30};
  EventRateConfig recharges{0.135, 0.18};
  double outgoing_share = 0.52;
  double call_duration_mu = 3.6;
  double call_duration_sigma = 1.0;
  double call_duration_wealth_slope = 0.18;
  double contact_pool_base = 14.0;
  double contact_pool_slope = 0.45;
  int towers_per_village = 8;
  double tower_scatter_deg = 0.045;
  double mobility_base = 2.2;   // mean towers used beyond the home tower
  double mobility_slope = 0.5;
  double recharge_amount_mu = 4.9;
  double recharge_amount_sigma = 0.6;
  double recharge_amount_slope = 0.3;

  std::int64_t window_start = 1446336000;  // 2015-11-01T00:00:00Z
  std::int64_t window_end = 1462060800;    // 2016-05-01T00:00:00Z
};

struct PathsConfig {
  std::string calls = "calls.csv";
  std::string texts = "texts.csv";
  std::string recharges = "recharges.csv";
  std::string towers = "towers.csv";
  std::string survey = "survey.csv";
  std::string output_dir = "out";
};

struct SampleTargets {
  double phone_owner_share = 0.84;  // balanced-sample reweighting target
  std::map<std::string, double> quota_override;  // per sample name, optional
};

struct ModelConfig {
  std::string family = "gradient_boosting";
  std::string target = "ultra_poor";
  int outer_folds = 10;
  int inner_folds = 5;
  std::string grid_profile = "fast";  // "fast" or "full"
  std::map<std::string, std::vector<double>> grid_override;
  bool use_sample_weights = false;
};

struct RunConfig {
  std::uint64_t seed = 1;
  TimePolicy time;
  PathsConfig paths;
  SampleTargets sample;
  ModelConfig model;
  GeneratorConfig generator;
  int bootstrap_b = 1000;
  int ordering_draws = 100;
  int workers = 0;  // 0 = hardware concurrency
  bool two_way_combined = false;

  nlohmann::json to_json() const;
  static RunConfig from_json(const nlohmann::json& j);

  // Loads from a JSON file; `seed` must be present.
  static RunConfig load(const std::string& path);
  void save(const std::string& path) const;

  // FNV-1a hash of the canonical JSON dump; stamped into every manifest.
  std::string hash() const;
};

}  // namespace cdrtarget

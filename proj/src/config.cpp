#include "cdrtarget/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "cdrtarget/rng.hpp"

namespace cdrtarget {

namespace {

const char* kWeekdayNames[7] = {"sun", "mon", "tue", "wed", "thu", "fri", "sat"};

int weekday_from_name(const std::string& name) {
  std::string low;
  for (char c : name) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (low.size() > 3) low = low.substr(0, 3);
  for (int i = 0; i < 7; ++i)
    if (low == kWeekdayNames[i]) return i;
  throw std::runtime_error("unknown weekday name: " + name);
}

template <std::size_t N>
void array_from_json(const nlohmann::json& j, std::array<double, N>& out) {
  if (!j.is_array() || j.size() != N) {
    throw std::runtime_error("expected array of length " + std::to_string(N));
  }
  for (std::size_t i = 0; i < N; ++i) out[i] = j[i].get<double>();
}

template <typename T>
void get_if(const nlohmann::json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["seed"] = seed;

  nlohmann::json jt;
  jt["tz_offset_s"] = time.tz_offset_s;
  jt["day_start_hour"] = time.day_start_hour;
  jt["day_end_hour"] = time.day_end_hour;
  nlohmann::json wk = nlohmann::json::array();
  for (int i = 0; i < 7; ++i)
    if (time.weekend[static_cast<std::size_t>(i)]) wk.push_back(kWeekdayNames[i]);
  jt["weekend_days"] = wk;
  j["time"] = jt;

  nlohmann::json jp;
  jp["calls"] = paths.calls;
  jp["texts"] = paths.texts;
  jp["recharges"] = paths.recharges;
  jp["towers"] = paths.towers;
  jp["survey"] = paths.survey;
  jp["output_dir"] = paths.output_dir;
  j["paths"] = jp;

  nlohmann::json js;
  js["phone_owner_share"] = sample.phone_owner_share;
  js["quota_override"] = sample.quota_override;
  j["sample"] = js;

  nlohmann::json jm;
  jm["family"] = model.family;
  jm["target"] = model.target;
  jm["outer_folds"] = model.outer_folds;
  jm["inner_folds"] = model.inner_folds;
  jm["grid_profile"] = model.grid_profile;
  jm["grid_override"] = model.grid_override;
  jm["use_sample_weights"] = model.use_sample_weights;
  j["model"] = jm;

  const GeneratorConfig& g = generator;
  nlohmann::json jg;
  jg["n_villages"] = g.n_villages;
  jg["households_per_village"] = g.households_per_village;
  jg["wealth_mean"] = g.wealth_mean;
  jg["wealth_sd"] = g.wealth_sd;
  jg["village_effect_sd"] = g.village_effect_sd;
  jg["asset_loadings"] = g.asset_loadings;
  jg["asset_missing_rate"] = g.asset_missing_rate;
  jg["consumption_log_base"] = g.consumption_log_base;
  jg["consumption_wealth_slope"] = g.consumption_wealth_slope;
  jg["consumption_noise_sd"] = g.consumption_noise_sd;
  jg["consumption_missing_rate"] = g.consumption_missing_rate;
  jg["phone_intercept"] = g.phone_intercept;
  jg["phone_wealth_slope"] = g.phone_wealth_slope;
  jg["multi_phone_rate"] = g.multi_phone_rate;
  jg["head_phone_share"] = g.head_phone_share;
  jg["operator_intercept"] = g.operator_intercept;
  jg["operator_wealth_slope"] = g.operator_wealth_slope;
  jg["cwr_village_quantile"] = g.cwr_village_quantile;
  jg["criteria_intercepts"] = g.criteria_intercepts;
  jg["criteria_wealth_slopes"] = g.criteria_wealth_slopes;
  jg["survey_nonup_per_village"] = g.survey_nonup_per_village;
  jg["calls"] = {{"base_per_day", g.calls.base_per_day},
                 {"wealth_log_slope", g.calls.wealth_log_slope}};
  jg["texts"] = {{"base_per_day", g.texts.base_per_day},
                 {"wealth_log_slope", g.texts.wealth_log_slope}};
  jg["recharges"] = {{"base_per_day", g.recharges.base_per_day},
                     {"wealth_log_slope", g.recharges.wealth_log_slope}};
  jg["outgoing_share"] = g.outgoing_share;
  jg["call_duration_mu"] = g.call_duration_mu;
  jg["call_duration_sigma"] = g.call_duration_sigma;
  jg["call_duration_wealth_slope"] = g.call_duration_wealth_slope;
  jg["contact_pool_base"] = g.contact_pool_base;
  jg["contact_pool_slope"] = g.contact_pool_slope;
  jg["towers_per_village"] = g.towers_per_village;
  jg["tower_scatter_deg"] = g.tower_scatter_deg;
  jg["mobility_base"] = g.mobility_base;
  jg["mobility_slope"] = g.mobility_slope;
  jg["recharge_amount_mu"] = g.recharge_amount_mu;
  jg["recharge_amount_sigma"] = g.recharge_amount_sigma;
  jg["recharge_amount_slope"] = g.recharge_amount_slope;
  jg["window_start"] = g.window_start;
  jg["window_end"] = g.window_end;
  j["generator"] = jg;

  j["bootstrap_b"] = bootstrap_b;
  j["ordering_draws"] = ordering_draws;
  j["workers"] = workers;
  j["two_way_combined"] = two_way_combined;
  return j;
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  RunConfig c;
  if (!j.contains("seed")) {
    throw std::runtime_error("config error: \"seed\" is mandatory");
  }
  c.seed = j.at("seed").get<std::uint64_t>();

  if (j.contains("time")) {
    const auto& jt = j.at("time");
    get_if(jt, "tz_offset_s", c.time.tz_offset_s);
    get_if(jt, "day_start_hour", c.time.day_start_hour);
    get_if(jt, "day_end_hour", c.time.day_end_hour);
    if (jt.contains("weekend_days")) {
      c.time.weekend.fill(false);
      for (const auto& d : jt.at("weekend_days")) {
        if (d.is_string()) {
          c.time.weekend[static_cast<std::size_t>(weekday_from_name(d.get<std::string>()))] = true;
        } else {
          c.time.weekend.at(d.get<std::size_t>()) = true;
        }
      }
    }
  }

  if (j.contains("paths")) {
    const auto& jp = j.at("paths");
    get_if(jp, "calls", c.paths.calls);
    get_if(jp, "texts", c.paths.texts);
    get_if(jp, "recharges", c.paths.recharges);
    get_if(jp, "towers", c.paths.towers);
    get_if(jp, "survey", c.paths.survey);
    get_if(jp, "output_dir", c.paths.output_dir);
  }

  if (j.contains("sample")) {
    const auto& js = j.at("sample");
    get_if(js, "phone_owner_share", c.sample.phone_owner_share);
    if (js.contains("quota_override"))
      c.sample.quota_override =
          js.at("quota_override").get<std::map<std::string, double>>();
  }

  if (j.contains("model")) {
    const auto& jm = j.at("model");
    get_if(jm, "family", c.model.family);
    get_if(jm, "target", c.model.target);
    get_if(jm, "outer_folds", c.model.outer_folds);
    get_if(jm, "inner_folds", c.model.inner_folds);
    get_if(jm, "grid_profile", c.model.grid_profile);
    get_if(jm, "use_sample_weights", c.model.use_sample_weights);
    if (jm.contains("grid_override"))
      c.model.grid_override =
          jm.at("grid_override").get<std::map<std::string, std::vector<double>>>();
  }

  if (j.contains("generator")) {
    const auto& jg = j.at("generator");
    GeneratorConfig& g = c.generator;
    get_if(jg, "n_villages", g.n_villages);
    get_if(jg, "households_per_village", g.households_per_village);
    get_if(jg, "wealth_mean", g.wealth_mean);
    get_if(jg, "wealth_sd", g.wealth_sd);
    get_if(jg, "village_effect_sd", g.village_effect_sd);
    if (jg.contains("asset_loadings")) array_from_json(jg.at("asset_loadings"), g.asset_loadings);
    get_if(jg, "asset_missing_rate", g.asset_missing_rate);
    get_if(jg, "consumption_log_base", g.consumption_log_base);
    get_if(jg, "consumption_wealth_slope", g.consumption_wealth_slope);
    get_if(jg, "consumption_noise_sd", g.consumption_noise_sd);
    get_if(jg, "consumption_missing_rate", g.consumption_missing_rate);
    get_if(jg, "phone_intercept", g.phone_intercept);
    get_if(jg, "phone_wealth_slope", g.phone_wealth_slope);
    get_if(jg, "multi_phone_rate", g.multi_phone_rate);
    get_if(jg, "head_phone_share", g.head_phone_share);
    get_if(jg, "operator_intercept", g.operator_intercept);
    get_if(jg, "operator_wealth_slope", g.operator_wealth_slope);
    get_if(jg, "cwr_village_quantile", g.cwr_village_quantile);
    if (jg.contains("criteria_intercepts"))
      array_from_json(jg.at("criteria_intercepts"), g.criteria_intercepts);
    if (jg.contains("criteria_wealth_slopes"))
      array_from_json(jg.at("criteria_wealth_slopes"), g.criteria_wealth_slopes);
    get_if(jg, "survey_nonup_per_village", g.survey_nonup_per_village);
    auto rate = [&](const char* key, EventRateConfig& r) {
      if (jg.contains(key)) {
        get_if(jg.at(key), "base_per_day", r.base_per_day);
        get_if(jg.at(key), "wealth_log_slope", r.wealth_log_slope);
      }
    };
    rate("calls", g.calls);
    rate("texts", g.texts);
    rate("recharges", g.recharges);
    get_if(jg, "outgoing_share", g.outgoing_share);
    get_if(jg, "call_duration_mu", g.call_duration_mu);
    get_if(jg, "call_duration_sigma", g.call_duration_sigma);
    get_if(jg, "call_duration_wealth_slope", g.call_duration_wealth_slope);
    get_if(jg, "contact_pool_base", g.contact_pool_base);
    get_if(jg, "contact_pool_slope", g.contact_pool_slope);
    get_if(jg, "towers_per_village", g.towers_per_village);
    get_if(jg, "tower_scatter_deg", g.tower_scatter_deg);
    get_if(jg, "mobility_base", g.mobility_base);
    get_if(jg, "mobility_slope", g.mobility_slope);
    get_if(jg, "recharge_amount_mu", g.recharge_amount_mu);
    get_if(jg, "recharge_amount_sigma", g.recharge_amount_sigma);
    get_if(jg, "recharge_amount_slope", g.recharge_amount_slope);
    get_if(jg, "window_start", g.window_start);
    get_if(jg, "window_end", g.window_end);
    if (g.window_start >= g.window_end)
      throw std::runtime_error("config error: generator window_start must precede window_end");
  }

  get_if(j, "bootstrap_b", c.bootstrap_b);
  get_if(j, "ordering_draws", c.ordering_draws);
  get_if(j, "workers", c.workers);
  get_if(j, "two_way_combined", c.two_way_combined);
  return c;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in.is_open()) throw std::runtime_error("cannot open config: " + path);
  nlohmann::json j;
  in >> j;
  return from_json(j);
}

void RunConfig::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out.is_open()) throw std::runtime_error("cannot write config: " + path);
  out << to_json().dump(2) << "\n";
}

std::string RunConfig::hash() const {
  const std::string dump = to_json().dump();
  const std::uint64_t h = fnv1a64(dump);
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace cdrtarget

#include "cdrtarget/costmodel.hpp"

#include <cmath>
#include <stdexcept>

#include "cdrtarget/csv.hpp"

namespace cdrtarget::costmodel {

long estimate_screened(long beneficiaries, long ref_eligible, long ref_screened) {
  if (ref_eligible <= 0) throw std::invalid_argument("ref_eligible must be positive");
  const double screened = static_cast<double>(beneficiaries) *
                          static_cast<double>(ref_screened) /
                          static_cast<double>(ref_eligible);
  return std::lround(screened);
}

double targeting_cost(long screened, double per_household_cost) {
  return static_cast<double>(screened) * per_household_cost;
}

double budget_share(double cost, long beneficiaries, double benefit_each) {
  const double total = static_cast<double>(beneficiaries) * benefit_each;
  if (total <= 0.0) throw std::invalid_argument("total benefits must be positive");
  return cost / total;
}

long round_dollars(double amount) { return std::lround(amount); }

double percent_2dp(double fraction) {
  return std::round(fraction * 10000.0) / 100.0;
}

CostTable build_cost_table(const CostParams& params) {
  CostTable t;
  t.params = params;
  t.screened = estimate_screened(params.beneficiaries, params.ref_eligible,
                                 params.ref_screened);
  t.total_benefits =
      static_cast<double>(params.beneficiaries) * params.benefit_per_household;

  auto add = [&](const std::string& method, double unit_cost, bool lower_bound) {
    CostRow r;
    r.method = method;
    r.per_household_cost = unit_cost;
    r.cost_is_lower_bound = lower_bound;
    r.screened = t.screened;
    r.total_cost = targeting_cost(t.screened, unit_cost);
    r.budget_share_fraction =
        budget_share(r.total_cost, params.beneficiaries, params.benefit_per_household);
    t.rows.push_back(r);
  };
  add("cbt", params.cbt_cost_per_household, false);
  add("pmt", params.pmt_cost_per_household, false);
  // No published unit cost exists for consumption-based targeting; it is
  // reported as a lower bound at the PMT unit cost.
  add("consumption", params.pmt_cost_per_household, true);
  add("cdr", params.cdr_cost_per_household, false);
  return t;
}

nlohmann::json CostTable::to_json() const {
  nlohmann::json j;
  j["screened_households"] = screened;
  j["beneficiaries"] = params.beneficiaries;
  j["benefit_per_household"] = params.benefit_per_household;
  j["total_benefits"] = total_benefits;
  nlohmann::json rows_j = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json rj;
    rj["method"] = r.method;
    rj["per_household_cost"] = r.per_household_cost;
    rj["cost_is_lower_bound"] = r.cost_is_lower_bound;
    rj["total_cost"] = r.total_cost;
    rj["total_cost_dollars"] = round_dollars(r.total_cost);
    rj["budget_share"] = r.budget_share_fraction;
    rj["budget_share_percent"] = percent_2dp(r.budget_share_fraction);
    rows_j.push_back(rj);
  }
  j["rows"] = rows_j;
  return j;
}

std::vector<std::vector<std::string>> CostTable::to_csv_rows() const {
  std::vector<std::vector<std::string>> out;
  out.push_back({"method", "per_household_cost", "lower_bound", "screened",
                 "total_cost_dollars", "budget_share_percent"});
  for (const auto& r : rows) {
    out.push_back({r.method, format_double(r.per_household_cost),
                   r.cost_is_lower_bound ? "1" : "0", format_int(r.screened),
                   format_int(round_dollars(r.total_cost)),
                   format_double(percent_2dp(r.budget_share_fraction))});
  }
  return out;
}

}  // namespace cdrtarget::costmodel

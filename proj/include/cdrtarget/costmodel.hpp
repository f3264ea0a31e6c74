#pragma once

// Targeting cost and budget-share arithmetic for counterfactual screening
// methods. Internal arithmetic is exact in doubles; display rounding is
// dollars to the nearest integer and percent to two decimals.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace cdrtarget::costmodel {

struct CostParams {
  double cbt_cost_per_household = 2.20;
  double pmt_cost_per_household = 4.00;
  double cdr_cost_per_household = 0.00;
  long beneficiaries = 7500;
  double benefit_per_household = 1688.0;
  long ref_eligible = 1235;   // eligible households at the reference site
  long ref_screened = 20702;  // households screened at the reference site
};

// Scales the reference screening yield to the full program:
// round(beneficiaries * ref_screened / ref_eligible).
long estimate_screened(long beneficiaries, long ref_eligible, long ref_screened);

double targeting_cost(long screened, double per_household_cost);

// Cost as a fraction of total program benefits.
double budget_share(double cost, long beneficiaries, double benefit_each);

long round_dollars(double amount);
// Two-decimal percent, e.g. 2.18 for 0.021847.
double percent_2dp(double fraction);

struct CostRow {
  std::string method;
  double per_household_cost = 0.0;
  bool cost_is_lower_bound = false;  // consumption: ">= PMT", never a point estimate
  long screened = 0;
  double total_cost = 0.0;
  double budget_share_fraction = 0.0;
};

struct CostTable {
  CostParams params;
  long screened = 0;
  double total_benefits = 0.0;
  std::vector<CostRow> rows;  // cbt, pmt, consumption (lower bound), cdr

  nlohmann::json to_json() const;
  std::vector<std::vector<std::string>> to_csv_rows() const;  // incl. header
};

CostTable build_cost_table(const CostParams& params);

}  // namespace cdrtarget::costmodel

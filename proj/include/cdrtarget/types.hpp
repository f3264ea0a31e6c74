#pragma once

// Core domain records shared across the pipeline. All types are immutable
// value types once constructed and safe to share across threads.

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace cdrtarget {

inline constexpr int kNumAssets = 16;
inline constexpr int kNumCriteria = 6;

enum class EventKind { Call, Text, Recharge };
enum class Direction { Incoming, Outgoing, NotApplicable };

const char* to_string(EventKind k);
const char* to_string(Direction d);

// One call, text, or recharge attributed to a subscriber.
// duration_s is present iff kind == Call; amount iff kind == Recharge;
// direction == NotApplicable iff kind == Recharge.
struct CdrEvent {
  std::string subscriber_id;
  EventKind kind = EventKind::Call;
  Direction direction = Direction::Outgoing;
  std::string counterpart_id;  // empty for recharges
  std::int64_t timestamp = 0;  // UTC epoch seconds
  std::optional<double> duration_s;
  std::string tower_id;  // empty when unknown
  std::optional<double> tower_lat;
  std::optional<double> tower_lon;
  std::optional<double> amount;
};

// Orders events deterministically: (timestamp, kind, direction, counterpart,
// tower, duration, amount). Used everywhere an event stream is canonicalized.
bool event_before(const CdrEvent& a, const CdrEvent& b);

struct Household {
  std::string household_id;
  std::string village_id;
  std::vector<double> assets;  // kNumAssets entries; NaN = not reported
  std::optional<double> consumption_pc_monthly;
  std::vector<std::string> phone_numbers;
  std::optional<std::string> head_phone;
  bool cwr_extreme_poor = false;
  std::array<bool, kNumCriteria> criteria{};
  bool ultra_poor = false;
  double sample_weight = 1.0;
  std::optional<double> food_security;
  std::optional<double> financial_inclusion;
  std::optional<double> psych_wellbeing;

  bool assets_complete() const {
    if (assets.size() != static_cast<std::size_t>(kNumAssets)) return false;
    for (double a : assets)
      if (std::isnan(a)) return false;
    return true;
  }

  int criteria_met() const {
    int n = 0;
    for (bool c : criteria) n += c ? 1 : 0;
    return n;
  }

  bool owns_phone() const { return !phone_numbers.empty(); }
};

enum class MatchRule { Head, RandomMember };

struct MatchedRecord {
  std::string household_id;
  std::string subscriber_id;
  MatchRule rule = MatchRule::Head;
};

enum class SampleKind { Matched, Balanced, Full };

const char* to_string(SampleKind k);

// A named evaluation sample: member households, the effective per-household
// weights used for its metrics, and the quota implied by its ultra-poor share.
struct SampleDefinition {
  SampleKind kind = SampleKind::Matched;
  std::string name;
  std::vector<std::string> household_ids;  // sorted ascending
  std::unordered_map<std::string, double> weight;
  bool use_weights = false;
  double quota_fraction = 0.0;
  std::string reweighting;  // rule identifier, e.g. "nophone-share-0.84"
};

}  // namespace cdrtarget

#include "cdrtarget/types.hpp"

namespace cdrtarget {

const char* to_string(EventKind k) {
  switch (k) {
    case EventKind::Call: return "call";
    case EventKind::Text: return "text";
    case EventKind::Recharge: return "recharge";
  }
  return "?";
}

const char* to_string(Direction d) {
  switch (d) {
    case Direction::Incoming: return "in";
    case Direction::Outgoing: return "out";
    case Direction::NotApplicable: return "na";
  }
  return "?";
}

const char* to_string(SampleKind k) {
  switch (k) {
    case SampleKind::Matched: return "matched";
    case SampleKind::Balanced: return "balanced";
    case SampleKind::Full: return "full";
  }
  return "?";
}

bool event_before(const CdrEvent& a, const CdrEvent& b) {
  if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  if (a.direction != b.direction)
    return static_cast<int>(a.direction) < static_cast<int>(b.direction);
  if (a.counterpart_id != b.counterpart_id)
    return a.counterpart_id < b.counterpart_id;
  if (a.tower_id != b.tower_id) return a.tower_id < b.tower_id;
  const double da = a.duration_s.value_or(-1.0);
  const double db = b.duration_s.value_or(-1.0);
  if (da != db) return da < db;
  return a.amount.value_or(-1.0) < b.amount.value_or(-1.0);
}

}  // namespace cdrtarget

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ahyp/cones.hpp"

namespace ahyp {

enum class Verdict {
  NoInfiniteDiscontinuous,    // (A) equal real ranks
  NoNonVirtuallyAbelian,      // (B) equal a-hyperbolic ranks
  AdmitsNonVirtuallyAbelian,  // (C) a-hyp rank of G exceeds real rank of H
  Undetermined,
};

std::string verdict_name(Verdict v);
std::optional<Verdict> parse_verdict(const std::string& name);

struct TraceEntry {
  std::string condition;  // "A", "B" or "C"
  int lhs;
  std::string op;  // "==" or ">"
  int rhs;
  bool holds;

  bool operator==(const TraceEntry&) const = default;
};

struct Decision {
  Verdict verdict;
  std::vector<TraceEntry> trace;

  /// Condition that fired, empty for Undetermined.
  std::string condition() const;
};

/// Checks (A), (B), (C) in order and stops at the first that holds. Throws
/// NotASubgroupPair when h exceeds g in either rank.
Decision decide(const RankProfile& g, const RankProfile& h);

struct Obstruction {
  bool obstructed = false;
  std::vector<std::string> witnesses;  // failing inequalities
};

/// A closed reductive subgroup cannot exceed G in real or a-hyperbolic rank.
Obstruction embed_obstruction(const RankProfile& g, const RankProfile& h);

nlohmann::json to_json(const Decision& d);
nlohmann::json to_json(const Obstruction& o);

}  // namespace ahyp

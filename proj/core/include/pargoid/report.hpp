#pragma once

#include <nlohmann/json.hpp>

#include "pargoid/abstraction.hpp"
#include "pargoid/divergence.hpp"
#include "pargoid/model.hpp"

namespace pargoid {

/// {law, instances, true, false, unknown, counterexamples: [{instance, lhs, rhs}]}
nlohmann::json toJson(const LawReport& r);
/// {candidate, eliminatedBy, instance, status, detail}
nlohmann::json toJson(const SweepEntry& e);
nlohmann::json toJson(const CompletenessReport& r);
/// {kind, start, steps: [{position, rule, result}], ...}
nlohmann::json toJson(const Certificate& c);

std::string describe(const LawReport& r);

} // namespace pargoid

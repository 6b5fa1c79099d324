#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pargoid/abstraction.hpp"

namespace pargoid {

struct Claim {
    std::string statement;
    Truth3 holds = Truth3::Unknown;
    std::string detail;
};

struct CounterexampleReport {
    std::vector<Claim> claims;
    std::vector<LawReport> nPrimeLaws;
    SweepReport sweep;

    bool allConfirmed() const;
};

struct CounterexampleConfig {
    Budget budget{};
    std::size_t sizeBound = 7;
    std::size_t samples = 200;
    std::uint64_t seed = 1;
};

/// Builds omega and d, checks L-memberships, left-passivity certificates,
/// the laws on N' and the bounded search for s-like elements of N'.
CounterexampleReport runCounterexample(const CounterexampleConfig& config);

nlohmann::json toJson(const CounterexampleReport& r);
std::string describe(const CounterexampleReport& r);

} // namespace pargoid

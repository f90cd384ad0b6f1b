#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "slopelab/blowup.hpp"
#include "slopelab/monomial.hpp"
#include "slopelab/nearby.hpp"

namespace slopelab {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_violation = 2 };

/// Result of a subcommand in both output forms. The JSON carries
/// "schema": "1" and the command name at top level.
struct CommandResult {
    int exit_code = exit_ok;
    nlohmann::json json;
    std::string text;
};

/// Default seed when neither --seed nor SLOPELAB_SEED is given.
inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// SLOPELAB_SEED if set and numeric, otherwise kDefaultSeed.
std::uint64_t seed_from_env();

CommandResult run_slopes(const std::string& expr);
CommandResult run_nearby(const std::string& expr, std::int64_t p, bool cert, const ExhaustionBounds& b = {});
/// Bound, threshold, per-factor vanishing verdicts and curve-restriction
/// spot checks along every c with entries in [1, 2]. A spot check above the
/// threshold inside the mediant domain is a violation.
CommandResult run_bound(const GoodModel& m, const MonomialFunction& f);
CommandResult run_blowup(const BlowupScript& script, bool verify);

struct SelftestOptions {
    std::size_t cases = 100;
    std::uint64_t seed = kDefaultSeed;
    Execution exec = Execution::parallel;
};

/// Every property suite on a seeded corpus scaled by `cases`.
CommandResult run_selftest(const SelftestOptions& opt);

}  // namespace slopelab

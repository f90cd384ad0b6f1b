#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slopelab/blowup.hpp"
#include "slopelab/expr.hpp"
#include "slopelab/monomial.hpp"
#include "slopelab/nearby.hpp"

namespace slopelab {

/// Outcome of one property suite. Failures keep the first few messages in
/// case order, so the result does not depend on scheduling.
struct SweepResult {
    std::string name;
    std::int64_t cases = 0;
    std::int64_t checks = 0;
    std::int64_t failure_count = 0;
    std::vector<std::string> failures;
    /// Side observations that are not pass/fail (e.g. how often an inclusion was an equality).
    std::vector<std::string> notes;

    [[nodiscard]] bool ok() const { return failure_count == 0 && checks > 0; }
};

struct CorpusSize {
    std::size_t modules = 500;
    std::size_t models = 200;
    std::size_t chains = 1000;
    std::size_t exprs = 200;
};

/// Seeded inputs shared by the sweeps. Chains alternate toric / abstract.
struct Corpus {
    std::vector<FormalModule> modules;
    std::vector<GoodModel> models;
    std::vector<BlowupScript> chains;
    std::vector<ExprPtr> exprs;
};

Corpus make_corpus(std::uint64_t seed, const CorpusSize& size = {});

/// Every positive slope r of M has a witness N of slope r/p with nonzero twisted psi.
SweepResult witness_sweep(const std::vector<FormalModule>& ms, std::int64_t max_p, Execution exec);
/// Every rational outside the predicted set passes bounded exhaustion.
SweepResult exhaustion_sweep(const std::vector<FormalModule>& ms, std::int64_t max_p, const ExhaustionBounds& b,
                             Execution exec);
SweepResult duality_sweep(const std::vector<FormalModule>& ms, std::int64_t max_p, Execution exec);
SweepResult pushforward_sweep(const std::vector<FormalModule>& ms, std::int64_t max_p, Execution exec);
/// is_regular <=> max slope 0 <=> nearby slopes in {0} for all p <= max_p.
SweepResult regularity_sweep(const std::vector<FormalModule>& ms, std::int64_t max_p, Execution exec);
/// Dual involution, slope scaling under pull/push, tensor laws, psi vanishing.
SweepResult calculus_laws_sweep(const std::vector<FormalModule>& ms, Execution exec);

/// For all f with entries <= max_f and curves c with entries in [1, max_c]:
/// threshold <= bound when applicable, and the curve-restricted nearby
/// slopes of the factors with pole support inside supp a stay <= threshold.
SweepResult monomial_sweep(const std::vector<GoodModel>& models, std::int64_t max_f, std::int64_t max_c,
                           Execution exec);
/// Mediant inequality, monotonicity of generic slopes, lemma verdicts vs the curve oracle.
SweepResult monomial_laws_sweep(std::uint64_t seed, std::size_t count, Execution exec);

/// Every step's audit chain and verify_inequality after every step;
/// toric steps also check the ray pairing and that the new ray is new.
SweepResult blowup_sweep(const std::vector<BlowupScript>& chains, Execution exec);

SweepResult newton_sweep();

/// print(parse(print(e))) = print(e), and the canonical text of the value round-trips.
SweepResult roundtrip_sweep(const std::vector<ExprPtr>& exprs, Execution exec);

}  // namespace slopelab

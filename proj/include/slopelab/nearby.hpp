#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "slopelab/formal_module.hpp"

namespace slopelab {

/// Dimension of nearby cycles of M along f = x^k.
///
/// Equals k times the rank of the slope-0 part: a regular factor of rank r
/// contributes psi of dimension k*r (degree of the covering times the
/// regular rank), and factors of positive slope contribute nothing.
std::int64_t psi_dim(const FormalModule& m, std::int64_t k);

/// Regular iff every factor has zero exponential part.
bool is_regular(const FormalModule& m);

/// Expected nearby slopes along x^p: r/p for each positive slope r, plus 0
/// when M has a regular part. No verification.
std::set<Rat> nearby_slope_candidates(const FormalModule& m, std::int64_t p);

/// Twist N = El(p * p', -phi, trivial) built from a factor El(p', phi, R) of
/// slope r. Throws std::invalid_argument("no factor of slope r") otherwise.
FormalModule witness_twist(const FormalModule& m, const Rat& r, std::int64_t p);

/// psi_dim(M (x) pullback(p, N), p): the quantity whose vanishing decides
/// whether the slope of N is a nearby slope.
std::int64_t twisted_psi_dim(const FormalModule& m, const FormalModule& twist, std::int64_t p);

/// Nearby slopes along x^p. Every member is checked by building its witness
/// twist and observing a nonzero twisted psi (std::logic_error if not).
/// Non-members are certified separately by certify_nearby_slopes.
std::set<Rat> nearby_slopes(const FormalModule& m, std::int64_t p);

struct ExhaustionBounds {
    std::int64_t max_ram = 12;
    std::int64_t max_pole = 24;
};

enum class Execution { serial, parallel };

struct MemberWitness {
    Rat slope;
    FormalModule twist;
    std::int64_t psi = 0;
};

struct NonMemberCheck {
    Rat slope;
    std::int64_t twists_tested = 0;
    /// First twist (in enumeration order) with nonzero twisted psi, if any.
    std::optional<std::string> counterexample;
};

struct NearbyCertificate {
    std::int64_t p = 1;
    ExhaustionBounds bounds;
    std::set<Rat> slopes;
    std::vector<MemberWitness> members;
    std::vector<NonMemberCheck> non_members;

    [[nodiscard]] bool ok() const;
    [[nodiscard]] std::int64_t twists_tested() const;
};

/// Twists of slope s tried against a non-member s: El(e, c u^{-k}) for all
/// e <= max_ram, k <= max_pole with k/e = s, and c in {1, -1} together with
/// the negated leading coefficients of M's irregular factors; for s = 0 the
/// regular twists El(e, 0) with e <= max_ram.
std::vector<FormalModule> exhaustion_family(const FormalModule& m, const Rat& s, const ExhaustionBounds& b);

/// Rationals k/e >= 0 with e <= max_ram, 0 <= k <= max_pole that are not
/// candidates for (M, p); the slopes the exhaustion must rule out.
std::vector<Rat> non_member_slopes(const FormalModule& m, std::int64_t p, const ExhaustionBounds& b);

/// Nearby slopes with witnesses for members and bounded exhaustion for
/// non-members. The parallel and serial paths give identical certificates.
NearbyCertificate certify_nearby_slopes(const FormalModule& m, std::int64_t p, const ExhaustionBounds& b = {},
                                        Execution exec = Execution::parallel);

}  // namespace slopelab

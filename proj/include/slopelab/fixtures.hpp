#pragma once

#include <string>
#include <vector>

#include "slopelab/formal_module.hpp"
#include "slopelab/newton.hpp"

namespace slopelab {

/// An operator together with the formal decomposition of the module it defines.
struct NewtonFixture {
    std::string name;
    std::vector<OperatorTerm> op;
    FormalModule decomposition;
};

/// E^{x^-m} (x) x^c for m = 0..9 and c = -3/4, -1/2, ..., 3/2, killed by
/// x^{m+1} d + m - c x^m (x d - c when m = 0). 100 fixtures.
std::vector<NewtonFixture> rank_one_newton_fixtures();

/// Higher-rank operators whose decomposition was worked out by hand
/// (dominant balance on each Newton edge).
std::vector<NewtonFixture> golden_newton_fixtures();

}  // namespace slopelab

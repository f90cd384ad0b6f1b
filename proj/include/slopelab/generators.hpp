#pragma once

#include <cstdint>
#include <random>

#include "slopelab/blowup.hpp"
#include "slopelab/expr.hpp"
#include "slopelab/formal_module.hpp"
#include "slopelab/monomial.hpp"

namespace slopelab {

using Rng = std::mt19937_64;

struct ModuleShape {
    std::int64_t max_ram = 6;
    std::int64_t max_pole = 8;
    std::int64_t max_reg_rank = 4;
    std::int64_t max_factors = 3;
};

/// Small nonzero rational with numerator in [-6, 6] and denominator in [1, 4].
Rat random_rat(Rng& rng);
/// Random coefficient: a small rational, sometimes times a root of unity of order <= 6.
CycloRat random_coefficient(Rng& rng);
RegularPart random_regular(Rng& rng, std::int64_t max_rank);
ElementaryModule random_elementary(Rng& rng, const ModuleShape& shape);
/// One to max_factors elementary summands; about a quarter of them regular.
FormalModule random_module(Rng& rng, const ModuleShape& shape = {});

/// Entries in [lo, hi].
MultiIndex random_multi_index(Rng& rng, std::size_t dim, std::int64_t lo, std::int64_t hi);

struct ModelShape {
    std::size_t dim = 3;
    std::int64_t max_pole = 5;
    std::int64_t max_factors = 4;
    std::int64_t max_rank = 3;
};

/// Some factors are regular (pole 0); twists have denominators up to 4.
GoodModel random_good_model(Rng& rng, const ModelShape& shape = {});
/// Exponent with at least one nonzero entry, entries in [0, max_entry].
MonomialFunction random_monomial_function(Rng& rng, std::size_t dim, std::int64_t max_entry = 4);

/// Admissible chain of up to max_steps blow-ups in dimension 2..max_dim.
/// Toric centers are faces (dimension >= 2) of maximal cones that contain a
/// strict-Z ray; abstract centers get random alpha/eps with some alpha_i > 0.
BlowupScript random_blowup_script(Rng& rng, BlowupMode mode, std::size_t max_dim = 4, std::size_t max_steps = 6);

/// Random expression tree of depth <= max_depth over El, Reg, 0, +, dual,
/// tensor, pull and push. Kept small enough to evaluate quickly.
ExprPtr random_expr(Rng& rng, int max_depth = 3);

}  // namespace slopelab

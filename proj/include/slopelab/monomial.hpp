#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "slopelab/formal_module.hpp"
#include "slopelab/multi_index.hpp"

namespace slopelab {

/// E^{1/x^pole} (x) x^twist (x) (regular of rank `rank`); pole = 0 is a regular factor.
struct MonomialFactor {
    MultiIndex pole;
    std::vector<Rat> twist;
    std::int64_t rank = 1;

    friend bool operator==(const MonomialFactor&, const MonomialFactor&) = default;
};

/// Good formal structure with monomial exponents on the complement of a
/// union of coordinate hyperplanes.
class GoodModel {
public:
    GoodModel() = default;
    /// Throws std::invalid_argument on dimension mismatches or rank < 1.
    GoodModel(std::size_t dim, std::vector<MonomialFactor> factors);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] const std::vector<MonomialFactor>& factors() const noexcept { return factors_; }
    /// Coordinates i with b_i != 0 for some factor.
    [[nodiscard]] std::set<std::size_t> pole_locus() const;
    [[nodiscard]] bool is_regular() const;
    [[nodiscard]] GoodModel with_factor(MonomialFactor f) const;

private:
    std::size_t dim_ = 0;
    std::vector<MonomialFactor> factors_;
};

struct GenericSlopeDivisor {
    std::vector<Rat> r;
    [[nodiscard]] Rat deg() const;
};

/// f = x^a, a with nonempty support.
class MonomialFunction {
public:
    explicit MonomialFunction(MultiIndex a);
    [[nodiscard]] const MultiIndex& exponent() const noexcept { return a_; }
    [[nodiscard]] std::set<std::size_t> zero_locus() const { return a_.support(); }
    [[nodiscard]] std::string str() const;

private:
    MultiIndex a_;
};

GenericSlopeDivisor highest_generic_slopes(const GoodModel& m);

/// Sum of the highest generic slopes; bounds every nearby slope.
Rat nearby_slope_bound(const GoodModel& m);

struct Threshold {
    Rat value;
    /// The zero locus of f lies in the pole locus, so the bound is guaranteed.
    bool applicable = false;
};

/// max over i in supp a of r_i / a_i.
Threshold vanishing_threshold(const GoodModel& m, const MonomialFunction& f);

enum class Verdict {
    /// psi_{x^a}(E^{1/x^b + 1/x^a} (x) R) = 0 because b_i < a_i on supp a.
    vanishes_dominant_twist,
    /// psi_{x^alpha}(E^{1/x^a} (x) R) = 0 because supp alpha is inside supp a.
    vanishes_support,
    unknown,
};

std::string to_string(Verdict v);

/// Vanishing of psi_f for the factor with exponent 1/x^pole (+ 1/x^extra
/// when `extra` is given). Never reports nonvanishing.
Verdict lemma_vanishing(const MultiIndex& pole, const std::optional<MultiIndex>& extra, const MonomialFunction& f);

/// Restriction along t -> (t^c_1, ..., t^c_n): each factor becomes
/// El(1, t^{-<b,c>}, R) with R of the factor's rank and exponent <twist,c> mod 1.
FormalModule curve_restriction(const GoodModel& m, const MultiIndex& c);

/// <a,c>: f restricted to the curve is t^k.
std::int64_t curve_degree(const MonomialFunction& f, const MultiIndex& c);

/// Nearby slopes of the restricted module along t^{<a,c>}.
std::set<Rat> restricted_nearby_slopes(const GoodModel& m, const MonomialFunction& f, const MultiIndex& c);

}  // namespace slopelab

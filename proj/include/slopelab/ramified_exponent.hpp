#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "slopelab/cyclotomic.hpp"
#include "slopelab/laurent.hpp"

namespace slopelab {

/// Principal part of an exponential twist, a polynomial in u^{-1} where
/// u^ram = x.
///
/// Canonical form: only negative powers are kept (holomorphic terms do not
/// change E^phi), and ram is minimal, i.e. gcd(ram, exponents) = 1. The zero
/// exponent has ram 1.
class RamifiedExponent {
public:
    using Term = std::pair<std::int64_t, CycloRat>;

    RamifiedExponent() = default;
    /// Builds the canonical form of sum c_k u^k with u^ram = x. Terms with
    /// k >= 0 are dropped; repeated exponents are summed.
    RamifiedExponent(std::int64_t ram, std::vector<Term> terms);
    RamifiedExponent(std::int64_t ram, const Laurent<CycloRat>& poly);

    static RamifiedExponent monomial(std::int64_t ram, std::int64_t k, CycloRat c = CycloRat(1)) {
        return RamifiedExponent(ram, {{k, std::move(c)}});
    }

    [[nodiscard]] std::int64_t ram() const noexcept { return ram_; }
    /// Ascending exponents, all < 0.
    [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    /// -(lowest exponent); 0 for the zero exponent.
    [[nodiscard]] std::int64_t pole_order() const noexcept { return terms_.empty() ? 0 : -terms_.front().first; }
    [[nodiscard]] const CycloRat& leading_coefficient() const { return terms_.front().second; }

    /// phi(zeta * u^scale), with ram unchanged (the pullback along
    /// x = v^scale seen on the u-cover), then re-canonicalized.
    [[nodiscard]] RamifiedExponent substitute(const RootOfUnity& zeta, std::int64_t scale) const;

    /// Terms re-expressed over the cover of degree l (a multiple of ram()),
    /// with u = w^{l/ram}. Not reduced.
    [[nodiscard]] std::vector<Term> terms_at(std::int64_t l) const;

    RamifiedExponent operator-() const;
    friend RamifiedExponent operator+(const RamifiedExponent& a, const RamifiedExponent& b);

    friend bool operator==(const RamifiedExponent&, const RamifiedExponent&) = default;
    friend std::strong_ordering operator<=>(const RamifiedExponent& a, const RamifiedExponent& b);

    /// Laurent polynomial text in the variable `var`, e.g. "u^-2 - 3/2*u^-1".
    [[nodiscard]] std::string str(const std::string& var = "u") const;

private:
    std::int64_t ram_ = 1;
    std::vector<Term> terms_;
};

/// Lexicographic comparison of ascending (exponent, coefficient) sequences.
std::strong_ordering compare_terms(const std::vector<RamifiedExponent::Term>& a,
                                   const std::vector<RamifiedExponent::Term>& b);

/// Sums equal exponents, drops zeros and nonnegative powers, sorts ascending.
void normalize_terms(std::vector<RamifiedExponent::Term>& terms);

/// Text of sum c_k var^k in the form used by RamifiedExponent::str.
std::string laurent_str(const std::vector<RamifiedExponent::Term>& terms, const std::string& var = "u");

}  // namespace slopelab

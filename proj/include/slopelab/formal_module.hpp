#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "slopelab/ramified_exponent.hpp"

namespace slopelab {

/// Regular C((t))-module, recorded by its exponents (residues mod Z in [0,1)).
/// Jordan structure is not tracked; nothing computed here depends on it.
class RegularPart {
public:
    RegularPart() = default;
    explicit RegularPart(std::vector<Rat> exponents);
    /// rank copies of the trivial exponent 0.
    static RegularPart trivial(std::int64_t rank);

    [[nodiscard]] std::int64_t rank() const noexcept { return static_cast<std::int64_t>(exps_.size()); }
    [[nodiscard]] const std::vector<Rat>& exponents() const noexcept { return exps_; }

    [[nodiscard]] RegularPart dual() const;
    /// Inverse image along t = s^q.
    [[nodiscard]] RegularPart pullback(std::int64_t q) const;
    /// Direct image along s -> s^d = t.
    [[nodiscard]] RegularPart pushforward(std::int64_t d) const;
    [[nodiscard]] RegularPart tensor(const RegularPart& o) const;
    [[nodiscard]] RegularPart direct_sum(const RegularPart& o) const;

    friend bool operator==(const RegularPart&, const RegularPart&) = default;
    friend auto operator<=>(const RegularPart&, const RegularPart&) = default;

private:
    std::vector<Rat> exps_;  // sorted
};

/// El(p, phi, R) = rho_{p+}(E^phi (x) R) for rho: u -> u^p = x.
///
/// Always canonical: ram is minimal for phi (a common factor d of p and
/// the exponents of phi is pushed into R), and phi is the least member of its
/// orbit under u -> zeta_p u, comparing term sequences from the most
/// negative power, coefficients by the CycloRat order.
class ElementaryModule {
public:
    /// Canonical form of El(p, sum c_k u^k, R).
    static ElementaryModule make(std::int64_t p, std::vector<RamifiedExponent::Term> phi, RegularPart reg);
    static ElementaryModule make(std::int64_t p, const RamifiedExponent& phi, RegularPart reg);
    static ElementaryModule regular(RegularPart reg) { return make(1, RamifiedExponent(), std::move(reg)); }

    [[nodiscard]] std::int64_t ram() const noexcept { return phi_.ram(); }
    [[nodiscard]] const RamifiedExponent& phi() const noexcept { return phi_; }
    [[nodiscard]] const RegularPart& reg() const noexcept { return reg_; }
    [[nodiscard]] std::int64_t rank() const noexcept { return ram() * reg_.rank(); }
    [[nodiscard]] bool is_regular() const noexcept { return phi_.is_zero(); }

    /// Same (ram, phi), i.e. the factors merge by adding regular parts.
    [[nodiscard]] bool same_exponential(const ElementaryModule& o) const { return phi_ == o.phi_; }

    friend bool operator==(const ElementaryModule&, const ElementaryModule&) = default;

private:
    ElementaryModule(RamifiedExponent phi, RegularPart reg) : phi_(std::move(phi)), reg_(std::move(reg)) {}
    friend class FormalModule;

    RamifiedExponent phi_;
    RegularPart reg_;
};

/// Finite direct sum of elementary modules, canonical: factors sorted by
/// (ram, phi), equal exponentials merged, no rank-0 factor.
class FormalModule {
public:
    FormalModule() = default;
    explicit FormalModule(std::vector<ElementaryModule> factors);
    FormalModule(ElementaryModule e) : FormalModule(std::vector<ElementaryModule>{std::move(e)}) {}  // NOLINT

    [[nodiscard]] const std::vector<ElementaryModule>& factors() const noexcept { return factors_; }
    [[nodiscard]] bool is_zero() const noexcept { return factors_.empty(); }
    [[nodiscard]] std::int64_t rank() const noexcept;
    /// Rank of the slope-0 part.
    [[nodiscard]] std::int64_t regular_rank() const noexcept;

    friend bool operator==(const FormalModule&, const FormalModule&) = default;

    /// Canonical text in the module expression language.
    [[nodiscard]] std::string str() const;

private:
    std::vector<ElementaryModule> factors_;
};

using SlopeMultiset = std::map<Rat, std::int64_t>;

Rat slope(const ElementaryModule& m);
SlopeMultiset slopes(const FormalModule& m);
Rat irregularity(const FormalModule& m);
Rat max_slope(const FormalModule& m);

FormalModule direct_sum(const FormalModule& a, const FormalModule& b);
FormalModule dual(const FormalModule& m);
/// Inverse image along x = v^q.
FormalModule pullback(std::int64_t q, const FormalModule& m);
/// Direct image along x -> x^p.
FormalModule pushforward(std::int64_t p, const FormalModule& m);
FormalModule tensor(const FormalModule& a, const FormalModule& b);

/// Reg(rank 1, exponent 0), the unit for tensor.
FormalModule unit_module();

std::string str(const ElementaryModule& e);

}  // namespace slopelab

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "slopelab/rational.hpp"

namespace slopelab {

/// exp(2*pi*i * num/den) with num in [0, den) and gcd(num, den) = 1.
class RootOfUnity {
public:
    constexpr RootOfUnity() noexcept = default;
    RootOfUnity(std::int64_t num, std::int64_t den);

    /// Primitive order-th root exp(2*pi*i/order) raised to power.
    static RootOfUnity primitive(std::int64_t order, std::int64_t power = 1) { return {power, order}; }

    [[nodiscard]] std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] std::int64_t order() const noexcept { return den_; }
    [[nodiscard]] bool is_one() const noexcept { return num_ == 0; }

    [[nodiscard]] RootOfUnity pow(std::int64_t k) const;
    [[nodiscard]] RootOfUnity inverse() const { return pow(-1); }

    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
    friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Exact element of a cyclotomic field Q(zeta_N).
///
/// Elements are kept in the smallest field Q(zeta_N) that contains them
/// (N = 1 or N != 2 mod 4) and expanded on a basis of phi(N) roots of unity
/// chosen so that the basis of every subfield Q(zeta_d), d | N, is a subset
/// of the basis of Q(zeta_N). With that basis, equality and ordering are
/// structural and mixed-order arithmetic only needs exponent rescaling.
///
/// A root zeta_N^i is a basis element when, for every prime power q = p^e
/// dividing N, its q-component x (the exponent of exp(2*pi*i/q)) written as
/// x = j + (q/p)*k with 0 <= j < q/p satisfies k = 0 for p = 2 and k != 0
/// for odd p.
class CycloRat {
public:
    using Term = std::pair<std::int64_t, Rat>;  // exponent of zeta_N, coefficient

    CycloRat() = default;
    CycloRat(Rat r);  // NOLINT: rationals embed implicitly
    CycloRat(std::int64_t n) : CycloRat(Rat(n)) {}  // NOLINT

    static CycloRat root(const RootOfUnity& z, const Rat& coeff = Rat(1));
    static CycloRat zeta(std::int64_t order, std::int64_t power = 1) {
        return root(RootOfUnity::primitive(order, power));
    }

    [[nodiscard]] std::int64_t order() const noexcept { return order_; }
    [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_rational() const noexcept { return order_ == 1; }
    /// Requires is_rational().
    [[nodiscard]] Rat rational() const;

    /// Coordinates on the basis of Q(zeta_order()), basis roots sorted by exponent.
    [[nodiscard]] std::vector<Rat> coords() const;

    /// Same value expressed in Q(zeta_n) for a multiple n of order(), as
    /// (exponent, coefficient) pairs on that field's basis. Not canonical.
    [[nodiscard]] std::vector<Term> embedded_terms(std::int64_t n) const;

    CycloRat operator-() const;
    CycloRat& operator+=(const CycloRat& o);
    CycloRat& operator-=(const CycloRat& o);
    CycloRat& operator*=(const CycloRat& o);
    friend CycloRat operator+(CycloRat a, const CycloRat& b) { return a += b; }
    friend CycloRat operator-(CycloRat a, const CycloRat& b) { return a -= b; }
    friend CycloRat operator*(const CycloRat& a, const CycloRat& b);
    friend CycloRat operator/(const CycloRat& a, const CycloRat& b) { return a * b.inverse(); }

    [[nodiscard]] CycloRat scaled(const Rat& r) const;
    [[nodiscard]] CycloRat rotated(const RootOfUnity& z) const;
    /// Galois automorphism zeta_N -> zeta_N^k, gcd(k, N) = 1.
    [[nodiscard]] CycloRat galois(std::int64_t k) const;
    [[nodiscard]] CycloRat inverse() const;
    /// Product of all Galois conjugates; a rational.
    [[nodiscard]] Rat norm() const;

    friend bool operator==(const CycloRat&, const CycloRat&) = default;
    /// Total order: by field order, then term list lexicographically.
    friend std::strong_ordering operator<=>(const CycloRat& a, const CycloRat& b);

    /// Expression text in the zeta(N)^j notation of the module language.
    [[nodiscard]] std::string str() const;
    /// True when str() needs parentheses as a factor of a product.
    [[nodiscard]] bool is_compound() const noexcept;

private:
    CycloRat(std::int64_t order, std::vector<Term> terms) : order_(order), terms_(std::move(terms)) {}
    static CycloRat canonical(std::int64_t order, std::vector<Term> raw);

    std::int64_t order_ = 1;
    std::vector<Term> terms_;
};

/// Euler totient.
std::int64_t totient(std::int64_t n);

}  // namespace slopelab

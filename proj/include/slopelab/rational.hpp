#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace slopelab {

/// Exact rational number held in lowest terms with a positive denominator.
///
/// Storage is a pair of 64-bit integers; every intermediate product is
/// formed in 128 bits and the reduced result must fit back into 64 bits,
/// otherwise std::overflow_error is thrown. No operation ever rounds.
class Rat {
public:
    constexpr Rat() noexcept = default;
    constexpr Rat(std::int64_t n) noexcept : num_(n) {}  // NOLINT: implicit from integers is intended
    Rat(std::int64_t n, std::int64_t d);

    [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }

    [[nodiscard]] constexpr bool is_zero() const noexcept { return num_ == 0; }
    [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }
    [[nodiscard]] constexpr int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

    /// Largest integer not exceeding the value.
    [[nodiscard]] std::int64_t floor() const noexcept;
    /// Representative of the class modulo Z in [0, 1).
    [[nodiscard]] Rat frac() const;

    [[nodiscard]] Rat inverse() const;

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend constexpr bool operator==(const Rat&, const Rat&) noexcept = default;
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) noexcept;

    /// "n" for integers, "n/d" otherwise.
    [[nodiscard]] std::string str() const;
    /// Always "n/d"; the bit-exact form used in structured output.
    [[nodiscard]] std::string fraction_str() const;

    /// Accepts "n", "-n", "n/d" with optional surrounding whitespace.
    static Rat parse(std::string_view text);

    /// Trusted constructor: caller guarantees lowest terms and d > 0.
    static constexpr Rat from_reduced(std::int64_t n, std::int64_t d) noexcept {
        Rat r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

std::int64_t gcd64(std::int64_t a, std::int64_t b) noexcept;
std::int64_t lcm64(std::int64_t a, std::int64_t b);
/// Mathematical modulus, result in [0, m).
std::int64_t mod64(std::int64_t a, std::int64_t m) noexcept;

}  // namespace slopelab

template <>
struct std::hash<slopelab::Rat> {
    std::size_t operator()(const slopelab::Rat& r) const noexcept {
        return std::hash<std::int64_t>{}(r.num()) * 1000003u ^ std::hash<std::int64_t>{}(r.den());
    }
};

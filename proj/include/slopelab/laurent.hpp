#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace slopelab {

/// Sparse Laurent polynomial sum c_k t^k over a coefficient ring C.
template <class C>
class Laurent {
public:
    Laurent() = default;
    static Laurent monomial(std::int64_t k, C c) {
        Laurent p;
        p.add_term(k, std::move(c));
        return p;
    }
    static Laurent constant(C c) { return monomial(0, std::move(c)); }

    void add_term(std::int64_t k, const C& c) {
        if (c == C{}) return;
        auto [it, fresh] = terms_.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second == C{}) terms_.erase(it);
        }
    }

    [[nodiscard]] const std::map<std::int64_t, C>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    /// Lowest exponent with nonzero coefficient; empty for the zero polynomial.
    [[nodiscard]] std::optional<std::int64_t> valuation() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first;
    }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    Laurent operator-() const {
        Laurent r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    Laurent& operator-=(const Laurent& o) { return *this += -o; }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [i, c] : a.terms_)
            for (const auto& [j, d] : b.terms_) r.add_term(i + j, c * d);
        return r;
    }
    friend bool operator==(const Laurent&, const Laurent&) = default;

private:
    std::map<std::int64_t, C> terms_;
};

}  // namespace slopelab

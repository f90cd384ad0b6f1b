#pragma once

#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "slopelab/rational.hpp"

namespace slopelab {

/// Element of N^n. Coordinates are 0-based in code and printed 1-based.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<std::int64_t> entries);
    MultiIndex(std::initializer_list<std::int64_t> entries) : MultiIndex(std::vector<std::int64_t>(entries)) {}
    static MultiIndex zeros(std::size_t n) { return MultiIndex(std::vector<std::int64_t>(n, 0)); }

    [[nodiscard]] std::size_t dim() const noexcept { return entries_.size(); }
    [[nodiscard]] std::int64_t operator[](std::size_t k) const { return entries_.at(k); }
    [[nodiscard]] const std::vector<std::int64_t>& entries() const noexcept { return entries_; }

    /// { k : i_k != 0 }
    [[nodiscard]] std::set<std::size_t> support() const;
    /// i_E: entries outside E replaced by 0.
    [[nodiscard]] MultiIndex restrict_to(const std::set<std::size_t>& e) const;
    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] std::int64_t total() const noexcept;
    [[nodiscard]] std::int64_t dot(const MultiIndex& c) const;
    /// Componentwise <=.
    [[nodiscard]] bool le(const MultiIndex& o) const;

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

    [[nodiscard]] std::string str() const;

private:
    std::vector<std::int64_t> entries_;
};

bool is_subset(const std::set<std::size_t>& a, const std::set<std::size_t>& b);

}  // namespace slopelab

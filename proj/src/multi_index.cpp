#include "slopelab/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace slopelab {

MultiIndex::MultiIndex(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
    for (auto v : entries_)
        if (v < 0) throw std::invalid_argument("multi-index entries must be nonnegative");
}

std::set<std::size_t> MultiIndex::support() const {
    std::set<std::size_t> s;
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k] != 0) s.insert(k);
    return s;
}

MultiIndex MultiIndex::restrict_to(const std::set<std::size_t>& e) const {
    MultiIndex out = *this;
    for (std::size_t k = 0; k < out.entries_.size(); ++k)
        if (!e.contains(k)) out.entries_[k] = 0;
    return out;
}

bool MultiIndex::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](auto v) { return v == 0; });
}

std::int64_t MultiIndex::total() const noexcept {
    return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

std::int64_t MultiIndex::dot(const MultiIndex& c) const {
    if (c.dim() != dim()) throw std::invalid_argument("multi-index dimension mismatch");
    std::int64_t s = 0;
    for (std::size_t k = 0; k < entries_.size(); ++k) s += entries_[k] * c.entries_[k];
    return s;
}

bool MultiIndex::le(const MultiIndex& o) const {
    if (o.dim() != dim()) throw std::invalid_argument("multi-index dimension mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k] > o.entries_[k]) return false;
    return true;
}

std::string MultiIndex::str() const {
    std::string s = "(";
    for (std::size_t k = 0; k < entries_.size(); ++k) s += (k ? "," : "") + std::to_string(entries_[k]);
    return s + ")";
}

bool is_subset(const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace slopelab

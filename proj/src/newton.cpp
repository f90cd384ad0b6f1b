#include "slopelab/newton.hpp"

#include <map>
#include <stdexcept>

namespace slopelab {

SlopeMultiset slopes_from_operator(const std::vector<OperatorTerm>& op) {
    std::map<std::int64_t, std::int64_t> height;  // order i -> val(a_i) - i
    for (const auto& [i, a] : op) {
        if (i < 0) throw std::invalid_argument("operator order must be >= 0");
        if (a.is_zero()) continue;
        if (height.contains(i)) throw std::invalid_argument("repeated operator order");
        height[i] = *a.valuation() - i;
    }
    if (height.empty()) throw std::invalid_argument("zero operator");

    // Horizontal run up to the last order attaining the minimal height.
    std::int64_t lo = height.begin()->second, start = height.begin()->first;
    for (const auto& [i, h] : height)
        if (h <= lo) {
            lo = h;
            start = i;
        }
    SlopeMultiset out;
    if (start > 0) out[Rat(0)] += start;

    // Lower convex hull from (start, lo) to the leading order.
    std::vector<std::pair<std::int64_t, std::int64_t>> hull{{start, lo}};
    for (auto it = height.upper_bound(start); it != height.end(); ++it) {
        std::pair<std::int64_t, std::int64_t> pt{it->first, it->second};
        while (hull.size() >= 2) {
            auto [x1, y1] = hull[hull.size() - 2];
            auto [x2, y2] = hull.back();
            // drop the middle point if it lies on or above the chord
            if ((y2 - y1) * (pt.first - x1) >= (pt.second - y1) * (x2 - x1))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    for (std::size_t s = 1; s < hull.size(); ++s) {
        std::int64_t dx = hull[s].first - hull[s - 1].first;
        out[Rat(hull[s].second - hull[s - 1].second, dx)] += dx;
    }
    return out;
}

}  // namespace slopelab

#include "slopelab/monomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "slopelab/nearby.hpp"

namespace slopelab {

GoodModel::GoodModel(std::size_t dim, std::vector<MonomialFactor> factors) : dim_(dim), factors_(std::move(factors)) {
    if (dim_ == 0) throw std::invalid_argument("model dimension must be positive");
    for (const auto& f : factors_) {
        if (f.pole.dim() != dim_) throw std::invalid_argument("pole " + f.pole.str() + " has wrong dimension");
        if (f.twist.size() != dim_) throw std::invalid_argument("twist has wrong dimension");
        if (f.rank < 1) throw std::invalid_argument("factor rank must be positive");
    }
}

std::set<std::size_t> GoodModel::pole_locus() const {
    std::set<std::size_t> d;
    for (const auto& f : factors_) d.merge(f.pole.support());
    return d;
}

bool GoodModel::is_regular() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const MonomialFactor& f) { return f.pole.is_zero(); });
}

GoodModel GoodModel::with_factor(MonomialFactor f) const {
    auto fs = factors_;
    fs.push_back(std::move(f));
    return GoodModel(dim_, std::move(fs));
}

Rat GenericSlopeDivisor::deg() const {
    Rat s;
    for (const auto& x : r) s += x;
    return s;
}

MonomialFunction::MonomialFunction(MultiIndex a) : a_(std::move(a)) {
    if (a_.is_zero()) throw std::invalid_argument("monomial function needs nonempty support");
}

std::string MonomialFunction::str() const {
    std::string s;
    for (std::size_t i = 0; i < a_.dim(); ++i) {
        if (a_[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += "x" + std::to_string(i + 1);
        if (a_[i] != 1) s += "^" + std::to_string(a_[i]);
    }
    return s;
}

GenericSlopeDivisor highest_generic_slopes(const GoodModel& m) {
    GenericSlopeDivisor d{std::vector<Rat>(m.dim())};
    for (const auto& f : m.factors())
        for (std::size_t i = 0; i < m.dim(); ++i) d.r[i] = std::max(d.r[i], Rat(f.pole[i]));
    return d;
}

Rat nearby_slope_bound(const GoodModel& m) { return highest_generic_slopes(m).deg(); }

Threshold vanishing_threshold(const GoodModel& m, const MonomialFunction& f) {
    const auto& a = f.exponent();
    if (a.dim() != m.dim()) throw std::invalid_argument("function and model dimensions differ");
    auto r = highest_generic_slopes(m).r;
    Threshold t;
    for (std::size_t i : a.support()) t.value = std::max(t.value, r[i] / Rat(a[i]));
    t.applicable = is_subset(a.support(), m.pole_locus());
    return t;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::vanishes_dominant_twist: return "vanishes (dominant twist)";
        case Verdict::vanishes_support: return "vanishes (support)";
        case Verdict::unknown: break;
    }
    return "unknown";
}

namespace {

Verdict support_rule(const MultiIndex& pole, const MultiIndex& alpha) {
    if (pole.is_zero()) return Verdict::unknown;
    auto s = alpha.support();
    return !s.empty() && is_subset(s, pole.support()) ? Verdict::vanishes_support : Verdict::unknown;
}

}  // namespace

Verdict lemma_vanishing(const MultiIndex& pole, const std::optional<MultiIndex>& extra, const MonomialFunction& f) {
    const auto& a = f.exponent();
    if (pole.dim() != a.dim() || (extra && extra->dim() != a.dim()))
        throw std::invalid_argument("factor and function dimensions differ");
    if (!extra) return support_rule(pole, a);
    if (*extra == a) {
        auto sa = a.support();
        bool dominated = std::all_of(sa.begin(), sa.end(), [&](std::size_t i) { return pole[i] < a[i]; });
        return dominated ? Verdict::vanishes_dominant_twist : Verdict::unknown;
    }
    // only a single monomial pole falls under the support rule
    if (pole.is_zero()) return support_rule(*extra, a);
    if (extra->is_zero()) return support_rule(pole, a);
    return Verdict::unknown;
}

namespace {

void check_curve(const MultiIndex& c, std::size_t dim) {
    if (c.dim() != dim) throw std::invalid_argument("curve exponent " + c.str() + " has wrong dimension");
    for (auto x : c.entries())
        if (x < 1) throw std::invalid_argument("curve exponents must be positive");
}

}  // namespace

FormalModule curve_restriction(const GoodModel& m, const MultiIndex& c) {
    check_curve(c, m.dim());
    std::vector<ElementaryModule> out;
    for (const auto& f : m.factors()) {
        Rat e;
        for (std::size_t i = 0; i < m.dim(); ++i) e += f.twist[i] * Rat(c[i]);
        RegularPart reg(std::vector<Rat>(static_cast<std::size_t>(f.rank), e));
        std::int64_t k = f.pole.dot(c);
        if (k == 0)
            out.push_back(ElementaryModule::regular(std::move(reg)));
        else
            out.push_back(ElementaryModule::make(1, {{-k, CycloRat(1)}}, std::move(reg)));
    }
    return FormalModule(std::move(out));
}

std::int64_t curve_degree(const MonomialFunction& f, const MultiIndex& c) {
    check_curve(c, f.exponent().dim());
    return f.exponent().dot(c);
}

std::set<Rat> restricted_nearby_slopes(const GoodModel& m, const MonomialFunction& f, const MultiIndex& c) {
    return nearby_slopes(curve_restriction(m, c), curve_degree(f, c));
}

}  // namespace slopelab

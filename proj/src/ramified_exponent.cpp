#include "slopelab/ramified_exponent.hpp"

#include <algorithm>
#include <stdexcept>

namespace slopelab {

void normalize_terms(std::vector<RamifiedExponent::Term>& terms) {
    std::erase_if(terms, [](const auto& t) { return t.first >= 0 || t.second.is_zero(); });
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<RamifiedExponent::Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second += t.second;
            if (out.back().second.is_zero()) out.pop_back();
        } else {
            out.push_back(std::move(t));
        }
    }
    terms = std::move(out);
}

RamifiedExponent::RamifiedExponent(std::int64_t ram, std::vector<Term> terms) {
    if (ram < 1) throw std::invalid_argument("ramification must be >= 1");
    normalize_terms(terms);
    if (terms.empty()) return;
    std::int64_t d = ram;
    for (const auto& t : terms) d = gcd64(d, t.first);
    if (d > 1)
        for (auto& t : terms) t.first /= d;
    ram_ = ram / d;
    terms_ = std::move(terms);
}

RamifiedExponent::RamifiedExponent(std::int64_t ram, const Laurent<CycloRat>& poly)
    : RamifiedExponent(ram, std::vector<Term>(poly.terms().begin(), poly.terms().end())) {}

RamifiedExponent RamifiedExponent::substitute(const RootOfUnity& zeta, std::int64_t scale) const {
    if (scale < 1) throw std::invalid_argument("substitution scale must be >= 1");
    std::vector<Term> t;
    t.reserve(terms_.size());
    for (const auto& [k, c] : terms_) t.emplace_back(k * scale, c.rotated(zeta.pow(k)));
    return RamifiedExponent(ram_, std::move(t));
}

std::vector<RamifiedExponent::Term> RamifiedExponent::terms_at(std::int64_t l) const {
    if (l % ram_ != 0) throw std::invalid_argument("cover degree must be a multiple of the ramification");
    std::vector<Term> t = terms_;
    for (auto& x : t) x.first *= l / ram_;
    return t;
}

RamifiedExponent RamifiedExponent::operator-() const {
    RamifiedExponent r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

RamifiedExponent operator+(const RamifiedExponent& a, const RamifiedExponent& b) {
    std::int64_t l = lcm64(a.ram_, b.ram_);
    auto t = a.terms_at(l);
    auto u = b.terms_at(l);
    t.insert(t.end(), u.begin(), u.end());
    return RamifiedExponent(l, std::move(t));
}

std::strong_ordering compare_terms(const std::vector<RamifiedExponent::Term>& a,
                                   const std::vector<RamifiedExponent::Term>& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = a[i].first <=> b[i].first; c != 0) return c;
        if (auto c = a[i].second <=> b[i].second; c != 0) return c;
    }
    return a.size() <=> b.size();
}

std::strong_ordering operator<=>(const RamifiedExponent& a, const RamifiedExponent& b) {
    if (auto c = a.ram_ <=> b.ram_; c != 0) return c;
    return compare_terms(a.terms_, b.terms_);
}

std::string laurent_str(const std::vector<RamifiedExponent::Term>& terms, const std::string& var) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms) {
        std::string mono = var + "^" + std::to_string(k);
        bool neg = false;
        std::string coeff;
        if (c.is_rational()) {
            Rat r = c.rational();
            neg = r.sign() < 0;
            Rat mag = neg ? -r : r;
            if (mag != Rat(1)) coeff = mag.str() + "*";
        } else if (!c.is_compound()) {
            neg = c.terms().front().second.sign() < 0;
            coeff = (neg ? -c : c).str() + "*";
        } else {
            coeff = "(" + c.str() + ")*";
        }
        if (first)
            out += (neg ? "-" : "") + coeff + mono;
        else
            out += (neg ? " - " : " + ") + coeff + mono;
        first = false;
    }
    return out;
}

std::string RamifiedExponent::str(const std::string& var) const { return laurent_str(terms_, var); }

}  // namespace slopelab

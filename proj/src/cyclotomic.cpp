#include "slopelab/cyclotomic.hpp"

#include <algorithm>
#include <stdexcept>

namespace slopelab {

namespace {

struct PrimePower {
    std::int64_t p;
    std::int64_t q;  // p^e
    int e;
};

std::vector<PrimePower> factor(std::int64_t n) {
    std::vector<PrimePower> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        PrimePower pp{p, 1, 0};
        while (n % p == 0) {
            n /= p;
            pp.q *= p;
            ++pp.e;
        }
        out.push_back(pp);
    }
    if (n > 1) out.push_back({n, n, 1});
    return out;
}

std::int64_t modinv(std::int64_t a, std::int64_t m) {
    // extended Euclid; m small
    std::int64_t g = m, x = 0, x1 = 1, a1 = mod64(a, m);
    while (a1 != 0) {
        std::int64_t t = g / a1;
        std::int64_t tmp = g - t * a1;
        g = a1;
        a1 = tmp;
        tmp = x - t * x1;
        x = x1;
        x1 = tmp;
    }
    if (g != 1) throw std::logic_error("modinv: not invertible");
    return mod64(x, m);
}

// Component of zeta_N^i at prime power q: exponent of exp(2 pi i / q).
struct ComponentMap {
    PrimePower pp;
    std::int64_t inv;  // (N/q)^{-1} mod q
    std::int64_t operator()(std::int64_t i) const { return mod64((i % pp.q) * inv, pp.q); }
};

std::vector<ComponentMap> component_maps(std::int64_t n) {
    std::vector<ComponentMap> out;
    for (const auto& pp : factor(n)) out.push_back({pp, pp.q == 1 ? 0 : modinv((n / pp.q) % pp.q, pp.q)});
    return out;
}

void accumulate(std::vector<CycloRat::Term>& terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<CycloRat::Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second += t.second;
            if (out.back().second.is_zero()) out.pop_back();
        } else if (!t.second.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    terms = std::move(out);
}

// Rewrite arbitrary exponents mod n onto the basis of Q(zeta_n).
std::vector<CycloRat::Term> reduce(std::int64_t n, std::vector<CycloRat::Term> terms) {
    for (auto& t : terms) t.first = mod64(t.first, n);
    accumulate(terms);
    for (const auto& cm : component_maps(n)) {
        const std::int64_t p = cm.pp.p, q = cm.pp.q;
        bool clean = true;
        for (const auto& t : terms) {
            std::int64_t k = cm(t.first) / (q / p);
            if ((p == 2) ? (k != 0) : (k == 0)) {
                clean = false;
                break;
            }
        }
        if (clean) continue;
        std::vector<CycloRat::Term> next;
        next.reserve(terms.size() * static_cast<std::size_t>(p));
        for (auto& t : terms) {
            std::int64_t k = cm(t.first) / (q / p);
            if (p == 2) {
                if (k == 0)
                    next.push_back(std::move(t));
                else
                    next.emplace_back(mod64(t.first + n / 2, n), -t.second);
            } else {
                if (k != 0) {
                    next.push_back(std::move(t));
                } else {
                    // 1 + w + ... + w^{p-1} = 0 for the p-th root w = zeta_n^{n/p}
                    for (std::int64_t kk = 1; kk < p; ++kk)
                        next.emplace_back(mod64(t.first + kk * (n / p), n), -t.second);
                }
            }
        }
        accumulate(next);
        terms = std::move(next);
    }
    return terms;
}

// Descend to the smallest Q(zeta_d) containing the element (terms on the basis of n).
std::pair<std::int64_t, std::vector<CycloRat::Term>> minimize(std::int64_t n, std::vector<CycloRat::Term> terms) {
    if (terms.empty()) return {1, {}};
    bool changed = true;
    while (changed && n > 1) {
        changed = false;
        for (const auto& cm : component_maps(n)) {
            const std::int64_t p = cm.pp.p;
            if (cm.pp.e >= 2) {
                bool ok = std::all_of(terms.begin(), terms.end(), [&](const auto& t) { return cm(t.first) % p == 0; });
                if (!ok) continue;
                // Q(zeta_{n/2}) = Q(zeta_{n/4}) when n/2 = 2 mod 4
                std::int64_t div = (p == 2 && cm.pp.e == 2) ? 4 : p;
                for (auto& t : terms) t.first /= div;
                n /= div;
                changed = true;
                break;
            }
            if (p == 2) continue;  // n never 2 mod 4
            // odd prime to the first power: every fibre over the other
            // components must carry the full set k = 1..p-1 with one coefficient
            std::vector<CycloRat::Term> rest;
            rest.reserve(terms.size());
            for (const auto& t : terms) rest.emplace_back(mod64(t.first - cm(t.first) * (n / p), n), t.second);
            std::vector<std::size_t> idx(terms.size());
            for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return rest[a].first < rest[b].first; });
            bool ok = true;
            std::vector<CycloRat::Term> reduced;
            for (std::size_t s = 0; s < idx.size() && ok;) {
                std::size_t e = s;
                while (e < idx.size() && rest[idx[e]].first == rest[idx[s]].first) ++e;
                if (static_cast<std::int64_t>(e - s) != p - 1) {
                    ok = false;
                    break;
                }
                for (std::size_t m = s + 1; m < e; ++m)
                    if (rest[idx[m]].second != rest[idx[s]].second) ok = false;
                reduced.emplace_back(rest[idx[s]].first / p, -rest[idx[s]].second);
                s = e;
            }
            if (!ok) continue;
            n /= p;
            accumulate(reduced);
            terms = std::move(reduced);
            changed = true;
            break;
        }
    }
    return {n, std::move(terms)};
}

std::int64_t canonical_order_for(std::int64_t d) {
    return (d % 4 == 2) ? 2 * d : d;
}

}  // namespace

std::int64_t totient(std::int64_t n) {
    std::int64_t r = n;
    for (const auto& pp : factor(n)) r = r / pp.p * (pp.p - 1);
    return r;
}

RootOfUnity::RootOfUnity(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("root of unity order must be positive");
    Rat r = Rat(num, den).frac();
    num_ = r.num();
    den_ = r.den();
}

RootOfUnity RootOfUnity::pow(std::int64_t k) const {
    return {mod64(num_ * mod64(k, den_), den_), den_};
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    std::int64_t l = lcm64(a.den_, b.den_);
    return {a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l};
}

CycloRat::CycloRat(Rat r) {
    if (!r.is_zero()) terms_.emplace_back(0, r);
}

CycloRat CycloRat::canonical(std::int64_t order, std::vector<Term> raw) {
    auto [n, t] = minimize(order, reduce(order, std::move(raw)));
    return CycloRat(n, std::move(t));
}

CycloRat CycloRat::root(const RootOfUnity& z, const Rat& coeff) {
    if (coeff.is_zero()) return {};
    std::int64_t n = canonical_order_for(z.order());
    std::int64_t i = z.num() * (n / z.order());
    return canonical(n, {{i, coeff}});
}

Rat CycloRat::rational() const {
    if (!is_rational()) throw std::logic_error("cyclotomic number is not rational");
    return terms_.empty() ? Rat() : terms_.front().second;
}

std::vector<Rat> CycloRat::coords() const {
    // enumerate basis exponents of Q(zeta_order)
    std::vector<Rat> out;
    auto cms = component_maps(order_);
    std::size_t pos = 0;
    for (std::int64_t i = 0; i < order_; ++i) {
        bool basis = true;
        for (const auto& cm : cms) {
            std::int64_t k = cm(i) / (cm.pp.q / cm.pp.p);
            if ((cm.pp.p == 2) ? (k != 0) : (k == 0)) basis = false;
        }
        if (!basis) continue;
        if (pos < terms_.size() && terms_[pos].first == i)
            out.push_back(terms_[pos++].second);
        else
            out.emplace_back(0);
    }
    return out;
}

std::vector<CycloRat::Term> CycloRat::embedded_terms(std::int64_t n) const {
    if (n % order_ != 0) throw std::invalid_argument("embedding into a field of incompatible order");
    std::vector<Term> t = terms_;
    for (auto& x : t) x.first *= n / order_;
    return reduce(n, std::move(t));
}

CycloRat CycloRat::operator-() const {
    CycloRat r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

CycloRat& CycloRat::operator+=(const CycloRat& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (order_ == o.order_) {
        std::vector<Term> t = terms_;
        t.insert(t.end(), o.terms_.begin(), o.terms_.end());
        accumulate(t);
        auto [n, m] = minimize(order_, std::move(t));
        return *this = CycloRat(n, std::move(m));
    }
    std::int64_t l = lcm64(order_, o.order_);
    std::vector<Term> t = embedded_terms(l);
    auto u = o.embedded_terms(l);
    t.insert(t.end(), u.begin(), u.end());
    accumulate(t);
    auto [n, m] = minimize(l, std::move(t));
    return *this = CycloRat(n, std::move(m));
}

CycloRat& CycloRat::operator-=(const CycloRat& o) {
    return *this += -o;
}

CycloRat operator*(const CycloRat& a, const CycloRat& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_rational()) return b.scaled(a.terms_.front().second);
    if (b.is_rational()) return a.scaled(b.terms_.front().second);
    std::int64_t l = lcm64(a.order_, b.order_);
    std::vector<CycloRat::Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [i, c] : a.terms_)
        for (const auto& [j, d] : b.terms_) prod.emplace_back(i * (l / a.order_) + j * (l / b.order_), c * d);
    return CycloRat::canonical(l, std::move(prod));
}

CycloRat& CycloRat::operator*=(const CycloRat& o) {
    return *this = *this * o;
}

CycloRat CycloRat::scaled(const Rat& r) const {
    if (r.is_zero()) return {};
    CycloRat out = *this;
    for (auto& t : out.terms_) t.second *= r;
    return out;
}

CycloRat CycloRat::rotated(const RootOfUnity& z) const {
    if (z.is_one() || is_zero()) return *this;
    std::int64_t zn = canonical_order_for(z.order());
    std::int64_t l = lcm64(order_, zn);
    std::int64_t shift = z.num() * (l / z.order());
    std::vector<Term> t = terms_;
    for (auto& x : t) x.first = x.first * (l / order_) + shift;
    return canonical(l, std::move(t));
}

CycloRat CycloRat::galois(std::int64_t k) const {
    if (gcd64(mod64(k, order_), order_) != 1 && order_ > 1) throw std::invalid_argument("galois: exponent not a unit");
    if (is_rational()) return *this;
    std::vector<Term> t = terms_;
    for (auto& x : t) x.first = mod64(x.first * mod64(k, order_), order_);
    return canonical(order_, std::move(t));
}

Rat CycloRat::norm() const {
    CycloRat acc(1);
    for (std::int64_t k = 1; k < std::max<std::int64_t>(order_, 2); ++k)
        if (gcd64(k, order_) == 1) acc *= galois(k);
    return acc.rational();
}

CycloRat CycloRat::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (is_rational()) return CycloRat(terms_.front().second.inverse());
    CycloRat others(1);
    for (std::int64_t k = 2; k < order_; ++k)
        if (gcd64(k, order_) == 1) others *= galois(k);
    Rat nm = (*this * others).rational();
    return others.scaled(nm.inverse());
}

std::strong_ordering operator<=>(const CycloRat& a, const CycloRat& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = a.terms_[i].first <=> b.terms_[i].first; c != 0) return c;
        if (auto c = a.terms_[i].second <=> b.terms_[i].second; c != 0) return c;
    }
    return a.terms_.size() <=> b.terms_.size();
}

bool CycloRat::is_compound() const noexcept {
    return terms_.size() > 1;
}

std::string CycloRat::str() const {
    if (terms_.empty()) return "0";
    if (is_rational()) return terms_.front().second.str();
    std::string out;
    bool first = true;
    for (const auto& [i, c] : terms_) {
        std::string atom;
        if (i == 0) {
            atom.clear();
        } else {
            atom = "zeta(" + std::to_string(order_) + ")";
            if (i != 1) atom += "^" + std::to_string(i);
        }
        Rat mag = c.sign() < 0 ? -c : c;
        std::string body;
        if (atom.empty())
            body = mag.str();
        else if (mag == Rat(1))
            body = atom;
        else
            body = mag.str() + "*" + atom;
        if (first)
            out += (c.sign() < 0 ? "-" : "") + body;
        else
            out += (c.sign() < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

}  // namespace slopelab

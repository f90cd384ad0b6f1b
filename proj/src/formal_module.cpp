#include "slopelab/formal_module.hpp"

#include <algorithm>
#include <stdexcept>

namespace slopelab {

// ---------------------------------------------------------------- RegularPart

RegularPart::RegularPart(std::vector<Rat> exponents) : exps_(std::move(exponents)) {
    for (auto& e : exps_) e = e.frac();
    std::sort(exps_.begin(), exps_.end());
}

RegularPart RegularPart::trivial(std::int64_t rank) {
    if (rank < 0) throw std::invalid_argument("rank must be >= 0");
    return RegularPart(std::vector<Rat>(static_cast<std::size_t>(rank), Rat(0)));
}

RegularPart RegularPart::dual() const {
    std::vector<Rat> out;
    out.reserve(exps_.size());
    for (const auto& e : exps_) out.push_back(-e);
    return RegularPart(std::move(out));
}

RegularPart RegularPart::pullback(std::int64_t q) const {
    std::vector<Rat> out;
    out.reserve(exps_.size());
    for (const auto& e : exps_) out.push_back(e * Rat(q));
    return RegularPart(std::move(out));
}

RegularPart RegularPart::pushforward(std::int64_t d) const {
    std::vector<Rat> out;
    out.reserve(exps_.size() * static_cast<std::size_t>(d));
    for (const auto& e : exps_)
        for (std::int64_t j = 0; j < d; ++j) out.push_back((e + Rat(j)) / Rat(d));
    return RegularPart(std::move(out));
}

RegularPart RegularPart::tensor(const RegularPart& o) const {
    std::vector<Rat> out;
    out.reserve(exps_.size() * o.exps_.size());
    for (const auto& a : exps_)
        for (const auto& b : o.exps_) out.push_back(a + b);
    return RegularPart(std::move(out));
}

RegularPart RegularPart::direct_sum(const RegularPart& o) const {
    std::vector<Rat> out = exps_;
    out.insert(out.end(), o.exps_.begin(), o.exps_.end());
    return RegularPart(std::move(out));
}

// ----------------------------------------------------------- ElementaryModule

namespace {

// Least conjugate phi(zeta_p^j u). Candidates are narrowed term by term, so
// only leading coefficients are rotated in the common case.
RamifiedExponent galois_representative(const RamifiedExponent& phi) {
    const std::int64_t p = phi.ram();
    if (p == 1) return phi;
    std::vector<std::int64_t> cand(static_cast<std::size_t>(p));
    for (std::int64_t j = 0; j < p; ++j) cand[static_cast<std::size_t>(j)] = j;
    for (const auto& [k, c] : phi.terms()) {
        if (cand.size() == 1) break;
        std::map<std::int64_t, CycloRat> cache;  // jk mod p -> rotated coefficient
        const CycloRat* best = nullptr;
        std::vector<std::int64_t> next;
        for (auto j : cand) {
            std::int64_t r = mod64(j * k, p);
            auto it = cache.find(r);
            if (it == cache.end()) it = cache.emplace(r, c.rotated(RootOfUnity(r, p))).first;
            const CycloRat& v = it->second;
            if (best == nullptr || v < *best) {
                best = &v;
                next.assign(1, j);
            } else if (v == *best) {
                next.push_back(j);
            }
        }
        cand = std::move(next);
    }
    if (cand.front() == 0) return phi;
    return phi.substitute(RootOfUnity(cand.front(), p), 1);
}

}  // namespace

ElementaryModule ElementaryModule::make(std::int64_t p, std::vector<RamifiedExponent::Term> phi, RegularPart reg) {
    if (p < 1) throw std::invalid_argument("ramification must be >= 1");
    RamifiedExponent e(p, std::move(phi));
    const std::int64_t d = p / e.ram();
    if (d > 1) reg = reg.pushforward(d);
    return ElementaryModule(galois_representative(e), std::move(reg));
}

ElementaryModule ElementaryModule::make(std::int64_t p, const RamifiedExponent& phi, RegularPart reg) {
    if (p % phi.ram() != 0) throw std::invalid_argument("ramification must be a multiple of the exponent's");
    return make(p, phi.terms_at(p), std::move(reg));
}

// ---------------------------------------------------------------- FormalModule

FormalModule::FormalModule(std::vector<ElementaryModule> factors) {
    std::erase_if(factors, [](const ElementaryModule& e) { return e.reg_.rank() == 0; });
    std::sort(factors.begin(), factors.end(),
              [](const ElementaryModule& a, const ElementaryModule& b) { return a.phi_ < b.phi_; });
    for (auto& f : factors) {
        if (!factors_.empty() && factors_.back().phi_ == f.phi_)
            factors_.back().reg_ = factors_.back().reg_.direct_sum(f.reg_);
        else
            factors_.push_back(std::move(f));
    }
}

std::int64_t FormalModule::rank() const noexcept {
    std::int64_t r = 0;
    for (const auto& f : factors_) r += f.rank();
    return r;
}

std::int64_t FormalModule::regular_rank() const noexcept {
    std::int64_t r = 0;
    for (const auto& f : factors_)
        if (f.is_regular()) r += f.rank();
    return r;
}

namespace {

std::string exps_str(const RegularPart& r) {
    std::string s = "[";
    for (std::size_t i = 0; i < r.exponents().size(); ++i) s += (i ? ", " : "") + r.exponents()[i].str();
    return s + "]";
}

}  // namespace

std::string str(const ElementaryModule& e) {
    const std::string tail = "rank=" + std::to_string(e.reg().rank()) + ", exp=" + exps_str(e.reg()) + ")";
    if (e.is_regular()) return "Reg(" + tail;
    return "El(" + std::to_string(e.ram()) + ", " + e.phi().str() + ", " + tail;
}

std::string FormalModule::str() const {
    if (factors_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? " + " : "") + slopelab::str(factors_[i]);
    return s;
}

// ------------------------------------------------------------------ operations

Rat slope(const ElementaryModule& m) {
    return Rat(m.phi().pole_order(), m.ram());
}

SlopeMultiset slopes(const FormalModule& m) {
    SlopeMultiset out;
    for (const auto& f : m.factors()) out[slope(f)] += f.rank();
    return out;
}

Rat irregularity(const FormalModule& m) {
    Rat s;
    for (const auto& [r, mult] : slopes(m)) s += r * Rat(mult);
    return s;
}

Rat max_slope(const FormalModule& m) {
    Rat best;
    for (const auto& f : m.factors()) best = std::max(best, slope(f));
    return best;
}

FormalModule direct_sum(const FormalModule& a, const FormalModule& b) {
    std::vector<ElementaryModule> f = a.factors();
    f.insert(f.end(), b.factors().begin(), b.factors().end());
    return FormalModule(std::move(f));
}

FormalModule dual(const FormalModule& m) {
    std::vector<ElementaryModule> out;
    out.reserve(m.factors().size());
    for (const auto& f : m.factors()) out.push_back(ElementaryModule::make(f.ram(), -f.phi(), f.reg().dual()));
    return FormalModule(std::move(out));
}

namespace {

// q^+ El(p, phi, R): the fibre product of u^p = x and v^q = x normalizes to
// gcd(p,q) branches u = zeta_p^j w^{q/g}, v = w^{p/g}.
void pullback_factor(std::int64_t q, const ElementaryModule& f, std::vector<ElementaryModule>& out) {
    const std::int64_t p = f.ram();
    const std::int64_t g = gcd64(p, q);
    const std::int64_t pp = p / g, qq = q / g;
    RegularPart reg = f.reg().pullback(qq);
    for (std::int64_t j = 0; j < g; ++j) {
        std::vector<RamifiedExponent::Term> t;
        t.reserve(f.phi().terms().size());
        for (const auto& [k, c] : f.phi().terms()) t.emplace_back(k * qq, c.rotated(RootOfUnity(j * k, p)));
        out.push_back(ElementaryModule::make(pp, std::move(t), reg));
    }
}

// El(p1,phi1,R1) (x) El(p2,phi2,R2) by the projection formula over the
// lcm cover: branches j < gcd(p1,p2) pair phi1(w^b) with phi2(zeta_{p2}^j w^a).
void tensor_factors(const ElementaryModule& f1, const ElementaryModule& f2, std::vector<ElementaryModule>& out) {
    const std::int64_t p1 = f1.ram(), p2 = f2.ram();
    const std::int64_t g = gcd64(p1, p2);
    const std::int64_t a = p1 / g, b = p2 / g;
    const std::int64_t l = p1 * b;
    RegularPart reg = f1.reg().pullback(b).tensor(f2.reg().pullback(a));
    auto base = f1.phi().terms_at(l);
    for (std::int64_t j = 0; j < g; ++j) {
        std::vector<RamifiedExponent::Term> t = base;
        for (const auto& [k, c] : f2.phi().terms()) t.emplace_back(k * a, c.rotated(RootOfUnity(j * k, p2)));
        out.push_back(ElementaryModule::make(l, std::move(t), reg));
    }
}

}  // namespace

FormalModule pullback(std::int64_t q, const FormalModule& m) {
    if (q < 1) throw std::invalid_argument("pullback degree must be >= 1");
    if (q == 1) return m;
    std::vector<ElementaryModule> out;
    for (const auto& f : m.factors()) pullback_factor(q, f, out);
    return FormalModule(std::move(out));
}

FormalModule pushforward(std::int64_t p, const FormalModule& m) {
    if (p < 1) throw std::invalid_argument("pushforward degree must be >= 1");
    if (p == 1) return m;
    std::vector<ElementaryModule> out;
    out.reserve(m.factors().size());
    for (const auto& f : m.factors())
        out.push_back(ElementaryModule::make(f.ram() * p, f.phi().terms(), f.reg()));
    return FormalModule(std::move(out));
}

FormalModule tensor(const FormalModule& a, const FormalModule& b) {
    std::vector<ElementaryModule> out;
    for (const auto& f1 : a.factors())
        for (const auto& f2 : b.factors()) tensor_factors(f1, f2, out);
    return FormalModule(std::move(out));
}

FormalModule unit_module() {
    return FormalModule(ElementaryModule::regular(RegularPart::trivial(1)));
}

}  // namespace slopelab

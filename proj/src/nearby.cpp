#include "slopelab/nearby.hpp"

#include <stdexcept>

namespace slopelab {

std::int64_t psi_dim(const FormalModule& m, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("psi_dim: k must be >= 1");
    return k * m.regular_rank();
}

bool is_regular(const FormalModule& m) {
    for (const auto& f : m.factors())
        if (!f.is_regular()) return false;
    return true;
}

std::set<Rat> nearby_slope_candidates(const FormalModule& m, std::int64_t p) {
    if (p < 1) throw std::invalid_argument("nearby slopes: p must be >= 1");
    std::set<Rat> out;
    for (const auto& f : m.factors()) out.insert(slope(f) / Rat(p));
    return out;
}

FormalModule witness_twist(const FormalModule& m, const Rat& r, std::int64_t p) {
    if (p < 1) throw std::invalid_argument("witness: p must be >= 1");
    if (r.sign() > 0) {
        for (const auto& f : m.factors()) {
            if (slope(f) != r) continue;
            return FormalModule(ElementaryModule::make(p * f.ram(), (-f.phi()).terms(), RegularPart::trivial(1)));
        }
    }
    throw std::invalid_argument("no factor of slope " + r.str());
}

std::int64_t twisted_psi_dim(const FormalModule& m, const FormalModule& twist, std::int64_t p) {
    return psi_dim(tensor(m, pullback(p, twist)), p);
}

namespace {

// With source_only, psi is taken on the first factor of slope r alone. psi is
// additive over direct sums and never negative, so a positive value there is
// already a lower bound for the whole module.
MemberWitness member_witness(const FormalModule& m, const Rat& r, std::int64_t p, bool source_only) {
    MemberWitness w;
    w.slope = r / Rat(p);
    w.twist = (r.sign() > 0) ? witness_twist(m, r, p) : unit_module();
    if (source_only) {
        for (const auto& f : m.factors())
            if (slope(f) == r) {
                w.psi = twisted_psi_dim(FormalModule(f), w.twist, p);
                break;
            }
    } else {
        w.psi = twisted_psi_dim(m, w.twist, p);
    }
    if (w.psi <= 0)
        throw std::logic_error("witness twist for nearby slope " + w.slope.str() + " has vanishing psi");
    return w;
}

std::vector<MemberWitness> member_witnesses(const FormalModule& m, std::int64_t p, bool source_only) {
    std::set<Rat> seen;
    std::vector<MemberWitness> out;
    for (const auto& f : m.factors()) {
        Rat r = slope(f);
        if (seen.insert(r).second) out.push_back(member_witness(m, r, p, source_only));
    }
    return out;
}

}  // namespace

std::set<Rat> nearby_slopes(const FormalModule& m, std::int64_t p) {
    std::set<Rat> out;
    for (const auto& w : member_witnesses(m, p, true)) out.insert(w.slope);
    return out;
}

std::vector<Rat> non_member_slopes(const FormalModule& m, std::int64_t p, const ExhaustionBounds& b) {
    auto members = nearby_slope_candidates(m, p);
    std::set<Rat> out;
    for (std::int64_t e = 1; e <= b.max_ram; ++e)
        for (std::int64_t k = 0; k <= b.max_pole; ++k) {
            Rat s(k, e);
            if (!members.contains(s)) out.insert(s);
        }
    return {out.begin(), out.end()};
}

std::vector<FormalModule> exhaustion_family(const FormalModule& m, const Rat& s, const ExhaustionBounds& b) {
    std::vector<FormalModule> out;
    if (s.is_zero()) {
        for (std::int64_t e = 1; e <= b.max_ram; ++e)
            out.emplace_back(ElementaryModule::make(e, std::vector<RamifiedExponent::Term>{}, RegularPart::trivial(1)));
        return out;
    }
    std::set<CycloRat> coeffs{CycloRat(1), CycloRat(-1)};
    for (const auto& f : m.factors())
        if (!f.is_regular()) coeffs.insert(-f.phi().leading_coefficient());
    for (std::int64_t e = s.den(); e <= b.max_ram; e += s.den()) {
        std::int64_t k = s.num() * (e / s.den());
        if (k > b.max_pole) break;
        for (const auto& c : coeffs)
            out.emplace_back(ElementaryModule::make(e, {{-k, c}}, RegularPart::trivial(1)));
    }
    return out;
}

bool NearbyCertificate::ok() const {
    for (const auto& n : non_members)
        if (n.counterexample) return false;
    for (const auto& w : members)
        if (w.psi <= 0) return false;
    return true;
}

std::int64_t NearbyCertificate::twists_tested() const {
    std::int64_t n = 0;
    for (const auto& c : non_members) n += c.twists_tested;
    return n;
}

NearbyCertificate certify_nearby_slopes(const FormalModule& m, std::int64_t p, const ExhaustionBounds& b,
                                        Execution exec) {
    NearbyCertificate cert;
    cert.p = p;
    cert.bounds = b;
    cert.members = member_witnesses(m, p, false);
    for (const auto& w : cert.members) cert.slopes.insert(w.slope);

    struct Trial {
        std::size_t slot;
        FormalModule twist;
        std::int64_t psi = 0;
    };
    std::vector<Trial> trials;
    for (const auto& s : non_member_slopes(m, p, b)) {
        cert.non_members.push_back({s, 0, std::nullopt});
        for (auto& n : exhaustion_family(m, s, b)) trials.push_back({cert.non_members.size() - 1, std::move(n)});
    }

    const auto count = static_cast<std::int64_t>(trials.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
        for (std::int64_t i = 0; i < count; ++i) {
            auto& t = trials[static_cast<std::size_t>(i)];
            t.psi = twisted_psi_dim(m, t.twist, p);
        }
    } else {
        for (auto& t : trials) t.psi = twisted_psi_dim(m, t.twist, p);
    }

    for (const auto& t : trials) {
        auto& nm = cert.non_members[t.slot];
        ++nm.twists_tested;
        if (t.psi != 0 && !nm.counterexample) nm.counterexample = t.twist.str();
    }
    return cert;
}

}  // namespace slopelab

#include "slopelab/blowup.hpp"

#include <algorithm>
#include <set>

namespace slopelab {

std::string to_string(ComponentKind k) {
    switch (k) {
        case ComponentKind::strict_z: return "strict-Z";
        case ComponentKind::strict_s: return "strict-S";
        case ComponentKind::exceptional: break;
    }
    return "exceptional";
}

std::string to_string(BlowupMode m) { return m == BlowupMode::toric ? "toric" : "abstract"; }

BlowupState BlowupState::initial(const BlowupInitial& init, BlowupMode mode) {
    if (init.dim == 0) throw std::invalid_argument("dimension must be positive");
    if (init.a.dim() != init.dim) throw std::invalid_argument("Z.a must have one entry per coordinate");
    if (init.r.size() != init.dim) throw std::invalid_argument("S.r must have one entry per coordinate");
    if (init.a.is_zero()) throw std::invalid_argument("Z must be nonzero");
    for (const auto& x : init.r)
        if (x.sign() < 0) throw std::invalid_argument("S.r entries must be >= 0");

    BlowupState s;
    s.mode_ = mode;
    s.init_ = init;
    std::vector<std::size_t> cone;
    for (std::size_t i = 0; i < init.dim; ++i) {
        Component c;
        c.id = "D" + std::to_string(i + 1);
        c.kind = init.a[i] > 0 ? ComponentKind::strict_z : ComponentKind::strict_s;
        if (mode == BlowupMode::toric) {
            std::vector<std::int64_t> e(init.dim, 0);
            e[i] = 1;
            c.ray = MultiIndex(std::move(e));
        }
        c.vZ = init.a[i];
        c.vS = init.r[i];
        s.degS_ += init.r[i];
        s.comps_.push_back(std::move(c));
        cone.push_back(i);
    }
    if (mode == BlowupMode::toric) s.fan_.push_back(std::move(cone));
    return s;
}

std::size_t BlowupState::index_of(const std::string& id) const {
    for (std::size_t k = 0; k < comps_.size(); ++k)
        if (comps_[k].id == id) return k;
    throw std::invalid_argument("unknown component " + id);
}

namespace {

// Incidences of the center with every existing component: alpha for the
// coordinate hyperplanes' Z-side, eps for their S-side and for exceptionals.
struct Incidence {
    std::vector<std::int64_t> alpha, epsS, epsE;
};

Incidence toric_incidence(const BlowupState& s, const ToricCenter& c, std::vector<std::size_t>& tau) {
    if (c.ids.size() < 2)
        throw std::invalid_argument("center must span a cone of dimension >= 2 (a ray is a divisor; condition (ii))");
    for (const auto& id : c.ids) tau.push_back(s.index_of(id));
    std::sort(tau.begin(), tau.end());
    if (std::adjacent_find(tau.begin(), tau.end()) != tau.end())
        throw std::invalid_argument("center lists a component twice");
    bool in_fan = std::any_of(s.fan().begin(), s.fan().end(), [&](const std::vector<std::size_t>& sigma) {
        return std::includes(sigma.begin(), sigma.end(), tau.begin(), tau.end());
    });
    if (!in_fan) throw std::invalid_argument("center is not a cone of the current fan (condition (iii))");

    std::size_t n = s.data().dim;
    Incidence inc{std::vector<std::int64_t>(n, 0), std::vector<std::int64_t>(n, 0),
                  std::vector<std::int64_t>(s.exceptional_count(), 0)};
    for (std::size_t k : tau) {
        if (k < n) {
            inc.alpha[k] = 1;
            inc.epsS[k] = 1;
        } else {
            inc.epsE[k - n] = 1;
        }
    }
    return inc;
}

Incidence abstract_incidence(const BlowupState& s, const AbstractCenter& c) {
    std::size_t n = s.data().dim;
    if (c.alpha.size() != n) throw std::invalid_argument("alpha must have one entry per coordinate");
    if (c.epsS.size() != n) throw std::invalid_argument("epsS must have one entry per coordinate");
    if (c.epsE.size() != s.exceptional_count())
        throw std::invalid_argument("epsE must have one entry per exceptional component (" +
                                    std::to_string(s.exceptional_count()) + ")");
    for (std::size_t i = 0; i < n; ++i) {
        if (c.alpha[i] < 0) throw std::invalid_argument("alpha entries must be >= 0");
        if (c.alpha[i] > 0 && s.data().a[i] == 0)
            throw std::invalid_argument("alpha is positive on D" + std::to_string(i + 1) + ", which is not in Z");
    }
    auto binary = [](const std::vector<std::int64_t>& v, const char* name) {
        for (auto x : v)
            if (x != 0 && x != 1) throw std::invalid_argument(std::string(name) + " entries must be 0 or 1");
    };
    binary(c.epsS, "epsS");
    binary(c.epsE, "epsE");
    return {c.alpha, c.epsS, c.epsE};
}

}  // namespace

BlowupState blow_up(const BlowupState& s, const BlowupStep& step) {
    const std::size_t n = s.init_.dim;
    std::vector<std::size_t> tau;
    Incidence inc;
    if (const auto* t = std::get_if<ToricCenter>(&step)) {
        if (s.mode_ != BlowupMode::toric) throw std::invalid_argument("toric center in abstract mode");
        inc = toric_incidence(s, *t, tau);
    } else {
        if (s.mode_ != BlowupMode::abstract) throw std::invalid_argument("abstract center in toric mode");
        inc = abstract_incidence(s, std::get<AbstractCenter>(step));
    }

    std::int64_t za = 0;
    for (std::size_t i = 0; i < n; ++i) za += s.init_.a[i] * inc.alpha[i];
    if (za == 0) throw std::invalid_argument("center misses the strict transform of Z (condition (i))");

    std::int64_t zE = 0;
    Rat rEps, sE, degS_zE;
    for (std::size_t i = 0; i < n; ++i)
        if (inc.epsS[i]) rEps += s.init_.r[i];
    for (std::size_t k = 0; k < inc.epsE.size(); ++k) {
        if (!inc.epsE[k]) continue;
        const auto& e = s.comps_[n + k];
        zE += e.vZ;
        sE += e.vS;
        degS_zE += s.degS_ * Rat(e.vZ);
    }

    Component p;
    p.id = "E" + std::to_string(s.exceptional_count() + 1);
    p.kind = ComponentKind::exceptional;
    p.vZ = za + zE;
    p.vS = rEps + sE;

    StepAudit audit;
    audit.l0 = s.degS_ * Rat(p.vZ);
    audit.l1 = s.degS_ + degS_zE;
    audit.l2 = rEps + degS_zE;
    audit.l3 = rEps + sE;

    BlowupState out = s;
    if (s.mode_ == BlowupMode::toric) {
        std::vector<std::int64_t> ray(n, 0);
        for (std::size_t k : tau)
            for (std::size_t i = 0; i < n; ++i) ray[i] += (*s.comps_[k].ray)[i];
        p.ray = MultiIndex(ray);
        Rat pairing_s;
        for (std::size_t i = 0; i < n; ++i) pairing_s += Rat(ray[i]) * s.init_.r[i];
        audit.conserved = p.ray->dot(s.init_.a) == p.vZ && pairing_s == p.vS;

        std::size_t pk = s.comps_.size();
        std::vector<std::vector<std::size_t>> fan;
        for (const auto& sigma : s.fan_) {
            if (!std::includes(sigma.begin(), sigma.end(), tau.begin(), tau.end())) {
                fan.push_back(sigma);
                continue;
            }
            for (std::size_t rho : tau) {
                std::vector<std::size_t> cone;
                for (std::size_t k : sigma)
                    if (k != rho) cone.push_back(k);
                cone.push_back(pk);
                std::sort(cone.begin(), cone.end());
                fan.push_back(std::move(cone));
            }
        }
        std::sort(fan.begin(), fan.end());
        out.fan_ = std::move(fan);
    }
    out.comps_.push_back(std::move(p));
    out.audits_.push_back(audit);
    return out;
}

InequalityReport verify_inequality(const BlowupState& s) {
    InequalityReport rep;
    rep.degS = s.degS();
    for (const auto& c : s.components()) {
        if (c.vZ <= 0) continue;
        Rat bound = s.degS() * Rat(c.vZ);
        rep.rows.push_back({c.id, c.kind, c.ray, c.vZ, c.vS, bound, bound - c.vS});
        if (c.vS > bound)
            rep.violations.push_back(c.id + ": vS = " + c.vS.str() + " exceeds degS*vZ = " + bound.str());
    }
    for (std::size_t k = 0; k < s.audits().size(); ++k) {
        const auto& a = s.audits()[k];
        if (a.ok()) continue;
        std::string where = "step " + std::to_string(k + 1) + ": ";
        if (!a.conserved) rep.violations.push_back(where + "multiplicities disagree with the ray pairing");
        if (!(a.l0 >= a.l1 && a.l1 >= a.l2 && a.l2 >= a.l3))
            rep.violations.push_back(where + "inequality chain " + a.l0.str() + " >= " + a.l1.str() + " >= " +
                                     a.l2.str() + " >= " + a.l3.str() + " fails");
    }
    return rep;
}

BlowupState chain_from_script(const BlowupScript& script) {
    auto s = BlowupState::initial(script.init, script.mode);
    for (std::size_t k = 0; k < script.steps.size(); ++k) {
        try {
            s = blow_up(s, script.steps[k]);
        } catch (const std::invalid_argument& e) {
            throw StepError(k + 1, e.what());
        }
    }
    return s;
}

}  // namespace slopelab

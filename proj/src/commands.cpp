#include "slopelab/commands.hpp"

#include <cstdlib>
#include <sstream>

#include "slopelab/checks.hpp"
#include "slopelab/expr.hpp"
#include "slopelab/io.hpp"

namespace slopelab {

using nlohmann::json;

namespace {

json header(const char* command) {
    json j;
    j["schema"] = "1";
    j["command"] = command;
    return j;
}

json slopes_json(const SlopeMultiset& s) {
    json a = json::array();
    for (const auto& [r, m] : s) a.push_back({{"slope", rat_json(r)}, {"multiplicity", m}});
    return a;
}

json set_json(const std::set<Rat>& s) {
    json a = json::array();
    for (const auto& r : s) a.push_back(rat_json(r));
    return a;
}

std::string set_text(const std::set<Rat>& s) {
    std::string out = "{";
    for (const auto& r : s) out += (out.size() > 1 ? ", " : "") + r.str();
    return out + "}";
}

std::string slopes_text(const SlopeMultiset& s) {
    std::string out = "{";
    for (const auto& [r, m] : s) out += (out.size() > 1 ? ", " : "") + r.str() + ":" + std::to_string(m);
    return out + "}";
}

json multi_index_json(const MultiIndex& m) { return m.entries(); }

}  // namespace

std::uint64_t seed_from_env() {
    if (const char* s = std::getenv("SLOPELAB_SEED")) {
        char* end = nullptr;
        auto v = std::strtoull(s, &end, 10);
        if (end != s && *end == '\0') return v;
    }
    return kDefaultSeed;
}

CommandResult run_slopes(const std::string& expr) {
    auto m = module_from_text(expr);
    CommandResult r;
    r.json = header("slopes");
    r.json["module"] = m.str();
    r.json["rank"] = m.rank();
    r.json["slopes"] = slopes_json(slopes(m));
    r.json["irregularity"] = rat_json(irregularity(m));
    r.json["regular"] = is_regular(m);
    std::ostringstream t;
    t << "module        " << m.str() << "\n"
      << "rank          " << m.rank() << "\n"
      << "slopes        " << slopes_text(slopes(m)) << "\n"
      << "irregularity  " << irregularity(m).str() << "\n";
    r.text = t.str();
    return r;
}

CommandResult run_nearby(const std::string& expr, std::int64_t p, bool cert, const ExhaustionBounds& b) {
    if (p < 1) throw InputError("-p must be >= 1");
    auto m = module_from_text(expr);
    CommandResult r;
    r.json = header("nearby");
    r.json["module"] = m.str();
    r.json["p"] = p;
    std::ostringstream t;
    t << "module         " << m.str() << "\n";
    if (!cert) {
        auto s = nearby_slopes(m, p);
        r.json["nearby_slopes"] = set_json(s);
        t << "nearby slopes along x^" << p << "  " << set_text(s) << "\n";
        r.text = t.str();
        return r;
    }
    auto c = certify_nearby_slopes(m, p, b);
    r.json["nearby_slopes"] = set_json(c.slopes);
    r.json["bounds"] = {{"max_ram", b.max_ram}, {"max_pole", b.max_pole}};
    json members = json::array();
    for (const auto& w : c.members)
        members.push_back({{"slope", rat_json(w.slope)}, {"witness", w.twist.str()}, {"psi_dim", w.psi}});
    r.json["members"] = members;
    json non = json::array();
    for (const auto& n : c.non_members) {
        json e = {{"slope", rat_json(n.slope)}, {"twists_tested", n.twists_tested}};
        e["counterexample"] = n.counterexample ? json(*n.counterexample) : json(nullptr);
        non.push_back(e);
    }
    r.json["non_members"] = non;
    r.json["twists_tested"] = c.twists_tested();
    r.json["certified"] = c.ok();
    t << "nearby slopes along x^" << p << "  " << set_text(c.slopes) << "\n";
    for (const auto& w : c.members)
        t << "  member " << w.slope.str() << ": witness " << w.twist.str() << ", twisted psi dim " << w.psi << "\n";
    std::int64_t bad = 0;
    for (const auto& n : c.non_members)
        if (n.counterexample) {
            ++bad;
            t << "  NON-MEMBER FAILS " << n.slope.str() << ": " << *n.counterexample << "\n";
        }
    t << "  non-members: " << c.non_members.size() << " slopes k/e (e <= " << b.max_ram << ", k <= " << b.max_pole
      << "), " << c.twists_tested() << " twists, " << bad << " with nonzero psi\n";
    t << (c.ok() ? "certified\n" : "CERTIFICATE FAILED\n");
    r.text = t.str();
    if (!c.ok()) r.exit_code = exit_violation;
    return r;
}

CommandResult run_bound(const GoodModel& m, const MonomialFunction& f) {
    if (f.exponent().dim() != m.dim()) throw InputError("monomial and model dimensions differ");
    CommandResult r;
    r.json = header("bound");
    auto gs = highest_generic_slopes(m);
    auto bound = nearby_slope_bound(m);
    auto th = vanishing_threshold(m, f);
    json rj = json::array();
    for (const auto& x : gs.r) rj.push_back(rat_json(x));
    r.json["f"] = f.str();
    r.json["generic_slopes"] = rj;
    r.json["bound"] = rat_json(bound);
    r.json["threshold"] = rat_json(th.value);
    r.json["threshold_applicable"] = th.applicable;

    std::ostringstream t;
    t << "f                    " << f.str() << "\n";
    t << "generic slopes       (";
    for (std::size_t i = 0; i < gs.r.size(); ++i) t << (i ? ", " : "") << gs.r[i].str();
    t << ")\n";
    t << "nearby slope bound   " << bound.str() << "\n";
    t << "vanishing threshold  " << th.value.str() << (th.applicable ? "" : "  (zero locus not inside the pole locus)")
      << "\n";

    json verdicts = json::array();
    t << "factors\n";
    for (std::size_t k = 0; k < m.factors().size(); ++k) {
        const auto& fac = m.factors()[k];
        auto plain = lemma_vanishing(fac.pole, std::nullopt, f);
        auto twisted = lemma_vanishing(fac.pole, f.exponent(), f);
        verdicts.push_back({{"factor", k + 1},
                            {"pole", multi_index_json(fac.pole)},
                            {"plain", to_string(plain)},
                            {"twisted_by_f", to_string(twisted)}});
        t << "  " << k + 1 << " pole " << fac.pole.str() << "  plain: " << to_string(plain)
          << "  twisted by 1/f: " << to_string(twisted) << "\n";
    }
    r.json["verdicts"] = verdicts;

    json spots = json::array();
    bool violated = false;
    std::vector<std::int64_t> c(m.dim(), 1);
    std::vector<MonomialFactor> inside;
    for (const auto& fac : m.factors())
        if (is_subset(fac.pole.support(), f.zero_locus())) inside.push_back(fac);
    t << "curve checks (factors with pole support in supp a: " << inside.size() << " of " << m.factors().size()
      << ")\n";
    for (;;) {
        MultiIndex cc(c);
        auto all = restricted_nearby_slopes(m, f, cc);
        json spot = {{"c", multi_index_json(cc)}, {"k", curve_degree(f, cc)}, {"nearby_slopes", set_json(all)}};
        t << "  c=" << cc.str() << " k=" << curve_degree(f, cc) << " slopes " << set_text(all);
        if (!inside.empty()) {
            auto within = restricted_nearby_slopes(GoodModel(m.dim(), inside), f, cc);
            bool ok = within.empty() || *within.rbegin() <= th.value;
            violated = violated || !ok;
            spot["comparable_slopes"] = set_json(within);
            spot["within_threshold"] = ok;
            t << "  comparable " << set_text(within) << (ok ? " <= " : " > ") << th.value.str();
        }
        t << "\n";
        spots.push_back(spot);
        std::size_t i = 0;
        while (i < c.size() && c[i] == 2) c[i++] = 1;
        if (i == c.size()) break;
        ++c[i];
    }
    r.json["curve_checks"] = spots;
    r.json["violation"] = violated;
    if (violated) {
        r.exit_code = exit_violation;
        t << "VIOLATION: a curve restriction exceeds the threshold\n";
    }
    r.text = t.str();
    return r;
}

CommandResult run_blowup(const BlowupScript& script, bool verify) {
    auto s = chain_from_script(script);
    auto rep = verify_inequality(s);
    CommandResult r;
    r.json = header("blowup");
    r.json["mode"] = to_string(script.mode);
    r.json["degS"] = rat_json(s.degS());
    json comps = json::array();
    std::ostringstream t;
    t << "mode " << to_string(script.mode) << ", deg S = " << s.degS().str() << ", " << script.steps.size()
      << " steps\n";
    t << "id    kind         ray           vZ    vS      bound   margin\n";
    for (const auto& c : s.components()) {
        json e = {{"id", c.id}, {"kind", to_string(c.kind)}, {"vZ", c.vZ}, {"vS", rat_json(c.vS)}};
        e["ray"] = c.ray ? multi_index_json(*c.ray) : json(nullptr);
        std::string bound = "-", margin = "-";
        if (c.vZ > 0) {
            Rat b = s.degS() * Rat(c.vZ);
            e["bound"] = rat_json(b);
            e["margin"] = rat_json(b - c.vS);
            bound = b.str();
            margin = (b - c.vS).str();
        } else {
            e["bound"] = nullptr;
            e["margin"] = nullptr;
        }
        comps.push_back(e);
        char line[160];
        std::snprintf(line, sizeof line, "%-5s %-12s %-13s %-5lld %-7s %-7s %s\n", c.id.c_str(),
                      to_string(c.kind).c_str(), c.ray ? c.ray->str().c_str() : "-", static_cast<long long>(c.vZ),
                      c.vS.str().c_str(), bound.c_str(), margin.c_str());
        t << line;
    }
    r.json["components"] = comps;
    json audits = json::array();
    for (std::size_t k = 0; k < s.audits().size(); ++k) {
        const auto& a = s.audits()[k];
        audits.push_back({{"step", k + 1},
                          {"l0", rat_json(a.l0)},
                          {"l1", rat_json(a.l1)},
                          {"l2", rat_json(a.l2)},
                          {"l3", rat_json(a.l3)},
                          {"conserved", a.conserved},
                          {"ok", a.ok()}});
        if (verify)
            t << "step " << k + 1 << ": " << a.l0.str() << " >= " << a.l1.str() << " >= " << a.l2.str()
              << " >= " << a.l3.str() << (a.ok() ? "" : "  FAILS") << "\n";
    }
    r.json["steps"] = audits;
    if (verify) {
        r.json["verified"] = rep.ok();
        r.json["violations"] = rep.violations;
        for (const auto& v : rep.violations) t << "VIOLATION " << v << "\n";
        t << (rep.ok() ? "inequality holds on every component\n" : "INEQUALITY VIOLATED\n");
        if (!rep.ok()) r.exit_code = exit_violation;
    }
    r.text = t.str();
    return r;
}

CommandResult run_selftest(const SelftestOptions& opt) {
    CorpusSize size{opt.cases, std::max<std::size_t>(opt.cases / 5, 1), 2 * opt.cases, opt.cases};
    auto corpus = make_corpus(opt.seed, size);
    std::vector<SweepResult> results = {
        witness_sweep(corpus.modules, 6, opt.exec),
        exhaustion_sweep(corpus.modules, 3, ExhaustionBounds{}, opt.exec),
        duality_sweep(corpus.modules, 6, opt.exec),
        pushforward_sweep(corpus.modules, 6, opt.exec),
        regularity_sweep(corpus.modules, 6, opt.exec),
        calculus_laws_sweep(corpus.modules, opt.exec),
        monomial_sweep(corpus.models, 3, 3, opt.exec),
        monomial_laws_sweep(opt.seed, 10 * opt.cases, opt.exec),
        blowup_sweep(corpus.chains, opt.exec),
        newton_sweep(),
        roundtrip_sweep(corpus.exprs, opt.exec),
    };
    CommandResult r;
    r.json = header("selftest");
    r.json["seed"] = opt.seed;
    r.json["cases"] = opt.cases;
    json suites = json::array();
    std::ostringstream t;
    t << "selftest seed " << opt.seed << ", cases " << opt.cases << "\n";
    bool all = true;
    for (const auto& s : results) {
        all = all && s.ok();
        suites.push_back({{"name", s.name},
                          {"ok", s.ok()},
                          {"cases", s.cases},
                          {"checks", s.checks},
                          {"failures", s.failure_count},
                          {"first_failures", s.failures},
                          {"notes", s.notes}});
        char line[160];
        std::snprintf(line, sizeof line, "%s %-14s cases %-6lld checks %-9lld failures %lld\n", s.ok() ? "PASS" : "FAIL",
                      s.name.c_str(), static_cast<long long>(s.cases), static_cast<long long>(s.checks),
                      static_cast<long long>(s.failure_count));
        t << line;
        for (const auto& f : s.failures) t << "     " << f << "\n";
        for (const auto& n : s.notes) t << "     note: " << n << "\n";
    }
    r.json["suites"] = suites;
    r.json["ok"] = all;
    t << (all ? "all suites passed\n" : "SELFTEST FAILED\n");
    r.text = t.str();
    if (!all) r.exit_code = exit_violation;
    return r;
}

}  // namespace slopelab

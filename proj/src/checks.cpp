#include "slopelab/checks.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <tuple>
#include <type_traits>

#include "slopelab/fixtures.hpp"
#include "slopelab/generators.hpp"

namespace slopelab {

namespace {

constexpr std::size_t kKeptFailures = 5;

struct CaseLog {
    std::int64_t checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    template <class F>
    void check(bool ok, F&& describe) {
        ++checks;
        if (ok) return;
        if constexpr (std::is_invocable_v<F>)
            failures.push_back(describe());
        else
            failures.push_back(std::string(describe));
    }
};

template <class F>
SweepResult run_cases(std::string name, std::size_t n, Execution exec, F&& body) {
    std::vector<CaseLog> logs(n);
    auto one = [&](std::size_t i) {
        try {
            body(i, logs[i]);
        } catch (const std::exception& e) {
            logs[i].failures.push_back("case " + std::to_string(i) + ": exception: " + e.what());
        }
    };
    const auto count = static_cast<std::int64_t>(n);
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < count; ++i) one(static_cast<std::size_t>(i));
    } else {
        for (std::int64_t i = 0; i < count; ++i) one(static_cast<std::size_t>(i));
    }
    SweepResult r;
    r.name = std::move(name);
    r.cases = count;
    for (auto& log : logs) {
        r.checks += log.checks;
        r.failure_count += static_cast<std::int64_t>(log.failures.size());
        for (auto& f : log.failures)
            if (r.failures.size() < kKeptFailures) r.failures.push_back(std::move(f));
        for (auto& note : log.notes) r.notes.push_back(std::move(note));
    }
    return r;
}

Rng part_rng(std::uint64_t seed, std::uint64_t part) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(part)};
    return Rng(seq);
}

std::string set_str(const std::set<Rat>& s) {
    std::string out = "{";
    for (const auto& r : s) out += (out.size() > 1 ? ", " : "") + r.str();
    return out + "}";
}

std::string slopes_str(const SlopeMultiset& s) {
    std::string out = "{";
    for (const auto& [r, m] : s) out += (out.size() > 1 ? ", " : "") + r.str() + ":" + std::to_string(m);
    return out + "}";
}

}  // namespace

Corpus make_corpus(std::uint64_t seed, const CorpusSize& size) {
    Corpus c;
    auto rm = part_rng(seed, 1);
    for (std::size_t i = 0; i < size.modules; ++i) c.modules.push_back(random_module(rm));
    auto rg = part_rng(seed, 2);
    for (std::size_t i = 0; i < size.models; ++i) {
        ModelShape shape{static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 4)(rg)), 6, 4, 3};
        c.models.push_back(random_good_model(rg, shape));
    }
    auto rb = part_rng(seed, 3);
    for (std::size_t i = 0; i < size.chains; ++i)
        c.chains.push_back(random_blowup_script(rb, i % 2 ? BlowupMode::abstract : BlowupMode::toric, 4, 6));
    auto re = part_rng(seed, 4);
    for (std::size_t i = 0; i < size.exprs; ++i) c.exprs.push_back(random_expr(re));
    return c;
}

SweepResult witness_sweep(const std::vector<FormalModule>& ms, std::int64_t max_p, Execution exec) {
    return run_cases("witness", ms.size(), exec, [&](std::size_t i, CaseLog& log) {
        const auto& m = ms[i];
        for (std::int64_t p = 1; p <= max_p; ++p) {
            for (const auto& [r, mult] : slopes(m)) {
                if (r.is_zero()) continue;
                auto n = witness_twist(m, r, p);
                auto psi = twisted_psi_dim(m, n, p);
                log.check(max_slope(n) == r / Rat(p) && psi > 0, [&] {
                    return m.str() + ", p=" + std::to_string(p) + ", r=" + r.str() + ": witness " + n.str() +
                           " gives psi " + std::to_string(psi);
                });
            }
        }
    });
}

SweepResult exhaustion_sweep(const std::vector<FormalModule>& ms, std::int64_t max_p, const ExhaustionBounds& b,
                             Execution exec) {
    std::vector<std::int64_t> twists(ms.size(), 0);
    auto r = run_cases("exhaustion", ms.size(), exec, [&](std::size_t i, CaseLog& log) {
        const auto& m = ms[i];
        for (std::int64_t p = 1; p <= max_p; ++p) {
            // the outer loop is already parallel
            auto cert = certify_nearby_slopes(m, p, b, Execution::serial);
            twists[i] += cert.twists_tested();
            for (const auto& nm : cert.non_members) {
                log.check(!nm.counterexample, [&] {
                    return m.str() + ", p=" + std::to_string(p) + ": slope " + nm.slope.str() +
                           " predicted absent but twist " + *nm.counterexample + " has nonzero psi";
                });
            }
            log.check(cert.slopes == nearby_slope_candidates(m, p), [&] {
                return m.str() + ", p=" + std::to_string(p) + ": certified " + set_str(cert.slopes);
            });
        }
    });
    std::int64_t total = 0;
    for (auto t : twists) total += t;
    r.notes.push_back(std::to_string(total) + " twists tested (ram <= " + std::to_string(b.max_ram) +
                      ", pole <= " + std::to_string(b.max_pole) + ")");
    return r;
}

SweepResult duality_sweep(const std::vector<FormalModule>& ms, std::int64_t max_p, Execution exec) {
    return run_cases("duality", ms.size(), exec, [&](std::size_t i, CaseLog& log) {
        const auto& m = ms[i];
        auto d = dual(m);
        for (std::int64_t p = 1; p <= max_p; ++p) {
            auto a = nearby_slopes(d, p), b = nearby_slopes(m, p);
            log.check(a == b, [&] {
                return m.str() + ", p=" + std::to_string(p) + ": " + set_str(a) + " vs " + set_str(b);
            });
        }
    });
}

SweepResult pushforward_sweep(const std::vector<FormalModule>& ms, std::int64_t max_p, Execution exec) {
    std::vector<std::int64_t> equal(ms.size(), 0), total(ms.size(), 0);
    auto r = run_cases("pushforward", ms.size(), exec, [&](std::size_t i, CaseLog& log) {
        const auto& m = ms[i];
        for (std::int64_t p = 1; p <= max_p; ++p) {
            auto lhs = nearby_slopes(pushforward(p, m), 1);
            auto rhs = nearby_slopes(m, p);
            log.check(std::includes(rhs.begin(), rhs.end(), lhs.begin(), lhs.end()), [&] {
                return m.str() + ", p=" + std::to_string(p) + ": " + set_str(lhs) + " not inside " + set_str(rhs);
            });
            ++total[i];
            if (lhs == rhs) ++equal[i];
        }
    });
    std::int64_t e = 0, t = 0;
    for (std::size_t i = 0; i < ms.size(); ++i) e += equal[i], t += total[i];
    r.notes.push_back("inclusion was an equality in " + std::to_string(e) + " of " + std::to_string(t) + " cases");
    return r;
}

SweepResult regularity_sweep(const std::vector<FormalModule>& ms, std::int64_t max_p, Execution exec) {
    std::vector<char> regular(ms.size(), 0);
    auto r = run_cases("regularity", ms.size(), exec, [&](std::size_t i, CaseLog& log) {
        const auto& m = ms[i];
        bool reg = is_regular(m);
        regular[i] = reg;
        bool by_slope = m.factors().empty() || max_slope(m).is_zero();
        bool by_nearby = true;
        for (std::int64_t p = 1; p <= max_p; ++p)
            for (const auto& s : nearby_slopes(m, p)) by_nearby = by_nearby && s.is_zero();
        log.check(reg == by_slope && reg == by_nearby, [&] { return m.str() + ": is_regular disagrees"; });
    });
    r.notes.push_back(std::to_string(std::count(regular.begin(), regular.end(), 1)) + " regular modules");
    return r;
}

SweepResult calculus_laws_sweep(const std::vector<FormalModule>& ms, Execution exec) {
    return run_cases("calculus-laws", ms.size(), exec, [&](std::size_t i, CaseLog& log) {
        const auto& m = ms[i];
        const auto& n = ms[(i + 1) % ms.size()];
        const std::string ctx = m.str();
        log.check(dual(dual(m)) == m, ctx + ": dual is not an involution");
        log.check(slopes(dual(m)) == slopes(m), ctx + ": dual changes slopes");
        for (std::int64_t q = 1; q <= 4; ++q) {
            auto pb = pullback(q, m), pf = pushforward(q, m);
            SlopeMultiset up, down;
            for (const auto& [r, k] : slopes(m)) {
                up[r * Rat(q)] += k;
                down[r / Rat(q)] += q * k;
            }
            log.check(slopes(pb) == up && pb.rank() == m.rank(), [&] {
                return ctx + ": pullback(" + std::to_string(q) + ") slopes " + slopes_str(slopes(pb));
            });
            log.check(slopes(pf) == down && pf.rank() == q * m.rank(), [&] {
                return ctx + ": pushforward(" + std::to_string(q) + ") slopes " + slopes_str(slopes(pf));
            });
        }
        // tensor laws on small operands only: ranks multiply quickly
        if (m.rank() * n.rank() <= 48) {
            auto mn = tensor(m, n);
            log.check(mn == tensor(n, m), ctx + ": tensor not commutative");
            log.check(mn.rank() == m.rank() * n.rank(), ctx + ": tensor rank");
        }
        log.check(tensor(m, unit_module()) == m, ctx + ": unit");
        bool all_positive = !m.factors().empty() && slopes(m).begin()->first.sign() > 0;
        if (all_positive)
            for (std::int64_t k = 1; k <= 4; ++k) log.check(psi_dim(m, k) == 0, ctx + ": psi of positive slopes");
    });
}

SweepResult monomial_sweep(const std::vector<GoodModel>& models, std::int64_t max_f, std::int64_t max_c,
                           Execution exec) {
    std::vector<std::int64_t> skipped(models.size(), 0);
    auto r = run_cases("monomial", models.size(), exec, [&](std::size_t i, CaseLog& log) {
        const auto& m = models[i];
        const std::size_t n = m.dim();
        const Rat bound = nearby_slope_bound(m);
        std::vector<std::int64_t> a(n, 0);
        // restricted slopes depend only on (comparable factors, c, deg f|c)
        std::map<std::tuple<std::vector<bool>, std::vector<std::int64_t>, std::int64_t>, std::set<Rat>> memo;
        auto next = [](std::vector<std::int64_t>& v, std::int64_t lo, std::int64_t hi) {
            for (auto& x : v) {
                if (x < hi) {
                    ++x;
                    return true;
                }
                x = lo;
            }
            return false;
        };
        while (next(a, 0, max_f)) {
            MonomialFunction f{MultiIndex(a)};
            auto th = vanishing_threshold(m, f);
            if (th.applicable)
                log.check(th.value <= bound, [&] {
                    return "model " + std::to_string(i) + ", f=" + f.str() + ": threshold " + th.value.str() +
                           " > bound " + bound.str();
                });
            if (m.is_regular()) log.check(th.value.is_zero(), "regular model with nonzero threshold");

            std::vector<MonomialFactor> comparable;
            std::vector<bool> mask;
            for (const auto& fac : m.factors()) {
                mask.push_back(is_subset(fac.pole.support(), f.zero_locus()));
                if (mask.back())
                    comparable.push_back(fac);
                else
                    ++skipped[i];
            }
            if (comparable.empty()) continue;
            GoodModel sub(n, comparable);
            std::vector<std::int64_t> c(n, 1);
            do {
                MultiIndex cc(c);
                auto key = std::make_tuple(mask, c, curve_degree(f, cc));
                auto it = memo.find(key);
                if (it == memo.end()) it = memo.emplace(key, restricted_nearby_slopes(sub, f, cc)).first;
                for (const auto& s : it->second)
                    log.check(s <= th.value, [&] {
                        return "model " + std::to_string(i) + ", f=" + f.str() + ", c=" + cc.str() +
                               ": restricted slope " + s.str() + " > threshold " + th.value.str();
                    });
            } while (next(c, 1, max_c));
        }
    });
    std::int64_t s = 0;
    for (auto k : skipped) s += k;
    r.notes.push_back(std::to_string(s) +
                      " (factor, f) pairs outside the mediant domain (pole support not in supp a) skipped");
    return r;
}

SweepResult monomial_laws_sweep(std::uint64_t seed, std::size_t count, Execution exec) {
    return run_cases("monomial-laws", count, exec, [&](std::size_t i, CaseLog& log) {
        auto rng = part_rng(seed, 100 + i);
        std::size_t n = 1 + rng() % 4;
        // mediant inequality
        auto a = random_multi_index(rng, n, 0, 5);
        if (!a.is_zero()) {
            auto b = random_multi_index(rng, n, 0, 7).restrict_to(a.support());
            auto c = random_multi_index(rng, n, 1, 6);
            Rat best;
            for (auto k : a.support()) best = std::max(best, Rat(b[k], a[k]));
            log.check(Rat(b.dot(c), a.dot(c)) <= best, "mediant fails for b=" + b.str() + ", a=" + a.str());
        }
        // generic slopes are monotone in the factor list
        auto m = random_good_model(rng, ModelShape{n, 6, 4, 3});
        auto before = highest_generic_slopes(m).r;
        auto after = highest_generic_slopes(m.with_factor({random_multi_index(rng, n, 0, 6), std::vector<Rat>(n), 1})).r;
        for (std::size_t k = 0; k < n; ++k) log.check(before[k] <= after[k], "generic slopes decreased");
        // vanishing verdicts never contradict the curve oracle
        auto f = random_monomial_function(rng, n, 4);
        auto pole = random_multi_index(rng, n, 0, 4);
        std::optional<MultiIndex> extra;
        if (rng() % 2) extra = rng() % 2 ? f.exponent() : random_multi_index(rng, n, 0, 4);
        if (lemma_vanishing(pole, extra, f) != Verdict::unknown) {
            auto c = random_multi_index(rng, n, 1, 5);
            std::vector<RamifiedExponent::Term> phi;
            if (!pole.is_zero()) phi.emplace_back(-pole.dot(c), CycloRat(1));
            if (extra && !extra->is_zero()) phi.emplace_back(-extra->dot(c), CycloRat(1));
            FormalModule restricted(ElementaryModule::make(1, phi, RegularPart::trivial(1)));
            log.check(!is_regular(restricted) && psi_dim(restricted, curve_degree(f, c)) == 0,
                      "verdict contradicted on curve " + c.str());
        }
    });
}

SweepResult blowup_sweep(const std::vector<BlowupScript>& chains, Execution exec) {
    std::vector<std::int64_t> steps(chains.size(), 0);
    auto r = run_cases("blowup", chains.size(), exec, [&](std::size_t i, CaseLog& log) {
        const auto& sc = chains[i];
        auto s = BlowupState::initial(sc.init, sc.mode);
        auto tag = [&](std::size_t k) { return "chain " + std::to_string(i) + " (" + to_string(sc.mode) + ") step " + std::to_string(k); };
        auto rep0 = verify_inequality(s);
        log.check(rep0.ok(), [&] { return tag(0) + ": " + rep0.violations.front(); });
        for (std::size_t k = 0; k < sc.steps.size(); ++k) {
            auto next = blow_up(s, sc.steps[k]);
            const auto& au = next.audits().back();
            log.check(au.l0 >= au.l1, [&] { return tag(k + 1) + ": l0 < l1"; });
            log.check(au.l1 >= au.l2, [&] { return tag(k + 1) + ": l1 < l2"; });
            log.check(au.l2 >= au.l3, [&] { return tag(k + 1) + ": l2 < l3"; });
            log.check(au.l3 == next.components().back().vS, [&] { return tag(k + 1) + ": l3 != vS(P)"; });
            if (sc.mode == BlowupMode::toric) {
                log.check(au.conserved, [&] { return tag(k + 1) + ": ray pairing disagrees with recursion"; });
                const auto& ray = *next.components().back().ray;
                bool fresh = std::none_of(s.components().begin(), s.components().end(),
                                          [&](const Component& c) { return *c.ray == ray; });
                log.check(fresh, [&] { return tag(k + 1) + ": exceptional ray coincides with an existing one"; });
            }
            auto rep = verify_inequality(next);
            log.check(rep.ok(), [&] { return tag(k + 1) + ": " + rep.violations.front(); });
            s = std::move(next);
            ++steps[i];
        }
    });
    std::int64_t t = 0;
    for (auto k : steps) t += k;
    r.notes.push_back(std::to_string(t) + " blow-up steps");
    return r;
}

SweepResult newton_sweep() {
    auto fx = rank_one_newton_fixtures();
    auto golden = golden_newton_fixtures();
    fx.insert(fx.end(), golden.begin(), golden.end());
    auto r = run_cases("newton", fx.size(), Execution::serial, [&](std::size_t i, CaseLog& log) {
        auto s = slopes_from_operator(fx[i].op);
        log.check(s == slopes(fx[i].decomposition), [&] {
            return fx[i].name + ": polygon " + slopes_str(s) + " vs " + slopes_str(slopes(fx[i].decomposition));
        });
    });
    r.notes.push_back(std::to_string(fx.size() - golden.size()) + " rank-1 fixtures, " +
                      std::to_string(golden.size()) + " golden fixtures");
    return r;
}

SweepResult roundtrip_sweep(const std::vector<ExprPtr>& exprs, Execution exec) {
    return run_cases("roundtrip", exprs.size(), exec, [&](std::size_t i, CaseLog& log) {
        auto text = print_expr(exprs[i]);
        auto again = parse_module(text);
        log.check(print_expr(again) == text, "print/parse mismatch: " + text);
        auto m = evaluate(exprs[i]);
        log.check(evaluate(again) == m, "value changed: " + text);
        auto canon = m.str();
        log.check(print_expr(parse_module(canon)) == canon && module_from_text(canon) == m,
                  "canonical text does not round-trip: " + canon);
    });
}

}  // namespace slopelab

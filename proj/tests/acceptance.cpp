// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails. argv[1], when given, is the CLI binary used for
// the byte-identical output check.
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "slopelab/checks.hpp"
#include "slopelab/commands.hpp"
#include "slopelab/io.hpp"

using namespace slopelab;

namespace {

int failures = 0;

void report(int id, const std::string& title, const std::vector<SweepResult>& parts, double seconds) {
    bool ok = true;
    std::int64_t cases = 0, checks = 0, bad = 0;
    for (const auto& p : parts) {
        ok = ok && p.ok();
        cases += p.cases;
        checks += p.checks;
        bad += p.failure_count;
    }
    if (!ok) ++failures;
    char line[256];
    std::snprintf(line, sizeof line, "criterion %d %s  %s: %lld cases, %lld checks, %lld failures, %.1f s", id,
                  ok ? "PASS" : "FAIL", title.c_str(), static_cast<long long>(cases), static_cast<long long>(checks),
                  static_cast<long long>(bad), seconds);
    std::cout << line << "\n";
    for (const auto& p : parts) {
        for (const auto& f : p.failures) std::cout << "    " << p.name << ": " << f << "\n";
        for (const auto& n : p.notes) std::cout << "    " << p.name << ": " << n << "\n";
    }
    std::cout.flush();
}

template <class F>
void criterion(int id, const std::string& title, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<SweepResult> r = f();
    report(id, title, r, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
}

std::string capture(const std::string& cmd) {
    std::array<char, 4096> buf{};
    std::string out;
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) return "<popen failed>";
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
    return out;
}

SweepResult determinism(const Corpus& corpus, std::uint64_t seed, const char* cli) {
    SweepResult r;
    r.name = "determinism";
    auto same = [&](const std::string& what, const std::string& a, const std::string& b) {
        ++r.checks;
        if (a != b) {
            ++r.failure_count;
            if (r.failures.size() < 5) r.failures.push_back(what + " differs between runs");
        }
    };
    for (const auto& e : corpus.exprs) {
        ++r.cases;
        auto text = print_expr(e);
        same("slopes " + text, run_slopes(text).json.dump(), run_slopes(text).json.dump());
        same("nearby " + text, run_nearby(text, 2, false).json.dump(), run_nearby(text, 2, false).json.dump());
    }
    SelftestOptions st{20, seed, Execution::parallel};
    auto a = run_selftest(st);
    st.exec = Execution::serial;
    auto b = run_selftest(st);
    ++r.cases;
    same("selftest (parallel vs serial)", a.json.dump(), b.json.dump());
    if (cli) {
        std::string base = std::string(cli) + " --json ";
        const std::string s = std::to_string(seed);
        for (const std::string& args :
             {std::string("selftest --cases 10 --seed ") + s, std::string("slopes -e 'tensor(El(2,u^-1,rank=1), El(3,u^-2,rank=1))'"),
              std::string("nearby -e 'El(2,u^-3,rank=1) + Reg(rank=2)' -p 3 --cert")}) {
            ++r.cases;
            auto x = capture(base + args), y = capture(base + args);
            ++r.checks;
            if (x.empty() || x != y) {
                ++r.failure_count;
                r.failures.push_back("cli " + args + (x.empty() ? " produced no output" : " differs between runs"));
            }
        }
    }
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    const std::uint64_t seed = seed_from_env();
    const char* cli = argc > 1 ? argv[1] : nullptr;
    const auto exec = Execution::parallel;
    std::cout << "acceptance seed " << seed << "\n";

    auto corpus = make_corpus(seed, CorpusSize{500, 200, 1000, 200});

    criterion(1, "witness twists give nonzero psi (500 modules, p <= 6)",
           [&] { return std::vector{witness_sweep(corpus.modules, 6, exec)}; });
    criterion(2, "bounded exhaustion of non-members (ram <= 12, pole <= 24, p <= 6)",
           [&] { return std::vector{exhaustion_sweep(corpus.modules, 6, ExhaustionBounds{12, 24}, exec)}; });
    criterion(3, "nearby slopes invariant under duality (p <= 6)",
           [&] { return std::vector{duality_sweep(corpus.modules, 6, exec)}; });
    criterion(4, "pushforward inclusion (p <= 6)",
           [&] { return std::vector{pushforward_sweep(corpus.modules, 6, exec)}; });
    criterion(5, "regular iff nearby slopes in {0} (p <= 6)",
           [&] { return std::vector{regularity_sweep(corpus.modules, 6, exec)}; });
    criterion(6, "threshold <= bound and curve restrictions <= threshold (200 models, f <= 4, c <= 3)",
           [&] { return std::vector{monomial_sweep(corpus.models, 4, 3, exec)}; });
    criterion(7, "multiplicity inequality along 1000 blow-up chains",
           [&] { return std::vector{blowup_sweep(corpus.chains, exec)}; });
    criterion(8, "Newton polygon agrees with the decompositions", [&] { return std::vector{newton_sweep()}; });
    criterion(9, "expression round-trip and deterministic output", [&] {
               return std::vector{roundtrip_sweep(corpus.exprs, exec), determinism(corpus, seed, cli)};
           });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}

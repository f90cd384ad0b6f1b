#include <iostream>

#include <CLI11.hpp>

#include "slopelab/commands.hpp"
#include "slopelab/expr.hpp"
#include "slopelab/io.hpp"

using namespace slopelab;

int main(int argc, char** argv) {
    CLI::App app{"slopelab: slopes and nearby slopes of formal differential modules"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string expr;
    std::int64_t p = 1;
    bool cert = false;
    ExhaustionBounds bounds;
    std::string model_path, monomial, script_path;
    bool verify = false;
    SelftestOptions st;
    st.seed = seed_from_env();
    bool serial = false;

    auto* slopes = app.add_subcommand("slopes", "slope multiset, rank and irregularity");
    slopes->add_option("-e,--expr", expr, "module expression")->required();

    auto* nearby = app.add_subcommand("nearby", "nearby slopes along x^P");
    nearby->add_option("-e,--expr", expr, "module expression")->required();
    nearby->add_option("-p", p, "exponent of the function x^P")->check(CLI::PositiveNumber);
    nearby->add_flag("--cert", cert, "print witnesses and the bounded exhaustion");
    nearby->add_option("--max-ram", bounds.max_ram, "ramification bound for non-members")->check(CLI::PositiveNumber);
    nearby->add_option("--max-pole", bounds.max_pole, "pole order bound for non-members")->check(CLI::PositiveNumber);

    auto* bound = app.add_subcommand("bound", "nearby slope bound and vanishing threshold of a model");
    bound->add_option("-m,--model", model_path, "model file (JSON)")->required();
    bound->add_option("-f", monomial, "monomial function, e.g. x1*x2^2")->required();

    auto* blowup = app.add_subcommand("blowup", "run a blow-up script");
    blowup->add_option("-s,--script", script_path, "script file (JSON)")->required();
    blowup->add_flag("--verify", verify, "check the multiplicity inequality after every step");

    auto* selftest = app.add_subcommand("selftest", "run all property suites");
    selftest->add_option("--cases", st.cases, "corpus size")->check(CLI::PositiveNumber);
    selftest->add_option("--seed", st.seed, "seed (default: SLOPELAB_SEED or built-in)");
    selftest->add_flag("--serial", serial, "run the serial reference path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        CommandResult r;
        if (*slopes) {
            r = run_slopes(expr);
        } else if (*nearby) {
            r = run_nearby(expr, p, cert, bounds);
        } else if (*bound) {
            auto m = load_model(model_path);
            r = run_bound(m, parse_monomial(monomial, m.dim()));
        } else if (*blowup) {
            r = run_blowup(load_script(script_path), verify);
        } else {
            st.exec = serial ? Execution::serial : Execution::parallel;
            r = run_selftest(st);
        }
        if (as_json)
            std::cout << r.json.dump(2) << "\n";
        else
            std::cout << r.text;
        return r.exit_code;
    } catch (const ExprError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const StepError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::overflow_error& e) {
        std::cerr << "error: arithmetic overflow: " << e.what() << "\n";
    }
    return exit_usage;
}

#include "slopelab/generators.hpp"

#include <algorithm>
#include <numeric>

namespace slopelab {

namespace {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

Rat random_rat(Rng& rng) {
    std::int64_t n = 0;
    while (n == 0) n = uniform(rng, -6, 6);
    return Rat(n, uniform(rng, 1, 4));
}

CycloRat random_coefficient(Rng& rng) {
    CycloRat c(random_rat(rng));
    if (uniform(rng, 0, 3) == 0) {
        std::int64_t order = uniform(rng, 2, 6);
        c = c.rotated(RootOfUnity(uniform(rng, 1, order - 1), order));
    }
    return c;
}

RegularPart random_regular(Rng& rng, std::int64_t max_rank) {
    std::int64_t rank = uniform(rng, 1, max_rank);
    std::vector<Rat> exps;
    for (std::int64_t i = 0; i < rank; ++i) {
        std::int64_t d = uniform(rng, 1, 6);
        exps.emplace_back(uniform(rng, 0, d - 1), d);
    }
    return RegularPart(std::move(exps));
}

ElementaryModule random_elementary(Rng& rng, const ModuleShape& shape) {
    std::int64_t p = uniform(rng, 1, shape.max_ram);
    std::int64_t pole = uniform(rng, 1, shape.max_pole);
    std::vector<RamifiedExponent::Term> phi{{-pole, random_coefficient(rng)}};
    for (std::int64_t k = pole - 1; k >= 1; --k)
        if (uniform(rng, 0, 2) == 0) phi.emplace_back(-k, random_coefficient(rng));
    return ElementaryModule::make(p, std::move(phi), random_regular(rng, shape.max_reg_rank));
}

FormalModule random_module(Rng& rng, const ModuleShape& shape) {
    std::int64_t n = uniform(rng, 1, shape.max_factors);
    std::vector<ElementaryModule> f;
    for (std::int64_t i = 0; i < n; ++i) {
        if (uniform(rng, 0, 3) == 0)
            f.push_back(ElementaryModule::regular(random_regular(rng, shape.max_reg_rank)));
        else
            f.push_back(random_elementary(rng, shape));
    }
    return FormalModule(std::move(f));
}

MultiIndex random_multi_index(Rng& rng, std::size_t dim, std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> e(dim);
    for (auto& x : e) x = uniform(rng, lo, hi);
    return MultiIndex(std::move(e));
}

GoodModel random_good_model(Rng& rng, const ModelShape& shape) {
    std::vector<MonomialFactor> fs;
    std::int64_t n = uniform(rng, 1, shape.max_factors);
    for (std::int64_t k = 0; k < n; ++k) {
        MonomialFactor f;
        f.pole = uniform(rng, 0, 4) == 0 ? MultiIndex::zeros(shape.dim)
                                         : random_multi_index(rng, shape.dim, 0, shape.max_pole);
        for (std::size_t i = 0; i < shape.dim; ++i) f.twist.push_back(Rat(uniform(rng, 0, 7), uniform(rng, 1, 4)));
        f.rank = uniform(rng, 1, shape.max_rank);
        fs.push_back(std::move(f));
    }
    return GoodModel(shape.dim, std::move(fs));
}

MonomialFunction random_monomial_function(Rng& rng, std::size_t dim, std::int64_t max_entry) {
    for (;;) {
        auto a = random_multi_index(rng, dim, 0, max_entry);
        if (!a.is_zero()) return MonomialFunction(std::move(a));
    }
}

BlowupScript random_blowup_script(Rng& rng, BlowupMode mode, std::size_t max_dim, std::size_t max_steps) {
    BlowupScript sc;
    sc.mode = mode;
    std::size_t n = static_cast<std::size_t>(uniform(rng, 2, static_cast<std::int64_t>(max_dim)));
    sc.init.dim = n;
    std::vector<std::int64_t> a(n);
    while (std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; }))
        for (auto& x : a) x = uniform(rng, 0, 3);
    sc.init.a = MultiIndex(a);
    for (std::size_t i = 0; i < n; ++i) sc.init.r.push_back(Rat(uniform(rng, 0, 9), uniform(rng, 1, 3)));

    auto state = BlowupState::initial(sc.init, mode);
    std::size_t len = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_steps)));
    for (std::size_t step = 0; step < len; ++step) {
        BlowupStep st;
        if (mode == BlowupMode::toric) {
            std::vector<std::vector<std::size_t>> candidates;
            for (const auto& sigma : state.fan())
                if (std::any_of(sigma.begin(), sigma.end(), [&](std::size_t k) { return k < n && a[k] > 0; }))
                    candidates.push_back(sigma);
            const auto& sigma = candidates[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(candidates.size()) - 1))];
            std::vector<std::size_t> zs;
            for (auto k : sigma)
                if (k < n && a[k] > 0) zs.push_back(k);
            std::size_t z = zs[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(zs.size()) - 1))];
            ToricCenter c{{state.components()[z].id}};
            std::vector<std::size_t> rest;
            for (auto k : sigma)
                if (k != z) rest.push_back(k);
            std::shuffle(rest.begin(), rest.end(), rng);
            std::size_t extra = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(rest.size())));
            for (std::size_t k = 0; k < extra; ++k) c.ids.push_back(state.components()[rest[k]].id);
            st = c;
        } else {
            AbstractCenter c;
            c.alpha.assign(n, 0);
            c.epsS.assign(n, 0);
            while (std::inner_product(c.alpha.begin(), c.alpha.end(), a.begin(), std::int64_t{0}) == 0)
                for (std::size_t i = 0; i < n; ++i) c.alpha[i] = a[i] > 0 ? uniform(rng, 0, 2) : 0;
            for (auto& e : c.epsS) e = uniform(rng, 0, 1);
            c.epsE.assign(state.exceptional_count(), 0);
            for (auto& e : c.epsE) e = uniform(rng, 0, 1);
            st = c;
        }
        state = blow_up(state, st);
        sc.steps.push_back(std::move(st));
    }
    return sc;
}

namespace {

ExprPtr node(ModuleExpr::Node n) { return std::make_shared<const ModuleExpr>(ModuleExpr{{}, std::move(n)}); }

ExprPtr random_leaf(Rng& rng) {
    std::int64_t kind = uniform(rng, 0, 9);
    if (kind == 0) return node(ast::Zero{});
    std::int64_t rank = uniform(rng, 1, 2);
    std::optional<std::vector<Rat>> exps;
    if (uniform(rng, 0, 1)) {
        exps.emplace();
        for (std::int64_t k = 0; k < rank; ++k) exps->push_back(Rat(uniform(rng, -4, 4), uniform(rng, 1, 3)));
    }
    if (kind <= 3) return node(ast::Reg{rank, exps});
    std::vector<RamifiedExponent::Term> phi;
    for (std::int64_t k = -uniform(rng, 1, 4); k < 0; ++k)
        if (uniform(rng, 0, 1) || phi.empty()) phi.emplace_back(k, random_coefficient(rng));
    normalize_terms(phi);
    return node(ast::El{uniform(rng, 1, 3), std::move(phi), rank, exps});
}

}  // namespace

ExprPtr random_expr(Rng& rng, int max_depth) {
    if (max_depth <= 0 || uniform(rng, 0, 2) == 0) return random_leaf(rng);
    switch (uniform(rng, 0, 4)) {
        case 0: return node(ast::Sum{random_expr(rng, max_depth - 1), random_expr(rng, max_depth - 1)});
        case 1: return node(ast::Dual{random_expr(rng, max_depth - 1)});
        case 2: return node(ast::Tensor{random_leaf(rng), random_leaf(rng)});
        case 3: return node(ast::Pull{uniform(rng, 1, 3), random_expr(rng, max_depth - 1)});
        default: return node(ast::Push{uniform(rng, 1, 3), random_expr(rng, max_depth - 1)});
    }
}

}  // namespace slopelab

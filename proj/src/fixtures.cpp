#include "slopelab/fixtures.hpp"

namespace slopelab {

namespace {

Laurent<Rat> x(std::int64_t k, Rat c = Rat(1)) { return Laurent<Rat>::monomial(k, c); }

FormalModule el(std::int64_t p, std::vector<RamifiedExponent::Term> phi, std::vector<Rat> exps = {Rat(0)}) {
    return FormalModule(ElementaryModule::make(p, std::move(phi), RegularPart(std::move(exps))));
}

FormalModule reg(std::vector<Rat> exps) { return FormalModule(ElementaryModule::regular(RegularPart(std::move(exps)))); }

FormalModule operator+(const FormalModule& a, const FormalModule& b) { return direct_sum(a, b); }

}  // namespace

std::vector<NewtonFixture> rank_one_newton_fixtures() {
    std::vector<NewtonFixture> out;
    for (std::int64_t m = 0; m <= 9; ++m) {
        for (std::int64_t j = 0; j < 10; ++j) {
            Rat c(j - 3, 4);
            NewtonFixture f;
            f.name = "E^{x^-" + std::to_string(m) + "} x^" + c.str();
            if (m == 0) {
                f.op = {{1, x(1)}, {0, x(0, -c)}};
                f.decomposition = reg({c});
            } else {
                f.op = {{1, x(m + 1)}, {0, x(0, Rat(m)) + x(m, -c)}};
                f.decomposition = el(1, {{-m, CycloRat(1)}}, {c});
            }
            out.push_back(std::move(f));
        }
    }
    return out;
}

std::vector<NewtonFixture> golden_newton_fixtures() {
    const CycloRat i4 = CycloRat::zeta(4);
    return {
        {"x^4 d^2 + d + 1", {{2, x(4)}, {1, x(0)}, {0, x(0)}}, reg({Rat(0)}) + el(1, {{-3, CycloRat(Rat(1, 3))}})},
        {"x^2 d^2 + x d - 1/4", {{2, x(2)}, {1, x(1)}, {0, x(0, Rat(-1, 4))}}, reg({Rat(1, 2), Rat(1, 2)})},
        {"x^2 d^2 + x d - 1/9", {{2, x(2)}, {1, x(1)}, {0, x(0, Rat(-1, 9))}}, reg({Rat(1, 3), Rat(2, 3)})},
        {"x^3 d^2 + 1", {{2, x(3)}, {0, x(0)}}, el(2, {{-1, CycloRat(2) * i4}}, {Rat(1, 2)})},
        {"x^5 d^2 + 1", {{2, x(5)}, {0, x(0)}}, el(2, {{-3, CycloRat(Rat(2, 3)) * i4}})},
        {"x^7 d^3 + 1", {{3, x(7)}, {0, x(0)}}, el(3, {{-4, CycloRat(Rat(3, 4))}})},
        {"x^3 d + 1", {{1, x(3)}, {0, x(0)}}, el(1, {{-2, CycloRat(Rat(1, 2))}})},
        {"x^6 d^2 + x^2 d + 1",
         {{2, x(6)}, {1, x(2)}, {0, x(0)}},
         el(1, {{-1, CycloRat(1)}}) + el(1, {{-3, CycloRat(Rat(1, 3))}})},
        {"x^3 d^2 + x d + 1", {{2, x(3)}, {1, x(1)}, {0, x(0)}}, reg({Rat(0)}) + el(1, {{-1, CycloRat(1)}})},
        {"x^4 d^2 + x d + 1", {{2, x(4)}, {1, x(1)}, {0, x(0)}}, reg({Rat(0)}) + el(1, {{-2, CycloRat(Rat(1, 2))}})},
        {"x^4 d^2 + x^3 d + 1", {{2, x(4)}, {1, x(3)}, {0, x(0)}}, el(1, {{-1, i4}}) + el(1, {{-1, -i4}})},
        {"x^4 d^3 + x d + 1", {{3, x(4)}, {1, x(1)}, {0, x(0)}}, reg({Rat(0)}) + el(2, {{-1, CycloRat(2) * i4}})},
    };
}

}  // namespace slopelab

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "slopelab/cyclotomic.hpp"

using slopelab::CycloRat;
using slopelab::Rat;
using slopelab::RootOfUnity;

namespace {

// Test oracle: dense power-basis arithmetic in Q[x]/Phi_N, independent of
// the library's basis choice.
using Poly = std::vector<Rat>;

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Poly poly_mod(Poly a, const Poly& m) {  // m monic
    std::size_t dm = m.size() - 1;
    for (std::size_t i = a.size(); i-- > dm;) {
        Rat c = a[i];
        if (c.is_zero()) continue;
        for (std::size_t k = 0; k <= dm; ++k) a[i - dm + k] -= c * m[k];
    }
    a.resize(dm, Rat(0));
    return a;
}

Poly poly_div_exact(Poly a, const Poly& m) {
    std::size_t dm = m.size() - 1;
    Poly q(a.size() - dm, Rat(0));
    for (std::size_t i = a.size(); i-- > dm;) {
        Rat c = a[i];
        q[i - dm] = c;
        for (std::size_t k = 0; k <= dm; ++k) a[i - dm + k] -= c * m[k];
    }
    return q;
}

Poly cyclotomic_poly(std::int64_t n) {
    Poly p(static_cast<std::size_t>(n) + 1, Rat(0));
    p[0] = Rat(-1);
    p[static_cast<std::size_t>(n)] = Rat(1);
    for (std::int64_t d = 1; d < n; ++d)
        if (n % d == 0) p = poly_div_exact(p, cyclotomic_poly(d));
    return p;
}

Poly power_basis(const CycloRat& x, std::int64_t n) {
    Poly phi = cyclotomic_poly(n);
    Poly acc(static_cast<std::size_t>(n), Rat(0));
    for (const auto& [e, c] : x.embedded_terms(n)) acc[static_cast<std::size_t>(e)] += c;
    return poly_mod(acc, phi);
}

CycloRat random_cyclo(std::mt19937_64& rng) {
    static const std::int64_t orders[] = {1, 3, 4, 5, 8, 9, 12, 15};
    std::uniform_int_distribution<int> pick(0, 7), coef(-4, 4), den(1, 3), nterms(1, 3);
    std::int64_t n = orders[pick(rng)];
    CycloRat x;
    for (int t = nterms(rng); t > 0; --t) {
        std::uniform_int_distribution<std::int64_t> e(0, n - 1);
        x += CycloRat::root(RootOfUnity(e(rng), n), Rat(coef(rng), den(rng)));
    }
    return x;
}

}  // namespace

TEST(CycloRat, SpecProducts) {
    EXPECT_EQ(CycloRat::zeta(2) * CycloRat::zeta(2), CycloRat(1));
    EXPECT_EQ(CycloRat::zeta(4) * CycloRat::zeta(4), CycloRat(-1));
    // (1 + z3)(1 + z3^2) = 1 + z3 + z3^2 + 1 = 1
    EXPECT_EQ((CycloRat(1) + CycloRat::zeta(3)) * (CycloRat(1) + CycloRat::zeta(3, 2)), CycloRat(1));
}

TEST(CycloRat, MinimalOrder) {
    EXPECT_EQ(CycloRat::zeta(2).order(), 1);
    EXPECT_EQ(CycloRat::zeta(6).order(), 3);  // zeta_6 = -zeta_3^2
    EXPECT_EQ(CycloRat::zeta(6), -CycloRat::zeta(3, 2));
    EXPECT_EQ(CycloRat::zeta(12, 4), CycloRat::zeta(3));
    EXPECT_EQ(CycloRat::zeta(8, 2), CycloRat::zeta(4));
    EXPECT_EQ((CycloRat::zeta(5) + CycloRat::zeta(5, 2) + CycloRat::zeta(5, 3) + CycloRat::zeta(5, 4)), CycloRat(-1));
    // sqrt(-3) = z3 - z3^2 lives in Q(zeta_3)
    CycloRat s = CycloRat::zeta(3) - CycloRat::zeta(3, 2);
    EXPECT_EQ(s * s, CycloRat(-3));
    EXPECT_EQ(s.order(), 3);
}

TEST(CycloRat, CoordsHaveTotientLength) {
    for (std::int64_t n : {1, 3, 4, 5, 7, 8, 9, 12, 15, 20, 36}) {
        CycloRat z = CycloRat::zeta(n);
        EXPECT_EQ(static_cast<std::int64_t>(z.coords().size()), slopelab::totient(z.order())) << n;
    }
}

TEST(CycloRat, MultiplicationMatchesPowerBasisOracle) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        CycloRat a = random_cyclo(rng), b = random_cyclo(rng);
        CycloRat ab = a * b;
        std::int64_t n = slopelab::lcm64(slopelab::lcm64(a.order(), b.order()), 4);
        Poly expect = poly_mod(poly_mul(power_basis(a, n), power_basis(b, n)), cyclotomic_poly(n));
        EXPECT_EQ(power_basis(ab, n), expect) << a.str() << " * " << b.str();
        Poly sum = power_basis(a, n);
        Poly pb = power_basis(b, n);
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += pb[k];
        EXPECT_EQ(power_basis(a + b, n), sum);
    }
}

TEST(CycloRat, FieldAxiomsRandomized) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        CycloRat a = random_cyclo(rng), b = random_cyclo(rng), c = random_cyclo(rng);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), CycloRat(1)) << a.str();
    }
}

TEST(CycloRat, RotationByRootsOfUnity) {
    CycloRat x = CycloRat(Rat(3, 2)) + CycloRat::zeta(5);
    EXPECT_EQ(x.rotated(RootOfUnity(1, 7)), x * CycloRat::zeta(7));
    EXPECT_EQ(x.rotated(RootOfUnity(0, 1)), x);
    EXPECT_EQ(CycloRat::zeta(4).rotated(RootOfUnity(3, 4)), CycloRat(1));
}

TEST(CycloRat, OrderingIsTotalAndStructural) {
    std::mt19937_64 rng(3);
    std::vector<CycloRat> xs;
    for (int i = 0; i < 60; ++i) xs.push_back(random_cyclo(rng));
    for (const auto& a : xs)
        for (const auto& b : xs) {
            EXPECT_EQ(a == b, (a <=> b) == 0);
            EXPECT_EQ((a <=> b) < 0, (b <=> a) > 0);
        }
}

#include "fourfold/catalog.hpp"
#include "fourfold/model.hpp"
#include "fourfold/sw_certify.hpp"

#include <doctest.h>

#include <random>

using namespace fourfold;

namespace {

// Determinant by fraction-free Gaussian elimination over long double is
// enough for 8x8 unimodular checks.
long double det(IntMatrix a) {
    std::size_t n = a.size();
    std::vector<std::vector<long double>> m(n, std::vector<long double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    long double d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            long double f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

IntMatrix sub(const IntMatrix& g, std::size_t off, std::size_t n) {
    IntMatrix s(n, IntVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s[i][j] = g[off + i][off + j];
    return s;
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("fixed building blocks") {
    struct Row {
        const char* id;
        std::int64_t b1, bp, bm, chi, tau;
        bool spin, sc;
    };
    const Row rows[] = {
        {"CP2", 0, 1, 0, 3, 1, false, true},     {"CP2bar", 0, 0, 1, 3, -1, false, true},
        {"S1xS3", 1, 0, 0, 0, 0, true, false},   {"T4", 4, 3, 3, 0, 0, true, false},
        {"K3", 0, 3, 19, 24, -16, true, true},   {"Kodaira", 3, 2, 2, 0, 0, true, false},
    };
    for (const auto& r : rows) {
        CAPTURE(r.id);
        Manifold m = catalog_get(r.id);
        CHECK(m.chr.b1 == r.b1);
        CHECK(m.chr.b_plus == r.bp);
        CHECK(m.chr.b_minus == r.bm);
        CHECK(m.euler() == r.chi);
        CHECK(m.signature() == r.tau);
        CHECK(m.chr.is_spin == r.spin);
        CHECK(m.chr.is_simply_connected == r.sc);
        CHECK(validate(m).empty());
    }
}

TEST_CASE("families") {
    Manifold s = catalog_get("Sigma(3,5)");
    CHECK(s.chr.b1 == 16);
    CHECK(s.euler() == 4 * 2 * 4);
    CHECK(s.signature() == 0);
    CHECK(s.canonical()->c1_squared == 8 * 2 * 4);
    CHECK(validate(s).empty());
    Manifold t = catalog_get("Sigma(1,1)");
    CHECK(t.chr == catalog_get("T4").chr);

    Manifold y = catalog_get("Y(2)");
    CHECK(y.chr == catalog_get("K3").chr);
    CHECK(y.has(Flag::C1Mod4Zero));
    CHECK_FALSE(catalog_get("Y(1)").has(Flag::C1Mod4Zero));
    CHECK(catalog_get("Y(0)").name == "K3");

    Manifold g = catalog_get("Gompf(3,4)");
    CHECK(g.euler() == 24 * 3 + 4 * 4);
    CHECK(g.signature() == -48);
    CHECK(g.chr.b_plus == 4 * 3 + 2 * 4 - 1);
    CHECK(validate(g).empty());

    CHECK_THROWS_AS(catalog_get("Sigma(0,3)"), std::invalid_argument);
    CHECK_THROWS_AS(catalog_get("Sigma(3,201)"), std::invalid_argument);
    CHECK_THROWS_AS(catalog_get("Gompf(1,3)"), std::invalid_argument);
    CHECK_THROWS_AS(catalog_get("Y(-1)"), std::invalid_argument);
    CHECK_THROWS_AS(catalog_get("Enriques"), std::invalid_argument);
}

TEST_CASE("Gompf family identities on random parameters") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> a(2, 500), b(0, 500);
    for (int i = 0; i < 50; ++i) {
        std::int64_t al = a(rng), be = b(rng);
        Manifold g = gompf(al, be);
        CHECK(g.euler() == 24 * al + 4 * be);
        CHECK(g.signature() == -16 * al);
        CHECK(g.chr.two_chi_plus_three_tau() == 8 * be);
        CHECK(g.chr.two_chi_minus_three_tau() == 8 * (12 * al + be));
        CHECK(moduli_dimension(g, *g.canonical()) == 0);
    }
}

TEST_CASE("inertia of the K3 form") {
    Manifold k = k3();
    Inertia in = inertia(k.lattice->gram);
    CHECK(in.positive == 3);
    CHECK(in.negative == 19);
    CHECK(in.zero == 0);
    // Each E8 block is unimodular and even.
    long double d = det(sub(k.lattice->gram, 6, 8));
    CHECK(d == doctest::Approx(1.0));
    for (std::size_t i = 0; i < 22; ++i) CHECK(k.lattice->gram[i][i] % 2 == 0);
}

TEST_CASE("inertia on small matrices") {
    Inertia a = inertia({{0, 1}, {1, 0}});
    CHECK((a.positive == 1 && a.negative == 1 && a.zero == 0));
    Inertia b = inertia({{1, 1}, {1, 1}});
    CHECK((b.positive == 1 && b.negative == 0 && b.zero == 1));
    Inertia c = inertia({{0, 0}, {0, -3}});
    CHECK((c.positive == 0 && c.negative == 1 && c.zero == 1));
}

TEST_CASE("validate reports broken data") {
    Manifold m = k3();
    m.chr.b_minus = 18;
    CHECK_FALSE(validate(m).empty());

    Manifold w = k3();
    w.chr.is_spin = false;  // even form, b1 = 0: Wu forces spin
    CHECK_FALSE(validate(w).empty());

    Manifold r = k3();
    r.chr.b_plus = 4;  // signature not divisible by 16 for a spin simply connected manifold
    r.chr.b_minus = 20;
    CHECK_FALSE(validate(r).empty());

    Manifold c = cp2();
    c.spinc[0].c1 = {2};  // not characteristic
    c.spinc[0].c1_squared = 4;
    CHECK_FALSE(validate(c).empty());
}

TEST_CASE("flag and parity names round trip") {
    for (Flag f : {Flag::AlmostComplex, Flag::Symplectic, Flag::MinimalKaehler, Flag::HasPSCMetric,
                   Flag::HasNonnegScalarMetric, Flag::HasASDPSCMetric, Flag::C1Mod4Zero})
        CHECK(flag_from_name(flag_name(f)) == f);
    CHECK_FALSE(flag_from_name("Hyperbolic").has_value());
    for (SwParity p : {SwParity::Odd, SwParity::Even, SwParity::Unknown}) CHECK(parity_from_name(parity_name(p)) == p);
    CHECK_THROWS(parity_from_name("maybe"));
}

}  // TEST_SUITE

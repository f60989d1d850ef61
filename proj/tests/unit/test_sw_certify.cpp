#include "fourfold/catalog.hpp"
#include "fourfold/surgery.hpp"
#include "fourfold/sw_certify.hpp"

#include <doctest.h>

using namespace fourfold;

TEST_SUITE("sw_certify") {

TEST_CASE("moduli dimension and index") {
    CharData k = k3().chr;
    CHECK(moduli_dimension(k, 0) == 0);
    CHECK(dirac_index(k, 0) == 2);
    CharData c = cp2().chr;
    CHECK(moduli_dimension(c, 9) == 0);
    CHECK(moduli_dimension(c, 1) == -2);
    CHECK(dirac_index(c, 1) == 0);
    CHECK_THROWS_AS(moduli_dimension(k, 2), std::domain_error);
    CHECK_THROWS_AS(dirac_index(c, 5), std::domain_error);
    for (const auto& id : {"CP2", "T4", "K3", "Kodaira", "Sigma(3,3)", "Sigma(2,5)", "Y(3)", "Gompf(2,5)"}) {
        CAPTURE(id);
        Manifold m = catalog_get(id);
        CHECK(moduli_dimension(m, *m.canonical()) == 0);
    }
}

TEST_CASE("parity equivalence") {
    auto [even, cong] = parity_equivalence(k3().chr, 0);
    CHECK(even);
    CHECK(cong);
    Manifold s = connected_sum({k3(), k3()});
    auto [e2, c2] = parity_equivalence(s.chr, 0);
    CHECK(e2 == c2);
    CharData bad{0, 2, 0, false, true};  // b+ = 2, b- = 0, c1^2 = 2 gives d = (2-8-6)/4 = -3
    auto [e3, c3] = parity_equivalence(bad, 2);
    CHECK(e3 == c3);
}

TEST_CASE("spin moduli condition") {
    Manifold s = sigma_product(3, 3);
    Certificate c = moduli_spin_condition(s, *s.canonical());
    CHECK(c.verdict == Verdict::Nonvanishing);
    Manifold s2 = sigma_product(2, 2);  // S = J: odd entries
    CHECK(moduli_spin_condition(s2, *s2.canonical()).verdict == Verdict::Inconclusive);
    SpinCStructure g = *s.canonical();
    g.s_matrix.reset();
    CHECK_THROWS_AS(moduli_spin_condition(s, g), std::invalid_argument);
}

TEST_CASE("nonvanishing sums") {
    CHECK(check_almost_complex_sum({k3(), k3()}).verdict == Verdict::Nonvanishing);
    CHECK(check_almost_complex_sum({t4(), t4()}).verdict == Verdict::Nonvanishing);
    CHECK(check_almost_complex_sum({sigma_product(1, 1), sigma_product(1, 1)}).verdict == Verdict::Nonvanishing);
    CHECK(check_almost_complex_sum({kodaira(), kodaira(), kodaira()}).verdict == Verdict::Nonvanishing);
    CHECK(check_almost_complex_sum({sigma_product(3, 3), k3()}).verdict == Verdict::Nonvanishing);
    CHECK(check_mod4_sum({k3(), k3()}).verdict == Verdict::Nonvanishing);
    CHECK(check_mod4_sum({kodaira(), kodaira(), kodaira()}).verdict == Verdict::Nonvanishing);
    Certificate c = check_almost_complex_sum({k3(), k3(), k3()}, {1, -1, 1});
    CHECK(c.verdict == Verdict::Nonvanishing);
    CHECK(c.details["moduli_dimension"] == 2);
}

TEST_CASE("failing premises") {
    // Sigma(2,2): b+ - b1 = 9 - 8 = 1 mod 4.
    Certificate c = check_almost_complex_sum({sigma_product(2, 2), k3()});
    CHECK(c.verdict == Verdict::Inconclusive);
    REQUIRE(c.first_failure() != nullptr);
    CHECK(c.first_failure()->text.find("3 mod 4") != std::string::npos);
    // CP2 has b+ = 1.
    CHECK(check_almost_complex_sum({cp2(), k3()}).verdict == Verdict::Inconclusive);
    // Y(1): c1 = 2f is not 0 mod 4, and b+ = 3 with b1 = 0 passes the first branch anyway.
    CHECK(check_mod4_sum({log_transform_k3(1), k3()}).verdict == Verdict::Nonvanishing);
    // T4 has b1 = 4 but c1 = 0 mod 4.
    CHECK(check_mod4_sum({t4(), k3()}).verdict == Verdict::Nonvanishing);
    // Sigma(2,3) has b+ = 13, b1 = 10 and c1 not 0 mod 4.
    CHECK(check_mod4_sum({sigma_product(2, 3), k3()}).verdict == Verdict::Inconclusive);
}

TEST_CASE("part counts") {
    CHECK_THROWS_AS(check_almost_complex_sum({k3(), k3(), k3(), k3()}), std::invalid_argument);
    CHECK_THROWS_AS(check_almost_complex_sum({k3()}), std::invalid_argument);
    CHECK_THROWS_AS(check_mod4_sum({k3(), k3(), k3(), k3()}), std::invalid_argument);
    CHECK_THROWS_AS(check_almost_complex_sum({k3(), k3()}, {1, 2}), std::invalid_argument);
}

TEST_CASE("Bauer") {
    CHECK(check_bauer({k3(), k3()}).verdict == Verdict::Nonvanishing);
    CHECK(check_bauer({k3(), k3(), k3(), k3()}).verdict == Verdict::Nonvanishing);  // b+ = 12
    // Gompf(2,1): b+ = 9 fails 3 mod 4.
    CHECK(check_bauer({k3(), gompf(2, 1)}).verdict == Verdict::Inconclusive);
    // Five parts are outside the criterion.
    CHECK(check_bauer({k3(), k3(), k3(), k3(), k3()}).verdict == Verdict::Inconclusive);
    // Four parts with b+(sum) = 3 + 3 + 3 + 7 = 16 = 0 mod 8.
    CHECK(check_bauer({k3(), k3(), k3(), gompf(2, 0)}).verdict == Verdict::Inconclusive);
    CHECK(check_bauer({t4(), k3()}).verdict == Verdict::Inconclusive);
}

TEST_CASE("Taubes") {
    CHECK(check_symplectic(k3()).verdict == Verdict::Nonvanishing);
    CHECK(check_symplectic(blow_up(k3(), 3)).verdict == Verdict::Nonvanishing);
    CHECK(check_symplectic(cp2()).verdict == Verdict::Inconclusive);
    CHECK(check_symplectic(connected_sum({k3(), k3()})).verdict == Verdict::Inconclusive);
}

TEST_CASE("c1 = 0 types") {
    std::vector<C1ZeroType> want = {{2, 3, 0}, {3, 4, 0}, {3, 0, -16}};
    auto got = classify_c1_zero_types();
    CHECK(got.size() == 3);
    for (const auto& t : want) CHECK(std::count(got.begin(), got.end(), t) == 1);
}

TEST_CASE("sum analysis") {
    SumAnalysis a = analyze_sum(connected_sum({k3(), k3(), cp2bar(), cp2bar()}));
    CHECK(a.admissible);
    CHECK(a.parts.size() == 2);
    CHECK(a.c1_squared_sum == 0);
    CHECK(a.complement.chr.b_minus == 2);
    CHECK_FALSE(analyze_sum(k3()).admissible);
    CHECK_FALSE(analyze_sum(connected_sum({k3(), k3(), k3(), k3()})).admissible);
}

}  // TEST_SUITE

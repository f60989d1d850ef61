#include "fourfold/sw_certify.hpp"

#include "fourfold/surgery.hpp"

#include <stdexcept>
#include <string>

namespace fourfold {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

std::string str(std::int64_t x) { return std::to_string(x); }

// First odd entry of S, as "(i,j)" with 1-based indices; empty if all even.
std::string odd_entry(const IntMatrix& S) {
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = 0; j < S[i].size(); ++j)
            if (mod(S[i][j], 2) != 0) return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    return {};
}

struct PartCheck {
    bool almost_complex;
    const SpinCStructure* canonical;
    bool odd;
    std::string parity_witness;
};

PartCheck inspect(const Manifold& x) {
    PartCheck p{x.has(Flag::AlmostComplex), x.canonical(), false, "no almost complex spin-c structure"};
    if (p.canonical) {
        p.odd = p.canonical->sw_parity == SwParity::Odd;
        p.parity_witness = std::string(parity_name(p.canonical->sw_parity)) + " (" +
                           provenance_name(p.canonical->provenance) + ")";
    }
    return p;
}

// S even, or S absent with b1 = 0.
std::pair<bool, std::string> s_even(const Manifold& x, const SpinCStructure* g) {
    if (!g) return {false, "no canonical structure"};
    if (!g->s_matrix) {
        if (x.chr.b1 == 0) return {true, "b1 = 0"};
        return {false, "S matrix not supplied"};
    }
    auto odd = odd_entry(*g->s_matrix);
    if (odd.empty()) return {true, "all entries even"};
    return {false, "odd entry at " + odd};
}

std::string label(const Manifold& x, std::size_t i) { return "part " + std::to_string(i + 1) + " (" + x.name + ")"; }

std::int64_t sum_b_plus(const std::vector<Manifold>& parts) {
    std::int64_t s = 0;
    for (const auto& p : parts) s += p.chr.b_plus;
    return s;
}

}  // namespace

std::int64_t moduli_dimension(const CharData& c, std::int64_t c1_squared) {
    std::int64_t num = c1_squared - 2 * c.euler() - 3 * c.signature();
    if (num % 4 != 0)
        throw std::domain_error("moduli dimension (" + str(num) + ")/4 is not an integer: c1 is not characteristic");
    return num / 4;
}

std::int64_t moduli_dimension(const Manifold& m, const SpinCStructure& g) {
    return moduli_dimension(m.chr, g.c1_squared);
}

std::int64_t dirac_index(const CharData& c, std::int64_t c1_squared) {
    std::int64_t num = c1_squared - c.signature();
    if (num % 8 != 0)
        throw std::domain_error("Dirac index (" + str(num) + ")/8 is not an integer: c1 is not characteristic");
    return num / 8;
}

std::int64_t dirac_index(const Manifold& m, const SpinCStructure& g) { return dirac_index(m.chr, g.c1_squared); }

std::pair<bool, bool> parity_equivalence(const CharData& c, std::int64_t c1_squared) {
    std::int64_t index = dirac_index(c, c1_squared);
    std::int64_t d = moduli_dimension(c, c1_squared);
    bool index_even = mod(index, 2) == 0;
    bool dim_condition = mod(d + c.b_plus - c.b1, 4) == 3;
    if (index_even != dim_condition)
        throw std::logic_error("index parity and dimension condition disagree: inconsistent data");
    return {index_even, dim_condition};
}

std::pair<bool, bool> parity_equivalence(const Manifold& m, const SpinCStructure& g) {
    return parity_equivalence(m.chr, g.c1_squared);
}

Certificate moduli_spin_condition(const Manifold& m, const SpinCStructure& g) {
    if (m.chr.b1 > 0 && !g.s_matrix) throw std::invalid_argument("S matrix required when b1 > 0");
    Certificate c;
    c.theorem_id = "moduli-space-spin";
    c.citation = "The SW moduli space is spin when the Dirac index is even and every S^{ij} is even";
    std::int64_t index = dirac_index(m, g);
    c.add("Dirac index (c1^2 - tau)/8 is even", mod(index, 2) == 0, "index = " + str(index));
    auto [ok, why] = s_even(m, &g);
    c.add("every S^{ij} is even", ok, why);
    c.details["dirac_index"] = index;
    c.details["moduli_dimension"] = moduli_dimension(m, g);
    return c.conclude(Verdict::Nonvanishing, Verdict::Inconclusive);
}

Certificate check_almost_complex_sum(const std::vector<Manifold>& parts, const std::vector<int>& signs) {
    std::size_t n = parts.size();
    if (n == 4)
        throw std::invalid_argument("4 summands: the invariant must vanish, so no certificate is issued");
    if (n < 2 || n > 3) throw std::invalid_argument("need 2 or 3 summands, got " + std::to_string(n));
    if (!signs.empty() && signs.size() != n) throw std::invalid_argument("sign vector length differs from part count");
    for (int s : signs)
        if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");

    Certificate c;
    c.theorem_id = "sum-nonvanishing-almost-complex";
    c.citation =
        "Stable cohomotopy SW invariant of a sum of 2 or 3 almost complex 4-manifolds with b+ > 1, "
        "b+ - b1 = 3 mod 4, odd SW on the canonical class and even S-matrix is nontrivial";
    std::int64_t c1sq = 0;
    bool have_all = true;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& x = parts[i];
        auto p = inspect(x);
        auto tag = label(x, i);
        c.add(tag + ": almost complex", p.almost_complex && p.canonical);
        c.add(tag + ": b+ > 1", x.chr.b_plus > 1, "b+ = " + str(x.chr.b_plus));
        c.add(tag + ": b+ - b1 = 3 mod 4", mod(x.chr.b_plus - x.chr.b1, 4) == 3,
              "b+ - b1 = " + str(x.chr.b_plus - x.chr.b1));
        c.add(tag + ": canonical SW parity odd", p.odd, p.parity_witness);
        auto [ok, why] = s_even(x, p.canonical);
        c.add(tag + ": S-matrix even", ok, why);
        if (p.canonical) c1sq += p.canonical->c1_squared;
        else have_all = false;
    }

    if (have_all) {
        // c1 of #(+-Gamma_i) squares to the sum of the c1_i^2 whatever the signs.
        CharData sum;
        for (const auto& x : parts) {
            sum.b1 += x.chr.b1;
            sum.b_plus += x.chr.b_plus;
            sum.b_minus += x.chr.b_minus;
        }
        try {
            std::int64_t d = moduli_dimension(sum, c1sq);
            c.add("moduli dimension of the summed structure is n - 1", d == static_cast<std::int64_t>(n) - 1,
                  "d = " + str(d));
            c.details["moduli_dimension"] = d;
        } catch (const std::domain_error& e) {
            c.add("moduli dimension of the summed structure is n - 1", false, e.what());
        }
    }
    std::vector<int> used = signs.empty() ? std::vector<int>(n, 1) : signs;
    c.details["signs"] = used;
    c.conclude(Verdict::Nonvanishing);
    if (c.verdict == Verdict::Nonvanishing) {
        std::int64_t d = c.details["moduli_dimension"].get<std::int64_t>();
        c.details["spin_bordism"] = "nontrivial class in Omega^spin_" + str(d) + " = Z/2";
    }
    return c;
}

Certificate check_bauer(const std::vector<Manifold>& parts) {
    std::size_t n = parts.size();
    if (n < 2) throw std::invalid_argument("need at least 2 summands, got " + std::to_string(n));
    Certificate c;
    c.theorem_id = "bauer-connected-sum";
    c.citation =
        "Bauer: the stable cohomotopy SW invariant of a sum of n >= 2 almost complex 4-manifolds with "
        "b1 = 0, b+ = 3 mod 4 and odd SW is nontrivial (n = 4 needs b+ = 4 mod 8)";
    for (std::size_t i = 0; i < n; ++i) {
        const auto& x = parts[i];
        auto p = inspect(x);
        auto tag = label(x, i);
        c.add(tag + ": almost complex", p.almost_complex && p.canonical);
        c.add(tag + ": b1 = 0", x.chr.b1 == 0, "b1 = " + str(x.chr.b1));
        c.add(tag + ": b+ = 3 mod 4", mod(x.chr.b_plus, 4) == 3, "b+ = " + str(x.chr.b_plus));
        c.add(tag + ": canonical SW parity odd", p.odd, p.parity_witness);
    }
    if (n >= 4) {
        std::int64_t bp = sum_b_plus(parts);
        c.add("n = 4", n == 4, "n = " + std::to_string(n));
        c.add("b+(sum) = 4 mod 8", mod(bp, 8) == 4, "b+(sum) = " + str(bp));
    }
    return c.conclude(Verdict::Nonvanishing);
}

Certificate check_mod4_sum(const std::vector<Manifold>& parts) {
    std::size_t n = parts.size();
    if (n < 2 || n > 3) throw std::invalid_argument("need 2 or 3 summands, got " + std::to_string(n));
    Certificate c;
    c.theorem_id = "sum-nonvanishing-mod4";
    c.citation =
        "Stable cohomotopy SW invariant of a sum of 2 or 3 almost complex 4-manifolds, each with odd SW and "
        "either b1 = 0, b+ = 3 mod 4 or b+ > 1, c1 = 0 mod 4, is nontrivial";
    for (std::size_t i = 0; i < n; ++i) {
        const auto& x = parts[i];
        auto p = inspect(x);
        auto tag = label(x, i);
        bool first = x.chr.b1 == 0 && mod(x.chr.b_plus, 4) == 3;
        bool second = x.chr.b_plus > 1 && x.has(Flag::C1Mod4Zero);
        c.add(tag + ": almost complex", p.almost_complex && p.canonical);
        c.add(tag + ": canonical SW parity odd", p.odd, p.parity_witness);
        std::string which = first ? "b1 = 0, b+ = " + str(x.chr.b_plus)
                                  : second ? "b+ = " + str(x.chr.b_plus) + ", c1 = 0 mod 4"
                                           : "b1 = " + str(x.chr.b1) + ", b+ = " + str(x.chr.b_plus) + ", c1 mod 4 unknown or nonzero";
        c.add(tag + ": (b1 = 0 and b+ = 3 mod 4) or (b+ > 1 and c1 = 0 mod 4)", first || second, which);
    }
    c.conclude(Verdict::Nonvanishing);
    if (c.verdict == Verdict::Nonvanishing) c.details["moduli_dimension"] = static_cast<std::int64_t>(n) - 1;
    return c;
}

Certificate check_symplectic(const Manifold& m) {
    Certificate c;
    c.theorem_id = "taubes-symplectic";
    c.citation = "Taubes: the canonical class of a symplectic 4-manifold with b+ > 1 has SW = +-1";
    auto p = inspect(m);
    c.add("symplectic", m.has(Flag::Symplectic));
    c.add("b+ > 1", m.chr.b_plus > 1, "b+ = " + str(m.chr.b_plus));
    c.add("canonical SW parity odd", p.odd, p.parity_witness);
    if (p.canonical) {
        std::int64_t d = moduli_dimension(m, *p.canonical);
        c.add("canonical moduli dimension is 0", d == 0, "d = " + str(d));
        c.details["moduli_dimension"] = d;
    }
    return c.conclude(Verdict::Nonvanishing);
}

std::vector<C1ZeroType> classify_c1_zero_types() {
    std::vector<C1ZeroType> out;
    for (std::int64_t b_plus : {2, 3}) {
        for (std::int64_t k = 0;; --k) {
            std::int64_t b1 = 1 + b_plus + 4 * k;
            if (b1 < 0) break;
            out.push_back({b_plus, b1, 16 * k});
        }
    }
    return out;
}


SumAnalysis analyze_sum(const Manifold& m) {
    SumAnalysis a;
    Decomposition d = decompose(m);
    a.parts = std::move(d.parts);
    a.complement = std::move(d.complement);
    std::size_t n = a.parts.size();
    if (n < 2 || n > 3) {
        a.reason = "needs 2 or 3 summands with b+ > 0, found " + std::to_string(n);
        return a;
    }
    a.certificate = check_almost_complex_sum(a.parts);
    if (a.certificate.verdict != Verdict::Nonvanishing) {
        a.reason = "premise failed: " + a.certificate.first_failure()->text;
        return a;
    }
    for (const auto& p : a.parts) a.c1_squared_sum += p.canonical()->c1_squared;
    a.admissible = true;
    return a;
}

}  // namespace fourfold

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "fourfold/catalog.hpp"
#include "fourfold/einstein.hpp"
#include "fourfold/expr.hpp"
#include "fourfold/hull_max.hpp"
#include "fourfold/monopole.hpp"
#include "fourfold/surgery.hpp"
#include "fourfold/sw_certify.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace fourfold;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream notes;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) notes << what;
            else if (notes.tellp() < 400) notes << "; " << what;
            ok = false;
        }
    }
};

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

// Pinned independent enclosure of pi^2 for re-verification.
const Rational kPi2Lo = parse_rational("9.8696");
const Rational kPi2Hi = parse_rational("9.8697");
bool interval_gt(const Rational& a, const Rational& b) { return a * kPi2Lo > b && a * kPi2Hi > b; }

void catalog_fidelity(Check& c) {
    auto triple = [](const Manifold& m) { return C1ZeroType{m.chr.b_plus, m.chr.b1, m.signature()}; };
    c.expect(triple(k3()) == C1ZeroType{3, 0, -16}, "K3 triple");
    c.expect(triple(t4()) == C1ZeroType{3, 4, 0}, "T4 triple");
    c.expect(triple(sigma_product(1, 1)) == C1ZeroType{3, 4, 0}, "Sigma(1,1) triple");
    c.expect(triple(kodaira()) == C1ZeroType{2, 3, 0}, "Kodaira triple");
    auto types = classify_c1_zero_types();
    std::vector<C1ZeroType> want = {{3, 0, -16}, {3, 4, 0}, {2, 3, 0}};
    bool same = types.size() == 3;
    for (const auto& t : want) same = same && std::count(types.begin(), types.end(), t) == 1;
    c.expect(same, "classify_c1_zero_types differs");
}

void gompf_family(Check& c) {
    std::mt19937_64 rng(20);
    for (int i = 0; i < 20; ++i) {
        std::int64_t a = 2 + rng() % 200, b = rng() % 200;
        Manifold g = gompf(a, b);
        std::string tag = "Gompf(" + std::to_string(a) + "," + std::to_string(b) + ")";
        c.expect(g.euler() == 24 * a + 4 * b && g.signature() == -16 * a, tag + " chi/tau");
        c.expect(g.chr.two_chi_plus_three_tau() == 8 * b, tag + " 2chi+3tau");
        c.expect(g.chr.two_chi_minus_three_tau() == 8 * (12 * a + b), tag + " 2chi-3tau");
        c.expect(g.chr.b_plus == 4 * a + 2 * b - 1, tag + " b+");
    }
}

void moduli_dimension_identities(Check& c) {
    std::vector<Manifold> ac = {cp2(), t4(), k3(), kodaira(), log_transform_k3(3), gompf(2, 1), gompf(5, 7)};
    for (std::int64_t g = 1; g <= 5; ++g)
        for (std::int64_t h = 1; h <= 5; ++h) ac.push_back(sigma_product(g, h));
    for (const auto& m : ac)
        c.expect(m.canonical() && moduli_dimension(m, *m.canonical()) == 0, "d(canonical) != 0 on " + m.name);

    std::vector<Manifold> pool = {k3(), t4(), kodaira(), sigma_product(3, 3), sigma_product(1, 1),
                                  sigma_product(3, 5), log_transform_k3(1), gompf(2, 2)};
    int sums = 0;
    for (std::size_t a = 0; a < pool.size(); ++a)
        for (std::size_t b = a; b < pool.size(); ++b)
            for (std::size_t d = b; d <= pool.size(); ++d) {
                std::vector<Manifold> parts = {pool[a], pool[b]};
                if (d < pool.size()) parts.push_back(pool[d]);
                if (check_almost_complex_sum(parts).verdict != Verdict::Nonvanishing) continue;
                ++sums;
                Manifold m = connected_sum(parts);
                SignChoices s(m);
                for (std::uint64_t i = 0; i < s.count(); ++i)
                    c.expect(moduli_dimension(m, s.at(i)) == static_cast<std::int64_t>(parts.size()) - 1,
                             "d != n-1 on " + m.name);
            }
    c.expect(sums >= 50, "too few admissible sums");
}

void parity_lemma(Check& c) {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<std::int64_t> b(0, 80), j(-60, 60);
    int counter = 0;
    for (int i = 0; i < 20000; ++i) {
        CharData d{b(rng), 1 + b(rng), b(rng), false, false};
        std::int64_t c1sq = d.signature() + 8 * j(rng);
        std::int64_t index = (c1sq - d.signature()) / 8;
        std::int64_t dim = (c1sq - 2 * d.euler() - 3 * d.signature()) / 4;
        bool even = mod(index, 2) == 0, cong = mod(dim + d.b_plus - d.b1, 4) == 3;
        if (even != cong) ++counter;
        try {
            parity_equivalence(d, c1sq);
        } catch (const std::exception&) {
            ++counter;
        }
    }
    c.expect(counter == 0, std::to_string(counter) + " counterexamples");
}

void nonvanishing(Check& c) {
    const std::vector<std::vector<Manifold>> inputs = {{k3(), k3()},
                                                       {sigma_product(1, 1), sigma_product(1, 1)},
                                                       {kodaira(), kodaira(), kodaira()},
                                                       {sigma_product(3, 3), k3()}};
    for (const auto& p : inputs) {
        bool a = check_almost_complex_sum(p).verdict == Verdict::Nonvanishing;
        bool b = check_mod4_sum(p).verdict == Verdict::Nonvanishing;
        c.expect(a || b, "no certificate for " + connected_sum(p).name);
    }
    std::vector<Manifold> four = {k3(), k3(), k3(), k3()};
    bool rejected_a = false, rejected_b = false;
    try {
        check_almost_complex_sum(four);
    } catch (const std::invalid_argument&) {
        rejected_a = true;
    }
    try {
        check_mod4_sum(four);
    } catch (const std::invalid_argument&) {
        rejected_b = true;
    }
    c.expect(rejected_a && rejected_b, "4-part input accepted");
    c.expect(check_bauer(four).verdict == Verdict::Nonvanishing, "Bauer n=4, b+ = 12");
}

// Largest 1024*Q over the 1/32 grid of the box, by brute force.
std::int64_t mesh_max_full(const IntVector& diag) {
    std::size_t d = diag.size();
    std::int64_t best = INT64_MIN;
    std::vector<int> x(d, -32);
    while (true) {
        std::int64_t q = 0;
        for (std::size_t i = 0; i < d; ++i) q += diag[i] * x[i] * x[i];
        best = std::max(best, q);
        std::size_t i = 0;
        while (i < d && x[i] == 32) x[i++] = -32;
        if (i == d) break;
        ++x[i];
    }
    return best;
}

std::int64_t mesh_max_sampled(const IntVector& diag, std::mt19937_64& rng, int samples) {
    std::uniform_int_distribution<int> u(-32, 32);
    std::int64_t best = INT64_MIN;
    for (int s = 0; s < samples; ++s) {
        std::int64_t q = 0;
        for (auto g : diag) {
            int x = u(rng);
            q += g * x * x;
        }
        best = std::max(best, q);
    }
    return best;
}

IntMatrix orbit(std::size_t d) {
    IntMatrix P;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << d); ++m) {
        IntVector v(d);
        for (std::size_t i = 0; i < d; ++i) v[i] = (m >> i & 1) ? -1 : 1;
        P.push_back(v);
    }
    return P;
}

void beta_oracles(Check& c) {
    std::mt19937_64 rng(32);
    const IntVector reps = {-64, -1, 0, 1, 64};
    int face_runs = 0, mesh_runs = 0;
    for (std::size_t d = 1; d <= 5; ++d) {
        IntMatrix P = orbit(d);
        std::vector<IntVector> diags;
        // Every diagonal over the representative entries.
        std::size_t total = 1;
        for (std::size_t i = 0; i < d; ++i) total *= reps.size();
        for (std::size_t code = 0; code < total; ++code) {
            IntVector g(d);
            std::size_t r = code;
            for (std::size_t i = 0; i < d; ++i, r /= reps.size()) g[i] = reps[r % reps.size()];
            diags.push_back(g);
        }
        std::uniform_int_distribution<std::int64_t> u(-64, 64);
        for (int k = 0; k < 200; ++k) {
            IntVector g(d);
            for (auto& x : g) x = u(rng);
            diags.push_back(g);
        }
        for (std::size_t idx = 0; idx < diags.size(); ++idx) {
            const IntVector& g = diags[idx];
            IntMatrix G(d, IntVector(d, 0));
            std::int64_t pos = 0;
            for (std::size_t i = 0; i < d; ++i) {
                G[i][i] = g[i];
                pos += std::max<std::int64_t>(0, g[i]);
            }
            MonopoleClassSet s;
            s.classes = P;
            s.gram.gram = G;
            s.gram.basis_labels.assign(d, "e");
            Rational box = beta_squared(s).value;
            c.expect(box == pos, "box != sum of positive entries");
            c.expect(box_maximum(G).value == pos, "box_maximum != sum of positive entries");
            // Face enumeration on all of d <= 4 and a spread of d = 5.
            if (d <= 4 || idx % 37 == 0) {
                ++face_runs;
                c.expect(face_enumeration_maximum(P, G).value == box, "face enumeration != box");
            }
            std::int64_t mesh;
            if (d <= 3 || (d == 4 && idx % 61 == 0)) mesh = mesh_max_full(g);
            else if (idx % 53 == 0) mesh = mesh_max_sampled(g, rng, 200000);
            else continue;
            ++mesh_runs;
            c.expect(Rational(mesh, 1024) <= box, "mesh sample exceeds the maximum");
        }
    }
    c.expect(face_runs > 1000 && mesh_runs > 100, "coverage");
}

void invariants(Check& c) {
    Manifold two = connected_sum({sigma_product(3, 3), sigma_product(3, 3)});
    Manifold blown = connected_sum({sigma_product(3, 3), sigma_product(3, 3), cp2bar()});
    auto inv = scalar_invariants(two);
    if (!inv.has_value()) {
        c.expect(false, "scalar invariants inconclusive: " + inv.reason);
        return;
    }
    SymbolicValue y(-32, 1, 2);
    c.expect(inv->Is == SymbolicValue(2048, 2), "Is = " + inv->Is.str());
    c.expect(inv->Y == y && inv->K == y, "Y = " + inv->Y.str() + ", K = " + inv->K.str());
    auto l1 = lambda_bar_k(two, 1), l23 = lambda_bar_k(two, Rational(2, 3));
    c.expect(l1.has_value() && *l1 == y, "lambda_1");
    c.expect(l23.has_value() && *l23 == y * Rational(2, 3), "lambda_2/3");
    auto ir = ricci_invariant(blown);
    c.expect(ir.has_value() && *ir == SymbolicValue(552, 2), "Ir = " + (ir.has_value() ? ir->str() : ir.reason));
    auto isb = scalar_invariants(blown);
    c.expect(ir.has_value() && isb.has_value() && *ir > isb->Is / 4, "Ir > Is/4");
}

void einstein_separation(Check& c) {
    std::vector<Manifold> parts = {sigma_product(3, 3), sigma_product(3, 3)};
    for (int i = 0; i < 18; ++i) parts.push_back(cp2bar());
    Manifold m = connected_sum(parts);
    Certificate e = einstein_obstruction(m);
    Certificate ht = hitchin_thorpe(m);
    std::int64_t gap = 2 * m.euler() - 3 * std::abs(m.signature());
    c.expect(e.verdict == Verdict::Obstructed, std::string("Einstein verdict ") + verdict_name(e.verdict));
    c.expect(ht.verdict == Verdict::NotObstructed && ht.details["strict"] == true, "Hitchin-Thorpe not strict");
    c.expect(gap == 42, "2chi - 3|tau| = " + std::to_string(gap));
}

void geography(Check& c) {
    const std::int64_t g = 3, h = 3, P = 4;
    const Rational c4 = 1;
    auto tuples = search_spin_examples(g, h, 4, 6, c4, 1);
    c.expect(!tuples.empty(), "empty search");
    bool has221 = std::any_of(tuples.begin(), tuples.end(), [](const SearchTuple& t) {
        return t.m == 2 && t.n == 2 && t.l == 1;
    });
    c.expect(has221, "(2,2,1) missing");
    int bad_ineq = 0, bad_sv = 0, bad_ght = 0;
    std::vector<std::string> not_obstructed;
    for (const auto& t : tuples) {
        bool i1 = interval_gt(81 * Rational(2 * t.n + P - 3 - t.l), 4 * c4 * P);
        bool i2 = interval_gt(81 * Rational(2 * (t.n + 12 * t.m) + P + 21 - t.l), 4 * c4 * P);
        bool i3 = 3 * (t.l + 3) >= 2 * t.n + P;
        if (!(i1 && i2 && i3)) ++bad_ineq;
        if (!(t.sv.lo() > 0)) ++bad_sv;
        if (!(t.ght.verdict == Verdict::NotObstructed && t.ght.details["strict"] == true)) ++bad_ght;
        if (t.einstein.verdict != Verdict::Obstructed)
            not_obstructed.push_back("(" + std::to_string(t.m) + "," + std::to_string(t.n) + "," + std::to_string(t.l) +
                                     ")");
    }
    c.expect(bad_ineq == 0, std::to_string(bad_ineq) + " tuples fail re-verification");
    c.expect(bad_sv == 0, std::to_string(bad_sv) + " tuples with zero simplicial volume");
    c.expect(bad_ght == 0, std::to_string(bad_ght) + " tuples without strict GHT");
    if (!not_obstructed.empty()) {
        std::string list;
        for (std::size_t i = 0; i < not_obstructed.size() && i < 6; ++i) list += (i ? " " : "") + not_obstructed[i];
        c.expect(false, std::to_string(not_obstructed.size()) + " of " + std::to_string(tuples.size()) +
                            " tuples not Einstein-obstructed, e.g. " + list);
    }
    auto dump = [&](unsigned threads) {
        std::string s;
        for (const auto& t : search_spin_examples(g, h, 4, 6, c4, threads)) s += to_json(t).dump();
        return s;
    };
    std::string ref = dump(1);
    for (unsigned k = 2; k <= 8; ++k) c.expect(dump(k) == ref, "output differs with " + std::to_string(k) + " threads");
}

void decomposition_exotic(Check& c) {
    Certificate b = check_mod4_sum({k3(), k3()});
    c.expect(b.verdict == Verdict::Nonvanishing && decomposition_bound(b, 1) == 2, "decomposition bound");
    ExoticPair p = exotic_pair(blow_up(k3(), 1), kodaira());
    const auto& d = p.certificate.details;
    c.expect(p.certificate.verdict == Verdict::Obstructed, "exotic verdict");
    c.expect(d.value("positive_summands_right", 0) == 4, "positive summands on the right");
    c.expect(d.value("moduli_dimension", 99) <= 2, "moduli dimension");
    c.expect(d.value("positive_summands_right", 0) > d.value("decomposition_bound", 99), "count vs bound");
    c.expect(p.left.chr == p.right.chr, "sides differ in characteristic data");
}

Expr random_expr(std::mt19937_64& rng, int depth) {
    static const std::vector<std::string> fixed = {"CP2", "CP2bar", "S1xS3", "T4", "K3", "Kodaira"};
    int pick = depth <= 0 ? 0 : static_cast<int>(rng() % 4);
    if (pick == 0) {
        switch (rng() % 4) {
            case 0: return Expr::atom("Sigma", {1 + std::int64_t(rng() % 9), 1 + std::int64_t(rng() % 9)});
            case 1: return Expr::atom("Y", {std::int64_t(rng() % 9)});
            case 2: return Expr::atom("Gompf", {2 + std::int64_t(rng() % 9), std::int64_t(rng() % 9)});
            default: return Expr::atom(fixed[rng() % fixed.size()]);
        }
    }
    if (pick == 1) return Expr::repeat(1 + std::int64_t(rng() % 9), random_expr(rng, depth - 1));
    return Expr::sum(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
}

void parser(Check& c) {
    std::ifstream in(std::string(FOURFOLD_TEST_DATA) + "/grammar_corpus.txt");
    c.expect(in.good(), "corpus missing");
    std::string line;
    int cases = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        ++cases;
        auto a = line.find('\t'), b = line.rfind('\t');
        bool ok = line.substr(0, a) == "ok";
        std::string input = line.substr(a + 1, b - a - 1), want = line.substr(b + 1);
        try {
            std::string got = print(parse(input));
            c.expect(ok && got == want, "corpus case '" + input + "'");
        } catch (const ParseError& e) {
            c.expect(!ok && std::to_string(e.offset()) == want, "corpus case '" + input + "'");
        }
    }
    c.expect(cases >= 100, "corpus has " + std::to_string(cases) + " cases");
    std::mt19937_64 rng(1000);
    for (int i = 0; i < 1000; ++i) {
        Expr e = random_expr(rng, 1 + i % 7);
        c.expect(parse(print(e)) == e, "round trip of " + print(e));
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"catalog fidelity", catalog_fidelity},
        {"Gompf family", gompf_family},
        {"moduli dimension", moduli_dimension_identities},
        {"parity lemma", parity_lemma},
        {"nonvanishing certificates", nonvanishing},
        {"beta^2 oracle equivalence", beta_oracles},
        {"invariant computations", invariants},
        {"Einstein obstruction separation", einstein_separation},
        {"geography searches", geography},
        {"decomposition and exotic pair", decomposition_exotic},
        {"parser", parser},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
        if (!c.ok) std::cout << " (" << c.notes.str() << ")";
        std::cout << std::endl;
        failed += !c.ok;
    }
    return failed ? 1 : 0;
}

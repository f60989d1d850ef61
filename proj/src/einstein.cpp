#include "fourfold/einstein.hpp"

#include "fourfold/catalog.hpp"
#include "fourfold/surgery.hpp"
#include "fourfold/sw_certify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace fourfold {

namespace {

std::string str(std::int64_t x) { return std::to_string(x); }
std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

const char* truth_name(Truth t) {
    switch (t) {
        case Truth::True: return "true";
        case Truth::False: return "false";
        default: return "undecided";
    }
}

// a*pi^2 > b or a*pi^2 >= b.
Truth pi_compare(const Rational& a, const Rational& b, bool strict) {
    return strict ? pi_squared_gt(a, b) : pi_squared_ge(a, b);
}

std::int64_t two_chi_minus_three_abs_tau(const CharData& c) {
    std::int64_t t = c.signature();
    return 2 * c.euler() - 3 * (t < 0 ? -t : t);
}

}  // namespace

Computed<SvInterval> simplicial_volume(const Manifold& m, const Rational& c4) {
    if (c4 <= 0) throw std::invalid_argument("c4 must be positive");
    if (!m.sv_factors) return Computed<SvInterval>::inconclusive("simplicial volume of " + m.name + " is unknown");
    SvInterval iv;
    iv.c4 = c4;
    for (const auto& t : *m.sv_factors) iv.factor += Integer(t.k) * (t.g - 1) * (t.h - 1);
    return Computed<SvInterval>::ok(iv);
}

Certificate hitchin_thorpe(const Manifold& m) {
    Certificate c;
    c.theorem_id = "hitchin-thorpe";
    c.citation = "Hitchin-Thorpe: a closed Einstein 4-manifold satisfies 2chi >= 3|tau|";
    std::int64_t gap = two_chi_minus_three_abs_tau(m.chr);
    c.add("2chi >= 3|tau|", gap >= 0, "2chi - 3|tau| = " + str(gap));
    c.details["two_chi_minus_three_abs_tau"] = gap;
    c.details["strict"] = gap > 0;
    return c.conclude(Verdict::NotObstructed, Verdict::Obstructed);
}

Certificate ght(const Manifold& m, const Rational& c4, bool strict) {
    Certificate c;
    c.theorem_id = "gromov-hitchin-thorpe";
    c.citation =
        "Gromov-Hitchin-Thorpe: a closed Einstein 4-manifold satisfies 2chi - 3|tau| >= ||M||/(81 pi^2) "
        "and chi >= ||M||/(2592 pi^2)";
    auto sv = simplicial_volume(m, c4);
    if (!sv.has_value()) {
        c.add("simplicial volume known", false, sv.reason);
        return c.conclude(Verdict::Inconclusive);
    }
    std::int64_t gap = two_chi_minus_three_abs_tau(m.chr);
    // gap >= ||M||/(81 pi^2)  <=>  81 gap pi^2 >= ||M||.
    Rational a = 81 * Rational(gap);
    const char* rel = strict ? ">" : ">=";
    Truth upper = pi_compare(a, sv->hi(), strict);
    Truth lower = pi_compare(a, sv->lo(), strict);
    // The obstruction itself is the non-strict inequality at the smallest possible ||M||.
    Truth lower_nonstrict = pi_squared_ge(a, sv->lo());
    std::string ineq = std::string("2chi - 3|tau| ") + rel + " ||M||/(81 pi^2)";
    c.add(ineq + " at the upper end of the simplicial volume interval", upper == Truth::True,
          "2chi - 3|tau| = " + str(gap) + ", ||M|| <= " + to_string(sv->hi()));

    Rational ga = 2592 * Rational(m.chr.euler());
    Truth gromov_upper = pi_compare(ga, sv->hi(), strict);
    Truth gromov_lower = pi_squared_ge(ga, sv->lo());

    c.details["strict"] = strict;
    c.details["two_chi_minus_three_abs_tau"] = gap;
    c.details["sv_lo"] = to_string(sv->lo());
    c.details["sv_hi"] = to_string(sv->hi());
    c.details["upper_end"] = truth_name(upper);
    c.details["lower_end"] = truth_name(lower);
    c.details["gromov_upper_end"] = truth_name(gromov_upper);
    c.details["gromov_lower_end"] = truth_name(gromov_lower);

    if (lower_nonstrict == Truth::False || gromov_lower == Truth::False) c.verdict = Verdict::Obstructed;
    else if (upper == Truth::True && gromov_upper == Truth::True) c.verdict = Verdict::NotObstructed;
    else c.verdict = Verdict::Inconclusive;
    return c;
}

Certificate einstein_obstruction(const Manifold& m) {
    Certificate c;
    c.theorem_id = "monopole-einstein-obstruction";
    c.citation =
        "A sum (X_1 # ... # X_n) # N, n = 2, 3, of almost complex parts with nonvanishing stable cohomotopy "
        "invariant and b+(N) = 0 admits no Einstein metric if 4n - (2chi(N) + 3tau(N)) >= "
        "(1/3) sum (2chi + 3tau)(X_m)";
    std::int64_t plus = m.chr.two_chi_plus_three_tau(), minus = m.chr.two_chi_minus_three_tau();
    c.details["two_chi_plus_three_tau"] = plus;
    c.details["two_chi_minus_three_tau"] = minus;
    if (plus < 0 || minus < 0) {
        c.add("2chi + 3tau >= 0 and 2chi - 3tau >= 0", false,
              "2chi + 3tau = " + str(plus) + ", 2chi - 3tau = " + str(minus));
        c.details["branch"] = "hitchin-thorpe";
        c.verdict = Verdict::Obstructed;
        return c;
    }
    SumAnalysis a = analyze_sum(m);
    std::size_t n = a.parts.size();
    c.add("2 or 3 summands with b+ > 0", n == 2 || n == 3, "n = " + std::to_string(n));
    if (n != 2 && n != 3) return c.conclude(Verdict::Inconclusive);
    c.add("almost complex sum premises on the parts", a.admissible, a.admissible ? "" : a.reason);
    c.add("b+(N) = 0", a.complement.chr.b_plus == 0, "N = " + a.complement.name);
    if (!c.all_pass()) return c.conclude(Verdict::Inconclusive);

    std::int64_t rhs3 = 0;
    for (const auto& p : a.parts) rhs3 += p.chr.two_chi_plus_three_tau();
    std::int64_t lhs = 4 * static_cast<std::int64_t>(n) - a.complement.chr.two_chi_plus_three_tau();
    bool holds = 3 * lhs >= rhs3;
    c.details["branch"] = "monopole";
    c.details["lhs"] = lhs;
    c.details["rhs"] = to_string(Rational(rhs3, 3));
    c.add("4n - (2chi(N) + 3tau(N)) >= (1/3) sum (2chi + 3tau)(X_m)", holds,
          str(lhs) + (holds ? " >= " : " < ") + to_string(Rational(rhs3, 3)));
    c.verdict = holds ? Verdict::Obstructed : Verdict::NotObstructed;
    return c;
}

Certificate corollary_obstruction(const std::vector<Manifold>& parts, std::int64_t k, std::int64_t g, std::int64_t h,
                                  std::int64_t l1, std::int64_t l2) {
    Certificate c;
    c.theorem_id = "product-sum-einstein-obstruction";
    c.citation =
        "(# X_m) # k Sigma_h x Sigma_g # l1 S1xS3 # l2 CP2bar, X_m simply connected symplectic with "
        "b+ = 3 mod 4, n + k <= 3, g, h odd, admits no Einstein metric if 4(n + l1 + k) + l2 >= "
        "(1/3)(sum (2chi + 3tau)(X_m) + 4k(1-h)(1-g))";
    std::int64_t n = static_cast<std::int64_t>(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& x = parts[i];
        std::string tag = "part " + std::to_string(i + 1) + " (" + x.name + ")";
        c.add(tag + ": simply connected", x.chr.is_simply_connected);
        c.add(tag + ": symplectic", x.has(Flag::Symplectic));
        c.add(tag + ": b+ = 3 mod 4", mod(x.chr.b_plus, 4) == 3, "b+ = " + str(x.chr.b_plus));
    }
    c.add("n >= 1, k >= 1, n + k <= 3", n >= 1 && k >= 1 && n + k <= 3, "n = " + str(n) + ", k = " + str(k));
    c.add("g, h odd and >= 1", g >= 1 && h >= 1 && g % 2 == 1 && h % 2 == 1, "g = " + str(g) + ", h = " + str(h));
    c.add("l1, l2 >= 0", l1 >= 0 && l2 >= 0);
    if (!c.all_pass()) return c.conclude(Verdict::Inconclusive);

    std::int64_t sum = 0;
    for (const auto& x : parts) sum += x.chr.two_chi_plus_three_tau();
    std::int64_t P = (g - 1) * (h - 1);
    std::int64_t lhs = 4 * (n + l1 + k) + l2;
    std::int64_t rhs3 = sum + 4 * k * P;
    bool holds = 3 * lhs >= rhs3;
    c.add("4(n + l1 + k) + l2 >= (1/3)(sum (2chi + 3tau)(X_m) + 4k(1-h)(1-g))", holds,
          str(lhs) + (holds ? " >= " : " < ") + to_string(Rational(rhs3, 3)));
    c.verdict = holds ? Verdict::Obstructed : Verdict::NotObstructed;

    // The same test with the characteristic numbers of the actual sum:
    // 2chi + 3tau of Sigma_g x Sigma_h is 8(g-1)(h-1), and N = l1 S1xS3 # l2 CP2bar
    // has 2chi + 3tau = 4 - 4 l1 - l2.
    std::int64_t exact_lhs = 4 * (n + k) - (4 - 4 * l1 - l2);
    std::int64_t exact_rhs3 = sum + 8 * k * P;
    bool exact = 3 * exact_lhs >= exact_rhs3;
    c.details["lhs"] = lhs;
    c.details["rhs"] = to_string(Rational(rhs3, 3));
    c.details["exact_inequality"] = {
        {"lhs", exact_lhs}, {"rhs", to_string(Rational(exact_rhs3, 3))}, {"holds", exact}};
    c.details["agrees_with_exact"] = exact == holds;
    return c;
}

std::int64_t decomposition_bound(const Certificate& cert, std::int64_t d) {
    if (cert.verdict != Verdict::Nonvanishing) throw std::invalid_argument("no nonvanishing certificate");
    if (d < 0) throw std::invalid_argument("negative moduli dimension");
    if (cert.details.contains("moduli_dimension") && cert.details["moduli_dimension"].get<std::int64_t>() != d)
        throw std::invalid_argument("moduli dimension does not match the certificate");
    return d + 1;
}

ExoticPair exotic_pair(const Manifold& x, const Manifold& xprime) {
    if (x.chr.is_spin) throw std::invalid_argument("non-spin required: the form of a spin manifold is even");
    Decomposition dx = decompose(xprime);
    std::size_t k = dx.parts.size();
    if (k < 1 || k > 2) throw std::invalid_argument("x' must have one or two summands with b+ > 0");

    ExoticPair out;
    Certificate& c = out.certificate;
    c.theorem_id = "exotic-connected-sum";
    c.citation =
        "For X simply connected, non-spin, symplectic with b+ = 3 mod 4 and X' a sum of one or two "
        "almost complex parts as in the nonvanishing theorem, X # X' is homeomorphic but not diffeomorphic "
        "to (b+ CP2 # b- CP2bar) # X'";
    c.add("x simply connected", x.chr.is_simply_connected);
    c.add("x non-spin", !x.chr.is_spin);
    c.add("x symplectic", x.has(Flag::Symplectic));
    c.add("b+(x) = 3 mod 4", mod(x.chr.b_plus, 4) == 3, "b+ = " + str(x.chr.b_plus));
    c.add("x' has no b+ = 0 summands", dx.complement.chr.b_plus == 0 && dx.complement.chr.b_minus == 0 &&
                                           dx.complement.chr.b1 == 0,
          "complement " + dx.complement.name);

    std::int64_t p = x.chr.b_plus, q = x.chr.b_minus;
    std::vector<Manifold> ys;
    for (std::int64_t i = 0; i < p; ++i) ys.push_back(cp2());
    for (std::int64_t i = 0; i < q; ++i) ys.push_back(cp2bar());
    out.y = ys.empty() ? sphere() : connected_sum(ys);
    out.left = connected_sum({x, xprime});
    out.right = connected_sum({out.y, xprime});

    // Homeomorphism: the form of x is odd; definite forms are diagonal by
    // Donaldson, indefinite odd unimodular forms are diagonal, then Freedman.
    c.add("intersection form of x is odd and diagonalizable", !x.chr.is_spin,
          q == 0 ? "positive definite, diagonal by Donaldson" : "odd indefinite unimodular");
    c.add("y has the same (b+, b-) as x", out.y.chr.b_plus == p && out.y.chr.b_minus == q,
          "p = " + str(p) + ", q = " + str(q));

    std::vector<Manifold> parts = {x};
    parts.insert(parts.end(), dx.parts.begin(), dx.parts.end());
    Certificate nv = check_almost_complex_sum(parts);
    c.add("x # x' has a nonvanishing structure", nv.verdict == Verdict::Nonvanishing,
          nv.verdict == Verdict::Nonvanishing ? "" : nv.first_failure()->text);
    if (!c.all_pass()) return c.conclude(Verdict::Inconclusive), out;

    std::int64_t d = nv.details["moduli_dimension"].get<std::int64_t>();
    std::int64_t bound = decomposition_bound(nv, d);
    std::int64_t right_parts = p + static_cast<std::int64_t>(k);
    c.add("moduli dimension of x # x' is at most 2", d <= 2, "d = " + str(d));
    c.add("y # x' splits into at least 4 summands with b+ > 0", right_parts >= 4,
          str(right_parts) + " summands");
    c.add("summand count exceeds the decomposition bound d + 1", right_parts > bound,
          str(right_parts) + " > " + str(bound));
    c.details["moduli_dimension"] = d;
    c.details["decomposition_bound"] = bound;
    c.details["positive_summands_right"] = right_parts;
    c.details["homeomorphic"] = true;
    // Obstructed: a diffeomorphism between the two sides is ruled out.
    return c.conclude(Verdict::Obstructed), out;
}

namespace {

struct Grid {
    std::int64_t g, h, m_max, n_max;
    Rational c4;
    bool spin;
};

nlohmann::json inequality(const std::string& name, Truth t, const std::string& text) {
    return {{"name", name}, {"holds", truth_name(t)}, {"text", text}};
}

// The three search inequalities for one tuple; second member is whether all hold.
std::pair<nlohmann::json, bool> check_inequalities(const Grid& gr, std::int64_t m, std::int64_t n, std::int64_t l) {
    std::int64_t P = (gr.g - 1) * (gr.h - 1);
    nlohmann::json out = nlohmann::json::array();
    Truth t1, t2, t3;
    // X + (1 - 4c4/(81 pi^2)) Y > 0 with Y >= 0  <=>  81 X' pi^2 > 4 c4 Y, X' = X + Y.
    if (gr.spin) {
        t1 = pi_squared_gt(81 * Rational(2 * n + P - 3 - l), 4 * gr.c4 * P);
        t2 = pi_squared_gt(81 * Rational(2 * (n + 12 * m) + P + 21 - l), 4 * gr.c4 * P);
        t3 = 3 * (l + 3) >= 2 * n + P ? Truth::True : Truth::False;
        out.push_back(inequality("upper", t1, "2n + (1 - 4c4/(81 pi^2))(g-1)(h-1) - 3 > l1"));
        out.push_back(inequality("upper-minus", t2, "2(n + 12m) + (1 - 4c4/(81 pi^2))(g-1)(h-1) + 21 > l1"));
        out.push_back(inequality("lower", t3, "l1 >= (1/3)(2n + (g-1)(h-1)) - 3"));
    } else {
        t1 = pi_squared_gt(81 * Rational(8 * n + 4 * P - 12 - l), 16 * gr.c4 * P);
        t2 = pi_squared_gt(81 * Rational(8 * (n + 12 * m) + 4 * P + 84 + 5 * l), 16 * gr.c4 * P);
        t3 = 3 * (l + 12) >= 8 * n + 4 * P ? Truth::True : Truth::False;
        out.push_back(inequality("upper", t1, "8n + 4(1 - 4c4/(81 pi^2))(g-1)(h-1) - 12 > l2"));
        out.push_back(inequality("upper-minus", t2, "8(n + 12m) + 4(1 - 4c4/(81 pi^2))(g-1)(h-1) + 84 > -5 l2"));
        out.push_back(inequality("lower", t3, "l2 >= (1/3)(8n + 4(g-1)(h-1)) - 12"));
    }
    return {out, t1 == Truth::True && t2 == Truth::True && t3 == Truth::True};
}

SearchTuple certify(const Grid& gr, std::int64_t m, std::int64_t n, std::int64_t l, nlohmann::json ineq) {
    SearchTuple t;
    t.m = m;
    t.n = n;
    t.l = l;
    t.inequalities = std::move(ineq);
    Manifold x = gompf(m, n), y = log_transform_k3(1), s = sigma_product(gr.g, gr.h);
    std::vector<Manifold> parts = {x, y, s};
    for (std::int64_t i = 0; i < l; ++i) parts.push_back(gr.spin ? s1xs3() : cp2bar());
    t.manifold = connected_sum(parts);
    t.sv = *simplicial_volume(t.manifold, gr.c4);
    t.hitchin_thorpe = hitchin_thorpe(t.manifold);
    t.ght = ght(t.manifold, gr.c4, true);
    t.einstein = einstein_obstruction(t.manifold);
    t.corollary = gr.spin ? corollary_obstruction({x, y}, 1, gr.g, gr.h, l, 0)
                          : corollary_obstruction({x, y}, 1, gr.g, gr.h, 0, l);
    t.family =
        "Y(l) for every l >= 0 has the characteristic numbers of K3; the sums for distinct l are homeomorphic "
        "and are told apart by the monopole classes +-2l f";
    return t;
}

std::vector<SearchTuple> run_search(const Grid& gr, unsigned threads) {
    if (gr.g < 3 || gr.h < 3 || gr.g % 2 == 0 || gr.h % 2 == 0)
        throw std::invalid_argument("g and h must be odd and >= 3");
    if (gr.c4 <= 0) throw std::invalid_argument("c4 must be positive");
    std::vector<std::pair<std::int64_t, std::int64_t>> cells;
    for (std::int64_t m = 2; m <= gr.m_max; ++m)
        for (std::int64_t n = 1; n <= gr.n_max; ++n)
            if (mod(4 * m + 2 * n - 1, 4) == 3) cells.emplace_back(m, n);

    std::int64_t P = (gr.g - 1) * (gr.h - 1);
    std::vector<SearchTuple> out;
    std::mutex mu;
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        std::vector<SearchTuple> local;
        for (std::size_t i; (i = next++) < cells.size();) {
            auto [m, n] = cells[i];
            // The first inequality caps l below the value it takes at c4 = 0.
            std::int64_t cap = gr.spin ? 2 * n + P - 3 : 8 * n + 4 * P - 12;
            for (std::int64_t l = 1; l < cap; ++l) {
                auto [ineq, ok] = check_inequalities(gr, m, n, l);
                if (ok) local.push_back(certify(gr, m, n, l, std::move(ineq)));
            }
        }
        std::lock_guard lock(mu);
        for (auto& t : local) out.push_back(std::move(t));
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, cells.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    std::sort(out.begin(), out.end(), [](const SearchTuple& a, const SearchTuple& b) {
        return std::tie(a.m, a.n, a.l) < std::tie(b.m, b.n, b.l);
    });
    return out;
}

}  // namespace

std::vector<SearchTuple> search_spin_examples(std::int64_t g, std::int64_t h, std::int64_t m_max, std::int64_t n_max,
                                              const Rational& c4, unsigned threads) {
    return run_search({g, h, m_max, n_max, c4, true}, threads);
}

std::vector<SearchTuple> search_nonspin_examples(std::int64_t g, std::int64_t h, std::int64_t m_max,
                                                 std::int64_t n_max, const Rational& c4, unsigned threads) {
    return run_search({g, h, m_max, n_max, c4, false}, threads);
}

nlohmann::json to_json(const SearchTuple& t) {
    return {
        {"m", t.m},
        {"n", t.n},
        {"l", t.l},
        {"manifold", t.manifold.name},
        {"euler", t.manifold.euler()},
        {"signature", t.manifold.signature()},
        {"two_chi_plus_three_tau", t.manifold.chr.two_chi_plus_three_tau()},
        {"two_chi_minus_three_tau", t.manifold.chr.two_chi_minus_three_tau()},
        {"inequalities", t.inequalities},
        {"simplicial_volume", {{"lo", to_string(t.sv.lo())}, {"hi", to_string(t.sv.hi())}, {"c4", to_string(t.sv.c4)}}},
        {"hitchin_thorpe", to_json(t.hitchin_thorpe)},
        {"ght", to_json(t.ght)},
        {"einstein", to_json(t.einstein)},
        {"corollary", to_json(t.corollary)},
        {"family", t.family},
    };
}

}  // namespace fourfold

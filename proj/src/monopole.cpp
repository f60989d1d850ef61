#include "fourfold/monopole.hpp"

#include "fourfold/surgery.hpp"
#include "fourfold/sw_certify.hpp"

#include <set>
#include <stdexcept>

namespace fourfold {

namespace {

MonopoleClassSet sign_orbit(const std::vector<std::string>& labels, const IntVector& diagonal, std::string source) {
    std::size_t d = diagonal.size();
    if (d >= 20) throw std::invalid_argument("too many generators for an explicit monopole class list");
    MonopoleClassSet s;
    s.gram.basis_labels = labels;
    s.gram.gram.assign(d, IntVector(d, 0));
    for (std::size_t i = 0; i < d; ++i) s.gram.gram[i][i] = diagonal[i];
    // Bit i set gives coefficient -1 on generator i; bit 0 is the first generator.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
        IntVector v(d);
        for (std::size_t i = 0; i < d; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
        s.classes.push_back(v);
    }
    s.source = std::move(source);
    return s;
}

SymbolicValue pi2(const Rational& q) { return SymbolicValue(q, 2); }

}  // namespace

bool is_symmetric(const MonopoleClassSet& s) {
    std::set<IntVector> all(s.classes.begin(), s.classes.end());
    for (const auto& v : s.classes) {
        IntVector w = v;
        for (auto& x : w) x = -x;
        if (!all.count(w)) return false;
    }
    return true;
}

MonopoleClassSet negate(const MonopoleClassSet& s) {
    MonopoleClassSet t = s;
    for (auto& v : t.classes)
        for (auto& x : v) x = -x;
    return t;
}

MonopoleClassSet monopole_classes_for_sum(const std::vector<Manifold>& parts, std::int64_t blowdowns) {
    if (parts.empty()) throw std::invalid_argument("no parts given");
    if (blowdowns < 0) throw std::invalid_argument("negative number of blow-down classes");
    Certificate cert = check_almost_complex_sum(parts);
    if (cert.verdict != Verdict::Nonvanishing)
        throw std::invalid_argument("parts fail the almost complex sum check: " + cert.first_failure()->text);
    std::vector<std::string> labels;
    IntVector diagonal;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        labels.push_back("c1(X" + std::to_string(i + 1) + ")");
        diagonal.push_back(parts[i].canonical()->c1_squared);
    }
    for (std::int64_t r = 1; r <= blowdowns; ++r) {
        labels.push_back("E" + std::to_string(r));
        diagonal.push_back(-1);
    }
    return sign_orbit(labels, diagonal, "sum of +-c1 of the parts and +-E_r of the negative definite summand");
}

MonopoleSearch monopole_classes(const Manifold& m) {
    MonopoleSearch out;
    if (m.has(Flag::HasPSCMetric)) {
        out.certified_empty = true;
        out.reason = "positive scalar curvature metric: no monopole classes";
        return out;
    }
    SumAnalysis a = analyze_sum(m);
    if (a.admissible) {
        if (a.complement.chr.b1 < 0 || a.complement.chr.b_plus != 0) {
            out.reason = "complement has b+ > 0";
            return out;
        }
        out.set = monopole_classes_for_sum(a.parts, a.complement.chr.b_minus);
        return out;
    }
    if (a.parts.size() == 1 && m.is_atom()) {
        const Manifold& x = a.parts.front();
        Certificate c = check_symplectic(x);
        if (c.verdict == Verdict::Nonvanishing && x.has(Flag::MinimalKaehler)) {
            out.set = sign_orbit({"c1"}, {x.canonical()->c1_squared}, "+-c1 of a minimal Kaehler surface with b+ > 1");
            return out;
        }
        out.reason = "single part is not a minimal Kaehler surface with b+ > 1";
        return out;
    }
    out.reason = a.reason.empty() ? "monopole classes unknown" : a.reason;
    return out;
}

HullMaximum beta_squared(const MonopoleClassSet& s) {
    if (s.classes.empty()) throw std::invalid_argument("empty monopole class set");
    if (!is_symmetric(s)) throw std::invalid_argument("monopole class set is not symmetric under negation");
    if (is_sign_orbit(s.classes, s.gram.gram)) return box_maximum(s.gram.gram);
    return face_enumeration_maximum(s.classes, s.gram.gram);
}

Computed<HullMaximum> beta_squared(const Manifold& m) {
    MonopoleSearch found = monopole_classes(m);
    if (found.certified_empty) {
        HullMaximum zero{0, {}, "empty"};
        return Computed<HullMaximum>::ok(zero);
    }
    if (!found.set) return Computed<HullMaximum>::inconclusive(found.reason);
    return Computed<HullMaximum>::ok(beta_squared(*found.set));
}

namespace {

// 4n - (2chi(N) + 3tau(N)) + sum c1^2, the bracket shared by the Ricci bounds.
Rational ricci_bracket(const SumAnalysis& a) {
    std::int64_t n = static_cast<std::int64_t>(a.parts.size());
    return 4 * n - a.complement.chr.two_chi_plus_three_tau() + a.c1_squared_sum;
}

}  // namespace

CurvatureBounds curvature_bounds(const Manifold& m, const MonopoleClassSet& s) {
    Rational b2 = beta_squared(s).value;
    CurvatureBounds out{pi2(32 * b2), pi2(72 * b2), Computed<SymbolicValue>::inconclusive("")};
    SumAnalysis a = analyze_sum(m);
    if (a.admissible) out.ricci = Computed<SymbolicValue>::ok(pi2(8 * ricci_bracket(a)));
    else out.ricci.reason = "no admissible decomposition: " + a.reason;
    return out;
}

Computed<ScalarInvariants> scalar_invariants(const Manifold& m) {
    using R = Computed<ScalarInvariants>;
    SumAnalysis a = analyze_sum(m);
    if (!a.admissible) return R::inconclusive(a.reason);
    for (const auto& p : a.parts)
        if (!p.has(Flag::MinimalKaehler)) return R::inconclusive("part " + p.name + " is not minimal Kaehler");
    if (!a.complement.has(Flag::HasNonnegScalarMetric))
        return R::inconclusive("complement " + a.complement.name + " has no metric of nonnegative scalar curvature");
    std::int64_t s = a.c1_squared_sum;
    if (s < 0) return R::inconclusive("negative sum of c1^2");
    SymbolicValue y = SymbolicValue::with_sqrt(-4, 1, static_cast<std::uint64_t>(2 * s));
    return R::ok({pi2(32 * Rational(s)), y, y});
}

Computed<SymbolicValue> lambda_bar_k(const Manifold& m, const Rational& k) {
    using R = Computed<SymbolicValue>;
    if (m.has(Flag::HasPSCMetric)) {
        if (k > 0) return R::ok(SymbolicValue::plus_infinity());
        return R::inconclusive("positive Yamabe invariant but k <= 0");
    }
    auto inv = scalar_invariants(m);
    if (!inv.has_value()) return R::inconclusive(inv.reason);
    if (k < Rational(2, 3)) return R::inconclusive("k < 2/3: equality with k*Y is not established");
    return R::ok(inv->Y * k);
}

Computed<SymbolicValue> ricci_invariant(const Manifold& m) {
    using R = Computed<SymbolicValue>;
    SumAnalysis a = analyze_sum(m);
    if (!a.admissible) return R::inconclusive(a.reason);
    for (const auto& p : a.parts)
        if (!p.has(Flag::MinimalKaehler)) return R::inconclusive("part " + p.name + " is not minimal Kaehler");
    if (!a.complement.has(Flag::HasASDPSCMetric))
        return R::inconclusive("complement " + a.complement.name + " has no anti-self-dual metric of positive scalar curvature");
    if (a.c1_squared_sum <= 0) return R::inconclusive("sum of c1^2 is not positive");
    return R::ok(pi2(8 * ricci_bracket(a)));
}

std::int64_t adjunction_genus_bound(std::int64_t pairing, std::int64_t self_intersection) {
    if (self_intersection < 0) throw std::invalid_argument("surface has negative self-intersection");
    Rational b = ceil(Rational(self_intersection - pairing + 2, 2));
    std::int64_t g = b.get_num().get_si();
    return g < 1 ? 1 : g;
}

std::int64_t adjunction_genus_bound(const Manifold& m, const SpinCStructure& g, const IntVector& sigma_class) {
    if (!m.lattice) throw std::invalid_argument("adjunction bound needs a lattice");
    bool certified = false;
    if (m.is_atom()) certified = check_symplectic(m).verdict == Verdict::Nonvanishing;
    else certified = analyze_sum(m).admissible;
    if (!certified) throw std::invalid_argument("no nonvanishing certificate for " + m.name);
    std::int64_t self = m.lattice->square(sigma_class);
    std::int64_t pairing = m.lattice->pair(g.c1, sigma_class);
    return adjunction_genus_bound(pairing, self);
}

}  // namespace fourfold

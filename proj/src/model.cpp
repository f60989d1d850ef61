#include "fourfold/model.hpp"

#include "fourfold/exact.hpp"

#include <stdexcept>

namespace fourfold {

std::int64_t GramLattice::pair(const IntVector& x, const IntVector& y) const {
    if (x.size() != rank() || y.size() != rank())
        throw std::invalid_argument("vector length does not match lattice rank");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) s += x[i] * gram[i][j] * y[j];
    return s;
}

Inertia inertia(const IntMatrix& gram) {
    std::size_t n = gram.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = gram[i][j];

    Inertia out;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n && p == n; ++i)
            if (!done[i] && a[i][i] != 0) p = i;
        if (p == n) {
            // No usable diagonal entry: a congruence i <- i + j creates one.
            std::size_t pi = n, pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[i] && !done[j] && i != j && a[i][j] != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) break;
            for (std::size_t k = 0; k < n; ++k) a[pi][k] += a[pj][k];
            for (std::size_t k = 0; k < n; ++k) a[k][pi] += a[k][pj];
            p = pi;
        }
        done[p] = true;
        if (a[p][p] > 0) ++out.positive;
        else ++out.negative;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || a[i][p] == 0) continue;
            Rational f = a[i][p] / a[p][p];
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[p][j];
        }
        for (std::size_t j = 0; j < n; ++j)
            if (!done[j]) a[p][j] = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i]) a[i][p] = 0;
    }
    out.zero = static_cast<int>(n) - out.positive - out.negative;
    return out;
}

std::vector<std::pair<std::string, std::int64_t>> Manifold::summand_record() const {
    if (summands.empty()) return {{name, 1}};
    std::vector<std::pair<std::string, std::int64_t>> out;
    for (const auto& s : summands) out.emplace_back(s.id, s.multiplicity);
    return out;
}

std::vector<std::shared_ptr<const Manifold>> Manifold::atoms() const {
    if (summands.empty()) return {std::make_shared<const Manifold>(*this)};
    std::vector<std::shared_ptr<const Manifold>> out;
    for (const auto& s : summands)
        for (std::int64_t i = 0; i < s.multiplicity; ++i) out.push_back(s.atom);
    return out;
}

const SpinCStructure* Manifold::canonical() const {
    for (const auto& s : spinc)
        if (s.almost_complex) return &s;
    return nullptr;
}

namespace {

struct FlagName {
    Flag flag;
    const char* name;
};

constexpr FlagName kFlagNames[] = {
    {Flag::AlmostComplex, "AlmostComplex"},
    {Flag::Symplectic, "Symplectic"},
    {Flag::MinimalKaehler, "MinimalKaehler"},
    {Flag::HasPSCMetric, "HasPSCMetric"},
    {Flag::HasNonnegScalarMetric, "HasNonnegScalarMetric"},
    {Flag::HasASDPSCMetric, "HasASDPSCMetric"},
    {Flag::C1Mod4Zero, "C1Mod4Zero"},
};

}  // namespace

const char* flag_name(Flag f) {
    for (const auto& e : kFlagNames)
        if (e.flag == f) return e.name;
    return "?";
}

std::optional<Flag> flag_from_name(const std::string& s) {
    for (const auto& e : kFlagNames)
        if (s == e.name) return e.flag;
    return std::nullopt;
}

const char* parity_name(SwParity p) {
    switch (p) {
        case SwParity::Odd: return "Odd";
        case SwParity::Even: return "Even";
        default: return "Unknown";
    }
}

SwParity parity_from_name(const std::string& s) {
    if (s == "Odd") return SwParity::Odd;
    if (s == "Even") return SwParity::Even;
    if (s == "Unknown") return SwParity::Unknown;
    throw std::invalid_argument("unknown SW parity '" + s + "'");
}

const char* provenance_name(ParityProvenance p) {
    switch (p) {
        case ParityProvenance::TaubesSymplectic: return "TaubesSymplectic";
        case ParityProvenance::Derived: return "Derived";
        default: return "UserAsserted";
    }
}

ParityProvenance provenance_from_name(const std::string& s) {
    if (s == "TaubesSymplectic") return ParityProvenance::TaubesSymplectic;
    if (s == "Derived") return ParityProvenance::Derived;
    if (s == "UserAsserted") return ParityProvenance::UserAsserted;
    throw std::invalid_argument("unknown parity provenance '" + s + "'");
}

std::vector<std::string> validate(const Manifold& m) {
    std::vector<std::string> v;
    const CharData& c = m.chr;
    auto chi = c.euler();
    auto tau = c.signature();

    if (c.b1 < 0 || c.b_plus < 0 || c.b_minus < 0) v.push_back("Betti numbers must be nonnegative");
    if (c.is_simply_connected && c.b1 != 0) v.push_back("simply connected manifold must have b1 = 0");
    if (c.is_spin && tau % 16 != 0)
        v.push_back("signature inconsistent with stored char data: spin requires tau = 0 mod 16 (Rochlin)");

    if (m.lattice) {
        const auto& L = *m.lattice;
        // With the full form in hand, Wu's formula ties spin to evenness.
        bool full = static_cast<std::int64_t>(L.rank()) == c.b_plus + c.b_minus;
        bool even = true;
        for (std::size_t i = 0; i < L.gram.size() && i < L.gram[i].size(); ++i) even = even && L.gram[i][i] % 2 == 0;
        if (full && c.is_simply_connected && even != c.is_spin)
            v.push_back(std::string("simply connected with ") + (even ? "even" : "odd") + " form must be " +
                        (even ? "spin" : "non-spin") + " (Wu)");
        bool square = L.gram.size() == L.rank();
        for (const auto& row : L.gram) square = square && row.size() == L.rank();
        if (!square) {
            v.push_back("lattice gram matrix is not square over its basis");
        } else {
            bool sym = true;
            for (std::size_t i = 0; i < L.rank(); ++i)
                for (std::size_t j = 0; j < i; ++j) sym = sym && L.gram[i][j] == L.gram[j][i];
            if (!sym) v.push_back("lattice gram matrix is not symmetric");
            else {
                auto in = inertia(L.gram);
                if (in.positive > c.b_plus) v.push_back("lattice has more positive directions than b_plus");
                if (in.negative > c.b_minus) v.push_back("lattice has more negative directions than b_minus");
            }
        }
    }

    for (std::size_t k = 0; k < m.spinc.size(); ++k) {
        const auto& s = m.spinc[k];
        std::string tag = "spin-c structure " + std::to_string(k) + ": ";
        if (m.lattice) {
            if (s.c1.size() != m.lattice->rank()) v.push_back(tag + "c1 length does not match lattice rank");
            else if (m.lattice->gram.size() == m.lattice->rank() && m.lattice->square(s.c1) != s.c1_squared)
                v.push_back(tag + "cached c1_squared differs from c1^T gram c1");
        } else if (!s.c1.empty()) {
            v.push_back(tag + "c1 coordinates given without a lattice");
        }
        if ((s.c1_squared - tau) % 8 != 0) v.push_back(tag + "c1 is not characteristic (c1^2 - tau not divisible by 8)");
        if (s.s_matrix) {
            const auto& S = *s.s_matrix;
            bool shape = static_cast<std::int64_t>(S.size()) == c.b1;
            for (const auto& row : S) shape = shape && static_cast<std::int64_t>(row.size()) == c.b1;
            if (!shape) v.push_back(tag + "s_matrix is not b1 x b1");
            else {
                bool anti = true;
                for (std::size_t i = 0; i < S.size(); ++i)
                    for (std::size_t j = 0; j < S.size(); ++j) anti = anti && S[i][j] == -S[j][i];
                if (!anti) v.push_back(tag + "s_matrix is not antisymmetric");
            }
        }
        if (s.almost_complex && s.c1_squared != 2 * chi + 3 * tau)
            v.push_back(tag + "almost-canonical-class identity c1^2 = 2chi + 3tau fails");
    }

    if (m.has(Flag::MinimalKaehler) && !m.has(Flag::Symplectic)) v.push_back("MinimalKaehler without Symplectic");
    if (m.has(Flag::Symplectic) && !m.has(Flag::AlmostComplex)) v.push_back("Symplectic without AlmostComplex");
    if (m.has(Flag::AlmostComplex) && (1 - c.b1 + c.b_plus) % 2 != 0)
        v.push_back("AlmostComplex requires b_plus - b1 odd (chi + tau = 0 mod 4)");
    if (m.has(Flag::HasASDPSCMetric) && !m.has(Flag::HasPSCMetric)) v.push_back("HasASDPSCMetric without HasPSCMetric");
    if (m.has(Flag::HasASDPSCMetric) && c.b_plus != 0) v.push_back("anti-self-dual positive scalar curvature forces b_plus = 0");
    if (m.has(Flag::HasPSCMetric) && !m.has(Flag::HasNonnegScalarMetric))
        v.push_back("HasPSCMetric without HasNonnegScalarMetric");
    if (m.has(Flag::HasPSCMetric) && c.b_plus >= 2) {
        for (const auto& s : m.spinc)
            if (s.sw_parity == SwParity::Odd) {
                v.push_back("HasPSCMetric contradicts a monopole class certified by odd SW parity");
                break;
            }
    }

    if (m.sv_factors)
        for (const auto& t : *m.sv_factors)
            if (t.k < 0 || t.g < 1 || t.h < 1) v.push_back("sv_factors need k >= 0 and g, h >= 1");
    return v;
}

}  // namespace fourfold

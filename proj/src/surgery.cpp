#include "fourfold/surgery.hpp"

#include "fourfold/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fourfold {

namespace {

std::vector<std::shared_ptr<const Manifold>> flatten(const std::vector<Manifold>& parts) {
    std::vector<std::shared_ptr<const Manifold>> atoms;
    for (const auto& p : parts) {
        auto a = p.atoms();
        atoms.insert(atoms.end(), a.begin(), a.end());
    }
    std::stable_sort(atoms.begin(), atoms.end(),
                     [](const auto& x, const auto& y) { return x->name < y->name; });
    return atoms;
}

const SpinCStructure* base_structure(const Manifold& m) {
    if (const auto* c = m.canonical()) return c;
    return m.spinc.empty() ? nullptr : &m.spinc.front();
}

// X # k CP2bar with X almost complex: the blow-up keeps an almost complex
// (and symplectic) structure whose canonical class is c1(X) + sum E_r.
bool is_blowup(const std::vector<std::shared_ptr<const Manifold>>& atoms) {
    int others = 0;
    const Manifold* x = nullptr;
    for (const auto& a : atoms) {
        if (a->name == "CP2bar") continue;
        ++others;
        x = a.get();
    }
    return others == 1 && atoms.size() > 1 && x->has(Flag::AlmostComplex) && x->canonical() != nullptr;
}

IntMatrix block_sum(const std::vector<IntMatrix>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size();
    IntMatrix out(n, IntVector(n, 0));
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[off + i][off + j] = b[i][j];
        off += b.size();
    }
    return out;
}

SpinCStructure signed_sum(const std::vector<std::shared_ptr<const Manifold>>& atoms, bool with_lattice,
                          std::uint64_t signs) {
    SpinCStructure out;
    bool all_odd = true, any_unknown = false, all_s = true;
    std::vector<IntMatrix> blocks;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const SpinCStructure* g = base_structure(*atoms[i]);
        std::int64_t e = (signs >> i) & 1 ? -1 : 1;
        if (with_lattice)
            for (auto c : g->c1) out.c1.push_back(e * c);
        out.c1_squared += g->c1_squared;
        if (g->s_matrix) {
            IntMatrix S = *g->s_matrix;
            for (auto& row : S)
                for (auto& x : row) x *= e;
            blocks.push_back(std::move(S));
        } else {
            all_s = false;
        }
        all_odd = all_odd && g->sw_parity == SwParity::Odd;
        any_unknown = any_unknown || g->sw_parity == SwParity::Unknown;
    }
    if (all_s) out.s_matrix = block_sum(blocks);
    // The ordinary invariant of a sum of two b+ > 0 pieces vanishes; the
    // nonvanishing certificates work with the parts instead.
    auto positive = std::count_if(atoms.begin(), atoms.end(), [](const auto& a) { return a->chr.b_plus > 0; });
    if (positive >= 2) out.sw_parity = SwParity::Even;
    else out.sw_parity = all_odd ? SwParity::Odd : any_unknown ? SwParity::Unknown : SwParity::Even;
    out.provenance = ParityProvenance::Derived;
    return out;
}

std::vector<SvTerm> merge_sv(const std::vector<SvTerm>& terms) {
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> k;
    for (const auto& t : terms)
        if (t.k > 0) k[{t.g, t.h}] += t.k;
    std::vector<SvTerm> out;
    for (const auto& [gh, n] : k) out.push_back({n, gh.first, gh.second});
    if (out.empty()) out.push_back({0, 1, 1});
    return out;
}

}  // namespace

Manifold connected_sum(const std::vector<Manifold>& parts) {
    if (parts.empty()) throw std::invalid_argument("connected sum of an empty list");
    if (parts.size() == 1) return parts.front();
    auto atoms = flatten(parts);

    Manifold m;
    m.chr.is_spin = true;
    m.chr.is_simply_connected = true;
    for (const auto& a : atoms) {
        m.chr.b1 += a->chr.b1;
        m.chr.b_plus += a->chr.b_plus;
        m.chr.b_minus += a->chr.b_minus;
        m.chr.is_spin = m.chr.is_spin && a->chr.is_spin;
        m.chr.is_simply_connected = m.chr.is_simply_connected && a->chr.is_simply_connected;
    }

    for (std::size_t i = 0; i < atoms.size();) {
        std::size_t j = i;
        while (j < atoms.size() && atoms[j]->name == atoms[i]->name) ++j;
        m.summands.push_back({atoms[i]->name, static_cast<std::int64_t>(j - i), atoms[i]});
        i = j;
    }
    for (const auto& s : m.summands) {
        if (!m.name.empty()) m.name += " # ";
        m.name += (s.multiplicity > 1 ? std::to_string(s.multiplicity) + "*" : "") + s.id;
    }

    bool with_lattice = std::all_of(atoms.begin(), atoms.end(), [](const auto& a) { return a->lattice.has_value(); });
    if (with_lattice) {
        GramLattice L;
        std::vector<IntMatrix> blocks;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            for (const auto& l : atoms[i]->lattice->basis_labels)
                L.basis_labels.push_back("X" + std::to_string(i + 1) + "." + l);
            blocks.push_back(atoms[i]->lattice->gram);
        }
        L.gram = block_sum(blocks);
        m.lattice = L;
    }

    bool blowup = is_blowup(atoms);
    bool have_spinc = std::all_of(atoms.begin(), atoms.end(), [](const auto& a) { return base_structure(*a) != nullptr; });
    if (have_spinc) {
        SpinCStructure g = signed_sum(atoms, with_lattice, 0);
        if (blowup) {
            g.sw_parity = SwParity::Odd;
            g.provenance = ParityProvenance::TaubesSymplectic;
            g.almost_complex = true;
            // Only symplectic blow-ups inherit Taubes' parity.
            for (const auto& a : atoms)
                if (a->name != "CP2bar" && !a->has(Flag::Symplectic)) {
                    g.sw_parity = SwParity::Unknown;
                    g.provenance = ParityProvenance::Derived;
                }
        }
        m.spinc.push_back(g);
    }

    auto all = [&](Flag f) { return std::all_of(atoms.begin(), atoms.end(), [f](const auto& a) { return a->has(f); }); };
    if (blowup) {
        for (const auto& a : atoms)
            if (a->name != "CP2bar") {
                m.flags.insert(Flag::AlmostComplex);
                if (a->has(Flag::Symplectic)) m.flags.insert(Flag::Symplectic);
            }
    }
    if (all(Flag::HasPSCMetric)) m.flags.insert({Flag::HasPSCMetric, Flag::HasNonnegScalarMetric});
    if (all(Flag::HasASDPSCMetric)) m.flags.insert(Flag::HasASDPSCMetric);
    if (all(Flag::C1Mod4Zero)) m.flags.insert(Flag::C1Mod4Zero);

    bool sv_known = std::all_of(atoms.begin(), atoms.end(), [](const auto& a) { return a->sv_factors.has_value(); });
    if (sv_known) {
        std::vector<SvTerm> terms;
        for (const auto& a : atoms) terms.insert(terms.end(), a->sv_factors->begin(), a->sv_factors->end());
        m.sv_factors = merge_sv(terms);
    }
    return m;
}

Manifold blow_up(const Manifold& m, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("blow-up count must be nonnegative");
    if (k == 0) return m;
    std::vector<Manifold> parts{m};
    for (std::int64_t i = 0; i < k; ++i) parts.push_back(cp2bar());
    return connected_sum(parts);
}

SignChoices::SignChoices(const Manifold& m) : atoms_(m.atoms()) {
    if (!m.spinc.empty()) base_ = m.spinc.front();
    with_lattice_ = true;
    for (const auto& a : atoms_) {
        if (!base_structure(*a)) throw std::invalid_argument("an atom has no spin-c structure");
        with_lattice_ = with_lattice_ && a->lattice.has_value();
    }
}

std::uint64_t SignChoices::count() const {
    if (atoms_.size() >= 63) throw std::overflow_error("too many summands to enumerate sign choices");
    return std::uint64_t{1} << atoms_.size();
}

SpinCStructure SignChoices::at(std::uint64_t signs) const {
    if (signs >= count()) throw std::out_of_range("sign choice index out of range");
    if (atoms_.size() == 1) {
        SpinCStructure g = *base_structure(*atoms_.front());
        if (signs & 1) {
            for (auto& c : g.c1) c = -c;
            if (g.s_matrix)
                for (auto& row : *g.s_matrix)
                    for (auto& x : row) x = -x;
        }
        return g;
    }
    SpinCStructure g = signed_sum(atoms_, with_lattice_, signs);
    if (base_) {
        g.sw_parity = base_->sw_parity;
        g.provenance = base_->provenance;
        bool conj = signs == 0 || signs == count() - 1;
        g.almost_complex = base_->almost_complex && conj;
    }
    return g;
}

Manifold sphere() {
    Manifold m;
    m.name = "S4";
    m.chr = {0, 0, 0, true, true};
    m.lattice = GramLattice{};
    SpinCStructure g;
    g.s_matrix = IntMatrix{};
    g.provenance = ParityProvenance::Derived;
    m.spinc.push_back(g);
    m.flags = {Flag::HasPSCMetric, Flag::HasNonnegScalarMetric, Flag::HasASDPSCMetric};
    m.sv_factors = std::vector<SvTerm>{{0, 1, 1}};
    return m;
}

Decomposition decompose(const Manifold& m) {
    Decomposition d;
    std::vector<Manifold> rest;
    for (const auto& a : m.atoms()) {
        if (a->chr.b_plus > 0) d.parts.push_back(*a);
        else rest.push_back(*a);
    }
    d.complement = rest.empty() ? sphere() : connected_sum(rest);
    return d;
}

}  // namespace fourfold

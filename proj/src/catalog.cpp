#include "fourfold/catalog.hpp"

#include <regex>
#include <stdexcept>

namespace fourfold {

namespace {

IntMatrix zeros(std::int64_t n) { return IntMatrix(n, IntVector(n, 0)); }

GramLattice hyperbolic(const std::string& a, const std::string& b) {
    return {{a, b}, {{0, 1}, {1, 0}}};
}

void append_block(GramLattice& L, const GramLattice& B) {
    std::size_t off = L.rank();
    for (auto& row : L.gram) row.resize(off + B.rank(), 0);
    for (std::size_t i = 0; i < B.rank(); ++i) {
        IntVector row(off + B.rank(), 0);
        for (std::size_t j = 0; j < B.rank(); ++j) row[off + j] = B.gram[i][j];
        L.gram.push_back(row);
        L.basis_labels.push_back(B.basis_labels[i]);
    }
}

GramLattice negative_e8(const std::string& prefix) {
    GramLattice L;
    L.gram = zeros(8);
    for (int i = 0; i < 8; ++i) {
        L.basis_labels.push_back(prefix + std::to_string(i + 1));
        L.gram[i][i] = -2;
    }
    // Chain 0..6 with node 7 hanging off node 4.
    const int edges[][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 7}};
    for (const auto& e : edges) L.gram[e[0]][e[1]] = L.gram[e[1]][e[0]] = 1;
    return L;
}

GramLattice hyperbolic_sum(int copies, const std::string& prefix) {
    GramLattice L;
    for (int i = 1; i <= copies; ++i) {
        auto n = std::to_string(i);
        append_block(L, hyperbolic(prefix + n + "a", prefix + n + "b"));
    }
    return L;
}

// Symplectic form on H^1 of a genus g surface in the basis a_1..a_g, b_1..b_g.
IntMatrix surface_cup_form(std::int64_t g) {
    IntMatrix J = zeros(2 * g);
    for (std::int64_t i = 0; i < g; ++i) {
        J[i][g + i] = 1;
        J[g + i][i] = -1;
    }
    return J;
}

SpinCStructure canonical_structure(IntVector c1, std::int64_t c1_squared, IntMatrix s) {
    SpinCStructure g;
    g.c1 = std::move(c1);
    g.c1_squared = c1_squared;
    g.s_matrix = std::move(s);
    g.sw_parity = SwParity::Odd;
    g.provenance = ParityProvenance::TaubesSymplectic;
    g.almost_complex = true;
    return g;
}

const std::set<Flag> kKaehler = {Flag::AlmostComplex, Flag::Symplectic, Flag::MinimalKaehler};

}  // namespace

int family_arity(const std::string& name) {
    if (name == "Sigma" || name == "Gompf") return 2;
    if (name == "Y") return 1;
    return -1;
}

std::string family_parameter_error(const std::string& name, const std::vector<std::int64_t>& p) {
    int arity = family_arity(name);
    if (arity < 0) return "unknown family '" + name + "'";
    if (static_cast<int>(p.size()) != arity)
        return name + " takes " + std::to_string(arity) + " parameter" + (arity == 1 ? "" : "s");
    if (name == "Sigma") {
        if (p[0] < 1 || p[1] < 1) return "Sigma(g,h) needs g, h >= 1";
        // S is stored densely on H^1, which has rank 2g + 2h.
        if (p[0] > kMaxGenus || p[1] > kMaxGenus) return "Sigma(g,h) needs g, h <= " + std::to_string(kMaxGenus);
    } else if (name == "Y") {
        if (p[0] < 0) return "Y(l) needs l >= 0";
        if (p[0] > kMaxFamilyParameter) return "Y(l) needs l <= " + std::to_string(kMaxFamilyParameter);
    } else {
        if (p[0] < 2) return "Gompf(a,b) needs a >= 2";
        if (p[1] < 0) return "Gompf(a,b) needs b >= 0";
        if (p[0] > kMaxFamilyParameter || p[1] > kMaxFamilyParameter)
            return "Gompf(a,b) needs a, b <= " + std::to_string(kMaxFamilyParameter);
    }
    return {};
}

Manifold cp2() {
    Manifold m;
    m.name = "CP2";
    m.chr = {0, 1, 0, false, true};
    m.lattice = GramLattice{{"H"}, {{1}}};
    m.spinc.push_back(canonical_structure({3}, 9, {}));
    m.flags = kKaehler;
    m.flags.insert({Flag::HasPSCMetric, Flag::HasNonnegScalarMetric});
    m.sv_factors = std::vector<SvTerm>{{0, 1, 1}};
    return m;
}

Manifold cp2bar() {
    Manifold m;
    m.name = "CP2bar";
    m.chr = {0, 0, 1, false, true};
    m.lattice = GramLattice{{"E"}, {{-1}}};
    SpinCStructure g;
    g.c1 = {1};
    g.c1_squared = -1;
    g.s_matrix = IntMatrix{};
    g.sw_parity = SwParity::Unknown;
    g.provenance = ParityProvenance::Derived;
    m.spinc.push_back(g);
    m.flags = {Flag::HasPSCMetric, Flag::HasNonnegScalarMetric, Flag::HasASDPSCMetric};
    m.sv_factors = std::vector<SvTerm>{{0, 1, 1}};
    return m;
}

Manifold s1xs3() {
    Manifold m;
    m.name = "S1xS3";
    m.chr = {1, 0, 0, true, false};
    m.lattice = GramLattice{};
    SpinCStructure g;
    g.s_matrix = zeros(1);
    g.sw_parity = SwParity::Unknown;
    g.provenance = ParityProvenance::Derived;
    m.spinc.push_back(g);
    m.flags = {Flag::HasPSCMetric, Flag::HasNonnegScalarMetric, Flag::HasASDPSCMetric};
    m.sv_factors = std::vector<SvTerm>{{0, 1, 1}};
    return m;
}

Manifold t4() {
    Manifold m;
    m.name = "T4";
    m.chr = {4, 3, 3, true, false};
    m.lattice = hyperbolic_sum(3, "U");
    m.spinc.push_back(canonical_structure(IntVector(6, 0), 0, zeros(4)));
    m.flags = kKaehler;
    m.flags.insert({Flag::HasNonnegScalarMetric, Flag::C1Mod4Zero});
    m.sv_factors = std::vector<SvTerm>{{0, 1, 1}};
    return m;
}

Manifold k3() {
    Manifold m;
    m.name = "K3";
    m.chr = {0, 3, 19, true, true};
    GramLattice L = hyperbolic_sum(3, "U");
    append_block(L, negative_e8("E8a."));
    append_block(L, negative_e8("E8b."));
    m.lattice = L;
    m.spinc.push_back(canonical_structure(IntVector(22, 0), 0, {}));
    m.flags = kKaehler;
    m.flags.insert({Flag::HasNonnegScalarMetric, Flag::C1Mod4Zero});
    m.sv_factors = std::vector<SvTerm>{{0, 1, 1}};
    return m;
}

Manifold kodaira() {
    Manifold m;
    m.name = "Kodaira";
    // chi = 0 and tau = 0 force b_minus = b_plus = 2.
    m.chr = {3, 2, 2, true, false};
    m.lattice = hyperbolic_sum(2, "U");
    m.spinc.push_back(canonical_structure(IntVector(4, 0), 0, zeros(3)));
    m.flags = {Flag::AlmostComplex, Flag::Symplectic, Flag::C1Mod4Zero};
    // Nilmanifold: amenable fundamental group, so the simplicial volume vanishes.
    m.sv_factors = std::vector<SvTerm>{{0, 1, 1}};
    return m;
}

Manifold sigma_product(std::int64_t g, std::int64_t h) {
    if (auto e = family_parameter_error("Sigma", {g, h}); !e.empty()) throw std::invalid_argument(e);
    Manifold m;
    m.name = "Sigma(" + std::to_string(g) + "," + std::to_string(h) + ")";
    std::int64_t b = 1 + 2 * g * h;
    m.chr = {2 * g + 2 * h, b, b, true, false};
    // Only the span of the two fibre classes is stored.
    m.lattice = hyperbolic("alpha", "beta");
    IntVector c1 = {2 * (g - 1), 2 * (h - 1)};
    // S^{ij} = <c1 e_i e_j>/2: (h-1) J_g on H^1(Sigma_g), (g-1) J_h on H^1(Sigma_h).
    IntMatrix S = zeros(2 * g + 2 * h);
    IntMatrix Jg = surface_cup_form(g), Jh = surface_cup_form(h);
    for (std::int64_t i = 0; i < 2 * g; ++i)
        for (std::int64_t j = 0; j < 2 * g; ++j) S[i][j] = (h - 1) * Jg[i][j];
    for (std::int64_t i = 0; i < 2 * h; ++i)
        for (std::int64_t j = 0; j < 2 * h; ++j) S[2 * g + i][2 * g + j] = (g - 1) * Jh[i][j];
    m.spinc.push_back(canonical_structure(c1, 8 * (g - 1) * (h - 1), S));
    m.flags = kKaehler;
    if (g % 2 == 1 && h % 2 == 1) m.flags.insert(Flag::C1Mod4Zero);
    if (g == 1 && h == 1) m.flags.insert(Flag::HasNonnegScalarMetric);
    m.sv_factors = std::vector<SvTerm>{{1, g, h}};
    return m;
}

Manifold log_transform_k3(std::int64_t ell) {
    if (auto e = family_parameter_error("Y", {ell}); !e.empty()) throw std::invalid_argument(e);
    if (ell == 0) return k3();
    Manifold m;
    m.name = "Y(" + std::to_string(ell) + ")";
    m.chr = {0, 3, 19, true, true};
    // f is dual to the multiple fibre, f^2 = 0; f* pairs with it.
    m.lattice = hyperbolic("f", "f*");
    m.spinc.push_back(canonical_structure({2 * ell, 0}, 0, {}));
    m.flags = kKaehler;
    if (ell % 2 == 0) m.flags.insert(Flag::C1Mod4Zero);
    m.sv_factors = std::vector<SvTerm>{{0, 1, 1}};
    return m;
}

Manifold gompf(std::int64_t alpha, std::int64_t beta) {
    if (auto e = family_parameter_error("Gompf", {alpha, beta}); !e.empty()) throw std::invalid_argument(e);
    Manifold m;
    m.name = "Gompf(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
    m.chr = {0, 4 * alpha + 2 * beta - 1, 20 * alpha + 2 * beta - 1, true, true};
    m.spinc.push_back(canonical_structure({}, 8 * beta, {}));
    m.flags = {Flag::AlmostComplex, Flag::Symplectic};
    m.sv_factors = std::vector<SvTerm>{{0, 1, 1}};
    return m;
}

const std::vector<std::string>& catalog_fixed_ids() {
    static const std::vector<std::string> ids = {"CP2", "CP2bar", "S1xS3", "T4", "K3", "Kodaira"};
    return ids;
}

Manifold catalog_get(const std::string& id) {
    if (id == "CP2") return cp2();
    if (id == "CP2bar") return cp2bar();
    if (id == "S1xS3") return s1xs3();
    if (id == "T4") return t4();
    if (id == "K3") return k3();
    if (id == "Kodaira") return kodaira();
    static const std::regex two(R"((Sigma|Gompf)\((-?\d+),(-?\d+)\))");
    static const std::regex one(R"(Y\((-?\d+)\))");
    std::smatch mt;
    try {
        if (std::regex_match(id, mt, two)) {
            std::int64_t a = std::stoll(mt[2]), b = std::stoll(mt[3]);
            return mt[1] == "Sigma" ? sigma_product(a, b) : gompf(a, b);
        }
        if (std::regex_match(id, mt, one)) return log_transform_k3(std::stoll(mt[1]));
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("family parameter out of range in '" + id + "'");
    }
    throw std::invalid_argument("unknown building block '" + id + "'");
}

Manifold Catalog::get(const std::string& id) const {
    auto it = custom_.find(id);
    if (it != custom_.end()) return it->second;
    return catalog_get(id);
}

void Catalog::add(const Manifold& m) {
    auto problems = validate(m);
    if (!problems.empty()) throw std::invalid_argument("custom manifold '" + m.name + "' is invalid: " + problems.front());
    custom_[m.name] = m;
}

std::vector<std::string> Catalog::custom_ids() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : custom_) out.push_back(k);
    return out;
}

}  // namespace fourfold

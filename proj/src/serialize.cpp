#include "fourfold/serialize.hpp"

#include "fourfold/surgery.hpp"

#include <fstream>
#include <stdexcept>

namespace fourfold {

using nlohmann::json;

json to_json(const SymbolicValue& v) {
    switch (v.kind()) {
        case SymbolicValue::Kind::PlusInfinity: return {{"inf", "+"}};
        case SymbolicValue::Kind::MinusInfinity: return {{"inf", "-"}};
        default: break;
    }
    return {{"q", to_string(v.q())}, {"pi_power", v.pi_power()}, {"radicand", v.radicand()}};
}

SymbolicValue symbolic_from_json(const json& j) {
    if (j.contains("inf")) {
        auto s = j.at("inf").get<std::string>();
        if (s == "+") return SymbolicValue::plus_infinity();
        if (s == "-") return SymbolicValue::minus_infinity();
        throw std::invalid_argument("bad infinity sign '" + s + "'");
    }
    return SymbolicValue(parse_rational(j.at("q").get<std::string>()), j.at("pi_power").get<int>(),
                         j.at("radicand").get<std::uint64_t>());
}

json to_json(const SpinCStructure& g) {
    json j = {
        {"c1", g.c1},
        {"c1_squared", g.c1_squared},
        {"s_matrix", g.s_matrix ? json(*g.s_matrix) : json(nullptr)},
        {"sw_parity", parity_name(g.sw_parity)},
        {"provenance", provenance_name(g.provenance)},
        {"almost_complex", g.almost_complex},
    };
    return j;
}

SpinCStructure spinc_from_json(const json& j) {
    SpinCStructure g;
    if (j.contains("c1")) g.c1 = j.at("c1").get<IntVector>();
    g.c1_squared = j.at("c1_squared").get<std::int64_t>();
    if (j.contains("s_matrix") && !j.at("s_matrix").is_null()) g.s_matrix = j.at("s_matrix").get<IntMatrix>();
    g.sw_parity = parity_from_name(j.value("sw_parity", "Unknown"));
    g.provenance = provenance_from_name(j.value("provenance", "UserAsserted"));
    g.almost_complex = j.value("almost_complex", false);
    return g;
}

json to_json(const Manifold& m) {
    json flags = json::array();
    for (auto f : m.flags) flags.push_back(flag_name(f));
    json spinc = json::array();
    for (const auto& g : m.spinc) spinc.push_back(to_json(g));
    json sv = nullptr;
    if (m.sv_factors) {
        sv = json::array();
        for (const auto& t : *m.sv_factors) sv.push_back({{"k", t.k}, {"g", t.g}, {"h", t.h}});
    }
    json record = json::array();
    for (const auto& [id, mult] : m.summand_record()) record.push_back({id, mult});
    return {
        {"schema", kManifoldSchema},
        {"name", m.name},
        {"b1", m.chr.b1},
        {"b_plus", m.chr.b_plus},
        {"b_minus", m.chr.b_minus},
        {"is_spin", m.chr.is_spin},
        {"is_simply_connected", m.chr.is_simply_connected},
        {"euler", m.euler()},
        {"signature", m.signature()},
        {"flags", flags},
        {"lattice", m.lattice ? json{{"basis", m.lattice->basis_labels}, {"gram", m.lattice->gram}} : json(nullptr)},
        {"spinc", spinc},
        {"sv_factors", sv},
        {"summand_record", record},
    };
}

Manifold manifold_from_json(const json& j, const Catalog& catalog) {
    if (j.contains("schema") && j.at("schema") != kManifoldSchema)
        throw std::invalid_argument("unsupported manifold schema " + j.at("schema").dump());
    Manifold m;
    m.name = j.at("name").get<std::string>();
    m.chr.b1 = j.at("b1").get<std::int64_t>();
    m.chr.b_plus = j.at("b_plus").get<std::int64_t>();
    m.chr.b_minus = j.at("b_minus").get<std::int64_t>();
    m.chr.is_spin = j.at("is_spin").get<bool>();
    m.chr.is_simply_connected = j.value("is_simply_connected", false);
    for (const auto& f : j.value("flags", json::array())) {
        auto flag = flag_from_name(f.get<std::string>());
        if (!flag) throw std::invalid_argument("unknown flag " + f.dump());
        m.flags.insert(*flag);
    }
    if (j.contains("lattice") && !j.at("lattice").is_null()) {
        GramLattice L;
        L.basis_labels = j.at("lattice").at("basis").get<std::vector<std::string>>();
        L.gram = j.at("lattice").at("gram").get<IntMatrix>();
        m.lattice = L;
    }
    for (const auto& g : j.value("spinc", json::array())) m.spinc.push_back(spinc_from_json(g));
    if (j.contains("sv_factors") && !j.at("sv_factors").is_null()) {
        std::vector<SvTerm> terms;
        for (const auto& t : j.at("sv_factors")) terms.push_back({t.at("k"), t.at("g"), t.at("h")});
        m.sv_factors = terms;
    }
    // Stored derived values must agree with the Betti numbers.
    if (j.contains("euler") && j.at("euler").get<std::int64_t>() != m.euler())
        throw std::invalid_argument("stored euler characteristic disagrees with Betti numbers");
    if (j.contains("signature") && j.at("signature").get<std::int64_t>() != m.signature())
        throw std::invalid_argument("stored signature disagrees with Betti numbers");

    if (j.contains("summand_record")) {
        std::vector<Manifold> parts;
        bool self = false;
        for (const auto& e : j.at("summand_record")) {
            auto id = e.at(0).get<std::string>();
            auto mult = e.at(1).get<std::int64_t>();
            if (id == m.name && mult == 1) {
                self = true;
                break;
            }
            for (std::int64_t i = 0; i < mult; ++i) parts.push_back(catalog.get(id));
        }
        if (!self && !parts.empty()) {
            Manifold rebuilt = connected_sum(parts);
            if (!(rebuilt.chr == m.chr))
                throw std::invalid_argument("summand record of '" + m.name + "' does not reproduce its characteristic data");
            rebuilt.name = m.name;
            return rebuilt;
        }
    }
    return m;
}

void load_catalog_file(const std::string& path, Catalog& catalog) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open catalog file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("catalog file " + path + ": " + e.what());
    }
    if (j.contains("manifolds")) {
        for (const auto& e : j.at("manifolds")) catalog.add(manifold_from_json(e, catalog));
    } else {
        catalog.add(manifold_from_json(j, catalog));
    }
}

}  // namespace fourfold

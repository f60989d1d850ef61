#include "fourfold/catalog.hpp"
#include "fourfold/serialize.hpp"
#include "fourfold/surgery.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace fourfold;
using nlohmann::json;

TEST_SUITE("serialize") {

TEST_CASE("symbolic values round trip") {
    for (const auto& v : {SymbolicValue(Rational(-64, 3), 1, 2), SymbolicValue(2048, 2), SymbolicValue(0),
                          SymbolicValue::plus_infinity(), SymbolicValue::minus_infinity()})
        CHECK(symbolic_from_json(to_json(v)) == v);
}

TEST_CASE("manifolds round trip") {
    for (const Manifold& m : {k3(), cp2bar(), sigma_product(3, 5), kodaira(), gompf(2, 3), log_transform_k3(2)}) {
        CAPTURE(m.name);
        json j = to_json(m);
        CHECK(j["schema"] == kManifoldSchema);
        Manifold back = manifold_from_json(j);
        CHECK(back.name == m.name);
        CHECK(back.chr == m.chr);
        CHECK(back.lattice == m.lattice);
        CHECK(back.spinc == m.spinc);
        CHECK(back.flags == m.flags);
        CHECK(back.sv_factors == m.sv_factors);
        CHECK(to_json(back) == j);
    }
}

TEST_CASE("sums are rebuilt from their summand record") {
    Manifold m = connected_sum({sigma_product(3, 3), sigma_product(3, 3), cp2bar()});
    json j = to_json(m);
    Manifold back = manifold_from_json(j);
    CHECK(back.name == m.name);
    CHECK(back.summands.size() == 2);
    CHECK(back.spinc == m.spinc);
    CHECK(to_json(back) == j);
}

TEST_CASE("inconsistent documents are rejected") {
    json j = to_json(k3());
    j["euler"] = 23;
    CHECK_THROWS_AS(manifold_from_json(j), std::invalid_argument);
    json s = to_json(k3());
    s["schema"] = "fourfold.manifold/99";
    CHECK_THROWS_AS(manifold_from_json(s), std::invalid_argument);
    json f = to_json(k3());
    f["flags"].push_back("Hyperbolic");
    CHECK_THROWS_AS(manifold_from_json(f), std::invalid_argument);
    json r = to_json(connected_sum({k3(), k3()}));
    r["b_minus"] = 37;
    r.erase("euler");
    r.erase("signature");
    CHECK_THROWS_AS(manifold_from_json(r), std::invalid_argument);
}

TEST_CASE("catalog files") {
    Catalog cat;
    load_catalog_file(std::string(FOURFOLD_TEST_DATA) + "/custom_catalog.json", cat);
    CHECK(cat.custom_ids() == std::vector<std::string>{"DoubleK3", "Enriques"});
    Manifold e = cat.get("Enriques");
    CHECK(e.euler() == 12);
    CHECK(e.signature() == -8);
    CHECK(cat.get("DoubleK3").summands.size() == 1);
    CHECK(cat.get("K3").name == "K3");
    CHECK_THROWS_AS(load_catalog_file("/nonexistent/catalog.json", cat), std::invalid_argument);

    std::string path = (std::filesystem::temp_directory_path() / "fourfold_bad_catalog.json").string();
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(load_catalog_file(path, cat), std::invalid_argument);
    std::remove(path.c_str());
}

}  // TEST_SUITE

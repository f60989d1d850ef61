#include "fourfold/certificate.hpp"

namespace fourfold {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Nonvanishing: return "Nonvanishing";
        case Verdict::Vanishing: return "Vanishing";
        case Verdict::Obstructed: return "Obstructed";
        case Verdict::NotObstructed: return "NotObstructed";
        default: return "Inconclusive";
    }
}

Certificate& Certificate::add(std::string text, bool pass, std::string witness) {
    premises.push_back({std::move(text), pass, std::move(witness)});
    return *this;
}

bool Certificate::all_pass() const {
    for (const auto& p : premises)
        if (!p.pass) return false;
    return true;
}

Certificate& Certificate::conclude(Verdict on_pass, Verdict on_fail) {
    verdict = all_pass() ? on_pass : on_fail;
    return *this;
}

const Premise* Certificate::first_failure() const {
    for (const auto& p : premises)
        if (!p.pass) return &p;
    return nullptr;
}

nlohmann::json to_json(const Certificate& c) {
    nlohmann::json premises = nlohmann::json::array();
    for (const auto& p : c.premises) premises.push_back({{"text", p.text}, {"pass", p.pass}, {"witness", p.witness}});
    nlohmann::json j = {
        {"theorem_id", c.theorem_id},
        {"premises", premises},
        {"verdict", verdict_name(c.verdict)},
        {"citation", c.citation},
    };
    j["details"] = c.details.is_null() ? nlohmann::json::object() : c.details;
    return j;
}

}  // namespace fourfold

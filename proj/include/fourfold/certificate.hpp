#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace fourfold {

enum class Verdict { Nonvanishing, Vanishing, Inconclusive, Obstructed, NotObstructed };

const char* verdict_name(Verdict v);

struct Premise {
    std::string text;
    bool pass = false;
    std::string witness;
};

struct Certificate {
    std::string theorem_id;
    std::vector<Premise> premises;
    Verdict verdict = Verdict::Inconclusive;
    std::string citation;
    // Extra computed facts (dimensions, interval ends, flags) for reports.
    nlohmann::json details = nlohmann::json::object();

    Certificate& add(std::string text, bool pass, std::string witness = {});
    bool all_pass() const;
    // verdict = on_pass if every premise passes, otherwise on_fail.
    Certificate& conclude(Verdict on_pass, Verdict on_fail = Verdict::Inconclusive);
    const Premise* first_failure() const;
};

nlohmann::json to_json(const Certificate& c);

}  // namespace fourfold

#ifndef SPINDEX_REPORT_HPP
#define SPINDEX_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace spindex {

enum class CheckStatus { Pass, Fail, Skip };

inline std::string status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "skip";
    }
}

inline CheckStatus status_from_str(const std::string& s) {
    if (s == "pass") return CheckStatus::Pass;
    if (s == "fail") return CheckStatus::Fail;
    if (s == "skip") return CheckStatus::Skip;
    throw std::invalid_argument("unknown check status '" + s + "'");
}

// One verified fact: name, the section tag it traces to, outcome, and a
// witness payload (failure details or a sample value).
struct CheckRecord {
    std::string name;
    std::string anchor;
    CheckStatus status = CheckStatus::Pass;
    std::string witness;
};

struct Report {
    std::string suite;
    unsigned long seed = 0;
    long samples = 0;
    std::vector<CheckRecord> checks;

    long count(CheckStatus s) const {
        long n = 0;
        for (const auto& c : checks)
            if (c.status == s) ++n;
        return n;
    }
    bool all_pass() const { return count(CheckStatus::Fail) == 0; }

    void add(std::string name, std::string anchor, bool pass, std::string witness = "") {
        checks.push_back({std::move(name), std::move(anchor),
                          pass ? CheckStatus::Pass : CheckStatus::Fail, std::move(witness)});
    }
    void skip(std::string name, std::string anchor, std::string reason) {
        checks.push_back({std::move(name), std::move(anchor), CheckStatus::Skip, std::move(reason)});
    }
    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["version"] = 1;
        j["suite"] = suite;
        j["seed"] = seed;
        j["samples"] = samples;
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : checks) {
            nlohmann::ordered_json jc;
            jc["name"] = c.name;
            jc["anchor"] = c.anchor;
            jc["status"] = status_str(c.status);
            jc["witness"] = c.witness;
            j["checks"].push_back(jc);
        }
        j["summary"] = {{"pass", count(CheckStatus::Pass)},
                        {"fail", count(CheckStatus::Fail)},
                        {"skip", count(CheckStatus::Skip)}};
        return j;
    }

    std::string serialize() const { return to_json().dump(2) + "\n"; }

    static Report from_json(const nlohmann::ordered_json& j) {
        Report r;
        r.suite = j.at("suite").get<std::string>();
        r.seed = j.at("seed").get<unsigned long>();
        r.samples = j.at("samples").get<long>();
        for (const auto& jc : j.at("checks")) {
            CheckRecord c;
            c.name = jc.at("name").get<std::string>();
            c.anchor = jc.at("anchor").get<std::string>();
            c.status = status_from_str(jc.at("status").get<std::string>());
            c.witness = jc.at("witness").get<std::string>();
            r.checks.push_back(std::move(c));
        }
        return r;
    }

    static Report parse(const std::string& text) {
        return from_json(nlohmann::ordered_json::parse(text));
    }
};

} // namespace spindex

#endif

// Machine-readable verification reports.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include <twistlab/estimate.hpp>

namespace twistlab {

struct ReportEntry {
    std::string name;
    double value = 0.0;
    bool pass = false;
    std::map<std::string, std::vector<complex>> witness;
};

// One verification suite run. The serialized form contains only inputs and
// results, so identical (config, suite, seed, trials) produce byte-identical
// files; timing is reported on stdout instead.
struct Report {
    std::string suite;
    nlohmann::json couple_echo;
    std::uint64_t seed = 0;
    long trials = 0;
    std::vector<ReportEntry> entries;

    bool overall_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }

    void add(const std::string& name, double value, bool pass) {
        entries.push_back({name, value, pass, {}});
    }

    void add(const ConstantEstimate& est, bool pass) {
        entries.push_back({est.name, est.value, pass, est.witness});
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["suite"] = suite;
        j["couple"] = couple_echo;
        j["seed"] = seed;
        j["trials"] = trials;
        j["entries"] = nlohmann::json::array();
        for (const auto& e : entries) {
            nlohmann::json w = nlohmann::json::object();
            for (const auto& [name, payload] : e.witness) {
                nlohmann::json arr = nlohmann::json::array();
                for (const complex& c : payload)
                    arr.push_back({c.real(), c.imag()});
                w[name] = arr;
            }
            j["entries"].push_back({{"name", e.name},
                                    {"value", e.value},
                                    {"pass", e.pass},
                                    {"witness", w}});
        }
        j["overall_pass"] = overall_pass();
        return j;
    }
};

} // namespace twistlab

#ifndef POTTSKIT_REPORT_HPP
#define POTTSKIT_REPORT_HPP

// Machine-readable verification reports. A suite runs a list of instances;
// an instance passes when its residual is at most the tolerance, and exact
// suites demand a residual of literal zero.

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pottskit {

struct InstanceResult {
    std::string descriptor;
    double residual = 0;
    bool exact = false; // exact arithmetic: pass requires residual == 0
    bool pass = false;

    bool operator==(const InstanceResult&) const = default;
};

struct VerificationReport {
    std::string suite;
    uint64_t seed = 0;
    double tolerance = 0;
    double elapsed_seconds = 0;
    int rejected_samples = 0;
    std::vector<InstanceResult> instances;

    bool operator==(const VerificationReport&) const = default;

    bool passed() const {
        for (const InstanceResult& r : instances)
            if (!r.pass) return false;
        return true;
    }
    double max_residual() const {
        double m = 0;
        for (const InstanceResult& r : instances) m = std::max(m, r.residual);
        return m;
    }
    const InstanceResult* first_failure() const {
        for (const InstanceResult& r : instances)
            if (!r.pass) return &r;
        return nullptr;
    }

    void add(std::string descriptor, double residual, double tol, bool exact = false) {
        InstanceResult r;
        r.descriptor = std::move(descriptor);
        r.residual = residual;
        r.exact = exact;
        r.pass = exact ? residual == 0.0 : residual <= tol;
        instances.push_back(std::move(r));
    }
};

inline nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json inst = nlohmann::json::array();
    for (const InstanceResult& i : r.instances)
        inst.push_back({{"descriptor", i.descriptor},
                        {"residual", i.residual},
                        {"exact", i.exact},
                        {"pass", i.pass}});
    return nlohmann::json{{"suite", r.suite},
                          {"seed", r.seed},
                          {"tolerance", r.tolerance},
                          {"elapsed_seconds", r.elapsed_seconds},
                          {"rejected_samples", r.rejected_samples},
                          {"instances", inst},
                          {"pass", r.passed()},
                          {"max_residual", r.max_residual()}};
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.suite = j.at("suite").get<std::string>();
    r.seed = j.at("seed").get<uint64_t>();
    r.tolerance = j.at("tolerance").get<double>();
    r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    r.rejected_samples = j.at("rejected_samples").get<int>();
    for (const nlohmann::json& i : j.at("instances")) {
        InstanceResult ir;
        ir.descriptor = i.at("descriptor").get<std::string>();
        ir.residual = i.at("residual").get<double>();
        ir.exact = i.at("exact").get<bool>();
        ir.pass = i.at("pass").get<bool>();
        r.instances.push_back(std::move(ir));
    }
    return r;
}

} // namespace pottskit

#endif

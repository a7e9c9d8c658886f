// JSON serialization of report records for the structured output mode.
#pragma once

#include <nlohmann/json.hpp>

#include "gorbit/certify.hpp"
#include "gorbit/tablerows.hpp"

namespace gorbit {

inline nlohmann::json to_json(const CertReport& r) {
    return nlohmann::json{
        {"claimed_D", r.claimed_D},       {"observed_min", r.observed_min},
        {"argmin_re", r.argmin.real()},   {"argmin_im", r.argmin.imag()},
        {"margin", r.margin},             {"samples", r.samples},
        {"tolerance", r.tolerance},       {"pass", r.pass},
    };
}

inline CertReport cert_report_from_json(const nlohmann::json& j) {
    CertReport r;
    r.claimed_D = j.at("claimed_D").get<double>();
    r.observed_min = j.at("observed_min").get<double>();
    r.argmin = {j.at("argmin_re").get<double>(), j.at("argmin_im").get<double>()};
    r.margin = j.at("margin").get<double>();
    r.samples = j.at("samples").get<long>();
    r.tolerance = j.at("tolerance").get<double>();
    r.pass = j.at("pass").get<bool>();
    return r;
}

inline bool operator==(const CertReport& a, const CertReport& b) {
    return a.claimed_D == b.claimed_D && a.observed_min == b.observed_min &&
           a.argmin == b.argmin && a.margin == b.margin && a.samples == b.samples &&
           a.tolerance == b.tolerance && a.pass == b.pass;
}

inline nlohmann::json to_json(const RowReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"applicable", c.applicable},
                          {"pass", c.pass},
                          {"detail", c.detail}});
    nlohmann::json j{{"row", r.row},
                     {"pass", r.pass},
                     {"checks", checks},
                     {"D_formula", r.D_formula},
                     {"D_estimate", r.D_estimate},
                     {"cert", to_json(r.cert)}};
    if (!r.informational_weights.empty()) {
        nlohmann::json w = nlohmann::json::array();
        for (const auto& b : r.informational_weights) w.push_back(b.get_d());
        j["informational_weights"] = w;
    }
    return j;
}

} // namespace gorbit

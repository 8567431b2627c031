#pragma once

#include <json.hpp>

#include "secant/output_record.hpp"

namespace secant {

// JSON carries the same 10-significant-digit values as the CSV form; numeric
// fields are re-parsed from their serialized text so both forms round-trip.
inline nlohmann::json to_json(const OutputRecord& r) {
    nlohmann::json j;
    j["m"] = round10(r.m);
    j["c"] = round10(r.c);
    j["potential"] = r.potential;
    j["beta"] = round10(r.beta);
    j["gamma"] = r.gamma ? nlohmann::json(round10(*r.gamma)) : nlohmann::json(nullptr);
    j["E_lower"] = round10(r.E_lower);
    j["E_reference"] =
        r.E_reference ? nlohmann::json(round10(*r.E_reference)) : nlohmann::json(nullptr);
    j["k_cross"] = round10(r.k_cross);
    j["cert_nodeless"] = r.cert_nodeless;
    j["cert_monotone"] = r.cert_monotone;
    j["cert_W_nonneg"] = r.cert_W_nonneg;
    return j;
}

inline OutputRecord record_from_json(const nlohmann::json& j) {
    OutputRecord r;
    r.m = j.at("m").get<double>();
    r.c = j.at("c").get<double>();
    r.potential = j.at("potential").get<std::string>();
    r.beta = j.at("beta").get<double>();
    if (!j.at("gamma").is_null()) r.gamma = j.at("gamma").get<double>();
    r.E_lower = j.at("E_lower").get<double>();
    if (!j.at("E_reference").is_null()) r.E_reference = j.at("E_reference").get<double>();
    r.k_cross = j.at("k_cross").get<double>();
    r.cert_nodeless = j.at("cert_nodeless").get<bool>();
    r.cert_monotone = j.at("cert_monotone").get<bool>();
    r.cert_W_nonneg = j.at("cert_W_nonneg").get<bool>();
    return r;
}

}  // namespace secant

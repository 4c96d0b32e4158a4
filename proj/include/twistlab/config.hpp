// Couple configuration files.
//
//   {
//     "phi0": {"kind": "ess_sup"},
//     "phi1": {"kind": "power", "p": 1.0},
//     "theta": 0.5,
//     "jet_order": 6            // optional
//   }
//
// Kinds: "power" {p}, "power_log" {p, alpha}, "ess_sup",
// "monotone_table" {points: [[t, phi], ...]}.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include <twistlab/couple.hpp>
#include <twistlab/orlicz.hpp>

namespace twistlab {

inline OrliczFunction orlicz_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "power") return OrliczFunction::power(j.at("p").get<double>());
    if (kind == "power_log")
        return OrliczFunction::power_log(j.at("p").get<double>(),
                                         j.at("alpha").get<double>());
    if (kind == "ess_sup") return OrliczFunction::ess_sup();
    if (kind == "monotone_table") {
        std::vector<std::pair<double, double>> pts;
        for (const auto& p : j.at("points"))
            pts.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
        return OrliczFunction::monotone_table(std::move(pts));
    }
    throw std::invalid_argument("unknown Orlicz kind: " + kind);
}

inline nlohmann::json orlicz_to_json(const OrliczFunction& f) {
    nlohmann::json j;
    switch (f.kind()) {
        case OrliczKind::power:
            j["kind"] = "power";
            j["p"] = f.exponent();
            break;
        case OrliczKind::power_log:
            j["kind"] = "power_log";
            j["p"] = f.exponent();
            j["alpha"] = f.log_exponent();
            break;
        case OrliczKind::ess_sup:
            j["kind"] = "ess_sup";
            break;
        case OrliczKind::monotone_table:
            j["kind"] = "monotone_table";
            break;
    }
    return j;
}

struct CoupleConfig {
    nlohmann::json raw;
    InterpolationCouple couple;
    std::optional<std::size_t> jet_order;
};

inline CoupleConfig couple_from_json(const nlohmann::json& j) {
    const double theta = j.at("theta").get<double>();
    if (!(theta > 0.0 && theta < 1.0))
        throw std::invalid_argument("config: theta must be in (0,1)");
    CoupleConfig cfg{
        j,
        InterpolationCouple(orlicz_from_json(j.at("phi0")),
                            orlicz_from_json(j.at("phi1")), theta),
        std::nullopt};
    if (j.contains("jet_order"))
        cfg.jet_order = j.at("jet_order").get<std::size_t>();
    return cfg;
}

} // namespace twistlab

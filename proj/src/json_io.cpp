#include "concord/json_io.hpp"

namespace concord {

nlohmann::json json_of(const Rational& q) {
    return to_string(q);
}

nlohmann::json json_of(const LaurentPoly& p) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = to_string(c);
    return j;
}

nlohmann::json json_of(const PLFunction& f) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& pt : f.breakpoints())
        points.push_back({to_string(pt.t), to_string(pt.value)});
    return nlohmann::json{{"breakpoints", points}};
}

nlohmann::json json_of(const JumpSpectrum& spectrum) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [t, jump] : spectrum.entries)
        entries.push_back({{"t", to_string(t)}, {"jump", jump}});
    return nlohmann::json{{"r", spectrum.r}, {"s", spectrum.s}, {"entries", entries}};
}

nlohmann::json json_of(const LiftDescription& lift) {
    nlohmann::json j;
    j["component_count"] = lift.component_count;
    j["degree"] = lift.degree;
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : lift.components) comps.push_back(render(c));
    j["components"] = comps;
    if (lift.full_link)
        j["full_link"] = {{"l", lift.full_link->l},
                          {"m", lift.full_link->m},
                          {"component_count", lift.full_link->component_count()}};
    j["notes"] = lift.notes;
    return j;
}

}  // namespace concord

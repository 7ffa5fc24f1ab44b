#include "qso/serialize.hpp"

#include <charconv>
#include <stdexcept>

namespace qso {

std::string to_string_roundtrip(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
    std::string out = "\"";
    for (char ch : raw) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

nlohmann::json to_json(const Params& p) {
    return {{"a", p.a()}, {"b", p.b()}, {"c", p.c()}};
}

Params params_from_json(const nlohmann::json& j) {
    return Params(j.at("a").get<double>(), j.at("b").get<double>(), j.at("c").get<double>());
}

nlohmann::json to_json(const IntervalSet& s) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : s.components()) {
        if (c.is_point()) {
            out.push_back({{"point", c.lo}});
        } else {
            out.push_back({{"lo", c.lo},
                           {"closed_lo", c.closed_lo},
                           {"hi", c.hi},
                           {"closed_hi", c.closed_hi}});
        }
    }
    return out;
}

IntervalSet interval_set_from_json(const nlohmann::json& j) {
    IntervalSet s;
    for (const auto& c : j) {
        if (c.contains("point")) {
            s.add_point(c.at("point").get<double>());
        } else {
            s.add_interval(c.at("lo").get<double>(), c.at("hi").get<double>(),
                           c.at("closed_lo").get<bool>(), c.at("closed_hi").get<bool>());
        }
    }
    return s;
}

nlohmann::json to_json(const Behavior& b) {
    struct Visitor {
        nlohmann::json operator()(const BudgetExhausted&) const {
            return {{"kind", "BudgetExhausted"}};
        }
        nlohmann::json operator()(const ConvergedTo& v) const {
            return {{"kind", "ConvergedTo"}, {"limit", v.limit}};
        }
        nlohmann::json operator()(const AbsorbedAt& v) const {
            return {{"kind", "AbsorbedAt"}, {"fixed_point", v.fixed_point}, {"step", v.step}};
        }
        nlohmann::json operator()(const Trapped& v) const {
            return {{"kind", "Trapped"}, {"set", to_json(v.set)}, {"entry_step", v.entry_step}};
        }
        nlohmann::json operator()(const CycleDetected& v) const {
            return {{"kind", "CycleDetected"}, {"period", v.period}, {"orbit", v.orbit}};
        }
    };
    return std::visit(Visitor{}, b);
}

Behavior behavior_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "BudgetExhausted") return BudgetExhausted{};
    if (kind == "ConvergedTo") return ConvergedTo{j.at("limit").get<double>()};
    if (kind == "AbsorbedAt") {
        return AbsorbedAt{j.at("fixed_point").get<double>(), j.at("step").get<std::int64_t>()};
    }
    if (kind == "Trapped") {
        return Trapped{interval_set_from_json(j.at("set")), j.at("entry_step").get<std::int64_t>()};
    }
    if (kind == "CycleDetected") {
        return CycleDetected{j.at("period").get<int>(), j.at("orbit").get<std::vector<double>>()};
    }
    throw std::invalid_argument("behavior_from_json: unknown kind " + kind);
}

nlohmann::json to_json(const OrbitRecord& rec) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& [step, x] : rec.samples) {
        samples.push_back({{"step", step}, {"x", x}});
    }
    return {{"x0", rec.x0},
            {"params", to_json(rec.params)},
            {"behavior", to_json(rec.behavior)},
            {"steps_used", rec.steps_used},
            {"samples", samples}};
}

OrbitRecord orbit_record_from_json(const nlohmann::json& j) {
    OrbitRecord rec{j.at("x0").get<double>(), params_from_json(j.at("params")), {},
                    behavior_from_json(j.at("behavior")), j.at("steps_used").get<std::int64_t>()};
    for (const auto& s : j.at("samples")) {
        rec.samples.emplace_back(s.at("step").get<std::int64_t>(), s.at("x").get<double>());
    }
    return rec;
}

nlohmann::json to_json(const TwoCycle& c) {
    return {{"x1", c.x1},     {"x2", c.x2},
            {"a", c.a},       {"b", c.b},
            {"multiplier", c.multiplier}, {"valid", c.valid},
            {"side", to_string(c.side)}};
}

TwoCycle two_cycle_from_json(const nlohmann::json& j) {
    TwoCycle c;
    c.x1 = j.at("x1").get<double>();
    c.x2 = j.at("x2").get<double>();
    c.a = j.at("a").get<double>();
    c.b = j.at("b").get<double>();
    c.multiplier = j.at("multiplier").get<double>();
    c.valid = j.at("valid").get<bool>();
    const std::string side = j.at("side").get<std::string>();
    if (side == "Near13") {
        c.side = CycleSide::Near13;
    } else if (side == "Near23") {
        c.side = CycleSide::Near23;
    } else {
        throw std::invalid_argument("two_cycle_from_json: unknown side " + side);
    }
    return c;
}

std::string orbit_csv(const OrbitRecord& rec) {
    std::string out = "step,x\r\n";
    for (const auto& [step, x] : rec.samples) {
        out += std::to_string(step);
        out += ',';
        out += to_string_roundtrip(x);
        out += "\r\n";
    }
    return out;
}

}  // namespace qso

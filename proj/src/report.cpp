#include "cychom/report.hpp"

#include <algorithm>

namespace cychom {

std::size_t verification_report::passed() const {
    return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.pass; }));
}

std::size_t verification_report::failed() const { return records.size() - passed(); }

void verification_report::add(const check_result& res, std::string ring, std::string sample_policy,
                              std::optional<std::uint64_t> seed, kv_list details) {
    if (res.evaluations > 0) details.insert(details.begin(), {"evaluations", std::to_string(res.evaluations)});
    records.push_back(report_record{res.name, std::move(ring), std::move(sample_policy), seed, res.pass, res.failure,
                                    std::move(details)});
}

std::string verification_report::to_text() const {
    std::string out = "cychom " + std::string(tool_version) + " campaign: " + campaign + "\n";
    for (const auto& [k, v] : context) out += "  " + k + ": " + v + "\n";
    for (const auto& r : records) {
        out += r.pass ? "[PASS] " : "[FAIL] ";
        out += r.identity;
        if (!r.ring.empty()) out += "  ring=" + r.ring;
        if (!r.sample_policy.empty()) out += "  samples=" + r.sample_policy;
        out += "\n";
        for (const auto& [k, v] : r.details) out += "       " + k + " = " + v + "\n";
        if (r.failure) {
            out += "       witness: " + r.failure->identity;
            for (const auto& [k, v] : r.failure->inputs) out += " " + k + "=" + v;
            out += "\n       lhs = " + r.failure->lhs + "\n       rhs = " + r.failure->rhs + "\n";
        }
    }
    out += "summary: " + std::to_string(passed()) + " passed, " + std::to_string(failed()) + " failed, " +
           std::to_string(records.size()) + " total\n";
    return out;
}

nlohmann::ordered_json verification_report::to_json() const {
    nlohmann::ordered_json j;
    j["tool"] = "cychom";
    j["version"] = tool_version;
    j["campaign"] = campaign;
    j["context"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : context) j["context"][k] = v;
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json rec;
        rec["identity"] = r.identity;
        rec["ring"] = r.ring;
        rec["sample_policy"] = r.sample_policy;
        rec["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
        rec["pass"] = r.pass;
        if (r.failure) {
            nlohmann::ordered_json w;
            w["identity"] = r.failure->identity;
            w["inputs"] = nlohmann::ordered_json::object();
            for (const auto& [k, v] : r.failure->inputs) w["inputs"][k] = v;
            w["lhs"] = r.failure->lhs;
            w["rhs"] = r.failure->rhs;
            rec["witness"] = std::move(w);
        } else {
            rec["witness"] = nullptr;
        }
        rec["details"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.details) rec["details"][k] = v;
        j["records"].push_back(std::move(rec));
    }
    j["summary"] = {{"passed", passed()}, {"failed", failed()}, {"total", records.size()}};
    return j;
}

std::string verification_report::render(std::string_view format) const {
    return format == "json" ? to_json().dump(2) + "\n" : to_text();
}

} // namespace cychom

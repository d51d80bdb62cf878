#include "colorweyl/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace colorweyl {

namespace {

std::string emit_json(const Report& r) {
    nlohmann::ordered_json out;
    out["instance"] = r.instance;
    out["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["paper_ref"] = c.paper_ref;
        jc["verdict"] = to_string(c.verdict);
        nlohmann::ordered_json dims = nlohmann::ordered_json::object();
        for (const auto& [k, v] : c.dims) dims[k] = v;
        jc["dims"] = std::move(dims);
        if (c.witness)
            jc["witness"] = {{"kind", c.witness->kind}, {"detail", c.witness->detail}};
        jc["flags"] = c.flags;
        out["checks"].push_back(std::move(jc));
    }
    out["rng_seed"] = r.rng_seed;
    out["versions"] = {{"artifact", "0.1.0"}, {"report", 1}};
    return out.dump(2) + "\n";
}

std::string pad(std::string s, size_t w) {
    s.append(s.size() < w ? w - s.size() : 2, ' ');
    return s;
}

std::string emit_table(const Report& r) {
    std::ostringstream os;
    os << "instance: " << r.instance << "   rng_seed: " << r.rng_seed << "\n";
    os << pad("check", 7) << pad("verdict", 17) << pad("ref", 24) << pad("seconds", 9) << "dims\n";
    for (const auto& c : r.checks) {
        std::ostringstream sec;
        sec << std::fixed << std::setprecision(3) << c.seconds;
        os << pad(c.id, 7) << pad(to_string(c.verdict), 17) << pad(c.paper_ref, 24)
           << pad(sec.str(), 9);
        for (size_t i = 0; i < c.dims.size(); ++i)
            os << (i ? " " : "") << c.dims[i].first << "=" << c.dims[i].second;
        os << "\n";
        if (!c.flags.empty()) {
            os << "       flags:";
            for (const auto& f : c.flags) os << " " << f;
            os << "\n";
        }
        if (c.witness)
            os << "       witness[" << c.witness->kind << "]: " << c.witness->detail << "\n";
    }
    return os.str();
}

}  // namespace

std::string emit_report(const Report& rep, ReportFormat fmt) {
    return fmt == ReportFormat::json ? emit_json(rep) : emit_table(rep);
}

int exit_code_for(const std::vector<CheckRecord>& checks) {
    for (const auto& c : checks)
        if (c.verdict == Status::certified_false && !c.has_flag("hypothesis_violated")) return 1;
    for (const auto& c : checks)
        if (c.verdict == Status::evidence) return 3;
    return 0;
}

}  // namespace colorweyl

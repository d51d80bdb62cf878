#include "colorweyl/examples.hpp"

#include <cstdlib>

namespace colorweyl {

const std::vector<std::string>& example_names() {
    static const std::vector<std::string> names = {"h2n", "truncated_witt", "exceptional",
                                                   "tensor_counterexample"};
    return names;
}

namespace {

std::vector<CheckDecl> all_checks() {
    std::vector<CheckDecl> out;
    for (const auto& id : known_check_ids()) out.push_back({id, {}, {}, {}});
    return out;
}

void apply_field(ConfigSpec& c, const std::string& field) {
    if (field == "rational") {
        c.rational = true;
        return;
    }
    if (field.rfind("gf", 0) == 0 && field.size() > 2) {
        char* end = nullptr;
        long p = std::strtol(field.c_str() + 2, &end, 10);
        if (*end == '\0' && p > 0) {
            c.p = p;
            return;
        }
    }
    throw Error("SEMANTIC_ERROR", "field must be 'rational' or 'gf<p>', got '" + field + "'");
}

}  // namespace

ConfigSpec example_config(const std::string& name, int n, const std::string& field) {
    ConfigSpec c;
    if (name == "h2n") {
        if (n < 2)
            throw Error("N_TOO_SMALL", "the family needs at least two odd generators");
        apply_field(c, field);
        c.torsion = {2};
        c.eps = {{1, 1, {-1, 1}}};
        for (int i = 1; i <= n; ++i) {
            std::string xi = "x" + std::to_string(i);
            c.gens.push_back({xi, {1}, 2});
            c.ders.push_back({"d" + std::to_string(i), true, xi, {}, {}});
            c.D.push_back("d" + std::to_string(i));
        }
        c.checks = all_checks();
        return c;
    }
    if (name == "truncated_witt") {
        c.p = 3;
        c.gens.push_back({"t", {}, 3});
        c.ders.push_back({"dt", true, "t", {}, {}});
        c.D = {"dt"};
        c.checks = all_checks();
        return c;
    }
    if (name == "exceptional") {
        c.p = 3;
        c.torsion = {2};
        c.eps = {{1, 1, {-1, 1}}};
        c.gens.push_back({"x", {1}, 2});
        c.ders.push_back({"dx", true, "x", {}, {}});
        c.D = {"dx"};
        c.checks = all_checks();
        return c;
    }
    if (name == "tensor_counterexample") {
        c.p = 3;
        c.gens.push_back({"t", {}, 3});
        c.gens.push_back({"s", {}, 3});
        c.ders.push_back({"dt", true, "t", {}, {}});
        c.D = {"dt"};
        c.checks = all_checks();
        return c;
    }
    throw Error("UNKNOWN_EXAMPLE",
                "name must be one of h2n, truncated_witt, exceptional, tensor_counterexample");
}

}  // namespace colorweyl

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "colorweyl/driver.hpp"
#include "colorweyl/examples.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw colorweyl::Error("IO_ERROR", "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw colorweyl::Error("IO_ERROR", "cannot write '" + path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for Weyl-type Lie color algebra structure theorems"};
    app.require_subcommand(1);

    std::string v_path, v_json, v_checks, v_format = "table";
    unsigned long long v_seed = 0;
    auto* ver = app.add_subcommand("verify", "run theorem checks from a config file");
    ver->add_option("config", v_path, "config file")->required();
    ver->add_option("--json", v_json, "write the JSON report to this path");
    ver->add_option("--checks", v_checks, "comma-separated check ids overriding the config");
    ver->add_option("--rng-seed", v_seed, "seed for sampled verdicts");
    ver->add_option("--format", v_format, "stdout format")
        ->check(CLI::IsMember({"table", "json"}));

    std::string c_path;
    auto* val = app.add_subcommand("validate", "parse the config and build the instance");
    val->add_option("config", c_path, "config file")->required();

    std::string e_name, e_field = "gf3", e_out;
    int e_n = 2;
    auto* ex = app.add_subcommand("example", "emit a ready-to-run config for a named instance");
    ex->add_option("name", e_name, "h2n | truncated_witt | exceptional | tensor_counterexample")
        ->required();
    ex->add_option("--n", e_n, "generator count for h2n");
    ex->add_option("--field", e_field, "gf<p> or rational (h2n only)");
    ex->add_option("--out", e_out, "write to a file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ver) {
            colorweyl::ConfigSpec cfg = colorweyl::parse_config(read_file(v_path));
            std::string label = std::filesystem::path(v_path).filename().string();
            colorweyl::RunResult rr = colorweyl::run_config(cfg, label, v_checks, v_seed);
            if (!v_json.empty())
                write_file(v_json, emit_report(rr.report, colorweyl::ReportFormat::json));
            std::cout << emit_report(rr.report, v_format == "json"
                                                    ? colorweyl::ReportFormat::json
                                                    : colorweyl::ReportFormat::table);
            return rr.exit_code;
        }
        if (*val) {
            colorweyl::validate_config(colorweyl::parse_config(read_file(c_path)));
            std::cout << "ok\n";
            return 0;
        }
        if (*ex) {
            std::string text = emit_config(colorweyl::example_config(e_name, e_n, e_field));
            if (e_out.empty())
                std::cout << text;
            else
                write_file(e_out, text);
            return 0;
        }
    } catch (const colorweyl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

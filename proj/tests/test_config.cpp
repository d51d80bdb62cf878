#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "colorweyl/driver.hpp"
#include "colorweyl/examples.hpp"

using namespace colorweyl;

namespace {

template <class Fn>
std::string error_code(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code;
    }
    return "";
}

template <class Fn>
std::string error_text(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

const char* kEulerConfig =
    "# diagonal derivation t^k -> k t^k on a char-0 truncated line\n"
    "field rational\n"
    "group free 0 torsion\n"
    "gen t color () bound 3\n"
    "der E color () matrix [0 0 0 0 1 0 0 0 2]\n"
    "D = E\n"
    "check 3.9 cutoff 4\n";

}  // namespace

TEST_CASE("parsing the grammar") {
    ConfigSpec c = parse_config(
        "# a minimal instance\n"
        "field gf 3\n"
        "group free 0 torsion\n"
        "gen t color () bound 3\n"
        "der dt = d/dt\n"
        "D = dt\n"
        "check 3.2 budget 500 trials 7\n");
    CHECK(c.p == 3);
    CHECK(!c.rational);
    CHECK(c.gens.size() == 1);
    CHECK(c.gens[0].bound == 3);
    CHECK(c.ders[0].coordinate);
    CHECK(c.ders[0].gen == "t");
    CHECK(c.D == std::vector<std::string>{"dt"});
    REQUIRE(c.checks.size() == 1);
    CHECK(c.checks[0].budget == 500);
    CHECK(c.checks[0].trials == 7);
    CHECK(!c.checks[0].cutoff);

    ConfigSpec e = parse_config(kEulerConfig);
    CHECK(e.rational);
    CHECK(e.ders[0].matrix.size() == 9);
    CHECK(e.checks[0].cutoff == 4);

    // tuples and matrices may contain spaces; scalars may be fractions
    ConfigSpec s = parse_config(
        "field rational\n"
        "group free 1 torsion 2\n"
        "eps 1 2 -1/2\n"
        "gen a color (1, 0) bound 2\n"
        "der da = d/da\n"
        "D = da\n");
    CHECK(s.eps[0].value == ScalarLit{-1, 2});
    CHECK(s.gens[0].color == std::vector<long>{1, 0});
}

TEST_CASE("parse errors carry position and expectation") {
    auto perr = [](const std::string& text) {
        return error_text([&] { parse_config(text); });
    };
    std::string e1 = perr("fiedl gf 3\n");
    CHECK(e1.find("PARSE_ERROR") != std::string::npos);
    CHECK(e1.find("line 1") != std::string::npos);
    CHECK(e1.find("col 1") != std::string::npos);
    CHECK(e1.find("field") != std::string::npos);

    std::string e2 = perr("field gf 3\ngroup free 0 torsion\ngen t color () bnd 3\n");
    CHECK(e2.find("line 3") != std::string::npos);
    CHECK(e2.find("'bound'") != std::string::npos);

    std::string e3 = perr("field gf 3\ngroup free 0 torsion\ngen t color () bound\n");
    CHECK(e3.find("end of line") != std::string::npos);

    CHECK(error_code([&] { parse_config("field gf x\n"); }) == "PARSE_ERROR");
    CHECK(error_code([&] { parse_config("field gf 3\ngroup free 0 torsion\neps 1 1 1/0\n"); }) ==
          "PARSE_ERROR");
    CHECK(error_code([&] {
              parse_config("field gf 3\ngroup free 0 torsion\ngen t color 1 bound 3\n");
          }) == "PARSE_ERROR");
    CHECK(error_code([&] {
              parse_config("field gf 3\ngroup free 0 torsion\ncheck 3.9 cap 4\nD =\n");
          }) == "PARSE_ERROR");
}

TEST_CASE("semantic errors") {
    std::string char2 = error_text([] { parse_config("field gf 2\n"); });
    CHECK(char2.find("SEMANTIC_ERROR") != std::string::npos);
    CHECK(char2.find("CHAR_TWO") != std::string::npos);

    auto serr = [](const std::string& text) {
        return error_code([&] { parse_config(text); });
    };
    CHECK(serr("group free 0 torsion\n") == "SEMANTIC_ERROR");             // missing field
    CHECK(serr("field gf 3\n") == "SEMANTIC_ERROR");                       // missing group
    CHECK(serr("field gf 3\nfield gf 5\ngroup free 0 torsion\n") == "SEMANTIC_ERROR");
    CHECK(serr("field gf 3\ngroup free 0 torsion\n"
               "gen t color () bound 3\ngen t color () bound 3\n") == "SEMANTIC_ERROR");
    CHECK(serr("field gf 3\ngroup free 0 torsion\n"
               "gen t color (1) bound 3\n") == "SEMANTIC_ERROR");          // color arity
    CHECK(serr("field gf 3\ngroup free 0 torsion\n"
               "gen t color () bound 3\nder dx = d/dx\n") == "SEMANTIC_ERROR");
    CHECK(serr("field gf 3\ngroup free 0 torsion\n"
               "gen t color () bound 3\nder dt = d/dt\nD = other\n") == "SEMANTIC_ERROR");
    CHECK(serr("field gf 3\ngroup free 0 torsion\neps 1 1 -1\n") == "SEMANTIC_ERROR");
    CHECK(serr("field gf 3\ngroup free 0 torsion\ncheck 9.9\n") == "SEMANTIC_ERROR");
}

TEST_CASE("examples round-trip through the emitter") {
    for (const auto& name : example_names()) {
        ConfigSpec c = example_config(name);
        CHECK(parse_config(emit_config(c)) == c);
    }
    ConfigSpec hq = example_config("h2n", 3, "rational");
    CHECK(parse_config(emit_config(hq)) == hq);
    CHECK(hq.gens.size() == 3);
    CHECK(hq.rational);

    ConfigSpec e = parse_config(kEulerConfig);
    CHECK(parse_config(emit_config(e)) == e);

    CHECK(error_code([] { example_config("nope"); }) == "UNKNOWN_EXAMPLE");
    CHECK(error_code([] { example_config("h2n", 1); }) == "N_TOO_SMALL");
    CHECK(error_code([] { example_config("h2n", 2, "float"); }) == "SEMANTIC_ERROR");
}

TEST_CASE("validate_config builds the declared instance") {
    for (const auto& name : example_names()) validate_config(example_config(name));
    validate_config(parse_config(kEulerConfig));

    // d/dt violates the Leibniz rule against t^3 = 0 in characteristic 0
    CHECK(error_code([] {
              validate_config(parse_config("field rational\ngroup free 0 torsion\n"
                                           "gen t color () bound 3\nder dt = d/dt\nD = dt\n"));
          }) == "INVALID_DERIVATION");

    // matrix arity is checked against the built basis
    CHECK(error_code([] {
              validate_config(parse_config("field gf 3\ngroup free 0 torsion\n"
                                           "gen t color () bound 3\n"
                                           "der E color () matrix [0 1]\nD = E\n"));
          }) == "SEMANTIC_ERROR");
}

TEST_CASE("verification runs and exit codes") {
    auto run = [](const ConfigSpec& c, const std::string& checks = "") {
        return run_config(c, "test", checks, 0);
    };

    RunResult h = run(example_config("h2n"));
    CHECK(h.exit_code == 0);
    CHECK(h.report.checks.size() == 6);

    RunResult hsel = run(example_config("h2n"), "3.2,3.9,2.1");
    CHECK(hsel.exit_code == 0);
    CHECK(hsel.report.checks.size() == 3);
    CHECK(hsel.report.checks[0].id == "3.2");

    // quotient simplicity over Q stays evidence
    RunResult hq = run(example_config("h2n", 2, "rational"));
    CHECK(hq.exit_code == 3);

    RunResult w = run(example_config("truncated_witt"));
    CHECK(w.exit_code == 0);

    RunResult x = run(example_config("exceptional"));
    CHECK(x.exit_code == 0);

    // equivalence holds with both sides false, so nothing refutes anything
    RunResult t = run(example_config("tensor_counterexample"));
    CHECK(t.exit_code == 0);
    bool saw_39 = false;
    for (const auto& c : t.report.checks)
        if (c.id == "3.9") {
            saw_39 = true;
            CHECK(c.verdict == Status::certified_false);
            CHECK(c.has_flag("hypothesis_violated"));
        }
    CHECK(saw_39);

    RunResult e = run(parse_config(kEulerConfig));
    CHECK(e.exit_code == 3);  // evidence is the only possible outcome
    CHECK(e.report.checks.size() == 1);

    CHECK(error_code([&] {
              ConfigSpec c = parse_config(kEulerConfig);
              c.checks[0].cutoff.reset();
              run_config(c, "test", "", 0);
          }) == "MISSING_CUTOFF");
    CHECK(error_code([&] { run_config(example_config("h2n"), "test", "5.5", 0); }) ==
          "SEMANTIC_ERROR");
}

TEST_CASE("report emission") {
    Report empty{"nothing", {}, 0};
    nlohmann::json je = nlohmann::json::parse(emit_report(empty, ReportFormat::json));
    CHECK(je["instance"] == "nothing");
    CHECK(je["checks"].is_array());
    CHECK(je["checks"].empty());
    CHECK(je["rng_seed"] == 0);
    CHECK(je.contains("versions"));

    RunResult h = run_config(example_config("h2n"), "h2n", "", 0);
    std::string js = emit_report(h.report, ReportFormat::json);
    CHECK(js.find("\"dim_quotient\": 14") != std::string::npos);
    nlohmann::json jh = nlohmann::json::parse(js);
    CHECK(jh["checks"].size() == 6);
    for (const auto& c : jh["checks"]) {
        CHECK(c.contains("id"));
        CHECK(c.contains("paper_ref"));
        CHECK(c.contains("verdict"));
        CHECK(c.contains("dims"));
        CHECK(c.contains("flags"));
        CHECK(!c.contains("seconds"));  // timings are table-only
    }

    // byte-stable across repeated runs with the same seed
    RunResult h2 = run_config(example_config("h2n"), "h2n", "", 0);
    CHECK(emit_report(h2.report, ReportFormat::json) == js);

    // the counterexample witness prints over the named basis
    RunResult t = run_config(example_config("tensor_counterexample"), "tensor", "2.2", 0);
    nlohmann::json jt = nlohmann::json::parse(emit_report(t.report, ReportFormat::json));
    REQUIRE(jt["checks"].size() == 1);
    CHECK(jt["checks"][0]["witness"]["kind"] == "seed");
    std::string detail = jt["checks"][0]["witness"]["detail"];
    CHECK(detail.find("s") != std::string::npos);

    std::string table = emit_report(h.report, ReportFormat::table);
    CHECK(table.find("3.9") != std::string::npos);
    CHECK(table.find("certified_true") != std::string::npos);
    CHECK(table.find("dim_quotient=14") != std::string::npos);
}

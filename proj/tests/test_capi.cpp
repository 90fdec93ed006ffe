#include <doctest.h>

#include <qwalk/qwalk.h>

#include <json.hpp>
#include <string>

using json = nlohmann::json;

namespace {
json take(char* report) {
    REQUIRE(report != nullptr);
    json j = json::parse(std::string(report));
    qw_string_free(report);
    return j;
}
}  // namespace

TEST_CASE("layout and state lifecycle") {
    qw_layout* lay = qw_layout_new(3, "gray");
    REQUIRE(lay != nullptr);
    CHECK(qw_layout_n_qubits(lay) == 3);
    CHECK(qw_layout_new(1, "gray") == nullptr);
    CHECK(qw_layout_new(3, "octal") == nullptr);
    CHECK(std::string(qw_error_message()).size() > 0);

    qw_state* st = qw_state_new(lay);
    REQUIRE(st != nullptr);
    json probs = take(qw_state_probabilities_json(st));
    CHECK(probs["probabilities"]["000"].get<double>() == doctest::Approx(1.0));
    qw_state_free(st);
    qw_layout_free(lay);
}

TEST_CASE("compile, apply, serialize round trip") {
    qw_layout* lay = qw_layout_new(3, "gray");
    qw_program* prog = nullptr;
    REQUIRE(qw_program_compile_gates(lay, "H 1\nCNOT 1 2\nCNOT 1 3\n", "main", &prog) == QW_OK);
    REQUIRE(prog != nullptr);
    CHECK(qw_program_length(prog) > 0);
    CHECK(qw_program_steps(prog) > 0);

    qw_state* st = qw_state_new(lay);
    REQUIRE(qw_state_apply(st, prog) == QW_OK);
    json probs = take(qw_state_probabilities_json(st))["probabilities"];
    CHECK(probs["000"].get<double>() == doctest::Approx(0.5));
    CHECK(probs["111"].get<double>() == doctest::Approx(0.5));

    char* text = qw_program_text(prog);
    REQUIRE(text != nullptr);
    qw_program* back = qw_program_parse(text);
    REQUIRE(back != nullptr);
    char* text2 = qw_program_text(back);
    CHECK(std::string(text) == std::string(text2));
    qw_string_free(text);
    qw_string_free(text2);
    qw_program_free(back);
    qw_program_free(prog);

    // parse errors surface as null + message
    CHECK(qw_program_parse("COIN nonsense") == nullptr);
    qw_program* bad = nullptr;
    CHECK(qw_program_compile_gates(lay, "H 9", "main", &bad) != QW_OK);
    CHECK(qw_program_compile_gates(lay, "H 1", "quantum", &bad) != QW_OK);
    qw_state_free(st);
    qw_layout_free(lay);
}

TEST_CASE("verification report") {
    int pass = 0;
    json j = take(qw_report_verify_gates(3, "main", "gray", &pass));
    CHECK(pass == 1);
    CHECK(j["pass"].get<bool>());
    CHECK(j["results"].size() == 3 + 9 + 6);  // H, P(3 angles), CNOT pairs
    j = take(qw_report_verify_gates(4, "alt", "binary", &pass));
    CHECK(pass == 1);
}

TEST_CASE("algorithm reports") {
    int pass = 0;
    json g = take(qw_report_grover("011", 2, "gray", &pass));
    CHECK(pass == 1);
    CHECK(g["probability"].get<double>() == doctest::Approx(0.9453).epsilon(5e-4));
    CHECK(g["walk_time_steps"].get<int>() == 39);

    json f = take(qw_report_qft3(5, "gray", &pass));
    CHECK(pass == 1);
    CHECK(f["walk_time_steps"].get<int>() == 9);

    json q = take(qw_report_qpe(0.25, "gray", &pass));
    CHECK(pass == 1);
    CHECK(q["estimate"].get<double>() == doctest::Approx(0.25));
    CHECK(q["walk_time_steps"].get<int>() == 17);

    json e = take(qw_report_qec("five-one", "gray", &pass));
    CHECK(pass == 1);
    CHECK(e["cases"].size() == 16);

    json c = take(qw_report_cost("targets", "walk", "gray"));
    CHECK(c["met"].get<int>() == 14);
    json d = take(qw_report_discrepancies());
    CHECK(d["records"].size() > 10);

    CHECK(qw_report_qec("steane", "gray", &pass) == nullptr);
}

// command-line front end; talks to the library through the C API only
#include <CLI11.hpp>
#include <qwalk/qwalk.h>

#include <cstdio>
#include <iostream>
#include <string>

namespace {

int emit(char* report, int pass) {
    if (!report) {
        std::cerr << "error: " << qw_error_message() << "\n";
        return 2;
    }
    std::cout << report << "\n";
    qw_string_free(report);
    return pass ? 0 : 1;
}

std::string read_stdin() {
    std::string s, line;
    while (std::getline(std::cin, line)) s += line + "\n";
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"walk-based multi-qubit simulator and compiler"};
    app.require_subcommand(1);
    std::string convention = "gray", backend = "main";

    auto* vg = app.add_subcommand("verify-gates", "compile H/P/CNOT and check against references");
    int vg_n = 3;
    vg->add_option("--n", vg_n, "number of qubits")->check(CLI::Range(2, 6));
    vg->add_option("--backend", backend)->check(CLI::IsMember({"main", "alt"}));
    vg->add_option("--convention", convention)->check(CLI::IsMember({"gray", "binary"}));

    auto* gr = app.add_subcommand("grover", "run the 3-qubit search");
    std::string target = "011";
    int iterations = 2;
    gr->add_option("--target", target, "3-bit target");
    gr->add_option("--iterations", iterations)->check(CLI::Range(0, 16));
    gr->add_option("--convention", convention)->check(CLI::IsMember({"gray", "binary"}));

    auto* qf = app.add_subcommand("qft3", "run the 3-qubit Fourier transform");
    int input = 0;
    qf->add_option("--input", input, "basis input state")->check(CLI::Range(0, 7));
    qf->add_option("--convention", convention)->check(CLI::IsMember({"gray", "binary"}));

    auto* qp = app.add_subcommand("qpe", "phase estimation with a 2-bit register");
    double phi = 0.25;
    qp->add_option("--phi", phi, "phase as a fraction of 2*pi");
    qp->add_option("--convention", convention)->check(CLI::IsMember({"gray", "binary"}));

    auto* qc = app.add_subcommand("qec", "error-code recovery sweep");
    std::string code = "bitflip";
    bool sweep = false;
    qc->add_option("--code", code)->check(CLI::IsMember({"bitflip", "phaseflip", "five-one"}));
    qc->add_flag("--sweep", sweep, "sweep all single-qubit errors (always on)");
    qc->add_option("--convention", convention)->check(CLI::IsMember({"gray", "binary"}));

    auto* co = app.add_subcommand("cost", "time/space accounting");
    std::string artifact = "grover", model = "walk";
    co->add_option("--artifact", artifact)
        ->check(CLI::IsMember({"grover", "qft", "qpe", "bitflip", "targets"}));
    co->add_option("--model", model)->check(CLI::IsMember({"walk", "circuit"}));
    co->add_option("--convention", convention)->check(CLI::IsMember({"gray", "binary"}));

    auto* dp = app.add_subcommand("dump-program", "compile gate lines to walk-program text");
    int dp_n = 3;
    std::string gates;
    dp->add_option("--n", dp_n, "number of qubits")->check(CLI::Range(2, 10));
    dp->add_option("--gates", gates, "gate lines, ';'-separated (stdin if omitted)");
    dp->add_option("--backend", backend)->check(CLI::IsMember({"main", "alt"}));
    dp->add_option("--convention", convention)->check(CLI::IsMember({"gray", "binary"}));

    auto* di = app.add_subcommand("discrepancies", "list recorded literal-reading discrepancies");
    (void)di;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    int pass = 1;
    if (vg->parsed())
        return emit(qw_report_verify_gates(vg_n, backend.c_str(), convention.c_str(), &pass), pass);
    if (gr->parsed())
        return emit(qw_report_grover(target.c_str(), iterations, convention.c_str(), &pass), pass);
    if (qf->parsed()) return emit(qw_report_qft3(input, convention.c_str(), &pass), pass);
    if (qp->parsed()) return emit(qw_report_qpe(phi, convention.c_str(), &pass), pass);
    if (qc->parsed()) return emit(qw_report_qec(code.c_str(), convention.c_str(), &pass), pass);
    if (co->parsed())
        return emit(qw_report_cost(artifact.c_str(), model.c_str(), convention.c_str()), 1);
    if (di->parsed()) return emit(qw_report_discrepancies(), 1);

    // dump-program
    std::string lines = gates.empty() ? read_stdin() : gates;
    for (char& c : lines)
        if (c == ';') c = '\n';
    qw_layout* lay = qw_layout_new(dp_n, convention.c_str());
    if (!lay) {
        std::cerr << "error: " << qw_error_message() << "\n";
        return 2;
    }
    qw_program* prog = nullptr;
    int rc = qw_program_compile_gates(lay, lines.c_str(), backend.c_str(), &prog);
    if (rc != QW_OK) {
        std::cerr << "error: " << qw_error_message() << "\n";
        qw_layout_free(lay);
        return rc == QW_ERR_PARSE ? 2 : 1;
    }
    char* text = qw_program_text(prog);
    std::cout << text;
    std::cout << "# walk time steps: " << qw_program_steps(prog) << "\n";
    qw_string_free(text);
    qw_program_free(prog);
    qw_layout_free(lay);
    return 0;
}

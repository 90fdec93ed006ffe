#include "qwalk/qwalk.h"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <cstring>

#include "costs.hpp"
#include "gates_alt.hpp"

using json = nlohmann::json;
using namespace qwalk;

namespace {

thread_local std::string g_error;

int fail(const std::string& msg, int code) {
    g_error = msg;
    return code;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// run fn, converting exceptions to error codes
template <typename F>
int guarded(F&& fn) {
    try {
        fn();
        return QW_OK;
    } catch (const std::invalid_argument& e) {
        return fail(e.what(), QW_ERR_INVALID_ARGUMENT);
    } catch (const std::exception& e) {
        return fail(e.what(), QW_ERR_INTERNAL);
    }
}

template <typename F>
char* guarded_json(F&& fn) {
    try {
        json j = fn();
        j["schema_version"] = 1;
        return dup_string(j.dump(2));
    } catch (const std::exception& e) {
        fail(e.what(), QW_ERR_INTERNAL);
        return nullptr;
    }
}

json discrepancy_json(const DiscrepancyRecord& r) {
    return {{"construction", r.construction},
            {"source", r.paper_eq},
            {"literal_verdict", r.literal_verdict},
            {"correction", r.correction},
            {"convention", r.convention}};
}

std::vector<GateSpec> parse_gate_lines(const std::string& text) {
    std::vector<GateSpec> gs;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool blank = line.find_first_not_of(" \t") == std::string::npos;
        if (!blank && line[line.find_first_not_of(" \t")] != '#') gs.push_back(parse_gate_line(line));
        if (nl == std::string::npos) break;
        pos = nl + 1;
    }
    return gs;
}

}  // namespace

struct qw_layout {
    Layout lay;
};
struct qw_state {
    WalkState st;
};
struct qw_program {
    Program prog;
};

extern "C" {

const char* qw_error_message(void) { return g_error.c_str(); }

void qw_string_free(char* s) { std::free(s); }

qw_layout* qw_layout_new(int n_qubits, const char* convention) {
    try {
        return new qw_layout{make_layout(n_qubits, parse_convention(convention ? convention : "gray"))};
    } catch (const std::exception& e) {
        fail(e.what(), QW_ERR_INVALID_ARGUMENT);
        return nullptr;
    }
}

void qw_layout_free(qw_layout* lay) { delete lay; }

int qw_layout_n_qubits(const qw_layout* lay) { return lay ? lay->lay.n_qubits : 0; }

qw_state* qw_state_new(const qw_layout* lay) {
    if (!lay) {
        fail("null layout", QW_ERR_INVALID_ARGUMENT);
        return nullptr;
    }
    return new qw_state{init_state(lay->lay, 0, std::vector<int>(lay->lay.n_graphs(), 0))};
}

void qw_state_free(qw_state* st) { delete st; }

int qw_state_apply(qw_state* st, const qw_program* prog) {
    if (!st || !prog) return fail("null argument", QW_ERR_INVALID_ARGUMENT);
    return guarded([&] { apply_program(st->st, prog->prog); });
}

char* qw_state_probabilities_json(const qw_state* st) {
    if (!st) {
        fail("null state", QW_ERR_INVALID_ARGUMENT);
        return nullptr;
    }
    return guarded_json([&] {
        json j = json::object();
        for (const auto& [bits, p] : measure_all(st->st))
            if (p > 1e-12) j[bits] = p;
        return json{{"probabilities", j}};
    });
}

int qw_program_compile_gates(const qw_layout* lay, const char* gate_lines, const char* backend,
                             qw_program** out) {
    if (!lay || !gate_lines || !out) return fail("null argument", QW_ERR_INVALID_ARGUMENT);
    std::string be = backend ? backend : "main";
    if (be != "main" && be != "alt") return fail("backend must be main or alt", QW_ERR_INVALID_ARGUMENT);
    try {
        Program p;
        for (const GateSpec& g : parse_gate_lines(gate_lines))
            p.append(be == "alt" ? alt_compile_gate(g, lay->lay) : compile_gate(g, lay->lay));
        *out = new qw_program{std::move(p)};
        return QW_OK;
    } catch (const std::invalid_argument& e) {
        return fail(e.what(), QW_ERR_PARSE);
    } catch (const std::exception& e) {
        return fail(e.what(), QW_ERR_INTERNAL);
    }
}

qw_program* qw_program_parse(const char* text) {
    if (!text) {
        fail("null text", QW_ERR_INVALID_ARGUMENT);
        return nullptr;
    }
    try {
        return new qw_program{from_text(text)};
    } catch (const std::exception& e) {
        fail(e.what(), QW_ERR_PARSE);
        return nullptr;
    }
}

char* qw_program_text(const qw_program* prog) {
    if (!prog) {
        fail("null program", QW_ERR_INVALID_ARGUMENT);
        return nullptr;
    }
    return dup_string(to_text(prog->prog));
}

int qw_program_length(const qw_program* prog) {
    return prog ? static_cast<int>(prog->prog.size()) : 0;
}

int qw_program_steps(const qw_program* prog) {
    return prog ? walk_time_steps(prog->prog) : 0;
}

void qw_program_free(qw_program* prog) { delete prog; }

char* qw_report_verify_gates(int n, const char* backend, const char* convention, int* pass) {
    std::string be = backend ? backend : "main";
    return guarded_json([&] {
        if (be != "main" && be != "alt") throw std::invalid_argument("backend must be main or alt");
        Layout lay = make_layout(n, parse_convention(convention ? convention : "gray"));
        json results = json::array();
        bool all = true;
        auto check = [&](const std::string& label, const Program& p, const Eigen::MatrixXcd& ref,
                         const std::string& case_id = "") {
            auto U = to_qubit_basis(program_matrix(p, lay), lay);
            bool ok = equiv_up_to_phase(U, ref).has_value();
            all = all && ok;
            json e = {{"gate", label}, {"pass", ok}, {"instructions", p.size()}};
            if (!case_id.empty()) e["case"] = case_id;
            results.push_back(e);
        };
        for (int q = 1; q <= n; ++q) {
            Program p = be == "alt" ? alt_compile_hadamard(q, lay) : compile_hadamard(q, lay);
            check("H" + std::to_string(q), p, ref_1q(n, q, mat_h()));
        }
        for (int q = 1; q <= n; ++q)
            for (double phi : {M_PI / 4, M_PI / 2, M_PI}) {
                Program p = be == "alt" ? alt_compile_phase(q, phi, lay) : compile_phase(q, phi, lay);
                check("P" + std::to_string(q) + "(" + std::to_string(phi) + ")", p,
                      ref_1q(n, q, mat_phase(phi)));
            }
        for (int qc = 1; qc <= n; ++qc)
            for (int qt = 1; qt <= n; ++qt) {
                if (qc == qt) continue;
                std::string cid;
                Program p = be == "alt" ? alt_compile_cnot(qc, qt, lay)
                                        : compile_cnot(qc, qt, lay, &cid);
                if (be == "alt") cid = cnot_case(qc, qt, lay);
                check("CNOT" + std::to_string(qc) + std::to_string(qt), p, ref_cnot(n, qc, qt), cid);
            }
        if (pass) *pass = all;
        return json{{"command", "verify-gates"},
                    {"n", n},
                    {"backend", be},
                    {"convention", convention_name(lay.conv)},
                    {"tolerance", 1e-10},
                    {"pass", all},
                    {"results", results}};
    });
}

char* qw_report_grover(const char* target, int iterations, const char* convention, int* pass) {
    return guarded_json([&] {
        Convention conv = parse_convention(convention ? convention : "gray");
        GroverRun run = run_grover(target ? target : "", iterations, conv);
        double theta = 2 * std::asin(1 / std::sqrt(8.0));
        bool ok = true;
        json hist = json::array();
        for (size_t t = 0; t < run.history.size(); ++t) {
            double want = std::pow(std::sin((2.0 * t + 1) * theta / 2), 2);
            ok = ok && std::abs(run.history[t] - want) < 1e-10;
            hist.push_back({{"iteration", t}, {"probability", run.history[t]}, {"closed_form", want}});
        }
        Layout lay = make_layout(3, conv);
        if (pass) *pass = ok;
        return json{{"command", "grover"},
                    {"target", run.target},
                    {"iterations", run.iterations},
                    {"convention", convention_name(conv)},
                    {"probability", run.history.back()},
                    {"history", hist},
                    {"walk_time_steps", walk_time_steps(grover_program(run.target, iterations, lay))},
                    {"pass", ok}};
    });
}

char* qw_report_qft3(int input, const char* convention, int* pass) {
    return guarded_json([&] {
        Convention conv = parse_convention(convention ? convention : "gray");
        Layout lay = make_layout(3, conv);
        Eigen::VectorXcd out = run_qft3(input, conv);
        // the swap-free program realizes the transform with bit-reversed outputs
        Eigen::MatrixXcd F = dft_matrix(8);
        Eigen::MatrixXcd Rev = Eigen::MatrixXcd::Zero(8, 8);
        for (int x = 0; x < 8; ++x) Rev(((x & 1) << 2) | (x & 2) | ((x >> 2) & 1), x) = 1;
        auto U = to_qubit_basis(program_matrix(compile_qft3(lay), lay), lay);
        bool ok = equiv_up_to_phase(U, Rev * F).has_value();
        json amps = json::array();
        for (int x = 0; x < 8; ++x)
            amps.push_back({{"state", x}, {"re", out(x).real()}, {"im", out(x).imag()},
                            {"probability", std::norm(out(x))}});
        if (pass) *pass = ok;
        return json{{"command", "qft3"},
                    {"input", input},
                    {"convention", convention_name(conv)},
                    {"output_ordering", "bit-reversed"},
                    {"matrix_matches_dft", ok},
                    {"walk_time_steps", walk_time_steps(compile_qft3(lay))},
                    {"amplitudes", amps},
                    {"pass", ok}};
    });
}

char* qw_report_qpe(double phi, const char* convention, int* pass) {
    return guarded_json([&] {
        Convention conv = parse_convention(convention ? convention : "gray");
        Eigen::Matrix2cd u;
        u << 1, 0, 0, std::exp(std::complex<double>(0, 2 * M_PI * phi));
        PhaseEstimate est = run_phase_estimation(coin_matrix(u), coin_matrix(mat_x()), conv);
        // exact recovery for 2-bit fractions; otherwise the mode must be the
        // nearest 2-bit fraction
        double k4 = phi * 4;
        bool exact = std::abs(k4 - std::round(k4)) < 1e-12;
        bool ok;
        if (exact) {
            int k = static_cast<int>(std::round(k4)) & 3;
            ok = std::abs(est.probs[k] - 1) < 1e-10;
        } else {
            int nearest = static_cast<int>(std::round(k4)) & 3;
            ok = est.best == nearest;
        }
        Layout lay = make_layout(3, conv);
        if (pass) *pass = ok;
        return json{{"command", "qpe"},
                    {"phi", phi},
                    {"convention", convention_name(conv)},
                    {"probs", est.probs},
                    {"estimate", est.phi_est},
                    {"exact_case", exact},
                    {"walk_time_steps",
                     walk_time_steps(phase_estimation_program(coin_matrix(u), coin_matrix(mat_x()), lay))},
                    {"pass", ok}};
    });
}

char* qw_report_qec(const char* code, const char* convention, int* pass) {
    return guarded_json([&] {
        Convention conv = parse_convention(convention ? convention : "gray");
        SweepResult res = sweep_code(code ? code : "", conv);
        json cases = json::array();
        for (const ErrorCase& c : res.cases)
            cases.push_back({{"qubit", c.error.qubit},
                             {"kind", std::string(1, c.error.kind)},
                             {"fidelity", c.fidelity},
                             {"protected", c.protected_error}});
        if (pass) *pass = res.pass;
        return json{{"command", "qec"},
                    {"code", res.code},
                    {"convention", convention_name(conv)},
                    {"cases", cases},
                    {"worst_protected_fidelity", res.worst_protected},
                    {"pass", res.pass}};
    });
}

char* qw_report_cost(const char* artifact, const char* model, const char* convention) {
    return guarded_json([&] {
        Convention conv = parse_convention(convention ? convention : "gray");
        std::string art = artifact ? artifact : "";
        if (art == "targets") {
            json t = json::array();
            int met = 0;
            for (const CostTarget& c : cost_targets(conv)) {
                t.push_back({{"name", c.name}, {"target", c.target}, {"achieved", c.achieved},
                             {"met", c.met}});
                met += c.met;
            }
            return json{{"command", "cost"}, {"convention", convention_name(conv)},
                        {"targets", t}, {"met", met}, {"total", t.size()}};
        }
        CostReport r = cost_report(art, model ? model : "walk", conv);
        return json{{"command", "cost"},
                    {"artifact", r.artifact},
                    {"model", r.model},
                    {"convention", convention_name(conv)},
                    {"time_steps", r.time_steps},
                    {"space", r.space},
                    {"notes", r.notes}};
    });
}

char* qw_report_discrepancies(void) {
    return guarded_json([&] {
        json recs = json::array();
        for (const auto& r : gate_discrepancies()) recs.push_back(discrepancy_json(r));
        for (const auto& r : alt_discrepancies()) recs.push_back(discrepancy_json(r));
        for (const auto& r : algorithm_discrepancies()) recs.push_back(discrepancy_json(r));
        for (const auto& r : cost_discrepancies()) recs.push_back(discrepancy_json(r));
        return json{{"command", "discrepancies"}, {"records", recs}};
    });
}

}  // extern "C"

#pragma once
// Compiles abstract gates into walk programs (main-text scheme), with the
// full CNOT case dispatch and a ledger of literal-vs-corrected readings.

#include "oracle.hpp"

namespace qwalk {

struct GateSpec {
    enum Kind { H, Phase, GlobalPhase, CNOT, PauliX, PauliZ } kind;
    int q1 = 0, q2 = 0;
    double phi = 0;
};

GateSpec parse_gate_line(const std::string& line);

struct DiscrepancyRecord {
    std::string construction;
    std::string paper_eq;
    std::string literal_verdict;  // "pass", "pass (binary only)", "fail: ..."
    std::string correction;
    std::string convention;  // convention(s) the implemented form validates under
};

Program compile_hadamard(int Q, const Layout& lay);
Program compile_phase(int Q, double phi, const Layout& lay);
Program compile_global_phase(double phi);
Program compile_pauli_x(int Q, const Layout& lay);  // H . Z . H
Program compile_pauli_z(int Q, const Layout& lay);  // phase pi
// diagonal or antidiagonal single-qubit unitaries on any qubit
Program compile_1q(int Q, const Eigen::Matrix2cd& U, const Layout& lay);

// case_id (if non-null) receives one of 1a..1f, 2a, 2b, 3a..3d, 4a, 4b
Program compile_cnot(int Qc, int Qt, const Layout& lay, std::string* case_id = nullptr);
std::string cnot_case(int Qc, int Qt, const Layout& lay);

Program compile_gate(const GateSpec& g, const Layout& lay);
Program compile_gate_sequence(const std::vector<GateSpec>& gs, const Layout& lay);

// multi-controlled gates; controls are (qubit, required value) pairs
using Controls = std::vector<std::pair<int, int>>;
Program compile_mcx(const Controls& controls, int Qt, const Layout& lay);
// controlled phase e^{i phi} when all controls match and Qt = 1
Program compile_cp(const Controls& controls, int Qt, double phi, const Layout& lay);
Program compile_mcz(const Controls& controls, int Qz, const Layout& lay);
Program compile_toffoli(int c1, int c2, int target, const Layout& lay);
Program compile_ccz(int c1, int c2, int qz, const Layout& lay);
Program compile_cccz(const Controls& controls, int qz, const Layout& lay);

// numeric literal-reading checks for the main-text equations
std::vector<DiscrepancyRecord> gate_discrepancies();

}  // namespace qwalk

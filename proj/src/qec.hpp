#pragma once
// Error-code suite: the 3-qubit bit-flip and phase-flip codes and the
// five-qubit code, with error injection and recovery-fidelity sweeps.

#include "gates.hpp"

namespace qwalk {

struct PauliError {
    int qubit = 1;
    char kind = 'I';  // I, X, Y, Z
};

Program bitflip_encode(const Layout& lay);
Program bitflip_decode(const Layout& lay);
Program phaseflip_encode(const Layout& lay);
Program phaseflip_decode(const Layout& lay);

// five-qubit code: data on the coin qubit, graph qubits 2..5 as ancillas.
// decode = exact reverse of encode followed by the syndrome-conditioned
// coin correction (five_one_recovery).
Program five_one_encode(const Layout& lay);
Program five_one_decode(const Layout& lay);
Program five_one_recovery(const Layout& lay);

Program pauli_error_program(const PauliError& e, const Layout& lay);
void inject_pauli_error(WalkState& st, const PauliError& e);

struct ErrorCase {
    PauliError error;
    double fidelity = 0;  // worst case over a tomographically complete input set
    bool protected_error = false;
};

struct SweepResult {
    std::string code;
    std::vector<ErrorCase> cases;
    double worst_protected = 1;
    bool pass = false;
};

// code: "bitflip", "phaseflip", or "five-one"
SweepResult sweep_code(const std::string& code, Convention conv);

}  // namespace qwalk

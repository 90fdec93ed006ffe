#pragma once
// Alternative scaling backend (hierarchical): the second bit of the first
// graph acts as the coin for qubits on later graphs. Provides H, P, CNOT for
// qubits >= 4; lower qubits reuse the main scheme.

#include "gates.hpp"

namespace qwalk {

struct AltLevelOp {
    enum Kind { V, W, PairSigmaX, PairSigmaZ } kind;
    int dir = +1;    // +-1 for V/W
    int index = 0;   // V: 0..3 (0==3, 1==2); W: 0..1; sigma: bit index
    int level = 0;   // for the sigma pair ops
};

// dense matrix of a level operator under the state-wise appendix reading
// (used for the definitional identity checks V^0 == V^3, V^1 == V^2)
Eigen::MatrixXcd alt_level_op_matrix(const AltLevelOp& op, const Layout& lay);

Program alt_compile_hadamard(int Q, const Layout& lay);
Program alt_compile_phase(int Q, double phi, const Layout& lay);
Program alt_compile_cnot(int Qc, int Qt, const Layout& lay);
Program alt_compile_gate(const GateSpec& g, const Layout& lay);

// intersect an extra position filter into every instruction of a program
Program add_filter(const Program& p, const Filter& extra);

std::vector<DiscrepancyRecord> alt_discrepancies();

}  // namespace qwalk

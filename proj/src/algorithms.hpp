#pragma once
// Walk-program realizations of 3-qubit Grover search, the 3-qubit QFT, and
// phase estimation with a 2-bit position register.

#include "gates.hpp"

namespace qwalk {

struct GroverRun {
    std::string target;
    int iterations = 0;
    // history[t] = P(target) after t iterations (history[0] = uniform 1/8)
    std::vector<double> history;
};

struct PhaseEstimate {
    // distribution over the register outcomes k = 0..3, phi_est = k/4
    std::array<double, 4> probs{};
    int best = 0;
    double phi_est = 0;
};

// -1 exactly on the marked 3-qubit basis state, as one filtered coin
Program grover_oracle(const std::string& target, const Layout& lay);
// -1 on every basis state except |000>
Program grover_diffusion(const Layout& lay);
Program hadamard_all(const Layout& lay);
// full program: superposition + iterations x (oracle, H, diffusion, H)
Program grover_program(const std::string& target, int iterations, const Layout& lay);
GroverRun run_grover(const std::string& target, int iterations, Convention conv);

// Fredkin: swap qubits Qa,Qb when Qc = 1
Program controlled_swap(int Qc, int Qa, int Qb, const Layout& lay);

// swap-free QFT; the induced unitary equals Rev . F8 where Rev is the
// bit-reversal permutation (output qubits come out in reversed order)
Program compile_qft3(const Layout& lay);
// variant closing with the three-CNOT swap; equals F8 exactly
Program compile_qft3_swapped(const Layout& lay);
// output amplitudes (qubit basis, natural ordering) for basis input x
Eigen::VectorXcd run_qft3(int input, Convention conv);

Program phase_estimation_program(const CoinOp& u_coin, const CoinOp& g_prep, const Layout& lay);
PhaseEstimate run_phase_estimation(const CoinOp& u_coin, const CoinOp& g_prep, Convention conv);

std::vector<DiscrepancyRecord> algorithm_discrepancies();

}  // namespace qwalk

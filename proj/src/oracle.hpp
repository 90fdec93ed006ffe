#pragma once
// Independent dense-matrix verification: builds full unitaries from programs
// by direct index arithmetic (not via the state-application code path),
// reference gate matrices, and global-phase-aligned equivalence.

#include "walkops.hpp"

#include <optional>

namespace qwalk {

Eigen::MatrixXcd instr_matrix(const Instr& in, const Layout& lay);
Eigen::MatrixXcd program_matrix(const Program& p, const Layout& lay);  // N <= 10

// permutation P with P[qubit_index, walk_index] = 1
Eigen::MatrixXcd basis_permutation(const Layout& lay);
// conjugate a walk-basis matrix into the qubit basis
Eigen::MatrixXcd to_qubit_basis(const Eigen::MatrixXcd& U, const Layout& lay);

// reference gates in the qubit basis, qubit 1 most significant
Eigen::MatrixXcd ref_1q(int n_qubits, int qubit, const Eigen::Matrix2cd& U);
Eigen::MatrixXcd ref_cnot(int n_qubits, int qc, int qt);
// multi-controlled X or Z; controls are (qubit, required bit) pairs
Eigen::MatrixXcd ref_mcx(int n_qubits, const std::vector<std::pair<int, int>>& controls, int qt);
Eigen::MatrixXcd ref_mcz(int n_qubits, const std::vector<std::pair<int, int>>& controls, int qz);
Eigen::MatrixXcd ref_fredkin(int n_qubits, int qc, int qa, int qb);
Eigen::MatrixXcd dft_matrix(int dim);

// true iff A = e^{i gamma} B entrywise within tol; returns gamma
std::optional<double> equiv_up_to_phase(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B,
                                        double tol = 1e-10);

// common 2x2s
Eigen::Matrix2cd mat_h();
Eigen::Matrix2cd mat_x();
Eigen::Matrix2cd mat_y();
Eigen::Matrix2cd mat_z();
Eigen::Matrix2cd mat_phase(double phi);

}  // namespace qwalk

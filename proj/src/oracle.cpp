#include "oracle.hpp"

#include <cmath>

namespace qwalk {

using std::complex;

Eigen::MatrixXcd instr_matrix(const Instr& in, const Layout& lay) {
    const int D = lay.dim();
    const int pd = lay.pos_dim();
    Eigen::MatrixXcd U = Eigen::MatrixXcd::Zero(D, D);
    int coin;
    std::vector<int> pos;
    if (const Coin* c = std::get_if<Coin>(&in)) {
        for (int w = 0; w < D; ++w) {
            decode_index(w, lay, coin, pos);
            if (c->f.pass(pos)) {
                U(0 * pd + w % pd, w) = c->op.U(0, coin);
                U(1 * pd + w % pd, w) = c->op.U(1, coin);
            } else {
                U(w, w) = 1;
            }
        }
    } else if (const Shift* s = std::get_if<Shift>(&in)) {
        const int sz = lay.graph_sizes[s->level];
        for (int w = 0; w < D; ++w) {
            decode_index(w, lay, coin, pos);
            if ((s->coin == kCoinBoth || s->coin == coin) && s->f.pass(pos)) {
                int m = pos[s->level];
                pos[s->level] = ((m + s->offs[m]) % sz + sz) % sz;
                U(basis_index(coin, pos, lay), w) = 1;
            } else {
                U(w, w) = 1;
            }
        }
    } else if (const PPhase* p = std::get_if<PPhase>(&in)) {
        for (int w = 0; w < D; ++w) {
            decode_index(w, lay, coin, pos);
            U(w, w) = p->f.pass(pos) ? std::exp(complex<double>(0, p->phases[pos[p->level]])) : 1.0;
        }
    } else {
        U = std::exp(complex<double>(0, std::get<GPhase>(in).phi)) * Eigen::MatrixXcd::Identity(D, D);
    }
    return U;
}

Eigen::MatrixXcd program_matrix(const Program& p, const Layout& lay) {
    if (lay.n_qubits > 10) throw std::invalid_argument("dense matrices limited to 10 qubits");
    Eigen::MatrixXcd U = Eigen::MatrixXcd::Identity(lay.dim(), lay.dim());
    for (const Instr& in : p.ins) {
        validate_instr(in, lay);
        U = instr_matrix(in, lay) * U;
    }
    return U;
}

Eigen::MatrixXcd basis_permutation(const Layout& lay) {
    const int D = lay.dim();
    Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(D, D);
    for (int w = 0; w < D; ++w) P(qubit_index_of(w, lay), w) = 1;
    return P;
}

Eigen::MatrixXcd to_qubit_basis(const Eigen::MatrixXcd& U, const Layout& lay) {
    Eigen::MatrixXcd P = basis_permutation(lay);
    return P * U * P.transpose();
}

Eigen::MatrixXcd ref_1q(int n_qubits, int qubit, const Eigen::Matrix2cd& U) {
    const int D = 1 << n_qubits;
    const int shift = n_qubits - qubit;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(D, D);
    for (int x = 0; x < D; ++x) {
        int b = (x >> shift) & 1;
        for (int a = 0; a < 2; ++a) {
            int y = (x & ~(1 << shift)) | (a << shift);
            out(y, x) += U(a, b);
        }
    }
    return out;
}

Eigen::MatrixXcd ref_cnot(int n_qubits, int qc, int qt) {
    return ref_mcx(n_qubits, {{qc, 1}}, qt);
}

Eigen::MatrixXcd ref_mcx(int n_qubits, const std::vector<std::pair<int, int>>& controls, int qt) {
    const int D = 1 << n_qubits;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(D, D);
    for (int x = 0; x < D; ++x) {
        bool act = true;
        for (auto [q, pol] : controls)
            if (((x >> (n_qubits - q)) & 1) != pol) act = false;
        out(act ? x ^ (1 << (n_qubits - qt)) : x, x) = 1;
    }
    return out;
}

Eigen::MatrixXcd ref_mcz(int n_qubits, const std::vector<std::pair<int, int>>& controls, int qz) {
    const int D = 1 << n_qubits;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(D, D);
    for (int x = 0; x < D; ++x) {
        bool act = (x >> (n_qubits - qz)) & 1;
        for (auto [q, pol] : controls)
            if (((x >> (n_qubits - q)) & 1) != pol) act = false;
        if (act) out(x, x) = -1;
    }
    return out;
}

Eigen::MatrixXcd ref_fredkin(int n_qubits, int qc, int qa, int qb) {
    const int D = 1 << n_qubits;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(D, D);
    for (int x = 0; x < D; ++x) {
        int y = x;
        if ((x >> (n_qubits - qc)) & 1) {
            int a = (x >> (n_qubits - qa)) & 1;
            int b = (x >> (n_qubits - qb)) & 1;
            y = x & ~((1 << (n_qubits - qa)) | (1 << (n_qubits - qb)));
            y |= (b << (n_qubits - qa)) | (a << (n_qubits - qb));
        }
        out(y, x) = 1;
    }
    return out;
}

Eigen::MatrixXcd dft_matrix(int dim) {
    Eigen::MatrixXcd F(dim, dim);
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            F(a, b) = std::exp(complex<double>(0, 2 * M_PI * a * b / dim)) / std::sqrt(double(dim));
    return F;
}

std::optional<double> equiv_up_to_phase(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B,
                                        double tol) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw std::invalid_argument("dimension mismatch");
    // phase from the largest entry of B
    Eigen::Index r = 0, c = 0;
    B.cwiseAbs().maxCoeff(&r, &c);
    if (std::abs(B(r, c)) < 1e-14) return std::nullopt;
    complex<double> ratio = A(r, c) / B(r, c);
    if (std::abs(std::abs(ratio) - 1.0) > tol) return std::nullopt;
    double gamma = std::arg(ratio);
    complex<double> ph = std::exp(complex<double>(0, gamma));
    if ((A - ph * B).cwiseAbs().maxCoeff() < tol) return gamma;
    return std::nullopt;
}

Eigen::Matrix2cd mat_h() {
    Eigen::Matrix2cd m;
    m << 1, 1, 1, -1;
    return m / std::sqrt(2.0);
}
Eigen::Matrix2cd mat_x() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}
Eigen::Matrix2cd mat_y() {
    Eigen::Matrix2cd m;
    m << 0, complex<double>(0, -1), complex<double>(0, 1), 0;
    return m;
}
Eigen::Matrix2cd mat_z() {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
}
Eigen::Matrix2cd mat_phase(double phi) {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, std::exp(complex<double>(0, phi));
    return m;
}

}  // namespace qwalk

#include "qec.hpp"

#include <cmath>

namespace qwalk {

using std::complex;

Program bitflip_encode(const Layout& lay) {
    Program p;
    p.name = "bitflip-encode";
    p.append(compile_cnot(1, 2, lay));
    p.append(compile_cnot(1, 3, lay));
    return p;
}

Program bitflip_decode(const Layout& lay) {
    Program p;
    p.name = "bitflip-decode";
    p.append(compile_cnot(1, 2, lay));
    p.append(compile_cnot(1, 3, lay));
    p.append(compile_toffoli(2, 3, 1, lay));
    return p;
}

Program phaseflip_encode(const Layout& lay) {
    Program p = bitflip_encode(lay);
    p.name = "phaseflip-encode";
    for (int q = 1; q <= 3; ++q) p.append(compile_hadamard(q, lay));
    return p;
}

Program phaseflip_decode(const Layout& lay) {
    Program p;
    p.name = "phaseflip-decode";
    for (int q = 1; q <= 3; ++q) p.append(compile_hadamard(q, lay));
    p.append(bitflip_decode(lay));
    return p;
}

// The five-qubit encoder in standard form: one row per stabilizer generator,
// each a Hadamard on its seat qubit followed by the controlled Paulis the
// generator prescribes, plus the sign fixups that keep the code words exact.
Program five_one_encode(const Layout& lay) {
    Program p;
    p.name = "five-one-encode";
    auto phase = [&](int q, double phi) { p.append(compile_phase(q, phi, lay)); };
    auto h = [&](int q) { p.append(compile_hadamard(q, lay)); };
    auto cnot = [&](int q, int t) { p.append(compile_cnot(q, t, lay)); };
    auto cz = [&](int q, int t) { p.append(compile_mcz({{q, 1}}, t, lay)); };
    auto cy = [&](int q, int t) {
        phase(t, -M_PI / 2);
        cnot(q, t);
        phase(t, M_PI / 2);
    };
    phase(1, M_PI);
    h(2);
    phase(2, M_PI / 2);
    cy(2, 1);
    cz(2, 3);
    cz(2, 5);
    h(3);
    cnot(3, 1);
    cz(3, 4);
    cz(3, 5);
    h(4);
    cnot(4, 1);
    cz(4, 2);
    cz(4, 3);
    h(5);
    phase(5, M_PI / 2);
    cy(5, 1);
    cz(5, 2);
    cz(5, 4);
    return p;
}

namespace {

Filter ancilla_filter(int b, const Layout& lay) {
    // b packs the four graph-qubit bits (q2 q3 q4 q5), most significant first
    Filter f;
    f.allowed[0] = {vertex_of_bits({(b >> 3) & 1, (b >> 2) & 1}, 4, lay.conv)};
    f.allowed[1] = {vertex_of_bits({(b >> 1) & 1, b & 1}, 4, lay.conv)};
    return f;
}

// syndrome pattern -> corrective coin operator, derived from the encoder by
// pushing every single-qubit Pauli through encode/reverse-decode
std::map<int, Eigen::Matrix2cd> recovery_table(const Layout& lay) {
    const int D = lay.dim();
    Eigen::MatrixXcd Uenc = program_matrix(five_one_encode(lay), lay);
    Eigen::MatrixXcd Udec = program_matrix(inverse(five_one_encode(lay)), lay);
    Eigen::MatrixXcd P = basis_permutation(lay);

    std::map<int, Eigen::Matrix2cd> table;
    for (int q = 1; q <= 5; ++q) {
        for (char pl : {'I', 'X', 'Y', 'Z'}) {
            Eigen::Matrix2cd E2 = pl == 'X'   ? mat_x()
                                  : pl == 'Y' ? mat_y()
                                  : pl == 'Z' ? mat_z()
                                              : Eigen::Matrix2cd::Identity();
            Eigen::MatrixXcd E = P.transpose() * ref_1q(5, q, E2) * P;
            // push both logical columns through
            Eigen::VectorXcd v[2];
            for (int c = 0; c < 2; ++c) {
                Eigen::VectorXcd e = Eigen::VectorXcd::Zero(D);
                for (int w = 0; w < D; ++w)
                    if (qubit_index_of(w, lay) == (c << 4)) e(w) = 1;
                v[c] = P * (Udec * (E * (Uenc * e)));
            }
            int b = -1;
            for (int x = 0; x < D; ++x)
                if (std::abs(v[0](x)) + std::abs(v[1](x)) > 1e-9) {
                    if (b >= 0 && (x & 15) != b) throw std::logic_error("syndrome not unique");
                    b = x & 15;
                }
            Eigen::Matrix2cd M;
            M << v[0](b), v[1](b), v[0](16 + b), v[1](16 + b);
            auto it = table.find(b);
            if (it == table.end())
                table[b] = M;
            else if (!equiv_up_to_phase(it->second, M))
                throw std::logic_error("conflicting syndrome corrections");
        }
    }
    return table;
}

}  // namespace

Program five_one_recovery(const Layout& lay) {
    Program p;
    p.name = "five-one-recovery";
    for (const auto& [b, M] : recovery_table(lay))
        p.push(Coin{coin_matrix(M.adjoint().eval()), ancilla_filter(b, lay)});
    return p;
}

Program five_one_decode(const Layout& lay) {
    Program p = inverse(five_one_encode(lay));
    p.name = "five-one-decode";
    p.append(five_one_recovery(lay));
    return p;
}

Program pauli_error_program(const PauliError& e, const Layout& lay) {
    Program p;
    p.name = std::string(1, e.kind) + std::to_string(e.qubit);
    switch (e.kind) {
        case 'I':
            break;
        case 'X':
            p.append(compile_1q(e.qubit, mat_x(), lay));
            break;
        case 'Z':
            p.append(compile_phase(e.qubit, M_PI, lay));
            break;
        case 'Y':  // Y = i X Z
            p.push(GPhase{M_PI / 2});
            p.append(compile_phase(e.qubit, M_PI, lay));
            p.append(compile_1q(e.qubit, mat_x(), lay));
            break;
        default:
            throw std::invalid_argument("unknown Pauli kind");
    }
    return p;
}

void inject_pauli_error(WalkState& st, const PauliError& e) {
    apply_program(st, pauli_error_program(e, st.layout));
}

namespace {

// fidelity of the data (coin) qubit against amplitudes a, ancillas traced out
double logical_fidelity(const WalkState& st, const Eigen::Vector2cd& a) {
    const Layout& lay = st.layout;
    const int half = lay.pos_dim();
    Eigen::VectorXcd q = Eigen::VectorXcd::Zero(lay.dim());
    for (int w = 0; w < lay.dim(); ++w) q(qubit_index_of(w, lay)) = st.amp(w);
    Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
    for (int anc = 0; anc < half; ++anc) {
        Eigen::Vector2cd v;
        v << q(anc), q(half + anc);
        rho += v * v.adjoint();
    }
    return std::real((a.adjoint() * rho * a)(0, 0));
}

WalkState logical_input(const Eigen::Vector2cd& a, const Layout& lay) {
    WalkState st{lay, Eigen::VectorXcd::Zero(lay.dim())};
    for (int w = 0; w < lay.dim(); ++w) {
        int q = qubit_index_of(w, lay);
        if (q == 0) st.amp(w) = a(0);
        if (q == lay.pos_dim()) st.amp(w) = a(1);
    }
    return st;
}

}  // namespace

SweepResult sweep_code(const std::string& code, Convention conv) {
    int n;
    Program enc, dec;
    std::string prot;
    if (code == "bitflip") {
        n = 3;
        Layout lay = make_layout(n, conv);
        enc = bitflip_encode(lay);
        dec = bitflip_decode(lay);
        prot = "X";
    } else if (code == "phaseflip") {
        n = 3;
        Layout lay = make_layout(n, conv);
        enc = phaseflip_encode(lay);
        dec = phaseflip_decode(lay);
        prot = "Z";
    } else if (code == "five-one") {
        n = 5;
        Layout lay = make_layout(n, conv);
        enc = five_one_encode(lay);
        dec = five_one_decode(lay);
        prot = "XYZ";
    } else {
        throw std::invalid_argument("unknown code: " + code);
    }
    Layout lay = make_layout(n, conv);

    const complex<double> i1(0, 1);
    const double r = 1 / std::sqrt(2.0);
    std::vector<Eigen::Vector2cd> inputs = {
        {1, 0}, {0, 1}, {r, r}, {r, -r}, {r, r * i1}, {r, -r * i1}};

    SweepResult res{code, {}, 1, true};
    std::vector<PauliError> errors = {{1, 'I'}};
    for (int q = 1; q <= n; ++q)
        for (char k : {'X', 'Y', 'Z'}) errors.push_back({q, k});

    for (const PauliError& e : errors) {
        double worst = 1;
        for (const auto& a : inputs) {
            WalkState st = logical_input(a, lay);
            apply_program(st, enc);
            inject_pauli_error(st, e);
            apply_program(st, dec);
            worst = std::min(worst, logical_fidelity(st, a));
        }
        bool p = e.kind == 'I' || prot.find(e.kind) != std::string::npos;
        res.cases.push_back({e, worst, p});
        if (p) {
            res.worst_protected = std::min(res.worst_protected, worst);
            if (worst < 1 - 1e-9) res.pass = false;
        }
    }
    return res;
}

}  // namespace qwalk

// acceptance gate: one line per criterion, non-zero exit if any fail
#include <chrono>
#include <cstdio>
#include <random>
#include <set>

#include "costs.hpp"
#include "gates_alt.hpp"
#include "../tests/random_programs.hpp"

using namespace qwalk;

namespace {

const double kPi = 3.14159265358979323846;

int g_failures = 0;

void report(int idx, bool ok, const std::string& what) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", idx, what.c_str());
    if (!ok) ++g_failures;
}

bool matches(const Program& p, const Layout& lay, const Eigen::MatrixXcd& ref) {
    return equiv_up_to_phase(to_qubit_basis(program_matrix(p, lay), lay), ref, 1e-10).has_value();
}

void criterion1() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::set<std::string> fired;
    for (int n = 2; n <= 6; ++n) {
        Layout lay = make_layout(n, Convention::Gray);
        for (int q = 1; q <= n; ++q) {
            ok = ok && matches(compile_hadamard(q, lay), lay, ref_1q(n, q, mat_h()));
            for (double phi : {kPi / 4, kPi / 2, kPi})
                ok = ok && matches(compile_phase(q, phi, lay), lay, ref_1q(n, q, mat_phase(phi)));
        }
        for (int qc = 1; qc <= n; ++qc)
            for (int qt = 1; qt <= n; ++qt) {
                if (qc == qt) continue;
                std::string id;
                ok = ok && matches(compile_cnot(qc, qt, lay, &id), lay, ref_cnot(n, qc, qt));
                fired.insert(id);
            }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok = ok && fired.size() == 14 && secs < 60;
    report(1, ok,
           "gate compilation sweep N=2..6, dispatch coverage " + std::to_string(fired.size()) +
               "/14, " + std::to_string(secs) + " s");
}

void criterion2() {
    bool ok = true;
    double theta = 2 * std::asin(1 / std::sqrt(8.0));
    for (int t = 0; t < 8; ++t) {
        std::string target = {char('0' + ((t >> 2) & 1)), char('0' + ((t >> 1) & 1)),
                              char('0' + (t & 1))};
        GroverRun run = run_grover(target, 2, Convention::Gray);
        ok = ok && std::abs(run.history[2] - 0.9453) < 0.0005;
        for (int it : {0, 1}) {
            double want = std::pow(std::sin((2 * it + 1) * theta / 2), 2);
            ok = ok && std::abs(run.history[it] - want) < 1e-10;
        }
    }
    report(2, ok, "search probability 0.9453 after two iterations, closed form at 0 and 1");
}

void criterion3() {
    bool ok = true;
    Eigen::MatrixXcd F = dft_matrix(8);
    Eigen::MatrixXcd Rev = Eigen::MatrixXcd::Zero(8, 8);
    for (int x = 0; x < 8; ++x) Rev(((x & 1) << 2) | (x & 2) | ((x >> 2) & 1), x) = 1;
    for (Convention conv : {Convention::Gray, Convention::Binary}) {
        Layout lay = make_layout(3, conv);
        auto U = to_qubit_basis(program_matrix(compile_qft3(lay), lay), lay);
        ok = ok && equiv_up_to_phase(U, Eigen::MatrixXcd(Rev * F), 1e-10).has_value();
    }
    report(3, ok, "three-qubit Fourier transform equals the DFT under the validated ordering");
}

void criterion4() {
    bool ok = true;
    for (int k = 0; k < 4; ++k) {
        Eigen::Matrix2cd u;
        u << 1, 0, 0, std::exp(std::complex<double>(0, 2 * kPi * k / 4));
        PhaseEstimate est = run_phase_estimation(coin_matrix(u), coin_matrix(mat_x()),
                                                 Convention::Gray);
        ok = ok && std::abs(est.probs[k] - 1) < 1e-10;
    }
    Eigen::Matrix2cd u3;
    u3 << 1, 0, 0, std::exp(std::complex<double>(0, 2 * kPi / 3));
    ok = ok && run_phase_estimation(coin_matrix(u3), coin_matrix(mat_x()), Convention::Gray).best == 1;
    report(4, ok, "phase estimation exact on 2-bit fractions, mode correct for phi=1/3");
}

void criterion5() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    for (const char* code : {"bitflip", "phaseflip", "five-one"}) {
        SweepResult s = sweep_code(code, Convention::Gray);
        double tol = std::string(code) == "five-one" ? 1e-9 : 1e-10;
        ok = ok && s.pass && s.worst_protected > 1 - tol;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok = ok && secs < 120;
    report(5, ok, "error-code sweeps (bit-flip, phase-flip, five-qubit), " +
                      std::to_string(secs) + " s");
}

void criterion6() {
    int met = 0;
    for (const CostTarget& t : cost_targets(Convention::Gray)) met += t.met;
    report(6, met >= 10, "cost targets met: " + std::to_string(met) + "/14");
}

void criterion7() {
    bool ok = true;
    for (int n : {4, 5}) {
        Layout lay = make_layout(n, Convention::Gray);
        auto same = [&](const Program& a, const Program& b) {
            return equiv_up_to_phase(program_matrix(a, lay), program_matrix(b, lay), 1e-10)
                .has_value();
        };
        ok = ok && same(alt_compile_hadamard(4, lay), compile_hadamard(4, lay));
        ok = ok && same(alt_compile_phase(4, kPi / 2, lay), compile_phase(4, kPi / 2, lay));
        ok = ok && same(alt_compile_cnot(2, 4, lay), compile_cnot(2, 4, lay));
        ok = ok && same(alt_compile_cnot(4, 1, lay), compile_cnot(4, 1, lay));
    }
    report(7, ok, "main and hierarchical backends agree on H(4), P(4), CNOT(2,4), CNOT(4,1)");
}

void criterion8() {
    std::mt19937 rng(2024);
    bool ok = true;
    for (int rep = 0; rep < 1000; ++rep) {
        int n = 2 + rep % 3;  // N in {2,3,4}
        Layout lay = make_layout(n, rep % 2 ? Convention::Gray : Convention::Binary);
        Program p = random_program(rng, lay, 50);
        Eigen::VectorXcd v = Eigen::VectorXcd::Random(lay.dim());
        v.normalize();
        WalkState st{lay, v};
        apply_program(st, p);
        ok = ok && std::abs(st.norm() - 1) < 1e-12;
        Eigen::MatrixXcd U = program_matrix(p, lay);
        ok = ok && (U.adjoint() * U - Eigen::MatrixXcd::Identity(lay.dim(), lay.dim()))
                           .cwiseAbs()
                           .maxCoeff() < 1e-11;
    }
    report(8, ok, "1000 random programs preserve norm and compile to unitaries");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
    return g_failures ? 1 : 0;
}

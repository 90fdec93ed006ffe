#include <doctest.h>

#include "qec.hpp"

using namespace qwalk;

TEST_CASE("bit-flip code words") {
    Layout lay = make_layout(3);
    // |+> encodes to (|000> + |111>)/sqrt(2)
    const double r = 1 / std::sqrt(2.0);
    WalkState st{lay, Eigen::VectorXcd::Zero(8)};
    for (int w = 0; w < 8; ++w) {
        int q = qubit_index_of(w, lay);
        if (q == 0 || q == 4) st.amp(w) = r;
    }
    apply_program(st, bitflip_encode(lay));
    auto probs = measure_all(st);
    CHECK(probs.at("000") == doctest::Approx(0.5));
    CHECK(probs.at("111") == doctest::Approx(0.5));
}

TEST_CASE("three-qubit sweeps protect their error family") {
    for (Convention conv : {Convention::Gray, Convention::Binary}) {
        SweepResult bf = sweep_code("bitflip", conv);
        CHECK(bf.pass);
        CHECK(bf.worst_protected == doctest::Approx(1.0).epsilon(1e-10));
        SweepResult pf = sweep_code("phaseflip", conv);
        CHECK(pf.pass);
        // and each code fails on the family it does not protect
        bool bf_breaks = false, pf_breaks = false;
        for (const auto& c : bf.cases)
            if (c.error.kind == 'Z' && c.fidelity < 1 - 1e-6) bf_breaks = true;
        for (const auto& c : pf.cases)
            if (c.error.kind == 'X' && c.fidelity < 1 - 1e-6) pf_breaks = true;
        CHECK(bf_breaks);
        CHECK(pf_breaks);
    }
}

TEST_CASE("five-qubit code corrects every single-qubit error") {
    for (Convention conv : {Convention::Gray, Convention::Binary}) {
        SweepResult s = sweep_code("five-one", conv);
        CHECK(s.pass);
        CHECK(s.cases.size() == 16);  // identity + 15 single-qubit errors
        for (const auto& c : s.cases) {
            CHECK(c.protected_error);
            CHECK(c.fidelity == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("five-qubit encoder produces stabilizer-fixed code words") {
    Layout lay = make_layout(5);
    Eigen::MatrixXcd Uenc = program_matrix(five_one_encode(lay), lay);
    Eigen::MatrixXcd P = basis_permutation(lay);
    // generators of the code, one Pauli per qubit
    const char* gens[4] = {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};
    auto pauli = [&](const std::string& s) {
        Eigen::MatrixXcd M = Eigen::MatrixXcd::Identity(32, 32);
        for (int q = 0; q < 5; ++q) {
            if (s[q] == 'I') continue;
            Eigen::Matrix2cd g = s[q] == 'X' ? mat_x() : s[q] == 'Z' ? mat_z() : mat_y();
            M = ref_1q(5, q + 1, g) * M;
        }
        return M;
    };
    for (int c = 0; c < 2; ++c) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(32);
        for (int w = 0; w < 32; ++w)
            if (qubit_index_of(w, lay) == (c << 4)) e(w) = 1;
        Eigen::VectorXcd code = P * (Uenc * e);
        for (const char* g : gens) CHECK((pauli(g) * code - code).cwiseAbs().maxCoeff() < 1e-9);
        // logical Z eigenvalue distinguishes the code words
        Eigen::VectorXcd z = pauli("ZZZZZ") * code;
        CHECK((z - (c == 0 ? 1.0 : -1.0) * code).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("decode is the exact reverse plus recovery") {
    for (Convention conv : {Convention::Gray, Convention::Binary}) {
        Layout lay = make_layout(5, conv);
        Program round;
        round.append(five_one_encode(lay));
        round.append(five_one_decode(lay));
        Eigen::MatrixXcd U = program_matrix(round, lay);
        // identity on the logical subspace (the syndrome corrections touch
        // states with non-zero ancilla patterns, so only these columns matter)
        for (int c = 0; c < 2; ++c) {
            Eigen::VectorXcd e = Eigen::VectorXcd::Zero(32);
            for (int w = 0; w < 32; ++w)
                if (qubit_index_of(w, lay) == (c << 4)) e(w) = 1;
            Eigen::VectorXcd out = U * e;
            CHECK(std::abs(std::abs(out.dot(e)) - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("error injection") {
    Layout lay = make_layout(3);
    WalkState st = init_state(lay, 0, {0});
    inject_pauli_error(st, {1, 'X'});
    CHECK(measure_all(st).at("100") == doctest::Approx(1.0));
    // Y^2 = -1: amplitudes return up to the global phase
    WalkState st2 = init_state(lay, 0, {0});
    inject_pauli_error(st2, {2, 'Y'});
    inject_pauli_error(st2, {2, 'Y'});
    CHECK(measure_all(st2).at("000") == doctest::Approx(1.0));
    CHECK_THROWS_AS(inject_pauli_error(st2, {2, 'Q'}), std::invalid_argument);
}

TEST_CASE("unknown code name") {
    CHECK_THROWS_AS(sweep_code("steane", Convention::Gray), std::invalid_argument);
}

#include "gates.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace qwalk {

using std::complex;

namespace {

const double kPi = M_PI;

Filter level_filter(int level, std::set<int> allowed) {
    Filter f;
    f.allowed[level] = std::move(allowed);
    return f;
}

// per-level control filter from (qubit, polarity) pairs; coin controls are
// reported separately since they condition the shift instead
struct ControlSplit {
    Filter filt;
    int coin_pol = -1;  // -1 = no coin control
};

ControlSplit control_filter(const Controls& controls, const Layout& lay) {
    ControlSplit out;
    std::map<int, std::vector<std::pair<int, int>>> by_level;  // level -> (bit, pol)
    for (auto [q, pol] : controls) {
        if (pol != 0 && pol != 1) throw std::invalid_argument("control polarity must be 0/1");
        if (q == 1) {
            out.coin_pol = pol;
            continue;
        }
        Seat s = qubit_seat(q, lay);
        by_level[s.level].push_back({s.bit, pol});
    }
    for (auto& [lv, reqs] : by_level) {
        std::set<int> allowed;
        for (int m = 0; m < lay.graph_sizes[lv]; ++m) {
            auto b = position_to_bits(m, lay.graph_sizes[lv], lay.conv);
            bool ok = true;
            for (auto [bit, pol] : reqs)
                if (b[bit] != pol) ok = false;
            if (ok) allowed.insert(m);
        }
        out.filt.allowed[lv] = allowed;
    }
    return out;
}

}  // namespace

Program compile_hadamard(int Q, const Layout& lay) {
    Program p;
    p.name = "H" + std::to_string(Q);
    if (Q == 1) {
        p.push(Coin{coin_su2(0, 0, kPi / 4), {}});
        return p;
    }
    Seat s = qubit_seat(Q, lay);
    int sz = lay.graph_sizes[s.level];
    auto [ones, zeros] = bit_sets(sz, s.bit, lay.conv);
    Shift cx0;
    cx0.level = s.level;
    cx0.coin = 0;
    cx0.offs = flip_offsets(sz, s.bit, lay.conv);
    // 5-layer gadget; the W-operator prose of Eqs. 8-9 is state-wise, this is
    // the unitary realization (fuses to 3 walk steps)
    p.push(Coin{coin_su2(0, 0, kPi / 2), level_filter(s.level, ones)});
    p.push(cx0);
    p.push(Coin{coin_su2(kPi, 0, kPi / 4), level_filter(s.level, zeros)});  // X H X
    p.push(Coin{coin_su2(0, 0, kPi / 4), level_filter(s.level, ones)});
    p.push(cx0);
    p.push(Coin{coin_su2(0, 0, kPi / 2), level_filter(s.level, ones)});
    return p;
}

Program compile_phase(int Q, double phi, const Layout& lay) {
    Program p;
    p.name = "P" + std::to_string(Q);
    if (Q == 1) {
        p.push(Coin{coin_matrix(mat_phase(phi)), {}});
        return p;
    }
    Seat s = qubit_seat(Q, lay);
    int sz = lay.graph_sizes[s.level];
    auto ones = bit_sets(sz, s.bit, lay.conv).first;
    PPhase ph;
    ph.level = s.level;
    ph.phases.assign(sz, 0.0);
    for (int m : ones) ph.phases[m] = phi;
    p.push(ph);
    return p;
}

Program compile_global_phase(double phi) {
    Program p;
    p.push(GPhase{phi});
    return p;
}

Program compile_pauli_z(int Q, const Layout& lay) {
    Program p = compile_phase(Q, kPi, lay);
    p.name = "Z" + std::to_string(Q);
    return p;
}

Program compile_pauli_x(int Q, const Layout& lay) {
    Program p;
    p.name = "X" + std::to_string(Q);
    p.append(compile_hadamard(Q, lay));
    p.append(compile_pauli_z(Q, lay));
    p.append(compile_hadamard(Q, lay));
    return p;
}

Program compile_1q(int Q, const Eigen::Matrix2cd& U, const Layout& lay) {
    Program p;
    if (Q == 1) {
        p.push(Coin{coin_matrix(U), {}});
        return p;
    }
    Seat s = qubit_seat(Q, lay);
    int sz = lay.graph_sizes[s.level];
    auto [ones, zeros] = bit_sets(sz, s.bit, lay.conv);
    bool diag = std::abs(U(0, 1)) < 1e-12 && std::abs(U(1, 0)) < 1e-12;
    bool anti = std::abs(U(0, 0)) < 1e-12 && std::abs(U(1, 1)) < 1e-12;
    if (diag) {
        PPhase ph;
        ph.level = s.level;
        ph.phases.assign(sz, 0.0);
        for (int m : zeros) ph.phases[m] = std::arg(U(0, 0));
        for (int m : ones) ph.phases[m] = std::arg(U(1, 1));
        p.push(ph);
        return p;
    }
    if (anti) {
        Shift flip;
        flip.level = s.level;
        flip.coin = kCoinBoth;
        flip.offs = flip_offsets(sz, s.bit, lay.conv);
        p.push(flip);
        PPhase ph;
        ph.level = s.level;
        ph.phases.assign(sz, 0.0);
        for (int m : zeros) ph.phases[m] = std::arg(U(0, 1));  // |1> amplitude lands on the 0 side
        for (int m : ones) ph.phases[m] = std::arg(U(1, 0));
        bool any = false;
        for (double x : ph.phases)
            if (std::abs(x) > 1e-15) any = true;
        if (any) p.push(ph);
        return p;
    }
    throw std::invalid_argument("general position-qubit unitaries are out of scope (H/P/derived only)");
}

std::string cnot_case(int Qc, int Qt, const Layout& lay) {
    if (Qc == 1) {
        Seat t = qubit_seat(Qt, lay);
        if (lay.graph_sizes[t.level] == 2) return "1a";
        return t.bit == 0 ? "1c" : "1d";
    }
    if (Qt == 1) {
        Seat c = qubit_seat(Qc, lay);
        if (lay.graph_sizes[c.level] == 2) return "1b";
        return c.bit == 0 ? "1e" : "1f";
    }
    Seat c = qubit_seat(Qc, lay), t = qubit_seat(Qt, lay);
    if (c.level == t.level) return c.bit == 1 ? "2a" : "2b";
    if (lay.graph_sizes[t.level] == 2) return c.bit == 0 ? "4a" : "4b";
    if (c.bit == 1 && t.bit == 1) return "3a";
    if (c.bit == 1 && t.bit == 0) return "3b";
    if (c.bit == 0 && t.bit == 0) return "3c";
    return "3d";
}

Program compile_cnot(int Qc, int Qt, const Layout& lay, std::string* case_id) {
    if (Qc == Qt) throw std::invalid_argument("control equals target");
    if (case_id) *case_id = cnot_case(Qc, Qt, lay);
    Program p;
    p.name = "CNOT" + std::to_string(Qc) + std::to_string(Qt);
    if (Qc == 1) {
        Seat t = qubit_seat(Qt, lay);
        Shift s;
        s.level = t.level;
        s.coin = 1;
        s.offs = flip_offsets(lay.graph_sizes[t.level], t.bit, lay.conv);
        p.push(s);
        return p;
    }
    if (Qt == 1) {
        Seat c = qubit_seat(Qc, lay);
        auto ones = bit_sets(lay.graph_sizes[c.level], c.bit, lay.conv).first;
        p.push(Coin{coin_su2(0, 0, kPi / 2), level_filter(c.level, ones)});
        return p;
    }
    Seat c = qubit_seat(Qc, lay), t = qubit_seat(Qt, lay);
    int szt = lay.graph_sizes[t.level];
    auto offs = flip_offsets(szt, t.bit, lay.conv);
    Shift s;
    s.level = t.level;
    s.coin = kCoinBoth;
    if (c.level == t.level) {
        auto ones = bit_sets(szt, c.bit, lay.conv).first;
        s.offs.assign(szt, 0);
        for (int m : ones) s.offs[m] = offs[m];
    } else {
        auto ones = bit_sets(lay.graph_sizes[c.level], c.bit, lay.conv).first;
        s.offs = offs;
        s.f = level_filter(c.level, ones);
    }
    p.push(s);
    return p;
}

GateSpec parse_gate_line(const std::string& line) {
    std::istringstream is(line);
    std::string op;
    is >> op;
    GateSpec g{};
    if (op == "H") {
        g.kind = GateSpec::H;
        is >> g.q1;
    } else if (op == "P") {
        g.kind = GateSpec::Phase;
        is >> g.q1 >> g.phi;
    } else if (op == "GPHASE") {
        g.kind = GateSpec::GlobalPhase;
        is >> g.phi;
    } else if (op == "CNOT") {
        g.kind = GateSpec::CNOT;
        is >> g.q1 >> g.q2;
    } else if (op == "X") {
        g.kind = GateSpec::PauliX;
        is >> g.q1;
    } else if (op == "Z") {
        g.kind = GateSpec::PauliZ;
        is >> g.q1;
    } else {
        throw std::invalid_argument("unknown gate: " + line);
    }
    if (is.fail()) throw std::invalid_argument("bad gate line: " + line);
    return g;
}

Program compile_gate(const GateSpec& g, const Layout& lay) {
    switch (g.kind) {
        case GateSpec::H:
            return compile_hadamard(g.q1, lay);
        case GateSpec::Phase:
            return compile_phase(g.q1, g.phi, lay);
        case GateSpec::GlobalPhase:
            return compile_global_phase(g.phi);
        case GateSpec::CNOT:
            return compile_cnot(g.q1, g.q2, lay);
        case GateSpec::PauliX:
            return compile_pauli_x(g.q1, lay);
        case GateSpec::PauliZ:
            return compile_pauli_z(g.q1, lay);
    }
    throw std::logic_error("unreachable");
}

Program compile_gate_sequence(const std::vector<GateSpec>& gs, const Layout& lay) {
    Program p;
    for (const GateSpec& g : gs) p.append(compile_gate(g, lay));
    return p;
}

Program compile_mcx(const Controls& controls, int Qt, const Layout& lay) {
    ControlSplit cs = control_filter(controls, lay);
    Program p;
    if (Qt == 1) {
        if (cs.coin_pol != -1) throw std::invalid_argument("coin cannot control itself");
        p.push(Coin{coin_su2(0, 0, kPi / 2), cs.filt});
        return p;
    }
    Seat t = qubit_seat(Qt, lay);
    int sz = lay.graph_sizes[t.level];
    Shift s;
    s.level = t.level;
    s.offs = flip_offsets(sz, t.bit, lay.conv);
    auto it = cs.filt.allowed.find(t.level);
    if (it != cs.filt.allowed.end()) {
        // same-level controls fold into the offsets (the filter cannot
        // constrain the shifted level itself)
        std::vector<int> masked(sz, 0);
        for (int m : it->second) masked[m] = s.offs[m];
        s.offs = masked;
        cs.filt.allowed.erase(it);
    }
    s.coin = cs.coin_pol == -1 ? kCoinBoth : cs.coin_pol;
    s.f = cs.filt;
    p.push(s);
    return p;
}

Program compile_cp(const Controls& controls, int Qt, double phi, const Layout& lay) {
    ControlSplit cs = control_filter(controls, lay);
    Program p;
    if (Qt == 1) {
        if (cs.coin_pol != -1) throw std::invalid_argument("coin cannot control itself");
        p.push(Coin{coin_matrix(mat_phase(phi)), cs.filt});
        return p;
    }
    Seat t = qubit_seat(Qt, lay);
    int sz = lay.graph_sizes[t.level];
    std::set<int> allowed;
    for (int m = 0; m < sz; ++m) allowed.insert(m);
    auto it = cs.filt.allowed.find(t.level);
    if (it != cs.filt.allowed.end()) {
        allowed = it->second;
        cs.filt.allowed.erase(it);
    }
    std::set<int> active;
    for (int m : bit_sets(sz, t.bit, lay.conv).first)
        if (allowed.count(m)) active.insert(m);
    if (active.empty()) return p;  // controls exclude the target's 1-subspace
    if (cs.coin_pol != -1) {
        // phase also keyed on the coin: a filtered diagonal coin does it
        Filter f = cs.filt;
        f.allowed[t.level] = active;
        Eigen::Matrix2cd U = Eigen::Matrix2cd::Identity();
        U(cs.coin_pol, cs.coin_pol) = std::exp(complex<double>(0, phi));
        p.push(Coin{coin_matrix(U), f});
        return p;
    }
    PPhase ph;
    ph.level = t.level;
    ph.phases.assign(sz, 0.0);
    for (int m : active) ph.phases[m] = phi;
    ph.f = cs.filt;
    p.push(ph);
    return p;
}

Program compile_mcz(const Controls& controls, int Qz, const Layout& lay) {
    return compile_cp(controls, Qz, kPi, lay);
}

Program compile_toffoli(int c1, int c2, int target, const Layout& lay) {
    return compile_mcx({{c1, 1}, {c2, 1}}, target, lay);
}

Program compile_ccz(int c1, int c2, int qz, const Layout& lay) {
    return compile_mcz({{c1, 1}, {c2, 1}}, qz, lay);
}

Program compile_cccz(const Controls& controls, int qz, const Layout& lay) {
    if (controls.size() != 3) throw std::invalid_argument("CCCZ takes three controls");
    return compile_mcz(controls, qz, lay);
}

// ---------------- literal-reading checks ----------------

namespace {

// the literal branch tables of Eqs. 15-28: per-branch operator kind plus the
// projector vertex sets on the control (i) and target (j) levels
struct LitBranch {
    enum Kind { Id, CoinX, S1, SS } kind;
    int dir = 0;
    std::vector<int> iset;  // empty = no projector on that level
    std::vector<int> jset;
};

struct LitCase {
    const char* id;
    int eq;
    int N, Qc, Qt;
    std::vector<LitBranch> branches;
};

const std::vector<LitCase>& literal_cnot_cases() {
    static const std::vector<LitCase> cases = {
        {"1a", 15, 4, 1, 4, {{LitBranch::S1, 1, {}, {0}}, {LitBranch::S1, -1, {}, {1}}}},
        {"1b", 16, 4, 4, 1, {{LitBranch::Id, 0, {0}, {}}, {LitBranch::CoinX, 0, {1}, {}}}},
        {"1c", 17, 3, 1, 2, {{LitBranch::S1, 1, {}, {1, 2}}, {LitBranch::S1, -1, {}, {0, 3}}}},
        {"1d", 18, 3, 1, 3, {{LitBranch::S1, 1, {}, {0, 3}}, {LitBranch::S1, -1, {}, {1, 2}}}},
        {"1e", 19, 5, 2, 1, {{LitBranch::Id, 0, {0, 1}, {}}, {LitBranch::CoinX, 0, {2, 3}, {}}}},
        {"1f", 20, 3, 3, 1, {{LitBranch::Id, 0, {0, 2}, {}}, {LitBranch::CoinX, 0, {1, 3}, {}}}},
        {"2a", 21, 3, 3, 2,
         {{LitBranch::Id, 0, {}, {0, 1}}, {LitBranch::SS, 1, {}, {2}}, {LitBranch::SS, -1, {}, {3}}}},
        {"2b", 22, 3, 2, 3,
         {{LitBranch::Id, 0, {}, {0, 2}}, {LitBranch::SS, 1, {}, {1}}, {LitBranch::SS, -1, {}, {3}}}},
        {"3a", 23, 5, 3, 5,
         {{LitBranch::Id, 0, {0, 2}, {}},
          {LitBranch::SS, 1, {1, 3}, {0, 3}},
          {LitBranch::SS, -1, {1, 3}, {1, 2}}}},
        {"3b", 24, 5, 3, 4,
         {{LitBranch::Id, 0, {0, 1}, {}},
          {LitBranch::SS, 1, {2, 3}, {0, 3}},
          {LitBranch::SS, -1, {2, 3}, {1, 2}}}},
        {"3c", 25, 5, 2, 4,
         {{LitBranch::Id, 0, {0, 1}, {}},
          {LitBranch::SS, 1, {2, 3}, {1, 2}},
          {LitBranch::SS, -1, {2, 3}, {0, 3}}}},
        {"3d", 26, 5, 2, 5,
         {{LitBranch::Id, 0, {0, 2}, {}},
          {LitBranch::SS, 1, {1, 3}, {1, 2}},
          {LitBranch::SS, -1, {1, 3}, {0, 3}}}},
        {"4a", 27, 4, 2, 4,
         {{LitBranch::Id, 0, {0, 1}, {}}, {LitBranch::SS, 1, {2, 3}, {0}}, {LitBranch::SS, -1, {2, 3}, {1}}}},
        {"4b", 28, 4, 3, 4,
         {{LitBranch::Id, 0, {0, 2}, {}}, {LitBranch::SS, 1, {1, 3}, {0}}, {LitBranch::SS, -1, {1, 3}, {1}}}},
    };
    return cases;
}

bool in_set(int m, const std::vector<int>& s) {
    if (s.empty()) return true;
    for (int v : s)
        if (v == m) return true;
    return false;
}

// build the literal operator column-wise; returns empty optional when the
// branch projectors fail to cover some basis state uniquely
std::optional<Eigen::MatrixXcd> literal_cnot_matrix(const LitCase& lc, const Layout& lay) {
    int ilv = lc.Qc == 1 ? -1 : qubit_seat(lc.Qc, lay).level;
    int jlv = lc.Qt == 1 ? -1 : qubit_seat(lc.Qt, lay).level;
    const int D = lay.dim();
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(D, D);
    int coin;
    std::vector<int> pos;
    for (int w = 0; w < D; ++w) {
        decode_index(w, lay, coin, pos);
        const LitBranch* hit = nullptr;
        for (const LitBranch& b : lc.branches) {
            bool iok = ilv < 0 || in_set(pos[ilv], b.iset);
            bool jok = jlv < 0 || in_set(pos[jlv], b.jset);
            if (iok && jok) {
                if (hit) return std::nullopt;  // overlapping branches
                hit = &b;
            }
        }
        if (!hit) return std::nullopt;
        int k = coin;
        std::vector<int> p2 = pos;
        switch (hit->kind) {
            case LitBranch::Id:
                break;
            case LitBranch::CoinX:
                k = 1 - k;
                break;
            case LitBranch::S1:
                if (k == 1) {
                    int sz = lay.graph_sizes[jlv];
                    p2[jlv] = ((p2[jlv] + hit->dir) % sz + sz) % sz;
                }
                break;
            case LitBranch::SS: {
                int sz = lay.graph_sizes[jlv];
                p2[jlv] = ((p2[jlv] + hit->dir) % sz + sz) % sz;
                break;
            }
        }
        M(basis_index(k, p2, lay), w) += 1;
    }
    return M;
}

bool is_unitary(const Eigen::MatrixXcd& M) {
    Eigen::MatrixXcd d = M.adjoint() * M - Eigen::MatrixXcd::Identity(M.rows(), M.cols());
    return d.cwiseAbs().maxCoeff() < 1e-12;
}

std::string check_both_conventions(
    const std::function<std::optional<Eigen::MatrixXcd>(const Layout&)>& literal,
    const std::function<Eigen::MatrixXcd(const Layout&)>& reference, int N) {
    std::string verdict;
    for (Convention conv : {Convention::Gray, Convention::Binary}) {
        Layout lay = make_layout(N, conv);
        auto M = literal(lay);
        if (!M) continue;
        if (!is_unitary(*M)) continue;
        if (equiv_up_to_phase(to_qubit_basis(*M, lay), reference(lay)))
            verdict += verdict.empty() ? convention_name(conv) : std::string(", ") + convention_name(conv);
    }
    if (verdict.empty()) return "fail";
    return "pass (" + verdict + ")";
}

}  // namespace

std::vector<DiscrepancyRecord> gate_discrepancies() {
    std::vector<DiscrepancyRecord> out;

    // Eqs. 8-9: W-based Hadamard, read state-wise via apply_w
    for (int variant : {2, 3}) {  // H_{2,j}, H_{3,j}
        int Q = variant;          // exemplar on N=3
        auto literal = [variant](const Layout& lay) -> std::optional<Eigen::MatrixXcd> {
            const int D = lay.dim();
            Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(D, D);
            int coin;
            std::vector<int> pos;
            for (int w = 0; w < D; ++w) {
                decode_index(w, lay, coin, pos);
                WalkState st = init_state(lay, coin, pos);
                int m = pos[0];
                int v, dir;
                if (variant == 2) {  // Eq. 8
                    v = (m == 0 || m == 1) ? coin : 1 - coin;
                    dir = (m == 1 || m == 2) ? 1 : -1;
                } else {  // Eq. 9
                    v = (m == 0 || m == 2) ? coin : 1 - coin;
                    dir = (m == 0 || m == 3) ? 1 : -1;
                }
                apply_w(st, 0, v, dir);
                B.col(w) = st.amp;
            }
            Program h1;
            h1.push(Coin{coin_su2(0, 0, kPi / 4), {}});
            return Eigen::MatrixXcd(B * program_matrix(h1, lay));
        };
        auto reference = [Q](const Layout& lay) { return ref_1q(lay.n_qubits, Q, mat_h()); };
        std::string verdict = check_both_conventions(literal, reference, 3);
        out.push_back({"H on qubit " + std::to_string(Q),
                       variant == 2 ? "Eq. 8" : "Eq. 9",
                       verdict,
                       verdict.substr(0, 4) == "pass"
                           ? ""
                           : "state-wise W branches replaced by the filtered coin/shift gadget "
                             "(3 walk steps)",
                       "gray, binary"});
    }

    // Eq. 13: phase vertex sets
    for (int Q : {2, 3}) {
        std::vector<int> lit = Q == 2 ? std::vector<int>{3, 2} : std::vector<int>{3, 1};
        auto literal = [lit](const Layout& lay) -> std::optional<Eigen::MatrixXcd> {
            PPhase ph;
            ph.level = 0;
            ph.phases.assign(4, 0.0);
            for (int m : lit) ph.phases[m] = 0.7;
            return instr_matrix(ph, lay);
        };
        auto reference = [Q](const Layout& lay) {
            return ref_1q(lay.n_qubits, Q, mat_phase(0.7));
        };
        std::string verdict = check_both_conventions(literal, reference, 3);
        out.push_back({"P on qubit " + std::to_string(Q), "Eq. 13", verdict,
                       verdict == "pass (binary)"
                           ? "vertex sets remapped through the Gray bit map under the default convention"
                           : "",
                       "gray, binary"});
    }

    // Eqs. 15-28: CNOT case tables
    for (const LitCase& lc : literal_cnot_cases()) {
        auto literal = [&lc](const Layout& lay) { return literal_cnot_matrix(lc, lay); };
        auto reference = [&lc](const Layout& lay) { return ref_cnot(lay.n_qubits, lc.Qc, lc.Qt); };
        std::string verdict = check_both_conventions(literal, reference, lc.N);
        std::string correction;
        if (verdict == "pass (binary)")
            correction = "vertex sets follow the plain-binary bit map; remapped under the default "
                         "Gray convention";
        if (verdict == "fail") {
            // is the literal operator at least some valid CNOT? Eq. 21/22 swap check
            if (lc.eq == 21 || lc.eq == 22) {
                int oc = lc.eq == 21 ? 2 : 3, ot = lc.eq == 21 ? 3 : 2;
                auto other = [&](const Layout& lay) { return ref_cnot(lay.n_qubits, oc, ot); };
                if (check_both_conventions(literal, other, lc.N) != "fail")
                    correction = "literal operator realizes the sibling case (control/target parities "
                                 "swapped relative to the stated conditions); dispatch follows the text";
            }
            if (correction.empty())
                correction = "uniform-direction branch split replaced by the per-vertex bit-flip "
                             "offsets (literal split is not a permutation)";
        }
        out.push_back({std::string("CNOT case ") + lc.id, "Eq. " + std::to_string(lc.eq), verdict,
                       correction, "gray, binary"});
    }

    return out;
}

}  // namespace qwalk

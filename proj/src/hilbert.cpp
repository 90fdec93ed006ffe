#include "hilbert.hpp"

#include <cmath>

namespace qwalk {

const char* convention_name(Convention c) {
    return c == Convention::Gray ? "gray" : "binary";
}

Convention parse_convention(const std::string& s) {
    if (s == "gray") return Convention::Gray;
    if (s == "binary") return Convention::Binary;
    throw std::invalid_argument("unknown convention: " + s);
}

Layout make_layout(int n_qubits, Convention conv) {
    if (n_qubits < 2) throw std::invalid_argument("need at least 2 qubits");
    Layout lay;
    lay.n_qubits = n_qubits;
    lay.conv = conv;
    if (n_qubits % 2 == 1) {
        lay.graph_sizes.assign((n_qubits - 1) / 2, 4);
    } else {
        lay.graph_sizes.assign((n_qubits - 2) / 2, 4);
        lay.graph_sizes.push_back(2);
    }
    return lay;
}

namespace {
// Gray: walker vertices 0,1,2,3 carry bit pairs 00,01,11,10; a single +-1
// step flips exactly one bit.
constexpr std::array<std::array<int, 2>, 4> kGray = {{{0, 0}, {0, 1}, {1, 1}, {1, 0}}};
constexpr std::array<std::array<int, 2>, 4> kBinary = {{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
}  // namespace

std::vector<int> position_to_bits(int m, int graph_size, Convention conv) {
    if (m < 0 || m >= graph_size) throw std::invalid_argument("vertex out of range");
    if (graph_size == 2) return {m};
    const auto& tab = (conv == Convention::Gray) ? kGray : kBinary;
    return {tab[m][0], tab[m][1]};
}

int vertex_of_bits(const std::vector<int>& bits, int graph_size, Convention conv) {
    if (graph_size == 2) return bits.at(0);
    const auto& tab = (conv == Convention::Gray) ? kGray : kBinary;
    for (int m = 0; m < 4; ++m)
        if (tab[m][0] == bits.at(0) && tab[m][1] == bits.at(1)) return m;
    throw std::invalid_argument("bad bit pair");
}

Seat qubit_seat(int qubit, const Layout& lay) {
    if (qubit < 2 || qubit > lay.n_qubits)
        throw std::invalid_argument("qubit out of range (position qubits start at 2)");
    if (lay.n_qubits % 2 == 0 && qubit == lay.n_qubits)
        return {lay.n_graphs() - 1, 0};
    if (qubit % 2 == 0) return {qubit / 2 - 1, 0};
    return {(qubit - 1) / 2 - 1, 1};
}

int basis_index(int coin, const std::vector<int>& positions, const Layout& lay) {
    if (coin != 0 && coin != 1) throw std::invalid_argument("coin must be 0/1");
    if (static_cast<int>(positions.size()) != lay.n_graphs())
        throw std::invalid_argument("position tuple length mismatch");
    int p = 0;
    for (int g = 0; g < lay.n_graphs(); ++g) {
        if (positions[g] < 0 || positions[g] >= lay.graph_sizes[g])
            throw std::invalid_argument("vertex out of range");
        p = p * lay.graph_sizes[g] + positions[g];
    }
    return coin * lay.pos_dim() + p;
}

void decode_index(int index, const Layout& lay, int& coin, std::vector<int>& positions) {
    coin = index / lay.pos_dim();
    int p = index % lay.pos_dim();
    positions.assign(lay.n_graphs(), 0);
    for (int g = lay.n_graphs() - 1; g >= 0; --g) {
        positions[g] = p % lay.graph_sizes[g];
        p /= lay.graph_sizes[g];
    }
}

int qubit_index_of(int walk_index, const Layout& lay) {
    int coin;
    std::vector<int> pos;
    decode_index(walk_index, lay, coin, pos);
    int q = coin;
    for (int g = 0; g < lay.n_graphs(); ++g)
        for (int b : position_to_bits(pos[g], lay.graph_sizes[g], lay.conv))
            q = q * 2 + b;
    return q;
}

WalkState init_state(const Layout& lay, int coin, const std::vector<int>& positions) {
    WalkState st;
    st.layout = lay;
    st.amp = Eigen::VectorXcd::Zero(lay.dim());
    st.amp[basis_index(coin, positions, lay)] = 1.0;
    return st;
}

std::map<std::string, double> measure_all(const WalkState& st) {
    if (std::abs(st.norm() - 1.0) > 1e-9)
        throw invalid_state("state is not normalized");
    const Layout& lay = st.layout;
    std::map<std::string, double> out;
    for (int i = 0; i < lay.dim(); ++i) {
        double p = std::norm(st.amp[i]);
        if (p == 0.0) continue;
        int q = qubit_index_of(i, lay);
        std::string key(lay.n_qubits, '0');
        for (int b = 0; b < lay.n_qubits; ++b)
            if (q & (1 << (lay.n_qubits - 1 - b))) key[b] = '1';
        out[key] += p;
    }
    return out;
}

}  // namespace qwalk

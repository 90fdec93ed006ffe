#pragma once
// Hilbert-space layout for the walk system: one 2-dim coin plus a chain of
// closed graphs (4-site rings, optionally a trailing 2-site graph).

#include <Eigen/Dense>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwalk {

enum class Convention { Gray, Binary };

const char* convention_name(Convention c);
Convention parse_convention(const std::string& s);

struct Layout {
    int n_qubits = 0;
    std::vector<int> graph_sizes;   // each 4, except optional trailing 2
    Convention conv = Convention::Gray;

    int n_graphs() const { return static_cast<int>(graph_sizes.size()); }
    int dim() const { return 1 << n_qubits; }
    int pos_dim() const { return 1 << (n_qubits - 1); }
};

Layout make_layout(int n_qubits, Convention conv = Convention::Gray);

// vertex <-> bit-pair map for a 4-site graph (single bit for the 2-site tail)
std::vector<int> position_to_bits(int m, int graph_size, Convention conv);
int vertex_of_bits(const std::vector<int>& bits, int graph_size, Convention conv);

// qubit I >= 2 sits on graph level (0-based) with a bit slot: 0 = first
// (even qubit) bit, 1 = second (odd qubit) bit. The tail graph has one slot.
struct Seat {
    int level;
    int bit;
};
Seat qubit_seat(int qubit, const Layout& lay);

int basis_index(int coin, const std::vector<int>& positions, const Layout& lay);
void decode_index(int index, const Layout& lay, int& coin, std::vector<int>& positions);

// walk basis index -> qubit basis index (coin = most significant bit,
// then per-graph bits in graph order)
int qubit_index_of(int walk_index, const Layout& lay);

struct WalkState {
    Layout layout;
    Eigen::VectorXcd amp;

    double norm() const { return amp.norm(); }
};

WalkState init_state(const Layout& lay, int coin, const std::vector<int>& positions);

// probabilities keyed by the N-bit string (coin bit first)
std::map<std::string, double> measure_all(const WalkState& st);

struct invalid_state : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qwalk

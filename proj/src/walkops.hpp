#pragma once
// Primitive walk operators: SU(2) coins, coin-conditioned shifts with
// per-vertex offsets, position phases, global phases, position filters,
// and the paper-style W / sigma helpers. Includes the text serialization.

#include "hilbert.hpp"

#include <optional>
#include <set>
#include <variant>

namespace qwalk {

struct Filter {
    // per-level allowed vertex sets; absent level = all vertices allowed
    std::map<int, std::set<int>> allowed;

    bool empty() const { return allowed.empty(); }
    bool pass(const std::vector<int>& positions) const;
    // conjunction of two filters
    static Filter intersect(const Filter& a, const Filter& b);
};

struct CoinOp {
    Eigen::Matrix2cd U;
    // remembered parameters when built via coin_su2 (for serialization)
    std::optional<std::array<double, 3>> su2;
};

// Eq. 2 coin: [[e^{i xi} cos t, e^{i zeta} sin t], [e^{-i zeta} sin t, -e^{-i xi} cos t]]
CoinOp coin_su2(double xi, double zeta, double theta);
CoinOp coin_matrix(const Eigen::Matrix2cd& U);

struct Coin {
    CoinOp op;
    Filter f;
};

// both = -1 applies to either coin value (an unconditional position permutation)
constexpr int kCoinBoth = -1;

struct Shift {
    int level = 0;
    int coin = 0;              // 0, 1, or kCoinBoth
    std::vector<int> offs;     // per-vertex offset in {-1,0,+1}, length = graph size
    Filter f;
};

struct PPhase {
    int level = 0;
    std::vector<double> phases;  // per-vertex phase, length = graph size
    Filter f;
};

struct GPhase {
    double phi = 0;
};

using Instr = std::variant<Coin, Shift, PPhase, GPhase>;

struct Program {
    std::vector<Instr> ins;
    // optional explicit time-step grouping; -1 = derive from the fusion rules.
    // Same id on consecutive instructions = one declared step.
    std::vector<int> group;
    std::string name;

    void push(Instr i, int g = -1) {
        ins.push_back(std::move(i));
        group.push_back(g);
    }
    void append(const Program& other);
    size_t size() const { return ins.size(); }
};

// uniform shift, dir = +1/-1, paper's S^k_{j,+-}
Shift uniform_shift(const Layout& lay, int level, int coin, int dir, Filter f = {});
// the permutation flipping one qubit bit of a 4-site graph, as offsets
std::vector<int> flip_offsets(int graph_size, int bit, Convention conv);
// vertex sets where the given bit is 1 / 0
std::pair<std::set<int>, std::set<int>> bit_sets(int graph_size, int bit, Convention conv);

void validate_instr(const Instr& in, const Layout& lay);

void apply_instr(WalkState& st, const Instr& in);
void apply_program(WalkState& st, const Program& p);

Program inverse(const Program& p);

// named primitive applications from the paper
void apply_shift(WalkState& st, int level, int coin, int dir, const Filter& f = {});
void apply_coin(WalkState& st, const CoinOp& c, const Filter& f = {});
// Eqs. 5-6: correction keyed on the pre-instruction position tuple
void apply_w(WalkState& st, int level, int variant, int dir);
// Eq. 33: coin sigma_x exactly at vertex m (single-graph layout)
void apply_position_sigma_x(WalkState& st, int m);
// Appendix A sigma pairs: flip one bit of a 4-site graph (bit 0 or 1)
void apply_pair_sigma_x(WalkState& st, int level, int bit);

// line-oriented text form; bit-exact round trip
std::string to_text(const Program& p);
Program from_text(const std::string& text);

}  // namespace qwalk

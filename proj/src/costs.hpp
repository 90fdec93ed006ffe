#pragma once
// Time/space accounting: walk-step counting under the calibrated fusion
// convention, and circuit-model column costs with published gate constants.

#include "algorithms.hpp"
#include "qec.hpp"

namespace qwalk {

// Fusion convention (greedy, left to right):
//  - explicit group metadata wins: a run of the same group id is one step;
//  - runs of diagonal instructions (diagonal coins, position phases, global
//    phases) fuse into one step;
//  - runs of non-diagonal coins with pairwise disjoint filters fuse (they act
//    on disjoint position sectors, i.e. one position-dependent coin);
//  - a fused block absorbs one immediately following shift;
//  - a bare shift is one step.
int walk_time_steps(const Program& p);

struct CircuitGate {
    std::string kind;        // h, p, x1 (elementary X), cnot, cphase, swap,
                             // toffoli, cccnot, ccz, cu, x
    std::vector<int> qubits;
    int column = -1;         // gates sharing a column id run in parallel
};

struct CircuitSpec {
    std::vector<CircuitGate> gates;
};

// published per-gate step constants (elementary h/p/cnot cost 1)
int gate_cost(const std::string& kind);
int circuit_time_steps(const CircuitSpec& spec);

// single walker: always 1 real qubit
int space_complexity(const Layout& lay);

struct CostReport {
    std::string artifact;  // grover, qft, qpe, bitflip
    std::string model;     // walk, circuit
    int time_steps = 0;
    int space = 0;
    std::string notes;
};

CostReport cost_report(const std::string& artifact, const std::string& model, Convention conv);

struct CostTarget {
    std::string name;
    int target = 0;
    int achieved = 0;
    bool met = false;
};

// the fourteen published totals and what the implementation reaches
std::vector<CostTarget> cost_targets(Convention conv);
std::vector<DiscrepancyRecord> cost_discrepancies();

}  // namespace qwalk

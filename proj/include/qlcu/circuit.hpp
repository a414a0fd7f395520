#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlcu/complex_matrix.hpp"

namespace qlcu {

enum class GateKind { Hadamard, SingleQubit, Cnot, ControlledBlock, Block };

// One gate of the IR. Qubit 0 is the least significant, matching basis labels
// |x_{n-1},...,x_0>. Block targets form a contiguous ascending range; the
// block matrix is indexed with targets.front() as its least significant bit.
struct Gate {
    GateKind kind;
    std::vector<std::size_t> controls;
    std::vector<std::size_t> targets;
    ComplexMatrix matrix;  // unused for Hadamard and Cnot
    std::string label;

    static Gate hadamard(std::size_t target);
    static Gate single_qubit(std::size_t target, ComplexMatrix u, std::string label);
    static Gate cnot(std::size_t control, std::size_t target);
    static Gate controlled_block(std::vector<std::size_t> controls, std::size_t first_target,
                                 ComplexMatrix u, std::string label);
    static Gate block(std::size_t first_target, ComplexMatrix u, std::string label);

    bool operator==(const Gate& rhs) const = default;
};

struct Circuit {
    std::size_t num_data_qubits = 0;
    std::size_t num_ancilla_qubits = 0;  // ancillas occupy the most significant positions
    std::vector<Gate> gates;

    std::size_t num_qubits() const { return num_data_qubits + num_ancilla_qubits; }
    // Validates index ranges and block-shape invariants before appending.
    void append(Gate g);

    bool operator==(const Circuit& rhs) const = default;
};

// Sequential composition: b after a. Qubit counts must match.
Circuit compose(const Circuit& a, const Circuit& b);

// Reversed gate order with daggered unitaries. Block labels are preserved:
// a block and its inverse take the same number of elementary gates.
Circuit inverse(const Circuit& c);

struct CostReport {
    long long elementary_count_upper_bound = 0;
    struct Item {
        std::string description;
        long long bound = 0;
    };
    std::vector<Item> per_gate;
    std::vector<std::string> assumptions;
};

struct MissingCostError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Elementary-gate upper bound. Hadamard/SingleQubit/Cnot count 1. An
// uncontrolled Block costs its label's table entry c. A singly controlled
// block costs 6 when it is an elementary single-qubit gate (2x2, c == 1) and
// 14*c otherwise; every additional control doubles the bound.
CostReport cost_report(const Circuit& c, const std::map<std::string, long long>& block_costs);

// Textbook QFT decomposition matching dft_matrix(2^n, normalized):
// Hadamards + controlled phase rotations + final bit-reversal swaps
// (each swap emitted as three CNOTs).
Circuit qft_circuit(std::size_t n);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// JSON schema {version: 1, data_qubits, ancilla_qubits, gates: [...]} with
// matrix entries encoded as hex-float strings for exact round-tripping.
std::string serialize(const Circuit& c);
Circuit parse_circuit(const std::string& text);

std::string encode_hex_double(double x);
double decode_hex_double(const std::string& s);

}  // namespace qlcu

#pragma once

#include <stdexcept>

#include <json.hpp>

#include "qlcu/circuit.hpp"
#include "qlcu/complex_matrix.hpp"

namespace qlcu {

// Simulation size cap; every instance in the catalog needs at most 5 data
// plus 4 ancilla qubits.
inline constexpr std::size_t kMaxSimQubits = 12;

struct SizeCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense amplitude vector over basis |x_{n-1},...,x_0>, qubit 0 least
// significant.
struct StateVector {
    std::size_t num_qubits = 0;
    ComplexVector amplitudes;

    static StateVector basis(std::size_t num_qubits, std::size_t index);
    double squared_norm() const { return qlcu::squared_norm(amplitudes); }
};

// Exact linear action of one gate; amplitude updates run in a fixed index
// order so results are bit-stable across runs.
StateVector apply_gate(const StateVector& s, const Gate& g);

// Applies the circuit to every basis state and collects the columns.
// Throws SizeCapError above kMaxSimQubits.
ComplexMatrix circuit_unitary(const Circuit& c);

struct VerificationReport {
    bool pass = false;
    double max_deviation = 0.0;
    double max_leakage = 0.0;
    double tol = 0.0;
};

nlohmann::json verification_to_json(const VerificationReport& r);

// Checks the realization contract: the circuit maps |0>|x> to |0>(target|x>)
// for every data basis state. Reports the worst deviation on the zero-ancilla
// block and the worst leakage into the nonzero-ancilla subspace.
VerificationReport verify_realizes(const Circuit& c, const ComplexMatrix& target, double tol);

// One intermediate state per gate; the last entry equals applying the whole
// circuit.
std::vector<StateVector> trace_states(const Circuit& c, const StateVector& input);

}  // namespace qlcu

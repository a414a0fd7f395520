#include "qlcu/simulator.hpp"

#include <cmath>

namespace qlcu {

StateVector StateVector::basis(std::size_t num_qubits, std::size_t index) {
    StateVector s;
    s.num_qubits = num_qubits;
    s.amplitudes.assign(std::size_t{1} << num_qubits, cplx{0.0, 0.0});
    s.amplitudes.at(index) = 1.0;
    return s;
}

namespace {

struct GateAction {
    std::vector<std::size_t> controls;
    std::vector<std::size_t> targets;  // contiguous ascending
    const ComplexMatrix* matrix;
    ComplexMatrix storage;  // used when the gate carries no explicit matrix
};

GateAction action_of(const Gate& g) {
    GateAction a;
    a.controls = g.controls;
    a.targets = g.targets;
    switch (g.kind) {
        case GateKind::Hadamard:
            a.storage = mat_hadamard2();
            a.matrix = &a.storage;
            break;
        case GateKind::Cnot:
            a.storage = mat_sigma_x();
            a.matrix = &a.storage;
            break;
        default:
            a.matrix = &g.matrix;
            break;
    }
    return a;
}

}  // namespace

StateVector apply_gate(const StateVector& s, const Gate& g) {
    for (auto q : g.targets) {
        if (q >= s.num_qubits) throw std::invalid_argument("apply_gate: target out of range");
    }
    for (auto q : g.controls) {
        if (q >= s.num_qubits) throw std::invalid_argument("apply_gate: control out of range");
    }
    const GateAction a = action_of(g);
    const std::size_t k = a.targets.size();
    const std::size_t block = std::size_t{1} << k;
    const std::size_t t0 = a.targets.front();
    const std::size_t target_mask = (block - 1) << t0;
    std::size_t control_mask = 0;
    for (auto q : a.controls) control_mask |= std::size_t{1} << q;

    StateVector out = s;
    const std::size_t dim = s.amplitudes.size();
    std::vector<cplx> in(block), res(block);
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & target_mask) continue;  // enumerate indices with zero target bits
        if ((base & control_mask) != control_mask) continue;
        for (std::size_t v = 0; v < block; ++v) in[v] = s.amplitudes[base | (v << t0)];
        for (std::size_t r = 0; r < block; ++r) {
            cplx acc{0.0, 0.0};
            for (std::size_t v = 0; v < block; ++v) acc += (*a.matrix)(r, v) * in[v];
            res[r] = acc;
        }
        for (std::size_t r = 0; r < block; ++r) out.amplitudes[base | (r << t0)] = res[r];
    }
    return out;
}

ComplexMatrix circuit_unitary(const Circuit& c) {
    const std::size_t n = c.num_qubits();
    if (n > kMaxSimQubits) {
        throw SizeCapError("circuit_unitary: " + std::to_string(n) + " qubits exceeds the cap of " +
                           std::to_string(kMaxSimQubits));
    }
    const std::size_t dim = std::size_t{1} << n;
    ComplexMatrix out(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        StateVector s = StateVector::basis(n, col);
        for (const auto& g : c.gates) s = apply_gate(s, g);
        for (std::size_t row = 0; row < dim; ++row) out(row, col) = s.amplitudes[row];
    }
    return out;
}

nlohmann::json verification_to_json(const VerificationReport& r) {
    return nlohmann::json{{"pass", r.pass},
                          {"max_deviation", r.max_deviation},
                          {"max_leakage", r.max_leakage},
                          {"tol", r.tol}};
}

VerificationReport verify_realizes(const Circuit& c, const ComplexMatrix& target, double tol) {
    const std::size_t m = c.num_data_qubits;
    const std::size_t data_dim = std::size_t{1} << m;
    if (target.rows() != data_dim || target.cols() != data_dim) {
        throw std::invalid_argument("verify_realizes: target dimension != 2^(data qubits)");
    }
    if (c.num_qubits() > kMaxSimQubits) {
        throw SizeCapError("verify_realizes: circuit exceeds the simulation cap");
    }
    VerificationReport report;
    report.tol = tol;
    const std::size_t n = c.num_qubits();
    for (std::size_t x = 0; x < data_dim; ++x) {
        StateVector s = StateVector::basis(n, x);  // ancillas in |0>
        for (const auto& g : c.gates) s = apply_gate(s, g);
        for (std::size_t row = 0; row < s.amplitudes.size(); ++row) {
            if (row < data_dim) {
                report.max_deviation =
                    std::max(report.max_deviation, std::abs(s.amplitudes[row] - target(row, x)));
            } else {
                report.max_leakage = std::max(report.max_leakage, std::abs(s.amplitudes[row]));
            }
        }
    }
    report.pass = report.max_deviation <= tol && report.max_leakage <= tol;
    return report;
}

std::vector<StateVector> trace_states(const Circuit& c, const StateVector& input) {
    std::vector<StateVector> out;
    if (c.gates.empty()) {
        out.push_back(input);
        return out;
    }
    out.reserve(c.gates.size());
    StateVector s = input;
    for (const auto& g : c.gates) {
        s = apply_gate(s, g);
        out.push_back(s);
    }
    return out;
}

}  // namespace qlcu

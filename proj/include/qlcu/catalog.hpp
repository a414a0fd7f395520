#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qlcu/circuit.hpp"
#include "qlcu/circulant.hpp"
#include "qlcu/group.hpp"

namespace qlcu {

struct OrderError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DemoCheck {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

// A worked example: representation + coefficients assembled into a circuit,
// the reference matrix it realizes, and the named identities that certify it.
struct DemoBundle {
    std::string name;
    Circuit circuit;
    ComplexMatrix reference;
    std::vector<DemoCheck> checks;

    bool all_pass() const;
    double worst_residual() const;
};

nlohmann::json bundle_report(const DemoBundle& bundle);

// Discrete Hartley transform (1/sqrt(N)) [cas(2 pi k l / N)], cas = cos + sin.
ComplexMatrix hartley_matrix(std::size_t n_dim);

// Hartley pipeline: Fourier block followed by the two-term combination of
// {1, F^2} over Z/2Z with coefficients ((1-i)/2, (1+i)/2). One ancilla.
DemoBundle hartley_demo(std::size_t n_qubits);

// Coefficients a_0..a_3 of the fractional Fourier transform
// F_{N,theta} = a_0 + a_1 F + a_2 F^2 + a_3 F^3 over Z/4Z.
CoefficientVector fractional_coefficients(double theta);

DemoBundle fractional_demo(std::size_t n_qubits, double theta);

// The Pauli family (1, sigma_x, sigma_z, sigma_x sigma_z) as a projective
// representation of Z/2Z x Z/2Z, ordered by address_index.
std::vector<ComplexMatrix> pauli_blocks();
Representation pauli_projective_rep();

// Coefficients of u in the Pauli basis via c_B = (1/2) tr(B^dagger u),
// ordered to match pauli_blocks(). Throws on non-unitary input.
CoefficientVector pauli_decompose(const ComplexMatrix& u);

// Teleportation of |psi> = u|0>: the state-preparation unitary
// [[alpha, conj(beta)], [beta, -conj(alpha)]], its projective circulant C_U,
// the conjugation identities, the staged Prep/Bell/Recover rewrite, and the
// four-branch recovery check.
DemoBundle teleportation_demo(const ComplexMatrix& u);

// Z/2^kZ represented by D(g) = u^g with transversal (2^{k-1}, ..., 2, 1).
// Throws OrderError unless u^(2^k) = I within tol.
Representation cyclic_power_rep(const ComplexMatrix& u, std::size_t k,
                                const std::string& label_base = "U",
                                double tol = kDefaultTol);

}  // namespace qlcu

#pragma once

#include <stdexcept>
#include <utility>

#include "qlcu/circuit.hpp"
#include "qlcu/circulant.hpp"
#include "qlcu/group.hpp"

namespace qlcu {

struct NonUnitaryCirculantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonUnitaryTargetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Transversal case operator (one controlled block per generator, the t_1
// block applied first; ancilla for a_1 is the most significant qubit). The
// simulated unitary is diag(D(g)) in address_index order; for projective
// representations the diagonal blocks are the transversal products
// D(t_n)^{a_n} ... D(t_1)^{a_1}.
Circuit case_operator_circuit(const Representation& rep);

// The diag(D(g)) matrix the case operator realizes, assembled directly.
ComplexMatrix case_operator_matrix(const Representation& rep);

// Generic linear-combination circuit for an ordinary representation:
// Hadamard layer, case operator, circulant block on the ancillas, inverse
// case operator, Hadamard layer. Realizes sum alpha_g D(g) with the ancillas
// returned to |0>. Preconditions (checked): the group circulant and the
// combination are unitary.
Circuit lcu_circuit(const Representation& rep, const CoefficientVector& coeffs,
                    double tol = kDefaultTol);

// Projective variant: the case operator applies the literal transversal
// products of the generator blocks and the middle gate is the projective
// circulant of the induced factor set, with coefficients rescaled onto the
// transversal products. For groups of exponent two the circuit reuses the
// case operator on both sides (the paper's teleportation wiring); otherwise
// the right half is the exact inverse and the circulant rows carry the
// compensating phases omega(g, g^{-1}).
Circuit projective_lcu_circuit(const FiniteTwoGroup& group,
                               const std::vector<ComplexMatrix>& blocks,
                               const ComplexVector& alpha, double tol = kDefaultTol,
                               std::vector<std::string> labels = {});

// Both sides of the cyclic diagonalization identity
// DFT^{-1} diag(phases) DFT = circ(beta), beta = DFT * phases / 2^k,
// under the unnormalized transform convention.
std::pair<ComplexMatrix, ComplexMatrix> kitaev_circulant_identity(std::size_t k,
                                                                  const ComplexVector& diag_phases);

// Rewrites the ancilla circulant of a cyclic-group LCU circuit through the
// diagonalization identity: QFT^{-1}, diagonal block, QFT.
Circuit cyclic_circulant_rewrite(std::size_t k, const ComplexVector& alpha);

}  // namespace qlcu

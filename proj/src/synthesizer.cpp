#include "qlcu/synthesizer.hpp"

#include <cmath>

#include "qlcu/simulator.hpp"

namespace qlcu {

namespace {

std::size_t log2_exact(std::size_t dim, const char* what) {
    std::size_t m = 0;
    while ((std::size_t{1} << m) < dim) ++m;
    if ((std::size_t{1} << m) != dim) {
        throw std::invalid_argument(std::string(what) + ": dimension must be a power of two");
    }
    return m;
}

// unit scalar phi with lhs = phi * ref, pivoting on the largest entry of ref
cplx recover_phase(const ComplexMatrix& lhs, const ComplexMatrix& ref, double tol,
                   const char* what) {
    std::size_t piv = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < ref.entries().size(); ++i) {
        const double m = std::abs(ref.entries()[i]);
        if (m > best) {
            best = m;
            piv = i;
        }
    }
    if (best <= tol) throw PhaseRecoveryError(std::string(what) + ": zero reference block");
    const cplx phi = lhs.entries()[piv] / ref.entries()[piv];
    if (std::abs(std::abs(phi) - 1.0) > tol || max_abs_diff(lhs, ref.scaled(phi)) > tol) {
        throw PhaseRecoveryError(std::string(what) +
                                 ": block is not a unit scalar multiple of the reference");
    }
    return phi;
}

Circuit case_operator_from_parts(const FiniteTwoGroup& group,
                                 const std::vector<ComplexMatrix>& generator_images,
                                 const std::vector<std::string>& generator_labels) {
    const std::size_t n = group.n_generators;
    const std::size_t m = log2_exact(generator_images.at(0).rows(), "case_operator_circuit");
    Circuit c;
    c.num_data_qubits = m;
    c.num_ancilla_qubits = n;
    // t_1 first; its ancilla is the most significant qubit
    for (std::size_t pos = 0; pos < n; ++pos) {
        const std::size_t ancilla = m + n - 1 - pos;
        c.append(Gate::controlled_block({ancilla}, 0, generator_images[pos],
                                        generator_labels[pos]));
    }
    return c;
}

Circuit hadamard_layer(std::size_t m, std::size_t n) {
    Circuit c;
    c.num_data_qubits = m;
    c.num_ancilla_qubits = n;
    for (std::size_t i = 0; i < n; ++i) c.append(Gate::hadamard(m + i));
    return c;
}

}  // namespace

Circuit case_operator_circuit(const Representation& rep) {
    const std::size_t n = rep.group.n_generators;
    std::vector<ComplexMatrix> gens(n);
    std::vector<std::string> labels(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        const std::size_t idx = address_index(unit_address(n, pos));
        gens[pos] = rep.image_index(idx);
        labels[pos] = rep.labels.empty() ? "D(t" + std::to_string(pos + 1) + ")"
                                         : rep.labels[idx];
    }
    return case_operator_from_parts(rep.group, gens, labels);
}

ComplexMatrix case_operator_matrix(const Representation& rep) {
    const std::size_t n = rep.group.n_generators;
    std::vector<ComplexMatrix> gens(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        gens[pos] = rep.image_index(address_index(unit_address(n, pos)));
    }
    const auto blocks = transversal_blocks(rep.group, gens);
    const std::size_t bd = rep.block_dim;
    ComplexMatrix out(bd * blocks.size(), bd * blocks.size());
    for (std::size_t g = 0; g < blocks.size(); ++g) {
        for (std::size_t i = 0; i < bd; ++i) {
            for (std::size_t j = 0; j < bd; ++j) {
                out(g * bd + i, g * bd + j) = blocks[g](i, j);
            }
        }
    }
    return out;
}

Circuit lcu_circuit(const Representation& rep, const CoefficientVector& coeffs, double tol) {
    if (!rep.ordinary()) {
        throw std::invalid_argument("lcu_circuit: representation must be ordinary "
                                    "(use projective_lcu_circuit)");
    }
    const ComplexMatrix target = reconstruct(rep, coeffs.alpha);
    if (!is_unitary(target, tol)) {
        throw NonUnitaryTargetError("lcu_circuit: sum alpha_g D(g) is not unitary");
    }
    const ComplexMatrix circ = group_circulant(rep.group, coeffs.alpha);
    if (!is_unitary(circ, tol)) {
        throw NonUnitaryCirculantError("lcu_circuit: group circulant of alpha is not unitary");
    }
    const Circuit case_op = case_operator_circuit(rep);
    const std::size_t m = case_op.num_data_qubits;

    Circuit middle;
    middle.num_data_qubits = m;
    middle.num_ancilla_qubits = case_op.num_ancilla_qubits;
    middle.append(Gate::block(m, circ, "C_A"));

    Circuit out = hadamard_layer(m, case_op.num_ancilla_qubits);
    out = compose(out, case_op);
    out = compose(out, middle);
    out = compose(out, inverse(case_op));
    out = compose(out, hadamard_layer(m, case_op.num_ancilla_qubits));
    return out;
}

Circuit projective_lcu_circuit(const FiniteTwoGroup& group,
                               const std::vector<ComplexMatrix>& blocks,
                               const ComplexVector& alpha, double tol,
                               std::vector<std::string> labels) {
    const std::size_t d = group.order();
    const std::size_t n = group.n_generators;
    if (blocks.size() != d) {
        throw std::invalid_argument("projective_lcu_circuit: need one block per group element");
    }
    if (alpha.size() != d) {
        throw std::invalid_argument("projective_lcu_circuit: |alpha| != |G|");
    }

    // the target to realize, in terms of the caller's blocks
    const std::size_t bd = blocks[0].rows();
    ComplexMatrix target(bd, bd);
    for (std::size_t g = 0; g < d; ++g) target = target + blocks[g].scaled(alpha[g]);
    if (!is_unitary(target, tol)) {
        throw NonUnitaryTargetError(
            "projective_lcu_circuit: sum alpha_g blocks(g) is not unitary");
    }

    std::vector<ComplexMatrix> gens(n);
    std::vector<std::string> gen_labels(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        const std::size_t idx = address_index(unit_address(n, pos));
        gens[pos] = blocks[idx];
        gen_labels[pos] = labels.empty() ? "D(t" + std::to_string(pos + 1) + ")" : labels[idx];
    }

    // the case operator applies the transversal products, which may differ
    // from the caller's blocks by unit phases; fold those into the
    // coefficients
    const auto tprod = transversal_blocks(group, gens);
    ComplexVector rescaled(d);
    for (std::size_t g = 0; g < d; ++g) {
        const cplx phi = recover_phase(tprod[g], blocks[g], tol, "projective_lcu_circuit");
        rescaled[g] = alpha[g] / phi;
    }
    const FactorSet omega = induced_factor_set(group, tprod, tol);

    bool exponent_two = true;
    for (std::size_t g = 0; g < d; ++g) {
        if (group.inv_index(g) != g) exponent_two = false;
    }

    ComplexMatrix circ = projective_group_circulant(group, omega, rescaled);
    if (!exponent_two) {
        // with an exact inverse on the right the circulant rows need the
        // compensating phases omega(g, g^{-1})
        for (std::size_t g = 0; g < d; ++g) {
            const cplx row_phase = omega.omega_index(g, group.inv_index(g));
            for (std::size_t h = 0; h < d; ++h) circ(g, h) *= row_phase;
        }
    }
    if (!is_unitary(circ, tol)) {
        throw NonUnitaryCirculantError(
            "projective_lcu_circuit: projective circulant of alpha is not unitary");
    }

    const Circuit case_op = case_operator_from_parts(group, gens, gen_labels);
    const std::size_t m = case_op.num_data_qubits;

    Circuit middle;
    middle.num_data_qubits = m;
    middle.num_ancilla_qubits = n;
    middle.append(Gate::block(m, circ, "C_A"));

    Circuit out = hadamard_layer(m, n);
    out = compose(out, case_op);
    out = compose(out, middle);
    out = compose(out, exponent_two ? case_op : inverse(case_op));
    out = compose(out, hadamard_layer(m, n));
    return out;
}

std::pair<ComplexMatrix, ComplexMatrix> kitaev_circulant_identity(
    std::size_t k, const ComplexVector& diag_phases) {
    const std::size_t dim = std::size_t{1} << k;
    if (diag_phases.size() != dim) {
        throw std::invalid_argument("kitaev_circulant_identity: need 2^k phases");
    }
    const ComplexMatrix f = dft_matrix(dim, /*normalized=*/false);
    // F F^dagger = N I, so F^{-1} = F^dagger / N
    const ComplexMatrix f_inv = f.dagger().scaled(1.0 / static_cast<double>(dim));
    ComplexMatrix diag(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) diag(i, i) = diag_phases[i];
    const ComplexMatrix lhs = f_inv * diag * f;

    ComplexVector beta = f.apply(diag_phases);
    for (auto& b : beta) b /= static_cast<double>(dim);
    const ComplexMatrix rhs = group_circulant(make_cyclic_group(k), beta);
    return {lhs, rhs};
}

Circuit cyclic_circulant_rewrite(std::size_t k, const ComplexVector& alpha) {
    const std::size_t dim = std::size_t{1} << k;
    if (alpha.size() != dim) {
        throw std::invalid_argument("cyclic_circulant_rewrite: need 2^k coefficients");
    }
    // phases = F^dagger alpha inverts beta = F phases / 2^k
    const ComplexVector phases = dft_matrix(dim, /*normalized=*/false).dagger().apply(alpha);
    ComplexMatrix diag(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (std::abs(std::abs(phases[i]) - 1.0) > 1e-9) {
            throw NonUnitaryCirculantError(
                "cyclic_circulant_rewrite: circulant spectrum is not unit-modulus");
        }
        diag(i, i) = phases[i];
    }
    const Circuit qft = qft_circuit(k);
    Circuit middle;
    middle.num_data_qubits = k;
    middle.append(Gate::block(0, diag, "diag"));
    return compose(compose(qft, middle), inverse(qft));
}

}  // namespace qlcu

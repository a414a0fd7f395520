// Acceptance suite: one pass/fail line per criterion, each pinned to its
// stated tolerance. Exits with the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qlcu/catalog.hpp"
#include "qlcu/circulant.hpp"
#include "qlcu/simulator.hpp"
#include "qlcu/synthesizer.hpp"

using namespace qlcu;

namespace {

int g_failures = 0;

void run_criterion(int number, const std::string& name, const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    try {
        body();
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::printf("[PASS] criterion %2d: %s (%lld ms)\n", number, name.c_str(),
                    static_cast<long long>(ms));
    } catch (const std::exception& e) {
        ++g_failures;
        std::printf("[FAIL] criterion %2d: %s: %s\n", number, name.c_str(), e.what());
    }
}

void require(bool cond, const std::string& message) {
    if (!cond) throw std::runtime_error(message);
}

void require_le(double value, double bound, const std::string& what) {
    if (!(value <= bound)) {
        throw std::runtime_error(what + " = " + std::to_string(value) + " exceeds " +
                                 std::to_string(bound));
    }
}

double elapsed_seconds(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main() {
    // 1. Hartley realization for n in {2,3,4} at 1e-9, under 1 s each
    run_criterion(1, "hartley realization (n = 2, 3, 4)", [] {
        for (std::size_t n = 2; n <= 4; ++n) {
            const auto start = std::chrono::steady_clock::now();
            const DemoBundle bundle = hartley_demo(n);
            const auto report = verify_realizes(bundle.circuit, hartley_matrix(1u << n), 1e-9);
            require_le(report.max_deviation, 1e-9, "max deviation (n=" + std::to_string(n) + ")");
            require_le(report.max_leakage, 1e-9, "ancilla leakage (n=" + std::to_string(n) + ")");
            require_le(elapsed_seconds(start), 1.0, "runtime seconds (n=" + std::to_string(n) + ")");
        }
    });

    // 2. A_N = ((1-i)/2) F_N + ((1+i)/2) F_N^3 at 1e-12 for N in {8,16,32}
    run_criterion(2, "Hartley linear-combination identity (N = 8, 16, 32)", [] {
        for (std::size_t n_dim : {8u, 16u, 32u}) {
            const ComplexMatrix f = dft_matrix(n_dim);
            const ComplexMatrix combo =
                f.scaled(cplx{0.5, -0.5}) + matrix_power(f, 3).scaled(cplx{0.5, 0.5});
            require_le(max_abs_diff(hartley_matrix(n_dim), combo), 1e-12,
                       "identity residual at N=" + std::to_string(n_dim));
        }
    });

    // 3. Key Lemma suite: 50 unitary targets in the span of F-powers, plus
    //    the dependent counterexample
    run_criterion(3, "key lemma suite (F-power representations + counterexample)", [] {
        auto rng = oracle::make_rng(101);
        std::uniform_real_distribution<double> uni(0.0, 2.0 * std::numbers::pi);
        for (std::size_t n_dim : {8u, 16u}) {
            const Representation rep =
                cyclic_power_rep(dft_matrix(n_dim), 2, "F_" + std::to_string(n_dim));
            const ComplexMatrix chi = character_table(rep.group);
            for (int trial = 0; trial < 50; ++trial) {
                ComplexVector ahat(4);
                for (auto& e : ahat) {
                    const double t = uni(rng);
                    e = cplx{std::cos(t), std::sin(t)};
                }
                ComplexVector alpha(4, cplx{0, 0});
                for (std::size_t g = 0; g < 4; ++g) {
                    for (std::size_t c = 0; c < 4; ++c) alpha[g] += ahat[c] * std::conj(chi(c, g));
                    alpha[g] /= 4.0;
                }
                const ComplexMatrix target = reconstruct(rep, alpha);
                require(is_unitary(target, 1e-9), "constructed target must be unitary");
                const CoefficientVector solved = solve_coefficients(target, rep, 1e-9);
                require(is_unitary(group_circulant(solved), 1e-9),
                        "group circulant must be unitary for targets in the span");
            }
        }
        // dependent counterexample: D == 1 over Z/2Z, alpha = (1/2, 1/2)
        const FiniteTwoGroup z2 = make_cyclic_group(1);
        const ComplexMatrix c = group_circulant(z2, {cplx{0.5, 0}, cplx{0.5, 0}});
        const double gap = max_abs_diff(c.dagger() * c, ComplexMatrix::identity(2));
        require(gap >= 0.4, "dependent counterexample must miss unitarity by at least 0.4");
    });

    // 4. case-operator correctness for Z/4Z, Z/8Z and Pauli bundles at 1e-10,
    //    and the 14 n c_T cost bound
    run_criterion(4, "case operator diag structure and 14 n c_T bound", [] {
        const Representation z4 = cyclic_power_rep(dft_matrix(8), 2, "F_8");
        ComplexMatrix t8(2, 2);
        t8(0, 0) = 1.0;
        t8(1, 1) = cplx{std::cos(std::numbers::pi / 4), std::sin(std::numbers::pi / 4)};
        const Representation z8 = cyclic_power_rep(t8, 3, "T");
        const Representation pauli = pauli_projective_rep();

        for (const Representation* rep : {&z4, &z8, &pauli}) {
            const ComplexMatrix w = circuit_unitary(case_operator_circuit(*rep));
            std::vector<ComplexMatrix> blocks;
            for (std::size_t g = 0; g < rep->group.order(); ++g) {
                blocks.push_back(rep->image_index(g));
            }
            require_le(max_abs_diff(w, oracle::block_diagonal(blocks)), 1e-10,
                       "case operator deviation from diag(D(g))");

            const long long c_t = 3;
            std::map<std::string, long long> costs;
            for (const auto& l : rep->labels) costs[l] = c_t;
            const auto report = cost_report(case_operator_circuit(*rep), costs);
            const long long expected =
                14 * static_cast<long long>(rep->group.n_generators) * c_t;
            require(report.elementary_count_upper_bound == expected,
                    "case operator bound must equal 14 n c_T");
        }
    });

    // 5. block structure of the conjugated circulant, exhaustively for |G| = 4
    run_criterion(5, "conjugated circulant block identity (|G| = 4, all 16 blocks)", [] {
        auto rng = oracle::make_rng(102);
        std::normal_distribution<double> gauss;
        const Representation rep = cyclic_power_rep(dft_matrix(4), 2, "F_4");
        const std::size_t bd = rep.block_dim;
        ComplexVector alpha(4);
        for (auto& e : alpha) e = cplx{gauss(rng), gauss(rng)};

        const Circuit case_op = case_operator_circuit(rep);
        Circuit middle;
        middle.num_data_qubits = case_op.num_data_qubits;
        middle.num_ancilla_qubits = case_op.num_ancilla_qubits;
        middle.append(Gate::block(case_op.num_data_qubits, group_circulant(rep.group, alpha),
                                  "C_A"));
        const ComplexMatrix w = circuit_unitary(compose(compose(case_op, middle),
                                                        inverse(case_op)));
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                const std::size_t k = rep.group.mul_index(rep.group.inv_index(i), j);
                const ComplexMatrix expected = rep.image_index(k).scaled(alpha[k]);
                double worst = 0.0;
                for (std::size_t r = 0; r < bd; ++r) {
                    for (std::size_t c = 0; c < bd; ++c) {
                        worst = std::max(worst,
                                         std::abs(w(i * bd + r, j * bd + c) - expected(r, c)));
                    }
                }
                require_le(worst, 1e-9, "block (" + std::to_string(i) + "," + std::to_string(j) +
                                            ") deviation");
            }
        }
    });

    // 6. unitary trick on dependent abelian representations
    run_criterion(6, "unitarization (dependent Z/2Z instance + 20 random abelian)", [] {
        Representation dep;
        dep.group = make_cyclic_group(1);
        dep.block_dim = 2;
        dep.images = {ComplexMatrix::identity(2), ComplexMatrix::identity(2)};
        dep.labels = {"1", "1"};
        dep.factor_set = FactorSet::trivial(dep.group);
        const CoefficientVector fixed =
            unitarize_coefficients(ComplexMatrix::identity(2), dep, 1e-9);
        require_le(std::abs(fixed.alpha[0] - cplx{1, 0}), 1e-12, "alpha_0 distance from 1");
        require_le(std::abs(fixed.alpha[1]), 1e-12, "alpha_1 distance from 0");

        auto rng = oracle::make_rng(103);
        std::uniform_int_distribution<int> pick_factor(1, 2);
        std::uniform_int_distribution<int> pick_nf(1, 2);
        std::uniform_real_distribution<double> uni(0.0, 2.0 * std::numbers::pi);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<FiniteTwoGroup> factors;
            const int nf = pick_nf(rng);
            for (int i = 0; i < nf; ++i) factors.push_back(make_cyclic_group(pick_factor(rng)));
            if (direct_product(factors).order() < 4) {
                factors.push_back(make_cyclic_group(pick_factor(rng)));
            }
            const FiniteTwoGroup group = direct_product(factors);
            const std::size_t d = group.order();
            const ComplexMatrix chi = character_table(group);

            // dependent representation: 4x4 blocks from a random character
            // multiset, conjugated; at most 3 distinct characters over a
            // group of order >= 4 keeps the images linearly dependent
            const std::size_t bd = 4;
            std::uniform_int_distribution<std::size_t> pick_char(0, d - 1);
            std::vector<std::size_t> occ(bd);
            for (auto& c : occ) c = pick_char(rng);
            occ[1] = occ[0];
            const ComplexMatrix v = oracle::random_unitary(bd, rng);
            Representation rep;
            rep.group = group;
            rep.block_dim = bd;
            rep.factor_set = FactorSet::trivial(group);
            for (std::size_t g = 0; g < d; ++g) {
                ComplexMatrix diag(bd, bd);
                for (std::size_t i = 0; i < bd; ++i) diag(i, i) = chi(occ[i], g);
                rep.images.push_back(v * diag * v.dagger());
                rep.labels.push_back("D" + std::to_string(g));
            }

            // unitary target in the span: unit phases constant per character
            std::map<std::size_t, cplx> phase;
            for (auto c : occ) {
                if (!phase.count(c)) {
                    const double t = uni(rng);
                    phase[c] = cplx{std::cos(t), std::sin(t)};
                }
            }
            ComplexMatrix diag(bd, bd);
            for (std::size_t i = 0; i < bd; ++i) diag(i, i) = phase[occ[i]];
            const ComplexMatrix target = v * diag * v.dagger();

            const CoefficientVector coeffs = unitarize_coefficients(target, rep, 1e-9);
            require_le(max_abs_diff(reconstruct(rep, coeffs.alpha), target), 1e-9,
                       "reconstruction residual");
            require(is_unitary(group_circulant(coeffs), 1e-9),
                    "unitarized circulant must be unitary");
        }
    });

    // 7. projective suite: 100 random single-qubit unitaries
    run_criterion(7, "projective suite (circulant unitarity, realization, cocycle law)", [] {
        auto rng = oracle::make_rng(104);
        const FiniteTwoGroup group = make_elementary_abelian(2);
        const auto blocks = pauli_blocks();
        const FactorSet omega = induced_factor_set(group, blocks);
        require(validate_factor_set(group, omega, 1e-12).ok(),
                "induced factor set must satisfy the cocycle law on all 64 triples");
        for (int trial = 0; trial < 100; ++trial) {
            const ComplexMatrix u = oracle::random_unitary(2, rng);
            const CoefficientVector coeffs = pauli_decompose(u);
            require(is_unitary(projective_group_circulant(group, omega, coeffs.alpha), 1e-9),
                    "projective circulant must be unitary");
            const Circuit c = projective_lcu_circuit(group, blocks, coeffs.alpha);
            const auto report = verify_realizes(c, u, 1e-9);
            require(report.pass, "projective circuit must realize the unitary at 1e-9");
        }
    });

    // 8. Kitaev diagonalization identity, k in 1..4, 50 random phase vectors
    run_criterion(8, "cyclic diagonalization identity (k = 1..4, 50 trials each)", [] {
        const auto start = std::chrono::steady_clock::now();
        auto rng = oracle::make_rng(105);
        std::uniform_real_distribution<double> uni(0.0, 2.0 * std::numbers::pi);
        for (std::size_t k = 1; k <= 4; ++k) {
            for (int trial = 0; trial < 50; ++trial) {
                ComplexVector phases(std::size_t{1} << k);
                for (auto& p : phases) {
                    const double t = uni(rng);
                    p = cplx{std::cos(t), std::sin(t)};
                }
                const auto [lhs, rhs] = kitaev_circulant_identity(k, phases);
                require_le(max_abs_diff(lhs, rhs), 1e-10,
                           "identity residual at k=" + std::to_string(k));
            }
        }
        require_le(elapsed_seconds(start), 5.0, "total runtime seconds");
    });

    // 9. fractional Fourier: endpoints, additivity, diagonal form, realization
    run_criterion(9, "fractional Fourier transforms", [] {
        const std::size_t n_dim = 8;
        const ComplexMatrix f = dft_matrix(n_dim);
        const Representation rep = cyclic_power_rep(f, 2, "F_8");

        require_le(max_abs_diff(reconstruct(rep, fractional_coefficients(0.0).alpha),
                                ComplexMatrix::identity(n_dim)),
                   1e-12, "endpoint theta = 0");
        require_le(max_abs_diff(
                       reconstruct(rep, fractional_coefficients(std::numbers::pi / 2).alpha), f),
                   1e-12, "endpoint theta = pi/2");

        auto rng = oracle::make_rng(106);
        std::uniform_real_distribution<double> uni(0.0, 2.0 * std::numbers::pi);
        for (int trial = 0; trial < 20; ++trial) {
            const double t1 = uni(rng), t2 = uni(rng);
            const ComplexMatrix lhs = reconstruct(rep, fractional_coefficients(t1).alpha) *
                                      reconstruct(rep, fractional_coefficients(t2).alpha);
            require_le(max_abs_diff(lhs, reconstruct(rep, fractional_coefficients(t1 + t2).alpha)),
                       1e-10, "additivity residual");
        }

        const ComplexMatrix f4 = dft_matrix(4, /*normalized=*/false);
        const ComplexMatrix f4_inv = f4.dagger().scaled(0.25);
        for (const double theta : {0.3, 1.0, std::numbers::pi / 2}) {
            ComplexMatrix diag(4, 4);
            diag(0, 0) = 1.0;
            diag(1, 1) = cplx{std::cos(theta), -std::sin(theta)};
            diag(2, 2) = cplx{std::cos(2 * theta), std::sin(2 * theta)};
            diag(3, 3) = cplx{std::cos(theta), std::sin(theta)};
            require_le(max_abs_diff(group_circulant(fractional_coefficients(theta)),
                                    f4_inv * diag * f4),
                       1e-10, "diagonal-form residual at theta=" + std::to_string(theta));
        }

        const DemoBundle bundle = fractional_demo(3, 0.3);
        const auto report = verify_realizes(bundle.circuit, bundle.reference, 1e-9);
        require(report.pass, "fractional circuit must realize F_{8,0.3} at 1e-9");
    });

    // 10. teleportation identities and branch recovery for 20 random unitaries
    run_criterion(10, "teleportation identities and four-branch recovery", [] {
        auto rng = oracle::make_rng(107);
        for (int trial = 0; trial < 20; ++trial) {
            const DemoBundle bundle = teleportation_demo(oracle::random_prep_unitary(rng));
            for (const auto& check : bundle.checks) {
                if (check.name == "hadamard_conjugation" || check.name == "cnot_conjugation") {
                    require_le(check.residual, 1e-10, check.name);
                }
                if (check.name == "branch_recovery") {
                    require_le(check.residual, 1e-9, "branch infidelity");
                }
            }
            require(bundle.all_pass(), "all teleport bundle checks must pass");
        }
    });

    // 11. IR round trip on every catalog circuit; QFT against the DFT matrix
    run_criterion(11, "IR round trip and QFT correctness (n <= 5)", [] {
        auto rng = oracle::make_rng(108);
        std::vector<Circuit> circuits;
        for (std::size_t n = 2; n <= 4; ++n) circuits.push_back(hartley_demo(n).circuit);
        circuits.push_back(fractional_demo(2, 0.3).circuit);
        circuits.push_back(fractional_demo(3, 1.7).circuit);
        circuits.push_back(teleportation_demo(oracle::random_prep_unitary(rng)).circuit);
        circuits.push_back(teleportation_demo(mat_hadamard2()).circuit);
        for (std::size_t n = 1; n <= 5; ++n) circuits.push_back(qft_circuit(n));
        circuits.push_back(case_operator_circuit(pauli_projective_rep()));
        for (const auto& c : circuits) {
            const std::string text = serialize(c);
            const Circuit back = parse_circuit(text);
            require(back == c, "parse(serialize(c)) must reproduce the circuit exactly");
            require(serialize(back) == text, "serialization must be byte-stable");
        }
        for (std::size_t n = 1; n <= 5; ++n) {
            require_le(max_abs_diff(circuit_unitary(qft_circuit(n)),
                                    dft_matrix(std::size_t{1} << n)),
                       1e-10, "QFT deviation at n=" + std::to_string(n));
        }
    });

    if (g_failures == 0) {
        std::printf("acceptance: all 11 criteria passed\n");
    } else {
        std::printf("acceptance: %d criteria FAILED\n", g_failures);
    }
    return g_failures;
}

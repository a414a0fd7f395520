#include <doctest.h>

#include "oracles.hpp"
#include "qlcu/catalog.hpp"
#include "qlcu/simulator.hpp"

using namespace qlcu;

TEST_CASE("hartley_matrix values and structure") {
    // N=2: cas(0)=1, cas(pi)=-1
    CHECK(max_abs_diff(hartley_matrix(2), mat_hadamard2()) < 1e-15);

    // linear combination identity at N=16
    const ComplexMatrix f = dft_matrix(16);
    const ComplexMatrix combo =
        f.scaled(cplx{0.5, -0.5}) + matrix_power(f, 3).scaled(cplx{0.5, 0.5});
    CHECK(max_abs_diff(hartley_matrix(16), combo) < 1e-12);

    for (std::size_t n : {2u, 4u, 8u, 16u, 32u}) {
        const ComplexMatrix a = hartley_matrix(n);
        double imag_part = 0.0, asym = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                imag_part = std::max(imag_part, std::abs(a(i, j).imag()));
                asym = std::max(asym, std::abs(a(i, j) - a(j, i)));
            }
        }
        CHECK(imag_part == 0.0);       // real
        CHECK(asym == 0.0);            // symmetric
        CHECK(is_unitary(a, 1e-10));   // unitary
        CHECK(max_abs_diff(a * a, ComplexMatrix::identity(n)) < 1e-10);  // involution
    }
}

TEST_CASE("hartley_demo bundle") {
    const DemoBundle bundle = hartley_demo(3);
    CHECK(bundle.all_pass());
    CHECK(bundle.circuit.num_ancilla_qubits == 1);

    // the middle circulant gate is R
    const cplx a{0.5, -0.5}, b{0.5, 0.5};
    bool found = false;
    for (const auto& g : bundle.circuit.gates) {
        if (g.kind == GateKind::Block && g.label == "C_A") {
            found = true;
            CHECK(max_abs_diff(g.matrix, ComplexMatrix(2, 2, {a, b, b, a})) < 1e-15);
        }
    }
    CHECK(found);
    CHECK_THROWS_AS(hartley_demo(1), std::invalid_argument);
    CHECK_THROWS_AS(hartley_demo(9), std::invalid_argument);
}

TEST_CASE("fractional coefficient endpoints") {
    const CoefficientVector at0 = fractional_coefficients(0.0);
    CHECK(std::abs(at0.alpha[0] - cplx{1, 0}) < 1e-15);
    for (std::size_t g = 1; g < 4; ++g) CHECK(std::abs(at0.alpha[g]) < 1e-15);

    const CoefficientVector at90 = fractional_coefficients(std::numbers::pi / 2.0);
    CHECK(std::abs(at90.alpha[1] - cplx{1, 0}) < 1e-15);
    CHECK(std::abs(at90.alpha[0]) < 1e-15);
    CHECK(std::abs(at90.alpha[2]) < 1e-15);
    CHECK(std::abs(at90.alpha[3]) < 1e-15);

    // theta = 0.3 gives a unitary combination
    const ComplexMatrix f = dft_matrix(8);
    const Representation rep = cyclic_power_rep(f, 2, "F_8");
    CHECK(is_unitary(reconstruct(rep, fractional_coefficients(0.3).alpha), 1e-10));
}

TEST_CASE("fractional circulants are unitary across the parameter range") {
    auto rng = oracle::make_rng(61);
    std::uniform_real_distribution<double> uni(0.0, 2.0 * std::numbers::pi);
    for (int trial = 0; trial < 50; ++trial) {
        const CoefficientVector coeffs = fractional_coefficients(uni(rng));
        CHECK(is_unitary(group_circulant(coeffs), 1e-9));
    }
}

TEST_CASE("fractional_demo bundle checks") {
    const DemoBundle at_theta = fractional_demo(3, 1.0);
    CHECK(at_theta.all_pass());
    const DemoBundle at_zero = fractional_demo(2, 0.0);
    CHECK(at_zero.all_pass());
    CHECK(verify_realizes(at_zero.circuit, ComplexMatrix::identity(4), 1e-9).pass);
    const DemoBundle at_right_angle = fractional_demo(2, std::numbers::pi / 2.0);
    CHECK(at_right_angle.all_pass());
    CHECK(verify_realizes(at_right_angle.circuit, dft_matrix(4), 1e-9).pass);
}

TEST_CASE("fractional additivity for random parameter pairs") {
    auto rng = oracle::make_rng(62);
    std::uniform_real_distribution<double> uni(0.0, 2.0 * std::numbers::pi);
    const ComplexMatrix f = dft_matrix(8);
    const Representation rep = cyclic_power_rep(f, 2, "F_8");
    for (int trial = 0; trial < 20; ++trial) {
        const double t1 = uni(rng), t2 = uni(rng);
        const ComplexMatrix lhs = reconstruct(rep, fractional_coefficients(t1).alpha) *
                                  reconstruct(rep, fractional_coefficients(t2).alpha);
        const ComplexMatrix rhs = reconstruct(rep, fractional_coefficients(t1 + t2).alpha);
        CHECK(max_abs_diff(lhs, rhs) < 1e-10);
    }
}

TEST_CASE("pauli_decompose reference values") {
    const CoefficientVector x = pauli_decompose(mat_sigma_x());
    CHECK(std::abs(x.alpha[0]) < 1e-15);
    CHECK(std::abs(x.alpha[1] - cplx{1, 0}) < 1e-15);
    CHECK(std::abs(x.alpha[2]) < 1e-15);
    CHECK(std::abs(x.alpha[3]) < 1e-15);

    const CoefficientVector h = pauli_decompose(mat_hadamard2());
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(h.alpha[0]) < 1e-15);
    CHECK(std::abs(h.alpha[1] - cplx{inv_sqrt2, 0}) < 1e-15);
    CHECK(std::abs(h.alpha[2] - cplx{inv_sqrt2, 0}) < 1e-15);
    CHECK(std::abs(h.alpha[3]) < 1e-15);

    // alpha = 0.6, beta = 0.8i: coefficients (0, 0, 0.6, 0.8i)
    const ComplexMatrix u(2, 2, {cplx{0.6, 0}, cplx{0, -0.8}, cplx{0, 0.8}, cplx{-0.6, 0}});
    const CoefficientVector c = pauli_decompose(u);
    CHECK(std::abs(c.alpha[0]) < 1e-15);
    CHECK(std::abs(c.alpha[1]) < 1e-15);
    CHECK(std::abs(c.alpha[2] - cplx{0.6, 0}) < 1e-15);
    CHECK(std::abs(c.alpha[3] - cplx{0, 0.8}) < 1e-15);

    CHECK_THROWS_AS(pauli_decompose(ComplexMatrix(2, 2, {1, 1, 0, 1})), std::invalid_argument);
}

TEST_CASE("pauli_decompose reconstructs random unitaries") {
    auto rng = oracle::make_rng(63);
    const auto basis = pauli_blocks();
    for (int trial = 0; trial < 100; ++trial) {
        const ComplexMatrix u = oracle::random_unitary(2, rng);
        const CoefficientVector c = pauli_decompose(u);
        ComplexMatrix acc(2, 2);
        for (std::size_t i = 0; i < 4; ++i) acc = acc + basis[i].scaled(c.alpha[i]);
        CHECK(max_abs_diff(acc, u) < 1e-12);
    }
}

TEST_CASE("teleportation_demo for the identity input") {
    const DemoBundle bundle = teleportation_demo(ComplexMatrix::identity(2));
    CHECK(bundle.all_pass());
    // psi = |0>, so the preparation unitary is sigma_z and C_U is the
    // projective circulant of (0, 0, 1, 0)
    CHECK(max_abs_diff(bundle.reference, mat_sigma_z()) < 1e-15);
    const CoefficientVector c = pauli_decompose(bundle.reference);
    CHECK(std::abs(c.alpha[2] - cplx{1, 0}) < 1e-15);
}

TEST_CASE("teleportation_demo for Hadamard and random inputs") {
    CHECK(teleportation_demo(mat_hadamard2()).all_pass());
    auto rng = oracle::make_rng(64);
    for (int trial = 0; trial < 20; ++trial) {
        const DemoBundle bundle = teleportation_demo(oracle::random_prep_unitary(rng));
        CAPTURE(trial);
        CHECK(bundle.all_pass());
    }
    CHECK_THROWS_AS(teleportation_demo(ComplexMatrix(2, 2, {1, 1, 0, 1})),
                    std::invalid_argument);
}

TEST_CASE("cyclic_power_rep catalog checks") {
    const ComplexMatrix f = dft_matrix(8);
    const Representation rep = cyclic_power_rep(f, 2, "F_8");
    CHECK(max_abs_diff(rep.image_index(0), ComplexMatrix::identity(8)) == 0.0);
    CHECK(max_abs_diff(rep.image_index(1), f) == 0.0);
    CHECK(max_abs_diff(rep.image_index(2), f * f) < 1e-15);
    CHECK(max_abs_diff(rep.image_index(3), (f * f) * f) < 1e-15);
    CHECK(rep.labels[1] == "F_8");
    CHECK(rep.labels[3] == "F_8^3");

    const Representation z = cyclic_power_rep(mat_sigma_z(), 1, "Z");
    CHECK(max_abs_diff(z.image_index(1), mat_sigma_z()) == 0.0);

    // a global phase of exp(i pi / 4) has order 8, not 4
    ComplexMatrix phase = ComplexMatrix::identity(2).scaled(
        cplx{std::cos(std::numbers::pi / 4), std::sin(std::numbers::pi / 4)});
    CHECK_THROWS_AS(cyclic_power_rep(phase, 2, "P"), OrderError);
}

TEST_CASE("bundle reports serialize to JSON") {
    const DemoBundle bundle = hartley_demo(2);
    const nlohmann::json j = bundle_report(bundle);
    CHECK(j.at("name") == "hartley");
    CHECK(j.at("pass") == true);
    CHECK(j.at("circuit").at("gates").size() == bundle.circuit.gates.size());
    CHECK(j.at("reference_matrix").at("rows") == 4);
    CHECK(j.at("checks").is_array());
}

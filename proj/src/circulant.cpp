#include "qlcu/circulant.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

namespace qlcu {

ComplexMatrix group_circulant(const FiniteTwoGroup& group, const ComplexVector& alpha) {
    const std::size_t d = group.order();
    if (alpha.size() != d) throw std::invalid_argument("group_circulant: |alpha| != |G|");
    ComplexMatrix out(d, d);
    for (std::size_t g = 0; g < d; ++g) {
        const std::size_t gi = group.inv_index(g);
        for (std::size_t h = 0; h < d; ++h) {
            out(g, h) = alpha[group.mul_index(gi, h)];
        }
    }
    return out;
}

ComplexMatrix group_circulant(const CoefficientVector& coeffs) {
    return group_circulant(coeffs.group, coeffs.alpha);
}

ComplexMatrix projective_group_circulant(const FiniteTwoGroup& group, const FactorSet& fs,
                                         const ComplexVector& alpha) {
    const std::size_t d = group.order();
    if (alpha.size() != d) {
        throw std::invalid_argument("projective_group_circulant: |alpha| != |G|");
    }
    if (fs.group_order() != d) {
        throw std::invalid_argument("projective_group_circulant: factor set order mismatch");
    }
    ComplexMatrix out(d, d);
    for (std::size_t g = 0; g < d; ++g) {
        const std::size_t gi = group.inv_index(g);
        for (std::size_t h = 0; h < d; ++h) {
            out(g, h) = alpha[group.mul_index(gi, h)] / fs.omega_index(gi, h);
        }
    }
    return out;
}

ComplexMatrix character_table(const FiniteTwoGroup& group) {
    if (group.cyclic_factors.empty()) {
        throw NonAbelianError(
            "character_table: group has no cyclic factor structure (not built from the "
            "abelian constructors)");
    }
    const std::size_t d = group.order();
    const std::size_t n = group.n_generators;
    // decode an address into per-factor integers (a_1 most significant per factor)
    auto decode = [&](std::size_t idx) {
        const Address a = index_to_address(idx, n);
        std::vector<std::size_t> vals;
        std::size_t off = 0;
        for (auto k : group.cyclic_factors) {
            std::size_t v = 0;
            for (std::size_t i = 0; i < k; ++i) v = (v << 1) | a[off + i];
            vals.push_back(v);
            off += k;
        }
        return vals;
    };
    ComplexMatrix chi(d, d);
    for (std::size_t c = 0; c < d; ++c) {
        const auto cv = decode(c);
        for (std::size_t g = 0; g < d; ++g) {
            const auto gv = decode(g);
            double phase = 0.0;
            for (std::size_t f = 0; f < cv.size(); ++f) {
                const std::size_t m = std::size_t{1} << group.cyclic_factors[f];
                phase += 2.0 * std::numbers::pi * static_cast<double>((cv[f] * gv[f]) % m) /
                         static_cast<double>(m);
            }
            chi(c, g) = cplx{std::cos(phase), std::sin(phase)};
        }
    }
    return chi;
}

ComplexMatrix reconstruct(const Representation& rep, const ComplexVector& alpha) {
    ComplexMatrix acc(rep.block_dim, rep.block_dim);
    for (std::size_t g = 0; g < rep.group.order(); ++g) {
        acc = acc + rep.image_index(g).scaled(alpha[g]);
    }
    return acc;
}

CoefficientVector solve_coefficients(const ComplexMatrix& target, const Representation& rep,
                                     double tol) {
    if (target.rows() != rep.block_dim || target.cols() != rep.block_dim) {
        throw std::invalid_argument("solve_coefficients: target shape != block shape");
    }
    const std::size_t d = rep.group.order();
    const std::size_t m2 = rep.block_dim * rep.block_dim;

    Eigen::MatrixXcd flat(m2, d);
    for (std::size_t g = 0; g < d; ++g) {
        const auto& e = rep.image_index(g).entries();
        for (std::size_t i = 0; i < m2; ++i) flat(static_cast<Eigen::Index>(i), g) = e[i];
    }
    Eigen::VectorXcd b(m2);
    for (std::size_t i = 0; i < m2; ++i) b(static_cast<Eigen::Index>(i)) = target.entries()[i];

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(flat, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-8);  // singular values below 1e-8 * sigma_max count as zero
    const Eigen::VectorXcd x = svd.solve(b);

    ComplexVector alpha(d);
    for (std::size_t g = 0; g < d; ++g) alpha[g] = x(static_cast<Eigen::Index>(g));

    const double residual = max_abs_diff(reconstruct(rep, alpha), target);
    if (residual > tol) {
        throw NotInSpanError("solve_coefficients: target outside the span of the images "
                             "(max-entry residual " +
                                 std::to_string(residual) + ")",
                             residual);
    }
    return CoefficientVector{rep.group, std::move(alpha)};
}

CoefficientVector unitarize_coefficients(const ComplexMatrix& target, const Representation& rep,
                                         double tol) {
    if (!rep.ordinary()) {
        throw std::invalid_argument("unitarize_coefficients: representation must be ordinary");
    }
    if (target.rows() != rep.block_dim || target.cols() != rep.block_dim) {
        throw std::invalid_argument("unitarize_coefficients: target shape != block shape");
    }
    const ComplexMatrix chi = character_table(rep.group);  // throws NonAbelianError
    const std::size_t d = rep.group.order();
    const std::size_t bd = rep.block_dim;

    // isotypic projector P_c = (1/|G|) sum_g conj(chi_c(g)) D(g)
    std::vector<ComplexMatrix> projectors(d);
    std::vector<bool> occurs(d, false);
    for (std::size_t c = 0; c < d; ++c) {
        ComplexMatrix p(bd, bd);
        for (std::size_t g = 0; g < d; ++g) {
            p = p + rep.image_index(g).scaled(std::conj(chi(c, g)));
        }
        p = p.scaled(1.0 / static_cast<double>(d));
        occurs[c] = max_abs(p) > tol;
        projectors[c] = std::move(p);
    }

    // character transform of alpha: fixed by the target on occurring
    // characters, set to 1 on the complement
    ComplexVector ahat(d, cplx{1.0, 0.0});
    ComplexMatrix recon(bd, bd);
    for (std::size_t c = 0; c < d; ++c) {
        if (!occurs[c]) continue;
        cplx tr_p{0.0, 0.0};
        cplx tr_ap{0.0, 0.0};
        const ComplexMatrix ap = target * projectors[c];
        for (std::size_t i = 0; i < bd; ++i) {
            tr_p += projectors[c](i, i);
            tr_ap += ap(i, i);
        }
        ahat[c] = tr_ap / tr_p;
        recon = recon + projectors[c].scaled(ahat[c]);
    }

    const double residual = max_abs_diff(recon, target);
    if (residual > tol) {
        throw NotInSpanError("unitarize_coefficients: target outside the span of the images "
                             "(max-entry residual " +
                                 std::to_string(residual) + ")",
                             residual);
    }

    // inverse character transform
    ComplexVector alpha(d, cplx{0.0, 0.0});
    for (std::size_t g = 0; g < d; ++g) {
        cplx acc{0.0, 0.0};
        for (std::size_t c = 0; c < d; ++c) acc += ahat[c] * std::conj(chi(c, g));
        alpha[g] = acc / static_cast<double>(d);
    }
    return CoefficientVector{rep.group, std::move(alpha)};
}

bool check_key_lemma(const Representation& rep, const ComplexVector& alpha, double tol) {
    const ComplexMatrix circ =
        rep.ordinary() ? group_circulant(rep.group, alpha)
                       : projective_group_circulant(rep.group, rep.factor_set, alpha);
    return is_unitary(circ, tol);
}

}  // namespace qlcu

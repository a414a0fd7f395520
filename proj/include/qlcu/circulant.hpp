#pragma once

#include <stdexcept>

#include "qlcu/complex_matrix.hpp"
#include "qlcu/group.hpp"

namespace qlcu {

// Combination coefficients alpha_g, ordered by address_index.
struct CoefficientVector {
    FiniteTwoGroup group;
    ComplexVector alpha;
};

struct NotInSpanError : std::runtime_error {
    double residual;
    NotInSpanError(const std::string& what, double residual_)
        : std::runtime_error(what), residual(residual_) {}
};

struct NonAbelianError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Group circulant: entry (g,h) = alpha_{g^{-1} h}, rows/columns ordered by
// address_index.
ComplexMatrix group_circulant(const FiniteTwoGroup& group, const ComplexVector& alpha);
ComplexMatrix group_circulant(const CoefficientVector& coeffs);

// Projective group circulant: entry (g,h) = omega(g^{-1},h)^{-1} alpha_{g^{-1} h}.
ComplexMatrix projective_group_circulant(const FiniteTwoGroup& group, const FactorSet& fs,
                                         const ComplexVector& alpha);

// Character table of an abelian 2-group built from the cyclic constructors:
// entry (c, g) = chi_c(g), both indices running over address_index order.
// Throws NonAbelianError when the group carries no cyclic factor structure.
ComplexMatrix character_table(const FiniteTwoGroup& group);

// Sum alpha_g D(g).
ComplexMatrix reconstruct(const Representation& rep, const ComplexVector& alpha);

// Minimal-norm least-squares solution of target = sum alpha_g D(g), via a
// rank-revealing SVD of the flattened image matrix (relative cutoff 1e-8).
// Throws NotInSpanError when the max-entry residual exceeds tol.
CoefficientVector solve_coefficients(const ComplexMatrix& target, const Representation& rep,
                                     double tol);

// Coefficients realizing the target whose group circulant is unitary even for
// linearly dependent images (abelian ordinary representations): the character
// transform of alpha is fixed by the target on characters occurring in D and
// set to 1 on the complement.
CoefficientVector unitarize_coefficients(const ComplexMatrix& target, const Representation& rep,
                                         double tol);

// True iff the (projective, when the representation is projective) group
// circulant of alpha is unitary within tol.
bool check_key_lemma(const Representation& rep, const ComplexVector& alpha, double tol);

}  // namespace qlcu

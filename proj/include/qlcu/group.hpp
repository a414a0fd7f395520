#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qlcu/complex_matrix.hpp"

namespace qlcu {

// Binary address (a_1, ..., a_n) of a group element g = t_1^{a_1} ... t_n^{a_n}.
// a_1 is the most significant bit of the element's index.
using Address = std::vector<std::uint8_t>;

std::size_t address_index(const Address& a);
Address index_to_address(std::size_t index, std::size_t n_bits);
// Unit address e_{pos+1}: the transversal generator t_{pos+1}, pos in [0, n).
Address unit_address(std::size_t n_bits, std::size_t pos);

// A 2-group given by its multiplication law on binary addresses. Groups built
// by the constructors below also record their cyclic factor decomposition,
// which the character machinery in the circulant module relies on.
struct FiniteTwoGroup {
    std::size_t n_generators = 0;
    std::function<Address(const Address&, const Address&)> multiply;
    std::function<Address(const Address&)> invert;
    // Exponents k_j of the cyclic factors Z/2^{k_j}Z; empty when the group was
    // built from raw closures and no abelian structure is known.
    std::vector<std::size_t> cyclic_factors;

    std::size_t order() const { return std::size_t{1} << n_generators; }
    Address identity() const { return Address(n_generators, 0); }

    std::size_t mul_index(std::size_t i, std::size_t j) const;
    std::size_t inv_index(std::size_t i) const;
};

FiniteTwoGroup make_cyclic_group(std::size_t k);
FiniteTwoGroup make_elementary_abelian(std::size_t k);
FiniteTwoGroup direct_product(const std::vector<FiniteTwoGroup>& factors);

struct Violation {
    std::string description;
    double residual = 0.0;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// 2-cocycle omega: G x G -> unit-modulus complex numbers, stored as a dense
// table indexed by address_index.
class FactorSet {
public:
    FactorSet() = default;
    FactorSet(std::size_t group_order, std::vector<cplx> table);
    static FactorSet trivial(const FiniteTwoGroup& group);

    std::size_t group_order() const { return order_; }
    cplx omega_index(std::size_t g, std::size_t h) const { return table_[g * order_ + h]; }
    cplx omega(const Address& g, const Address& h) const {
        return omega_index(address_index(g), address_index(h));
    }
    bool is_trivial(double tol = kDefaultTol) const;

private:
    std::size_t order_ = 0;
    std::vector<cplx> table_;
};

// Checks the cocycle law, normalization and unit modulus; returns every
// violated triple/pair with its residual.
ValidationReport validate_factor_set(const FiniteTwoGroup& group, const FactorSet& fs, double tol);

// Unitary (projective) representation: one block per address, indexed by
// address_index. For ordinary representations the factor set is constant 1.
struct Representation {
    FiniteTwoGroup group;
    std::size_t block_dim = 0;
    std::vector<ComplexMatrix> images;
    std::vector<std::string> labels;
    FactorSet factor_set;

    bool ordinary(double tol = kDefaultTol) const { return factor_set.is_trivial(tol); }
    const ComplexMatrix& image(const Address& a) const { return images[address_index(a)]; }
    const ComplexMatrix& image_index(std::size_t i) const { return images[i]; }
    const ComplexMatrix& generator_image(std::size_t pos) const {
        return images[address_index(unit_address(group.n_generators, pos))];
    }
};

// Checks unitarity of every image, D(identity) = I, and the multiplication
// rule D(g)D(h) = omega(g,h) D(gh) over all pairs.
ValidationReport validate_representation(const Representation& rep, double tol);

struct PhaseRecoveryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Recovers the factor set of a projective block family numerically: for each
// pair (g,h) finds the unit scalar phi with blocks[g]*blocks[h] = phi*blocks[gh].
// The largest-modulus entry of blocks[gh] is used as the comparison pivot.
// Throws PhaseRecoveryError when no unit scalar fits within tol.
FactorSet induced_factor_set(const FiniteTwoGroup& group,
                             const std::vector<ComplexMatrix>& blocks, double tol = kDefaultTol);

// Completes generator images to a full block family: the block at address
// (a_1,...,a_n) is the operator product applying D(t_1) first, i.e.
// D(t_n)^{a_n} * ... * D(t_1)^{a_1}.
std::vector<ComplexMatrix> transversal_blocks(const FiniteTwoGroup& group,
                                              const std::vector<ComplexMatrix>& generator_images);

// Builds an ordinary representation from generator images (completed via
// transversal products, trivial factor set).
Representation make_ordinary_representation(FiniteTwoGroup group,
                                            std::vector<ComplexMatrix> generator_images,
                                            std::vector<std::string> generator_labels = {});

// Builds a projective representation from a full block family; the factor set
// is recovered numerically.
Representation make_projective_representation(FiniteTwoGroup group,
                                              std::vector<ComplexMatrix> blocks,
                                              std::vector<std::string> labels = {},
                                              double tol = kDefaultTol);

// JSON loading per the group/representation schema:
//   {group: {kind: "cyclic"|"elementary_abelian"|"direct_product", ...},
//    block_dim, images: {"<addressBits>": matrixJSON, ...},
//    factor_set: "trivial"|"induced"|{table: [[re,im],...] row-major}}
FiniteTwoGroup group_from_json(const nlohmann::json& j);
Representation representation_from_json(const nlohmann::json& j);

}  // namespace qlcu

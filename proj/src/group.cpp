#include "qlcu/group.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace qlcu {

namespace {

std::string address_bits(const Address& a) {
    std::string s;
    s.reserve(a.size());
    for (auto b : a) s.push_back(b ? '1' : '0');
    return s;
}

}  // namespace

std::size_t address_index(const Address& a) {
    std::size_t idx = 0;
    for (auto b : a) idx = (idx << 1) | (b ? 1u : 0u);
    return idx;
}

Address index_to_address(std::size_t index, std::size_t n_bits) {
    Address a(n_bits, 0);
    for (std::size_t j = 0; j < n_bits; ++j) {
        a[n_bits - 1 - j] = static_cast<std::uint8_t>((index >> j) & 1u);
    }
    return a;
}

Address unit_address(std::size_t n_bits, std::size_t pos) {
    Address a(n_bits, 0);
    a.at(pos) = 1;
    return a;
}

std::size_t FiniteTwoGroup::mul_index(std::size_t i, std::size_t j) const {
    return address_index(multiply(index_to_address(i, n_generators),
                                  index_to_address(j, n_generators)));
}

std::size_t FiniteTwoGroup::inv_index(std::size_t i) const {
    return address_index(invert(index_to_address(i, n_generators)));
}

FiniteTwoGroup make_cyclic_group(std::size_t k) {
    if (k == 0) throw std::invalid_argument("make_cyclic_group: k must be >= 1");
    FiniteTwoGroup g;
    g.n_generators = k;
    g.cyclic_factors = {k};
    const std::size_t mod = std::size_t{1} << k;
    g.multiply = [k, mod](const Address& a, const Address& b) {
        return index_to_address((address_index(a) + address_index(b)) % mod, k);
    };
    g.invert = [k, mod](const Address& a) {
        return index_to_address((mod - address_index(a)) % mod, k);
    };
    return g;
}

FiniteTwoGroup make_elementary_abelian(std::size_t k) {
    if (k == 0) throw std::invalid_argument("make_elementary_abelian: k must be >= 1");
    FiniteTwoGroup g;
    g.n_generators = k;
    g.cyclic_factors.assign(k, 1);
    g.multiply = [](const Address& a, const Address& b) {
        Address out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
        return out;
    };
    g.invert = [](const Address& a) { return a; };
    return g;
}

FiniteTwoGroup direct_product(const std::vector<FiniteTwoGroup>& factors) {
    if (factors.empty()) throw std::invalid_argument("direct_product: no factors");
    FiniteTwoGroup g;
    std::vector<std::size_t> widths;
    for (const auto& f : factors) {
        g.n_generators += f.n_generators;
        widths.push_back(f.n_generators);
        for (auto c : f.cyclic_factors) g.cyclic_factors.push_back(c);
    }
    auto parts = factors;  // copies of the factor groups for the closures
    g.multiply = [parts, widths](const Address& a, const Address& b) {
        Address out;
        std::size_t off = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            Address xa(a.begin() + off, a.begin() + off + widths[i]);
            Address xb(b.begin() + off, b.begin() + off + widths[i]);
            Address prod = parts[i].multiply(xa, xb);
            out.insert(out.end(), prod.begin(), prod.end());
            off += widths[i];
        }
        return out;
    };
    g.invert = [parts, widths](const Address& a) {
        Address out;
        std::size_t off = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            Address xa(a.begin() + off, a.begin() + off + widths[i]);
            Address inv = parts[i].invert(xa);
            out.insert(out.end(), inv.begin(), inv.end());
            off += widths[i];
        }
        return out;
    };
    return g;
}

FactorSet::FactorSet(std::size_t group_order, std::vector<cplx> table)
    : order_(group_order), table_(std::move(table)) {
    if (table_.size() != order_ * order_) {
        throw std::invalid_argument("FactorSet: table size must be order^2");
    }
}

FactorSet FactorSet::trivial(const FiniteTwoGroup& group) {
    const std::size_t d = group.order();
    return FactorSet(d, std::vector<cplx>(d * d, cplx{1.0, 0.0}));
}

bool FactorSet::is_trivial(double tol) const {
    for (const auto& w : table_) {
        if (std::abs(w - cplx{1.0, 0.0}) > tol) return false;
    }
    return true;
}

ValidationReport validate_factor_set(const FiniteTwoGroup& group, const FactorSet& fs,
                                     double tol) {
    ValidationReport report;
    const std::size_t d = group.order();
    const std::size_t n = group.n_generators;
    for (std::size_t g = 0; g < d; ++g) {
        const double r1 = std::abs(fs.omega_index(g, 0) - cplx{1.0, 0.0});
        if (r1 > tol) {
            report.violations.push_back(
                {"normalization omega(" + address_bits(index_to_address(g, n)) + ", 1) != 1", r1});
        }
        const double r2 = std::abs(fs.omega_index(0, g) - cplx{1.0, 0.0});
        if (r2 > tol) {
            report.violations.push_back(
                {"normalization omega(1, " + address_bits(index_to_address(g, n)) + ") != 1", r2});
        }
        for (std::size_t h = 0; h < d; ++h) {
            const double rm = std::abs(std::abs(fs.omega_index(g, h)) - 1.0);
            if (rm > tol) {
                report.violations.push_back({"modulus |omega(" +
                                                 address_bits(index_to_address(g, n)) + ", " +
                                                 address_bits(index_to_address(h, n)) + ")| != 1",
                                             rm});
            }
        }
    }
    for (std::size_t x = 0; x < d; ++x) {
        for (std::size_t y = 0; y < d; ++y) {
            const std::size_t xy = group.mul_index(x, y);
            for (std::size_t z = 0; z < d; ++z) {
                const std::size_t yz = group.mul_index(y, z);
                const cplx lhs = fs.omega_index(x, y) * fs.omega_index(xy, z);
                const cplx rhs = fs.omega_index(x, yz) * fs.omega_index(y, z);
                const double r = std::abs(lhs - rhs);
                if (r > tol) {
                    std::ostringstream oss;
                    oss << "cocycle law violated at (" << address_bits(index_to_address(x, n))
                        << ", " << address_bits(index_to_address(y, n)) << ", "
                        << address_bits(index_to_address(z, n)) << ")";
                    report.violations.push_back({oss.str(), r});
                }
            }
        }
    }
    return report;
}

ValidationReport validate_representation(const Representation& rep, double tol) {
    ValidationReport report;
    const std::size_t d = rep.group.order();
    const std::size_t n = rep.group.n_generators;
    for (std::size_t g = 0; g < d; ++g) {
        const ComplexMatrix& m = rep.image_index(g);
        if (!m.is_square() || m.rows() != rep.block_dim) {
            report.violations.push_back(
                {"image " + address_bits(index_to_address(g, n)) + " has wrong shape", 0.0});
            return report;
        }
        const double ru = max_abs_diff(m.dagger() * m, ComplexMatrix::identity(rep.block_dim));
        if (ru > tol) {
            report.violations.push_back(
                {"image " + address_bits(index_to_address(g, n)) + " not unitary", ru});
        }
    }
    const double rid = max_abs_diff(rep.image_index(0), ComplexMatrix::identity(rep.block_dim));
    if (rid > tol) {
        report.violations.push_back({"image of identity is not the identity matrix", rid});
    }
    for (std::size_t g = 0; g < d; ++g) {
        for (std::size_t h = 0; h < d; ++h) {
            const std::size_t gh = rep.group.mul_index(g, h);
            const ComplexMatrix lhs = rep.image_index(g) * rep.image_index(h);
            const ComplexMatrix rhs = rep.image_index(gh).scaled(rep.factor_set.omega_index(g, h));
            const double r = max_abs_diff(lhs, rhs);
            if (r > tol) {
                std::ostringstream oss;
                oss << "D(" << address_bits(index_to_address(g, n)) << ") D("
                    << address_bits(index_to_address(h, n)) << ") != omega * D(product)";
                report.violations.push_back({oss.str(), r});
            }
        }
    }
    return report;
}

FactorSet induced_factor_set(const FiniteTwoGroup& group, const std::vector<ComplexMatrix>& blocks,
                             double tol) {
    const std::size_t d = group.order();
    if (blocks.size() != d) {
        throw std::invalid_argument("induced_factor_set: need one block per group element");
    }
    std::vector<cplx> table(d * d, cplx{1.0, 0.0});
    for (std::size_t g = 0; g < d; ++g) {
        for (std::size_t h = 0; h < d; ++h) {
            const std::size_t gh = group.mul_index(g, h);
            const ComplexMatrix prod = blocks[g] * blocks[h];
            const ComplexMatrix& ref = blocks[gh];
            // largest-modulus entry of blocks(gh) as the comparison pivot
            std::size_t piv = 0;
            double best = -1.0;
            for (std::size_t i = 0; i < ref.entries().size(); ++i) {
                const double m = std::abs(ref.entries()[i]);
                if (m > best) {
                    best = m;
                    piv = i;
                }
            }
            if (best <= tol) {
                throw PhaseRecoveryError("induced_factor_set: zero reference block at product");
            }
            const cplx phi = prod.entries()[piv] / ref.entries()[piv];
            if (std::abs(std::abs(phi) - 1.0) > tol ||
                max_abs_diff(prod, ref.scaled(phi)) > tol) {
                std::ostringstream oss;
                oss << "induced_factor_set: blocks at indices (" << g << ", " << h
                    << ") are not related to the product block by a unit scalar";
                throw PhaseRecoveryError(oss.str());
            }
            table[g * d + h] = phi;
        }
    }
    return FactorSet(d, std::move(table));
}

std::vector<ComplexMatrix> transversal_blocks(const FiniteTwoGroup& group,
                                              const std::vector<ComplexMatrix>& generator_images) {
    const std::size_t n = group.n_generators;
    if (generator_images.size() != n) {
        throw std::invalid_argument("transversal_blocks: need one image per generator");
    }
    const std::size_t dim = generator_images.empty() ? 1 : generator_images[0].rows();
    std::vector<ComplexMatrix> blocks(group.order());
    for (std::size_t idx = 0; idx < group.order(); ++idx) {
        const Address a = index_to_address(idx, n);
        ComplexMatrix m = ComplexMatrix::identity(dim);
        // t_1 acts first, so its image sits rightmost in the product
        for (std::size_t pos = n; pos-- > 0;) {
            if (a[pos]) m = m * generator_images[pos];
        }
        blocks[idx] = std::move(m);
    }
    return blocks;
}

namespace {

std::vector<std::string> default_labels(const FiniteTwoGroup& group) {
    std::vector<std::string> labels(group.order());
    for (std::size_t i = 0; i < group.order(); ++i) {
        labels[i] = "D(" + address_bits(index_to_address(i, group.n_generators)) + ")";
    }
    return labels;
}

}  // namespace

Representation make_ordinary_representation(FiniteTwoGroup group,
                                            std::vector<ComplexMatrix> generator_images,
                                            std::vector<std::string> generator_labels) {
    Representation rep;
    rep.images = transversal_blocks(group, generator_images);
    rep.block_dim = rep.images[0].rows();
    rep.factor_set = FactorSet::trivial(group);
    rep.labels = default_labels(group);
    if (!generator_labels.empty()) {
        for (std::size_t pos = 0; pos < generator_labels.size(); ++pos) {
            rep.labels[address_index(unit_address(group.n_generators, pos))] =
                generator_labels[pos];
        }
    }
    rep.group = std::move(group);
    return rep;
}

Representation make_projective_representation(FiniteTwoGroup group,
                                              std::vector<ComplexMatrix> blocks,
                                              std::vector<std::string> labels, double tol) {
    Representation rep;
    rep.factor_set = induced_factor_set(group, blocks, tol);
    rep.block_dim = blocks[0].rows();
    rep.images = std::move(blocks);
    rep.labels = labels.empty() ? default_labels(group) : std::move(labels);
    rep.group = std::move(group);
    return rep;
}

FiniteTwoGroup group_from_json(const nlohmann::json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "cyclic") {
        return make_cyclic_group(j.at("n_generators").get<std::size_t>());
    }
    if (kind == "elementary_abelian") {
        return make_elementary_abelian(j.at("n_generators").get<std::size_t>());
    }
    if (kind == "direct_product") {
        std::vector<FiniteTwoGroup> factors;
        for (const auto& f : j.at("factors")) factors.push_back(group_from_json(f));
        return direct_product(factors);
    }
    throw std::invalid_argument("group JSON: unknown kind '" + kind + "'");
}

Representation representation_from_json(const nlohmann::json& j) {
    FiniteTwoGroup group = group_from_json(j.at("group"));
    const std::size_t n = group.n_generators;
    const std::size_t d = group.order();
    const auto& images_json = j.at("images");

    auto parse_address = [n](const std::string& bits) {
        if (bits.size() != n) {
            throw std::invalid_argument("representation JSON: address '" + bits +
                                        "' has wrong length");
        }
        Address a(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (bits[i] != '0' && bits[i] != '1') {
                throw std::invalid_argument("representation JSON: bad address '" + bits + "'");
            }
            a[i] = bits[i] == '1';
        }
        return a;
    };

    std::vector<ComplexMatrix> given(d);
    std::vector<bool> present(d, false);
    for (auto it = images_json.begin(); it != images_json.end(); ++it) {
        const std::size_t idx = address_index(parse_address(it.key()));
        given[idx] = matrix_from_json(it.value());
        present[idx] = true;
    }

    bool full = true;
    for (std::size_t i = 0; i < d; ++i) {
        if (!present[i]) full = false;
    }

    std::vector<ComplexMatrix> blocks;
    if (full) {
        blocks = std::move(given);
    } else {
        // generator-only form: all unit addresses must be present, the rest
        // are completed via transversal products
        std::vector<ComplexMatrix> gens(n);
        for (std::size_t pos = 0; pos < n; ++pos) {
            const std::size_t idx = address_index(unit_address(n, pos));
            if (!present[idx]) {
                throw std::invalid_argument(
                    "representation JSON: images must list every address or every generator");
            }
            gens[pos] = given[idx];
        }
        blocks = transversal_blocks(group, gens);
    }

    const std::size_t block_dim = j.at("block_dim").get<std::size_t>();
    for (const auto& b : blocks) {
        if (!b.is_square() || b.rows() != block_dim) {
            throw std::invalid_argument("representation JSON: image shape != block_dim");
        }
    }

    Representation rep;
    rep.block_dim = block_dim;
    rep.labels = default_labels(group);
    if (j.contains("labels")) {
        for (auto it = j.at("labels").begin(); it != j.at("labels").end(); ++it) {
            rep.labels[address_index(parse_address(it.key()))] = it.value().get<std::string>();
        }
    }

    const auto& fs = j.at("factor_set");
    if (fs.is_string() && fs.get<std::string>() == "trivial") {
        rep.factor_set = FactorSet::trivial(group);
    } else if (fs.is_string() && fs.get<std::string>() == "induced") {
        rep.factor_set = induced_factor_set(group, blocks);
    } else if (fs.is_object() && fs.contains("table")) {
        std::vector<cplx> table;
        for (const auto& e : fs.at("table")) {
            table.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
        }
        rep.factor_set = FactorSet(d, std::move(table));
    } else {
        throw std::invalid_argument("representation JSON: bad factor_set");
    }

    rep.images = std::move(blocks);
    rep.group = std::move(group);
    return rep;
}

}  // namespace qlcu

#include "qlcu/complex_matrix.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qlcu {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw std::invalid_argument("ComplexMatrix: entry count does not match rows*cols");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const cplx aik = (*this)(i, k);
            if (aik == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out(i, j) += aik * rhs(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("matrix sum: shape mismatch");
    }
    ComplexMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("matrix difference: shape mismatch");
    }
    ComplexMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
    return out;
}

ComplexMatrix ComplexMatrix::scaled(cplx factor) const {
    ComplexMatrix out = *this;
    for (auto& e : out.entries_) e *= factor;
    return out;
}

ComplexMatrix ComplexMatrix::dagger() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

ComplexVector ComplexMatrix::apply(const ComplexVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix apply: dimension mismatch");
    ComplexVector out(rows_, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < rows_; ++i) {
        cplx acc{0.0, 0.0};
        for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix matrix_power(const ComplexMatrix& m, std::size_t exponent) {
    if (!m.is_square()) throw std::invalid_argument("matrix_power: non-square input");
    ComplexMatrix out = ComplexMatrix::identity(m.rows());
    for (std::size_t i = 0; i < exponent; ++i) out = out * m;
    return out;
}

ComplexMatrix dft_matrix(std::size_t n_dim, bool normalized) {
    if (n_dim == 0) throw std::invalid_argument("dft_matrix: dimension must be positive");
    ComplexMatrix out(n_dim, n_dim);
    const double scale = normalized ? 1.0 / std::sqrt(static_cast<double>(n_dim)) : 1.0;
    for (std::size_t k = 0; k < n_dim; ++k) {
        for (std::size_t l = 0; l < n_dim; ++l) {
            // reduce k*l mod N before taking the phase for accuracy at larger N
            const std::size_t kl = (k * l) % n_dim;
            const double phase = 2.0 * std::numbers::pi * static_cast<double>(kl) /
                                 static_cast<double>(n_dim);
            out(k, l) = scale * cplx{std::cos(phase), std::sin(phase)};
        }
    }
    return out;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
    if (!m.is_square()) throw std::invalid_argument("is_unitary: non-square input");
    const ComplexMatrix gram = m.dagger() * m;
    return max_abs_diff(gram, ComplexMatrix::identity(m.rows())) <= tol;
}

cplx frobenius_coefficient(const ComplexMatrix& basis_elem, const ComplexMatrix& target) {
    if (!basis_elem.is_square() || basis_elem.rows() != target.rows() ||
        basis_elem.cols() != target.cols()) {
        throw std::invalid_argument("frobenius_coefficient: shape mismatch");
    }
    cplx trace{0.0, 0.0};
    const std::size_t n = basis_elem.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            trace += std::conj(basis_elem(k, i)) * target(k, i);
        }
    }
    return trace / static_cast<double>(n);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

double max_abs(const ComplexMatrix& m) {
    double worst = 0.0;
    for (const auto& e : m.entries()) worst = std::max(worst, std::abs(e));
    return worst;
}

double squared_norm(const ComplexVector& v) {
    double acc = 0.0;
    for (const auto& e : v) acc += std::norm(e);
    return acc;
}

const ComplexMatrix& mat_identity2() {
    static const ComplexMatrix m = ComplexMatrix::identity(2);
    return m;
}

const ComplexMatrix& mat_sigma_x() {
    static const ComplexMatrix m(2, 2, {0.0, 1.0, 1.0, 0.0});
    return m;
}

const ComplexMatrix& mat_sigma_z() {
    static const ComplexMatrix m(2, 2, {1.0, 0.0, 0.0, -1.0});
    return m;
}

const ComplexMatrix& mat_hadamard2() {
    static const ComplexMatrix m(2, 2,
                                 {cplx{1.0 / std::sqrt(2.0), 0.0}, cplx{1.0 / std::sqrt(2.0), 0.0},
                                  cplx{1.0 / std::sqrt(2.0), 0.0}, cplx{-1.0 / std::sqrt(2.0), 0.0}});
    return m;
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : m.entries()) {
        entries.push_back({e.real(), e.imag()});
    }
    return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows * cols) {
        throw std::invalid_argument("matrix JSON: entry count does not match rows*cols");
    }
    std::vector<cplx> data;
    data.reserve(rows * cols);
    for (const auto& e : entries) {
        data.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    }
    return ComplexMatrix(rows, cols, std::move(data));
}

nlohmann::json coefficients_to_json(const ComplexVector& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : v) out.push_back({e.real(), e.imag()});
    return out;
}

ComplexVector coefficients_from_json(const nlohmann::json& j) {
    ComplexVector out;
    out.reserve(j.size());
    for (const auto& e : j) out.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    return out;
}

}  // namespace qlcu

#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace qlcu {

using cplx = std::complex<double>;
using ComplexVector = std::vector<cplx>;

// Default tolerance for unitarity / equality checks on synthesized matrices.
inline constexpr double kDefaultTol = 1e-10;

// Dense complex matrix, row-major. Immutable by convention once built:
// every operation returns a fresh value.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, cplx{0.0, 0.0}) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return entries_.empty(); }

    cplx& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<cplx>& entries() const { return entries_; }

    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix scaled(cplx factor) const;
    ComplexMatrix dagger() const;

    ComplexVector apply(const ComplexVector& v) const;

    bool operator==(const ComplexMatrix& rhs) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix matrix_power(const ComplexMatrix& m, std::size_t exponent);

// Discrete Fourier transform with entry (k,l) = exp(+2*pi*i*k*l/N),
// divided by sqrt(N) when normalized.
ComplexMatrix dft_matrix(std::size_t n_dim, bool normalized = true);

// True iff max-entry |m^dagger m - I| <= tol. Throws on non-square input.
bool is_unitary(const ComplexMatrix& m, double tol = kDefaultTol);

// (1/dim) * trace(basis_elem^dagger * target); throws on shape mismatch.
cplx frobenius_coefficient(const ComplexMatrix& basis_elem, const ComplexMatrix& target);

// Chebyshev (max-entry) distance; shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& m);

double squared_norm(const ComplexVector& v);

// Fixed 2x2 gate matrices used throughout.
const ComplexMatrix& mat_identity2();
const ComplexMatrix& mat_sigma_x();
const ComplexMatrix& mat_sigma_z();
const ComplexMatrix& mat_hadamard2();

// JSON schema: {rows, cols, entries: [[re, im], ...]} row-major.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json coefficients_to_json(const ComplexVector& v);
ComplexVector coefficients_from_json(const nlohmann::json& j);

}  // namespace qlcu

// tensor.hpp
// Dense complex linear algebra for registers of up to 6 qubits:
// Kronecker products, partial traces, Hermitian eigendecomposition,
// PSD matrix square roots and the two-qubit spin-flip transform.

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace csent {

using cplx = std::complex<double>;

inline constexpr int kMaxQubits = 6;
inline constexpr std::size_t kMaxDim = 64;

// Row-major dense complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;

    // Largest entry magnitude.
    double max_abs() const;
    // Largest |a_ij - a_ji^*|; zero for Hermitian matrices.
    double hermiticity_defect() const;
    cplx trace() const;
    bool all_finite() const;

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(cplx s, const ComplexMatrix& a);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

// Pure state of an n-qubit register in the computational basis.
// Qubit ordering is big-endian throughout: qubit 0 is the most
// significant bit of the basis index.
struct StateVector {
    int num_qubits = 0;
    std::vector<cplx> amplitudes;

    StateVector() = default;
    // Validates 1 <= n <= 6, length 2^n and unit norm (1e-12).
    StateVector(int n, std::vector<cplx> amps);

    std::size_t dim() const { return amplitudes.size(); }
    double norm() const;
};

// Descending square-rooted eigenvalues of rho * rhotilde.
struct WoottersSpectrum {
    double lambda[4];

    double subconcurrence() const { return lambda[0] - lambda[1] - lambda[2] - lambda[3]; }
    double concurrence() const {
        double s = subconcurrence();
        return s > 0.0 ? s : 0.0;
    }
};

struct EigResult {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // columns, orthonormal
};

// Kronecker product; errors if the result would exceed 64x64.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Reduced density matrix of the kept qubits (0-based, in the given order).
ComplexMatrix partial_trace(const StateVector& state, const std::vector<int>& keep);

// Cyclic-by-threshold Jacobi diagonalization of a Hermitian matrix.
EigResult hermitian_eig(const ComplexMatrix& m);

// Hermitian PSD square root; eigenvalues in [-1e-8, 0) clamp to zero,
// anything below that is rejected.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m);

// rhotilde = (sigma_y x sigma_y) rho^* (sigma_y x sigma_y) for 4x4 rho.
ComplexMatrix spin_flip(const ComplexMatrix& rho);

// Square roots of the eigenvalues of rho * rhotilde, descending.
// Computed as the singular values of sqrt(rho) * (sy x sy) * conj(sqrt(rho)),
// which is numerically exact for the structurally zero lambdas that the
// sqrt-of-eigenvalue route smears to ~1e-8.
WoottersSpectrum wootters_spectrum(const ComplexMatrix& rho);

}  // namespace csent

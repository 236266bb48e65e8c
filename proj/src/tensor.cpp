// tensor.cpp

#include "csent/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace csent {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kPsdTol = 1e-10;
constexpr double kSqrtNegTol = 1e-8;
constexpr double kJacobiOff = 1e-13;

void check_finite(const ComplexMatrix& m, const char* who) {
    if (!m.all_finite())
        throw std::invalid_argument(std::string(who) + ": non-finite entry");
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("ComplexMatrix: zero dimension");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = std::conj((*this)(i, j));
    return m;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& z : data_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::hermiticity_defect() const {
    if (rows_ != cols_) return std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

bool ComplexMatrix::all_finite() const {
    for (const cplx& z : data_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    ComplexMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum: dimension mismatch");
    ComplexMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix difference: dimension mismatch");
    ComplexMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
    ComplexMatrix c = a;
    for (cplx& z : c.data_) z *= s;
    return c;
}

StateVector::StateVector(int n, std::vector<cplx> amps)
    : num_qubits(n), amplitudes(std::move(amps)) {
    if (n < 1 || n > kMaxQubits)
        throw std::invalid_argument("StateVector: qubit count out of range");
    if (amplitudes.size() != (std::size_t{1} << n))
        throw std::invalid_argument("StateVector: amplitude count != 2^n");
    double nrm = norm();
    if (std::abs(nrm - 1.0) > 1e-12)
        throw std::invalid_argument("StateVector: not unit norm");
}

double StateVector::norm() const {
    double s = 0.0;
    for (const cplx& z : amplitudes) s += std::norm(z);
    return std::sqrt(s);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_finite(a, "kron");
    check_finite(b, "kron");
    if (a.rows() * b.rows() > kMaxDim || a.cols() * b.cols() > kMaxDim)
        throw std::invalid_argument("kron: result exceeds 64x64");
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return c;
}

ComplexMatrix partial_trace(const StateVector& state, const std::vector<int>& keep) {
    const int n = state.num_qubits;
    std::vector<bool> seen(n, false);
    for (int q : keep) {
        if (q < 0 || q >= n) throw std::invalid_argument("partial_trace: qubit index out of range");
        if (seen[q]) throw std::invalid_argument("partial_trace: duplicate qubit index");
        seen[q] = true;
    }
    const int k = static_cast<int>(keep.size());
    std::vector<int> rest;
    for (int q = 0; q < n; ++q)
        if (!seen[q]) rest.push_back(q);

    // Qubit q occupies bit (n-1-q) of a basis index.
    auto scatter = [&](std::size_t sub, const std::vector<int>& qs) {
        std::size_t idx = 0;
        for (std::size_t b = 0; b < qs.size(); ++b)
            if (sub >> (qs.size() - 1 - b) & 1) idx |= std::size_t{1} << (n - 1 - qs[b]);
        return idx;
    };

    const std::size_t dk = std::size_t{1} << k;
    const std::size_t dr = std::size_t{1} << rest.size();
    ComplexMatrix rho(dk, dk);
    for (std::size_t i = 0; i < dk; ++i) {
        std::size_t bi = scatter(i, keep);
        for (std::size_t j = 0; j < dk; ++j) {
            std::size_t bj = scatter(j, keep);
            cplx s = 0.0;
            for (std::size_t r = 0; r < dr; ++r) {
                std::size_t br = scatter(r, rest);
                s += state.amplitudes[bi | br] * std::conj(state.amplitudes[bj | br]);
            }
            rho(i, j) = s;
        }
    }
    return rho;
}

EigResult hermitian_eig(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eig: not square");
    if (m.rows() > kMaxDim) throw std::invalid_argument("hermitian_eig: matrix exceeds 64x64");
    check_finite(m, "hermitian_eig");
    double scale = std::max(1.0, m.max_abs());
    if (m.hermiticity_defect() > kHermTol * scale)
        throw std::invalid_argument("hermitian_eig: matrix is not Hermitian");

    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double off_tol = kJacobiOff * scale;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off < off_tol) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double b = std::abs(a(p, q));
                if (b < off_tol) continue;
                // Phase factor folds the complex pivot into a real Givens rotation.
                cplx u = a(p, q) / b;
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double tau = (app - aqq) / (2.0 * b);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                cplx us = std::conj(u) * s;
                cplx uc = std::conj(u) * c;
                // Columns: A <- A U  with U = [[c, -s],[conj(u) s, conj(u) c]].
                for (std::size_t i = 0; i < n; ++i) {
                    cplx aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip + us * aiq;
                    a(i, q) = -s * aip + uc * aiq;
                    cplx vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip + us * viq;
                    v(i, q) = -s * vip + uc * viq;
                }
                // Rows: A <- U^dagger A.
                for (std::size_t j = 0; j < n; ++j) {
                    cplx apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj + u * s * aqj;
                    a(q, j) = -s * apj + u * c * aqj;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    EigResult r;
    r.values.resize(n);
    r.vectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        r.values[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) r.vectors(i, j) = v(i, order[j]);
    }
    return r;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m) {
    EigResult e = hermitian_eig(m);
    const std::size_t n = m.rows();
    std::vector<double> root(n);
    for (std::size_t i = 0; i < n; ++i) {
        double val = e.values[i];
        if (val < -kSqrtNegTol)
            throw std::invalid_argument("matrix_sqrt_psd: matrix is not positive semidefinite");
        root[i] = val > 0.0 ? std::sqrt(val) : 0.0;
    }
    ComplexMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx z = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                z += e.vectors(i, k) * root[k] * std::conj(e.vectors(j, k));
            s(i, j) = z;
        }
    return s;
}

ComplexMatrix spin_flip(const ComplexMatrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw std::invalid_argument("spin_flip: expected a 4x4 matrix");
    // (sy x sy) has entries s_i on the antidiagonal with s = (-1, 1, 1, -1).
    static const double s[4] = {-1.0, 1.0, 1.0, -1.0};
    ComplexMatrix out(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            out(i, j) = s[i] * s[j] * std::conj(rho(3 - i, 3 - j));
    return out;
}

WoottersSpectrum wootters_spectrum(const ComplexMatrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw std::invalid_argument("wootters_spectrum: expected a 4x4 density matrix");
    check_finite(rho, "wootters_spectrum");
    double scale = std::max(1.0, rho.max_abs());
    if (rho.hermiticity_defect() > kHermTol * scale)
        throw std::invalid_argument("wootters_spectrum: matrix is not Hermitian");
    EigResult er = hermitian_eig(rho);
    if (er.values.back() < -kPsdTol)
        throw std::invalid_argument("wootters_spectrum: matrix is not positive semidefinite");

    ComplexMatrix root = matrix_sqrt_psd(rho);
    static const double sgn[4] = {-1.0, 1.0, 1.0, -1.0};
    // B = sqrt(rho) * (sy x sy) * conj(sqrt(rho)); B B^dagger = sqrt(rho) rhotilde sqrt(rho).
    ComplexMatrix b(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            cplx z = 0.0;
            for (std::size_t k = 0; k < 4; ++k)
                z += root(i, k) * sgn[k] * std::conj(root(3 - k, j));
            b(i, j) = z;
        }

    // Singular values of B as the nonnegative eigenvalues of [[0, B],[B^dagger, 0]].
    ComplexMatrix aug(8, 8);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            aug(i, 4 + j) = b(i, j);
            aug(4 + i, j) = std::conj(b(j, i));
        }
    EigResult ea = hermitian_eig(aug);

    WoottersSpectrum w{};
    for (int i = 0; i < 4; ++i) {
        double lam = ea.values[i];  // descending; top four are the singular values
        if (lam < -1e-10) throw std::invalid_argument("wootters_spectrum: negative lambda");
        w.lambda[i] = lam > 0.0 ? lam : 0.0;
    }
    return w;
}

}  // namespace csent

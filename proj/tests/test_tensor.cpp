#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "csent/tensor.hpp"

using namespace csent;

namespace {

const double kInvRt2 = 1.0 / std::sqrt(2.0);

ComplexMatrix pure_density(const StateVector& psi) {
    ComplexMatrix rho(psi.dim(), psi.dim());
    for (std::size_t i = 0; i < psi.dim(); ++i)
        for (std::size_t j = 0; j < psi.dim(); ++j)
            rho(i, j) = psi.amplitudes[i] * std::conj(psi.amplitudes[j]);
    return rho;
}

}  // namespace

TEST_CASE("kron of Pauli y with itself") {
    ComplexMatrix sy(2, 2);
    sy(0, 1) = cplx(0, -1);
    sy(1, 0) = cplx(0, 1);
    ComplexMatrix yy = kron(sy, sy);
    REQUIRE(yy.rows() == 4);
    CHECK(yy(0, 3) == cplx(-1, 0));
    CHECK(yy(1, 2) == cplx(1, 0));
    CHECK(yy(2, 1) == cplx(1, 0));
    CHECK(yy(3, 0) == cplx(-1, 0));
    CHECK(yy(0, 0) == cplx(0, 0));
}

TEST_CASE("kron rejects oversized results") {
    ComplexMatrix a = ComplexMatrix::identity(16);
    ComplexMatrix b = ComplexMatrix::identity(8);
    CHECK_THROWS_AS((void)kron(a, b), std::invalid_argument);
}

TEST_CASE("state vector validation") {
    CHECK_THROWS_AS(StateVector(2, {1.0, 0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(StateVector(1, {0.9, 0.1}), std::invalid_argument);
    CHECK_THROWS_AS(StateVector(7, std::vector<cplx>(128, 0.0)), std::invalid_argument);
    StateVector ok(1, {kInvRt2, cplx(0, kInvRt2)});
    CHECK(ok.dim() == 2);
    CHECK(ok.norm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("partial trace respects big-endian qubit order") {
    // |01>: qubit 0 in |0>, qubit 1 in |1>.
    StateVector psi(2, {0.0, 1.0, 0.0, 0.0});
    ComplexMatrix r0 = partial_trace(psi, {0});
    ComplexMatrix r1 = partial_trace(psi, {1});
    CHECK(std::abs(r0(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(r0(1, 1)) < 1e-15);
    CHECK(std::abs(r1(1, 1) - 1.0) < 1e-15);
    CHECK(std::abs(r1(0, 0)) < 1e-15);
}

TEST_CASE("partial trace of a Bell pair is maximally mixed") {
    StateVector bell(2, {kInvRt2, 0.0, 0.0, kInvRt2});
    ComplexMatrix r = partial_trace(bell, {0});
    CHECK(std::abs(r(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(r(1, 1) - 0.5) < 1e-15);
    CHECK(std::abs(r(0, 1)) < 1e-15);
}

TEST_CASE("partial trace keeps qubit order") {
    // |psi> = |0>_0 x Bell_{1,2}: keeping {2,1} transposes the pair.
    std::vector<cplx> amps(8, 0.0);
    amps[0b000] = kInvRt2;
    amps[0b011] = kInvRt2;
    StateVector psi(3, std::move(amps));
    ComplexMatrix fwd = partial_trace(psi, {1, 2});
    ComplexMatrix rev = partial_trace(psi, {2, 1});
    CHECK(std::abs(fwd(0, 3) - 0.5) < 1e-15);
    CHECK(std::abs(rev(0, 3) - 0.5) < 1e-15);  // Bell state is swap-symmetric
    CHECK(std::abs(fwd(0, 0) - 0.5) < 1e-15);
}

TEST_CASE("hermitian eigendecomposition") {
    ComplexMatrix m(3, 3);
    m(0, 0) = 2.0;
    m(1, 1) = 2.0;
    m(2, 2) = 1.0;
    m(0, 1) = cplx(0, 1);
    m(1, 0) = cplx(0, -1);
    EigResult e = hermitian_eig(m);
    CHECK(e.values[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e.values[2] == doctest::Approx(1.0).epsilon(1e-12));
    // residual of M v = lambda v for the top eigenvector
    for (std::size_t i = 0; i < 3; ++i) {
        cplx mv = 0.0;
        for (std::size_t j = 0; j < 3; ++j) mv += m(i, j) * e.vectors(j, 0);
        CHECK(std::abs(mv - e.values[0] * e.vectors(i, 0)) < 1e-12);
    }
}

TEST_CASE("psd square root squares back") {
    ComplexMatrix m(2, 2);
    m(0, 0) = 2.0;
    m(1, 1) = 1.0;
    m(0, 1) = cplx(0.5, 0.25);
    m(1, 0) = std::conj(m(0, 1));
    ComplexMatrix r = matrix_sqrt_psd(m);
    ComplexMatrix sq = r * r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(std::abs(sq(i, j) - m(i, j)) < 1e-12);
}

TEST_CASE("psd square root rejects negative matrices") {
    ComplexMatrix m = ComplexMatrix::identity(2);
    m(1, 1) = -0.5;
    CHECK_THROWS_AS((void)matrix_sqrt_psd(m), std::invalid_argument);
}

TEST_CASE("Wootters spectrum of a Bell state") {
    StateVector bell(2, {kInvRt2, 0.0, 0.0, kInvRt2});
    WoottersSpectrum w = wootters_spectrum(pure_density(bell));
    CHECK(w.lambda[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(w.lambda[1]) < 1e-12);
    CHECK(std::abs(w.lambda[3]) < 1e-12);
    CHECK(w.concurrence() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Wootters spectrum of a product state") {
    StateVector prod(2, {1.0, 0.0, 0.0, 0.0});
    WoottersSpectrum w = wootters_spectrum(pure_density(prod));
    CHECK(w.concurrence() == 0.0);
}

TEST_CASE("Werner state concurrence") {
    double p = 0.8;
    StateVector bell(2, {kInvRt2, 0.0, 0.0, kInvRt2});
    ComplexMatrix rho = cplx(p) * pure_density(bell) +
                        cplx((1.0 - p) / 4.0) * ComplexMatrix::identity(4);
    WoottersSpectrum w = wootters_spectrum(rho);
    CHECK(w.concurrence() == doctest::Approx((3.0 * p - 1.0) / 2.0).epsilon(1e-10));
}

TEST_CASE("Wootters spectrum rejects non-density input") {
    ComplexMatrix m = ComplexMatrix::identity(4);
    m(0, 1) = 0.3;  // not Hermitian
    CHECK_THROWS_AS((void)wootters_spectrum(m), std::invalid_argument);
}

TEST_CASE("spin flip of the maximally mixed state") {
    ComplexMatrix rho = cplx(0.25) * ComplexMatrix::identity(4);
    ComplexMatrix t = spin_flip(rho);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(std::abs(t(i, j) - rho(i, j)) < 1e-15);
}

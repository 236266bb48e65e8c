// csx_forms.cpp

#include "csent/csx_forms.hpp"

#include <cmath>
#include <stdexcept>

namespace csent {

namespace {

constexpr double kNormTol = 1e-12;

double norm4(cplx a, cplx b, cplx c, cplx d) {
    return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
}

}  // namespace

CSX4Coeffs::CSX4Coeffs(cplx a, cplx c, cplx d, cplx f) : a(a), c(c), d(d), f(f) {
    if (std::abs(norm4(a, c, d, f) - 1.0) > kNormTol)
        throw std::invalid_argument("CSX4Coeffs: not unit norm");
}

CSX4Coeffs CSX4Coeffs::normalized(cplx a, cplx c, cplx d, cplx f) {
    double n = norm4(a, c, d, f);
    if (n <= 0.0) throw std::invalid_argument("CSX4Coeffs: zero vector");
    return CSX4Coeffs(a / n, c / n, d / n, f / n);
}

CSState CSX4Coeffs::to_state() const {
    // necklaces(4): 0000, 0001, 0011, 0101, 0111, 1111
    return CSState(4, {a, 0.0, c, d, 0.0, f});
}

CSX4Coeffs CSX4Coeffs::from_state(const CSState& s) {
    if (s.num_qubits() != 4 || !s.is_csx(1e-12))
        throw std::invalid_argument("CSX4Coeffs: state is not 4-qubit CSX");
    const auto& amps = s.amplitudes();
    return CSX4Coeffs(amps[0], amps[2], amps[3], amps[5]);
}

CSX5Coeffs::CSX5Coeffs(cplx a, cplx c, cplx d, cplx g) : a(a), c(c), d(d), g(g) {
    if (std::abs(norm4(a, c, d, g) - 1.0) > kNormTol)
        throw std::invalid_argument("CSX5Coeffs: not unit norm");
}

CSX5Coeffs CSX5Coeffs::normalized(cplx a, cplx c, cplx d, cplx g) {
    double n = norm4(a, c, d, g);
    if (n <= 0.0) throw std::invalid_argument("CSX5Coeffs: zero vector");
    return CSX5Coeffs(a / n, c / n, d / n, g / n);
}

CSState CSX5Coeffs::to_state() const {
    // necklaces(5): 00000, 00001, 00011, 00101, 00111, 01011, 01111, 11111
    return CSState(5, {a, 0.0, c, d, 0.0, 0.0, g, 0.0});
}

CSX5Coeffs CSX5Coeffs::from_state(const CSState& s) {
    if (s.num_qubits() != 5 || !s.is_csx(1e-12))
        throw std::invalid_argument("CSX5Coeffs: state is not 5-qubit CSX");
    const auto& amps = s.amplitudes();
    return CSX5Coeffs(amps[0], amps[2], amps[3], amps[6]);
}

BranchValues csx4_branches(const CSX4Coeffs& x) {
    const double A = std::norm(x.a), C = std::norm(x.c), D = std::norm(x.d), F = std::norm(x.f);
    BranchValues b;
    b.s1_mu = std::abs(x.c * std::conj(x.d) + x.d * std::conj(x.c)) / std::sqrt(2.0) -
              2.0 * std::sqrt((A + C / 4.0) * (C / 4.0 + F));
    b.s1_nu = std::abs(x.a * std::conj(x.c) + x.c * std::conj(x.f)) - C / 2.0 - D;
    b.s2_mu = C - 2.0 * std::sqrt((A + D / 2.0) * (D / 2.0 + F));
    b.s2_nu = std::sqrt(2.0) * std::abs(x.a * std::conj(x.d) + x.d * std::conj(x.f)) - C;
    return b;
}

BranchValues csx5_branches(const CSX5Coeffs& x) {
    const double A = std::norm(x.a), C = std::norm(x.c), D = std::norm(x.d), G = std::norm(x.g);
    const double rt5 = std::sqrt(5.0);
    const cplx dc = x.d * std::conj(x.c) + x.c * std::conj(x.d);
    BranchValues b;
    b.s1_mu = 0.4 * (std::abs(dc + D + G) - std::sqrt((5.0 * A + 2.0 * C + D) * (C + 3.0 * G)));
    b.s1_nu = 0.4 * (std::abs(rt5 * x.a * std::conj(x.c) + 2.0 * x.c * std::conj(x.g) +
                              x.d * std::conj(x.g)) -
                     C - 2.0 * D - G);
    b.s2_mu = 0.4 * (std::abs(dc + C + G) - std::sqrt((5.0 * A + C + 2.0 * D) * (D + 3.0 * G)));
    b.s2_nu = 0.4 * (std::abs(rt5 * x.a * std::conj(x.d) + 2.0 * x.d * std::conj(x.g) +
                              x.c * std::conj(x.g)) -
                     2.0 * C - D - G);
    return b;
}

}  // namespace csent

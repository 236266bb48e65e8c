// concurrence.cpp

#include "csent/concurrence.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace csent {

ComplexMatrix pair_rdm(const CSState& state, int spacing) {
    const int n = state.num_qubits();
    if (spacing < 1 || spacing >= n)
        throw std::invalid_argument("pair_rdm: spacing out of range");
    return partial_trace(embed(state), {0, spacing});
}

double subconcurrence(const ComplexMatrix& rho) { return wootters_spectrum(rho).subconcurrence(); }

double concurrence(const ComplexMatrix& rho) { return wootters_spectrum(rho).concurrence(); }

XParams extract_x(const ComplexMatrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw std::invalid_argument("extract_x: expected a 4x4 matrix");
    double worst = 0.0;
    std::size_t wi = 0, wj = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            bool x_entry = (i == j) || (i + j == 3);
            if (x_entry) continue;
            double a = std::abs(rho(i, j));
            if (a > worst) {
                worst = a;
                wi = i;
                wj = j;
            }
        }
    if (worst > 1e-10) {
        std::ostringstream os;
        os << "extract_x: entry (" << wi << "," << wj << ") = " << worst << " is not X-form";
        throw std::invalid_argument(os.str());
    }
    XParams p;
    p.alpha = rho(0, 0).real();
    p.beta = rho(1, 1).real();
    p.gamma = rho(2, 2).real();
    p.delta = rho(3, 3).real();
    p.mu = rho(1, 2);
    p.nu = rho(0, 3);
    return p;
}

ComplexMatrix assemble_x(const XParams& p) {
    ComplexMatrix rho(4, 4);
    rho(0, 0) = p.alpha;
    rho(1, 1) = p.beta;
    rho(2, 2) = p.gamma;
    rho(3, 3) = p.delta;
    rho(1, 2) = p.mu;
    rho(2, 1) = std::conj(p.mu);
    rho(0, 3) = p.nu;
    rho(3, 0) = std::conj(p.nu);
    return rho;
}

std::pair<double, double> x_subconcurrences(const XParams& p) {
    double s_mu = 2.0 * (std::abs(p.mu) - std::sqrt(p.alpha * p.delta));
    double s_nu = 2.0 * (std::abs(p.nu) - std::sqrt(p.beta * p.gamma));
    return {s_mu, s_nu};
}

}  // namespace csent

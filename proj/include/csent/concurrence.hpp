// concurrence.hpp
// Pairwise concurrence and subconcurrence for 2-qubit reduced density
// matrices, X-form extraction and the X-state branch expressions.

#pragma once

#include <utility>

#include "csent/cyclic.hpp"
#include "csent/tensor.hpp"

namespace csent {

// The six entries of an X-form 2-qubit density matrix
//   [[alpha, 0, 0, nu], [0, beta, mu, 0], [0, mu*, gamma, 0], [nu*, 0, 0, delta]].
struct XParams {
    double alpha = 0.0, beta = 0.0, gamma = 0.0, delta = 0.0;
    cplx mu, nu;
};

// A (sC1, sC2) subconcurrence pair for one state.
struct ConcurrencePoint {
    double s1 = 0.0;
    double s2 = 0.0;
};

// Reduced density matrix of parties (0, k); by cyclic symmetry identical
// to any other spacing-k pair.
ComplexMatrix pair_rdm(const CSState& state, int spacing);

double subconcurrence(const ComplexMatrix& rho);
double concurrence(const ComplexMatrix& rho);

// Requires the eight non-X entries to vanish (1e-10); the error message
// reports the largest violator.
XParams extract_x(const ComplexMatrix& rho);
ComplexMatrix assemble_x(const XParams& p);

// Unclamped branch values (s_mu, s_nu) = (2(|mu|-sqrt(alpha delta)),
// 2(|nu|-sqrt(beta gamma))); the subconcurrence is their max whenever
// the dominant lambda comes from the matching block.
std::pair<double, double> x_subconcurrences(const XParams& p);

}  // namespace csent

// csx_forms.hpp
// Closed-form subconcurrence branches for 4 and 5 qubit CSX states,
// evaluated directly from orbit coefficients. The expressions carry the
// overall factor 2 of the X-state concurrence, so
// max(0, s1_mu, s1_nu) is the spacing-1 concurrence and likewise for
// spacing 2.

#pragma once

#include "csent/cyclic.hpp"
#include "csent/tensor.hpp"

namespace csent {

// Orbit amplitudes of a 4-qubit CSX state (orbits 0000, 0011, 0101, 1111).
struct CSX4Coeffs {
    cplx a, c, d, f;

    CSX4Coeffs(cplx a, cplx c, cplx d, cplx f);
    static CSX4Coeffs normalized(cplx a, cplx c, cplx d, cplx f);
    CSState to_state() const;
    static CSX4Coeffs from_state(const CSState& s);
};

// Orbit amplitudes of a 5-qubit CSX state (orbits 00000, 00011, 00101, 01111).
struct CSX5Coeffs {
    cplx a, c, d, g;

    CSX5Coeffs(cplx a, cplx c, cplx d, cplx g);
    static CSX5Coeffs normalized(cplx a, cplx c, cplx d, cplx g);
    CSState to_state() const;
    static CSX5Coeffs from_state(const CSState& s);
};

struct BranchValues {
    double s1_mu = 0.0;
    double s1_nu = 0.0;
    double s2_mu = 0.0;
    double s2_nu = 0.0;

    double s1() const { return s1_mu > s1_nu ? s1_mu : s1_nu; }
    double s2() const { return s2_mu > s2_nu ? s2_mu : s2_nu; }
};

BranchValues csx4_branches(const CSX4Coeffs& c);

// For complex coefficients the mu-branch coherence is
// (dc* + cd* + |d|^2 + |g|^2)/5, so the modulus wraps the whole sum;
// on phase-free coefficients this reduces to the split form.
BranchValues csx5_branches(const CSX5Coeffs& c);

}  // namespace csent

// extremal.hpp
// Maximization of the CSX branch expressions, monogamy threshold
// extraction, and achievable-region boundary tracing: reduced-domain
// spherical parametrizations, Jacobian zero level sets, outer
// envelopes, the piecewise 4-qubit bound and the 5-qubit linear bounds.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "csent/concurrence.hpp"
#include "csent/csx_forms.hpp"

namespace csent {

enum class Branch { S1Mu, S1Nu, S2Mu, S2Nu };

// Which branch pair a reduced domain targets: first the spacing-1
// branch, then the spacing-2 branch.
enum class Pairing { NuMu, MuNu, NuNu, MuMu };

std::string to_string(Branch b);
std::string to_string(Pairing p);

// 1 or 2 angles, each in [0, pi/2].
struct SphericalPoint {
    std::vector<double> angles;
};

// A coefficient-domain reduction with its spherical parametrization.
// Coefficients are ordered (a, c, d, f) for n = 4 and (a, c, d, g) for
// n = 5.
struct Reduction {
    int n = 4;
    Pairing pairing = Pairing::NuMu;
    int num_angles = 2;
    std::string constraint;  // human-readable, e.g. "d=0"

    std::array<double, 4> coefficients(const SphericalPoint& p) const;
};

Reduction reduce_domain(int n, Pairing pairing);

// Branch values of the reduced state at angles p, ordered
// (spacing-1 branch, spacing-2 branch) of the pairing.
ConcurrencePoint branch_pair_map(const Reduction& red, const SphericalPoint& p);

// Determinant of the 2x2 Jacobian of branch_pair_map by central
// differences; rejects 1-angle parametrizations.
double jacobian_det(const Reduction& red, const SphericalPoint& p, double step = 1e-5);

enum class CurveSource { DomainEdge, JacobianZero, ClosedForm, Envelope };

struct BoundaryCurve {
    CurveSource source = CurveSource::DomainEdge;
    std::string param_id;
    std::vector<ConcurrencePoint> points;
};

// Images of the domain edges plus marching-squares zero level sets of
// the Jacobian determinant, mapped to the (sC1, sC2) plane.
std::vector<BoundaryCurve> trace_boundary(const Reduction& red, int resolution);

// All boundary curves bounding the n-qubit achievable region: every
// pairing's traced curves for n = 4; for n = 5 the traced (mu, mu)
// curves plus closed-form segments for the line-bounded pairings.
std::vector<BoundaryCurve> region_boundary(int n, int resolution);

// Upper envelope: per-s1-bin maximum of sC2 over all curves.
BoundaryCurve envelope(const std::vector<BoundaryCurve>& curves, int bins = 1000);

// Monotone upper profile of an envelope for containment tests. A point
// is inside when its s2 does not exceed the profile at its s1 (and the
// region is unbounded below).
class EnvelopeProfile {
public:
    EnvelopeProfile(const BoundaryCurve& env, int bins = 1000);
    double upper_s2(double s1) const;
    bool contains(const ConcurrencePoint& p, double tol) const;

private:
    std::vector<double> stair_;
    double lo_, step_;
};

// Piecewise closed-form bound on sC2 given sC1 for 4 qubits; the first
// branch is reproduced verbatim even though it is inconsistent with the
// traced boundary (see README), the second branch is exact.
double eq49_bound(double s1);

struct BranchMax {
    Branch branch;
    int n = 4;
    double value = 0.0;
    std::array<double, 4> coeffs{};  // argmax, real nonnegative
};

// Global maximum of a spacing-1 branch over real nonnegative
// coefficients on the unit sphere: dense grid then per-angle
// golden-section refinement.
BranchMax maximize_branch(Branch b, int n, int grid = 200);

struct Threshold {
    int n = 4;
    int spacing = 1;
    double value = 0.0;
    bool closed_form = false;
};

// Largest subconcurrence of one spacing compatible with a nonnegative
// subconcurrence of the other, per spacing.
std::vector<Threshold> thresholds(int n, int resolution = 512);

struct LinearBoundCheck {
    std::string name;
    std::array<double, 4> weights{};  // over (s1_mu, s1_nu, s2_mu, s2_nu)
    double bound = 0.0;
    double maximum = 0.0;  // numerically maximized value
};

// The four 5-qubit linear constraints, each re-maximized numerically.
std::vector<LinearBoundCheck> linear_bounds_5q(int grid = 160);

struct Theorem2Result {
    double max_c1 = 0.0;            // clamped concurrence
    double max_subconcurrence = -1.0;
};

// Random complex CS perturbations of the two-Bell-pair state:
// |psi'> = |psi_2^(4)> + epsilon |psi^(4)>, normalized; returns the
// largest spacing-1 concurrence over the trials.
Theorem2Result theorem2_check(double epsilon, std::uint64_t trials, std::uint64_t seed);

}  // namespace csent

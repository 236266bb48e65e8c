// sampler.hpp
// Reproducible random CS/CSX states and bulk (sC1, sC2) scatter
// datasets. Amplitudes are independent standard complex Gaussians,
// normalized (the rotation-invariant measure on the subspace), drawn
// from SplitMix64 streams keyed by (seed, index) so trials are
// order-independent.

#pragma once

#include <cstdint>
#include <vector>

#include "csent/concurrence.hpp"
#include "csent/cyclic.hpp"

namespace csent {

enum class Subspace { CS, CSX };
enum class ScatterMode { Concurrence, Subconcurrence };

struct SampleSpec {
    int n = 4;  // 4 or 5
    Subspace subspace = Subspace::CS;
    std::uint64_t count = 1;
    std::uint64_t seed = 0;
};

struct ScatterDataset {
    SampleSpec spec;
    ScatterMode mode = ScatterMode::Subconcurrence;
    std::vector<ConcurrencePoint> points;
};

// Counter-based Gaussian stream; deterministic in (seed, index).
class GaussianStream {
public:
    GaussianStream(std::uint64_t seed, std::uint64_t index);
    double next();        // standard normal
    cplx next_complex();  // independent N(0,1) real and imaginary parts

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

CSState random_state(const SampleSpec& spec, std::uint64_t index);

// (sC1, sC2) per trial, via the generic Wootters pipeline; clamped at 0
// when mode is Concurrence. Trials are fanned out across threads.
ScatterDataset scatter(const SampleSpec& spec, ScatterMode mode);

}  // namespace csent

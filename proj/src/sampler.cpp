// sampler.cpp

#include "csent/sampler.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace csent {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t mix_key(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s ^= index * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL;
    return a ^ splitmix64(s);
}

}  // namespace

GaussianStream::GaussianStream(std::uint64_t seed, std::uint64_t index)
    : state_(mix_key(seed, index)) {}

double GaussianStream::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller on two uniforms in (0, 1].
    double u1 = (splitmix64(state_) >> 11) * 0x1p-53;
    double u2 = (splitmix64(state_) >> 11) * 0x1p-53;
    double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    double phi = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
}

cplx GaussianStream::next_complex() {
    double re = next();
    double im = next();
    return {re, im};
}

CSState random_state(const SampleSpec& spec, std::uint64_t index) {
    if (spec.n < 2 || spec.n > kMaxQubits)
        throw std::invalid_argument("random_state: n out of range");
    if (index >= spec.count) throw std::invalid_argument("random_state: index >= count");
    GaussianStream rng(spec.seed, index);
    auto orbs = necklaces(spec.n);
    std::vector<cplx> amps(orbs.size(), cplx{});
    for (std::size_t i = 0; i < orbs.size(); ++i) {
        if (spec.subspace == Subspace::CSX && orbs[i].weight() % 2 != 0) continue;
        amps[i] = rng.next_complex();
    }
    return CSState::normalized(spec.n, std::move(amps));
}

ScatterDataset scatter(const SampleSpec& spec, ScatterMode mode) {
    if (spec.n != 4 && spec.n != 5)
        throw std::invalid_argument("scatter: n must be 4 or 5");
    if (spec.count < 1) throw std::invalid_argument("scatter: count must be positive");

    ScatterDataset ds;
    ds.spec = spec;
    ds.mode = mode;
    ds.points.resize(spec.count);

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            CSState st = random_state(spec, i);
            double s1 = subconcurrence(pair_rdm(st, 1));
            double s2 = subconcurrence(pair_rdm(st, 2));
            if (mode == ScatterMode::Concurrence) {
                s1 = s1 > 0.0 ? s1 : 0.0;
                s2 = s2 > 0.0 ? s2 : 0.0;
            }
            ds.points[i] = ConcurrencePoint{s1, s2};
        }
    };

    unsigned workers = std::thread::hardware_concurrency();
    if (workers < 2 || spec.count < 256) {
        run_range(0, spec.count);
        return ds;
    }
    std::vector<std::thread> pool;
    std::uint64_t chunk = (spec.count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t lo = w * chunk;
        std::uint64_t hi = std::min<std::uint64_t>(spec.count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(run_range, lo, hi);
    }
    for (auto& t : pool) t.join();
    return ds;
}

}  // namespace csent

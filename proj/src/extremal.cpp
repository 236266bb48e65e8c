// extremal.cpp

#include "csent/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

#include "csent/cyclic.hpp"
#include "csent/sampler.hpp"

namespace csent {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kInf = std::numeric_limits<double>::infinity();

using Coeffs = std::array<double, 4>;
using Angles3 = std::array<double, 3>;

// Full real nonnegative unit sphere in 4 coefficients.
Coeffs sphere3(double u, double v, double w) {
    double su = std::sin(u), sv = std::sin(v);
    return {std::cos(u), su * std::cos(v), su * sv * std::cos(w), su * sv * std::sin(w)};
}

BranchValues branches_at(int n, const Coeffs& x) {
    if (n == 4) return csx4_branches(CSX4Coeffs(x[0], x[1], x[2], x[3]));
    return csx5_branches(CSX5Coeffs(x[0], x[1], x[2], x[3]));
}

double pick(const BranchValues& b, Branch br) {
    switch (br) {
        case Branch::S1Mu: return b.s1_mu;
        case Branch::S1Nu: return b.s1_nu;
        case Branch::S2Mu: return b.s2_mu;
        case Branch::S2Nu: return b.s2_nu;
    }
    throw std::logic_error("pick: bad branch");
}

struct Opt3 {
    double value = -kInf;
    Angles3 angles{};
};

// Maximize a smooth objective over the angle box [0, pi/2]^3 by a dense
// grid scan followed by shrinking-window golden-section sweeps per angle.
template <class F>
Opt3 grid_golden(F&& f, int grid) {
    Opt3 best;
    double h = kHalfPi / grid;
    for (int i = 0; i <= grid; ++i)
        for (int j = 0; j <= grid; ++j)
            for (int k = 0; k <= grid; ++k) {
                double v = f({i * h, j * h, k * h});
                if (v > best.value) best = {v, {i * h, j * h, k * h}};
            }

    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    auto golden = [&](int axis, double window) {
        double lo = std::max(0.0, best.angles[axis] - window);
        double hi = std::min(kHalfPi, best.angles[axis] + window);
        auto at = [&](double t) {
            Angles3 a = best.angles;
            a[axis] = t;
            return f(a);
        };
        double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
        double f1 = at(x1), f2 = at(x2);
        while (hi - lo > 1e-12) {
            if (f1 < f2) {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + gr * (hi - lo);
                f2 = at(x2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - gr * (hi - lo);
                f1 = at(x1);
            }
        }
        double mid = (lo + hi) / 2.0, fm = at(mid);
        if (fm > best.value) {
            best.value = fm;
            best.angles[axis] = mid;
        }
    };

    double window = 2.0 * h;
    for (int cycle = 0; cycle < 120; ++cycle) {
        double before = best.value;
        for (int axis = 0; axis < 3; ++axis) golden(axis, window);
        window = std::max(window * 0.7, 1e-7);
        if (cycle > 20 && best.value - before < 1e-15) break;
    }
    return best;
}

// Compass pattern search over the 26 neighbor directions; handles
// objectives with narrow curved ridges (penalized constraints) better
// than per-axis sweeps.
template <class F>
Opt3 pattern_search(F&& f, Opt3 start, double step, double min_step) {
    Opt3 best = start;
    while (step > min_step) {
        bool moved = false;
        Opt3 cand = best;
        for (int du = -1; du <= 1; ++du)
            for (int dv = -1; dv <= 1; ++dv)
                for (int dw = -1; dw <= 1; ++dw) {
                    if (du == 0 && dv == 0 && dw == 0) continue;
                    Angles3 a = best.angles;
                    a[0] = std::clamp(a[0] + du * step, 0.0, kHalfPi);
                    a[1] = std::clamp(a[1] + dv * step, 0.0, kHalfPi);
                    a[2] = std::clamp(a[2] + dw * step, 0.0, kHalfPi);
                    double v = f(a);
                    if (v > cand.value) cand = {v, a};
                }
        if (cand.value > best.value) {
            best = cand;
            moved = true;
        }
        if (!moved) step *= 0.5;
    }
    return best;
}

}  // namespace

std::string to_string(Branch b) {
    switch (b) {
        case Branch::S1Mu: return "1mu";
        case Branch::S1Nu: return "1nu";
        case Branch::S2Mu: return "2mu";
        case Branch::S2Nu: return "2nu";
    }
    return "?";
}

std::string to_string(Pairing p) {
    switch (p) {
        case Pairing::NuMu: return "nu-mu";
        case Pairing::MuNu: return "mu-nu";
        case Pairing::NuNu: return "nu-nu";
        case Pairing::MuMu: return "mu-mu";
    }
    return "?";
}

std::array<double, 4> Reduction::coefficients(const SphericalPoint& p) const {
    if (static_cast<int>(p.angles.size()) != num_angles)
        throw std::invalid_argument("Reduction: wrong angle count");
    if (n == 4) {
        switch (pairing) {
            case Pairing::NuMu: {
                double t = p.angles[0], q = p.angles[1];
                return {std::sin(t) * std::cos(q), std::cos(t), 0.0, std::sin(t) * std::sin(q)};
            }
            case Pairing::MuNu:
            case Pairing::NuNu: {
                double t = p.angles[0], q = p.angles[1];
                double af = std::cos(t) / std::sqrt(2.0);
                return {af, std::sin(t) * std::cos(q), std::sin(t) * std::sin(q), af};
            }
            case Pairing::MuMu: {
                double z = p.angles[0];
                return {0.0, std::cos(z), std::sin(z), 0.0};
            }
        }
    }
    // n == 5, mu-mu only
    double t = p.angles[0], q = p.angles[1];
    return {0.0, std::sin(t) * std::cos(q), std::sin(t) * std::sin(q), std::cos(t)};
}

Reduction reduce_domain(int n, Pairing pairing) {
    if (n == 4) {
        switch (pairing) {
            case Pairing::NuMu: return {4, pairing, 2, "d=0"};
            case Pairing::MuNu: return {4, pairing, 2, "a=f"};
            case Pairing::NuNu: return {4, pairing, 2, "a=f"};
            case Pairing::MuMu: return {4, pairing, 1, "a=f=0"};
        }
    }
    if (n == 5) {
        if (pairing == Pairing::MuMu) return {5, pairing, 2, "a=0"};
        throw std::invalid_argument(
            "reduce_domain: 5-qubit " + to_string(pairing) +
            " region is bounded by linear constraints, no reduced parametrization");
    }
    throw std::invalid_argument("reduce_domain: n must be 4 or 5");
}

ConcurrencePoint branch_pair_map(const Reduction& red, const SphericalPoint& p) {
    auto x = red.coefficients(p);
    BranchValues b = branches_at(red.n, {x[0], x[1], x[2], x[3]});
    switch (red.pairing) {
        case Pairing::NuMu: return {b.s1_nu, b.s2_mu};
        case Pairing::MuNu: return {b.s1_mu, b.s2_nu};
        case Pairing::NuNu: return {b.s1_nu, b.s2_nu};
        case Pairing::MuMu: return {b.s1_mu, b.s2_mu};
    }
    throw std::logic_error("branch_pair_map: bad pairing");
}

double jacobian_det(const Reduction& red, const SphericalPoint& p, double step) {
    if (red.num_angles != 2)
        throw std::domain_error("jacobian_det: parametrization has a single angle");
    if (p.angles.size() != 2) throw std::invalid_argument("jacobian_det: need two angles");
    auto at = [&](double t, double q) { return branch_pair_map(red, {{t, q}}); };
    double t = p.angles[0], q = p.angles[1];
    ConcurrencePoint tp = at(t + step, q), tm = at(t - step, q);
    ConcurrencePoint qp = at(t, q + step), qm = at(t, q - step);
    double d1t = (tp.s1 - tm.s1) / (2.0 * step), d2t = (tp.s2 - tm.s2) / (2.0 * step);
    double d1q = (qp.s1 - qm.s1) / (2.0 * step), d2q = (qp.s2 - qm.s2) / (2.0 * step);
    return d1t * d2q - d1q * d2t;
}

namespace {

// Zero level set of a scalar field sampled on an (R+1)^2 node grid over
// [0, pi/2]^2, chained into polylines in angle space.
std::vector<std::vector<std::pair<double, double>>> level_set_chains(
    const std::vector<double>& field, int R) {
    const double h = kHalfPi / R;
    auto node = [&](int i, int j) { return field[static_cast<std::size_t>(j) * (R + 1) + i]; };
    // Edge ids: orientation bit, then node indices.
    auto hedge = [&](int i, int j) {
        return (std::uint64_t(0) << 42) | (std::uint64_t(i) << 21) | std::uint64_t(j);
    };
    auto vedge = [&](int i, int j) {
        return (std::uint64_t(1) << 42) | (std::uint64_t(i) << 21) | std::uint64_t(j);
    };

    std::map<std::uint64_t, std::pair<double, double>> xing;
    std::vector<std::array<std::uint64_t, 2>> segs;

    auto cross_h = [&](int i, int j) {
        double a = node(i, j), b = node(i + 1, j);
        double f = a / (a - b);
        xing[hedge(i, j)] = {(i + f) * h, j * h};
    };
    auto cross_v = [&](int i, int j) {
        double a = node(i, j), b = node(i, j + 1);
        double f = a / (a - b);
        xing[vedge(i, j)] = {i * h, (j + f) * h};
    };

    for (int j = 0; j < R; ++j)
        for (int i = 0; i < R; ++i) {
            double v00 = node(i, j), v10 = node(i + 1, j);
            double v01 = node(i, j + 1), v11 = node(i + 1, j + 1);
            bool s00 = v00 > 0, s10 = v10 > 0, s01 = v01 > 0, s11 = v11 > 0;
            std::vector<std::uint64_t> hits;
            if (s00 != s10) {
                cross_h(i, j);
                hits.push_back(hedge(i, j));
            }
            if (s10 != s11) {
                cross_v(i + 1, j);
                hits.push_back(vedge(i + 1, j));
            }
            if (s01 != s11) {
                cross_h(i, j + 1);
                hits.push_back(hedge(i, j + 1));
            }
            if (s00 != s01) {
                cross_v(i, j);
                hits.push_back(vedge(i, j));
            }
            if (hits.size() == 2) {
                segs.push_back({hits[0], hits[1]});
            } else if (hits.size() == 4) {
                // Saddle: pick pairing from the sign of the center average.
                bool center = (v00 + v10 + v01 + v11) > 0;
                if (center == s00) {
                    segs.push_back({hedge(i, j), vedge(i + 1, j)});    // around corner 10
                    segs.push_back({hedge(i, j + 1), vedge(i, j)});    // around corner 01
                } else {
                    segs.push_back({hedge(i, j), vedge(i, j)});        // around corner 00
                    segs.push_back({hedge(i, j + 1), vedge(i + 1, j)});  // around corner 11
                }
            }
        }

    std::map<std::uint64_t, std::vector<int>> adj;
    for (int s = 0; s < static_cast<int>(segs.size()); ++s) {
        adj[segs[s][0]].push_back(s);
        adj[segs[s][1]].push_back(s);
    }

    std::vector<bool> used(segs.size(), false);
    std::vector<std::vector<std::pair<double, double>>> chains;
    for (int s0 = 0; s0 < static_cast<int>(segs.size()); ++s0) {
        if (used[s0]) continue;
        used[s0] = true;
        std::deque<std::uint64_t> chain{segs[s0][0], segs[s0][1]};
        auto extend = [&](bool front) {
            for (;;) {
                std::uint64_t tip = front ? chain.front() : chain.back();
                int next = -1;
                for (int s : adj[tip])
                    if (!used[s]) {
                        next = s;
                        break;
                    }
                if (next < 0) break;
                used[next] = true;
                std::uint64_t other = segs[next][0] == tip ? segs[next][1] : segs[next][0];
                if (front)
                    chain.push_front(other);
                else
                    chain.push_back(other);
            }
        };
        extend(false);
        extend(true);
        std::vector<std::pair<double, double>> pts;
        pts.reserve(chain.size());
        for (auto e : chain) pts.push_back(xing.at(e));
        chains.push_back(std::move(pts));
    }
    return chains;
}

}  // namespace

std::vector<BoundaryCurve> trace_boundary(const Reduction& red, int resolution) {
    if (resolution < 8) throw std::invalid_argument("trace_boundary: resolution too small");
    const int R = resolution;
    const double h = kHalfPi / R;
    std::vector<BoundaryCurve> out;

    if (red.num_angles == 1) {
        BoundaryCurve c{CurveSource::DomainEdge, to_string(red.pairing) + ":edge:zeta", {}};
        c.points.reserve(R + 1);
        for (int i = 0; i <= R; ++i) c.points.push_back(branch_pair_map(red, {{i * h}}));
        out.push_back(std::move(c));
        return out;
    }

    struct Edge {
        const char* name;
        bool theta_fixed;
        double fixed;
    };
    const Edge edges[] = {{"theta=0", true, 0.0},
                          {"theta=pi/2", true, kHalfPi},
                          {"phi=0", false, 0.0},
                          {"phi=pi/2", false, kHalfPi}};
    for (const auto& e : edges) {
        BoundaryCurve c{CurveSource::DomainEdge,
                        to_string(red.pairing) + ":edge:" + e.name, {}};
        c.points.reserve(R + 1);
        for (int i = 0; i <= R; ++i) {
            double t = e.theta_fixed ? e.fixed : i * h;
            double q = e.theta_fixed ? i * h : e.fixed;
            c.points.push_back(branch_pair_map(red, {{t, q}}));
        }
        out.push_back(std::move(c));
    }

    std::vector<double> field(static_cast<std::size_t>(R + 1) * (R + 1));
    for (int j = 0; j <= R; ++j)
        for (int i = 0; i <= R; ++i)
            field[static_cast<std::size_t>(j) * (R + 1) + i] =
                jacobian_det(red, {{i * h, j * h}});

    int k = 0;
    for (auto& chain : level_set_chains(field, R)) {
        if (chain.size() < 2) continue;
        BoundaryCurve c{CurveSource::JacobianZero,
                        to_string(red.pairing) + ":jzero:" + std::to_string(k++), {}};
        c.points.reserve(chain.size());
        for (auto [t, q] : chain) c.points.push_back(branch_pair_map(red, {{t, q}}));
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

// Sampled polyline of an upper bound s2 = min of affine pieces.
BoundaryCurve line_curve(const std::string& id, double s1_max,
                         const std::vector<std::array<double, 2>>& pieces, int resolution) {
    BoundaryCurve c{CurveSource::ClosedForm, id, {}};
    c.points.reserve(resolution + 1);
    for (int i = 0; i <= resolution; ++i) {
        double s1 = -1.0 + (s1_max + 1.0) * i / resolution;
        double s2 = kInf;
        for (const auto& p : pieces) s2 = std::min(s2, p[0] + p[1] * s1);
        c.points.push_back({s1, s2});
    }
    return c;
}

}  // namespace

std::vector<BoundaryCurve> region_boundary(int n, int resolution) {
    std::vector<BoundaryCurve> out;
    if (n == 4) {
        for (Pairing p : {Pairing::NuMu, Pairing::MuNu, Pairing::NuNu, Pairing::MuMu}) {
            auto curves = trace_boundary(reduce_domain(4, p), resolution);
            out.insert(out.end(), std::make_move_iterator(curves.begin()),
                       std::make_move_iterator(curves.end()));
        }
        return out;
    }
    if (n == 5) {
        auto curves = trace_boundary(reduce_domain(5, Pairing::MuMu), resolution);
        out.insert(out.end(), std::make_move_iterator(curves.begin()),
                   std::make_move_iterator(curves.end()));
        // Line-bounded pairings: per-branch caps plus the pair constraints.
        out.push_back(line_curve("nu-nu:lines", 0.366,
                                 {{0.366, 0.0}, {0.4, -1.0}}, resolution));
        out.push_back(line_curve("mu-nu:lines", 0.468,
                                 {{0.366, 0.0}, {0.47, -1.0}, {0.8, -2.0}}, resolution));
        out.push_back(line_curve("nu-mu:lines", 0.366,
                                 {{0.468, 0.0}, {0.47, -1.0}, {0.4, -0.5}}, resolution));
        return out;
    }
    throw std::invalid_argument("region_boundary: n must be 4 or 5");
}

namespace {

constexpr double kEnvLo = -1.0, kEnvHi = 1.0;

std::vector<double> bin_max(const std::vector<BoundaryCurve>& curves, int bins) {
    std::vector<double> v(bins, -kInf);
    const double step = (kEnvHi - kEnvLo) / bins;
    auto deposit = [&](const ConcurrencePoint& p) {
        int b = static_cast<int>(std::floor((p.s1 - kEnvLo) / step));
        b = std::clamp(b, 0, bins - 1);
        v[b] = std::max(v[b], p.s2);
    };
    for (const auto& c : curves) {
        for (std::size_t i = 0; i + 1 < c.points.size(); ++i) {
            const auto& p = c.points[i];
            const auto& q = c.points[i + 1];
            int sub = 1 + static_cast<int>(std::ceil(std::abs(q.s1 - p.s1) / step * 4.0));
            for (int t = 0; t <= sub; ++t) {
                double f = static_cast<double>(t) / sub;
                deposit({p.s1 + f * (q.s1 - p.s1), p.s2 + f * (q.s2 - p.s2)});
            }
        }
        if (c.points.size() == 1) deposit(c.points[0]);
    }
    // Interpolate across interior gaps; leave leading/trailing bins empty.
    int first = -1, last = -1;
    for (int b = 0; b < bins; ++b)
        if (v[b] > -kInf) {
            if (first < 0) first = b;
            last = b;
        }
    if (first >= 0) {
        int prev = first;
        for (int b = first + 1; b <= last; ++b) {
            if (v[b] == -kInf) continue;
            for (int g = prev + 1; g < b; ++g)
                v[g] = v[prev] + (v[b] - v[prev]) * (g - prev) / double(b - prev);
            prev = b;
        }
    }
    return v;
}

}  // namespace

BoundaryCurve envelope(const std::vector<BoundaryCurve>& curves, int bins) {
    if (bins < 2) throw std::invalid_argument("envelope: bins too small");
    auto v = bin_max(curves, bins);
    const double step = (kEnvHi - kEnvLo) / bins;
    BoundaryCurve env{CurveSource::Envelope, "envelope", {}};
    for (int b = 0; b < bins; ++b) {
        if (v[b] == -kInf) continue;
        env.points.push_back({kEnvLo + (b + 0.5) * step, v[b]});
    }
    return env;
}

EnvelopeProfile::EnvelopeProfile(const BoundaryCurve& env, int bins)
    : stair_(bins, -kInf), lo_(kEnvLo), step_((kEnvHi - kEnvLo) / bins) {
    auto v = bin_max({env}, bins);
    // Smear across immediate neighbors so bin quantization cannot place
    // the profile below the curve near bin edges, then take the
    // right-to-left running maximum (the region is left-closed: lowering
    // s1 at fixed s2 stays achievable).
    for (int b = 0; b < bins; ++b) {
        double m = v[b];
        if (b > 0) m = std::max(m, v[b - 1]);
        if (b + 1 < bins) m = std::max(m, v[b + 1]);
        stair_[b] = m;
    }
    for (int b = bins - 2; b >= 0; --b) stair_[b] = std::max(stair_[b], stair_[b + 1]);
}

double EnvelopeProfile::upper_s2(double s1) const {
    if (s1 < lo_) return stair_.front();
    int b = static_cast<int>(std::floor((s1 - lo_) / step_));
    if (b >= static_cast<int>(stair_.size())) return -kInf;
    return stair_[b];
}

bool EnvelopeProfile::contains(const ConcurrencePoint& p, double tol) const {
    return p.s2 <= upper_s2(p.s1) + tol;
}

double eq49_bound(double s1) {
    if (s1 < -0.5 - 1e-12 || s1 > 0.5 + 1e-12)
        throw std::domain_error("eq49_bound: s1 outside [-1/2, 1/2]");
    s1 = std::clamp(s1, -0.5, 0.5);
    if (s1 <= 63.0 / 226.0)
        return 0.4 * (8.0 * std::sqrt(1.0 - 2.0 * s1 - 4.0 * s1 * s1) - s1 + 1.0);
    return (8.0 * std::sqrt(1.0 - s1 - 2.0 * s1 * s1) - 4.0 * s1 - 1.0) / 9.0;
}

BranchMax maximize_branch(Branch b, int n, int grid) {
    if (n != 4 && n != 5) throw std::invalid_argument("maximize_branch: n must be 4 or 5");
    if (grid < 8) throw std::invalid_argument("maximize_branch: grid too small");
    auto obj = [&](const Angles3& a) {
        return pick(branches_at(n, sphere3(a[0], a[1], a[2])), b);
    };
    Opt3 best = grid_golden(obj, grid);
    return {b, n, best.value, sphere3(best.angles[0], best.angles[1], best.angles[2])};
}

namespace {

double spacing_sc(const BranchValues& b, int spacing) {
    return spacing == 1 ? std::max(b.s1_mu, b.s1_nu) : std::max(b.s2_mu, b.s2_nu);
}

// max sC_spacing subject to sC_other >= 0, via quadratic penalty.
double constrained_threshold(int n, int spacing, int grid) {
    const double rho = 1e8;
    auto obj = [&](const Angles3& a) {
        BranchValues b = branches_at(n, sphere3(a[0], a[1], a[2]));
        double target = spacing_sc(b, spacing);
        double other = spacing_sc(b, 3 - spacing);
        double viol = other < 0.0 ? other : 0.0;
        return target - rho * viol * viol;
    };
    double h = kHalfPi / grid;
    Opt3 best;
    for (int i = 0; i <= grid; ++i)
        for (int j = 0; j <= grid; ++j)
            for (int k = 0; k <= grid; ++k) {
                double v = obj({i * h, j * h, k * h});
                if (v > best.value) best = {v, {i * h, j * h, k * h}};
            }
    best = pattern_search(obj, best, h, 1e-9);
    BranchValues b = branches_at(n, sphere3(best.angles[0], best.angles[1], best.angles[2]));
    return spacing_sc(b, spacing);
}

}  // namespace

std::vector<Threshold> thresholds(int n, int resolution) {
    if (n != 4 && n != 5) throw std::invalid_argument("thresholds: n must be 4 or 5");
    if (resolution < 32) throw std::invalid_argument("thresholds: resolution too small");
    int grid = std::clamp(resolution / 4, 48, 200);
    std::vector<Threshold> out;
    for (int spacing : {1, 2}) {
        double num = constrained_threshold(n, spacing, grid);
        Threshold t{n, spacing, num, false};
        if (n == 4) {
            double cf = spacing == 1 ? (2.0 * std::sqrt(2.0) - 1.0) / 4.0 : 0.8;
            if (std::abs(num - cf) < 5e-6) {
                t.value = cf;
                t.closed_form = true;
            }
        }
        out.push_back(t);
    }
    return out;
}

std::vector<LinearBoundCheck> linear_bounds_5q(int grid) {
    if (grid < 16) throw std::invalid_argument("linear_bounds_5q: grid too small");
    std::vector<LinearBoundCheck> checks = {
        {"sC1nu <= 0.366", {0.0, 1.0, 0.0, 0.0}, 0.366, 0.0},
        {"sC1nu + sC2nu <= 2/5", {0.0, 1.0, 0.0, 1.0}, 0.4, 0.0},
        {"sC1mu + sC2nu <= 0.47", {1.0, 0.0, 0.0, 1.0}, 0.47, 0.0},
        {"2 sC1mu + sC2nu <= 4/5", {2.0, 0.0, 0.0, 1.0}, 0.8, 0.0},
    };
    for (auto& c : checks) {
        // Unclamped subconcurrence sums: the constraints bound the signed
        // branch values, not their positive parts.
        auto obj = [&](const Angles3& a) {
            BranchValues b = branches_at(5, sphere3(a[0], a[1], a[2]));
            return c.weights[0] * b.s1_mu + c.weights[1] * b.s1_nu + c.weights[2] * b.s2_mu +
                   c.weights[3] * b.s2_nu;
        };
        c.maximum = grid_golden(obj, grid).value;
    }
    return checks;
}

Theorem2Result theorem2_check(double epsilon, std::uint64_t trials, std::uint64_t seed) {
    if (epsilon < 0.0) throw std::invalid_argument("theorem2_check: epsilon must be >= 0");
    if (trials < 1) throw std::invalid_argument("theorem2_check: need at least one trial");
    CSState base = theorem1_product(4, 2);
    SampleSpec spec{4, Subspace::CS, trials, seed};
    Theorem2Result res;
    for (std::uint64_t i = 0; i < trials; ++i) {
        CSState pert = random_state(spec, i);
        std::vector<cplx> amps = base.amplitudes();
        const auto& pa = pert.amplitudes();
        for (std::size_t k = 0; k < amps.size(); ++k) amps[k] += epsilon * pa[k];
        CSState st = CSState::normalized(4, std::move(amps));
        double s = subconcurrence(pair_rdm(st, 1));
        res.max_subconcurrence = std::max(res.max_subconcurrence, s);
    }
    res.max_c1 = std::max(0.0, res.max_subconcurrence);
    return res;
}

}  // namespace csent

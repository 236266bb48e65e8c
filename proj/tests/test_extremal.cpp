#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "csent/extremal.hpp"

using namespace csent;

namespace {
const double kRt2 = std::sqrt(2.0);
const double kThresh4 = (2.0 * kRt2 - 1.0) / 4.0;
}  // namespace

TEST_CASE("reduce_domain shapes") {
    CHECK(reduce_domain(4, Pairing::NuMu).num_angles == 2);
    CHECK(reduce_domain(4, Pairing::MuMu).num_angles == 1);
    CHECK(reduce_domain(5, Pairing::MuMu).num_angles == 2);
    CHECK_THROWS_AS((void)reduce_domain(5, Pairing::NuNu), std::invalid_argument);
    CHECK_THROWS_AS((void)reduce_domain(6, Pairing::MuMu), std::invalid_argument);
}

TEST_CASE("mu-mu map endpoints and midpoint") {
    Reduction red = reduce_domain(4, Pairing::MuMu);
    ConcurrencePoint p0 = branch_pair_map(red, {{0.0}});
    CHECK(p0.s1 == doctest::Approx(-0.5).epsilon(1e-13));
    CHECK(p0.s2 == doctest::Approx(1.0).epsilon(1e-13));
    // equal weights c = d = 1/sqrt(2): the monogamy crossing point
    ConcurrencePoint pm = branch_pair_map(red, {{std::numbers::pi / 4.0}});
    CHECK(pm.s1 == doctest::Approx(kThresh4).epsilon(1e-12));
    CHECK(std::abs(pm.s2) < 1e-13);
}

TEST_CASE("jacobian determinant") {
    Reduction red = reduce_domain(4, Pairing::NuMu);
    double j = jacobian_det(red, {{0.6, 0.7}});
    CHECK(std::isfinite(j));
    CHECK_THROWS_AS((void)jacobian_det(reduce_domain(4, Pairing::MuMu), {{0.3}}),
                    std::domain_error);
}

TEST_CASE("trace_boundary curve inventory") {
    auto curves = trace_boundary(reduce_domain(4, Pairing::MuMu), 64);
    REQUIRE(curves.size() == 1);
    CHECK(curves[0].source == CurveSource::DomainEdge);
    CHECK(curves[0].points.size() == 65);

    auto nm = trace_boundary(reduce_domain(4, Pairing::NuMu), 96);
    int edges = 0, zeros = 0;
    for (const auto& c : nm) {
        if (c.source == CurveSource::DomainEdge) ++edges;
        if (c.source == CurveSource::JacobianZero) ++zeros;
    }
    CHECK(edges == 4);
    CHECK(zeros >= 1);
}

TEST_CASE("4-qubit region envelope hits the known landmarks") {
    auto curves = region_boundary(4, 256);
    EnvelopeProfile prof(envelope(curves));
    CHECK(std::abs(prof.upper_s2(-0.5) - 1.0) < 0.02);
    CHECK(std::abs(prof.upper_s2(0.0) - 0.8) < 0.02);
    CHECK(prof.upper_s2(0.9) == -std::numeric_limits<double>::infinity());
    CHECK(prof.contains({0.1, 0.3}, 0.0));
    CHECK_FALSE(prof.contains({0.1, 0.9}, 1e-6));
}

TEST_CASE("5-qubit region envelope at the symmetric point") {
    auto curves = region_boundary(5, 256);
    EnvelopeProfile prof(envelope(curves));
    CHECK(std::abs(prof.upper_s2(0.0) - 0.418355) < 0.02);
}

TEST_CASE("piecewise bound") {
    CHECK(std::abs(eq49_bound(kThresh4)) < 1e-12);
    CHECK(eq49_bound(0.5) == doctest::Approx(-1.0 / 3.0).epsilon(1e-13));
    // first branch lies far above the traced region (known discrepancy)
    CHECK(eq49_bound(-0.5) == doctest::Approx(3.8).epsilon(1e-13));
    CHECK(eq49_bound(0.0) == doctest::Approx(3.6).epsilon(1e-13));
    CHECK_THROWS_AS((void)eq49_bound(0.6), std::domain_error);
}

TEST_CASE("branch maxima for 4 qubits") {
    BranchMax mu = maximize_branch(Branch::S1Mu, 4, 80);
    CHECK(mu.value == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(std::abs(mu.coeffs[0]) < 1e-4);  // a = 0
    CHECK(std::abs(mu.coeffs[1] - 1.0 / std::sqrt(3.0)) < 1e-4);
    CHECK(std::abs(mu.coeffs[2] - std::sqrt(2.0 / 3.0)) < 1e-4);

    BranchMax nu = maximize_branch(Branch::S1Nu, 4, 80);
    CHECK(nu.value == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(std::abs(nu.coeffs[0] - 1.0 / std::sqrt(3.0)) < 1e-4);
    CHECK(std::abs(nu.coeffs[2]) < 1e-4);  // d = 0
}

TEST_CASE("branch maxima for 5 qubits") {
    BranchMax mu = maximize_branch(Branch::S1Mu, 5, 80);
    CHECK(mu.value == doctest::Approx(0.467666837).epsilon(1e-6));
    CHECK(std::abs(mu.coeffs[0]) < 1e-4);
    CHECK(std::abs(mu.coeffs[3]) < 1e-4);
    CHECK(std::abs(mu.coeffs[1] - 0.29769) < 5e-4);
    CHECK(std::abs(mu.coeffs[2] - 0.95466) < 5e-4);

    BranchMax nu = maximize_branch(Branch::S1Nu, 5, 80);
    CHECK(nu.value == doctest::Approx((2.0 * kRt2 - 1.0) / 5.0).epsilon(1e-8));
}

TEST_CASE("monogamy thresholds") {
    auto t4 = thresholds(4, 256);
    REQUIRE(t4.size() == 2);
    CHECK(t4[0].closed_form);
    CHECK(t4[0].value == doctest::Approx(kThresh4).epsilon(1e-12));
    CHECK(t4[1].closed_form);
    CHECK(t4[1].value == doctest::Approx(0.8).epsilon(1e-12));

    auto t5 = thresholds(5, 256);
    CHECK_FALSE(t5[0].closed_form);
    CHECK(t5[0].value == doctest::Approx(0.418355020).epsilon(1e-5));
    CHECK(t5[1].value == doctest::Approx(0.418355020).epsilon(1e-5));
}

TEST_CASE("5-qubit linear bounds hold") {
    auto checks = linear_bounds_5q(96);
    REQUIRE(checks.size() == 4);
    for (const auto& c : checks) CHECK(c.maximum <= c.bound + 1e-6);
    // the pair bound on the two nu branches is tight
    CHECK(checks[1].maximum == doctest::Approx(0.4).epsilon(1e-6));
}

TEST_CASE("perturbations of the Bell-pair product keep spacing 1 separable") {
    Theorem2Result small = theorem2_check(1e-3, 200, 5);
    CHECK(small.max_c1 == 0.0);
    CHECK(small.max_subconcurrence < 0.0);
    Theorem2Result large = theorem2_check(0.5, 200, 5);
    CHECK(large.max_c1 > 0.0);
}

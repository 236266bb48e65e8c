#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "csent/concurrence.hpp"
#include "csent/cyclic.hpp"
#include "csent/sampler.hpp"

using namespace csent;

TEST_CASE("pair_rdm validates spacing") {
    CSState st = dicke(4, 1);
    CHECK_THROWS_AS((void)pair_rdm(st, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)pair_rdm(st, 4), std::invalid_argument);
    ComplexMatrix r = pair_rdm(st, 2);
    CHECK(r.rows() == 4);
    CHECK(std::abs(r.trace() - cplx(1.0)) < 1e-14);
}

TEST_CASE("pair_rdm is spacing-symmetric under cyclic shifts") {
    // spacing 3 on 4 qubits equals spacing 1
    CSState st = CSState::normalized(4, {1.0, cplx(0.2, 0.4), 0.5, -0.3, 0.8, 1.1});
    ComplexMatrix a = pair_rdm(st, 1);
    ComplexMatrix b = pair_rdm(st, 3);
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    CHECK(worst < 1e-14);
}

TEST_CASE("GHZ pairwise concurrence vanishes") {
    CSState ghz = CSState::normalized(4, {1.0, 0.0, 0.0, 0.0, 0.0, 1.0});
    CHECK(std::abs(subconcurrence(pair_rdm(ghz, 1))) < 1e-12);
    CHECK(concurrence(pair_rdm(ghz, 1)) == 0.0);
    CHECK(concurrence(pair_rdm(ghz, 2)) == 0.0);
}

TEST_CASE("W4 concurrences") {
    CSState w = dicke(4, 1);
    CHECK(concurrence(pair_rdm(w, 1)) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(concurrence(pair_rdm(w, 2)) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("x extraction round trip on CSX reduced states") {
    SampleSpec spec{5, Subspace::CSX, 16, 7};
    for (std::uint64_t i = 0; i < spec.count; ++i) {
        CSState st = random_state(spec, i);
        for (int sp : {1, 2}) {
            ComplexMatrix rho = pair_rdm(st, sp);
            XParams p = extract_x(rho);
            ComplexMatrix back = assemble_x(p);
            double worst = 0.0;
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t c = 0; c < 4; ++c)
                    worst = std::max(worst, std::abs(rho(r, c) - back(r, c)));
            CHECK(worst < 1e-14);
        }
    }
}

TEST_CASE("x extraction rejects non-X matrices") {
    // a CS state with odd-weight support has non-X pair marginals
    CSState st = CSState::normalized(4, {1.0, 1.0, 0.0, 0.0, 0.0, 0.0});
    CHECK_THROWS_WITH_AS((void)extract_x(pair_rdm(st, 1)),
                         doctest::Contains("extract_x"), std::invalid_argument);
}

TEST_CASE("x branch values reproduce the Wootters subconcurrence") {
    SampleSpec spec{4, Subspace::CSX, 64, 11};
    for (std::uint64_t i = 0; i < spec.count; ++i) {
        ComplexMatrix rho = pair_rdm(random_state(spec, i), 1);
        auto [s_mu, s_nu] = x_subconcurrences(extract_x(rho));
        CHECK(std::abs(std::max(s_mu, s_nu) - subconcurrence(rho)) < 1e-11);
    }
}

TEST_CASE("interleaved Bell pairs saturate spacing 2") {
    CSState st = theorem1_product(4, 2);
    CHECK(concurrence(pair_rdm(st, 2)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(subconcurrence(pair_rdm(st, 1)) < 0.0);
}

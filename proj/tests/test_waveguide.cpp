#include "doctest.h"

#include "aisrec/errors.hpp"
#include "aisrec/waveguide.hpp"
#include "test_helpers.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

using namespace ais;
using namespace ais::test;

TEST_CASE("ideal waveguide matches the closed form") {
    auto env = ideal_env();
    SolverOptions opts;
    opts.points_per_wavelength = 120.0;
    opts.richardson_levels = 3;
    auto modes = solve_modes(env, 600.0, opts);
    auto exact = ideal_wavenumbers(1500.0, 50.0, 600.0);
    REQUIRE(modes.count == static_cast<int>(exact.size()));
    CHECK(modes.k[0] == doctest::Approx(2.513078).epsilon(1e-6));
    for (int m = 0; m < modes.count; ++m)
        CHECK(std::fabs(modes.k[m] - exact[m]) / exact[m] < 1e-8);
}

TEST_CASE("Pekeris wavenumbers match the dispersion-relation oracle") {
    auto env = pekeris_env();
    for (double f : {600.0, 700.0, 800.0}) {
        auto modes = solve_modes(env, f);
        auto oracle = pekeris_wavenumbers(1500.0, 1800.0, 1.8, 50.0, f);
        REQUIRE(modes.count == static_cast<int>(oracle.size()));
        for (int m = 0; m < modes.count; ++m)
            CHECK(std::fabs(modes.k[m] - oracle[m]) / oracle[m] < 1e-6);
    }
}

TEST_CASE("eigenvalues bracketed between bottom and minimum water speed") {
    auto env = default_env();
    auto modes = solve_modes(env, 700.0);
    const double omega = 2.0 * M_PI * 700.0;
    CHECK(modes.count >= 5);
    for (int m = 0; m < modes.count; ++m) {
        CHECK(modes.k[m] > omega / env.bottom.speed);
        CHECK(modes.k[m] < omega / env.ssp.min_speed());
        if (m > 0) CHECK(modes.k[m] < modes.k[m - 1]);
    }
}

TEST_CASE("mode functions are orthonormal under the density-weighted product") {
    auto env = default_env();
    auto modes = solve_modes(env, 700.0);
    for (int m = 0; m < modes.count; ++m)
        for (int n = m; n < modes.count; ++n) {
            double expect = (m == n) ? 1.0 : 0.0;
            CHECK(std::fabs(modes.inner_product(m, n) - expect) < 1e-6);
        }
}

TEST_CASE("halving the depth step moves wavenumbers by less than 1e-7") {
    auto env = default_env();
    SolverOptions coarse;  // defaults
    SolverOptions fine;
    fine.points_per_wavelength = 2.0 * coarse.points_per_wavelength;
    auto a = solve_modes(env, 700.0, coarse);
    auto b = solve_modes(env, 700.0, fine);
    REQUIRE(a.count == b.count);
    for (int m = 0; m < a.count; ++m)
        CHECK(std::fabs(a.k[m] - b.k[m]) / b.k[m] < 1e-7);
}

TEST_CASE("attenuations are positive and grow toward high-order modes") {
    auto env = default_env();
    auto modes = solve_modes(env, 700.0);
    for (int m = 0; m < modes.count; ++m) CHECK(modes.alpha[m] >= 0.0);
    // bottom-interacting high modes lose more than the best-trapped mode
    double best = *std::min_element(modes.alpha.begin(), modes.alpha.end());
    CHECK(modes.alpha[modes.count - 1] > best);
}

TEST_CASE("solve_band yields one set per frequency with non-decreasing counts") {
    auto env = default_env();
    auto band = solve_band(env, 600.0, 800.0, 25.0);
    REQUIRE(band.size() == 9);
    for (std::size_t i = 1; i < band.size(); ++i)
        CHECK(band[i].count >= band[i - 1].count);

    auto single = solve_band(env, 700.0, 700.0, 1.0);
    REQUIRE(single.size() == 1);
    auto direct = solve_modes(env, 700.0);
    REQUIRE(single[0].count == direct.count);
    for (int m = 0; m < direct.count; ++m)
        CHECK(single[0].k[m] == direct.k[m]);
}

TEST_CASE("k_1 increases with frequency") {
    auto env = default_env();
    auto band = solve_band(env, 600.0, 602.0, 1.0);
    REQUIRE(band.size() == 3);
    CHECK(band[1].k[0] > band[0].k[0]);
    CHECK(band[2].k[0] > band[1].k[0]);
}

TEST_CASE("no trapped modes at absurdly low frequency") {
    auto env = default_env();
    CHECK_THROWS_AS(solve_modes(env, 1.0), NoTrappedModes);
}

TEST_CASE("environment validation rejects bad inputs") {
    auto env = default_env();
    env.bottom.speed = 1400.0;
    CHECK_THROWS_AS(solve_modes(env, 700.0), ConfigError);

    env = default_env();
    env.ssp.depth = {0.0, 30.0};
    CHECK_THROWS_AS(solve_modes(env, 700.0), ConfigError);
}

TEST_CASE("mode table CSV export") {
    auto env = default_env();
    auto modes = solve_modes(env, 700.0);
    const char* path = "modes_tmp.csv";
    write_mode_csv(modes, path);
    std::ifstream f(path);
    REQUIRE(f.good());
    std::string header;
    std::getline(f, header);
    CHECK(header == "m,k_m,alpha_m");
    int rows = 0;
    std::string line;
    while (std::getline(f, line))
        if (!line.empty()) ++rows;
    CHECK(rows == modes.count);
    std::remove(path);
}

#include "isa/errors.hpp"
#include "isa/grid.hpp"

#include <doctest.h>

#include "helpers.hpp"

using namespace isa;
using test::kPi;

TEST_CASE("build_time_grid accepts the documented shapes") {
    const TimeGrid g = build_time_grid(256, 1.0 / 64.0, -2.0);
    CHECK(g.n == 256);
    CHECK(g.t(0) == -2.0);
    CHECK(g.t(255) == doctest::Approx(2.0 - 1.0 / 64.0));
    CHECK(g.zero_index() == 128);
    CHECK(g.t(128) == 0.0);

    const TimeGrid minimal = build_time_grid(8, 1.0, -4.0);
    CHECK(minimal.zero_index() == 4);
}

TEST_CASE("build_time_grid rejects contract violations") {
    CHECK_THROWS_AS(build_time_grid(100, 0.01, -0.5), ContractError); // not a power of two
    CHECK_THROWS_AS(build_time_grid(4, 1.0, -2.0), ContractError);    // n < 8
    CHECK_THROWS_AS(build_time_grid(16, 0.0, 0.0), ContractError);    // dt <= 0
    CHECK_THROWS_AS(build_time_grid(16, -1.0, 0.0), ContractError);
    CHECK_THROWS_AS(build_time_grid(8, 1.0, 10.0), ContractError);    // no sample near t = 0
}

TEST_CASE("make_time_grid allows any n >= 8 for oracle paths") {
    const TimeGrid g = make_time_grid(100, 0.01, -0.5);
    CHECK(g.n == 100);
    CHECK_THROWS_AS(make_time_grid(7, 0.01, 0.0), ContractError);
}

TEST_CASE("freq_grid_of canonical band") {
    SUBCASE("n=256, dt=1/64") {
        const FreqGrid f = freq_grid_of(build_time_grid(256, 1.0 / 64.0, -2.0));
        CHECK(f.n_w == 256);
        CHECK(f.dw == doctest::Approx(kPi / 2.0).epsilon(1e-15));
        CHECK(f.w0 == doctest::Approx(-64.0 * kPi).epsilon(1e-15));
    }
    SUBCASE("n=8, dt=1") {
        const FreqGrid f = freq_grid_of(build_time_grid(8, 1.0, -4.0));
        CHECK(f.dw == doctest::Approx(kPi / 4.0).epsilon(1e-15));
        CHECK(f.w0 == doctest::Approx(-kPi).epsilon(1e-15));
    }
    SUBCASE("n=1024, dt=1/512 band") {
        const FreqGrid f = freq_grid_of(build_time_grid(1024, 1.0 / 512.0, -1.0));
        CHECK(f.band_lo() == doctest::Approx(-512.0 * kPi).epsilon(1e-15));
        CHECK(f.band_hi() == doctest::Approx(512.0 * kPi).epsilon(1e-15));
    }
}

#include "isa/errors.hpp"
#include "isa/signal.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "helpers.hpp"

using namespace isa;
using test::kPi;

namespace {

const TimeGrid g256 = build_time_grid(256, 1.0 / 64.0, -2.0);

} // namespace

TEST_CASE("synthesize_component: constant IA / constant IF is a complex tone") {
    const double w0 = 16.0 * kPi;
    const ComplexSignal z =
        synthesize_component({ConstantIA{1.0}, ConstantIF{w0}, 0.0}, g256);
    double err = 0.0;
    for (int m = 0; m < g256.n; ++m)
        err = std::max(err, std::abs(z.samples[m] - std::polar(1.0, w0 * g256.t(m))));
    CHECK(err <= 1e-12);
}

TEST_CASE("synthesize_component: linear IF gives the linear FM chirp") {
    const double w0 = 16.0 * kPi, r0 = 8.0 * kPi;
    const ComplexSignal z =
        synthesize_component({ConstantIA{1.0}, LinearIF{w0, -r0}, 0.0}, g256);
    double err = 0.0;
    for (int m = 0; m < g256.n; ++m) {
        const double t = g256.t(m);
        err = std::max(err, std::abs(z.samples[m] - std::polar(1.0, w0 * t - 0.5 * r0 * t * t)));
    }
    CHECK(err <= 1e-12);
}

TEST_CASE("synthesize_component: zero amplitude synthesizes zero") {
    const ComplexSignal z =
        synthesize_component({ConstantIA{0.0}, ConstantIF{3.0}, 0.0}, g256);
    for (const cplx& v : z.samples) CHECK(v == cplx{0.0, 0.0});
}

TEST_CASE("synthesize_component rejects bad descriptors") {
    CHECK_THROWS_AS(synthesize_component({ConstantIA{-1.0}, ConstantIF{0.0}, 0.0}, g256),
                    ContractError);
    CHECK_THROWS_AS(
        synthesize_component({SampledIA{{1.0, 2.0}}, ConstantIF{0.0}, 0.0}, g256),
        ContractError);
    std::vector<double> bad(g256.n, 1.0);
    bad[7] = -0.25;
    CHECK_THROWS_AS(synthesize_component({SampledIA{bad}, ConstantIF{0.0}, 0.0}, g256),
                    ContractError);
}

TEST_CASE("synthesize_signal: sums, cancellation, Gaussian AM") {
    const double w0 = 16.0 * kPi;
    SUBCASE("single tone") {
        const ComplexSignal z =
            synthesize_signal({{{ConstantIA{1.0}, ConstantIF{w0}, 0.0}}}, g256);
        CHECK(std::abs(z.samples[g256.zero_index()] - cplx{1.0, 0.0}) <= 1e-12);
    }
    SUBCASE("destructive pair is identically zero") {
        const ComplexSignal z = synthesize_signal({{{ConstantIA{1.0}, ConstantIF{w0}, 0.0},
                                                    {ConstantIA{1.0}, ConstantIF{w0}, kPi}}},
                                                  g256);
        double peak = 0.0;
        for (const cplx& v : z.samples) peak = std::max(peak, std::abs(v));
        CHECK(peak <= 1e-12);
    }
    SUBCASE("Gaussian AM tone") {
        const double a0 = 2.0;
        const ComplexSignal z = synthesize_signal(
            {{{GaussianPulseIA{1.0, a0, 0.0}, ConstantIF{w0}, 0.0}}}, g256);
        double err = 0.0;
        for (int m = 0; m < g256.n; ++m) {
            const double t = g256.t(m);
            err = std::max(err, std::abs(z.samples[m] -
                                         std::exp(-a0 * a0 * t * t) * std::polar(1.0, w0 * t)));
        }
        CHECK(err <= 1e-12);
    }
    SUBCASE("empty set is rejected") {
        CHECK_THROWS_AS(synthesize_signal(ParamSet{}, g256), ContractError);
    }
}

TEST_CASE("property: synthesis is linear over set unions") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> amp(0.0, 2.0);
    std::uniform_real_distribution<double> freq(-20.0 * kPi, 20.0 * kPi);
    std::uniform_real_distribution<double> phase(-kPi, kPi);
    for (int round = 0; round < 20; ++round) {
        ParamSet a, b, both;
        const int ka = 1 + static_cast<int>(rng() % 3), kb = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < ka + kb; ++i) {
            CanonicalTriplet c{ConstantIA{amp(rng)}, LinearIF{freq(rng), freq(rng) / 4.0},
                               phase(rng)};
            (i < ka ? a : b).triplets.push_back(c);
            both.triplets.push_back(c);
        }
        const ComplexSignal za = synthesize_signal(a, g256);
        const ComplexSignal zb = synthesize_signal(b, g256);
        const ComplexSignal zu = synthesize_signal(both, g256);
        double err = 0.0, scale = 0.0;
        for (int m = 0; m < g256.n; ++m) {
            err = std::max(err, std::abs(zu.samples[m] - (za.samples[m] + zb.samples[m])));
            scale = std::max(scale, std::abs(zu.samples[m]));
        }
        CHECK(err <= 1e-12 * std::max(scale, 1.0));
    }
}

TEST_CASE("property: phase anchor at the t~0 sample equals phi") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> phase(-3.0, 3.0);
    std::uniform_real_distribution<double> freq(-10.0 * kPi, 10.0 * kPi);
    for (int round = 0; round < 20; ++round) {
        const double phi = phase(rng);
        std::vector<double> wsamp(g256.n);
        for (auto& w : wsamp) w = freq(rng) / 4.0;
        const IFDescriptor iffs[] = {IFDescriptor{ConstantIF{freq(rng)}},
                                     IFDescriptor{LinearIF{freq(rng), freq(rng)}},
                                     IFDescriptor{SampledIF{wsamp}}};
        for (const auto& iff : iffs) {
            const ComplexSignal z = synthesize_component({ConstantIA{1.0}, iff, phi}, g256);
            const double got = std::arg(z.samples[g256.zero_index()]);
            double d = std::remainder(got - phi, 2.0 * kPi);
            CHECK(std::abs(d) <= 1e-12);
        }
    }
}

TEST_CASE("demodulate: on-bin tone") {
    const double w0 = 16.0 * kPi;
    const ComplexSignal z =
        synthesize_component({ConstantIA{1.0}, ConstantIF{w0}, 0.0}, g256);
    const CanonicalTriplet d = demodulate(z);
    const auto& ia = std::get<SampledIA>(d.ia).values;
    const auto& iff = std::get<SampledIF>(d.iff).values;
    for (double a : ia) CHECK(std::abs(a - 1.0) <= 1e-12);
    for (int m = 1; m < g256.n - 1; ++m) CHECK(std::abs(iff[m] - w0) <= 1e-9);
    CHECK(std::abs(d.phi) <= 1e-12);
}

TEST_CASE("demodulate: linear FM interior IF within the central-difference bound") {
    const double w0 = 16.0 * kPi, r0 = 8.0 * kPi;
    const ComplexSignal z =
        synthesize_component({ConstantIA{1.0}, LinearIF{w0, -r0}, 0.0}, g256);
    const CanonicalTriplet d = demodulate(z);
    const auto& iff = std::get<SampledIF>(d.iff).values;
    const double bound = r0 * g256.dt * g256.dt / 6.0 + 1e-9;
    for (int m = 1; m < g256.n - 1; ++m)
        CHECK(std::abs(iff[m] - (w0 - r0 * g256.t(m))) <= bound);
}

TEST_CASE("demodulate: magnitude floor violations are rejected with the sample index") {
    ComplexSignal z{g256, std::vector<cplx>(g256.n, cplx{0.0, 0.0})};
    CHECK_THROWS_AS(demodulate(z), NumericError);

    ComplexSignal pin{g256, std::vector<cplx>(g256.n, cplx{1.0, 0.0})};
    pin.samples[37] = cplx{0.0, 0.0};
    try {
        demodulate(pin);
        FAIL("expected NumericError");
    } catch (const NumericError& e) {
        CHECK(std::string(e.what()).find("37") != std::string::npos);
    }
}

TEST_CASE("property: demodulate inverts synthesis for sampled descriptors") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> amp(0.25, 2.0);
    for (int round = 0; round < 10; ++round) {
        // Smooth positive IA, smooth IF with known curvature bound.
        std::vector<double> a(g256.n), w(g256.n);
        const double base = amp(rng), mod = 0.2 * base;
        const double wc = 8.0 * kPi * amp(rng), wa = 2.0 * kPi * amp(rng), wb = 1.3;
        for (int m = 0; m < g256.n; ++m) {
            const double t = g256.t(m);
            a[m] = base + mod * std::cos(1.7 * t);
            w[m] = wc + wa * std::sin(wb * t);
        }
        const double phi = -1.0 + 0.2 * round;
        const ComplexSignal z =
            synthesize_component({SampledIA{a}, SampledIF{w}, phi}, g256);
        const CanonicalTriplet d = demodulate(z);
        const auto& ia = std::get<SampledIA>(d.ia).values;
        const auto& iff = std::get<SampledIF>(d.iff).values;
        for (int m = 0; m < g256.n; ++m)
            CHECK(std::abs(ia[m] - a[m]) <= 1e-12 * std::max(1.0, a[m]));
        // Trapezoid phase then central difference averages the IF: the
        // composition has truncation (dt^2/4)*max|w''|.
        const double bound = g256.dt * g256.dt / 4.0 * (wa * wb * wb) + 1e-9;
        for (int m = 1; m < g256.n - 1; ++m) CHECK(std::abs(iff[m] - w[m]) <= bound);
        CHECK(std::abs(std::remainder(d.phi - phi, 2.0 * kPi)) <= 1e-9);
    }
}

TEST_CASE("quadratic_chirplet specializations") {
    SUBCASE("alpha=0, r=0 is identically one") {
        const ComplexSignal z = quadratic_chirplet(0.0, 0.0, g256);
        for (const cplx& v : z.samples) CHECK(std::abs(v - cplx{1.0, 0.0}) <= 1e-15);
    }
    SUBCASE("alpha=1, r=0 is the real Gaussian pulse") {
        const ComplexSignal z = quadratic_chirplet(1.0, 0.0, g256);
        for (int m = 0; m < g256.n; ++m) {
            const double t = g256.t(m);
            CHECK(z.samples[m].imag() == 0.0);
            CHECK(std::abs(z.samples[m].real() - std::exp(-t * t)) <= 1e-15);
        }
    }
    SUBCASE("alpha=0, r=4pi is a unit-magnitude linear chirp") {
        const ComplexSignal z = quadratic_chirplet(0.0, 4.0 * kPi, g256);
        for (int m = 0; m < g256.n; ++m) {
            const double t = g256.t(m);
            CHECK(std::abs(std::abs(z.samples[m]) - 1.0) <= 1e-12);
            CHECK(std::abs(z.samples[m] - std::polar(1.0, -2.0 * kPi * t * t)) <= 1e-12);
        }
    }
    SUBCASE("negative alpha is rejected") {
        CHECK_THROWS_AS(quadratic_chirplet(-0.5, 0.0, g256), ContractError);
    }
}

TEST_CASE("chirplet_limit_integral matches the analytic oracle") {
    // Oracle: integral of (beta/sqrt(2pi)) e^{-beta^2 t^2/2} e^{j(-beta t^2/2 + wbar t)}
    // over the real line = (beta/sqrt(a)) e^{-wbar^2/(2a)}, a = beta^2 + j*beta.
    const TimeGrid g = test::default_grid();

    const cplx v4 = chirplet_limit_integral(4.0, 0.0, g);
    CHECK(std::abs(v4 - cplx{0.9775783781195161, -0.12034539782870095}) <= 1e-12);

    const cplx v16 = chirplet_limit_integral(16.0, 0.0, g);
    CHECK(std::abs(v16 - cplx{0.99853931517472835, -0.031173939970319275}) <= 1e-12);

    const cplx v64 = chirplet_limit_integral(64.0, 0.0, g);
    CHECK(std::abs(v64 - cplx{0.99990846356048805, -0.0078113081362495388}) <= 1e-12);

    // |v - 1| <= 1/beta and nonincreasing in beta.
    CHECK(std::abs(v4 - 1.0) <= 1.0 / 4.0);
    CHECK(std::abs(v16 - 1.0) <= 1.0 / 16.0);
    CHECK(std::abs(v64 - 1.0) <= 1.0 / 64.0);
    CHECK(std::abs(v4 - 1.0) >= std::abs(v16 - 1.0));
    CHECK(std::abs(v16 - 1.0) >= std::abs(v64 - 1.0));

    // Off-crossing tone: the e^{-wbar^2/(2a)} factor dominates and the
    // integral sits near zero, far from 1. Frozen from the analytic oracle.
    const cplx voff = chirplet_limit_integral(16.0, 16.0 * kPi, g);
    CHECK(std::abs(voff - cplx{0.0070469431980832364, 0.0019960143668945299}) <= 1e-12);
    CHECK(std::abs(voff - 1.0) > 0.99);
}

TEST_CASE("chirplet_limit_integral rejects insufficient grid support") {
    CHECK_THROWS_AS(chirplet_limit_integral(1.0, 0.0, test::default_grid()), NumericError);
    CHECK_THROWS_AS(chirplet_limit_integral(0.0, 0.0, test::default_grid()), ContractError);
}

TEST_CASE("unwrap_phase corrects single and repeated wraps") {
    // Accelerating phase with per-step jumps below pi (the unwrap contract).
    std::vector<double> truth(64), wrapped(64);
    for (int m = 0; m < 64; ++m) {
        truth[m] = 0.02 * m * m + 5.0;
        wrapped[m] = std::remainder(truth[m], 2.0 * kPi);
    }
    const std::vector<double> un = unwrap_phase(wrapped);
    for (int m = 0; m < 64; ++m) {
        const double d = un[m] - truth[m];
        CHECK(std::abs(d - (un[0] - truth[0])) <= 1e-10);
    }
}

#include <doctest.h>

#include "support/helpers.hpp"

using namespace dle;
using dle::testing::rel_diff;

namespace {
const SystemParams kWeak(3.0, 0.01);
const RampProtocol kRamp{RampShape::linear, 5.0, 4.4, 1.0, 0.0};

StateVector dressed_ground(const SystemParams& params, double omega, FockCutoff cutoff) {
    const auto spec = diagonalize(params, CavityFrequency(omega), cutoff);
    return {cutoff, identify_dressed(spec, {0, 0, 0}).vector.cast<Complex>()};
}
}  // namespace

TEST_CASE("ramp profiles") {
    RampProtocol linear{RampShape::linear, 5.0, 4.4, 2.0, 1.0};
    CHECK(omega_of_t(linear, 0.5).omega == 5.0);
    CHECK(omega_of_t(linear, 0.5).omega_dot == 0.0);
    CHECK(omega_of_t(linear, 2.0).omega == doctest::Approx(4.7).epsilon(1e-15));
    CHECK(omega_of_t(linear, 2.0).omega_dot == doctest::Approx(-0.3).epsilon(1e-15));
    CHECK(omega_of_t(linear, 5.0).omega == 4.4);

    RampProtocol smooth{RampShape::smoothstep, 5.0, 4.4, 2.0, 0.0};
    CHECK(omega_of_t(smooth, 0.0).omega_dot == 0.0);
    CHECK(omega_of_t(smooth, 2.0).omega_dot == 0.0);
    CHECK(omega_of_t(smooth, 1.0).omega == doctest::Approx(4.7).epsilon(1e-15));
    // Steepest point of the cubic profile: 1.5 * span / tau.
    CHECK(omega_of_t(smooth, 1.0).omega_dot == doctest::Approx(-0.45).epsilon(1e-15));

    RampProtocol sudden{RampShape::sudden, 5.0, 4.4, 0.0, 1.0};
    CHECK(omega_of_t(sudden, 0.999).omega == 5.0);
    CHECK(omega_of_t(sudden, 1.0).omega == 4.4);

    CHECK_THROWS_AS(omega_of_t(RampProtocol{RampShape::linear, 5.0, 4.4, 0.0, 0.0}, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(omega_of_t(RampProtocol{RampShape::linear, -5.0, 4.4, 1.0, 0.0}, 0.0),
                    std::invalid_argument);
}

TEST_CASE("input validation") {
    const FockCutoff cutoff(6);
    CHECK_THROWS_AS(evolve(StateVector(cutoff), kRamp, kWeak, cutoff), std::invalid_argument);
    CHECK_THROWS_AS(
        evolve(StateVector::unit(FockCutoff(5), {0, 0, 0}), kRamp, kWeak, cutoff),
        DimensionMismatchError);
}

TEST_CASE("a sudden quench does not propagate the state") {
    const FockCutoff cutoff(10);
    const auto ground = dressed_ground(kWeak, 5.0, cutoff);
    RampProtocol sudden = kRamp;
    sudden.shape = RampShape::sudden;
    sudden.tau = 0.0;
    const auto run = evolve(ground, sudden, kWeak, cutoff);
    CHECK((run.final.amps - ground.amps).norm() == 0.0);
    CHECK(run.steps_accepted == 0);
    CHECK(run.norm_drift < 1e-14);

    // Overlaps against the post-quench dressed basis reproduce the exact
    // diagonalization amplitudes.
    const auto exact = exact_quench_amplitudes(
        kWeak, QuenchSpec{CavityFrequency(5.0), CavityFrequency(4.4)}, cutoff);
    for (const auto& [label, amp] : exact.table)
        CHECK(std::abs(run.overlaps.at(label) - Complex(amp)) < 1e-12);
}

TEST_CASE("a stationary Hamiltonian only rotates the phase") {
    const FockCutoff cutoff(8);
    const auto ground = dressed_ground(kWeak, 5.0, cutoff);
    RampProtocol still{RampShape::linear, 5.0, 5.0, 2.0, 0.0};
    const auto run = evolve(ground, still, kWeak, cutoff);
    CHECK(run.norm_drift < 1e-9);
    CHECK(std::abs(std::abs(ground.amps.dot(run.final.amps)) - 1.0) < 1e-9);
    // The phase is e^{-i E t} for the exact eigenvalue.
    const double energy =
        identify_dressed(diagonalize(kWeak, CavityFrequency(5.0), cutoff), {0, 0, 0}).energy;
    const Complex expected = std::exp(Complex(0.0, -energy * 2.0));
    CHECK(std::abs(ground.amps.dot(run.final.amps) - expected) < 1e-8);
}

TEST_CASE("agreement with an exponential-midpoint integrator") {
    const FockCutoff cutoff(10);
    const auto ground = dressed_ground(kWeak, 5.0, cutoff);
    RampProtocol ramp{RampShape::linear, 5.0, 4.4, 0.2, 0.0};
    const auto run = evolve(ground, ramp, kWeak, cutoff);
    const auto reference =
        dle::testing::exponential_midpoint_evolve(ground, ramp, kWeak, cutoff, 5000);
    CHECK((run.final.amps - reference.amps).norm() < 1e-8);
}

TEST_CASE("norm and parity-sector weight are conserved") {
    const FockCutoff cutoff(10);
    const auto ground = dressed_ground(kWeak, 5.0, cutoff);
    for (auto shape : {RampShape::linear, RampShape::smoothstep}) {
        RampProtocol ramp{shape, 5.0, 4.4, 0.5, 0.0};
        const auto run = evolve(ground, ramp, kWeak, cutoff);
        CHECK(run.norm_drift < 1e-9);
        CHECK(std::abs(run.even_weight_final - run.even_weight_initial) < 1e-10);
        CHECK(run.steps_accepted > 0);
    }
}

TEST_CASE("drive-off sudden-limit run matches the stationary quench") {
    // With the photon-pair drive disabled the short-ramp limit is a pure
    // parameter quench, so sector probabilities follow the overlap table.
    const FockCutoff cutoff(12);
    const auto ground = dressed_ground(kWeak, 5.0, cutoff);
    RampProtocol ramp{RampShape::linear, 5.0, 4.4, 1e-3 / 5.0, 0.0};
    StepperConfig config;
    config.include_drive = false;
    const auto run = evolve(ground, ramp, kWeak, cutoff, config);
    const auto exact = exact_quench_amplitudes(
        kWeak, QuenchSpec{CavityFrequency(5.0), CavityFrequency(4.4)}, cutoff);
    CHECK(rel_diff(std::norm(run.overlaps.at({1, 1, 0})),
                   exact.amplitudes.a_1_10 * exact.amplitudes.a_1_10) < 1e-2);
    CHECK(rel_diff(std::norm(run.overlaps.at({0, 1, 1})),
                   exact.amplitudes.a_0_11 * exact.amplitudes.a_0_11) < 1e-2);
    CHECK(std::norm(run.overlaps.at({0, 0, 0})) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("fast drive-on ramps excite photon pairs like a squeeze") {
    // Decoupled qubits isolate the parametric photon term: a near-sudden ramp
    // applies exp(zeta/2 (a^2 - a†^2)) with zeta = ln(omega2/omega1)/2, so
    // p(2;00) = tanh^2(zeta) / (2 cosh(zeta)).
    const SystemParams decoupled(3.0, 0.0);
    const FockCutoff cutoff(12);
    const auto vac = StateVector::unit(cutoff, {0, 0, 0});
    RampProtocol ramp{RampShape::linear, 5.0, 4.4, 1e-4, 0.0};
    const auto run = evolve(vac, ramp, decoupled, cutoff);
    const double zeta = std::log(4.4 / 5.0) / 2.0;
    const double expected = std::tanh(zeta) * std::tanh(zeta) / (2.0 * std::cosh(zeta));
    CHECK(rel_diff(std::norm(run.overlaps.at({2, 0, 0})), expected) < 1e-3);
}

TEST_CASE("cutoff leakage aborts loudly") {
    const SystemParams decoupled(3.0, 0.0);
    const FockCutoff tiny(2);
    const auto vac = StateVector::unit(tiny, {0, 0, 0});
    RampProtocol harsh{RampShape::linear, 5.0, 2.0, 1e-4, 0.0};
    CHECK_THROWS_AS(evolve(vac, harsh, decoupled, tiny), CutoffLeakageError);
}

TEST_CASE("limit scan: grid validation and adiabatic suppression") {
    const FockCutoff cutoff(12);
    RampProtocol base{RampShape::smoothstep, 5.0, 4.4, 0.0, 0.0};
    CHECK_THROWS_AS(limit_scan(kWeak, base, {1.0, 1.0}, cutoff), std::invalid_argument);

    const auto rows = limit_scan(kWeak, base, {2e-4, 20.0}, cutoff);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].tau == 2e-4);
    // Total excitation after the near-sudden ramp is dominated by the
    // parametric squeeze; a slow ramp suppresses it by orders of magnitude.
    CHECK(rows[0].total_excitation > 1e-4);
    CHECK(rows[1].total_excitation < 0.05 * rows[0].total_excitation);

    // A single-point scan reproduces a direct run from the dressed ground
    // state.
    RampProtocol single = base;
    single.tau = 2e-4;
    const auto ground = dressed_ground(kWeak, 5.0, cutoff);
    const auto direct = evolve(ground, single, kWeak, cutoff);
    CHECK(rel_diff(rows[0].p_2_00, std::norm(direct.overlaps.at({2, 0, 0}))) < 1e-10);
    CHECK(rel_diff(rows[0].total_excitation,
                   1.0 - std::norm(direct.overlaps.at({0, 0, 0}))) < 1e-8);
}

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "ramanpump/params.hpp"

using namespace ramanpump;

namespace {

MoleculeParams organic() { return {3.0, 0.1, 0.01, 1.0e-3, 0.01, 0.2}; }
DriveParams organic_drive() { return {2.0, 0.01, 0.05, 0.01}; }

}  // namespace

TEST_CASE("thermal occupation matches the Bose-Einstein values") {
    CHECK(thermal_occupation(0.1, 0.02) ==
          doctest::Approx(6.7836549063042311e-3).epsilon(1e-14));
    CHECK(thermal_occupation(0.1, 0.1) ==
          doctest::Approx(0.58197670686932642).epsilon(1e-14));
    // zero-temperature limit
    CHECK(thermal_occupation(0.1, 1.0e-300) == 0.0);
}

TEST_CASE("thermal occupation rejects non-positive inputs") {
    CHECK_THROWS_AS(thermal_occupation(0.0, 0.02), std::domain_error);
    CHECK_THROWS_AS(thermal_occupation(-0.1, 0.02), std::domain_error);
    CHECK_THROWS_AS(thermal_occupation(0.1, 0.0), std::domain_error);
    CHECK_THROWS_AS(thermal_occupation(0.1, -1.0), std::domain_error);
}

TEST_CASE("thermal occupation is monotone in both arguments") {
    double prev = thermal_occupation(0.01, 0.02);
    for (double w = 0.02; w < 0.5; w += 0.01) {
        const double n = thermal_occupation(w, 0.02);
        CHECK(n < prev);
        prev = n;
    }
    prev = thermal_occupation(0.1, 0.005);
    for (double kT = 0.01; kT < 0.5; kT += 0.005) {
        const double n = thermal_occupation(0.1, kT);
        CHECK(n > prev);
        prev = n;
    }
}

TEST_CASE("detailed balance identity n/(1+n) = exp(-w/kT)") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> w_dist(0.01, 1.0);
    std::uniform_real_distribution<double> kt_dist(0.001, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const double w = w_dist(rng);
        const double kT = kt_dist(rng);
        const double n = thermal_occupation(w, kT);
        const double lhs = n / (1.0 + n);
        const double rhs = std::exp(-w / kT);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * rhs);
    }
}

TEST_CASE("perturbation parameter") {
    SUBCASE("organic numbers, probe unlit") {
        DriveParams d(2.0, 0.0, 0.05, 0.01);
        CHECK(perturbation_parameter(organic(), d) ==
              doctest::Approx(3.3898305084745763e-3).epsilon(1e-14));
    }
    SUBCASE("no drive at all") {
        DriveParams d(2.0, 0.0, 0.05, 0.0);
        CHECK(perturbation_parameter(organic(), d) == 0.0);
    }
    SUBCASE("max of equal ratios") {
        // both drives at ratio 0.05: rabi = 0.05 * |detuning|
        DriveParams d(2.0, 0.05 * 1.0, 0.05, 0.05 * 2.95);
        CHECK(perturbation_parameter(organic(), d) ==
              doctest::Approx(0.05).epsilon(1e-14));
    }
    SUBCASE("exact resonance is a domain error") {
        DriveParams d(3.0, 0.01, 0.05, 0.01);
        CHECK_THROWS_AS(perturbation_parameter(organic(), d),
                        std::domain_error);
    }
    SUBCASE("equals the larger single-drive ratio") {
        std::mt19937 rng(11);
        std::uniform_real_distribution<double> u(0.0, 0.2);
        for (int i = 0; i < 200; ++i) {
            DriveParams d(2.0, u(rng), 0.05, u(rng));
            const auto m = organic();
            const double r_vis = d.rabi_vis / std::abs(d.omega_vis - m.omega0);
            const double r_ir = d.rabi_ir / std::abs(d.omega_ir - m.omega0);
            CHECK(perturbation_parameter(m, d) == std::max(r_vis, r_ir));
        }
    }
}

TEST_CASE("parameter type invariants") {
    CHECK_THROWS_AS(MoleculeParams(3.0, 0.1, 0.01, 0.2, 0.01, 0.2),
                    std::invalid_argument);  // overdamped vibration
    CHECK_THROWS_AS(MoleculeParams(3.0, 0.1, 4.0, 1e-3, 0.01, 0.2),
                    std::invalid_argument);  // gamma_perp >= omega0
    CHECK_THROWS_AS(MoleculeParams(3.0, 0.1, 0.01, -1e-3, 0.01, 0.2),
                    std::invalid_argument);
    CHECK_NOTHROW(MoleculeParams(3.0, 0.1, 0.01, 1e-3, 0.0, 0.2));  // g = 0 ok
    CHECK_THROWS_AS(DriveParams(0.05, 0.01, 2.0, 0.01),
                    std::invalid_argument);  // omega_vis <= omega_ir
    CHECK_THROWS_AS(Environment(0.0), std::invalid_argument);
    CHECK_THROWS_AS(Environment(-0.1), std::invalid_argument);
}

TEST_CASE("validate_params") {
    const Environment env(0.02);
    SUBCASE("organic parameters are in regime") {
        const Diagnostics d = validate_params(organic(), organic_drive(), env);
        CHECK(d.valid);
        CHECK(d.warnings.empty());
        CHECK(d.epsilon == doctest::Approx(0.01));
    }
    SUBCASE("resonant probe warns") {
        DriveParams d(3.0, 0.01, 0.05, 0.01);
        const Diagnostics diag = validate_params(organic(), d, env);
        CHECK_FALSE(diag.valid);
        bool found = false;
        for (const auto& w : diag.warnings)
            if (w.find("probe resonant") != std::string::npos) found = true;
        CHECK(found);
    }
    SUBCASE("hot bath warns") {
        const Diagnostics diag =
            validate_params(organic(), organic_drive(), Environment(3.0));
        CHECK_FALSE(diag.valid);
        bool found = false;
        for (const auto& w : diag.warnings)
            if (w.find("kT") != std::string::npos) found = true;
        CHECK(found);
    }
    SUBCASE("large epsilon warns") {
        DriveParams d(2.0, 0.5, 0.05, 0.01);
        const Diagnostics diag = validate_params(organic(), d, env);
        CHECK_FALSE(diag.valid);
        CHECK(diag.epsilon == doctest::Approx(0.5));
        bool found = false;
        for (const auto& w : diag.warnings)
            if (w.find("perturbation parameter") != std::string::npos)
                found = true;
        CHECK(found);
    }
    SUBCASE("valid flag always mirrors the warning list") {
        std::mt19937 rng(3);
        std::uniform_real_distribution<double> u(0.01, 4.0);
        for (int i = 0; i < 100; ++i) {
            DriveParams d(u(rng) + 1.0, u(rng) * 0.1, 0.05, u(rng) * 0.1);
            const Diagnostics diag = validate_params(organic(), d, env);
            CHECK(diag.valid == diag.warnings.empty());
        }
    }
    SUBCASE("thresholds are configurable") {
        ValidationThresholds strict;
        strict.detuning_factor = 200.0;  // |2 - 3| = 1 < 200 * 0.01
        const Diagnostics diag =
            validate_params(organic(), organic_drive(), env, strict);
        CHECK_FALSE(diag.valid);
    }
}

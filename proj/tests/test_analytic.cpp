#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>
#include <random>

#include "ramanpump/analytic.hpp"
#include "ramanpump/units.hpp"
#include "support/force_oracle.hpp"
#include "support/quadrature.hpp"

using namespace ramanpump;

namespace {

MoleculeParams organic() { return {3.0, 0.1, 0.01, 1.0e-3, 0.01, 0.2}; }
DriveParams organic_drive() { return {2.0, 0.01, 0.05, 0.01}; }

const ForceComponent& component(const std::vector<ForceComponent>& v,
                                ForceLabel label) {
    for (const auto& c : v)
        if (c.label == label) return c;
    REQUIRE(false);
    return v.front();
}

}  // namespace

TEST_CASE("linear response amplitudes") {
    SUBCASE("unlit probe gives zero probe amplitudes") {
        DriveParams d(2.0, 0.0, 0.05, 0.01);
        const LinearResponse lr = linear_response(organic(), d);
        CHECK(lr.c_vis_minus == complexd(0.0, 0.0));
        CHECK(lr.c_vis_plus == complexd(0.0, 0.0));
    }
    SUBCASE("IR amplitude value") {
        const LinearResponse lr = linear_response(organic(), organic_drive());
        CHECK(lr.c_ir_minus.real() ==
              doctest::Approx(-1.6949152542372881e-3).epsilon(1e-14));
        CHECK(lr.c_ir_minus.imag() == 0.0);
    }
    SUBCASE("amplitude ratio fixed by the two TLS denominators") {
        const LinearResponse lr = linear_response(organic(), organic_drive());
        const double expect = -(2.0 + 3.0) / (2.0 - 3.0);
        CHECK(lr.c_vis_minus.real() / lr.c_vis_plus.real() ==
              doctest::Approx(expect).epsilon(1e-14));
    }
    SUBCASE("counter-rotating amplitudes recover the static polarization") {
        // slow-drive limit: the TLS polarization follows -u(t)/omega0, so
        // both amplitudes approach -rabi/(2 omega0)
        MoleculeParams mol(3.0, 0.1, 0.01, 1e-3, 0.01, 0.2);
        DriveParams slow(1.0, 0.0, 1.0e-4, 0.01);
        const LinearResponse lr = linear_response(mol, slow);
        CHECK(lr.c_ir_minus.real() ==
              doctest::Approx(-0.01 / (2.0 * 3.0)).epsilon(1e-3));
        CHECK(lr.c_ir_plus.real() ==
              doctest::Approx(-0.01 / (2.0 * 3.0)).epsilon(1e-3));
    }
    SUBCASE("exact resonance throws") {
        DriveParams d(3.0, 0.01, 0.05, 0.01);
        CHECK_THROWS_AS(linear_response(organic(), d), std::domain_error);
    }
}

TEST_CASE("effective force decomposition") {
    SUBCASE("exactly five labelled components") {
        const auto comps = effective_force_components(organic(), organic_drive());
        REQUIRE(comps.size() == 5);
        CHECK(component(comps, ForceLabel::dc).frequency == 0.0);
        CHECK(component(comps, ForceLabel::two_ir).frequency ==
              doctest::Approx(0.1));
        CHECK(component(comps, ForceLabel::two_vis).frequency ==
              doctest::Approx(4.0));
    }
    SUBCASE("single drive zeroes the mixed and IR components") {
        DriveParams d(2.0, 0.01, 0.05, 0.0);
        const auto comps = effective_force_components(organic(), d);
        CHECK(std::abs(component(comps, ForceLabel::two_ir).complex_weight) == 0.0);
        CHECK(std::abs(component(comps, ForceLabel::vis_minus_ir).complex_weight) == 0.0);
        CHECK(std::abs(component(comps, ForceLabel::vis_plus_ir).complex_weight) == 0.0);
        CHECK(std::abs(component(comps, ForceLabel::two_vis).complex_weight) > 0.0);
    }
    SUBCASE("doubled-IR-frequency weight magnitude for the organic set") {
        const auto comps = effective_force_components(organic(), organic_drive());
        const auto& two_ir = component(comps, ForceLabel::two_ir);
        CHECK(std::abs(two_ir.complex_weight) ==
              doctest::Approx(2.7785495971103084e-8).epsilon(1e-13));
        // the resonant driving term is -i (g/4) rabi_ir^2/(omega0^2-omega_ir^2)
        CHECK(two_ir.complex_weight.imag() < 0.0);
        CHECK(two_ir.complex_weight.real() == doctest::Approx(0.0));
    }
    SUBCASE("term-by-term match against the brute-force expansion") {
        std::mt19937 rng(19);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < 25; ++i) {
            const double omega0 = 1.0 + 9.0 * u(rng);
            MoleculeParams mol(omega0, 0.05 + 0.45 * u(rng), 0.01 * omega0,
                               1e-4, 1e-3 + 0.1 * u(rng), 0.2);
            const double omega_ir = 0.01 + 0.3 * u(rng);
            const double omega_vis = omega_ir + 0.2 + 0.6 * omega0 * u(rng);
            if (omega_vis == omega0 || omega_ir == omega0) continue;
            DriveParams drive(omega_vis, 0.1 * u(rng), omega_ir, 0.1 * u(rng));

            const auto comps = effective_force_components(mol, drive);
            const auto buckets =
                testsupport::brute_force_product_force(mol, drive);
            const double floor = 1e-12 * std::max(mol.g, 1e-30);
            for (const auto& c : comps) {
                const complexd expect = testsupport::brute_force_coefficient(
                    buckets, c.frequency);
                CHECK(std::abs(c.complex_weight - expect) <=
                      std::max(floor, 1e-12 * std::abs(expect)));
            }
        }
    }
}

TEST_CASE("coherent vibrational amplitude") {
    SUBCASE("organic magnitude at exact resonance") {
        const auto amp = coherent_vibration_amplitude(organic(), organic_drive());
        CHECK(std::abs(amp.b_coh) ==
              doctest::Approx(2.7785495971103084e-5).epsilon(1e-13));
        CHECK(amp.frequency == doctest::Approx(0.1));
        // at resonance the response lags the -i force by a quarter cycle
        CHECK(amp.b_coh.real() == doctest::Approx(0.0));
        CHECK(amp.b_coh.imag() < 0.0);
    }
    SUBCASE("decoupled molecule has zero response") {
        MoleculeParams m(3.0, 0.1, 0.01, 1e-3, 0.0, 0.2);
        CHECK(std::abs(coherent_vibration_amplitude(m, organic_drive()).b_coh) ==
              0.0);
    }
    SUBCASE("half-power point at one linewidth of detuning") {
        // detune by shifting the vibrational frequency so the drive-side
        // factors stay fixed
        MoleculeParams detuned(3.0, 0.1 + 1.0e-3, 0.01, 1.0e-3, 0.01, 0.2);
        const double on = std::abs(
            coherent_vibration_amplitude(organic(), organic_drive()).b_coh);
        const double off = std::abs(
            coherent_vibration_amplitude(detuned, organic_drive()).b_coh);
        CHECK(off / on == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    }
}

TEST_CASE("coherent quanta") {
    SUBCASE("organic value and headline ratio") {
        const double n_coh = coherent_quanta(organic(), organic_drive());
        CHECK(n_coh == doctest::Approx(7.7160493827160494e-10).epsilon(1e-13));
        const double n_incoh = thermal_occupation(0.1, 0.02);
        CHECK(n_coh / n_incoh ==
              doctest::Approx(1.137447215297659e-7).epsilon(1e-12));
    }
    SUBCASE("fourth power of the IR drive") {
        DriveParams doubled(2.0, 0.01, 0.05, 0.02);
        CHECK(coherent_quanta(organic(), doubled) ==
              doctest::Approx(16.0 * coherent_quanta(organic(), organic_drive()))
                  .epsilon(1e-14));
    }
    SUBCASE("general path exceeds the simplified form by O((w_ir/w0)^2)") {
        const double general = coherent_quanta_general(organic(), organic_drive());
        const double simplified =
            coherent_quanta_resonant(organic(), organic_drive());
        const double rel = general / simplified - 1.0;
        const double scale = std::pow(0.05 / 3.0, 2);
        CHECK(rel > 0.0);
        CHECK(rel < 3.0 * scale);
        CHECK(rel > scale);
    }
    SUBCASE("off resonance the hybrid returns the general value") {
        DriveParams off(2.0, 0.01, 0.048, 0.01);
        CHECK(coherent_quanta(organic(), off) ==
              coherent_quanta_general(organic(), off));
    }
}

TEST_CASE("incoherent spectrum") {
    const Environment env(0.02);
    SUBCASE("always two delta and four Lorentzian lines") {
        const SpectrumModel m = incoherent_spectrum(organic(), organic_drive(), env);
        CHECK(m.delta_lines.size() == 2);
        CHECK(m.lorentz_lines.size() == 4);
        for (const auto& l : m.lorentz_lines) CHECK(l.weight >= 0.0);
        for (const auto& d : m.delta_lines) CHECK(d.weight >= 0.0);
        // unlit probe keeps its lines at zero weight
        DriveParams dark(2.0, 0.0, 0.05, 0.01);
        const SpectrumModel m2 = incoherent_spectrum(organic(), dark, env);
        CHECK(m2.delta_lines.size() == 2);
        CHECK(m2.lorentz_lines.size() == 4);
        CHECK(m2.delta_lines[0].weight == 0.0);
    }
    SUBCASE("cold bath removes the anti-Stokes lines") {
        const SpectrumModel m =
            incoherent_spectrum(organic(), organic_drive(), Environment(1e-4));
        for (const auto& l : m.lorentz_lines) {
            if (l.label == LineLabel::antistokes_vis ||
                l.label == LineLabel::antistokes_ir)
                CHECK(l.weight == 0.0);
            else
                CHECK(l.weight > 0.0);
        }
    }
    SUBCASE("occupation ratio of anti-Stokes to Stokes") {
        const double nbar = env.n_bar(0.1);
        CHECK(nbar / (1.0 + nbar) ==
              doctest::Approx(std::exp(-0.1 / 0.02)).epsilon(1e-13));
        CHECK(incoherent_stokes_antistokes_ratio(env, organic()) ==
              doctest::Approx(6.7379469990854671e-3).epsilon(1e-13));
    }
    SUBCASE("weight ratio carries the exact emission prefactors") {
        const SpectrumModel m = incoherent_spectrum(organic(), organic_drive(), env);
        const double nbar = env.n_bar(0.1);
        auto weight = [&m](LineLabel lbl) {
            for (const auto& l : m.lorentz_lines)
                if (l.label == lbl) return l.weight;
            REQUIRE(false);
            return 0.0;
        };
        struct Leg {
            double omega;
            LineLabel st, ast;
        };
        const MoleculeParams mol = organic();
        for (const Leg& leg :
             {Leg{2.0, LineLabel::stokes_vis, LineLabel::antistokes_vis},
              Leg{0.05, LineLabel::stokes_ir, LineLabel::antistokes_ir}}) {
            const double expect =
                nbar / (1.0 + nbar) *
                std::pow(leg.omega + mol.omega_v, 4) *
                std::pow(mol.omega0 - leg.omega + mol.omega_v, 2) /
                (std::pow(leg.omega - mol.omega_v, 4) *
                 std::pow(mol.omega0 - leg.omega - mol.omega_v, 2));
            const double got = weight(leg.ast) / weight(leg.st);
            CHECK(std::abs(got - expect) <= 1e-12 * expect);
        }
    }
    SUBCASE("each Lorentzian integrates to 2 pi times its weight") {
        const SpectrumModel m = incoherent_spectrum(organic(), organic_drive(), env);
        const auto& line = m.lorentz_lines[0];
        const double q = testsupport::integrate_peaked(
            [&](double w) {
                const double d = line.center - w;
                return line.weight * line.hw / (d * d + 0.25 * line.hw * line.hw);
            },
            line.center - 2000.0 * line.hw, line.center + 2000.0 * line.hw,
            line.center, line.hw, 1e-13);
        CHECK(q == doctest::Approx(2.0 * std::numbers::pi * line.weight)
                       .epsilon(2e-3));
    }
}

TEST_CASE("coherent sidebands") {
    SUBCASE("decoupled molecule leaves the pure electronic background") {
        MoleculeParams m(3.0, 0.1, 0.01, 1e-3, 0.0, 0.2);
        CHECK(sideband_bracket(m, organic_drive(), SidebandBranch::stokes) ==
              complexd(1.0, 0.0));
        CHECK(sideband_bracket(m, organic_drive(), SidebandBranch::antistokes) ==
              complexd(1.0, 0.0));
        const SpectrumModel sb = coherent_sideband_weights(m, organic_drive());
        REQUIRE(sb.delta_lines.size() == 2);
        CHECK(sb.delta_lines[0].weight > 0.0);
    }
    SUBCASE("nitrogen resonant-to-background contrast") {
        MoleculeParams nitrogen(3.0, 0.1, 0.01, 5.0e-5, 0.05, 0.2);
        const complexd b =
            sideband_bracket(nitrogen, organic_drive(), SidebandBranch::antistokes);
        CHECK(std::abs(b - complexd(1.0, 0.0)) ==
              doctest::Approx(6.25).epsilon(1e-12));
    }
    SUBCASE("both branch brackets share one magnitude") {
        const complexd st =
            sideband_bracket(organic(), organic_drive(), SidebandBranch::stokes);
        const complexd ast = sideband_bracket(organic(), organic_drive(),
                                              SidebandBranch::antistokes);
        CHECK(std::abs(st) == doctest::Approx(std::abs(ast)).epsilon(1e-14));
        CHECK(st == std::conj(ast));
    }
    SUBCASE("coherent Stokes to anti-Stokes ratio") {
        CHECK(coherent_stokes_antistokes_ratio(organic(), organic_drive()) ==
              doctest::Approx(0.66942148760330579).epsilon(1e-14));
        // the emitted line weights additionally carry the radiated w^4
        const SpectrumModel sb =
            coherent_sideband_weights(organic(), organic_drive());
        const double w_st = sb.delta_lines[0].weight;
        const double w_ast = sb.delta_lines[1].weight;
        const double expect =
            coherent_stokes_antistokes_ratio(organic(), organic_drive()) *
            std::pow(1.9 / 2.1, 4);
        CHECK(w_st / w_ast == doctest::Approx(expect).epsilon(1e-12));
    }
    SUBCASE("degenerate zero-frequency Stokes line is rejected") {
        DriveParams d(0.1, 0.01, 0.05, 0.01);
        CHECK_THROWS_AS(coherent_sideband_weights(organic(), d),
                        std::domain_error);
    }
}

TEST_CASE("chi3") {
    const double conc = 1.0e19;
    SUBCASE("linear in concentration") {
        const Chi3Pair one = chi3(organic(), organic_drive(), conc);
        const Chi3Pair two = chi3(organic(), organic_drive(), 2.0 * conc);
        CHECK(two.stokes.value == 2.0 * one.stokes.value);
        CHECK(two.antistokes.value == 2.0 * one.antistokes.value);
    }
    SUBCASE("imaginary part is extremal at resonance") {
        auto im_at = [&](double omega_ir) {
            DriveParams d(2.0, 0.01, omega_ir, 0.01);
            return std::abs(chi3(organic(), d, conc).stokes.value.imag());
        };
        const double at_res = im_at(0.05);
        CHECK(at_res > im_at(0.05 + 5e-4));
        CHECK(at_res > im_at(0.05 - 5e-4));
    }
    SUBCASE("bracket recovered from the sideband weights matches") {
        // two routes to |bracket|^2: divide the coherent line weight by its
        // kinematic factors, or take the susceptibility bracket directly
        const MoleculeParams mol = organic();
        const DriveParams d = organic_drive();
        const SpectrumModel sb = coherent_sideband_weights(mol, d);
        const double common = d.rabi_vis * d.rabi_vis * std::pow(d.rabi_ir, 4) /
                              std::pow(mol.omega0 * mol.omega0 -
                                           d.omega_ir * d.omega_ir,
                                       2);
        const double omega_ast = d.omega_vis + 2.0 * d.omega_ir;
        const double from_weights =
            sb.delta_lines[1].weight /
            (common * std::pow(omega_ast, 4) /
             std::pow(omega_ast - mol.omega0, 2));
        const double direct =
            std::norm(sideband_bracket(mol, d, SidebandBranch::antistokes));
        CHECK(std::abs(from_weights - direct) <= 1e-12 * direct);
    }
    SUBCASE("degenerate sideband frequency throws") {
        DriveParams d(0.1, 0.01, 0.05, 0.01);
        CHECK_THROWS_AS(chi3(organic(), d, conc), std::domain_error);
    }
}

TEST_CASE("Stokes cross section") {
    SUBCASE("no coupling, no scattering") {
        MoleculeParams m(3.0, 0.1, 0.01, 1e-3, 0.0, 0.2);
        CHECK(stokes_cross_section(m, organic_drive()) == 0.0);
    }
    SUBCASE("independent of the probe power") {
        DriveParams weak(2.0, 1e-6, 0.05, 0.01);
        DriveParams strong(2.0, 0.3, 0.05, 0.01);
        CHECK(stokes_cross_section(organic(), weak) ==
              stokes_cross_section(organic(), strong));
    }
    SUBCASE("closed form vs quadrature of the emission line") {
        // absolute normalization: a line of weight w radiates integrated
        // power w in units of the universal radiation prefactor, so the
        // printed lineshape integral enters divided by its 2 pi area
        const MoleculeParams mol = organic();
        const DriveParams d = organic_drive();
        const Environment env(0.02);
        const SpectrumModel m = incoherent_spectrum(mol, d, env);
        const LorentzLine* st = nullptr;
        for (const auto& l : m.lorentz_lines)
            if (l.label == LineLabel::stokes_vis) st = &l;
        REQUIRE(st != nullptr);

        const double q = testsupport::integrate_peaked(
            [&](double w) {
                const double det = st->center - w;
                return st->weight * st->hw / (det * det + 0.25 * st->hw * st->hw);
            },
            1e-6, d.omega_vis, st->center, st->hw, 1e-12);

        const double d2 = mol.d_eg * mol.d_eg * units::e_sq_ev_nm;  // eV nm^3
        const double sigma_quad =
            (8.0 / 3.0) * d2 * d2 * q /
            (std::pow(units::hbar_c_ev_nm, 4) * d.rabi_vis * d.rabi_vis);
        const double sigma_closed = stokes_cross_section(mol, d);
        CHECK(std::abs(sigma_quad / sigma_closed - 1.0) < 0.01);
    }
}

TEST_CASE("chi3 from the cross section") {
    const double conc = 1.0e19;
    SUBCASE("zero cross section maps to zero") {
        CHECK(chi3_from_cross_section(organic(), organic_drive(), conc, 0.0)
                  .value == complexd(0.0, 0.0));
    }
    SUBCASE("round trip collapses onto the resonant part") {
        const MoleculeParams mol = organic();
        const DriveParams d = organic_drive();
        const double sigma = stokes_cross_section(mol, d);
        const complexd from_sigma =
            chi3_from_cross_section(mol, d, conc, sigma).value;

        const double omega_st = d.omega_vis - 2.0 * d.omega_ir;
        const complexd resonant_part =
            conc * std::pow(mol.d_eg, 4) /
            ((mol.omega0 * mol.omega0 - d.omega_ir * d.omega_ir) *
             (omega_st - mol.omega0)) *
            (sideband_bracket(mol, d, SidebandBranch::stokes) - 1.0);
        CHECK(std::abs(from_sigma - resonant_part) <=
              1e-9 * std::abs(resonant_part));
    }
    SUBCASE("one linewidth of detuning costs a factor sqrt(2)") {
        MoleculeParams detuned(3.0, 0.1 + 1.0e-3, 0.01, 1.0e-3, 0.01, 0.2);
        const double sigma = 1.0;  // fixed input, the response factor moves
        const complexd at_res =
            chi3_from_cross_section(organic(), organic_drive(), conc, sigma).value;
        const complexd off =
            chi3_from_cross_section(detuned, organic_drive(), conc, sigma).value;
        CHECK(std::abs(off) / std::abs(at_res) ==
              doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    }
}

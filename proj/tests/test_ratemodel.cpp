#include "catch_amalgamated.hpp"

#include <cmath>

#include "gsel/ratemodel.hpp"
#include "gsel/simulation.hpp"
#include "support.hpp"

using namespace gsel;
using Catch::Approx;

namespace {

RateSet random_rates()
{
    RateSet r;
    for (double* x : {&r.in_0_G, &r.in_1_G, &r.in_1_plus, &r.in_1_minus, &r.in_0_plus, &r.in_0_minus, &r.out_G_0,
                      &r.out_G_1, &r.out_plus_0, &r.out_plus_1, &r.out_minus_0, &r.out_minus_1, &r.cav,
                      &r.cav_plus, &r.cav_minus}) {
        *x = test::uniform(0.05, 1.0);
    }
    return r;
}

struct Extracted {
    DressedBasis basis;
    ChannelList channels;
    RateSet rates;
};

Extracted extracted(double eta, double gamma, double gamma_cav, MuReference ref, double offset = 0.0)
{
    const ModelSpace space(8);
    SystemParams p = SystemParams::resonant_with(eta, gamma, gamma_cav);
    DressedBasis b = dressed_basis(hamiltonian(p, space), space);
    p.mu = resolve_mu({ref, offset}, b);
    ChannelList ch = all_channels(b, space, p);
    RateSet r = extract_rates(b, ch);
    return {std::move(b), std::move(ch), r};
}

// Forward Euler is too crude for stiff rates; classical RK4 with a step well
// below the fastest time scale.
Populations integrate(const RateMatrix& M, double t_end)
{
    Eigen::Matrix<double, 5, 1> p = Eigen::Matrix<double, 5, 1>::Zero();
    p(0) = 1.0;
    const double fastest = M.diagonal().cwiseAbs().maxCoeff();
    const double dt = 0.05 / fastest;
    const auto steps = static_cast<long>(std::ceil(t_end / dt));
    for (long k = 0; k < steps; ++k) {
        const auto k1 = M * p;
        const auto k2 = M * (p + 0.5 * dt * k1);
        const auto k3 = M * (p + 0.5 * dt * k2);
        const auto k4 = M * (p + dt * k3);
        p += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    Populations out;
    for (int k = 0; k < 5; ++k) out.p[static_cast<std::size_t>(k)] = p(k);
    return out;
}

} // namespace

TEST_CASE("generator structure", "[ratemodel]")
{
    CHECK(rate_matrix(RateSet{}).isZero(0.0));
    for (int trial = 0; trial < 20; ++trial) {
        const RateSet r = random_rates();
        const RateMatrix M = rate_matrix(r);
        CHECK(M.colwise().sum().cwiseAbs().maxCoeff() < 1e-15);
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                if (i != j) CHECK(M(i, j) >= 0.0);
            }
        }
        CHECK(M(static_cast<int>(Level::s1), static_cast<int>(Level::G)) == r.out_G_1);
        CHECK(M(static_cast<int>(Level::s0), static_cast<int>(Level::s1)) == r.cav);
        CHECK(M(static_cast<int>(Level::G), static_cast<int>(Level::plus)) == r.cav_plus);
        CHECK(r.in_s0() == Approx(r.in_0_G + r.in_0_plus + r.in_0_minus));
        CHECK(r.out_plus() == Approx(r.out_plus_0 + r.out_plus_1));
    }
}

TEST_CASE("steady state against long-time integration", "[ratemodel]")
{
    for (int trial = 0; trial < 5; ++trial) {
        const RateMatrix M = rate_matrix(random_rates());
        const Populations P = rate_steady_state(M);
        const double slowest = M.diagonal().cwiseAbs().minCoeff();
        const Populations late = integrate(M, 100.0 / slowest);
        CHECK(P.sum() == Approx(1.0).margin(1e-12));
        for (int k = 0; k < 5; ++k) {
            CHECK(P.p[static_cast<std::size_t>(k)] >= 0.0);
            CHECK(P.p[static_cast<std::size_t>(k)] == Approx(late.p[static_cast<std::size_t>(k)]).margin(1e-10));
        }
        Eigen::Matrix<double, 5, 1> v;
        for (int k = 0; k < 5; ++k) v(k) = P.p[static_cast<std::size_t>(k)];
        CHECK((M * v).cwiseAbs().maxCoeff() < 1e-12 * M.cwiseAbs().maxCoeff());
    }
}

TEST_CASE("steady state at the physical rates", "[ratemodel]")
{
    const Extracted e = extracted(0.1, 0.5e-6, 7e-4, MuReference::omega_G);
    const RateMatrix M = rate_matrix(e.rates);
    const Populations P = rate_steady_state(M);
    const Populations late = integrate(M, 100.0 / 0.5e-6);
    for (int k = 0; k < 5; ++k) {
        CHECK(P.p[static_cast<std::size_t>(k)] == Approx(late.p[static_cast<std::size_t>(k)]).margin(1e-9));
    }
}

TEST_CASE("steady state examples", "[ratemodel]")
{
    SECTION("balanced two-state cycle")
    {
        RateSet r;
        r.in_0_G = 0.3;
        r.out_G_0 = 0.3;
        r.cav = 1.0;
        r.cav_plus = 1.0;
        r.cav_minus = 1.0;
        const Populations P = rate_steady_state(rate_matrix(r));
        CHECK(P[Level::s0] == Approx(0.5));
        CHECK(P[Level::G] == Approx(0.5));
        CHECK(P[Level::s1] == 0.0);
        CHECK(P[Level::plus] == 0.0);
        CHECK(P[Level::minus] == 0.0);
    }
    SECTION("standard electroluminescence in the weak coupling limit")
    {
        const Extracted e = extracted(1e-4, 1e-7, 1e-2, MuReference::omega_G_plus_omega_plus);
        const Populations P = rate_steady_state(rate_matrix(e.rates));
        CHECK(P[Level::s0] == Approx(1.0 / 3.0).epsilon(1e-3));
        CHECK(P[Level::G] == Approx(2.0 / 3.0).epsilon(1e-3));
    }
    SECTION("degenerate kernel")
    {
        RateSet r;
        r.cav = 1.0; // G is isolated from the s0/s1 pair
        CHECK_THROWS_AS(rate_steady_state(rate_matrix(r)), KernelAmbiguityError);
    }
}

TEST_CASE("rate extraction", "[ratemodel]")
{
    const Extracted gse = extracted(0.1, 1.0, 1.0, MuReference::omega_G);
    CHECK(gse.rates.in_0_plus == 0.0);
    CHECK(gse.rates.in_0_minus == 0.0);
    CHECK(gse.rates.in_0_G > 0.0);

    const Extracted weak = extracted(1e-5, 1.0, 1.0, MuReference::omega_G_plus_omega_plus);
    CHECK(weak.rates.cav_plus == Approx(0.5).epsilon(1e-4));
    CHECK(weak.rates.cav_minus == Approx(0.5).epsilon(1e-4));
    CHECK(weak.rates.out_G_1 < 1e-9);
    CHECK(weak.rates.cav == Approx(1.0));
    CHECK(weak.rates.in_0_plus == Approx(0.5).epsilon(1e-4));

    const Extracted zero = extracted(0.0, 1.0, 1.0, MuReference::omega_G);
    CHECK(zero.rates.out_G_1 == 0.0);

    // Gating: the direct injections into the polaritons switch on at their thresholds.
    const Extracted below = extracted(0.1, 1.0, 1.0, MuReference::omega_G_plus_omega_minus, -1e-9);
    const Extracted at_minus = extracted(0.1, 1.0, 1.0, MuReference::omega_G_plus_omega_minus);
    const Extracted at_plus = extracted(0.1, 1.0, 1.0, MuReference::omega_G_plus_omega_plus);
    CHECK(below.rates.in_0_minus == 0.0);
    CHECK(at_minus.rates.in_0_minus > 0.0);
    CHECK(at_minus.rates.in_0_plus == 0.0);
    CHECK(at_plus.rates.in_0_plus > 0.0);
}

TEST_CASE("fluxes and the gating transition", "[ratemodel]")
{
    RateSet r;
    r.cav = 2.0;
    r.cav_plus = 3.0;
    r.cav_minus = 5.0;
    Populations P;
    P.p = {0.5, 0.0, 0.2, 0.1, 0.2};
    const Fluxes f = fluxes(P, r);
    CHECK(f.central == 0.0);
    CHECK(f.plus == Approx(0.3));
    CHECK(f.minus == Approx(1.0));

    const auto minus_flux = [](double offset) {
        const Extracted e = extracted(0.1, 0.5e-6, 7e-4, MuReference::omega_G_plus_omega_minus, offset);
        return fluxes(rate_steady_state(rate_matrix(e.rates)), e.rates).minus;
    };
    CHECK(minus_flux(0.0) > 10.0 * minus_flux(-1e-6));
}

TEST_CASE("closed-form intensities", "[ratemodel]")
{
    const Fluxes zero = analytic_gse(0.0, 0.5e-6, 7e-4);
    CHECK(zero.central == 0.0);
    CHECK(zero.plus == 0.0);
    CHECK(zero.minus == 0.0);

    const Fluxes g = analytic_gse(0.1, 0.5e-6, 7e-4);
    CHECK(g.central == Approx(6.2455e-10).epsilon(1e-4));
    CHECK(g.plus == Approx(2.232e-13).epsilon(1e-3));
    CHECK(g.minus == g.plus);
    const Fluxes tiny = analytic_gse(0.1, 1e-12, 1.0);
    CHECK(tiny.plus / tiny.central == Approx(1e-12 / 2.0).epsilon(1e-9));

    const Fluxes el0 = analytic_el(0.0, 1e-9, 1.0);
    CHECK(el0.plus == Approx(1e-9 / 6.0).epsilon(1e-8));
    CHECK(el0.minus == Approx(1e-9 / 6.0).epsilon(1e-8));
    const Fluxes el = analytic_el(0.1, 0.5e-6, 7e-4);
    CHECK(el.plus == Approx(8.737e-8).epsilon(1e-3));
    CHECK(el.plus - el.minus == Approx(0.5e-6 / 6.0 * 0.1 * (1.0 - 2.0 * 0.5e-6 / 7e-4)).epsilon(1e-10));

    for (double eta : {0.02, 0.05, 0.1}) {
        const Fluxes a = analytic_gse(eta, 0.5e-6, 7e-4);
        const Fluxes b = analytic_el(eta, 0.5e-6, 7e-4);
        CHECK(a.plus < b.plus);
        CHECK(a.minus < b.minus);
    }
}

TEST_CASE("rate model against the master equation", "[ratemodel]")
{
    // Central peak in the GSE regime; agreement improves as eta shrinks.
    double previous = 1.0;
    for (double eta : {0.1, 0.05, 0.02}) {
        RunSettings s;
        s.mu = {MuReference::omega_G, 0.0};
        s.ratemodel = true;
        const SimulationResult r = simulate(SystemParams::resonant_with(eta, 0.5e-6, 7e-4), s);
        const double rel = std::abs(r.rate_model->fluxes.central / r.peak_fluxes.central - 1.0);
        INFO("eta " << eta);
        CHECK(rel < 0.1);
        CHECK(rel < previous);
        previous = rel;
        CHECK(r.rate_model->fluxes.central == Approx(analytic_gse(eta, 0.5e-6, 7e-4).central).epsilon(0.1));
    }
    RunSettings s;
    s.mu = {MuReference::omega_G_plus_omega_plus, 0.0};
    s.ratemodel = true;
    s.spectrum = false;
    const SimulationResult el = simulate(SystemParams::resonant_with(0.1, 0.5e-6, 7e-4), s);
    const Fluxes ref = analytic_el(0.1, 0.5e-6, 7e-4);
    CHECK(el.rate_model->fluxes.plus == Approx(ref.plus).epsilon(0.1));
    CHECK(el.rate_model->fluxes.minus == Approx(ref.minus).epsilon(0.1));
}

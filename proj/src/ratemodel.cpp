#include "gsel/ratemodel.hpp"

#include <algorithm>
#include <cmath>

namespace gsel {

namespace {

double rate_of(const ChannelList& channels, Index from, Index to, Bath bath)
{
    const JumpChannel* ch = find_channel(channels, from, to, bath);
    return ch ? ch->rate : 0.0;
}

} // namespace

RateSet extract_rates(const DressedBasis& basis, const ChannelList& channels)
{
    const Index s0 = basis.s_state(0);
    const Index s1 = basis.s_state(1);
    const Index G = basis.ground();
    const Index P = basis.plus();
    const Index M = basis.minus();

    RateSet r;
    r.in_0_G = rate_of(channels, s0, G, Bath::electron_in);
    r.in_1_G = rate_of(channels, s1, G, Bath::electron_in);
    r.in_1_plus = rate_of(channels, s1, P, Bath::electron_in);
    r.in_1_minus = rate_of(channels, s1, M, Bath::electron_in);
    r.in_0_plus = rate_of(channels, s0, P, Bath::electron_in);
    r.in_0_minus = rate_of(channels, s0, M, Bath::electron_in);
    r.out_G_0 = rate_of(channels, G, s0, Bath::electron_out);
    r.out_G_1 = rate_of(channels, G, s1, Bath::electron_out);
    r.out_plus_0 = rate_of(channels, P, s0, Bath::electron_out);
    r.out_plus_1 = rate_of(channels, P, s1, Bath::electron_out);
    r.out_minus_0 = rate_of(channels, M, s0, Bath::electron_out);
    r.out_minus_1 = rate_of(channels, M, s1, Bath::electron_out);
    r.cav = rate_of(channels, s1, s0, Bath::cavity);
    r.cav_plus = rate_of(channels, P, G, Bath::cavity);
    r.cav_minus = rate_of(channels, M, G, Bath::cavity);
    return r;
}

RateMatrix rate_matrix(const RateSet& r)
{
    constexpr auto s0 = static_cast<int>(Level::s0);
    constexpr auto s1 = static_cast<int>(Level::s1);
    constexpr auto G = static_cast<int>(Level::G);
    constexpr auto P = static_cast<int>(Level::plus);
    constexpr auto M = static_cast<int>(Level::minus);

    RateMatrix m = RateMatrix::Zero();
    // dP_s0/dt
    m(s0, s0) = -r.in_s0();
    m(s0, G) = r.out_G_0;
    m(s0, P) = r.out_plus_0;
    m(s0, M) = r.out_minus_0;
    m(s0, s1) = r.cav;
    // dP_s1/dt
    m(s1, s1) = -(r.cav + r.in_s1());
    m(s1, G) = r.out_G_1;
    m(s1, P) = r.out_plus_1;
    m(s1, M) = r.out_minus_1;
    // dP_G/dt
    m(G, G) = -r.out_G();
    m(G, s0) = r.in_0_G;
    m(G, s1) = r.in_1_G;
    m(G, P) = r.cav_plus;
    m(G, M) = r.cav_minus;
    // dP_+/dt and dP_-/dt, with direct injection from |s,0> once the gate opens
    m(P, P) = -(r.cav_plus + r.out_plus());
    m(P, s1) = r.in_1_plus;
    m(P, s0) = r.in_0_plus;
    m(M, M) = -(r.cav_minus + r.out_minus());
    m(M, s1) = r.in_1_minus;
    m(M, s0) = r.in_0_minus;
    return m;
}

Populations rate_steady_state(const RateMatrix& M)
{
    const ComplexVector kernel = numerics::null_vector(M.cast<Complex>());
    const Complex total = kernel.sum();
    if (std::abs(total) == 0.0) throw NumericalError("rate_steady_state: kernel vector sums to zero");
    Populations P;
    for (int k = 0; k < 5; ++k) P.p[static_cast<std::size_t>(k)] = (kernel(k) / total).real();
    // Rounding can leave entries at -1e-17; clip and renormalize.
    for (auto& x : P.p) x = std::max(x, 0.0);
    const double s = P.sum();
    for (auto& x : P.p) x /= s;
    return P;
}

Fluxes fluxes(const Populations& P, const RateSet& rates)
{
    return {P[Level::s1] * rates.cav, P[Level::plus] * rates.cav_plus, P[Level::minus] * rates.cav_minus};
}

Fluxes analytic_gse(double eta, double gamma, double gamma_cav)
{
    const double ratio = gamma / gamma_cav;
    const double central = eta * eta * gamma / 8.0 * (1.0 - ratio);
    const double satellite = eta * eta * gamma / 16.0 * ratio;
    return {central, satellite, satellite};
}

Fluxes analytic_el(double eta, double gamma, double gamma_cav)
{
    const double ratio = gamma / gamma_cav;
    return {gamma / 6.0 * (2.0 * ratio + eta * eta), gamma / 6.0 * (1.0 + eta / 2.0) * (1.0 - 2.0 * ratio),
            gamma / 6.0 * (1.0 - eta / 2.0) * (1.0 - 2.0 * ratio)};
}

} // namespace gsel

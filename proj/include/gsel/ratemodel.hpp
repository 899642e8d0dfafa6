// ratemodel.hpp: five-level population model over {|s,0>, |s,1>, |G>, |+>, |->}
// and the closed-form perturbative emission intensities.

#pragma once

#include <array>

#include "gsel/dissipators.hpp"

namespace gsel {

struct RateSet {
    double in_0_G{0.0};
    double in_1_G{0.0};
    double in_1_plus{0.0};
    double in_1_minus{0.0};
    double in_0_plus{0.0}; // gated by mu; zero below the polariton thresholds
    double in_0_minus{0.0};
    double out_G_0{0.0};
    double out_G_1{0.0};
    double out_plus_0{0.0};
    double out_plus_1{0.0};
    double out_minus_0{0.0};
    double out_minus_1{0.0};
    double cav{0.0}; // |s,1> -> |s,0>
    double cav_plus{0.0};
    double cav_minus{0.0};

    double in_s0() const { return in_0_G + in_0_plus + in_0_minus; }
    double in_s1() const { return in_1_G + in_1_plus + in_1_minus; }
    double out_G() const { return out_G_0 + out_G_1; }
    double out_plus() const { return out_plus_0 + out_plus_1; }
    double out_minus() const { return out_minus_0 + out_minus_1; }
};

// Population ordering used throughout: s0, s1, G, plus, minus.
enum class Level { s0 = 0, s1 = 1, G = 2, plus = 3, minus = 4 };

struct Populations {
    std::array<double, 5> p{};

    double operator[](Level l) const { return p[static_cast<std::size_t>(l)]; }
    double sum() const { return p[0] + p[1] + p[2] + p[3] + p[4]; }
};

using RateMatrix = Eigen::Matrix<double, 5, 5>;

struct Fluxes {
    double central{0.0};
    double plus{0.0};
    double minus{0.0};
};

// Picks the channels among the five retained levels; absent channels give 0.
RateSet extract_rates(const DressedBasis& basis, const ChannelList& channels);

// M(to, from) = rate, columns sum to zero.
RateMatrix rate_matrix(const RateSet& rates);

// Throws KernelAmbiguityError for a degenerate kernel.
Populations rate_steady_state(const RateMatrix& M);

// f_C = P_s1 Gamma_cav, f_+ = P_+ Gamma_cav^+, f_- = P_- Gamma_cav^-
Fluxes fluxes(const Populations& P, const RateSet& rates);

// Lowest order in eta, first order in gamma/gamma_cav, mu below the
// polariton thresholds:
//   f_C = eta^2 gamma / 8 (1 - gamma/gamma_cav),  f_+- = eta^2 gamma^2 / (16 gamma_cav)
Fluxes analytic_gse(double eta, double gamma, double gamma_cav);

// Standard electroluminescence, mu above omega_G + omega_+:
//   f'_C = gamma/6 (2 gamma/gamma_cav + eta^2),  f'_+- = gamma/6 (1 +- eta/2)(1 - 2 gamma/gamma_cav)
Fluxes analytic_el(double eta, double gamma, double gamma_cav);

} // namespace gsel

// simulation.hpp: one steady-state run from parameters to integrated peak fluxes

#pragma once

#include <optional>
#include <string_view>

#include "gsel/ratemodel.hpp"
#include "gsel/spectrum.hpp"

namespace gsel {

// Where the reservoir chemical potential sits. The symbolic references are
// dressed energies, so they are only known after diagonalization.
enum class MuReference {
    absolute,              // mu = offset
    omega_G,               // mu = E_G + offset
    omega_G_plus_omega_minus, // mu = E_- + offset
    omega_G_plus_omega_plus,  // mu = E_+ + offset
    omega_plus,               // mu = E_+ - E_G + offset
};

std::string_view to_string(MuReference ref);
// Throws ContractViolation for an unknown name.
MuReference parse_mu_reference(std::string_view text);

struct MuSpec {
    MuReference reference{MuReference::omega_G};
    double offset{0.0};
};

double resolve_mu(const MuSpec& spec, const DressedBasis& basis);

struct RunSettings {
    int n_max{8};
    MuSpec mu{};
    FrequencyGrid grid{};
    bool spectrum{true};
    bool ratemodel{false};
};

struct RateModelResult {
    RateSet rates;
    Populations populations;
    Fluxes fluxes;
};

struct SimulationResult {
    SystemParams params; // with mu resolved
    DressedBasis basis;
    ChannelList channels;
    Superoperator liouvillian;
    DensityOperator steady;
    QuadratureParts x;
    double photon_correlation{0.0}; // <X^+ X^-> in the stationary state
    std::optional<Spectrum> spectrum;
    std::optional<PeakWindows> windows;
    Fluxes peak_fluxes;   // integrate_peak_resolved per window; zero without a spectrum
    Fluxes window_fluxes; // plain window integrals, including neighbouring tails; nan off the grid
    std::optional<RateModelResult> rate_model;

    // sum over extraction channels of rate * population of the source state
    double electron_current() const;
};

// params.mu is ignored; the chemical potential comes from settings.mu.
SimulationResult simulate(const SystemParams& params, const RunSettings& settings);

} // namespace gsel

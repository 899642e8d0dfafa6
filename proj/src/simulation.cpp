#include "gsel/simulation.hpp"

#include <array>
#include <limits>
#include <string>
#include <utility>

namespace gsel {

namespace {

constexpr std::array<std::pair<MuReference, std::string_view>, 5> kMuNames{{
    {MuReference::absolute, "absolute"},
    {MuReference::omega_G, "omega_G"},
    {MuReference::omega_G_plus_omega_minus, "omega_G_plus_omega_minus"},
    {MuReference::omega_G_plus_omega_plus, "omega_G_plus_omega_plus"},
    {MuReference::omega_plus, "omega_plus"},
}};

} // namespace

std::string_view to_string(MuReference ref)
{
    for (const auto& [r, name] : kMuNames) {
        if (r == ref) return name;
    }
    return "unknown";
}

MuReference parse_mu_reference(std::string_view text)
{
    for (const auto& [r, name] : kMuNames) {
        if (name == text) return r;
    }
    throw ContractViolation("unknown mu reference '" + std::string(text) + "'");
}

double resolve_mu(const MuSpec& spec, const DressedBasis& basis)
{
    // E_+ and E_- are used directly rather than omega_G + omega_+-, which would
    // round to a value a few ulps off the injection threshold.
    switch (spec.reference) {
    case MuReference::absolute: return spec.offset;
    case MuReference::omega_G: return basis.omega_G() + spec.offset;
    case MuReference::omega_G_plus_omega_minus: return basis.energies(basis.minus()) + spec.offset;
    case MuReference::omega_G_plus_omega_plus: return basis.energies(basis.plus()) + spec.offset;
    case MuReference::omega_plus: return basis.omega_plus() + spec.offset;
    }
    throw ContractViolation("resolve_mu: invalid reference");
}

double SimulationResult::electron_current() const
{
    double current = 0.0;
    for (const auto& ch : channels) {
        if (ch.bath == Bath::electron_out) current += ch.rate * steady.matrix(ch.from, ch.from).real();
    }
    return current;
}

SimulationResult simulate(const SystemParams& params, const RunSettings& settings)
{
    params.validate();
    const ModelSpace space(settings.n_max);
    DressedBasis basis = dressed_basis(hamiltonian(params, space), space);

    SystemParams resolved = params;
    resolved.mu = resolve_mu(settings.mu, basis);

    ChannelList channels = all_channels(basis, space, resolved);
    Superoperator L = build_liouvillian(basis.hamiltonian(), channels);
    DensityOperator rho = steady_state(L);
    QuadratureParts x = x_pm(basis, space);
    const double correlation = rho.expectation(x.plus * x.minus).real();

    SimulationResult out{resolved, std::move(basis), std::move(channels), std::move(L), std::move(rho), std::move(x),
                         correlation, {}, {}, {}, {}, {}};

    if (settings.spectrum) {
        const auto grid = settings.grid.values();
        out.spectrum = emission_spectrum(out.liouvillian, out.steady, out.x.minus, out.x.plus, grid,
                                         resolved.gamma_cav);
        out.windows = default_windows(out.basis, settings.grid.spacing());
        const auto& spec = *out.spectrum;
        const auto integrate = [&](const char* name, auto&& method) {
            const PeakWindow& w = out.windows->by_name(name);
            return method(spec, w.lo, w.hi);
        };
        const auto per_window = [&](auto&& method) {
            return Fluxes{integrate("central", method), integrate("plus", method), integrate("minus", method)};
        };
        out.peak_fluxes = per_window(integrate_peak_resolved);
        // A narrow user grid may not reach every peak; that is not an error for the spectrum itself.
        out.window_fluxes = per_window([](const Spectrum& sp, double lo, double hi) {
            if (lo < sp.omegas.front() || hi > sp.omegas.back()) return std::numeric_limits<double>::quiet_NaN();
            return integrate_window(sp, lo, hi);
        });
    }
    if (settings.ratemodel) {
        RateModelResult rm;
        rm.rates = extract_rates(out.basis, out.channels);
        rm.populations = rate_steady_state(rate_matrix(rm.rates));
        rm.fluxes = fluxes(rm.populations, rm.rates);
        out.rate_model = rm;
    }
    return out;
}

} // namespace gsel

#include "gsel/dissipators.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace gsel {

namespace {

// Two energies count as ordered only when they differ by more than this.
double ordering_tolerance(const DressedBasis& basis)
{
    return 1e-12 * std::max(1.0, basis.energies.cwiseAbs().maxCoeff());
}

} // namespace

std::string_view to_string(Bath bath)
{
    switch (bath) {
    case Bath::cavity: return "cavity";
    case Bath::electron_in: return "electron_in";
    case Bath::electron_out: return "electron_out";
    }
    return "?";
}

ComplexMatrix JumpChannel::op(Index dim) const
{
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    m(to, from) = 1.0;
    return m;
}

ComplexMatrix injection_operator(const ModelSpace& space)
{
    return transition(space, Electronic::s, Electronic::g) + transition(space, Electronic::s, Electronic::e);
}

ComplexMatrix extraction_operator(const ModelSpace& space)
{
    return injection_operator(space).adjoint();
}

ComplexMatrix quadrature(const ModelSpace& space)
{
    const ComplexMatrix a = annihilation(space);
    return a + a.adjoint();
}

ChannelList channels_cavity(const DressedBasis& basis, const ModelSpace& space, double gamma_cav)
{
    ChannelList out;
    if (gamma_cav <= 0.0) return out;
    const ComplexMatrix X = basis.to_dressed(quadrature(space));
    const double tol = ordering_tolerance(basis);
    for (Index j = 0; j < basis.dim(); ++j) {
        for (Index i = 0; i < basis.dim(); ++i) {
            const double freq = basis.energies(j) - basis.energies(i);
            if (freq <= tol) continue;
            const double weight = std::norm(X(i, j));
            if (weight < kMinSquaredElement) continue;
            out.push_back({j, i, gamma_cav * weight, freq, Bath::cavity});
        }
    }
    return out;
}

ChannelList channels_out(const DressedBasis& basis, const ModelSpace& space, double gamma_out)
{
    ChannelList out;
    if (gamma_out <= 0.0) return out;
    const ComplexMatrix O = basis.to_dressed(extraction_operator(space));
    for (Index j = basis.one_electron_begin(); j < basis.dim(); ++j) {
        for (int n = 0; n <= basis.n_max; ++n) {
            const Index i = basis.s_state(n);
            const double weight = std::norm(O(i, j));
            if (weight < kMinSquaredElement) continue;
            out.push_back({j, i, gamma_out * weight, basis.energies(j) - basis.energies(i), Bath::electron_out});
        }
    }
    return out;
}

ChannelList channels_in(const DressedBasis& basis, const ModelSpace& space, double gamma_in, double mu,
                        double omega_c)
{
    ChannelList out;
    if (gamma_in <= 0.0) return out;
    const ComplexMatrix O = basis.to_dressed(injection_operator(space));
    for (int n = 0; n <= basis.n_max; ++n) {
        const Index i = basis.s_state(n);
        for (Index j = basis.one_electron_begin(); j < basis.dim(); ++j) {
            const double gate = mu + n * omega_c - basis.energies(j);
            if (gate < -kGateTolerance) continue;
            const double weight = std::norm(O(j, i));
            if (weight < kMinSquaredElement) continue;
            out.push_back({i, j, gamma_in * weight, basis.energies(i) - basis.energies(j), Bath::electron_in});
        }
    }
    return out;
}

ChannelList all_channels(const DressedBasis& basis, const ModelSpace& space, const SystemParams& params)
{
    ChannelList out = channels_cavity(basis, space, params.gamma_cav);
    const ChannelList in = channels_in(basis, space, params.gamma_in, params.mu, params.omega_c);
    const ChannelList ex = channels_out(basis, space, params.gamma_out);
    out.insert(out.end(), in.begin(), in.end());
    out.insert(out.end(), ex.begin(), ex.end());
    return out;
}

QuadratureParts x_pm(const DressedBasis& basis, const ModelSpace& space)
{
    const ComplexMatrix X = basis.to_dressed(quadrature(space));
    const double tol = ordering_tolerance(basis);
    ComplexMatrix minus = ComplexMatrix::Zero(basis.dim(), basis.dim());
    for (Index j = 0; j < basis.dim(); ++j) {
        for (Index i = 0; i < basis.dim(); ++i) {
            if (basis.energies(j) - basis.energies(i) > tol) minus(i, j) = X(i, j);
        }
    }
    ComplexMatrix plus = minus.adjoint();
    return {std::move(minus), std::move(plus)};
}

const JumpChannel* find_channel(const ChannelList& channels, Index from, Index to, Bath bath)
{
    const auto it = std::find_if(channels.begin(), channels.end(), [&](const JumpChannel& c) {
        return c.from == from && c.to == to && c.bath == bath;
    });
    return it == channels.end() ? nullptr : &*it;
}

} // namespace gsel

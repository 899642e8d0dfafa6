// dissipators.hpp: dressed-state jump channels for the cavity and electron reservoirs

#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "gsel/rabi.hpp"

namespace gsel {

enum class Bath { cavity, electron_in, electron_out };

std::string_view to_string(Bath bath);

/// One dressed transition |to><from| with its Lindblad rate.
struct JumpChannel {
    Index from{0};
    Index to{0};
    double rate{0.0};
    double freq{0.0}; // E_from - E_to
    Bath bath{Bath::cavity};

    // |to><from| in the dressed basis.
    ComplexMatrix op(Index dim) const;
};

using ChannelList = std::vector<JumpChannel>;

// Squared matrix elements below this are treated as absent transitions.
inline constexpr double kMinSquaredElement = 1e-14;

// Tolerance on the injection gate argument; Theta(x) = 1 for x >= -kGateTolerance.
inline constexpr double kGateTolerance = 1e-12;

// Bare reservoir operators: O_in = (|g> + |e>)<s| x 1, O_out = O_in^dag.
ComplexMatrix injection_operator(const ModelSpace& space);
ComplexMatrix extraction_operator(const ModelSpace& space);

// X = a + a^dag in the bare basis.
ComplexMatrix quadrature(const ModelSpace& space);

// Zero-temperature photon bath: every downward pair E_i < E_j with rate
// gamma_cav |<i|X|j>|^2.
ChannelList channels_cavity(const DressedBasis& basis, const ModelSpace& space, double gamma_cav);

// Ungated sink: every one-electron state j to every |s,n>, rate gamma_out |<s,n|O_out|j>|^2.
ChannelList channels_out(const DressedBasis& basis, const ModelSpace& space, double gamma_out);

// Injection from |s,n> to one-electron state j, rate gamma_in |<j|O_in|s,n>|^2,
// open when mu + n omega_c - E_j >= 0. E_j does not depend on omega_s, so the
// gate is independent of the empty-state offset.
ChannelList channels_in(const DressedBasis& basis, const ModelSpace& space, double gamma_in, double mu,
                        double omega_c = 1.0);

// All three baths for a parameter set.
ChannelList all_channels(const DressedBasis& basis, const ModelSpace& space, const SystemParams& params);

/// Positive/negative-frequency parts of X in the dressed basis:
/// X^- keeps <i|X|j> for E_j > E_i; X^+ = (X^-)^dag.
struct QuadratureParts {
    ComplexMatrix minus;
    ComplexMatrix plus;
};
QuadratureParts x_pm(const DressedBasis& basis, const ModelSpace& space);

// First channel matching (from, to, bath), or nullptr.
const JumpChannel* find_channel(const ChannelList& channels, Index from, Index to, Bath bath);

} // namespace gsel

// rabi.hpp: cavity Hamiltonian with an open three-level electron, and its dressed basis

#pragma once

#include <vector>

#include "gsel/hilbert.hpp"

namespace gsel {

// Eigenstates that fail to carry an integer electron number.
class SectorMixingError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// H = w_c a^dag a + w_e |e><e| - w_s |s><s| + Omega_R (a + a^dag)(|e><g| + |g><e|)
ComplexMatrix hamiltonian(const SystemParams& params, const ModelSpace& space);

// (a + a^dag)(|e><g| + |g><e|), the light-matter coupling without its strength.
ComplexMatrix coupling_operator(const ModelSpace& space);

/// Eigenbasis of the Hamiltonian, diagonalized separately in the zero- and
/// one-electron sectors.
///
/// Ordering: the n_max + 1 empty states |s,n> come first (index n), followed
/// by the one-electron eigenstates in ascending energy. |G>, |->, |+> are the
/// three lowest one-electron states.
///
/// Degenerate one-electron levels (only at zero coupling) are resolved by
/// diagonalizing the coupling operator inside the degenerate subspace, which
/// selects the zero-coupling limit of the coupled eigenstates: |-> and |+>
/// become (|g,1> -/+ |e,0>)/sqrt(2) at resonance.
struct DressedBasis {
    RealVector energies;     // E_k
    ComplexMatrix states;    // column k = eigenstate k in the bare basis
    std::vector<int> sector; // electron number of eigenstate k
    int n_max{0};

    Index dim() const { return energies.size(); }
    Index s_state(int photons) const;
    Index ground() const { return n_max + 1; }
    Index minus() const { return n_max + 2; }
    Index plus() const { return n_max + 3; }
    Index one_electron_begin() const { return n_max + 1; }
    bool is_empty_state(Index k) const { return sector.at(static_cast<std::size_t>(k)) == 0; }
    int photons_of_empty_state(Index k) const; // throws if k is not an |s,n> state

    double omega_G() const { return energies(ground()); }
    double omega_minus() const { return energies(minus()) - omega_G(); }
    double omega_plus() const { return energies(plus()) - omega_G(); }

    // V^dag O V
    ComplexMatrix to_dressed(const ComplexMatrix& bare_operator) const;
    // diag(E_k), exactly diagonal.
    ComplexMatrix hamiltonian() const;
};

// Throws SectorMixingError if H couples the electron sectors or an eigenstate
// carries a non-integer electron number.
DressedBasis dressed_basis(const ComplexMatrix& H, const ModelSpace& space);

// <G| a^dag a |G>
double ground_photon_number(const DressedBasis& basis, const ModelSpace& space);

struct JcStates {
    ComplexVector ground; // |g,0>
    ComplexVector plus;   // (|g,1> + |e,0>)/sqrt(2)
    ComplexVector minus;  // (|g,1> - |e,0>)/sqrt(2)
};

// Rotating-wave limit states; requires resonance.
JcStates jc_reference(const SystemParams& params, const ModelSpace& space);

} // namespace gsel

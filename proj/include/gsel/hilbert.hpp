// hilbert.hpp: electronic {s, g, e} x photon Fock space and its elementary operators

#pragma once

#include <array>
#include <string_view>

#include "gsel/numerics.hpp"

namespace gsel {

// Empty dot, singly occupied ground level, singly occupied excited level.
enum class Electronic { s = 0, g = 1, e = 2 };

constexpr std::array<Electronic, 3> kElectronicLabels{Electronic::s, Electronic::g, Electronic::e};

std::string_view to_string(Electronic label);

// Accepts "s", "g", "e". Throws ContractViolation otherwise.
Electronic parse_electronic(std::string_view text);

struct BasisLabel {
    Electronic electronic;
    int photons;
    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// Bare product basis {s,g,e} x {|0>, ..., |n_max>}.
///
/// Flat index = electronic * (n_max + 1) + photons, so each electronic level
/// owns a contiguous run of Fock states.
class ModelSpace {
public:
    // Throws ContractViolation for n_max < 1.
    explicit ModelSpace(int n_max);

    int n_max() const noexcept { return n_max_; }
    int fock_dim() const noexcept { return n_max_ + 1; }
    Index dim() const noexcept { return 3 * static_cast<Index>(n_max_ + 1); }

    Index index(Electronic label, int photons) const;
    Index index(BasisLabel label) const { return index(label.electronic, label.photons); }
    BasisLabel label(Index flat) const;

    // |label, photons> as a unit vector.
    ComplexVector basis_vector(Electronic label, int photons) const;

private:
    int n_max_;
};

ModelSpace build_space(int n_max);

/// Physical constants in units with hbar = 1 and omega_c = 1 by convention.
struct SystemParams {
    double omega_c{1.0};
    double omega_e{1.0};
    double omega_s{0.0};
    double rabi{0.0}; // Omega_R
    double gamma_in{0.0};
    double gamma_out{0.0};
    double gamma_cav{0.0};
    double mu{0.0};

    // Normalized coupling Omega_R / omega_c.
    double eta() const { return rabi / omega_c; }
    bool resonant() const;

    // Throws ContractViolation naming the offending field.
    void validate() const;

    // Resonant parameter set at coupling eta with Gamma_in = Gamma_out = gamma.
    static SystemParams resonant_with(double eta, double gamma, double gamma_cav, double mu = 0.0);
};

// a (identity on the electronic factor), truncated at n_max.
ComplexMatrix annihilation(const ModelSpace& space);

// (|to><from|) x 1_photon
ComplexMatrix transition(const ModelSpace& space, Electronic from, Electronic to);

// Electron number: 0 on |s,n>, 1 on |g,n> and |e,n>.
ComplexMatrix number_electron(const ModelSpace& space);

ComplexMatrix identity(const ModelSpace& space);

// exp(i pi (a^dagger a + |e><e|)), diagonal with entries (-1)^(n + [e]).
ComplexMatrix parity(const ModelSpace& space);

} // namespace gsel

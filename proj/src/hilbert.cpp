#include "gsel/hilbert.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace gsel {

std::string_view to_string(Electronic label)
{
    switch (label) {
    case Electronic::s: return "s";
    case Electronic::g: return "g";
    case Electronic::e: return "e";
    }
    return "?";
}

Electronic parse_electronic(std::string_view text)
{
    if (text == "s") return Electronic::s;
    if (text == "g") return Electronic::g;
    if (text == "e") return Electronic::e;
    throw ContractViolation("unknown electronic label '" + std::string(text) + "'");
}

ModelSpace::ModelSpace(int n_max) : n_max_(n_max)
{
    if (n_max < 1) {
        throw ContractViolation("photon cutoff n_max must be >= 1, got " + std::to_string(n_max));
    }
}

Index ModelSpace::index(Electronic label, int photons) const
{
    const int l = static_cast<int>(label);
    if (l < 0 || l > 2) throw ContractViolation("unknown electronic label");
    if (photons < 0 || photons > n_max_) {
        throw ContractViolation("photon number " + std::to_string(photons) + " outside [0, " +
                                std::to_string(n_max_) + "]");
    }
    return static_cast<Index>(l) * fock_dim() + photons;
}

BasisLabel ModelSpace::label(Index flat) const
{
    if (flat < 0 || flat >= dim()) throw ContractViolation("flat index out of range");
    return {static_cast<Electronic>(flat / fock_dim()), static_cast<int>(flat % fock_dim())};
}

ComplexVector ModelSpace::basis_vector(Electronic label, int photons) const
{
    ComplexVector v = ComplexVector::Zero(dim());
    v(index(label, photons)) = 1.0;
    return v;
}

ModelSpace build_space(int n_max)
{
    return ModelSpace(n_max);
}

bool SystemParams::resonant() const
{
    return std::abs(omega_e - omega_c) <= 1e-12;
}

void SystemParams::validate() const
{
    const auto check = [](double value, const char* name, bool strictly_positive) {
        if (!std::isfinite(value) || value < 0.0 || (strictly_positive && value == 0.0)) {
            std::ostringstream os;
            os << name << " must be " << (strictly_positive ? "positive" : "non-negative") << " and finite, got "
               << value;
            throw ContractViolation(os.str());
        }
    };
    check(omega_c, "omega_c", true);
    check(omega_e, "omega_e", false);
    check(omega_s, "omega_s", false);
    check(rabi, "rabi", false);
    check(gamma_in, "gamma_in", false);
    check(gamma_out, "gamma_out", false);
    check(gamma_cav, "gamma_cav", false);
    if (!std::isfinite(mu)) throw ContractViolation("mu must be finite");
}

SystemParams SystemParams::resonant_with(double eta, double gamma, double gamma_cav, double mu)
{
    SystemParams p;
    p.rabi = eta * p.omega_c;
    p.gamma_in = gamma;
    p.gamma_out = gamma;
    p.gamma_cav = gamma_cav;
    p.mu = mu;
    return p;
}

ComplexMatrix annihilation(const ModelSpace& space)
{
    ComplexMatrix a = ComplexMatrix::Zero(space.dim(), space.dim());
    for (Electronic x : kElectronicLabels) {
        for (int n = 1; n <= space.n_max(); ++n) {
            a(space.index(x, n - 1), space.index(x, n)) = std::sqrt(static_cast<double>(n));
        }
    }
    return a;
}

ComplexMatrix transition(const ModelSpace& space, Electronic from, Electronic to)
{
    ComplexMatrix t = ComplexMatrix::Zero(space.dim(), space.dim());
    for (int n = 0; n <= space.n_max(); ++n) {
        t(space.index(to, n), space.index(from, n)) = 1.0;
    }
    return t;
}

ComplexMatrix number_electron(const ModelSpace& space)
{
    return transition(space, Electronic::g, Electronic::g) + transition(space, Electronic::e, Electronic::e);
}

ComplexMatrix identity(const ModelSpace& space)
{
    return ComplexMatrix::Identity(space.dim(), space.dim());
}

ComplexMatrix parity(const ModelSpace& space)
{
    ComplexMatrix p = ComplexMatrix::Zero(space.dim(), space.dim());
    for (Index k = 0; k < space.dim(); ++k) {
        const auto [x, n] = space.label(k);
        const int excitations = n + (x == Electronic::e ? 1 : 0);
        p(k, k) = excitations % 2 == 0 ? 1.0 : -1.0;
    }
    return p;
}

} // namespace gsel

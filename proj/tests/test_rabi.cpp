#include "catch_amalgamated.hpp"

#include <cmath>

#include "gsel/rabi.hpp"
#include "support.hpp"

using namespace gsel;
using Catch::Approx;

namespace {

DressedBasis basis_at(double eta, int n_max = 8)
{
    const ModelSpace space(n_max);
    return dressed_basis(hamiltonian(SystemParams::resonant_with(eta, 1e-6, 1e-3), space), space);
}

double overlap2(const ComplexVector& a, const ComplexVector& b)
{
    return std::norm(a.dot(b));
}

} // namespace

TEST_CASE("Hamiltonian matrix elements", "[rabi]")
{
    const ModelSpace space(6);
    SystemParams p;
    p.omega_e = 1.3;
    p.omega_s = 0.2;
    const ComplexMatrix H0 = hamiltonian(p, space);
    const auto at = [&](const ComplexMatrix& H, Electronic x, int n, Electronic y, int m) {
        return H(space.index(x, n), space.index(y, m));
    };
    CHECK(at(H0, Electronic::e, 1, Electronic::e, 1).real() == Approx(p.omega_e + p.omega_c));
    CHECK((H0 - ComplexMatrix(H0.diagonal().asDiagonal())).norm() == 0.0);
    for (int n = 0; n <= 6; ++n) CHECK(at(H0, Electronic::s, n, Electronic::s, n).real() == Approx(n - p.omega_s));

    p.rabi = 0.07;
    const ComplexMatrix H = hamiltonian(p, space);
    CHECK(numerics::hermiticity_defect(H) == 0.0);
    CHECK(at(H, Electronic::e, 0, Electronic::g, 1).real() == Approx(0.07));
    CHECK(at(H, Electronic::e, 1, Electronic::g, 0).real() == Approx(0.07));
    CHECK(std::abs(at(H, Electronic::e, 2, Electronic::g, 1) - 0.07 * std::sqrt(2.0)) < 1e-15);
}

TEST_CASE("uncoupled dressed basis", "[rabi]")
{
    const DressedBasis b = basis_at(0.0);
    CHECK(b.dim() == 27);
    CHECK(b.omega_G() == 0.0);
    CHECK(b.omega_minus() == Approx(1.0));
    CHECK(b.omega_plus() == Approx(1.0));
    for (int n = 0; n <= 8; ++n) {
        CHECK(b.is_empty_state(b.s_state(n)));
        CHECK(b.photons_of_empty_state(b.s_state(n)) == n);
    }

    // Degenerate pair resolved into the zero-coupling limit of the polaritons.
    const ModelSpace space(8);
    const JcStates jc = jc_reference(SystemParams::resonant_with(0.0, 1e-6, 1e-3), space);
    CHECK(overlap2(b.states.col(b.minus()), jc.minus) == Approx(1.0).margin(1e-12));
    CHECK(overlap2(b.states.col(b.plus()), jc.plus) == Approx(1.0).margin(1e-12));
    CHECK(overlap2(b.states.col(b.ground()), jc.ground) == Approx(1.0).margin(1e-12));
}

TEST_CASE("weak coupling spectrum", "[rabi]")
{
    // Second-order perturbation theory: E_G = -Omega^2 / (omega_e + omega_c).
    for (double eta : {0.01, 0.05, 0.1}) {
        const DressedBasis b = basis_at(eta);
        INFO("eta " << eta);
        CHECK(b.omega_G() < 0.0);
        CHECK(b.omega_G() == Approx(-eta * eta / 2.0).epsilon(eta * eta));
        CHECK(b.omega_minus() <= b.omega_plus());
    }
    // Polariton splitting approaches 2 Omega_R.
    for (double eta : {1e-3, 1e-2}) {
        const DressedBasis b = basis_at(eta);
        CHECK((b.omega_plus() - b.omega_minus()) / (2.0 * eta) == Approx(1.0).epsilon(eta));
    }
}

TEST_CASE("ground state photon content", "[rabi]")
{
    const ModelSpace space(8);
    CHECK(ground_photon_number(basis_at(0.0), space) == 0.0);
    CHECK(ground_photon_number(basis_at(0.05), space) == Approx(0.05 * 0.05 / 4.0).epsilon(0.1));
    double previous = -1.0;
    for (int k = 0; k <= 50; ++k) {
        const double eta = 0.01 * k;
        const double n = ground_photon_number(basis_at(eta, 12), ModelSpace(12));
        CHECK(n > previous);
        previous = n;
    }
}

TEST_CASE("JC reference states", "[rabi]")
{
    const ModelSpace space(8);
    const JcStates jc = jc_reference(SystemParams::resonant_with(0.01, 1e-6, 1e-3), space);
    CHECK(jc.plus.norm() == Approx(1.0));
    CHECK(jc.minus.norm() == Approx(1.0));
    CHECK(std::abs(jc.plus.dot(jc.minus)) < 1e-15);
    const DressedBasis b = basis_at(0.01);
    CHECK(overlap2(b.states.col(b.ground()), jc.ground) >= 0.999);
    CHECK(overlap2(b.states.col(b.plus()), jc.plus) >= 0.999);
    CHECK(overlap2(b.states.col(b.minus()), jc.minus) >= 0.999);

    SystemParams detuned = SystemParams::resonant_with(0.01, 1e-6, 1e-3);
    detuned.omega_e = 1.2;
    CHECK_THROWS_AS(jc_reference(detuned, space), ContractViolation);
}

TEST_CASE("dressed basis structural invariants", "[rabi]")
{
    const ModelSpace space(8);
    const ComplexMatrix N = number_electron(space);
    const ComplexMatrix P = parity(space);
    for (double eta : {0.0, 0.1, 0.3, 0.5}) {
        const ComplexMatrix H = hamiltonian(SystemParams::resonant_with(eta, 1e-6, 1e-3), space);
        const DressedBasis b = dressed_basis(H, space);
        INFO("eta " << eta);

        const ComplexMatrix& V = b.states;
        CHECK((V.adjoint() * V - ComplexMatrix::Identity(b.dim(), b.dim())).cwiseAbs().maxCoeff() < 1e-10);
        const ComplexMatrix Hd = b.to_dressed(H);
        CHECK((Hd - b.hamiltonian()).cwiseAbs().maxCoeff() < 1e-10);

        for (Index k = 0; k < b.dim(); ++k) {
            const ComplexVector v = V.col(k);
            const double occupancy = v.dot(N * v).real();
            CHECK(std::abs(occupancy - b.sector[static_cast<std::size_t>(k)]) < 1e-10);
            if (b.sector[static_cast<std::size_t>(k)] == 1) CHECK(std::abs(std::abs(v.dot(P * v)) - 1.0) < 1e-10);
        }
        for (Index i = 0; i < b.dim(); ++i) {
            for (Index j = 0; j < b.dim(); ++j) {
                if (b.sector[static_cast<std::size_t>(i)] != b.sector[static_cast<std::size_t>(j)]) {
                    CHECK(Hd(i, j) == Complex{});
                }
            }
        }
        for (Index k = b.one_electron_begin() + 1; k < b.dim(); ++k) CHECK(b.energies(k - 1) <= b.energies(k));
        CHECK(b.omega_G() <= 0.0);
        CHECK(b.energies(b.minus()) > b.energies(b.ground()));
    }
}

TEST_CASE("dressed_basis rejects sector mixing", "[rabi]")
{
    const ModelSpace space(2);
    ComplexMatrix H = hamiltonian(SystemParams::resonant_with(0.1, 1e-6, 1e-3), space);
    H(space.index(Electronic::s, 0), space.index(Electronic::g, 0)) = 0.01;
    H(space.index(Electronic::g, 0), space.index(Electronic::s, 0)) = 0.01;
    CHECK_THROWS_AS(dressed_basis(H, space), SectorMixingError);
    CHECK_THROWS_AS(dressed_basis(ComplexMatrix::Zero(3, 3), space), ContractViolation);
}

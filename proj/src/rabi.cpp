#include "gsel/rabi.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gsel {

namespace {

constexpr double kSectorTolerance = 1e-6;
constexpr double kCrossSectorTolerance = 1e-12;
constexpr double kDegeneracyTolerance = 1e-9;

// Rotate v so its largest component is real and positive.
void fix_phase(Eigen::Ref<ComplexVector> v)
{
    Index arg = 0;
    const double peak = v.cwiseAbs().maxCoeff();
    for (Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) >= peak * (1.0 - 1e-12)) {
            arg = i;
            break;
        }
    }
    if (peak > 0.0) v *= std::conj(v(arg)) / std::abs(v(arg));
}

} // namespace

ComplexMatrix hamiltonian(const SystemParams& params, const ModelSpace& space)
{
    params.validate();
    const ComplexMatrix a = annihilation(space);
    const ComplexMatrix ee = transition(space, Electronic::e, Electronic::e);
    const ComplexMatrix ss = transition(space, Electronic::s, Electronic::s);
    ComplexMatrix H = params.omega_c * (a.adjoint() * a) + params.omega_e * ee - params.omega_s * ss +
                      params.rabi * coupling_operator(space);
    return H;
}

ComplexMatrix coupling_operator(const ModelSpace& space)
{
    const ComplexMatrix a = annihilation(space);
    const ComplexMatrix sx =
        transition(space, Electronic::g, Electronic::e) + transition(space, Electronic::e, Electronic::g);
    return (a + a.adjoint()) * sx;
}

Index DressedBasis::s_state(int photons) const
{
    if (photons < 0 || photons > n_max) throw ContractViolation("s_state: photon number out of range");
    return photons;
}

int DressedBasis::photons_of_empty_state(Index k) const
{
    if (!is_empty_state(k)) throw ContractViolation("photons_of_empty_state: not an empty-dot state");
    return static_cast<int>(k);
}

ComplexMatrix DressedBasis::to_dressed(const ComplexMatrix& bare_operator) const
{
    return states.adjoint() * bare_operator * states;
}

ComplexMatrix DressedBasis::hamiltonian() const
{
    return energies.cast<Complex>().asDiagonal();
}

DressedBasis dressed_basis(const ComplexMatrix& H, const ModelSpace& space)
{
    if (H.rows() != space.dim() || H.cols() != space.dim()) {
        throw ContractViolation("dressed_basis: Hamiltonian does not match model space");
    }
    const int fock = space.fock_dim();
    std::vector<Index> empty;
    std::vector<Index> occupied;
    for (int n = 0; n < fock; ++n) empty.push_back(space.index(Electronic::s, n));
    for (Electronic x : {Electronic::g, Electronic::e}) {
        for (int n = 0; n < fock; ++n) occupied.push_back(space.index(x, n));
    }

    const double scale = std::max(H.cwiseAbs().maxCoeff(), 1e-14);
    for (Index r : empty) {
        for (Index c : occupied) {
            if (std::abs(H(r, c)) > kCrossSectorTolerance * scale ||
                std::abs(H(c, r)) > kCrossSectorTolerance * scale) {
                throw SectorMixingError("dressed_basis: Hamiltonian couples the zero- and one-electron sectors");
            }
        }
    }

    DressedBasis basis;
    basis.n_max = space.n_max();
    const Index dim = space.dim();
    basis.energies = RealVector::Zero(dim);
    basis.states = ComplexMatrix::Zero(dim, dim);
    basis.sector.assign(static_cast<std::size_t>(dim), 0);

    // Empty sector: H is diagonal, eigenstates are the bare |s,n>.
    for (int n = 0; n < fock; ++n) {
        const Index bare = empty[static_cast<std::size_t>(n)];
        basis.energies(n) = H(bare, bare).real();
        basis.states(bare, n) = 1.0;
    }

    const auto m = static_cast<Index>(occupied.size());
    ComplexMatrix block(m, m);
    for (Index r = 0; r < m; ++r) {
        for (Index c = 0; c < m; ++c) block(r, c) = H(occupied[r], occupied[c]);
    }
    auto eig = numerics::eig_hermitian(block);

    // Resolve exact degeneracies with the coupling operator.
    const ComplexMatrix C_full = coupling_operator(space);
    ComplexMatrix C(m, m);
    for (Index r = 0; r < m; ++r) {
        for (Index c = 0; c < m; ++c) C(r, c) = C_full(occupied[r], occupied[c]);
    }
    for (Index start = 0; start < m;) {
        Index end = start + 1;
        while (end < m && std::abs(eig.values(end) - eig.values(start)) <=
                              kDegeneracyTolerance * std::max(1.0, std::abs(eig.values(start)))) {
            ++end;
        }
        if (end - start > 1) {
            const Index size = end - start;
            const ComplexMatrix W = eig.vectors.middleCols(start, size);
            const ComplexMatrix projected = W.adjoint() * C * W;
            const auto inner = numerics::eig_hermitian(0.5 * (projected + projected.adjoint()));
            eig.vectors.middleCols(start, size) = W * inner.vectors;
            const double mean = eig.values.segment(start, size).mean();
            eig.values.segment(start, size).setConstant(mean);
        }
        start = end;
    }

    for (Index k = 0; k < m; ++k) {
        const Index col = fock + k;
        basis.energies(col) = eig.values(k);
        for (Index r = 0; r < m; ++r) basis.states(occupied[r], col) = eig.vectors(r, k);
        basis.sector[static_cast<std::size_t>(col)] = 1;
    }
    for (Index k = 0; k < dim; ++k) fix_phase(basis.states.col(k));

    const ComplexMatrix N = number_electron(space);
    for (Index k = 0; k < dim; ++k) {
        const double occupancy = (basis.states.col(k).adjoint() * N * basis.states.col(k))(0, 0).real();
        if (std::abs(occupancy - basis.sector[static_cast<std::size_t>(k)]) > kSectorTolerance) {
            std::ostringstream os;
            os << "dressed_basis: eigenstate " << k << " has electron number " << occupancy;
            throw SectorMixingError(os.str());
        }
    }
    return basis;
}

double ground_photon_number(const DressedBasis& basis, const ModelSpace& space)
{
    const ComplexMatrix a = annihilation(space);
    const ComplexVector g = basis.states.col(basis.ground());
    const ComplexVector ag = a * g;
    return ag.squaredNorm();
}

JcStates jc_reference(const SystemParams& params, const ModelSpace& space)
{
    if (!params.resonant()) throw ContractViolation("jc_reference: requires omega_e == omega_c");
    const double r = 1.0 / std::sqrt(2.0);
    const ComplexVector g1 = space.basis_vector(Electronic::g, 1);
    const ComplexVector e0 = space.basis_vector(Electronic::e, 0);
    return {space.basis_vector(Electronic::g, 0), r * (g1 + e0), r * (g1 - e0)};
}

} // namespace gsel

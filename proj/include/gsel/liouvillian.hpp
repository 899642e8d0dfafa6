// liouvillian.hpp: Lindblad generator, stationary state and time evolution

#pragma once

#include <span>

#include "gsel/dissipators.hpp"

namespace gsel {

struct DensityOperator {
    ComplexMatrix matrix;

    Index dim() const { return matrix.rows(); }
    double trace_error() const;
    double hermiticity_defect() const;
    double min_eigenvalue() const;
    Complex expectation(const ComplexMatrix& op) const { return (op * matrix).trace(); }
};

/// Generator acting on column-stacked operators: vec(rho)[r + c * dim] = rho(r, c).
struct Superoperator {
    ComplexMatrix matrix;
    Index dim{0}; // dimension of the underlying Hilbert space

    // max_k |sum_r L(r*dim + r, k)|: zero for a trace-preserving generator.
    double trace_defect() const;
};

ComplexVector vectorize(const ComplexMatrix& rho);
ComplexMatrix unvectorize(const ComplexVector& v, Index dim);

// Adds rate * (A rho A^dag - 1/2 {A^dag A, rho}) for an arbitrary operator A.
void add_dissipator(Superoperator& L, const ComplexMatrix& A, double rate);

// -i[H, .] + sum over channels of the dissipator of |to><from|.
// H and the channel operators must be expressed in the same basis.
Superoperator build_liouvillian(const ComplexMatrix& H, std::span<const JumpChannel> channels);

// Superoperator-vector product. Throws ContractViolation on dimension mismatch.
ComplexMatrix apply(const Superoperator& L, const ComplexMatrix& rho);

// Direct commutator + dissipator evaluation, independent of the superoperator matrix.
ComplexMatrix apply_direct(const ComplexMatrix& H, std::span<const JumpChannel> channels,
                           const ComplexMatrix& rho);

// Unique stationary state: kernel of L, Hermitian-symmetrized and trace-normalized.
// Throws KernelAmbiguityError when the kernel is not one-dimensional.
DensityOperator steady_state(const Superoperator& L);

// exp(L t) rho
DensityOperator evolve(const Superoperator& L, const DensityOperator& rho, double t);

ComplexVector spectrum_of(const Superoperator& L);

} // namespace gsel

#include "gsel/liouvillian.hpp"

#include <cmath>
#include <vector>

namespace gsel {

namespace {

struct Entry {
    Index row;
    Index col;
    Complex value;
};

std::vector<Entry> nonzeros(const ComplexMatrix& A)
{
    std::vector<Entry> out;
    for (Index c = 0; c < A.cols(); ++c) {
        for (Index r = 0; r < A.rows(); ++r) {
            if (A(r, c) != Complex{}) out.push_back({r, c, A(r, c)});
        }
    }
    return out;
}

void require_dim(const Superoperator& L, const ComplexMatrix& rho)
{
    if (rho.rows() != L.dim || rho.cols() != L.dim) {
        throw ContractViolation("operator dimension does not match superoperator");
    }
}

} // namespace

double DensityOperator::trace_error() const
{
    return std::abs(matrix.trace() - Complex{1.0});
}

double DensityOperator::hermiticity_defect() const
{
    return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
}

double DensityOperator::min_eigenvalue() const
{
    const ComplexMatrix sym = 0.5 * (matrix + matrix.adjoint());
    return numerics::eig_hermitian(sym).values(0);
}

double Superoperator::trace_defect() const
{
    double worst = 0.0;
    for (Index k = 0; k < matrix.cols(); ++k) {
        Complex sum{};
        for (Index r = 0; r < dim; ++r) sum += matrix(r + r * dim, k);
        worst = std::max(worst, std::abs(sum));
    }
    return worst;
}

ComplexVector vectorize(const ComplexMatrix& rho)
{
    return rho.reshaped();
}

ComplexMatrix unvectorize(const ComplexVector& v, Index dim)
{
    if (v.size() != dim * dim) throw ContractViolation("unvectorize: length is not dim^2");
    return v.reshaped(dim, dim);
}

void add_dissipator(Superoperator& L, const ComplexMatrix& A, double rate)
{
    const Index d = L.dim;
    if (A.rows() != d || A.cols() != d) throw ContractViolation("add_dissipator: operator dimension mismatch");
    if (rate == 0.0) return;
    const auto vi = [d](Index r, Index c) { return r + c * d; };

    const auto nz = nonzeros(A);
    for (const auto& x : nz) {
        for (const auto& y : nz) {
            // (A rho A^dag)_{x.row, y.row} picks up A(x) rho(x.col, y.col) conj(A(y))
            L.matrix(vi(x.row, y.row), vi(x.col, y.col)) += rate * x.value * std::conj(y.value);
        }
    }
    const ComplexMatrix K = A.adjoint() * A;
    for (const auto& k : nonzeros(K)) {
        for (Index r = 0; r < d; ++r) {
            L.matrix(vi(k.row, r), vi(k.col, r)) -= 0.5 * rate * k.value; // K rho
            L.matrix(vi(r, k.col), vi(r, k.row)) -= 0.5 * rate * k.value; // rho K
        }
    }
}

Superoperator build_liouvillian(const ComplexMatrix& H, std::span<const JumpChannel> channels)
{
    if (H.rows() != H.cols()) throw ContractViolation("build_liouvillian: Hamiltonian must be square");
    const Index d = H.rows();
    Superoperator L{ComplexMatrix::Zero(d * d, d * d), d};
    const auto vi = [d](Index r, Index c) { return r + c * d; };
    const Complex i1{0.0, 1.0};

    for (const auto& h : nonzeros(H)) {
        for (Index r = 0; r < d; ++r) {
            L.matrix(vi(h.row, r), vi(h.col, r)) += -i1 * h.value; // -i H rho
            L.matrix(vi(r, h.col), vi(r, h.row)) += i1 * h.value;  // +i rho H
        }
    }
    for (const auto& ch : channels) {
        if (ch.from < 0 || ch.from >= d || ch.to < 0 || ch.to >= d) {
            throw ContractViolation("build_liouvillian: channel index outside Hilbert space");
        }
        add_dissipator(L, ch.op(d), ch.rate);
    }
    return L;
}

ComplexMatrix apply(const Superoperator& L, const ComplexMatrix& rho)
{
    require_dim(L, rho);
    return unvectorize(L.matrix * vectorize(rho), L.dim);
}

ComplexMatrix apply_direct(const ComplexMatrix& H, std::span<const JumpChannel> channels,
                           const ComplexMatrix& rho)
{
    if (H.rows() != rho.rows() || H.cols() != rho.cols()) {
        throw ContractViolation("apply_direct: dimension mismatch");
    }
    const Complex i1{0.0, 1.0};
    ComplexMatrix out = -i1 * (H * rho - rho * H);
    for (const auto& ch : channels) {
        // A = |to><from|: A rho A^dag = rho(from, from) |to><to|, A^dag A = |from><from|
        out(ch.to, ch.to) += ch.rate * rho(ch.from, ch.from);
        out.row(ch.from) -= 0.5 * ch.rate * rho.row(ch.from);
        out.col(ch.from) -= 0.5 * ch.rate * rho.col(ch.from);
    }
    return out;
}

DensityOperator steady_state(const Superoperator& L)
{
    const ComplexVector kernel = numerics::null_vector(L.matrix);
    ComplexMatrix rho = unvectorize(kernel, L.dim);
    rho = 0.5 * (rho + rho.adjoint());
    const Complex tr = rho.trace();
    if (std::abs(tr) == 0.0) throw NumericalError("steady_state: stationary mode has zero trace");
    rho /= tr;
    rho = 0.5 * (rho + rho.adjoint());
    return {rho};
}

DensityOperator evolve(const Superoperator& L, const DensityOperator& rho, double t)
{
    require_dim(L, rho.matrix);
    return {unvectorize(numerics::expm_multiply(L.matrix, vectorize(rho.matrix), t), L.dim)};
}

ComplexVector spectrum_of(const Superoperator& L)
{
    return numerics::eigenvalues(L.matrix);
}

} // namespace gsel

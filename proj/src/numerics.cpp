// numerics.cpp: block-aware dense kernels, spectra and solves

#include "gsel/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

namespace gsel::numerics {

namespace {

constexpr double kHermitianTolerance = 1e-12;
constexpr double kAbsoluteFloor = 1e-14;
constexpr double kKernelRelativeTolerance = 1e-10;
constexpr double kUniquenessRatio = 1e3;
constexpr double kMinReciprocalCondition = 1e-15;

void require_square(const ComplexMatrix& M, const char* what)
{
    if (M.rows() != M.cols()) {
        std::ostringstream os;
        os << what << ": matrix must be square, got " << M.rows() << "x" << M.cols();
        throw ContractViolation(os.str());
    }
}

double max_abs(const ComplexMatrix& M)
{
    return M.size() == 0 ? 0.0 : M.cwiseAbs().maxCoeff();
}

ComplexMatrix extract(const ComplexMatrix& A, const std::vector<Index>& idx)
{
    const auto n = static_cast<Index>(idx.size());
    ComplexMatrix sub(n, n);
    for (Index r = 0; r < n; ++r) {
        for (Index c = 0; c < n; ++c) {
            sub(r, c) = A(idx[r], idx[c]);
        }
    }
    return sub;
}

struct DisjointSet {
    explicit DisjointSet(Index n) : parent(static_cast<std::size_t>(n))
    {
        std::iota(parent.begin(), parent.end(), Index{0});
    }
    Index find(Index i)
    {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    }
    void unite(Index a, Index b)
    {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<Index> parent;
};

} // namespace

HermitianEigen eig_hermitian(const ComplexMatrix& M)
{
    require_square(M, "eig_hermitian");
    const double scale = std::max(max_abs(M), kAbsoluteFloor);
    const double defect = max_abs(M - M.adjoint());
    if (defect > kHermitianTolerance * scale) {
        std::ostringstream os;
        os << "eig_hermitian: matrix is not Hermitian (max|M - M^dagger| = " << defect << ")";
        throw ContractViolation(os.str());
    }
    const ComplexMatrix sym = 0.5 * (M + M.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eig_hermitian: eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexVector solve_linear(const ComplexMatrix& A, const ComplexVector& b)
{
    require_square(A, "solve_linear");
    if (A.rows() != b.size()) {
        throw ContractViolation("solve_linear: right-hand side length does not match matrix");
    }
    if (A.size() == 0) return ComplexVector(0);
    Eigen::PartialPivLU<ComplexMatrix> lu(A);
    const double rcond = lu.rcond();
    if (!(rcond > kMinReciprocalCondition)) {
        const double cond = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
        std::ostringstream os;
        os << "solve_linear: matrix is singular (condition estimate " << cond << ")";
        throw SingularMatrixError(os.str(), cond);
    }
    return lu.solve(b);
}

std::vector<std::vector<Index>> irreducible_blocks(const ComplexMatrix& A, double drop_tolerance)
{
    require_square(A, "irreducible_blocks");
    const Index n = A.rows();
    const double cutoff = drop_tolerance * max_abs(A);
    DisjointSet sets(n);
    for (Index c = 0; c < n; ++c) {
        for (Index r = 0; r < n; ++r) {
            if (r != c && std::abs(A(r, c)) > cutoff) sets.unite(r, c);
        }
    }
    std::vector<std::vector<Index>> blocks;
    std::vector<Index> slot(static_cast<std::size_t>(n), -1);
    for (Index i = 0; i < n; ++i) {
        const Index root = sets.find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<Index>(blocks.size());
            blocks.emplace_back();
        }
        blocks[slot[root]].push_back(i);
    }
    return blocks;
}

namespace {

// Kernel direction from the bordered system [[B, left], [right^H, 0]], which
// is nonsingular when the kernel is one-dimensional. LU elimination keeps
// structurally unreachable components at exact zero, where the SVD leaves
// rounding noise of order eps * |B|. Falls back to the SVD direction if the
// bordered solution is not at least as good a kernel vector.
ComplexVector refine_kernel(const ComplexMatrix& B, const ComplexVector& right, const ComplexVector& left,
                            double zero_cut)
{
    const Index n = B.rows();
    ComplexMatrix M = ComplexMatrix::Zero(n + 1, n + 1);
    M.topLeftCorner(n, n) = B;
    M.topRightCorner(n, 1) = left;
    M.bottomLeftCorner(1, n) = right.adjoint();
    ComplexVector rhs = ComplexVector::Zero(n + 1);
    rhs(n) = 1.0;
    const Eigen::PartialPivLU<ComplexMatrix> lu(M);
    ComplexVector y = lu.solve(rhs);
    y += lu.solve(rhs - M * y);

    ComplexVector x = y.head(n);
    const double norm = x.norm();
    if (!x.allFinite() || norm == 0.0) return right;
    x /= norm;
    const double residual = (B * x).norm();
    return residual <= std::max((B * right).norm(), zero_cut) ? x : right;
}

} // namespace

ComplexVector null_vector(const ComplexMatrix& A)
{
    require_square(A, "null_vector");
    const Index n = A.rows();
    if (n == 0) throw ContractViolation("null_vector: empty matrix");

    const double floor = kAbsoluteFloor * max_abs(A);

    // Per block: the minimal singular direction, plus the count of singular
    // values that are zero relative to that block's own scale.
    std::size_t kernel_dim = 0;
    std::vector<double> sigmas;
    double best_sigma = std::numeric_limits<double>::infinity();
    std::vector<Index> best_indices;
    ComplexVector best_vector;
    ComplexVector best_left;
    double best_cut = 0.0;

    for (const auto& idx : irreducible_blocks(A)) {
        RealVector s;
        ComplexVector v;
        ComplexVector u;
        if (idx.size() == 1) {
            s = RealVector::Constant(1, std::abs(A(idx[0], idx[0])));
            v = ComplexVector::Ones(1);
            u = v;
        } else {
            Eigen::BDCSVD<ComplexMatrix> svd(extract(A, idx), Eigen::ComputeFullU | Eigen::ComputeFullV);
            s = svd.singularValues();
            v = svd.matrixV().col(s.size() - 1);
            u = svd.matrixU().col(s.size() - 1);
        }
        const double relative = idx.size() > 1 ? kKernelRelativeTolerance * s(0) : 0.0;
        const double zero_cut = std::max(floor, relative);
        for (Index k = 0; k < s.size(); ++k) {
            sigmas.push_back(s(k));
            if (s(k) <= zero_cut) ++kernel_dim;
        }
        const double smin = s(s.size() - 1);
        if (smin < best_sigma) {
            best_sigma = smin;
            best_indices = idx;
            best_vector = v;
            best_left = u;
            best_cut = zero_cut;
        }
    }

    std::sort(sigmas.begin(), sigmas.end());
    const double smallest = sigmas.front();
    const double second = sigmas.size() > 1 ? sigmas[1] : std::numeric_limits<double>::infinity();
    if (kernel_dim != 1 || !(second > kUniquenessRatio * smallest)) {
        const std::size_t reported = kernel_dim == 1 ? 2 : kernel_dim;
        std::ostringstream os;
        os << "null_vector: kernel is not one-dimensional (" << reported
           << " near-zero directions; smallest singular values " << smallest << ", " << second << ")";
        throw KernelAmbiguityError(os.str(), reported);
    }

    if (best_indices.size() > 1) {
        best_vector = refine_kernel(extract(A, best_indices), best_vector, best_left, best_cut);
    }
    ComplexVector x = ComplexVector::Zero(n);
    for (std::size_t k = 0; k < best_indices.size(); ++k) x(best_indices[k]) = best_vector(static_cast<Index>(k));
    return x / x.norm();
}

ComplexVector eigenvalues(const ComplexMatrix& A)
{
    require_square(A, "eigenvalues");
    ComplexVector out(A.rows());
    Index k = 0;
    for (const auto& idx : irreducible_blocks(A)) {
        if (idx.size() == 1) {
            out(k++) = A(idx[0], idx[0]);
            continue;
        }
        Eigen::ComplexEigenSolver<ComplexMatrix> solver(extract(A, idx), false);
        if (solver.info() != Eigen::Success) {
            throw NumericalError("eigenvalues: eigensolver did not converge");
        }
        for (Index j = 0; j < solver.eigenvalues().size(); ++j) out(k++) = solver.eigenvalues()(j);
    }
    return out;
}

ComplexVector expm_multiply(const ComplexMatrix& A, const ComplexVector& v, double t)
{
    require_square(A, "expm_multiply");
    if (A.rows() != v.size()) throw ContractViolation("expm_multiply: vector length does not match matrix");
    ComplexVector out = ComplexVector::Zero(v.size());
    for (const auto& idx : irreducible_blocks(A)) {
        const auto m = static_cast<Index>(idx.size());
        ComplexVector sub_v(m);
        bool touched = false;
        for (Index k = 0; k < m; ++k) {
            sub_v(k) = v(idx[k]);
            touched = touched || sub_v(k) != Complex{};
        }
        if (!touched) continue;
        if (m == 1) {
            out(idx[0]) = std::exp(t * A(idx[0], idx[0])) * sub_v(0);
            continue;
        }
        const ComplexMatrix propagator = (t * extract(A, idx)).exp();
        const ComplexVector res = propagator * sub_v;
        for (Index k = 0; k < m; ++k) out(idx[k]) = res(k);
    }
    return out;
}

double hermiticity_defect(const ComplexMatrix& M)
{
    require_square(M, "hermiticity_defect");
    return (M - M.adjoint()).norm() / std::max(M.norm(), kAbsoluteFloor);
}

ShiftedSolver::ShiftedSolver(const ComplexMatrix& A) : dim_(A.rows())
{
    require_square(A, "ShiftedSolver");
    block_of_.assign(static_cast<std::size_t>(dim_), 0);
    for (auto& idx : irreducible_blocks(A)) {
        for (Index i : idx) block_of_[i] = blocks_.size();
        ComplexMatrix sub = extract(A, idx);
        blocks_.push_back({std::move(idx), std::move(sub)});
    }
}

ComplexVector ShiftedSolver::solve(Complex shift, const ComplexVector& b) const
{
    if (b.size() != dim_) throw ContractViolation("ShiftedSolver::solve: right-hand side length mismatch");
    std::vector<char> touched(blocks_.size(), 0);
    for (Index i = 0; i < dim_; ++i) {
        if (b(i) != Complex{}) touched[block_of_[i]] = 1;
    }

    ComplexVector x = ComplexVector::Zero(dim_);
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        if (!touched[k]) continue;
        const Block& blk = blocks_[k];
        const auto m = static_cast<Index>(blk.indices.size());
        if (m == 1) {
            const Complex a = blk.matrix(0, 0);
            const Complex d = a - shift;
            const double scale = std::max({std::abs(a), std::abs(shift), kAbsoluteFloor});
            if (std::abs(d) <= kAbsoluteFloor * scale) {
                throw SingularMatrixError("ShiftedSolver: shifted matrix is singular",
                                          std::abs(d) > 0.0 ? scale / std::abs(d)
                                                            : std::numeric_limits<double>::infinity());
            }
            x(blk.indices[0]) = b(blk.indices[0]) / d;
            continue;
        }
        ComplexMatrix shifted = blk.matrix;
        shifted.diagonal().array() -= shift;
        ComplexVector rhs(m);
        for (Index j = 0; j < m; ++j) rhs(j) = b(blk.indices[j]);
        const ComplexVector sol = solve_linear(shifted, rhs);
        for (Index j = 0; j < m; ++j) x(blk.indices[j]) = sol(j);
    }
    return x;
}

} // namespace gsel::numerics

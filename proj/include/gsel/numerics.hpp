// numerics.hpp: dense complex linear algebra used by every other module

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gsel {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Input does not satisfy an operation's precondition (shape, symmetry, range).
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Base for failures of the numerics themselves; the CLI maps these to exit code 2.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularMatrixError : public NumericalError {
public:
    SingularMatrixError(const std::string& what, double condition_estimate)
        : NumericalError(what), condition_(condition_estimate) {}
    double condition_estimate() const noexcept { return condition_; }

private:
    double condition_;
};

class KernelAmbiguityError : public NumericalError {
public:
    KernelAmbiguityError(const std::string& what, std::size_t kernel_dimension)
        : NumericalError(what), kernel_dimension_(kernel_dimension) {}
    std::size_t kernel_dimension() const noexcept { return kernel_dimension_; }

private:
    std::size_t kernel_dimension_;
};

namespace numerics {

struct HermitianEigen {
    RealVector values;     // ascending
    ComplexMatrix vectors; // orthonormal columns, vectors.col(k) <-> values(k)
};

// Diagonalize a Hermitian matrix. Throws ContractViolation if M is not square
// or not Hermitian within 1e-12 * max|entry|.
HermitianEigen eig_hermitian(const ComplexMatrix& M);

// Dense LU solve with a reciprocal-condition check. Throws SingularMatrixError.
ComplexVector solve_linear(const ComplexMatrix& A, const ComplexVector& b);

// Unit-norm vector spanning the one-dimensional kernel of A.
// Throws KernelAmbiguityError when the numerical kernel is not one-dimensional.
ComplexVector null_vector(const ComplexMatrix& A);

// All eigenvalues of a general square matrix (no particular order).
ComplexVector eigenvalues(const ComplexMatrix& A);

// exp(t A) v
ComplexVector expm_multiply(const ComplexMatrix& A, const ComplexVector& v, double t);

// Frobenius norm of (M - M^dagger), normalized by max(|M|_F, 1e-14).
double hermiticity_defect(const ComplexMatrix& M);

/// Partition of the index set of a square matrix into irreducible diagonal
/// blocks: indices i and j share a block iff they are connected through
/// nonzero entries A(i,j) or A(j,i). After the symmetric permutation that
/// groups each block, the matrix is exactly block diagonal, so kernels,
/// spectra, solves and exponentials decompose block by block.
///
/// Entries with |A(i,j)| <= drop_tolerance * max|A| count as structural zeros.
/// The default of 0 keeps every nonzero.
std::vector<std::vector<Index>> irreducible_blocks(const ComplexMatrix& A,
                                                   double drop_tolerance = 0.0);

// Repeated solves of (A - z I) x = b for many complex shifts z.
// Blocks are computed once; each solve only touches the blocks on which b is
// supported. Dense LU per block.
class ShiftedSolver {
public:
    explicit ShiftedSolver(const ComplexMatrix& A);

    // Throws SingularMatrixError if (A - z I) is singular on a touched block.
    ComplexVector solve(Complex shift, const ComplexVector& b) const;

    Index dim() const noexcept { return dim_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }

private:
    struct Block {
        std::vector<Index> indices;
        ComplexMatrix matrix;
    };
    Index dim_{0};
    std::vector<Block> blocks_;
    std::vector<std::size_t> block_of_; // index -> block number
};

} // namespace numerics
} // namespace gsel

// Shared helpers for the unit tests.

#pragma once

#include <random>

#include "gsel/numerics.hpp"

namespace gsel::test {

inline std::mt19937_64& rng()
{
    static std::mt19937_64 engine(20240611);
    return engine;
}

inline double uniform(double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline ComplexMatrix random_matrix(Index rows, Index cols)
{
    std::normal_distribution<double> n(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (Index c = 0; c < cols; ++c) {
        for (Index r = 0; r < rows; ++r) m(r, c) = Complex{n(rng()), n(rng())};
    }
    return m;
}

inline ComplexMatrix random_hermitian(Index dim)
{
    const ComplexMatrix m = random_matrix(dim, dim);
    return 0.5 * (m + m.adjoint());
}

// Positive, unit-trace, full rank.
inline ComplexMatrix random_density(Index dim)
{
    const ComplexMatrix m = random_matrix(dim, dim);
    ComplexMatrix rho = m * m.adjoint();
    return rho / rho.trace();
}

inline double max_abs(const ComplexMatrix& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

} // namespace gsel::test

#include "gsel/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace gsel {

std::vector<double> FrequencyGrid::values() const
{
    if (points < 2) throw ContractViolation("grid.points must be >= 2");
    if (!(std::isfinite(min) && std::isfinite(max) && min < max)) {
        throw ContractViolation("grid requires finite min < max");
    }
    std::vector<double> out(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k) out[static_cast<std::size_t>(k)] = min + k * spacing();
    out.back() = max;
    return out;
}

namespace {

// Lines lighter than this fraction of the heaviest one are dropped.
constexpr double kNegligibleWeight = 1e-14;

struct Source {
    ComplexVector v;          // vec(X^- rho) with the stationary component removed
    ComplexVector functional; // vec((X^+)^T), so Tr[X^+ M] = functional . vec(M)
};

Source regression_source(const Superoperator& L, const DensityOperator& rho_ss, const ComplexMatrix& x_minus,
                         const ComplexMatrix& x_plus)
{
    const Index d = L.dim;
    if (rho_ss.dim() != d || x_minus.rows() != d || x_plus.rows() != d) {
        throw ContractViolation("emission_spectrum: operator dimensions do not match the generator");
    }
    const ComplexMatrix source = x_minus * rho_ss.matrix;
    Source out{vectorize(source), vectorize(x_plus.transpose())};
    out.v -= source.trace() * vectorize(rho_ss.matrix);
    return out;
}

std::vector<SpectralLine> decompose(const ComplexMatrix& L, const Source& src, std::size_t& undamped)
{
    std::vector<SpectralLine> lines;
    for (const auto& idx : numerics::irreducible_blocks(L)) {
        const auto n = static_cast<Index>(idx.size());
        ComplexVector v(n);
        ComplexVector f(n);
        ComplexMatrix sub(n, n);
        for (Index a = 0; a < n; ++a) {
            v(a) = src.v(idx[a]);
            f(a) = src.functional(idx[a]);
            for (Index b = 0; b < n; ++b) sub(a, b) = L(idx[a], idx[b]);
        }
        if (v.isZero(0.0) || f.isZero(0.0)) continue;
        if (n == 1) {
            lines.push_back({sub(0, 0).imag(), -sub(0, 0).real(), f(0) * v(0)});
            continue;
        }
        const Eigen::ComplexEigenSolver<ComplexMatrix> es(sub);
        const ComplexMatrix& V = es.eigenvectors();
        const ComplexVector left = V.transpose() * f;
        const ComplexVector right = V.partialPivLu().solve(v);
        for (Index k = 0; k < n; ++k) {
            const Complex lambda = es.eigenvalues()(k);
            lines.push_back({lambda.imag(), -lambda.real(), left(k) * right(k)});
        }
    }

    double heaviest = 0.0;
    for (const auto& l : lines) heaviest = std::max(heaviest, std::abs(l.weight));
    std::vector<SpectralLine> kept;
    for (const auto& l : lines) {
        if (std::abs(l.weight) <= kNegligibleWeight * heaviest) continue;
        if (l.halfwidth > 0.0) {
            kept.push_back(l);
        } else {
            ++undamped;
        }
    }
    std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.center < b.center; });
    return kept;
}

} // namespace

double SpectralLine::value(double omega, double gamma_cav) const
{
    const double detuning = omega - center;
    const double denom = halfwidth * halfwidth + detuning * detuning;
    return gamma_cav / std::numbers::pi * (weight.real() * halfwidth + weight.imag() * detuning) / denom;
}

double SpectralLine::integral(double lo, double hi, double gamma_cav) const
{
    const double a = lo - center;
    const double b = hi - center;
    const double w2 = halfwidth * halfwidth;
    const double real_part = weight.real() * (std::atan(b / halfwidth) - std::atan(a / halfwidth));
    const double imag_part = 0.5 * weight.imag() * std::log((w2 + b * b) / (w2 + a * a));
    return gamma_cav / std::numbers::pi * (real_part + imag_part);
}

double Spectrum::total() const
{
    return integrate_window(*this, omegas.front(), omegas.back());
}

Spectrum emission_spectrum(const Superoperator& L, const DensityOperator& rho_ss, const ComplexMatrix& x_minus,
                           const ComplexMatrix& x_plus, std::span<const double> grid, double gamma_cav)
{
    for (std::size_t k = 1; k < grid.size(); ++k) {
        if (!(grid[k] > grid[k - 1])) throw ContractViolation("emission_spectrum: grid must be strictly ascending");
    }

    const Source src = regression_source(L, rho_ss, x_minus, x_plus);

    const numerics::ShiftedSolver solver(L.matrix);
    Spectrum spec;
    spec.gamma_cav = gamma_cav;
    spec.omegas.assign(grid.begin(), grid.end());
    spec.values.resize(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        try {
            const ComplexVector x = solver.solve(Complex{0.0, grid[k]}, src.v);
            const Complex corr = -src.functional.cwiseProduct(x).sum();
            spec.values[k] = gamma_cav / std::numbers::pi * corr.real();
        } catch (const SingularMatrixError&) {
            spec.values[k] = std::numeric_limits<double>::quiet_NaN();
            spec.failed_points.push_back(k);
        }
    }
    spec.lines = decompose(L.matrix, src, spec.undamped_lines);
    return spec;
}

double integrate_window(const Spectrum& spec, double lo, double hi)
{
    const auto& x = spec.omegas;
    const auto& y = spec.values;
    if (x.size() < 2) throw ContractViolation("integrate_window: spectrum has fewer than two points");
    const double slack = 1e-12 * std::max(1.0, std::abs(x.back()));
    if (lo < x.front() - slack || hi > x.back() + slack || !(lo <= hi)) {
        throw ContractViolation("integration window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                "] exceeds the frequency grid");
    }
    lo = std::max(lo, x.front());
    hi = std::min(hi, x.back());

    const auto interpolate = [&](std::size_t k, double at) {
        const double t = (at - x[k]) / (x[k + 1] - x[k]);
        return y[k] + t * (y[k + 1] - y[k]);
    };
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < x.size(); ++k) {
        const double a = std::max(lo, x[k]);
        const double b = std::min(hi, x[k + 1]);
        if (b <= a) continue;
        total += 0.5 * (b - a) * (interpolate(k, a) + interpolate(k, b));
    }
    return total;
}

double integrate_peak(const Spectrum& spec, double center, double halfwidth)
{
    if (!(halfwidth >= 0.0)) throw ContractViolation("integrate_peak: halfwidth must be non-negative");
    return integrate_window(spec, center - halfwidth, center + halfwidth);
}

double integrate_peak_resolved(const Spectrum& spec, double lo, double hi)
{
    if (spec.undamped_lines > 0) {
        throw NumericalError("integrate_peak_resolved: spectrum has undamped components");
    }
    if (lo > hi) throw ContractViolation("integrate_peak_resolved: need lo <= hi");
    double total = 0.0;
    for (const auto& line : spec.lines) {
        if (line.center >= lo && line.center < hi) total += spec.gamma_cav * line.area();
    }
    return total;
}

const PeakWindow& PeakWindows::by_name(const std::string& name) const
{
    for (const auto& w : windows) {
        if (w.name == name) return w;
    }
    throw std::out_of_range("no peak window named '" + name + "'");
}

PeakWindows default_windows(const DressedBasis& basis, double grid_spacing)
{
    PeakWindows out;
    out.windows = {
        {"minus", basis.omega_minus(), 0.0, 0.0},
        {"central", basis.energies(basis.s_state(1)) - basis.energies(basis.s_state(0)), 0.0, 0.0},
        {"plus", basis.omega_plus(), 0.0, 0.0},
    };
    auto& w = out.windows;
    std::stable_sort(w.begin(), w.end(), [](const PeakWindow& a, const PeakWindow& b) { return a.center < b.center; });
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        const double mid = 0.5 * (w[k].center + w[k + 1].center);
        w[k].hi = mid;
        w[k + 1].lo = mid;
        if (w[k + 1].center - w[k].center < 10.0 * grid_spacing) out.resolution_warning = true;
    }
    w.front().lo = w.front().center - (w.front().hi - w.front().center);
    w.back().hi = w.back().center + (w.back().center - w.back().lo);
    return out;
}

} // namespace gsel

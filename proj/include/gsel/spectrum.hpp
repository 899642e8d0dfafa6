// spectrum.hpp: extra-cavity emission spectrum via the quantum regression theorem

#pragma once

#include <string>
#include <vector>

#include "gsel/liouvillian.hpp"

namespace gsel {

struct FrequencyGrid {
    double min{0.5};
    double max{1.5};
    int points{4001};

    // Throws ContractViolation unless points >= 2 and min < max.
    std::vector<double> values() const;
    double spacing() const { return (max - min) / (points - 1); }
};

// One Lorentzian component of S: (gamma_cav/pi) Re[weight / (halfwidth + i(w - center))].
struct SpectralLine {
    double center{0.0};
    double halfwidth{0.0};
    Complex weight{};

    // Integral over the whole real axis, in units of gamma_cav.
    double area() const { return weight.real(); }
    // gamma_cav-scaled integral over [lo, hi].
    double integral(double lo, double hi, double gamma_cav) const;
    double value(double omega, double gamma_cav) const;
};

struct Spectrum {
    std::vector<double> omegas; // strictly ascending
    std::vector<double> values; // S(omega); NaN where the resolvent solve failed
    std::vector<std::size_t> failed_points;
    double gamma_cav{0.0};
    std::vector<SpectralLine> lines; // exact decomposition of S into damped modes of L
    std::size_t undamped_lines{0};   // weighted modes with zero damping, left out of lines

    // Trapezoidal integral of S over the whole grid.
    double total() const;
};

/// S(w) = (gamma_cav / pi) Re Tr[X^+ R(w) (X^- rho_ss)],  R(w) = -(L - i w)^-1,
/// with the stationary component projected out of X^- rho_ss. Points where
/// the shifted generator is singular are recorded in failed_points and the
/// rest of the grid is unaffected. The line decomposition comes from the
/// eigenmodes of the blocks of L that the source operator touches.
Spectrum emission_spectrum(const Superoperator& L, const DensityOperator& rho_ss, const ComplexMatrix& x_minus,
                           const ComplexMatrix& x_plus, std::span<const double> grid, double gamma_cav);

// Trapezoidal integral of the piecewise-linear interpolant of S over
// [center - halfwidth, center + halfwidth]. Throws ContractViolation if the
// window leaves the grid.
double integrate_peak(const Spectrum& spec, double center, double halfwidth);
double integrate_window(const Spectrum& spec, double lo, double hi);

// Emission attributed to the window: the full area of every line centered
// in [lo, hi), tails included, and nothing from lines centered elsewhere.
// Independent of the sampling grid. Throws NumericalError when the spectrum
// has undamped components.
double integrate_peak_resolved(const Spectrum& spec, double lo, double hi);

struct PeakWindow {
    std::string name; // "minus", "central", "plus"
    double center;
    double lo;
    double hi;
};

struct PeakWindows {
    std::vector<PeakWindow> windows; // ascending center
    bool resolution_warning{false};

    const PeakWindow& by_name(const std::string& name) const;
};

// Windows around the (- -> G), (s,1 -> s,0) and (+ -> G) emission lines,
// bounded at midpoints between neighbouring centers; the outer windows are
// symmetric about their centers. Warns when two centers are closer than ten
// grid spacings.
PeakWindows default_windows(const DressedBasis& basis, double grid_spacing = FrequencyGrid{}.spacing());

} // namespace gsel

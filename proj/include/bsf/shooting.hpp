#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "bsf/formula.hpp"

namespace bsf {

enum class Measure {
    DR,    ///< reduced radial function u, weight 1
    R2DR,  ///< full radial function R, weight r^2
};

const char* to_string(Measure m) noexcept;

/// u''(r) = q(r, E) u(r) on (r_min, r_max); first-derivative terms already removed.
struct RadialProblem {
    std::function<double(double r, double E)> q;
    double r_min = 0.0;
    double r_max = 0.0;    ///< upper cap; the working radius is chosen from the decay
    double scale = 1.0;    ///< characteristic length
    double e_max = std::numeric_limits<double>::infinity();  ///< continuum threshold
    Measure measure = Measure::DR;
    std::string substitution;  ///< how u relates to the model's radial function
};

enum class GridKind { Linear, Logarithmic };

/// Uniform grid in r (Linear) or in x = ln r (Logarithmic).
struct Grid {
    GridKind kind = GridKind::Logarithmic;
    double lo = 0.0;
    double hi = 1.0;
    std::size_t points = 4000;

    double step() const noexcept { return (hi - lo) / static_cast<double>(points - 1); }
    double x(std::size_t i) const noexcept { return lo + step() * static_cast<double>(i); }
    double r(std::size_t i) const noexcept;
};

enum class Direction { Outward, Inward };

/// Fourth-order Numerov for y'' = Q(x) y on a uniform grid of step h, seeded with the
/// first two values in the integration direction. Rescales on overflow.
std::vector<double> numerov(std::span<const double> Q, double h, double seed0, double seed1, Direction dir);

struct NumerovSolution {
    std::vector<double> r;
    std::vector<double> u;
    int nodes = 0;
};

/// Integrates the problem at energy E across the whole grid. Seeds follow the
/// power law at the origin (outward) or the decaying exponential (inward).
NumerovSolution numerov_integrate(const RadialProblem& p, double E, Direction dir, const Grid& grid);

/// Logarithmic grid from 1e-6 * scale to the decay radius for E, capped at r_max.
Grid default_grid(const RadialProblem& p, double E, std::size_t points = 4000);

/// Radius beyond the outer turning point where the WKB decay reaches 1e-12.
double decay_radius(const RadialProblem& p, double E);

/// Log-derivative mismatch u'_out/u_out - u'_in/u_in at the outer turning point.
double matching_mismatch(const RadialProblem& p, double E, const Grid& grid);

/// Nodes of the outward solution over the grid.
int count_nodes(const RadialProblem& p, double E, const Grid& grid);

struct ShootOptions {
    std::size_t points = 4000;
    double root_tol = 1e-13;
    int max_widenings = 40;
};

/// Node-count bisection to the n-node window, then root of the matching Wronskian.
EigenResult shoot_eigenvalue(const RadialProblem& p, int n, double lo, double hi, const ShootOptions& options = {});

struct Normalization {
    double constant;   ///< N with N^2 * integral(|f|^2 w) = 1
    double integral;
    int panels;
};

/// Composite Simpson of |f|^2 times the measure weight on [a, b], doubling the
/// panel count until the relative change is below rel_tol.
Normalization normalize(const std::function<double(double)>& f, double a, double b, Measure measure,
                        double rel_tol = 1e-8);

/// Normalized copies of uniformly spaced samples plus the constant.
struct NormalizedSamples {
    std::vector<double> values;
    double constant;
};

NormalizedSamples normalize(std::span<const double> r, std::span<const double> values, Measure measure);

}  // namespace bsf

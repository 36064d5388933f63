#pragma once

#include <optional>
#include <vector>

#include "bsf/canonical.hpp"
#include "bsf/formula.hpp"
#include "bsf/series.hpp"

namespace bsf {

/// Iteration state for y'' = lambda0 y' + s0 y.
struct AimState {
    TruncatedSeries lambda0;
    TruncatedSeries s0;
    TruncatedSeries lambda_prev;
    TruncatedSeries s_prev;
    TruncatedSeries lambda;
    TruncatedSeries s;
    int k = 0;
};

AimState aim_start(TruncatedSeries lambda0, TruncatedSeries s0);

/// lambda_k = lambda'_{k-1} + s_{k-1} + lambda0 lambda_{k-1};  s_k = s'_{k-1} + s0 lambda_{k-1}.
AimState aim_iterate(const AimState& state);

/// lambda_k s_{k-1} - lambda_{k-1} s_k at the center; requires k >= 1.
double aim_delta(const AimState& state);

/// lambda0 and s0 of the equation for F, where psi = s^k4 (1 - k3 s)^k5 F (General)
/// or psi = s^k4 exp(-k5 s) F (Limit), expanded about x0.
std::pair<TruncatedSeries, TruncatedSeries> aim_seeds(const CanonicalCoefficients& c, double x0, int order);

/// delta_1..delta_kmax at x0; entry k-1 holds delta_k.
std::vector<double> aim_deltas(const CanonicalCoefficients& c, double x0, int k_max);

/// Default expansion point: middle of (0, 1/k3) in the General regime, 1 otherwise.
double aim_default_x0(const CanonicalCoefficients& c);

/// Hypergeometric-form identification of the General-regime F equation.
struct AimParameters {
    double m;
    double a;
    double b;
    double sigma;
    double rho;
};

/// Reads m, a, b off the numerically built lambda0 and forms sigma, rho.
AimParameters identify_parameters(const CanonicalCoefficients& c, double x0);

struct AimOptions {
    std::optional<double> x0;
    int k_max = 60;
    double aim_tol = 1e-9;
    int scan_points = 2000;
    double root_tol = 1e-13;
};

/// Root of delta_k(value) = 0 that first appears at k = n and persists, iterated in k
/// until two successive k agree within aim_tol. Here delta_0 is s0 at the center,
/// which vanishes exactly at the degree-0 termination.
EigenResult aim_solve(const CoefficientMap& map, const SpectralUnknown& unknown, int n,
                      const AimOptions& options = {});

/// Termination roots: entry k holds the roots of delta_k over the bracket that are
/// absent from delta_{k-1} and persist in delta_{k+1}, k = 0..count-1.
std::vector<std::vector<double>> aim_termination_ladder(const CoefficientMap& map, const SpectralUnknown& unknown,
                                                        int count, const AimOptions& options = {});

}  // namespace bsf

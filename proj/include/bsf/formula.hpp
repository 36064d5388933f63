#pragma once

#include <optional>
#include <vector>

#include "bsf/canonical.hpp"
#include "bsf/hypergeom.hpp"

namespace bsf {

enum class ConditionForm { GeneralLinear, GeneralSquared, LimitLinear, LimitSquared };

struct EigenCondition {
    ConditionForm form;
    int n;

    double operator()(const CanonicalCoefficients& c) const;
};

/// k4 + k5 - [(1 - 2n)/2 - (k2 - sqrt((k3 - k2)^2 - 4A)) / (2 k3)].
/// The radical is divided by |k3| so the polynomial branch is kept when k3 < 0.
double condition_general(const CanonicalCoefficients& c, int n);

/// (B - k4 k2 - n k2) / (2 k4 + k1 + 2n) - k5.
double condition_limit(const CanonicalCoefficients& c, int n);

/// Squared presentations; every root of the linear forms is a root of these.
double condition_general_squared(const CanonicalCoefficients& c, int n);
double condition_limit_squared(const CanonicalCoefficients& c, int n);

/// Linear condition for the coefficients' own regime.
double condition(const CanonicalCoefficients& c, int n);

enum class Engine { Formula, Aim, Shooting };

const char* to_string(Engine engine) noexcept;

struct EigenResult {
    double value = 0.0;
    int n = 0;
    std::optional<SolutionParams> params;
    double residual_formula = 0.0;
    double residual_ode = 0.0;
    std::optional<int> node_count;
    Engine engine = Engine::Formula;
};

struct SolveOptions {
    int scan_points = 2000;
    double root_tol = 1e-12;
};

/// All admissible roots of the linear condition on the unknown's bracket, ascending.
/// Throws NoRootInBracket when there are none.
std::vector<EigenResult> solve_eigenvalue(const CoefficientMap& map, const SpectralUnknown& unknown, int n,
                                          const SolveOptions& options = {});

/// s^k4 (1 - k3 s)^k5 2F1(-n, n + 2(k4 + k5) + k2/k3 - 1; 2k4 + k1; k3 s)   (General)
/// s^k4 exp(-k5 s) 1F1(-n; 2k4 + k1; (2k5 + k2) s)                          (Limit)
/// without normalization. For k3 < 0 the physical domain is s < 0 and |s|^k4 is used.
class WavefunctionSpec {
public:
    WavefunctionSpec(const CanonicalCoefficients& c, SolutionParams params, int n);

    Regime regime() const noexcept { return regime_; }
    int n() const noexcept { return n_; }
    const SolutionParams& params() const noexcept { return params_; }
    const TerminatingSeries& polynomial() const noexcept { return poly_; }

    /// Argument of the polynomial factor at s.
    double polynomial_argument(double s) const noexcept { return arg_scale_ * s; }

    /// Open interval of s on which the state lives; hi is +inf in the Limit regime.
    double domain_lo() const noexcept;
    double domain_hi() const noexcept;

    /// Length in s over which the state is appreciable; used for sampling.
    double extent() const noexcept;

    template <class T>
    T operator()(T s) const {
        const T k4 = params_.k4, k5 = params_.k5;
        const T poly = poly_(T(arg_scale_) * s);
        const T abs_s = s < 0 ? -s : s;
        if (regime_ == Regime::General) return std::pow(abs_s, k4) * std::pow(1 - T(k3_) * s, k5) * poly;
        return std::pow(abs_s, k4) * std::exp(-k5 * s) * poly;
    }

private:
    Regime regime_;
    SolutionParams params_;
    int n_;
    double k3_;
    double arg_scale_;
    TerminatingSeries poly_;
};

WavefunctionSpec build_wavefunction(const CanonicalCoefficients& c, SolutionParams params, int n);

/// max |residual * s^2 (1 - k3 s)^2| / max |psi| over `points` interior points,
/// with central differences of step 1e-5 * extent in extended precision.
double wavefunction_ode_residual(const CanonicalCoefficients& c, const WavefunctionSpec& psi, int points = 50);

}  // namespace bsf

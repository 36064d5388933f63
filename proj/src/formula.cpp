#include "bsf/formula.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bsf/error.hpp"
#include "roots.hpp"

namespace bsf {

namespace {

void require_regime(const CanonicalCoefficients& c, Regime r) {
    if (c.regime() != r)
        throw Error(ErrorKind::InvalidArgument,
                    r == Regime::General ? "general condition needs |k3| >= k3_epsilon"
                                         : "limit condition needs |k3| < k3_epsilon");
}

// Right-hand side of k4 + k5 = X for the n-th rung.
double general_rung(const CanonicalCoefficients& c, int n) {
    const double d = (c.k3() - c.k2()) * (c.k3() - c.k2()) - 4 * c.A();
    if (d < 0) throw Error(ErrorKind::NegativeDiscriminant, "(k3 - k2)^2 - 4A < 0");
    return (1.0 - 2 * n) / 2 - c.k2() / (2 * c.k3()) + std::sqrt(d) / (2 * std::abs(c.k3()));
}

double limit_ratio(const CanonicalCoefficients& c, double k4, int n) {
    const double den = 2 * k4 + c.k1() + 2 * n;
    if (den == 0) throw Error(ErrorKind::ZeroDenominator, "2k4 + k1 + 2n = 0");
    return (c.B() - k4 * c.k2() - n * c.k2()) / den;
}

}  // namespace

double condition_general(const CanonicalCoefficients& c, int n) {
    require_regime(c, Regime::General);
    return compute_k4(c) + compute_k5(c) - general_rung(c, n);
}

double condition_limit(const CanonicalCoefficients& c, int n) {
    require_regime(c, Regime::Limit);
    return limit_ratio(c, compute_k4(c), n) - compute_k5(c);
}

double condition_general_squared(const CanonicalCoefficients& c, int n) {
    require_regime(c, Regime::General);
    const double k4 = compute_k4(c), k5 = compute_k5(c);
    const double x = general_rung(c, n);
    if (x == 0) throw Error(ErrorKind::ZeroDenominator, "rung value is zero");
    const double t = (k4 * k4 - k5 * k5 - x * x) / (2 * x);
    return t * t - k5 * k5;
}

double condition_limit_squared(const CanonicalCoefficients& c, int n) {
    require_regime(c, Regime::Limit);
    const double k5 = compute_k5(c);
    const double t = limit_ratio(c, compute_k4(c), n);
    return t * t - k5 * k5;
}

double condition(const CanonicalCoefficients& c, int n) {
    return c.regime() == Regime::General ? condition_general(c, n) : condition_limit(c, n);
}

double EigenCondition::operator()(const CanonicalCoefficients& c) const {
    switch (form) {
        case ConditionForm::GeneralLinear: return condition_general(c, n);
        case ConditionForm::GeneralSquared: return condition_general_squared(c, n);
        case ConditionForm::LimitLinear: return condition_limit(c, n);
        case ConditionForm::LimitSquared: return condition_limit_squared(c, n);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

const char* to_string(Engine engine) noexcept {
    switch (engine) {
        case Engine::Formula: return "formula";
        case Engine::Aim: return "aim";
        case Engine::Shooting: return "shooting";
    }
    return "?";
}

std::vector<EigenResult> solve_eigenvalue(const CoefficientMap& map, const SpectralUnknown& unknown, int n,
                                          const SolveOptions& options) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be >= 0");
    if (!std::isfinite(unknown.lo) || !std::isfinite(unknown.hi))
        throw Error(ErrorKind::InvalidArgument, "bracket must be finite");
    auto g = [&](double x) { return condition(map(x), n); };
    const auto samples = detail::scan(g, unknown.lo, unknown.hi, options.scan_points);

    std::vector<EigenResult> out;
    for (auto [a, b] : detail::sign_changes(samples)) {
        double root;
        try {
            root = detail::refine(g, a, b, options.root_tol);
        } catch (const std::exception&) {
            continue;
        }
        const double groot = g(root);
        // a sign change across a pole refines onto the pole, where |g| grows
        const double scale = std::max(std::abs(g(a)), std::abs(g(b)));
        if (!(std::abs(groot) <= 1e-6 * scale || std::abs(groot) <= 1e-12)) continue;

        const auto c = map(root);
        SolutionParams params;
        try {
            params = solution_params(c);
        } catch (const Error&) {
            continue;
        }
        if (params.k4 < 0 || params.k5 <= 0) continue;
        if (!out.empty() && std::abs(out.back().value - root) <= 1e-9 * std::max(1.0, std::abs(root))) continue;

        EigenResult r;
        r.value = root;
        r.n = n;
        r.params = params;
        r.residual_formula = groot;
        r.engine = Engine::Formula;
        try {
            r.residual_ode = wavefunction_ode_residual(c, build_wavefunction(c, params, n));
        } catch (const Error&) {
            r.residual_ode = std::numeric_limits<double>::quiet_NaN();
        }
        out.push_back(r);
    }
    if (out.empty())
        throw Error(ErrorKind::NoRootInBracket, "no admissible root of the n=" + std::to_string(n) + " condition for " +
                                                    unknown.name + " in [" + std::to_string(unknown.lo) + ", " +
                                                    std::to_string(unknown.hi) + "]");
    return out;
}

WavefunctionSpec::WavefunctionSpec(const CanonicalCoefficients& c, SolutionParams params, int n)
    : regime_(c.regime()), params_(params), n_(n), k3_(c.k3()), arg_scale_(0.0),
      poly_(TerminatingSeries::kummer(0, 1.0)) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be >= 0");
    const double lower = 2 * params.k4 + c.k1();
    if (lower <= 0 && std::abs(lower - std::round(lower)) < 1e-12)
        throw Error(ErrorKind::InvalidHypergeomParams, "2k4 + k1 is zero or a negative integer");
    if (regime_ == Regime::General) {
        poly_ = TerminatingSeries::gauss(n, n + 2 * (params.k4 + params.k5) + c.k2() / c.k3() - 1, lower);
        arg_scale_ = c.k3();
    } else {
        poly_ = TerminatingSeries::kummer(n, lower);
        arg_scale_ = 2 * params.k5 + c.k2();
    }
}

double WavefunctionSpec::domain_lo() const noexcept {
    return regime_ == Regime::General && k3_ < 0 ? 1 / k3_ : 0.0;
}

double WavefunctionSpec::domain_hi() const noexcept {
    if (regime_ == Regime::Limit) return std::numeric_limits<double>::infinity();
    return k3_ > 0 ? 1 / k3_ : 0.0;
}

double WavefunctionSpec::extent() const noexcept {
    if (regime_ == Regime::General) return std::abs(1 / k3_);
    const double k5 = params_.k5 > 0 ? params_.k5 : 1.0;
    return (n_ + params_.k4 + 10) / k5;
}

WavefunctionSpec build_wavefunction(const CanonicalCoefficients& c, SolutionParams params, int n) {
    return {c, params, n};
}

double wavefunction_ode_residual(const CanonicalCoefficients& c, const WavefunctionSpec& psi, int points) {
    using real = long double;
    const double lo = psi.domain_lo();
    const double hi = psi.regime() == Regime::Limit ? psi.extent() : psi.domain_hi();
    const real h = 1e-5L * psi.extent();
    real worst = 0, peak = 0;
    for (int i = 1; i <= points; ++i) {
        const real s = lo + (hi - lo) * static_cast<real>(i) / (points + 1);
        const real f0 = psi(s), fp = psi(s + h), fm = psi(s - h);
        const real d1 = (fp - fm) / (2 * h);
        const real d2 = (fp - 2 * f0 + fm) / (h * h);
        const real w = 1 - static_cast<real>(c.k3()) * s;
        const real res = c.residual<real>(s, f0, d1, d2) * s * s * w * w;
        worst = std::max(worst, std::abs(res));
        peak = std::max(peak, std::abs(f0));
    }
    return peak > 0 ? static_cast<double>(worst / peak) : std::numeric_limits<double>::infinity();
}

}  // namespace bsf

#include "bsf/aim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bsf/error.hpp"
#include "roots.hpp"

namespace bsf {

AimState aim_start(TruncatedSeries lambda0, TruncatedSeries s0) {
    return {lambda0, s0, lambda0, s0, lambda0, s0, 0};
}

AimState aim_iterate(const AimState& st) {
    AimState next{st.lambda0, st.s0, st.lambda, st.s, st.lambda, st.s, st.k + 1};
    next.lambda = st.lambda.derivative() + st.s + st.lambda0 * st.lambda;
    next.s = st.s.derivative() + st.s0 * st.lambda;
    return next;
}

double aim_delta(const AimState& st) {
    if (st.k < 1) throw Error(ErrorKind::InvalidArgument, "delta needs at least one iteration");
    return st.lambda.value() * st.s_prev.value() - st.lambda_prev.value() * st.s.value();
}

std::pair<TruncatedSeries, TruncatedSeries> aim_seeds(const CanonicalCoefficients& c, double x0, int order) {
    const auto p = solution_params(c);
    const auto x = TruncatedSeries::variable(x0, order);
    const auto one = TruncatedSeries::constant(x0, order, 1.0);
    const double lower = 2 * p.k4 + c.k1();
    if (c.regime() == Regime::General) {
        const double S = p.k4 + p.k5;
        const auto inv = (x * (one - c.k3() * x)).reciprocal();
        auto lambda0 = (2 * c.k3() * S + c.k2()) * x - lower * one;
        const double s0_num = c.k3() * S * S + S * (c.k2() - c.k3()) + c.A() / c.k3();
        return {lambda0 * inv, s0_num * inv};
    }
    const auto inv = x.reciprocal();
    auto lambda0 = (2 * p.k5 + c.k2()) * one - lower * inv;
    const double s0_num = -(c.B() - p.k5 * lower - c.k2() * p.k4);
    return {lambda0, s0_num * inv};
}

std::vector<double> aim_deltas(const CanonicalCoefficients& c, double x0, int k_max) {
    if (k_max < 1) throw Error(ErrorKind::InvalidArgument, "k_max must be >= 1");
    auto [l0, s0] = aim_seeds(c, x0, k_max + 2);
    auto st = aim_start(l0, s0);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) {
        st = aim_iterate(st);
        out.push_back(aim_delta(st));
    }
    return out;
}

double aim_default_x0(const CanonicalCoefficients& c) {
    return c.regime() == Regime::General ? 1 / (2 * c.k3()) : 1.0;
}

AimParameters identify_parameters(const CanonicalCoefficients& c, double x0) {
    if (c.regime() != Regime::General) throw Error(ErrorKind::InvalidArgument, "identification needs k3 != 0");
    constexpr int order = 4;
    const auto lambda0 = aim_seeds(c, x0, order).first;
    const auto x = TruncatedSeries::variable(x0, order);
    const auto one = TruncatedSeries::constant(x0, order, 1.0);
    // lambda0 = 2(a/(1 - b x) - (m + 1)/x): its numerator over x(1 - b x) is linear
    const double b = c.k3();
    const auto num = lambda0 * (x * (one - b * x));
    const double p = num.evaluate(0.0);
    const double q = num[1];
    AimParameters r{};
    r.b = b;
    r.m = -p / 2 - 1;
    r.a = q / 2 - (r.m + 1) * b;
    r.sigma = 2 * r.m + 2;
    r.rho = (2 * r.m + 1) + 2 * r.a / b;
    return r;
}

namespace {

double pick_x0(const CoefficientMap& map, const SpectralUnknown& u, const AimOptions& o) {
    if (o.x0) return *o.x0;
    for (double t : {0.5, 0.25, 0.75, 0.1, 0.9}) {
        try {
            return aim_default_x0(map(u.lo + t * (u.hi - u.lo)));
        } catch (const Error&) {
        }
    }
    return 1.0;
}

/// delta_0 = s0(x0) (the degree-0 termination), then delta_1..delta_K.
std::vector<double> delta_sequence(const CanonicalCoefficients& c, double x0, int K) {
    auto [l0, s0] = aim_seeds(c, x0, K + 2);
    std::vector<double> out{s0.value()};
    auto st = aim_start(l0, s0);
    for (int k = 1; k <= K; ++k) {
        st = aim_iterate(st);
        out.push_back(aim_delta(st));
    }
    return out;
}

double delta_at(const CoefficientMap& map, double x0, int k, double e) {
    return delta_sequence(map(e), x0, k).back();
}

/// Refined roots of delta_0..delta_K from one scan that evaluates all of them per point.
std::vector<std::vector<double>> delta_roots(const CoefficientMap& map, const SpectralUnknown& u, double x0, int K,
                                             const AimOptions& o) {
    const int pts = o.scan_points;
    const int count = K + 1;
    std::vector<detail::Scan> scans(static_cast<std::size_t>(count));
    for (auto& s : scans) {
        s.x.resize(pts);
        s.f.resize(pts);
    }
    for (int i = 0; i < pts; ++i) {
        const double e = u.lo + (u.hi - u.lo) * i / (pts - 1);
        std::vector<double> d;
        try {
            d = delta_sequence(map(e), x0, K);
        } catch (const std::exception&) {
            d.assign(count, std::numeric_limits<double>::quiet_NaN());
        }
        for (int k = 0; k < count; ++k) {
            scans[k].x[i] = e;
            scans[k].f[i] = std::isfinite(d[k]) ? d[k] : std::numeric_limits<double>::quiet_NaN();
        }
    }
    std::vector<std::vector<double>> roots(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        // delta_k grows factorially; only its sign pattern matters for bracketing
        double peak = 0;
        for (double v : scans[k].f)
            if (!std::isnan(v)) peak = std::max(peak, std::abs(v));
        if (peak > 0)
            for (double& v : scans[k].f) v /= peak;
        for (auto [a, b] : detail::sign_changes(scans[k])) {
            auto f = [&](double e) { return delta_at(map, x0, k, e); };
            try {
                const double r = detail::refine(f, a, b, o.root_tol);
                const double scale = std::max(std::abs(f(a)), std::abs(f(b)));
                if (std::abs(f(r)) <= 1e-6 * scale) roots[k].push_back(r);
            } catch (const std::exception&) {
            }
        }
    }
    return roots;
}

bool contains(const std::vector<double>& v, double x, double tol) {
    return std::any_of(v.begin(), v.end(), [&](double y) { return std::abs(x - y) <= tol * std::max(1.0, std::abs(x)); });
}

/// Root of delta_k nearest `guess`, searched in windows growing from `width`.
std::optional<double> local_root(const CoefficientMap& map, const SpectralUnknown& u, double x0, int k, double guess,
                                 double width, const AimOptions& o) {
    auto f = [&](double e) { return delta_at(map, x0, k, e); };
    for (double w = width; w < 4 * (u.hi - u.lo); w *= 4) {
        const double lo = std::max(u.lo, guess - w), hi = std::min(u.hi, guess + w);
        const auto s = detail::scan(f, lo, hi, 41);
        std::optional<double> best;
        for (auto [a, b] : detail::sign_changes(s)) {
            try {
                const double r = detail::refine(f, a, b, o.root_tol);
                if (!best || std::abs(r - guess) < std::abs(*best - guess)) best = r;
            } catch (const std::exception&) {
            }
        }
        if (best) return best;
    }
    return std::nullopt;
}

}  // namespace

EigenResult aim_solve(const CoefficientMap& map, const SpectralUnknown& unknown, int n, const AimOptions& options) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be >= 0");
    if (options.k_max <= n) throw Error(ErrorKind::InvalidArgument, "k_max must exceed n");
    const double x0 = pick_x0(map, unknown, options);
    const double match_tol = 1e-7;

    // delta_k vanishes at every level up to k, so level n is the root delta_n adds
    const auto roots = delta_roots(map, unknown, x0, n + 1, options);
    std::vector<double> candidates;
    for (double r : roots[n]) {
        if (n > 0 && contains(roots[n - 1], r, match_tol)) continue;
        if (!contains(roots[n + 1], r, match_tol)) continue;
        candidates.push_back(r);
    }
    if (candidates.empty())
        throw Error(ErrorKind::NonConvergent, "no delta root first appearing at k = " + std::to_string(n));

    double value = candidates.front();
    double prev = value;
    double drift = std::numeric_limits<double>::infinity();
    const double width = 4 * (unknown.hi - unknown.lo) / options.scan_points;
    for (int k = n + 1; k <= options.k_max; ++k) {
        const auto r = local_root(map, unknown, x0, k, prev, width, options);
        if (!r) throw Error(ErrorKind::NonConvergent, "delta root lost at k = " + std::to_string(k));
        value = *r;
        drift = std::abs(value - prev);
        if (drift <= options.aim_tol) break;
        prev = value;
    }
    if (!(drift <= options.aim_tol))
        throw Error(ErrorKind::NonConvergent, "successive AIM roots still differ by " + std::to_string(drift));

    EigenResult res;
    res.value = value;
    res.n = n;
    res.engine = Engine::Aim;
    const auto c = map(value);
    try {
        res.params = solution_params(c);
        res.residual_formula = condition(c, n);
        res.residual_ode = wavefunction_ode_residual(c, build_wavefunction(c, *res.params, n));
    } catch (const Error&) {
        res.residual_formula = std::numeric_limits<double>::quiet_NaN();
        res.residual_ode = std::numeric_limits<double>::quiet_NaN();
    }
    return res;
}

std::vector<std::vector<double>> aim_termination_ladder(const CoefficientMap& map, const SpectralUnknown& unknown,
                                                        int count, const AimOptions& options) {
    if (count < 1) throw Error(ErrorKind::InvalidArgument, "count must be >= 1");
    const double x0 = pick_x0(map, unknown, options);
    const auto roots = delta_roots(map, unknown, x0, count, options);
    const double tol = 1e-7;
    std::vector<std::vector<double>> out(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k)
        for (double r : roots[k]) {
            if (k > 0 && contains(roots[k - 1], r, tol)) continue;
            if (contains(roots[k + 1], r, tol)) out[k].push_back(r);
        }
    return out;
}

}  // namespace bsf

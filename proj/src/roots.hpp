#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include <boost/math/tools/toms748_solve.hpp>

namespace bsf::detail {

/// f sampled on a uniform grid; non-finite values (and thrown errors) become NaN.
struct Scan {
    std::vector<double> x;
    std::vector<double> f;
};

template <class F>
Scan scan(F&& f, double lo, double hi, int points) {
    Scan s;
    s.x.resize(static_cast<std::size_t>(points));
    s.f.resize(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double x = lo + (hi - lo) * i / (points - 1);
        double v;
        try {
            v = f(x);
        } catch (...) {
            v = std::numeric_limits<double>::quiet_NaN();
        }
        s.x[i] = x;
        s.f[i] = std::isfinite(v) ? v : std::numeric_limits<double>::quiet_NaN();
    }
    return s;
}

/// Adjacent finite samples with opposite signs (or an exact zero on the left end).
inline std::vector<std::pair<double, double>> sign_changes(const Scan& s) {
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i + 1 < s.x.size(); ++i) {
        const double a = s.f[i], b = s.f[i + 1];
        if (std::isnan(a) || std::isnan(b)) continue;
        if (a == 0) {
            out.emplace_back(s.x[i], s.x[i]);
        } else if ((a < 0) != (b < 0) && b != 0) {
            out.emplace_back(s.x[i], s.x[i + 1]);
        }
    }
    if (!s.f.empty() && s.f.back() == 0) out.emplace_back(s.x.back(), s.x.back());
    return out;
}

/// Bracketing refinement (TOMS 748: secant/inverse-cubic steps safeguarded by bisection).
template <class F>
double refine(F&& f, double a, double b, double rel_tol) {
    if (a == b) return a;
    const double fa = f(a), fb = f(b);
    if (fa == 0) return a;
    if (fb == 0) return b;
    auto tol = [rel_tol](double x, double y) {
        return std::abs(x - y) <= rel_tol * std::max({std::abs(x), std::abs(y), 1e-300}) ||
               std::abs(x - y) <= 1e-300;
    };
    std::uintmax_t iters = 200;
    auto [lo, hi] = boost::math::tools::toms748_solve(f, a, b, fa, fb, tol, iters);
    const double flo = f(lo), fhi = f(hi);
    return std::abs(flo) <= std::abs(fhi) ? lo : hi;
}

}  // namespace bsf::detail

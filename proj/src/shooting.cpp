#include "bsf/shooting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bsf/error.hpp"
#include "roots.hpp"

namespace bsf {

const char* to_string(Measure m) noexcept {
    return m == Measure::DR ? "dr" : "r2dr";
}

double Grid::r(std::size_t i) const noexcept {
    return kind == GridKind::Linear ? x(i) : std::exp(x(i));
}

std::vector<double> numerov(std::span<const double> Q, double h, double seed0, double seed1, Direction dir) {
    const std::size_t n = Q.size();
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "numerov needs at least 3 grid points");
    std::vector<double> y(n, 0.0);
    const double c = h * h / 12;
    auto at = [&](std::size_t k) { return dir == Direction::Outward ? k : n - 1 - k; };
    y[at(0)] = seed0;
    y[at(1)] = seed1;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        const std::size_t im = at(k - 1), i = at(k), ip = at(k + 1);
        y[ip] = (2 * (1 + 5 * c * Q[i]) * y[i] - (1 - c * Q[im]) * y[im]) / (1 - c * Q[ip]);
        if (std::abs(y[ip]) > 1e150) {
            for (std::size_t j = 0; j <= k + 1; ++j) y[at(j)] *= 1e-150;
        }
    }
    return y;
}

namespace {

double safe_r_lo(const RadialProblem& p) {
    return std::max(p.r_min, 1e-6 * p.scale);
}

/// Q(x) of the grid's own variable: q on a linear grid, r^2 q + 1/4 on a log grid.
std::vector<double> grid_q(const RadialProblem& p, double E, const Grid& g) {
    std::vector<double> Q(g.points);
    for (std::size_t i = 0; i < g.points; ++i) {
        const double r = g.r(i);
        const double q = p.q(r, E);
        Q[i] = g.kind == GridKind::Linear ? q : r * r * q + 0.25;
    }
    return Q;
}

std::vector<double> integrate(const std::vector<double>& Q, double h, Direction dir) {
    const std::size_t n = Q.size();
    if (dir == Direction::Outward) {
        const double k = std::isfinite(Q[0]) && Q[0] > 0 ? std::sqrt(Q[0]) : 0.0;
        if (!std::isfinite(Q[0])) {
            auto Qc = Q;
            Qc[0] = 0;
            return numerov(Qc, h, 0.0, h, dir);
        }
        return k > 0 ? numerov(Q, h, 1.0, std::exp(k * h), dir) : numerov(Q, h, 0.0, h, dir);
    }
    const double k = Q[n - 1] > 0 ? std::sqrt(Q[n - 1]) : 0.0;
    return numerov(Q, h, 1e-30, 1e-30 * std::exp(k * h), dir);
}

int sign_changes(const std::vector<double>& y, std::size_t end) {
    int nodes = 0;
    double last = 0;
    for (std::size_t i = 0; i < end && i < y.size(); ++i) {
        if (y[i] == 0) continue;
        if (last != 0 && (y[i] < 0) != (last < 0)) ++nodes;
        last = y[i];
    }
    return nodes;
}

/// Last index in the classically allowed region, or the middle when there is none.
std::size_t turning_index(const std::vector<double>& Q) {
    for (std::size_t i = Q.size() - 2; i >= 1; --i)
        if (Q[i] < 0) return std::min(i, Q.size() - 3);
    return Q.size() / 2;
}

struct Matched {
    double wout, dout, win, din;
    std::size_t m;
    std::vector<double> out;
};

double numerov_slope(const std::vector<double>& y, const std::vector<double>& Q, std::size_t m, double h) {
    const double c = h * h / 6;
    return ((1 - c * Q[m + 1]) * y[m + 1] - (1 - c * Q[m - 1]) * y[m - 1]) / (2 * h);
}

Matched match(const RadialProblem& p, double E, const Grid& g) {
    const auto Q = grid_q(p, E, g);
    const double h = g.step();
    auto out = integrate(Q, h, Direction::Outward);
    const auto in = integrate(Q, h, Direction::Inward);
    const std::size_t m = turning_index(Q);
    Matched r{out[m], numerov_slope(out, Q, m, h), in[m], numerov_slope(in, Q, m, h), m, {}};
    r.out = std::move(out);
    return r;
}

/// Scale-free Wronskian of the two solutions at the matching point; zero only at eigenvalues.
double wronskian(const RadialProblem& p, double E, const Grid& g) {
    const auto mt = match(p, E, g);
    const double w = mt.dout * mt.win - mt.wout * mt.din;
    const double norm = std::hypot(mt.wout, mt.dout) * std::hypot(mt.win, mt.din);
    return norm > 0 ? w / norm : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

NumerovSolution numerov_integrate(const RadialProblem& p, double E, Direction dir, const Grid& grid) {
    const auto Q = grid_q(p, E, grid);
    auto y = integrate(Q, grid.step(), dir);
    NumerovSolution s;
    s.r.resize(grid.points);
    for (std::size_t i = 0; i < grid.points; ++i) {
        s.r[i] = grid.r(i);
        if (grid.kind == GridKind::Logarithmic) y[i] *= std::sqrt(s.r[i]);
    }
    s.nodes = sign_changes(y, y.size());
    s.u = std::move(y);
    return s;
}

double decay_radius(const RadialProblem& p, double E) {
    const double lo = safe_r_lo(p);
    const double cap = p.r_max;
    const int samples = 20000;
    const double step = std::log(cap / lo) / (samples - 1);
    double rt = p.scale;
    for (int i = samples - 1; i >= 0; --i) {
        const double r = lo * std::exp(step * i);
        if (p.q(r, E) < 0) {
            rt = r;
            break;
        }
    }
    double r = rt, acc = 0;
    while (acc < 28 && r < cap) {
        const double k = std::sqrt(std::max(p.q(r, E), 0.0));
        const double dr = k * 0.01 * r <= 0.05 ? 0.01 * r : 0.05 / k;
        acc += k * dr;
        r += dr;
    }
    return std::min(std::max(r, 2 * rt), cap);
}

Grid default_grid(const RadialProblem& p, double E, std::size_t points) {
    return {GridKind::Logarithmic, std::log(safe_r_lo(p)), std::log(decay_radius(p, E)), points};
}

double matching_mismatch(const RadialProblem& p, double E, const Grid& g) {
    const auto mt = match(p, E, g);
    const double scale = g.kind == GridKind::Logarithmic ? 1 / g.r(mt.m) : 1.0;
    return scale * (mt.dout / mt.wout - mt.din / mt.win);
}

int count_nodes(const RadialProblem& p, double E, const Grid& grid) {
    return sign_changes(integrate(grid_q(p, E, grid), grid.step(), Direction::Outward), grid.points);
}

EigenResult shoot_eigenvalue(const RadialProblem& p, int n, double lo, double hi, const ShootOptions& o) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be >= 0");
    if (!(lo < hi)) throw Error(ErrorKind::InvalidArgument, "shooting bracket needs lo < hi");

    auto nodes = [&](double e) { return count_nodes(p, e, default_grid(p, e, o.points)); };
    int widen = 0;
    hi = std::min(hi, p.e_max);
    while (nodes(lo) > n) {
        if (++widen > o.max_widenings) throw Error(ErrorKind::BracketExhausted, "lower end never drops below n nodes");
        lo -= hi - lo;
    }
    while (nodes(hi) <= n) {
        if (hi >= p.e_max || ++widen > o.max_widenings)
            throw Error(ErrorKind::BracketExhausted, "no state with n nodes below the upper end");
        hi = std::min(hi + (hi - lo), p.e_max);
    }
    for (int it = 0; it < 200 && hi - lo > 1e-6 * std::max(1.0, std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (nodes(mid) <= n)
            lo = mid;
        else
            hi = mid;
    }

    // node counts near an eigenvalue depend on the grid; grow the window until the Wronskian brackets
    const double centre = 0.5 * (lo + hi);
    const auto grid = default_grid(p, centre, o.points);
    auto f = [&](double e) { return wronskian(p, e, grid); };
    double a = lo, b = hi;
    for (int i = 0; i < 30 && !((f(a) < 0) != (f(b) < 0)); ++i) {
        const double w = b - a;
        a -= w;
        b += w;
    }
    if ((f(a) < 0) == (f(b) < 0)) throw Error(ErrorKind::BracketExhausted, "matching Wronskian has no sign change");
    const double root = detail::refine(f, a, b, o.root_tol);

    const auto mt = match(p, root, grid);
    EigenResult r;
    r.value = root;
    r.n = n;
    r.engine = Engine::Shooting;
    r.residual_formula = f(root);
    r.residual_ode = std::numeric_limits<double>::quiet_NaN();
    r.node_count = sign_changes(mt.out, mt.m + 1);
    return r;
}

namespace {

double weight(double r, Measure m) {
    return m == Measure::R2DR ? r * r : 1.0;
}

void check_tails(double first, double last, double peak) {
    if (peak <= 0) throw Error(ErrorKind::NonDecayingTail, "integrand vanishes identically");
    if (first > 1e-6 * peak || last > 1e-6 * peak)
        throw Error(ErrorKind::NonDecayingTail, "integrand does not decay at the ends of the interval");
}

}  // namespace

Normalization normalize(const std::function<double(double)>& f, double a, double b, Measure measure,
                        double rel_tol) {
    if (!(a < b) || !std::isfinite(b)) throw Error(ErrorKind::InvalidArgument, "normalization needs a finite a < b");
    auto g = [&](double r) {
        const double v = f(r);
        return v * v * weight(r, measure);
    };
    int panels = 64;
    std::vector<double> vals(static_cast<std::size_t>(panels) + 1);
    for (int i = 0; i <= panels; ++i) vals[i] = g(a + (b - a) * i / panels);
    auto simpson = [&](const std::vector<double>& v) {
        const std::size_t n = v.size() - 1;
        const double h = (b - a) / static_cast<double>(n);
        double s = v.front() + v.back();
        for (std::size_t i = 1; i < n; ++i) s += (i % 2 ? 4 : 2) * v[i];
        return s * h / 3;
    };
    double prev = simpson(vals);
    for (; panels < (1 << 22); panels *= 2) {
        std::vector<double> finer(2 * vals.size() - 1);
        const int n2 = 2 * panels;
        for (std::size_t i = 0; i < vals.size(); ++i) finer[2 * i] = vals[i];
        for (int i = 1; i < n2; i += 2) finer[i] = g(a + (b - a) * i / n2);
        vals = std::move(finer);
        const double cur = simpson(vals);
        if (std::abs(cur - prev) <= rel_tol * std::abs(cur)) {
            check_tails(vals.front(), vals.back(), *std::max_element(vals.begin(), vals.end()));
            return {1 / std::sqrt(cur), cur, n2};
        }
        prev = cur;
    }
    throw Error(ErrorKind::NonConvergent, "Simpson refinement did not converge");
}

NormalizedSamples normalize(std::span<const double> r, std::span<const double> values, Measure measure) {
    const std::size_t n = values.size();
    if (n < 4 || r.size() != n) throw Error(ErrorKind::InvalidArgument, "need at least 4 matching samples");
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = values[i] * values[i] * weight(r[i], measure);
    check_tails(g.front(), g.back(), *std::max_element(g.begin(), g.end()));
    const double h = (r[n - 1] - r[0]) / static_cast<double>(n - 1);
    // Simpson's 1/3 rule, closing with the 3/8 rule when the interval count is odd
    const std::size_t m = (n - 1) % 2 ? n - 4 : n - 1;
    double s = g[0] + g[m];
    for (std::size_t i = 1; i < m; ++i) s += (i % 2 ? 4 : 2) * g[i];
    double total = s * h / 3;
    if (m != n - 1) total += 3 * h / 8 * (g[m] + 3 * g[m + 1] + 3 * g[m + 2] + g[m + 3]);
    const double c = 1 / std::sqrt(total);
    NormalizedSamples out{std::vector<double>(values.begin(), values.end()), c};
    for (double& v : out.values) v *= c;
    return out;
}

}  // namespace bsf

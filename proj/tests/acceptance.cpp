// Acceptance criteria, one PASS/FAIL line each.
// Usage: bsf_acceptance [criterion-number]

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bsf/cli.hpp"
#include "bsf/error.hpp"
#include "support.hpp"

using namespace bsf;
using bsf::testing::Case;

namespace {

// pinned tolerances
constexpr double tol_closed = 1e-10;
constexpr double tol_aim = 1e-7;
constexpr double tol_shoot = 1e-6;
constexpr double tol_kg_abs = 1e-6;
constexpr double tol_hyper_ode = 1e-10;
constexpr double tol_wave_ode = 1e-6;
constexpr double tol_ladder = 1e-8;
constexpr double numerov_lo = 8, numerov_hi = 32;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (!pass) detail << "; ";
            else detail.str("");
            detail << what;
            pass = false;
        }
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string run_cli_capture(std::vector<std::string> args, int& code) {
    args.insert(args.begin(), "bsf");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return out.str();
}

void oscillator(Outcome& o) {
    double worst_closed = 0, worst_shoot = 0;
    for (int n = 0; n <= 4; ++n)
        for (int l = 0; l <= 4; ++l) {
            const Case c("spherical_oscillator", {}, n, l);
            const double f = c.formula().value;
            worst_closed = std::max(worst_closed, std::abs(f - (l + 1.5 + 2 * n)));
            worst_shoot = std::max(worst_shoot, std::abs(c.shoot().value - f));
        }
    o.require(worst_closed <= tol_closed, "closed-form error " + num(worst_closed));
    o.require(worst_shoot <= tol_shoot, "shooting error " + num(worst_shoot));
    o.detail << "max |dE| closed " << num(worst_closed) << ", shooting " << num(worst_shoot);
}

Case hydrogen(int N, int l) {
    return Case("noncentral_coulomb", {{"beta", 0.0}, {"gamma", 0.0}, {"n_theta", 0}}, N, 0, l);
}

void coulomb(Outcome& o) {
    double worst = 0, spread = 0;
    std::map<int, std::vector<double>> shells;
    for (int N = 0; N <= 4; ++N)
        for (int l = 0; l <= 4; ++l) {
            const double e = hydrogen(N, l).formula().value;
            worst = std::max(worst, std::abs(e + 1 / (2.0 * (N + l + 1) * (N + l + 1))));
            shells[N + l + 1].push_back(e);
        }
    for (const auto& [k, es] : shells)
        for (double e : es) spread = std::max(spread, std::abs(e - es.front()));
    o.require(worst <= tol_closed, "closed-form error " + num(worst));
    o.require(spread <= tol_closed, "degeneracy spread " + num(spread));
    o.detail << "max |dE| " << num(worst) << ", degeneracy spread " << num(spread);
}

void kratzer(Outcome& o) {
    const Case c("kratzer", {{"De", 1.0}, {"a", 1.0}, {"mu", 1.0}, {"hbar", 1.0}}, 0, 0);
    const double f = c.formula().value, s = c.shoot().value;
    o.require(std::abs(f + 0.5) <= tol_closed, "formula " + num(f));
    o.require(std::abs(f - s) <= tol_shoot, "shooting delta " + num(f - s));
    o.detail << "E = " << f << ", |formula - shooting| " << num(std::abs(f - s));
}

void manning_rosen(Outcome& o) {
    const Case c("manning_rosen", {{"alpha", 1.0}, {"Atilde", 2.0}, {"b", 1.0}, {"hbar", 1.0}, {"mu", 1.0}}, 0, 0);
    const double f = c.formula().value, a = c.aim().value, s = c.shoot().value;
    const double h = Case("hulthen", {{"delta", 1.0}, {"Z", 1.0}, {"e", 1.0}, {"mu", 1.0}, {"hbar", 1.0}}, 0, 0)
                         .formula()
                         .value;
    o.require(std::abs(f + 0.125) <= tol_closed, "formula " + num(f));
    o.require(std::abs(f - a) <= tol_aim, "aim delta " + num(f - a));
    o.require(std::abs(f - s) <= tol_shoot, "shooting delta " + num(f - s));
    o.require(h == f, "Hulthen alias differs by " + num(h - f));
    o.detail << "E = " << f << ", aim " << num(std::abs(f - a)) << ", shooting " << num(std::abs(f - s))
             << ", alias exact";
}

void eckart(Outcome& o) {
    const Case c("eckart", {{"a", 1.0}, {"alpha", 0.0}, {"beta", 1.0}}, 0, 0);
    o.detail << "closed form " << c.closed() << "; ";
    auto attempt = [&](const char* name, auto fn) {
        try {
            const double v = fn();
            o.require(std::abs(v + 0.5) <= tol_shoot, std::string(name) + " gives " + num(v));
            if (o.pass) o.detail << name << " " << v << " ";
        } catch (const Error& e) {
            o.require(false, std::string(name) + ": " + e.what());
        }
    };
    attempt("formula", [&] { return c.formula().value; });
    attempt("aim", [&] { return c.aim().value; });
    attempt("shooting", [&] { return c.shoot().value; });
}

void kg_coulomb(Outcome& o) {
    const Case c("kg_coulomb", {{"m0", 1.0}, {"c", 1.0}, {"hbar", 1.0}, {"Zalpha", 0.3}}, 0, 0);
    const auto r = c.formula();
    const double g = condition_limit(c.at(r.value), 0);
    o.require(std::abs(std::abs(r.value) - 0.9486833) <= tol_kg_abs, "|epsilon| = " + num(r.value));
    o.require(std::abs(g) <= tol_closed, "unsquared residual " + num(g));
    o.detail << "|epsilon| = " << std::abs(r.value) << ", residual " << num(g);
}

void dirac_morse(Outcome& o) {
    for (int n = 0; n <= 2; ++n) {
        const double want = (4.0 - (2 * n + 1)) / 2;
        try {
            const double v = Case("dirac_morse", {{"beta1", 2.0}, {"beta2", 1.0}}, n).formula().value;
            o.require(std::abs(v - want) <= tol_closed, "n=" + std::to_string(n) + " gives " + num(v));
            o.detail << "n=" << n << ": " << v << " ";
        } catch (const Error& e) {
            o.require(false, "n=" + std::to_string(n) + " (want " + num(want) + "): " + e.what());
        }
    }
}

void kemmer(Outcome& o) {
    double worst = 0;
    for (int n = 0; n <= 3; ++n)
        for (int l = 0; l <= 3; ++l)
            worst = std::max(worst, std::abs(Case("kemmer_oscillator", {}, n, l).formula().value - (l + 1.5 + 2 * n)));
    o.require(worst <= tol_closed, "error " + num(worst));
    o.detail << "max error " << num(worst);
}

void noncentral(Outcome& o) {
    double worst = 0;
    for (int N = 0; N <= 2; ++N)
        for (int nt = 0; nt <= 1; ++nt) {
            const Case c("noncentral_coulomb", {{"beta", 3.0}, {"gamma", 0.0}, {"n_theta", nt}}, N, 0, 1);
            const double l = effective_l_noncentral(1, 3.0, 0.0, nt);
            const double composed = -1 / (2 * (N + l + 1) * (N + l + 1));
            worst = std::max(worst, std::abs(c.formula().value - composed));
        }
    o.require(worst <= tol_closed, "composition error " + num(worst));
    bool exact = true;
    double solve_gap = 0;
    for (int N = 0; N <= 2; ++N)
        for (int m = 0; m <= 2; ++m)
            for (int nt = 0; nt <= 1; ++nt) {
                const Case c("noncentral_coulomb", {{"beta", 0.0}, {"gamma", 0.0}, {"n_theta", nt}}, N, 0, m);
                const double principal = N + 1 + nt + m;
                exact = exact && c.closed() == -1 / (2 * principal * principal);
                solve_gap = std::max(solve_gap, std::abs(c.formula().value + 1 / (2 * principal * principal)));
            }
    o.require(exact, "reduction to hydrogen not exact");
    o.require(solve_gap <= tol_closed, "reduced solve error " + num(solve_gap));
    o.detail << "composition error " << num(worst) << ", reduction exact, solver " << num(solve_gap);
}

void properties(Outcome& o) {
    // terminating hypergeometric equations
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double hyper = 0;
    for (int n : {1, 2, 5, 10})
        for (int i = 0; i < 20; ++i) {
            const double x = unit(rng), b = 3.25, c = 1.5;
            const auto g = TerminatingSeries::gauss(n, b, c);
            const auto k = TerminatingSeries::kummer(n, c);
            hyper = std::max(hyper, std::abs(x * (1 - x) * g.derivative(x, 2) + (c - (-n + b + 1) * x) * g.derivative(x, 1) +
                                             n * b * g(x)));
            hyper = std::max(hyper, std::abs(x * k.derivative(x, 2) + (c - x) * k.derivative(x, 1) + n * k(x)));
        }
    o.require(hyper <= tol_hyper_ode, "hypergeometric residual " + num(hyper));

    // canonical equation residual at every fixture
    const std::vector<Case> fixtures{
        Case("spherical_oscillator", {}, 2, 1), Case("manning_rosen", {}, 0), Case("hulthen", {}, 0),
        Case("eckart", {{"alpha", 4.0}}, 0), Case("kratzer", {}, 0), Case("noncentral_coulomb", {{"beta", 3.0}}, 1, 0, 1),
        Case("kg_coulomb", {}, 0), Case("kg_eckart", {}, 0), Case("dirac_morse", {}, 0), Case("dirac_morse", {}, 1),
        Case("kemmer_oscillator", {}, 2, 3)};
    double wave = 0;
    for (const auto& c : fixtures) wave = std::max(wave, c.formula().residual_ode);
    o.require(wave <= tol_wave_ode, "wavefunction residual " + num(wave));

    // first four termination rungs
    const Case mr("manning_rosen", {{"Atilde", 40.0}}, 0);
    const auto ladder = aim_termination_ladder(mr.map(), mr.unknown(), 4);
    double rung_err = ladder.size() == 4 ? 0 : INFINITY;
    for (std::size_t k = 0; k < ladder.size(); ++k) {
        if (ladder[k].size() != 1) {
            rung_err = INFINITY;
            break;
        }
        const auto c = mr.at(ladder[k][0]);
        const double rung = -(c.k2() + (2.0 * k - 1) * c.k3() - std::sqrt((c.k3() - c.k2()) * (c.k3() - c.k2()) - 4 * c.A())) /
                            (2 * c.k3());
        rung_err = std::max(rung_err, std::abs(compute_k4(c) + compute_k5(c) - rung));
    }
    o.require(rung_err <= tol_ladder, "ladder error " + num(rung_err));

    // Numerov order under grid halving
    const Case osc("spherical_oscillator", {}, 0);
    const auto p = *osc.radial();
    const auto [lo, hi] = osc.spec->shooting_bracket(osc.params, osc.qn);
    const double e1 = std::abs(shoot_eigenvalue(p, 0, lo, hi, ShootOptions{400}).value - 1.5);
    const double e2 = std::abs(shoot_eigenvalue(p, 0, lo, hi, ShootOptions{800}).value - 1.5);
    const double factor = e1 / e2;
    o.require(factor >= numerov_lo && factor <= numerov_hi, "Numerov factor " + num(factor));

    // k3 -> 0 continuity of the scaled exponent
    const double k1 = 1.5, k2 = 0.3, A = -0.8, B = 0.4, C = -0.5;
    const double lim = compute_k5(CanonicalCoefficients(k1, k2, 0, A, B, C));
    double prev = INFINITY;
    bool monotone = true;
    for (double t : {1e-3, 1e-5, 1e-7}) {
        const double err = std::abs(t * compute_k5(CanonicalCoefficients(k1, k2, t, A, B, C)) - lim);
        monotone = monotone && err < prev;
        prev = err;
    }
    o.require(monotone, "k3 continuity not monotone");
    o.detail << "hypergeom " << num(hyper) << ", wavefunction " << num(wave) << ", ladder " << num(rung_err)
             << ", Numerov factor " << num(factor) << ", continuity monotone";
}

void cli(Outcome& o) {
    const std::vector<std::string> args{"solve", "--model", "manning_rosen", "--n", "0..2", "--l", "0..1",
                                        "--param", "Atilde=20", "--engine", "all"};
    int c1 = -1, c2 = -1, v_ok = -1, v_bad = -1;
    const auto a = run_cli_capture(args, c1), b = run_cli_capture(args, c2);
    o.require(c1 == 0 && c2 == 0, "solve exit codes " + std::to_string(c1) + "," + std::to_string(c2));
    o.require(a == b && !a.empty(), "solve output differs between runs");
    run_cli_capture({"verify", "--model", "spherical_oscillator", "--n", "0..2"}, v_ok);
    run_cli_capture({"verify", "--model", "spherical_oscillator", "--n", "0..2", "--tol", "shooting=1e-15"}, v_bad);
    o.require(v_ok == exit_ok, "verify exit " + std::to_string(v_ok));
    o.require(v_bad == exit_disagreement, "forced-failure verify exit " + std::to_string(v_bad));
    o.detail << "byte-identical, verify exits " << v_ok << " / " << v_bad;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
        {"oscillator spectrum", oscillator},
        {"Coulomb spectrum and degeneracy", coulomb},
        {"Kratzer fixture", kratzer},
        {"Manning-Rosen fixture", manning_rosen},
        {"Eckart fixture", eckart},
        {"Klein-Gordon Coulomb", kg_coulomb},
        {"Dirac-Morse levels", dirac_morse},
        {"Kemmer oscillator", kemmer},
        {"non-central Coulomb", noncentral},
        {"property suites", properties},
        {"CLI determinism and exit codes", cli},
    };
    const int only = argc > 1 ? std::atoi(argv[1]) : 0;
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (only && only != id) continue;
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("error: ") + e.what());
        }
        std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first, o.detail.str().c_str());
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bsf/error.hpp"
#include "support.hpp"

using namespace bsf;
using bsf::testing::Case;

TEST_CASE("matching mismatch around the oscillator ground state") {
    const auto p = *Case("spherical_oscillator", {}, 0).radial();
    CHECK(std::abs(matching_mismatch(p, 1.5, default_grid(p, 1.5))) < 1e-8);
    const double lo = matching_mismatch(p, 1.4, default_grid(p, 1.5));
    const double hi = matching_mismatch(p, 1.6, default_grid(p, 1.5));
    CHECK(lo * hi < 0);
}

TEST_CASE("Numerov on a constant potential is fourth order") {
    const double kappa = 1.3;
    auto error = [&](std::size_t points) {
        const double h = 2.0 / static_cast<double>(points - 1);
        std::vector<double> Q(points, kappa * kappa);
        const auto y = numerov(Q, h, 1.0, std::exp(kappa * h), Direction::Outward);
        return std::abs(y.back() - std::exp(kappa * 2.0)) / std::exp(kappa * 2.0);
    };
    const double e1 = error(101), e2 = error(201);
    CHECK(e1 < 1e-7);
    CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.1));
}

TEST_CASE("shooting on reference problems") {
    const auto h = Case("noncentral_coulomb", {{"beta", 0}, {"gamma", 0}}, 0, 0, 0).shoot();
    CHECK(std::abs(h.value + 0.5) <= 1e-7);
    CHECK(h.engine == Engine::Shooting);
    REQUIRE(h.node_count);
    CHECK(*h.node_count == 0);
    CHECK(std::abs(Case("kratzer", {}, 0).shoot().value + 0.5) <= 1e-6);
}

TEST_CASE("centrifugal approximation parity") {
    const Case mr("manning_rosen", {{"Atilde", 10.0}}, 0, 1);
    const double formula = mr.formula().value;
    const double approx = mr.shoot(Centrifugal::Approximated).value;
    const double exact = mr.shoot(Centrifugal::Exact).value;
    CHECK(std::abs(approx - formula) <= 1e-6 * std::max(1.0, std::abs(formula)));
    MESSAGE("true centrifugal term shifts the level by " << exact - formula);
    CHECK(std::abs(exact - formula) > 1e-6);
}

TEST_CASE("bisection fails when the bracket cannot hold the level") {
    const auto p = *Case("kratzer", {}, 0).radial();
    CHECK_THROWS_AS(shoot_eigenvalue(p, 0, -0.1, -0.05, ShootOptions{4000, 1e-13, 0}), Error);
}

TEST_CASE("normalization of the oscillator ground state") {
    auto gauss = [](double r) { return std::exp(-r * r / 2); };
    const auto n = normalize(gauss, 0.0, 12.0, Measure::R2DR);
    const double exact = 2 / std::pow(std::numbers::pi, 0.25);
    CHECK(std::abs(n.constant - exact) <= 1e-7);
    auto unit = [&](double r) { return exact * gauss(r); };
    CHECK(std::abs(normalize(unit, 0.0, 12.0, Measure::R2DR).constant - 1) <= 1e-8);
    const auto fine = normalize(gauss, 0.0, 12.0, Measure::R2DR, 1e-12);
    CHECK(std::abs(fine.constant - n.constant) <= 1e-8);
    CHECK_THROWS_AS(normalize([](double) { return 1.0; }, 0.0, 5.0, Measure::DR), Error);
}

TEST_CASE("normalization of samples") {
    std::vector<double> r, v;
    for (int i = 0; i < 401; ++i) {
        r.push_back(12.0 * i / 400);
        v.push_back(std::exp(-r.back() * r.back() / 2));
    }
    const auto s = normalize(r, v, Measure::R2DR);
    CHECK(std::abs(s.constant - 2 / std::pow(std::numbers::pi, 0.25)) <= 1e-7);
    CHECK(s.values.size() == v.size());
    r.pop_back();
    v.pop_back();
    CHECK(std::abs(normalize(r, v, Measure::R2DR).constant - s.constant) <= 1e-7);
}

TEST_CASE("node counts match the polynomial roots") {
    for (int n = 0; n <= 3; ++n) {
        const Case osc("spherical_oscillator", {}, n, 1);
        const auto sh = osc.shoot();
        REQUIRE(sh.node_count);
        CHECK(*sh.node_count == n);
        const auto f = osc.formula();
        const auto psi = build_wavefunction(osc.at(f.value), *f.params, n);
        CHECK(psi.polynomial().count_roots(psi.polynomial_argument(0), psi.polynomial_argument(60)) == n);
    }
    const Case mr("manning_rosen", {{"Atilde", 20.0}}, 2, 1);
    const auto f = mr.formula();
    const auto psi = build_wavefunction(mr.at(f.value), *f.params, 2);
    CHECK(psi.polynomial().count_roots(psi.polynomial_argument(0), psi.polynomial_argument(1)) == 2);
    CHECK(*mr.shoot().node_count == 2);
}

TEST_CASE("Numerov convergence under grid halving") {
    const Case osc("spherical_oscillator", {}, 0);
    const auto p = *osc.radial();
    const auto [lo, hi] = osc.spec->shooting_bracket(osc.params, osc.qn);
    const double e1 = std::abs(shoot_eigenvalue(p, 0, lo, hi, ShootOptions{400}).value - 1.5);
    const double e2 = std::abs(shoot_eigenvalue(p, 0, lo, hi, ShootOptions{800}).value - 1.5);
    MESSAGE("error ratio " << e1 / e2);
    CHECK(e1 / e2 >= 8);
    CHECK(e1 / e2 <= 32);
}

#include <doctest.h>

#include <cmath>

#include "bsf/error.hpp"
#include "support.hpp"

using namespace bsf;
using bsf::testing::Case;

TEST_CASE("series arithmetic basics") {
    const auto zero = TruncatedSeries::constant(0.0, 4, 3.0).derivative();
    for (double c : zero.coeffs()) CHECK(c == 0.0);
    const TruncatedSeries a(0.0, {1, 1, 0}), b(0.0, {1, -1, 0});
    const auto p = series_arith(a, b, SeriesOp::Mul);
    CHECK(p.coeffs() == std::vector<double>{1, 0, -1});
    const auto q = series_arith(a, b, SeriesOp::Add);
    CHECK(q.coeffs() == std::vector<double>{2, 0, 0});
}

TEST_CASE("derivative of the exponential series") {
    std::vector<double> c(6);
    double f = 1;
    for (int k = 0; k < 6; ++k) {
        if (k > 0) f *= k;
        c[k] = 1 / f;
    }
    const auto d = series_arith(TruncatedSeries(0.0, c), TruncatedSeries(0.0, c), SeriesOp::Derivative);
    REQUIRE(d.order() == 4);
    for (int k = 0; k <= 4; ++k) CHECK(d[k] == doctest::Approx(c[k]).epsilon(1e-15));
}

TEST_CASE("series errors") {
    CHECK_THROWS_AS(series_arith(TruncatedSeries(0.0, {1, 2}), TruncatedSeries(1.0, {1, 2}), SeriesOp::Add), Error);
    CHECK_THROWS_AS(TruncatedSeries(0.0, {1}).derivative(), Error);
    const auto r = TruncatedSeries(0.0, {1, -1, 0, 0}).reciprocal();
    for (int k = 0; k <= 3; ++k) CHECK(r[k] == doctest::Approx(1.0));
}

TEST_CASE("iteration with constant seeds") {
    const double l0 = 1.7, s0 = -0.6;
    const auto st0 = aim_start(TruncatedSeries::constant(0.5, 6, l0), TruncatedSeries::constant(0.5, 6, s0));
    const auto st1 = aim_iterate(st0);
    CHECK(st1.k == 1);
    CHECK(st1.lambda.value() == doctest::Approx(s0 + l0 * l0));
    CHECK(st1.s.value() == doctest::Approx(s0 * l0));
    CHECK(aim_delta(st1) == doctest::Approx(s0 * s0));
    CHECK_THROWS_AS(aim_delta(st0), Error);
    const auto again = aim_iterate(st0);
    CHECK(aim_iterate(again).lambda.coeffs() == aim_iterate(st1).lambda.coeffs());
}

TEST_CASE("delta brackets the oscillator ground state") {
    const Case osc("spherical_oscillator", {}, 0);
    const double x0 = aim_default_x0(osc.at(1.5));
    const auto lo = aim_deltas(osc.at(1.4), x0, 6), hi = aim_deltas(osc.at(1.6), x0, 6);
    const auto at = aim_deltas(osc.at(1.5), x0, 6);
    for (int k = 1; k <= 6; ++k) {
        CHECK(lo[k - 1] * hi[k - 1] < 0);
        const double scale = std::max(std::abs(lo[k - 1]), std::abs(hi[k - 1]));
        CHECK(std::abs(at[k - 1]) <= 1e-8 * scale);
    }
    const auto off = aim_deltas(osc.at(1.6), x0, 4);
    CHECK(std::abs(off.back()) > 0);
}

TEST_CASE("aim_solve reproduces known levels") {
    const auto mr = Case("manning_rosen", {}, 0).aim();
    CHECK(mr.engine == Engine::Aim);
    CHECK(std::abs(mr.value + 0.125) <= 1e-8);
    CHECK(std::abs(Case("spherical_oscillator", {}, 2, 1).aim().value - 6.5) <= 1e-8);
    const Case eck("eckart", {{"alpha", 8.0}}, 1);
    CHECK(std::abs(eck.aim().value - eck.formula().value) <= 1e-8);
}

TEST_CASE("aim gives up when k_max leaves no room") {
    const Case osc("spherical_oscillator", {}, 1);
    AimOptions o;
    o.k_max = 1;
    CHECK_THROWS_AS(aim_solve(osc.map(), osc.unknown(), 1, o), Error);
}

TEST_CASE("parameter identification matches the wavefunction parameters") {
    for (const Case& c : {Case("manning_rosen", {{"Atilde", 10.0}}, 1, 1), Case("hulthen", {}, 0),
                          Case("eckart", {{"alpha", 20.0}}, 1, 2), Case("kg_eckart", {}, 0, 1)}) {
        const auto r = c.formula();
        const auto coeffs = c.at(r.value);
        const auto id = identify_parameters(coeffs, aim_default_x0(coeffs));
        const double k4 = r.params->k4, k5 = r.params->k5;
        CHECK(std::abs(id.sigma - (2 * k4 + coeffs.k1())) <= 1e-12 * std::max(1.0, std::abs(id.sigma)));
        CHECK(std::abs(id.rho - (2 * (k4 + k5) + coeffs.k2() / coeffs.k3() - 1)) <= 1e-12 * std::max(1.0, std::abs(id.rho)));
    }
}

TEST_CASE("termination ladder follows the rung progression") {
    const Case mr("manning_rosen", {{"Atilde", 40.0}}, 0);
    const auto ladder = aim_termination_ladder(mr.map(), mr.unknown(), 4);
    REQUIRE(ladder.size() == 4);
    for (int k = 0; k < 4; ++k) {
        REQUIRE(ladder[k].size() == 1);
        const auto c = mr.at(ladder[k][0]);
        const double k45 = compute_k4(c) + compute_k5(c);
        const double rung = -(c.k2() + (2 * k - 1) * c.k3() - std::sqrt((c.k3() - c.k2()) * (c.k3() - c.k2()) - 4 * c.A())) /
                            (2 * c.k3());
        CHECK(std::abs(k45 - rung) <= 1e-8);
        CHECK(std::abs(ladder[k][0] - Case("manning_rosen", {{"Atilde", 40.0}}, k).formula().value) <= 1e-8);
    }
}

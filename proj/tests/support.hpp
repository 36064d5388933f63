#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "bsf/aim.hpp"
#include "bsf/catalog.hpp"
#include "bsf/formula.hpp"
#include "bsf/shooting.hpp"

namespace bsf::testing {

/// A model fixed at one parameter set and one set of quantum numbers.
struct Case {
    const ModelSpec* spec;
    ParameterSet params;
    QuantumNumbers qn;

    Case(const std::string& id, const ParameterSet& overrides, int n, double l = 0.0,
         std::optional<int> m = std::nullopt, std::optional<double> j = std::nullopt)
        : spec(&find_model(id)), params(spec->resolve(overrides)) {
        qn = spec->prepare(params, QuantumNumbers{n, l, m, j});
    }

    CoefficientMap map() const { return spec->bind(params, qn); }
    SpectralUnknown unknown() const { return spec->unknown(params, qn); }
    CanonicalCoefficients at(double v) const { return spec->coefficients(v, params, qn); }

    std::vector<EigenResult> formula_all() const { return solve_eigenvalue(map(), unknown(), qn.n); }
    EigenResult formula() const { return formula_all().front(); }
    EigenResult aim() const { return aim_solve(map(), unknown(), qn.n); }

    std::optional<RadialProblem> radial(Centrifugal kind = Centrifugal::Approximated) const {
        return spec->radial_problem(params, qn, kind);
    }
    EigenResult shoot(Centrifugal kind = Centrifugal::Approximated) const {
        const auto rp = radial(kind);
        if (!rp) throw std::logic_error("model has no radial problem");
        const auto [lo, hi] = spec->shooting_bracket(params, qn);
        return shoot_eigenvalue(*rp, qn.n, lo, hi);
    }
    double closed() const { return spec->closed_form(params, qn); }
};

inline double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace bsf::testing

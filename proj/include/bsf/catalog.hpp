#pragma once

#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bsf/canonical.hpp"
#include "bsf/formula.hpp"
#include "bsf/shooting.hpp"

namespace bsf {

enum class EquationKind { Schrodinger, KleinGordon, Dirac, Kemmer };

const char* to_string(EquationKind kind) noexcept;

using ParameterSet = std::map<std::string, double>;

struct ParameterInfo {
    std::string name;
    double value;
    double min = -std::numeric_limits<double>::infinity();
    double max = std::numeric_limits<double>::infinity();
    bool exclusive_min = false;
    bool integer = false;
    std::string description;
};

enum class Centrifugal { Approximated, Exact };

/// One exactly solvable application of the canonical equation.
struct ModelSpec {
    std::string id;
    std::string description;
    EquationKind kind = EquationKind::Schrodinger;
    std::vector<ParameterInfo> parameters;
    std::string unknown_name;
    std::string unknown_units;
    std::string transform_note;
    Measure measure = Measure::DR;
    std::string notes;

    /// Checks coupled validity conditions and fills derived quantum numbers
    /// (the effective l of the non-central model).
    std::function<QuantumNumbers(const ParameterSet&, QuantumNumbers)> prepare;
    std::function<SpectralUnknown(const ParameterSet&, const QuantumNumbers&)> unknown;
    std::function<CanonicalCoefficients(double, const ParameterSet&, const QuantumNumbers&)> coefficients;
    std::function<double(double r, const ParameterSet&)> to_s;
    std::function<double(double s, const ParameterSet&)> from_s;
    double domain_r_lo = 0.0;
    double domain_r_hi = std::numeric_limits<double>::infinity();
    std::function<std::pair<double, double>(const ParameterSet&)> domain_s;
    std::function<double(const ParameterSet&, const QuantumNumbers&)> closed_form;
    /// Original r-space equation for the shooting oracle; absent where it does not apply.
    std::function<std::optional<RadialProblem>(const ParameterSet&, const QuantumNumbers&, Centrifugal)> radial_problem;
    std::function<std::pair<double, double>(const ParameterSet&, const QuantumNumbers&)> shooting_bracket;
    /// Physical energy from the spectral unknown when the two differ.
    std::function<double(double, const ParameterSet&, const QuantumNumbers&)> physical_energy;

    bool has_closed_form() const noexcept { return static_cast<bool>(closed_form); }
    ParameterSet defaults() const;
    /// Defaults overlaid with overrides; rejects unknown names and out-of-range values.
    ParameterSet resolve(const ParameterSet& overrides) const;
    CoefficientMap bind(const ParameterSet& params, const QuantumNumbers& qn) const;
};

const std::vector<ModelSpec>& catalog_list();
const ModelSpec& find_model(const std::string& id);

/// l = n_theta + sqrt(((m^2 + beta) + sqrt((m^2 + beta)^2 - gamma^2)) / 2).
double effective_l_noncentral(int m, double beta, double gamma, int n_theta);

/// Canonical map of the polar equation of the ring-shaped Coulomb model; the
/// spectral unknown is the separation constant l, s = (cos(theta) - 1)/2.
CanonicalCoefficients noncentral_angular_coefficients(double l, int m, double beta, double gamma);
CoefficientMap noncentral_angular_map(int m, double beta, double gamma);
SpectralUnknown noncentral_angular_unknown(int m, double beta, double gamma, int n_theta);

}  // namespace bsf

#include "bsf/catalog.hpp"

#include <algorithm>
#include <cmath>

#include "bsf/error.hpp"

namespace bsf {

const char* to_string(EquationKind kind) noexcept {
    switch (kind) {
        case EquationKind::Schrodinger: return "schrodinger";
        case EquationKind::KleinGordon: return "klein_gordon";
        case EquationKind::Dirac: return "dirac";
        case EquationKind::Kemmer: return "kemmer";
    }
    return "?";
}

ParameterSet ModelSpec::defaults() const {
    ParameterSet p;
    for (const auto& info : parameters) p[info.name] = info.value;
    return p;
}

ParameterSet ModelSpec::resolve(const ParameterSet& overrides) const {
    ParameterSet p = defaults();
    for (const auto& [name, value] : overrides) {
        const auto it = std::find_if(parameters.begin(), parameters.end(), [&](const auto& i) { return i.name == name; });
        if (it == parameters.end()) throw Error(ErrorKind::InvalidArgument, "model " + id + " has no parameter " + name);
        p[name] = value;
    }
    for (const auto& info : parameters) {
        const double v = p[info.name];
        const bool below = info.exclusive_min ? v <= info.min : v < info.min;
        if (!std::isfinite(v) || below || v > info.max)
            throw Error(ErrorKind::InvalidArgument, "parameter " + info.name + " = " + std::to_string(v) +
                                                        " outside its valid range for " + id);
        if (info.integer && v != std::round(v))
            throw Error(ErrorKind::InvalidArgument, "parameter " + info.name + " must be an integer");
    }
    return p;
}

CoefficientMap ModelSpec::bind(const ParameterSet& params, const QuantumNumbers& qn) const {
    return [f = coefficients, params, qn](double v) { return f(v, params, qn); };
}

double effective_l_noncentral(int m, double beta, double gamma, int n_theta) {
    const double mb = m * m + beta;
    if (mb * mb < gamma * gamma || mb + gamma < 0 || mb - gamma < 0)
        throw Error(ErrorKind::ComplexAngularRoot, "m^2 + beta must dominate |gamma|");
    return n_theta + std::sqrt((mb + std::sqrt(mb * mb - gamma * gamma)) / 2);
}

CanonicalCoefficients noncentral_angular_coefficients(double l, int m, double beta, double gamma) {
    const double ll = l * (l + 1);
    return {1.0, -2.0, -1.0, -ll, -ll - gamma / 2, -(m * m + beta + gamma) / 4};
}

CoefficientMap noncentral_angular_map(int m, double beta, double gamma) {
    return [=](double l) { return noncentral_angular_coefficients(l, m, beta, gamma); };
}

SpectralUnknown noncentral_angular_unknown(int m, double beta, double gamma, int n_theta) {
    const double hi = n_theta + 2 * std::sqrt(m * m + std::abs(beta) + std::abs(gamma)) + 2;
    return {"l", 0.0, hi, "dimensionless"};
}

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

ParameterInfo positive(std::string name, double value, std::string description) {
    return {std::move(name), value, 0.0, inf, true, false, std::move(description)};
}

ParameterInfo real(std::string name, double value, std::string description) {
    return {std::move(name), value, -inf, inf, false, false, std::move(description)};
}

double ell(const QuantumNumbers& qn) {
    return qn.l * (qn.l + 1);
}

std::pair<double, double> half_line(const ParameterSet&) {
    return {0.0, inf};
}

std::pair<double, double> unit_interval(const ParameterSet&) {
    return {0.0, 1.0};
}

QuantumNumbers pass_through(const ParameterSet&, QuantumNumbers qn) {
    validate(qn);
    return qn;
}

// ---------------------------------------------------------------- oscillator

ModelSpec spherical_oscillator() {
    ModelSpec s;
    s.id = "spherical_oscillator";
    s.description = "3D isotropic harmonic oscillator, Schrodinger";
    s.parameters = {positive("m", 1, "mass"), positive("omega", 1, "angular frequency"),
                    positive("hbar", 1, "reduced Planck constant")};
    s.unknown_name = "E";
    s.unknown_units = "energy";
    s.transform_note = "s = r^2";
    s.measure = Measure::R2DR;
    s.prepare = pass_through;
    s.unknown = [](const ParameterSet& p, const QuantumNumbers& qn) {
        return SpectralUnknown("E", 0.0, (2 * (2 * qn.n + qn.l) + 6) * p.at("hbar") * p.at("omega"), "energy");
    };
    s.coefficients = [](double E, const ParameterSet& p, const QuantumNumbers& qn) {
        const double m = p.at("m"), w = p.at("omega"), h = p.at("hbar");
        return CanonicalCoefficients(1.5, 0, 0, -m * m * w * w / (4 * h * h), m * E / (2 * h * h), -ell(qn) / 4);
    };
    s.to_s = [](double r, const ParameterSet&) { return r * r; };
    s.from_s = [](double x, const ParameterSet&) { return std::sqrt(x); };
    s.domain_s = half_line;
    s.closed_form = [](const ParameterSet& p, const QuantumNumbers& qn) {
        return (qn.l + 1.5 + 2 * qn.n) * p.at("hbar") * p.at("omega");
    };
    s.radial_problem = [](const ParameterSet& p, const QuantumNumbers& qn, Centrifugal) -> std::optional<RadialProblem> {
        const double m = p.at("m"), w = p.at("omega"), h = p.at("hbar");
        const double k = m * w / h, l2 = ell(qn);
        RadialProblem rp;
        rp.q = [=](double r, double E) { return l2 / (r * r) + k * k * r * r - 2 * m * E / (h * h); };
        rp.scale = std::sqrt(h / (m * w));
        rp.r_max = 100 * rp.scale;
        rp.measure = Measure::R2DR;
        rp.substitution = "u = r R";
        return rp;
    };
    s.shooting_bracket = [](const ParameterSet& p, const QuantumNumbers& qn) {
        return std::pair{0.0, (2 * (2 * qn.n + qn.l) + 6) * p.at("hbar") * p.at("omega")};
    };
    return s;
}

// ------------------------------------------------------ Manning-Rosen family

struct ManningRosen {
    double hbar, mu, b, alpha, At, D0, D1, D2;

    static ManningRosen from(const ParameterSet& p) {
        return {p.at("hbar"), p.at("mu"), p.at("b"), p.at("alpha"), p.at("Atilde"), p.at("D0"), p.at("D1"), p.at("D2")};
    }
    double unit() const { return hbar * hbar / (2 * mu * b * b); }
    double beta1(double l2) const { return At - l2 * D1; }
    double beta2(double l2) const { return alpha * (alpha - 1) + l2 * D2; }
    double threshold(double l2) const { return unit() * l2 * D0; }

    CanonicalCoefficients coefficients(double E, double l2) const {
        const double xi2 = -E / unit() + l2 * D0;
        const double b1 = beta1(l2), b2 = beta2(l2);
        return {1, 1, 1, -xi2 - b1 - b2, 2 * xi2 + b1, -xi2};
    }
    double closed_form(int n, double l2) const {
        const double b2 = beta2(l2);
        const double K = n + 0.5 * (1 + std::sqrt(1 + 4 * b2));
        const double xi = (beta1(l2) + b2 - K * K) / (2 * K);
        return unit() * (l2 * D0 - xi * xi);
    }
    SpectralUnknown unknown(double l2) const {
        const double depth = std::abs(beta1(l2)) + std::abs(beta2(l2)) + 2;
        return {"E", -unit() * depth * depth, threshold(l2), "energy"};
    }
    RadialProblem radial(double l2, Centrifugal c) const {
        const ManningRosen mr = *this;
        RadialProblem rp;
        rp.q = [mr, l2, c](double r, double E) {
            const double y = 1 / std::expm1(r / mr.b);
            const double cent = c == Centrifugal::Approximated ? l2 * (mr.D0 + mr.D1 * y + mr.D2 * y * y) / (mr.b * mr.b)
                                                               : l2 / (r * r);
            return -E / (mr.unit() * mr.b * mr.b) + (mr.alpha * (mr.alpha - 1) * y * y - mr.At * y) / (mr.b * mr.b) +
                   cent;
        };
        rp.scale = b;
        rp.r_max = 2000 * b;
        rp.e_max = c == Centrifugal::Approximated ? threshold(l2) : 0.0;
        rp.measure = Measure::DR;
        rp.substitution = "u is the reduced radial function";
        return rp;
    }
};

void fill_manning_rosen_like(ModelSpec& s, std::function<ManningRosen(const ParameterSet&)> view) {
    s.unknown_name = "E";
    s.unknown_units = "energy";
    s.measure = Measure::DR;
    s.prepare = pass_through;
    s.unknown = [view](const ParameterSet& p, const QuantumNumbers& qn) { return view(p).unknown(ell(qn)); };
    s.coefficients = [view](double E, const ParameterSet& p, const QuantumNumbers& qn) {
        return view(p).coefficients(E, ell(qn));
    };
    s.to_s = [view](double r, const ParameterSet& p) { return std::exp(-r / view(p).b); };
    s.from_s = [view](double z, const ParameterSet& p) { return -view(p).b * std::log(z); };
    s.domain_s = unit_interval;
    s.closed_form = [view](const ParameterSet& p, const QuantumNumbers& qn) {
        return view(p).closed_form(qn.n, ell(qn));
    };
    s.radial_problem = [view](const ParameterSet& p, const QuantumNumbers& qn,
                              Centrifugal c) -> std::optional<RadialProblem> { return view(p).radial(ell(qn), c); };
    s.shooting_bracket = [view](const ParameterSet& p, const QuantumNumbers& qn) {
        const auto u = view(p).unknown(ell(qn));
        return std::pair{u.lo, u.hi};
    };
}

std::vector<ParameterInfo> centrifugal_constants() {
    return {real("D0", 1.0 / 12, "centrifugal approximation constant term"),
            real("D1", 1, "centrifugal approximation first-order term"),
            real("D2", 1, "centrifugal approximation second-order term")};
}

ModelSpec manning_rosen() {
    ModelSpec s;
    s.id = "manning_rosen";
    s.description = "Manning-Rosen potential, Schrodinger, approximated centrifugal term";
    s.parameters = {positive("hbar", 1, "reduced Planck constant"), positive("mu", 1, "reduced mass"),
                    positive("b", 1, "range"), real("alpha", 1, "dimensionless strength of the 1/(e^{r/b}-1)^2 term"),
                    real("Atilde", 2, "dimensionless strength of the 1/(e^{r/b}-1) term")};
    for (auto& d : centrifugal_constants()) s.parameters.push_back(d);
    s.transform_note = "z = exp(-r/b)";
    s.notes = "l(l+1)/r^2 ~ (D0 + D1 y + D2 y^2)/b^2 with y = 1/(e^{r/b} - 1)";
    fill_manning_rosen_like(s, ManningRosen::from);
    return s;
}

ManningRosen hulthen_view(const ParameterSet& p) {
    const double hbar = p.at("hbar"), mu = p.at("mu"), delta = p.at("delta");
    const double Ze2 = p.at("Z") * p.at("e") * p.at("e");
    return {hbar, mu, 1 / delta, 1.0, 2 * mu * Ze2 / (hbar * hbar * delta), p.at("D0"), p.at("D1"), p.at("D2")};
}

ModelSpec hulthen() {
    ModelSpec s;
    s.id = "hulthen";
    s.description = "Hulthen potential as the alpha = 1 Manning-Rosen case";
    s.parameters = {positive("Z", 1, "charge number"), positive("e", 1, "elementary charge"),
                    positive("delta", 1, "screening parameter"), positive("mu", 1, "reduced mass"),
                    positive("hbar", 1, "reduced Planck constant")};
    for (auto& d : centrifugal_constants()) s.parameters.push_back(d);
    s.transform_note = "z = exp(-delta r)";
    s.notes = "b = 1/delta, Atilde = 2 mu Z e^2 / (hbar^2 delta), alpha = 1";
    fill_manning_rosen_like(s, hulthen_view);
    return s;
}

// --------------------------------------------------------------------- Eckart

ModelSpec eckart() {
    ModelSpec s;
    s.id = "eckart";
    s.description = "Eckart potential, Schrodinger (hbar = mu = 1), approximated centrifugal term";
    s.parameters = {positive("a", 1, "range"), real("alpha", 4, "attractive strength"),
                    real("beta", 1, "repulsive strength")};
    s.unknown_name = "E";
    s.unknown_units = "energy";
    s.transform_note = "z = exp(-r/a)";
    s.notes = "l(l+1)/r^2 ~ z/(a^2 (1 - z)^2)";
    s.measure = Measure::DR;
    s.prepare = pass_through;
    s.unknown = [](const ParameterSet& p, const QuantumNumbers&) {
        const double a = p.at("a"), al = std::abs(p.at("alpha"));
        return SpectralUnknown("E", -(2 * a * a * al * al + 2 * al + 1), 0.0, "energy");
    };
    s.coefficients = [](double E, const ParameterSet& p, const QuantumNumbers& qn) {
        const double a2 = p.at("a") * p.at("a"), al = p.at("alpha"), be = p.at("beta");
        return CanonicalCoefficients(1, 1, 1, 2 * a2 * (E - al), 2 * a2 * (al - be - 2 * E) - ell(qn), 2 * a2 * E);
    };
    s.to_s = [](double r, const ParameterSet& p) { return std::exp(-r / p.at("a")); };
    s.from_s = [](double z, const ParameterSet& p) { return -p.at("a") * std::log(z); };
    s.domain_s = unit_interval;
    s.closed_form = [](const ParameterSet& p, const QuantumNumbers& qn) {
        const double a = p.at("a"), al = p.at("alpha"), be = p.at("beta");
        const double K = qn.n + 0.5 + 0.5 * std::sqrt((2 * qn.l + 1) * (2 * qn.l + 1) + 8 * be * a * a);
        const double t = (2 * al * a * a + K * K) / K;
        return al - t * t / (8 * a * a);
    };
    s.radial_problem = [](const ParameterSet& p, const QuantumNumbers& qn, Centrifugal c) -> std::optional<RadialProblem> {
        const double a = p.at("a"), al = p.at("alpha"), be = p.at("beta"), l2 = ell(qn);
        RadialProblem rp;
        rp.q = [=](double r, double E) {
            const double z = std::exp(-r / a), w = -std::expm1(-r / a);
            const double cent = c == Centrifugal::Approximated ? l2 * z / (a * a * w * w) : l2 / (r * r);
            return -2 * E + 2 * be * z / (w * w) - 2 * al * z / w + cent;
        };
        rp.scale = a;
        rp.r_max = 2000 * a;
        rp.e_max = 0.0;
        rp.measure = Measure::DR;
        rp.substitution = "R is the reduced radial function";
        return rp;
    };
    s.shooting_bracket = [](const ParameterSet& p, const QuantumNumbers&) {
        const double a = p.at("a"), al = std::abs(p.at("alpha"));
        return std::pair{-(2 * a * a * al * al + 2 * al + 1), 0.0};
    };
    return s;
}

// -------------------------------------------------------------------- Kratzer

ModelSpec kratzer() {
    ModelSpec s;
    s.id = "kratzer";
    s.description = "Kratzer molecular potential, Schrodinger";
    s.parameters = {positive("mu", 1, "reduced mass"), positive("hbar", 1, "reduced Planck constant"),
                    positive("De", 1, "dissociation energy"), positive("a", 1, "equilibrium distance")};
    s.unknown_name = "E";
    s.unknown_units = "energy";
    s.transform_note = "s = r";
    s.measure = Measure::DR;
    s.prepare = pass_through;
    auto depth = [](const ParameterSet& p) {
        return 8 * p.at("mu") * p.at("De") * p.at("De") * p.at("a") * p.at("a") / (p.at("hbar") * p.at("hbar")) + 1;
    };
    s.unknown = [depth](const ParameterSet& p, const QuantumNumbers&) {
        return SpectralUnknown("E", -depth(p), 0.0, "energy");
    };
    s.coefficients = [](double E, const ParameterSet& p, const QuantumNumbers& qn) {
        const double mu = p.at("mu"), h2 = p.at("hbar") * p.at("hbar"), De = p.at("De"), a = p.at("a");
        return CanonicalCoefficients(0, 0, 0, 2 * mu * E / h2, 4 * mu * De * a / h2, -2 * mu * De * a * a / h2 - ell(qn));
    };
    s.to_s = [](double r, const ParameterSet&) { return r; };
    s.from_s = [](double x, const ParameterSet&) { return x; };
    s.domain_s = half_line;
    s.closed_form = [](const ParameterSet& p, const QuantumNumbers& qn) {
        const double mu = p.at("mu"), h2 = p.at("hbar") * p.at("hbar"), De = p.at("De"), a = p.at("a");
        const double K = qn.n + 0.5 + std::sqrt((0.5 + qn.l) * (0.5 + qn.l) + 2 * mu * De * a * a / h2);
        return -2 * mu * De * De * a * a / h2 / (K * K);
    };
    s.radial_problem = [](const ParameterSet& p, const QuantumNumbers& qn, Centrifugal) -> std::optional<RadialProblem> {
        const double mu = p.at("mu"), h2 = p.at("hbar") * p.at("hbar"), De = p.at("De"), a = p.at("a");
        const double l2 = ell(qn);
        RadialProblem rp;
        rp.q = [=](double r, double E) {
            return -2 * mu * E / h2 - 4 * mu * De * a / (h2 * r) + (2 * mu * De * a * a / h2 + l2) / (r * r);
        };
        rp.scale = a;
        rp.r_max = 3000 * a;
        rp.e_max = 0.0;
        rp.measure = Measure::DR;
        rp.substitution = "R is the reduced radial function";
        return rp;
    };
    s.shooting_bracket = [depth](const ParameterSet& p, const QuantumNumbers&) { return std::pair{-depth(p), 0.0}; };
    return s;
}

// --------------------------------------------------------- non-central Coulomb

ModelSpec noncentral_coulomb() {
    ModelSpec s;
    s.id = "noncentral_coulomb";
    s.description = "Coulomb plus ring-shaped non-central terms, Schrodinger; radial part with effective l";
    s.parameters = {positive("mu", 1, "reduced mass"), positive("hbar", 1, "reduced Planck constant"),
                    positive("Z", 1, "charge number"), positive("e", 1, "elementary charge"),
                    real("beta", 0, "strength of the 1/(r sin theta)^2 term"),
                    real("gamma", 0, "strength of the cos(theta)/(r sin theta)^2 term"),
                    {"n_theta", 0, 0, inf, false, true, "polar quantum number"}};
    s.unknown_name = "E";
    s.unknown_units = "energy";
    s.transform_note = "s = r (radial), s = (cos(theta) - 1)/2 (polar)";
    s.notes = "l is replaced by the effective value from the polar equation; --l is ignored";
    s.measure = Measure::R2DR;
    s.prepare = [](const ParameterSet& p, QuantumNumbers qn) {
        const int m = qn.m.value_or(0);
        qn.l = effective_l_noncentral(m, p.at("beta"), p.at("gamma"), static_cast<int>(p.at("n_theta")));
        validate(qn);
        return qn;
    };
    auto unit = [](const ParameterSet& p) {
        const double Ze2 = p.at("Z") * p.at("e") * p.at("e");
        return p.at("mu") * Ze2 * Ze2 / (p.at("hbar") * p.at("hbar"));
    };
    s.unknown = [unit](const ParameterSet& p, const QuantumNumbers&) {
        return SpectralUnknown("E", -unit(p), 0.0, "energy");
    };
    s.coefficients = [](double E, const ParameterSet& p, const QuantumNumbers& qn) {
        const double mu = p.at("mu"), h2 = p.at("hbar") * p.at("hbar"), Ze2 = p.at("Z") * p.at("e") * p.at("e");
        return CanonicalCoefficients(2, 0, 0, 2 * mu * E / h2, 2 * mu * Ze2 / h2, -ell(qn));
    };
    s.to_s = [](double r, const ParameterSet&) { return r; };
    s.from_s = [](double x, const ParameterSet&) { return x; };
    s.domain_s = half_line;
    s.closed_form = [unit](const ParameterSet& p, const QuantumNumbers& qn) {
        const double l = effective_l_noncentral(qn.m.value_or(0), p.at("beta"), p.at("gamma"),
                                                static_cast<int>(p.at("n_theta")));
        const double K = qn.n + 1 + l;
        return -unit(p) / (2 * K * K);
    };
    s.radial_problem = [](const ParameterSet& p, const QuantumNumbers& qn, Centrifugal) -> std::optional<RadialProblem> {
        const double mu = p.at("mu"), h2 = p.at("hbar") * p.at("hbar"), Ze2 = p.at("Z") * p.at("e") * p.at("e");
        const double l2 = ell(qn);
        RadialProblem rp;
        rp.q = [=](double r, double E) { return -2 * mu * E / h2 - 2 * mu * Ze2 / (h2 * r) + l2 / (r * r); };
        rp.scale = h2 / (mu * Ze2);
        rp.r_max = 3000 * rp.scale;
        rp.e_max = 0.0;
        rp.measure = Measure::R2DR;
        rp.substitution = "u = r R";
        return rp;
    };
    s.shooting_bracket = [unit](const ParameterSet& p, const QuantumNumbers&) { return std::pair{-unit(p), 0.0}; };
    return s;
}

// ----------------------------------------------------------------- KG Coulomb

ModelSpec kg_coulomb() {
    ModelSpec s;
    s.id = "kg_coulomb";
    s.kind = EquationKind::KleinGordon;
    s.description = "Coulomb potential, Klein-Gordon";
    s.parameters = {positive("m0", 1, "rest mass"), positive("c", 1, "speed of light"),
                    positive("hbar", 1, "reduced Planck constant"), positive("Zalpha", 0.3, "coupling Z alpha"),
                    {"branch", 1, -1, 1, false, true, "+1 for positive, -1 for negative energies"}};
    s.unknown_name = "epsilon";
    s.unknown_units = "energy";
    s.transform_note = "s = r";
    s.measure = Measure::DR;
    s.prepare = [](const ParameterSet& p, QuantumNumbers qn) {
        validate(qn);
        if (p.at("branch") == 0) throw Error(ErrorKind::InvalidArgument, "branch must be +1 or -1");
        if (!(p.at("Zalpha") < qn.l + 0.5))
            throw Error(ErrorKind::InvalidArgument, "kg_coulomb needs Zalpha < l + 1/2");
        return qn;
    };
    s.unknown = [](const ParameterSet& p, const QuantumNumbers&) {
        const double mc2 = p.at("m0") * p.at("c") * p.at("c");
        return p.at("branch") > 0 ? SpectralUnknown("epsilon", 0.0, mc2, "energy")
                                  : SpectralUnknown("epsilon", -mc2, 0.0, "energy");
    };
    s.coefficients = [](double eps, const ParameterSet& p, const QuantumNumbers& qn) {
        const double hc = p.at("hbar") * p.at("c"), mc2 = p.at("m0") * p.at("c") * p.at("c"), za = p.at("Zalpha");
        return CanonicalCoefficients(0, 0, 0, (eps * eps - mc2 * mc2) / (hc * hc), p.at("branch") * 2 * eps * za / hc,
                                     za * za - ell(qn));
    };
    s.to_s = [](double r, const ParameterSet&) { return r; };
    s.from_s = [](double x, const ParameterSet&) { return x; };
    s.domain_s = half_line;
    s.closed_form = [](const ParameterSet& p, const QuantumNumbers& qn) {
        const double mc2 = p.at("m0") * p.at("c") * p.at("c"), za = p.at("Zalpha");
        const double K = qn.n + 0.5 + std::sqrt((qn.l + 0.5) * (qn.l + 0.5) - za * za);
        return p.at("branch") * mc2 / std::sqrt(1 + za * za / (K * K));
    };
    s.radial_problem = [](const ParameterSet& p, const QuantumNumbers& qn, Centrifugal) -> std::optional<RadialProblem> {
        if (p.at("branch") < 0) return std::nullopt;
        const double hc = p.at("hbar") * p.at("c"), mc2 = p.at("m0") * p.at("c") * p.at("c"), za = p.at("Zalpha");
        const double l2 = ell(qn);
        RadialProblem rp;
        rp.q = [=](double r, double eps) {
            return (l2 - za * za) / (r * r) - 2 * eps * za / (hc * r) - (eps * eps - mc2 * mc2) / (hc * hc);
        };
        rp.scale = hc / (za * mc2);
        rp.r_max = 3000 * rp.scale;
        rp.e_max = mc2;
        rp.measure = Measure::DR;
        rp.substitution = "R is the reduced radial function";
        return rp;
    };
    s.shooting_bracket = [](const ParameterSet& p, const QuantumNumbers&) {
        return std::pair{0.0, p.at("m0") * p.at("c") * p.at("c")};
    };
    return s;
}

// ----------------------------------------------------------------- KG Eckart

ModelSpec kg_eckart() {
    ModelSpec s;
    s.id = "kg_eckart";
    s.kind = EquationKind::KleinGordon;
    s.description = "Mixed Eckart potentials, Klein-Gordon, approximated centrifugal term";
    s.parameters = {positive("M", 1, "mass"), positive("a", 1, "range"), real("alpha", 1, "attractive strength"),
                    real("beta", 0, "repulsive strength")};
    s.unknown_name = "E";
    s.unknown_units = "energy";
    s.transform_note = "x = exp(-r/a)";
    s.notes = "several admissible roots may exist; no closed form";
    s.measure = Measure::DR;
    s.prepare = pass_through;
    s.unknown = [](const ParameterSet& p, const QuantumNumbers&) {
        return SpectralUnknown("E", -p.at("M"), p.at("M"), "energy");
    };
    s.coefficients = [](double E, const ParameterSet& p, const QuantumNumbers& qn) {
        const double M = p.at("M"), a2 = p.at("a") * p.at("a");
        const double lam2 = a2 * (M * M - E * E), k2 = 2 * (M + E) * a2;
        return CanonicalCoefficients(1, 1, 1, -lam2 - k2 * p.at("alpha"),
                                     2 * lam2 + k2 * (p.at("alpha") - p.at("beta")) - ell(qn), -lam2);
    };
    s.to_s = [](double r, const ParameterSet& p) { return std::exp(-r / p.at("a")); };
    s.from_s = [](double x, const ParameterSet& p) { return -p.at("a") * std::log(x); };
    s.domain_s = unit_interval;
    s.radial_problem = [](const ParameterSet& p, const QuantumNumbers& qn, Centrifugal c) -> std::optional<RadialProblem> {
        const double M = p.at("M"), a = p.at("a"), al = p.at("alpha"), be = p.at("beta"), l2 = ell(qn);
        RadialProblem rp;
        rp.q = [=](double r, double E) {
            const double x = std::exp(-r / a), w = -std::expm1(-r / a);
            const double k2 = 2 * (M + E) * a * a;
            const double cent = c == Centrifugal::Approximated ? l2 * x / (a * a * w * w) : l2 / (r * r);
            return (M * M - E * E) - k2 * al * x / (a * a * w) + k2 * be * x / (a * a * w * w) + cent;
        };
        rp.scale = a;
        rp.r_max = 2000 * a;
        rp.e_max = M;
        rp.measure = Measure::DR;
        rp.substitution = "u is the reduced radial function";
        return rp;
    };
    s.shooting_bracket = [](const ParameterSet& p, const QuantumNumbers&) { return std::pair{-p.at("M"), p.at("M")}; };
    return s;
}

// ---------------------------------------------------------------- Dirac Morse

ModelSpec dirac_morse() {
    ModelSpec s;
    s.id = "dirac_morse";
    s.kind = EquationKind::Dirac;
    s.description = "Morse potential, Dirac, already reduced to one component in y";
    s.parameters = {positive("beta1", 2, "coefficient of the 1/y term (squared)"),
                    positive("beta2", 1, "decay constant")};
    s.unknown_name = "epsilon";
    s.unknown_units = "dimensionless";
    s.transform_note = "s = y";
    s.notes = "epsilon is the reduced quantity of the one-component equation, not the energy";
    s.measure = Measure::DR;
    s.prepare = pass_through;
    s.unknown = [](const ParameterSet& p, const QuantumNumbers&) {
        const double b1 = p.at("beta1"), b2 = p.at("beta2");
        return SpectralUnknown("epsilon", 0.0, b1 * b1 / b2, "dimensionless");
    };
    s.coefficients = [](double eps, const ParameterSet& p, const QuantumNumbers&) {
        const double b1 = p.at("beta1"), b2 = p.at("beta2");
        return CanonicalCoefficients(1, 0, 0, -b2 * b2, b1 * b1, -eps * eps);
    };
    s.to_s = [](double y, const ParameterSet&) { return y; };
    s.from_s = [](double y, const ParameterSet&) { return y; };
    s.domain_s = half_line;
    s.closed_form = [](const ParameterSet& p, const QuantumNumbers& qn) {
        const double b1 = p.at("beta1"), b2 = p.at("beta2");
        return (b1 * b1 - (2 * qn.n + 1) * b2) / (2 * b2);
    };
    s.radial_problem = [](const ParameterSet&, const QuantumNumbers&, Centrifugal) -> std::optional<RadialProblem> {
        return std::nullopt;
    };
    return s;
}

// ---------------------------------------------------------- Kemmer oscillator

ModelSpec kemmer_oscillator() {
    ModelSpec s;
    s.id = "kemmer_oscillator";
    s.kind = EquationKind::Kemmer;
    s.description = "Dirac oscillator, Kemmer (DKP) equation";
    s.parameters = {positive("M", 1, "mass"), positive("omega", 1, "oscillator frequency"),
                    positive("hbar", 1, "reduced Planck constant"), positive("c", 1, "speed of light")};
    s.unknown_name = "varsigma";
    s.unknown_units = "dimensionless";
    s.transform_note = "s = (M omega / hbar) r^2";
    s.notes = "energy from varsigma via E^2 = (M c^2/2)^2 + 2 hbar omega M c^2 [varsigma + (j(j+1) - l(l+1) + 1)/2]; "
              "j defaults to l";
    s.measure = Measure::DR;
    s.prepare = [](const ParameterSet&, QuantumNumbers qn) {
        if (!qn.j) qn.j = qn.l;
        validate(qn);
        return qn;
    };
    s.unknown = [](const ParameterSet&, const QuantumNumbers& qn) {
        return SpectralUnknown("varsigma", 0.0, 2 * (2 * qn.n + qn.l) + 6, "dimensionless");
    };
    s.coefficients = [](double v, const ParameterSet&, const QuantumNumbers& qn) {
        return CanonicalCoefficients(0.5, 0, 0, -0.25, v / 2, -ell(qn) / 4);
    };
    auto kappa = [](const ParameterSet& p) { return p.at("M") * p.at("omega") / p.at("hbar"); };
    s.to_s = [kappa](double r, const ParameterSet& p) { return kappa(p) * r * r; };
    s.from_s = [kappa](double x, const ParameterSet& p) { return std::sqrt(x / kappa(p)); };
    s.domain_s = half_line;
    s.closed_form = [](const ParameterSet&, const QuantumNumbers& qn) { return qn.l + 1.5 + 2 * qn.n; };
    s.radial_problem = [kappa](const ParameterSet& p, const QuantumNumbers& qn,
                               Centrifugal) -> std::optional<RadialProblem> {
        const double k = kappa(p), l2 = ell(qn);
        RadialProblem rp;
        rp.q = [=](double r, double v) { return k * k * r * r + l2 / (r * r) - 2 * v * k; };
        rp.scale = 1 / std::sqrt(k);
        rp.r_max = 100 * rp.scale;
        rp.measure = Measure::DR;
        rp.substitution = "R is the reduced radial function";
        return rp;
    };
    s.shooting_bracket = [](const ParameterSet&, const QuantumNumbers& qn) {
        return std::pair{0.0, 2.0 * (2 * qn.n + qn.l) + 6};
    };
    s.physical_energy = [](double v, const ParameterSet& p, const QuantumNumbers& qn) {
        const double mc2 = p.at("M") * p.at("c") * p.at("c"), hw = p.at("hbar") * p.at("omega");
        const double j = qn.j.value_or(qn.l);
        const double e2 = mc2 * mc2 / 4 + 2 * hw * mc2 * (v + (j * (j + 1) - ell(qn) + 1) / 2);
        return std::sqrt(e2);
    };
    return s;
}

}  // namespace

const std::vector<ModelSpec>& catalog_list() {
    static const std::vector<ModelSpec> list = {spherical_oscillator(), manning_rosen(), hulthen(), eckart(),
                                                kratzer(), noncentral_coulomb(), kg_coulomb(), kg_eckart(),
                                                dirac_morse(), kemmer_oscillator()};
    return list;
}

const ModelSpec& find_model(const std::string& id) {
    for (const auto& m : catalog_list())
        if (m.id == id) return m;
    throw Error(ErrorKind::UnknownModel, "unknown model: " + id);
}

}  // namespace bsf

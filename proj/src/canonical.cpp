#include "bsf/canonical.hpp"

#include <cmath>
#include <string>

#include "bsf/error.hpp"

namespace bsf {

CanonicalCoefficients::CanonicalCoefficients(double k1, double k2, double k3, double A, double B, double C)
    : k1_(k1), k2_(k2), k3_(k3), A_(A), B_(B), C_(C) {
    for (double v : {k1, k2, k3, A, B, C})
        if (!std::isfinite(v)) throw Error(ErrorKind::InvalidArgument, "canonical coefficients must be finite");
}

Regime CanonicalCoefficients::regime() const noexcept {
    return std::abs(k3_) < k3_epsilon ? Regime::Limit : Regime::General;
}

double compute_k4(const CanonicalCoefficients& c) {
    const double d = (1 - c.k1()) * (1 - c.k1()) - 4 * c.C();
    if (d < 0) throw Error(ErrorKind::NegativeDiscriminant, "k4: (1-k1)^2 - 4C < 0");
    return ((1 - c.k1()) + std::sqrt(d)) / 2;
}

double compute_k5(const CanonicalCoefficients& c) {
    if (c.regime() == Regime::Limit) {
        const double h = c.k2() / 2;
        const double d = h * h - c.A();
        if (d < 0) throw Error(ErrorKind::NegativeDiscriminant, "k5 (k3 -> 0): (k2/2)^2 - A < 0");
        return -h + std::sqrt(d);
    }
    const double k3 = c.k3();
    const double p = 0.5 + c.k1() / 2 - c.k2() / (2 * k3);
    const double d = p * p - (c.A() / (k3 * k3) + c.B() / k3 + c.C());
    if (d < 0) throw Error(ErrorKind::NegativeDiscriminant, "k5: radicand < 0");
    return p + std::sqrt(d);
}

SolutionParams solution_params(const CanonicalCoefficients& c) { return {compute_k4(c), compute_k5(c)}; }

SpectralUnknown::SpectralUnknown(std::string name_, double lo_, double hi_, std::string units_)
    : name(std::move(name_)), lo(lo_), hi(hi_), units(std::move(units_)) {
    if (!(lo < hi)) throw Error(ErrorKind::InvalidArgument, "bracket of '" + name + "' must satisfy lo < hi");
}

void validate(const QuantumNumbers& qn) {
    if (qn.n < 0) throw Error(ErrorKind::InvalidArgument, "n must be >= 0");
    if (!(qn.l >= 0)) throw Error(ErrorKind::InvalidArgument, "l must be >= 0");
}

}  // namespace bsf

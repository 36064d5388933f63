#pragma once

#include <functional>
#include <optional>
#include <string>

namespace bsf {

/// |k3| below this routes to the k3 -> 0 limit formulas.
inline constexpr double k3_epsilon = 1e-12;

enum class Regime { General, Limit };

/// Coefficients of
///   psi'' + (k1 - k2 s)/(s (1 - k3 s)) psi' + (A s^2 + B s + C)/(s^2 (1 - k3 s)^2) psi = 0
/// at one fixed value of the spectral unknown.
class CanonicalCoefficients {
public:
    CanonicalCoefficients(double k1, double k2, double k3, double A, double B, double C);

    double k1() const noexcept { return k1_; }
    double k2() const noexcept { return k2_; }
    double k3() const noexcept { return k3_; }
    double A() const noexcept { return A_; }
    double B() const noexcept { return B_; }
    double C() const noexcept { return C_; }

    Regime regime() const noexcept;

    /// Left-hand side of the canonical ODE at s for given psi, psi', psi''.
    template <class T>
    T residual(T s, T psi, T dpsi, T d2psi) const {
        const T k1 = k1_, k2 = k2_, k3 = k3_, A = A_, B = B_, C = C_;
        const T w = 1 - k3 * s;
        return d2psi + (k1 - k2 * s) / (s * w) * dpsi + (A * s * s + B * s + C) / (s * s * w * w) * psi;
    }

private:
    double k1_, k2_, k3_, A_, B_, C_;
};

/// Exponents of the asymptotic factors s^k4 and (1 - k3 s)^k5 (or exp(-k5 s)).
struct SolutionParams {
    double k4;
    double k5;
};

/// "+" branch of the indicial root at s -> 0.
double compute_k4(const CanonicalCoefficients& c);

/// "+" branch of the exponent at s -> 1/k3; the k3 -> 0 limit in the Limit regime.
double compute_k5(const CanonicalCoefficients& c);

SolutionParams solution_params(const CanonicalCoefficients& c);

/// Scalar the eigencondition is solved for (E, epsilon, varsigma, effective l).
struct SpectralUnknown {
    std::string name;
    double lo;
    double hi;
    std::string units;

    SpectralUnknown(std::string name, double lo, double hi, std::string units = {});
};

/// Coefficients of the canonical ODE as a function of the spectral unknown;
/// model parameters and quantum numbers are bound in.
using CoefficientMap = std::function<CanonicalCoefficients(double)>;

struct QuantumNumbers {
    int n = 0;
    double l = 0.0;
    std::optional<int> m;
    std::optional<double> j;
};

void validate(const QuantumNumbers& qn);

}  // namespace bsf

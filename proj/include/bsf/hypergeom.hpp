#pragma once

#include <cmath>
#include <vector>

#include "bsf/error.hpp"

namespace bsf {

namespace detail {

/// Neumaier-compensated running sum.
template <class T>
class CompensatedSum {
public:
    void add(T v) {
        const T t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    T value() const { return sum_ + comp_; }

private:
    T sum_{0};
    T comp_{0};
};

}  // namespace detail

/// 2F1(-n, b; c; x) or 1F1(-n; c; x): a degree-n polynomial in x.
class TerminatingSeries {
public:
    enum class Kind { Gauss2F1, Kummer1F1 };

    static TerminatingSeries gauss(int n, double b, double c);
    static TerminatingSeries kummer(int n, double c);

    Kind kind() const noexcept { return kind_; }
    int degree() const noexcept { return n_; }
    double b() const noexcept { return b_; }
    double c() const noexcept { return c_; }

    /// Power-series coefficients a_0..a_n, built from the ratio of successive terms.
    const std::vector<double>& coefficients() const noexcept { return coeffs_; }

    template <class T>
    T operator()(T x) const {
        return derivative(x, 0);
    }

    /// order-th derivative, exact from the coefficients.
    template <class T>
    T derivative(T x, int order) const {
        // Horner is cheaper, but degrees above 20 need the compensated sum.
        if (n_ <= 20) {
            T acc = 0;
            for (int k = n_; k >= order; --k) acc = acc * x + T(coeffs_[k]) * falling(k, order);
            return acc;
        }
        detail::CompensatedSum<T> sum;
        T power = 1;
        for (int k = order; k <= n_; ++k) {
            sum.add(T(coeffs_[k]) * falling(k, order) * power);
            power *= x;
        }
        return sum.value();
    }

    /// Number of sign changes on a uniform sampling of the open interval (lo, hi).
    int count_roots(double lo, double hi, int samples = 4000) const;

private:
    TerminatingSeries(Kind kind, int n, double b, double c);

    static double falling(int k, int order) {
        double f = 1;
        for (int i = 0; i < order; ++i) f *= k - i;
        return f;
    }

    Kind kind_;
    int n_;
    double b_;
    double c_;
    std::vector<double> coeffs_;
};

/// (a)_k by iterative product.
double pochhammer(double a, int k);

double eval_2f1_terminating(int n, double b, double c, double x);
double eval_1f1_terminating(int n, double c, double x);

}  // namespace bsf

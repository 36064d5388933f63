#pragma once

#include <vector>

namespace bsf {

/// Truncated Taylor polynomial sum_k c_k (x - center)^k, k = 0..order.
class TruncatedSeries {
public:
    TruncatedSeries(double center, std::vector<double> coeffs);

    static TruncatedSeries constant(double center, int order, double value);
    /// The identity function x about center.
    static TruncatedSeries variable(double center, int order);

    double center() const noexcept { return center_; }
    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coeffs() const noexcept { return coeffs_; }
    double operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

    /// Value at the center.
    double value() const noexcept { return coeffs_.front(); }
    double evaluate(double x) const;

    /// Drops the top coefficient.
    TruncatedSeries derivative() const;
    TruncatedSeries reciprocal() const;
    TruncatedSeries truncated(int order) const;

    TruncatedSeries& operator*=(double s);

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(double s, TruncatedSeries a) { return a *= s; }

private:
    double center_;
    std::vector<double> coeffs_;
};

enum class SeriesOp { Add, Mul, Derivative };

/// Binary arithmetic at the common (lower) order; Derivative ignores b.
/// Throws CenterMismatch when the expansion points differ.
TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op);

}  // namespace bsf

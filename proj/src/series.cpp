#include "bsf/series.hpp"

#include <algorithm>
#include <cmath>

#include "bsf/error.hpp"

namespace bsf {

namespace {

void check_center(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.center() != b.center()) throw Error(ErrorKind::CenterMismatch, "series expanded about different points");
}

}  // namespace

TruncatedSeries::TruncatedSeries(double center, std::vector<double> coeffs) : center_(center), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::constant(double center, int order, double value) {
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    c[0] = value;
    return {center, std::move(c)};
}

TruncatedSeries TruncatedSeries::variable(double center, int order) {
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    c[0] = center;
    if (order >= 1) c[1] = 1.0;
    return {center, std::move(c)};
}

double TruncatedSeries::evaluate(double x) const {
    const double t = x - center_;
    double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

TruncatedSeries TruncatedSeries::derivative() const {
    if (order() < 1) throw Error(ErrorKind::OrderExhausted, "derivative of an order-0 series");
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return {center_, std::move(d)};
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    if (coeffs_[0] == 0) throw Error(ErrorKind::ZeroDenominator, "reciprocal of a series vanishing at its center");
    std::vector<double> r(coeffs_.size(), 0.0);
    r[0] = 1 / coeffs_[0];
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        double acc = 0;
        for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * r[k - j];
        r[k] = -acc / coeffs_[0];
    }
    return {center_, std::move(r)};
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    if (order < 0 || order > this->order()) throw Error(ErrorKind::OrderExhausted, "truncation beyond series order");
    return {center_, std::vector<double>(coeffs_.begin(), coeffs_.begin() + order + 1)};
}

TruncatedSeries& TruncatedSeries::operator*=(double s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_center(a, b);
    const int order = std::min(a.order(), b.order());
    std::vector<double> c(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) c[k] = a.coeffs_[k] + b.coeffs_[k];
    return {a.center_, std::move(c)};
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a + (-1.0) * b;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_center(a, b);
    const int order = std::min(a.order(), b.order());
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    for (int i = 0; i <= order; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= order; ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return {a.center_, std::move(c)};
}

TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op) {
    switch (op) {
        case SeriesOp::Add: return a + b;
        case SeriesOp::Mul: return a * b;
        case SeriesOp::Derivative: return a.derivative();
    }
    throw Error(ErrorKind::InvalidArgument, "unknown series operation");
}

}  // namespace bsf

#include "bsf/hypergeom.hpp"

#include <cmath>
#include <string>

namespace bsf {

namespace {

// c must avoid 0, -1, ..., -(n-1) so that (c)_k never vanishes for k <= n.
void check_lower(int n, double c) {
    for (int k = 0; k < n; ++k)
        if (std::abs(c + k) < 1e-14 * std::max(1.0, std::abs(c)))
            throw Error(ErrorKind::PochhammerZero, "lower parameter " + std::to_string(c) + " hits (c)_k = 0");
}

}  // namespace

double pochhammer(double a, int k) {
    double p = 1;
    for (int i = 0; i < k; ++i) p *= a + i;
    return p;
}

TerminatingSeries::TerminatingSeries(Kind kind, int n, double b, double c) : kind_(kind), n_(n), b_(b), c_(c) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "degree must be >= 0");
    check_lower(n, c);
    coeffs_.resize(static_cast<std::size_t>(n) + 1);
    coeffs_[0] = 1;
    // a_{k+1}/a_k = (k - n)(b + k) / ((c + k)(k + 1)), with (b + k) -> 1 for 1F1
    for (int k = 0; k < n; ++k) {
        const double upper = kind == Kind::Gauss2F1 ? (k - n) * (b + k) : static_cast<double>(k - n);
        coeffs_[k + 1] = coeffs_[k] * upper / ((c + k) * (k + 1));
    }
}

TerminatingSeries TerminatingSeries::gauss(int n, double b, double c) { return {Kind::Gauss2F1, n, b, c}; }

TerminatingSeries TerminatingSeries::kummer(int n, double c) { return {Kind::Kummer1F1, n, 0.0, c}; }

int TerminatingSeries::count_roots(double lo, double hi, int samples) const {
    int changes = 0;
    double prev = (*this)(lo + (hi - lo) / (samples + 1));
    for (int i = 2; i <= samples; ++i) {
        const double v = (*this)(lo + (hi - lo) * i / (samples + 1));
        if ((prev < 0 && v > 0) || (prev > 0 && v < 0)) ++changes;
        if (v != 0) prev = v;
    }
    return changes;
}

double eval_2f1_terminating(int n, double b, double c, double x) { return TerminatingSeries::gauss(n, b, c)(x); }

double eval_1f1_terminating(int n, double c, double x) { return TerminatingSeries::kummer(n, c)(x); }

}  // namespace bsf

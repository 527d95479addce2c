#include "sdnlm/special_functions.hpp"

#include <cmath>
#include <limits>

#include "sdnlm/errors.hpp"

namespace sdnlm {

double digamma(double x) {
    if (!(x > 0.0)) {
        throw DomainError("digamma: argument must be positive");
    }
    double result = 0.0;
    // Shift the argument up until the asymptotic series is accurate.
    while (x < 6.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // Bernoulli-number expansion, B2..B14.
    const double series = inv2 * (1.0 / 12.0 +
                          inv2 * (-1.0 / 120.0 +
                          inv2 * (1.0 / 252.0 +
                          inv2 * (-1.0 / 240.0 +
                          inv2 * (1.0 / 132.0 +
                          inv2 * (-691.0 / 32760.0 +
                          inv2 * (1.0 / 12.0)))))));
    return result + std::log(x) - 0.5 * inv - series;
}

namespace {

// Lower incomplete gamma by series, x < a + 1.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper incomplete gamma by Lentz continued fraction, x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = std::numeric_limits<double>::min() / 1e-30;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace

double regularized_gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0) {
        throw DomainError("regularized_gamma_q: a > 0 and x >= 0 required");
    }
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double regularized_gamma_p(double a, double x) {
    return 1.0 - regularized_gamma_q(a, x);
}

double brent_root(const std::function<double(double)>& f, double lo, double hi,
                  double tol, int max_iter) {
    double a = lo, b = hi;
    double fa = f(a), fb = f(b);
    if (fa * fb > 0.0) {
        throw DomainError("brent_root: root not bracketed");
    }
    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int iter = 0; iter < max_iter; ++iter) {
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::fabs(b) + 0.5 * tol;
        const double xm = 0.5 * (c - b);
        if (std::fabs(xm) <= tol1 || fb == 0.0) return b;
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            // Inverse quadratic interpolation / secant step.
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::fabs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::fabs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    return b;
}

} // namespace sdnlm

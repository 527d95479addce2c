#ifndef SDNLM_SPECIAL_FUNCTIONS_HPP
#define SDNLM_SPECIAL_FUNCTIONS_HPP

#include <functional>

namespace sdnlm {

/// Digamma psi0(x) for x > 0, asymptotic series with upward shift of
/// the argument.  Accurate to better than 1e-12 for x >= 1e-3.
double digamma(double x);

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
double regularized_gamma_q(double a, double x);

/// Regularized lower incomplete gamma P(a, x) = 1 - Q(a, x).
double regularized_gamma_p(double a, double x);

/// Bracketed Brent root search on [lo, hi].  Requires f(lo) and f(hi)
/// of opposite sign.  Tolerance is absolute in the argument.
double brent_root(const std::function<double(double)>& f, double lo, double hi,
                  double tol = 1e-8, int max_iter = 200);

} // namespace sdnlm

#endif

#pragma once

#include <functional>

namespace feigel::quad {

struct Result {
    double value = 0.0;
    double err_est = 0.0;
    long long n_evals = 0;
    bool converged = false;
};

/// Globally adaptive Gauss(7)/Kronrod(15) integration of f over [lo, hi].
/// Terminates when the summed panel error estimate drops below
/// max(abs_tol, rel_tol * |integral|, rounding floor); otherwise returns the
/// best value with converged = false after max_subdivisions panel splits.
/// Panel selection and the final reduction are deterministic.
Result integrate(const std::function<double(double)>& f, double lo, double hi,
                 double rel_tol, double abs_tol, int max_subdivisions = 2000);

}  // namespace feigel::quad

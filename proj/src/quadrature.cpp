#include "feigel/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace feigel::quad {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double lo, hi;
    double value;
    double err;
    double resabs;  // integral of |f|, for rounding floors
};

Panel eval_panel(const std::function<double(double)>& f, double lo, double hi,
                 long long& n_evals) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    double fv[15];
    const double fc = f(center);
    fv[14] = fc;

    double resg = kWg[3] * fc;
    double resk = kWgk[7] * fc;
    double resabs = kWgk[7] * std::abs(fc);

    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        const double fsum = f1 + f2;
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;  // j = 1,3,5 are Gauss nodes
    }
    n_evals += 15;

    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv[2 * j] - mean) + std::abs(fv[2 * j + 1] - mean));

    Panel p;
    p.lo = lo;
    p.hi = hi;
    p.value = resk * half;
    p.resabs = resabs * half;
    resasc *= half;

    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    const double uflow = std::numeric_limits<double>::min();
    if (p.resabs > uflow / (50.0 * eps)) err = std::max(err, 50.0 * eps * p.resabs);
    p.err = err;
    return p;
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double lo, double hi,
                 double rel_tol, double abs_tol, int max_subdivisions) {
    Result r;
    if (lo == hi) {
        r.converged = true;
        return r;
    }

    std::vector<Panel> panels;
    panels.reserve(64);
    panels.push_back(eval_panel(f, lo, hi, r.n_evals));

    const double eps = std::numeric_limits<double>::epsilon();

    for (int iter = 0; iter < max_subdivisions; ++iter) {
        double total = 0.0, err = 0.0, resabs = 0.0;
        for (const Panel& p : panels) {
            total += p.value;
            err += p.err;
            resabs += p.resabs;
        }
        // Rounding floor: panel sums cannot be resolved below ~eps * Int|f|.
        const double floor = 50.0 * eps * resabs;
        const double bound = std::max({abs_tol, rel_tol * std::abs(total), floor});
        if (err <= bound) {
            r.value = total;
            r.err_est = err;
            r.converged = true;
            return r;
        }

        // Split the worst panel (first maximum: deterministic).
        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i)
            if (panels[i].err > panels[worst].err) worst = i;

        const Panel w = panels[worst];
        const double mid = 0.5 * (w.lo + w.hi);
        if (mid <= w.lo || mid >= w.hi) break;  // interval exhausted
        panels[worst] = eval_panel(f, w.lo, mid, r.n_evals);
        panels.push_back(eval_panel(f, mid, w.hi, r.n_evals));
    }

    double total = 0.0, err = 0.0;
    for (const Panel& p : panels) {
        total += p.value;
        err += p.err;
    }
    r.value = total;
    r.err_est = err;
    r.converged = false;
    return r;
}

}  // namespace feigel::quad

#include "feigel/emt.hpp"

#include <cmath>
#include <limits>

#include "feigel/errors.hpp"

namespace feigel::emt {

Vec3 poynting(const FieldState& f) {
    const CVec3 s = cross(f.E, conj(f.H));
    return {0.5 * s[0].real(), 0.5 * s[1].real(), 0.5 * s[2].real()};
}

double energy_density(const FieldState& f) {
    return 0.25 * (dot_conj(f.E, f.D) + dot_conj(f.H, f.B)).real();
}

Vec3 momentum_minkowski(const FieldState& f) {
    const CVec3 g = cross(f.D, conj(f.B));
    return {0.5 * g[0].real(), 0.5 * g[1].real(), 0.5 * g[2].real()};
}

Vec3 momentum_abraham(const FieldState& f) { return poynting(f); }

Vec3 poynting(const InstantFields& f) { return cross(f.E, f.H); }

double energy_density(const InstantFields& f) {
    return 0.5 * (dot(f.E, f.D) + dot(f.H, f.B));
}

Vec3 momentum_minkowski(const InstantFields& f) { return cross(f.D, f.B); }

Vec3 momentum_abraham(const InstantFields& f) { return cross(f.E, f.H); }

StressTensor stress_minkowski(const InstantFields& f) {
    StressTensor T;
    const double w2 = 0.5 * (dot(f.E, f.D) + dot(f.H, f.B));
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            T(i, k) = f.E[i] * f.D[k] + f.H[i] * f.B[k];
            if (i == k) T(i, k) -= w2;
        }
    return T;
}

StressTensor stress_abraham(const InstantFields& f) {
    StressTensor T;
    const double w2 = 0.5 * (dot(f.E, f.D) + dot(f.H, f.B));
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            T(i, k) = 0.5 * (f.E[i] * f.D[k] + f.E[k] * f.D[i]) +
                      0.5 * (f.H[i] * f.B[k] + f.H[k] * f.B[i]);
            if (i == k) T(i, k) -= w2;
        }
    return T;
}

namespace {

SpacetimePoint shifted(const SpacetimePoint& p, int axis, double h) {
    SpacetimePoint q = p;
    switch (axis) {
        case 0: q.x += h; break;
        case 1: q.y += h; break;
        case 2: q.z += h; break;
        default: q.t += h; break;
    }
    return q;
}

struct ResidualSample {
    Vec3 momentum;
    double energy;
    double scale;  // largest bilinear magnitude seen on the stencil
};

ResidualSample residual_once(const FieldFn& fn, const SpacetimePoint& p, double h) {
    ResidualSample r{{0.0, 0.0, 0.0}, 0.0, 0.0};

    auto track = [&r](const InstantFields& f) {
        const StressTensor T = stress_minkowski(f);
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) r.scale = std::max(r.scale, std::abs(T(i, k)));
        r.scale = std::max(r.scale, max_abs(momentum_minkowski(f)));
        r.scale = std::max(r.scale, max_abs(poynting(f)));
        r.scale = std::max(r.scale, std::abs(energy_density(f)));
        return f;
    };

    for (int axis = 0; axis < 3; ++axis) {
        const InstantFields fp = track(fn(shifted(p, axis, h)));
        const InstantFields fm = track(fn(shifted(p, axis, -h)));
        const StressTensor Tp = stress_minkowski(fp);
        const StressTensor Tm = stress_minkowski(fm);
        const Vec3 Sp = poynting(fp);
        const Vec3 Sm = poynting(fm);
        for (int i = 0; i < 3; ++i)
            r.momentum[i] += (Tp(i, axis) - Tm(i, axis)) / (2.0 * h);
        r.energy += (Sp[axis] - Sm[axis]) / (2.0 * h);
    }

    const InstantFields ft_p = track(fn(shifted(p, 3, h)));
    const InstantFields ft_m = track(fn(shifted(p, 3, -h)));
    const Vec3 gp = momentum_minkowski(ft_p);
    const Vec3 gm = momentum_minkowski(ft_m);
    for (int i = 0; i < 3; ++i) r.momentum[i] -= (gp[i] - gm[i]) / (2.0 * h);
    r.energy += (energy_density(ft_p) - energy_density(ft_m)) / (2.0 * h);
    return r;
}

// Residuals below this cannot be distinguished from finite-difference
// rounding; the Richardson guard does not apply there.
double rounding_floor(double scale, double h) {
    return 100.0 * std::numeric_limits<double>::epsilon() * scale / h;
}

void richardson_guard(double r_h, double r_half, double floor_h, double floor_half,
                      const char* what) {
    if (r_h <= floor_h || r_half <= floor_half) return;
    const double ratio = r_h / r_half;
    if (ratio < 2.0 || ratio > 6.0)
        throw StepTooLarge(std::string(what) +
                           ": Richardson ratio " + std::to_string(ratio) +
                           " outside [2, 6]; non-smooth input or bad step");
}

}  // namespace

Vec3 conservation_residual(const FieldFn& fn, const SpacetimePoint& p, double step) {
    if (!(step > 0.0) || !std::isfinite(step))
        throw std::invalid_argument("conservation_residual: step must be finite and > 0");
    const ResidualSample full = residual_once(fn, p, step);
    const ResidualSample half = residual_once(fn, p, 0.5 * step);
    richardson_guard(max_abs(full.momentum), max_abs(half.momentum),
                     rounding_floor(full.scale, step),
                     rounding_floor(half.scale, 0.5 * step), "conservation_residual");
    return full.momentum;
}

double energy_conservation_residual(const FieldFn& fn, const SpacetimePoint& p,
                                    double step) {
    if (!(step > 0.0) || !std::isfinite(step))
        throw std::invalid_argument("energy_conservation_residual: step must be > 0");
    const ResidualSample full = residual_once(fn, p, step);
    const ResidualSample half = residual_once(fn, p, 0.5 * step);
    richardson_guard(std::abs(full.energy), std::abs(half.energy),
                     rounding_floor(full.scale, step),
                     rounding_floor(half.scale, 0.5 * step),
                     "energy_conservation_residual");
    return full.energy;
}

Vec3 abraham_impulse(const Vec3& E0, const Vec3& H0, const MaterialParams& m) {
    return (m.eps() * m.mu() - 1.0) * cross(E0, H0);
}

}  // namespace feigel::emt

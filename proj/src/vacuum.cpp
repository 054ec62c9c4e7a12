#include "feigel/vacuum.hpp"

#include <cmath>
#include <stdexcept>

#include "feigel/constants.hpp"
#include "feigel/errors.hpp"
#include "feigel/quadrature.hpp"

namespace feigel::vacuum {

namespace {

constexpr Complex kI{0.0, 1.0};

// Stable pieces of the plate factor d = e^{2 kappa a} - 1:
//   inv_d = 1/d = u/(1-u),  bose_t = 2 kappa a e^{2ka}/d = 2 kappa a/(1-u),
// with u = e^{-2 kappa a}. Both decay gracefully for large kappa a and are
// regular as kappa a -> 0 (inv_d ~ 1/(2ka), bose_t -> 1).
struct PlateFactor {
    double inv_d;
    double bose_t;
};

PlateFactor plate_factor(double kappa, double a) {
    const double u = std::exp(-2.0 * kappa * a);
    const double one_m_u = -std::expm1(-2.0 * kappa * a);
    return {u / one_m_u, 2.0 * kappa * a / one_m_u};
}

}  // namespace

double zeta3() {
    static const double value = [] {
        // Descending sum keeps the small terms from being absorbed early.
        const long n_terms = 2'000'000;  // tail < 1/(2 N^2) = 1.25e-13
        double s = 0.0;
        for (long n = n_terms; n >= 1; --n) {
            const double dn = static_cast<double>(n);
            s += 1.0 / (dn * dn * dn);
        }
        return s;
    }();
    return value;
}

Correlators correlators(const greens::SpectralPoint& p, const MaterialParams& m,
                        double a) {
    if (!greens::is_rotated(p.freq))
        throw std::invalid_argument("correlators: rotated branch required");
    const double zeta = std::get<greens::ImagFreq>(p.freq).zeta;
    if (zeta == 0.0) throw DegeneratePoint("correlators: zeta = 0");
    const greens::ChiExpansions e = greens::chi_expansions(p, m, a);
    const double k_x = p.k_x;

    Correlators c;
    // omega = i zeta throughout; the 1/omega and 1/omega^2 factors of the
    // fluctuation formulas become -i/zeta and -1/zeta^2.
    c.ey_bz = -(k_x / zeta) * e.g_yy_o1;
    c.ez_by = (-kI / zeta) * (-e.dz_g_zx_o1 + kI * k_x * e.g_zz_o1);
    c.by_by = (-kI / (zeta * zeta)) *
              (e.dzz_g_xx_o0 - 2.0 * kI * k_x * e.dz_g_zx_o0 -
               k_x * k_x * e.g_zz_o0);
    c.bz_bz = (kI * k_x * k_x / (zeta * zeta)) * e.g_yy_o0;
    return c;
}

Complex momentum_bracket(double zeta, double k_x, const MaterialParams& m, double a) {
    if (!(zeta > 0.0)) throw DegeneratePoint("momentum_bracket: zeta must be > 0");
    const greens::SpectralPoint p{k_x, greens::ImagFreq{zeta}, 0.0, 0.0};
    const Correlators c = correlators(p, m, a);
    const Complex omega = kI * zeta;
    return omega * (m.eps() * (c.ey_bz - c.ez_by) - m.chi_zy() * c.by_by +
                    m.chi_yz() * c.bz_bz);
}

ChannelPair integrand_cartesian(double zeta, double k_x, const MaterialParams& m,
                                double a) {
    const double em = m.eps() * m.mu();
    const double k2 = k_x * k_x + em * zeta * zeta;
    if (k2 == 0.0) throw DegeneratePoint("integrand_cartesian: zeta = k_x = 0");
    const double kap = std::sqrt(k2);
    const PlateFactor pf = plate_factor(kap, a);
    const double kx2 = k_x * k_x;
    const double kx4 = kx2 * kx2;

    const double pref = m.mu() / (pi * pi) * pf.inv_d / (kap * k2);
    ChannelPair ch;
    ch.coeff_yz = pref * (kx4 - kx2 * em * zeta * zeta * pf.bose_t);
    ch.coeff_zy = -pref * (2.0 * k2 * kx2 + 3.0 * kx4 - (k2 * kx2 + kx4) * pf.bose_t);
    return ch;
}

ChannelPair integrand_polar(double kappa, double theta, const MaterialParams& m,
                            double a) {
    if (kappa == 0.0) return {0.0, 0.0};  // integrand vanishes linearly
    const PlateFactor pf = plate_factor(kappa, a);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double c2 = c * c;
    const double s2 = s * s;
    const double c4 = c2 * c2;
    const double c2s2 = c2 * s2;  // cos^4 tan^2 in its regular form

    const double base =
        std::sqrt(m.mu() / m.eps()) / (pi * pi) * kappa * kappa * pf.inv_d;
    ChannelPair ch;
    ch.coeff_yz = base * (c4 - c2s2 * pf.bose_t);
    ch.coeff_zy = -base * (5.0 * c4 + 2.0 * c2s2 - (2.0 * c4 + c2s2) * pf.bose_t);
    return ch;
}

namespace {

struct Channel2D {
    double value = 0.0;
    double err_est = 0.0;
    long long n_evals = 0;
    bool converged = true;
};

// Iterated integral of one polar channel: theta outer on [0, pi/2], kappa
// inner on (0, kappa_hi]. The inner integrals run at a tenth of the outer
// tolerance; their worst error enters the estimate through the outer
// interval length.
Channel2D integrate_channel(bool zy_channel, const MaterialParams& m, double a,
                            const QuadratureConfig& cfg) {
    Channel2D out;
    const double kappa_hi = cfg.kappa_a_max / a;
    double worst_inner_err = 0.0;

    auto outer_f = [&](double theta) {
        auto inner_f = [&](double kap) {
            const ChannelPair ch = integrand_polar(kap, theta, m, a);
            return zy_channel ? ch.coeff_zy : ch.coeff_yz;
        };
        const quad::Result inner =
            quad::integrate(inner_f, 0.0, kappa_hi, 0.1 * cfg.rel_tol,
                            0.1 * cfg.abs_tol, cfg.max_subdivisions);
        out.n_evals += inner.n_evals;
        worst_inner_err = std::max(worst_inner_err, inner.err_est);
        if (!inner.converged) out.converged = false;
        return inner.value;
    };

    const quad::Result outer = quad::integrate(outer_f, 0.0, 0.5 * pi, cfg.rel_tol,
                                               cfg.abs_tol, cfg.max_subdivisions);
    out.value = outer.value;
    out.err_est = outer.err_est + 0.5 * pi * worst_inner_err;
    if (!outer.converged) out.converged = false;
    return out;
}

}  // namespace

VacuumMomentumResult vacuum_momentum(const MaterialParams& m, double a,
                                     const QuadratureConfig& cfg) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::invalid_argument("vacuum_momentum: a must be finite and > 0");
    if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0))
        throw std::invalid_argument("vacuum_momentum: tolerances must be > 0");
    if (cfg.kappa_a_max < 20.0)
        throw std::invalid_argument(
            "vacuum_momentum: kappa_a_max must be >= 20 (integrand support)");
    if (cfg.max_subdivisions < 1)
        throw std::invalid_argument("vacuum_momentum: max_subdivisions must be >= 1");

    const Channel2D zy = integrate_channel(true, m, a, cfg);
    const Channel2D yz = integrate_channel(false, m, a, cfg);

    const double a3 = a * a * a;
    VacuumMomentumResult r;
    r.coeff_zy = a3 * zy.value;
    r.coeff_yz = a3 * yz.value;
    r.g_hat = r.coeff_zy * m.chi_zy() + r.coeff_yz * m.chi_yz();
    r.abs_err_est = a3 * (zy.err_est + yz.err_est);
    r.n_evals = zy.n_evals + yz.n_evals;
    r.converged = zy.converged && yz.converged;
    return r;
}

VacuumMomentumResult vacuum_momentum_cartesian(const MaterialParams& m, double a,
                                               const QuadratureConfig& cfg) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::invalid_argument("vacuum_momentum_cartesian: a must be > 0");
    const double kappa_hi = cfg.kappa_a_max / a;
    const double zeta_hi = kappa_hi / std::sqrt(m.eps() * m.mu());

    VacuumMomentumResult r{};
    r.converged = true;
    double value[2] = {0.0, 0.0};
    double err[2] = {0.0, 0.0};

    for (int ch = 0; ch < 2; ++ch) {
        double worst_inner_err = 0.0;
        bool ok = true;
        long long evals = 0;
        auto outer_f = [&](double k_x) {
            auto inner_f = [&](double zeta) {
                const ChannelPair p = integrand_cartesian(zeta, k_x, m, a);
                return ch == 0 ? p.coeff_zy : p.coeff_yz;
            };
            const quad::Result inner =
                quad::integrate(inner_f, 0.0, zeta_hi, 0.1 * cfg.rel_tol,
                                0.1 * cfg.abs_tol, cfg.max_subdivisions);
            evals += inner.n_evals;
            worst_inner_err = std::max(worst_inner_err, inner.err_est);
            if (!inner.converged) ok = false;
            return inner.value;
        };
        const quad::Result outer = quad::integrate(outer_f, 0.0, kappa_hi, cfg.rel_tol,
                                                   cfg.abs_tol, cfg.max_subdivisions);
        value[ch] = outer.value;
        err[ch] = outer.err_est + kappa_hi * worst_inner_err;
        r.n_evals += evals;
        if (!outer.converged || !ok) r.converged = false;
    }

    const double a3 = a * a * a;
    r.coeff_zy = a3 * value[0];
    r.coeff_yz = a3 * value[1];
    r.g_hat = r.coeff_zy * m.chi_zy() + r.coeff_yz * m.chi_yz();
    r.abs_err_est = a3 * (err[0] + err[1]);
    return r;
}

double closed_form(const MaterialParams& m, double a) {
    return zeta3() / (16.0 * pi * a * a * a) * std::sqrt(m.mu() / m.eps()) *
           m.chi_zy();
}

RadialMoments radial_moments(double a) {
    if (!(a > 0.0)) throw std::invalid_argument("radial_moments: a must be > 0");
    const double kappa_hi = 40.0 / a;

    auto f1 = [a](double kap) { return kap * kap * plate_factor(kap, a).inv_d; };
    auto f2 = [a](double kap) {
        const PlateFactor pf = plate_factor(kap, a);
        return kap * kap * pf.bose_t * pf.inv_d;
    };
    const quad::Result q1 = quad::integrate(f1, 0.0, kappa_hi, 1e-12, 1e-16, 2000);
    const quad::Result q2 = quad::integrate(f2, 0.0, kappa_hi, 1e-12, 1e-16, 2000);

    const double a3 = a * a * a;
    const double s1 = zeta3() / (4.0 * a3);        // Bose series route
    const double s2 = 3.0 * zeta3() / (4.0 * a3);

    if (!q1.converged || !q2.converged ||
        std::abs(q1.value - s1) > 1e-10 * s1 || std::abs(q2.value - s2) > 1e-10 * s2)
        throw ToleranceNotMet(
            "radial_moments: quadrature and series routes disagree beyond 1e-10");
    return {q1.value, q2.value};
}

}  // namespace feigel::vacuum

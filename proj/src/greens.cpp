#include "feigel/greens.hpp"

#include <cmath>
#include <stdexcept>

#include "feigel/errors.hpp"

namespace feigel::greens {

namespace {

constexpr Complex kI{0.0, 1.0};

// expm1 for complex arguments; series for small |w| where 1 - e^w cancels.
Complex cexpm1(const Complex& w) {
    if (std::abs(w) < 1e-4) {
        return w * (1.0 + w / 2.0 * (1.0 + w / 3.0 * (1.0 + w / 4.0)));
    }
    return std::exp(w) - 1.0;
}

// cosh(Lambda dz) / (e^{2 Lambda a} - 1) without forming e^{2 Lambda a}:
//   [e^{Lambda(dz - 2a)} + e^{-Lambda(dz + 2a)}] / (2 (1 - e^{-2 Lambda a})).
// All exponents have non-positive real part for |dz| <= a, Re Lambda > 0.
Complex cosh_over_plate(const Complex& lam, double dz, double a) {
    const Complex dm = -cexpm1(-2.0 * lam * a);
    return (std::exp(lam * (dz - 2.0 * a)) + std::exp(-lam * (dz + 2.0 * a))) /
           (2.0 * dm);
}

Complex sinh_over_plate(const Complex& lam, double dz, double a) {
    const Complex dm = -cexpm1(-2.0 * lam * a);
    return (std::exp(lam * (dz - 2.0 * a)) - std::exp(-lam * (dz + 2.0 * a))) /
           (2.0 * dm);
}

// Brace of the full solutions: the source term, the image term and the
// plate-reflection terms, in the same rescaled exponential form.
Complex full_brace(const Complex& lam, double z, double zp, double a) {
    const double dz = z - zp;
    const double zs = z + zp;
    const Complex dm = -cexpm1(-2.0 * lam * a);
    const Complex source = std::exp(-lam * std::abs(dz));
    const Complex image = -std::exp(-lam * zs);
    const Complex plates = (std::exp(lam * (dz - 2.0 * a)) + std::exp(-lam * (dz + 2.0 * a)) -
                            std::exp(lam * (zs - 2.0 * a)) - std::exp(-lam * (zs + 2.0 * a))) /
                           dm;
    return source + image + plates;
}

double kappa_sq(double k_x, const Frequency& f, const MaterialParams& m) {
    const double em = m.eps() * m.mu();
    if (is_rotated(f)) {
        const double zeta = std::get<ImagFreq>(f).zeta;
        return k_x * k_x + em * zeta * zeta;
    }
    const double omega = std::get<RealFreq>(f).omega;
    return k_x * k_x - em * omega * omega;
}

struct PointConstants {
    double kappa;
    Complex omega;
    Complex K, L, Kt;  // Kt = kappa^2 / K
    double dz;
};

PointConstants constants_at(const SpectralPoint& p, const MaterialParams& m, double a) {
    if (p.z < 0.0 || p.z > a || p.zp < 0.0 || p.zp > a)
        throw std::invalid_argument("greens: z and z' must lie in [0, a]");
    const double k2 = kappa_sq(p.k_x, p.freq, m);
    if (k2 == 0.0)
        throw DegeneratePoint("greens: kappa^2 = 0 at the requested spectral point");
    if (k2 < 0.0)
        throw std::domain_error(
            "greens: component solutions require kappa^2 > 0 (evanescent or rotated)");
    PointConstants c;
    c.kappa = std::sqrt(k2);
    c.omega = omega_of(p.freq);
    const Complex shift = m.mu() * p.k_x * c.omega / k2;
    c.K = c.kappa * (1.0 + shift * m.chi_zy());
    c.L = c.kappa * (1.0 - shift * m.chi_yz());
    c.Kt = k2 / c.K;
    c.dz = p.z - p.zp;
    return c;
}

}  // namespace

Complex omega_of(const Frequency& f) {
    if (is_rotated(f)) return Complex{0.0, std::get<ImagFreq>(f).zeta};
    return Complex{std::get<RealFreq>(f).omega, 0.0};
}

Complex kappa(double k_x, const Frequency& f, const MaterialParams& m) {
    const double k2 = kappa_sq(k_x, f, m);
    if (k2 == 0.0)
        throw DegeneratePoint("greens: kappa^2 = 0 at the requested spectral point");
    return std::sqrt(Complex{k2, 0.0});
}

KappaTriple shifted_constants(double k_x, const Frequency& f, const MaterialParams& m) {
    const double k2 = kappa_sq(k_x, f, m);
    if (k2 == 0.0)
        throw DegeneratePoint("greens: kappa^2 = 0 at the requested spectral point");
    if (k2 < 0.0)
        throw std::domain_error("greens: shifted constants require kappa^2 > 0");
    KappaTriple t;
    t.kappa = std::sqrt(k2);
    const Complex shift = m.mu() * k_x * omega_of(f) / k2;
    t.K = t.kappa * (1.0 + shift * m.chi_zy());
    t.L = t.kappa * (1.0 - shift * m.chi_yz());
    return t;
}

Complex g_yy_full(const SpectralPoint& p, const MaterialParams& m, double a) {
    const auto c = constants_at(p, m, a);
    return m.mu() * c.omega * c.omega / (2.0 * c.L) * full_brace(c.L, p.z, p.zp, a);
}

Complex g_xx_full(const SpectralPoint& p, const MaterialParams& m, double a) {
    const auto c = constants_at(p, m, a);
    return -c.K / (2.0 * m.eps()) * full_brace(c.K, p.z, p.zp, a);
}

Complex g_xx_eff(const SpectralPoint& p, const MaterialParams& m, double a) {
    const auto c = constants_at(p, m, a);
    return -c.K / m.eps() * cosh_over_plate(c.K, c.dz, a);
}

Complex g_yy_eff(const SpectralPoint& p, const MaterialParams& m, double a) {
    const auto c = constants_at(p, m, a);
    return m.mu() * c.omega * c.omega / c.L * cosh_over_plate(c.L, c.dz, a);
}

Complex g_zx_eff(const SpectralPoint& p, const MaterialParams& m, double a) {
    const auto c = constants_at(p, m, a);
    return kI / m.eps() * (p.k_x + m.mu() * c.omega * m.chi_zy()) *
           sinh_over_plate(c.K, c.dz, a);
}

Complex g_xz_eff(const SpectralPoint& p, const MaterialParams& m, double a) {
    const auto c = constants_at(p, m, a);
    return kI / m.eps() * (p.k_x - m.mu() * c.omega * m.chi_zy()) *
           sinh_over_plate(c.Kt, c.dz, a);
}

Complex g_zz_eff(const SpectralPoint& p, const MaterialParams& m, double a) {
    const auto c = constants_at(p, m, a);
    const double k2 = c.kappa * c.kappa;
    return k2 * p.k_x * p.k_x / (c.K * c.K * c.K * m.eps()) *
           cosh_over_plate(c.Kt, c.dz, a);
}

ChiExpansions chi_expansions(const SpectralPoint& p, const MaterialParams& m, double a) {
    if (!is_rotated(p.freq))
        throw std::invalid_argument("chi_expansions: rotated branch required");
    if (p.z != p.zp)
        throw std::invalid_argument("chi_expansions: coincidence limit requires z == z'");
    if (p.z < 0.0 || p.z > a)
        throw std::invalid_argument("chi_expansions: z must lie in [0, a]");
    return chi_expansions(p.k_x, std::get<ImagFreq>(p.freq).zeta, m, a);
}

ChiExpansions chi_expansions(double k_x, double zeta, const MaterialParams& m, double a) {
    const double k2 = k_x * k_x + m.eps() * m.mu() * zeta * zeta;
    if (k2 == 0.0)
        throw DegeneratePoint("chi_expansions: k_x = zeta = 0");
    const double kap = std::sqrt(k2);

    // Plate factor d = e^{2 kappa a} - 1, kept in the decayed form
    //   1/d = u / (1 - u),   T = 2 kappa a e^{2 kappa a} / d = 2 kappa a / (1 - u)
    // with u = e^{-2 kappa a}.
    const double u = std::exp(-2.0 * kap * a);
    const double one_m_u = -std::expm1(-2.0 * kap * a);
    const double inv_d = u / one_m_u;
    const double T = 2.0 * kap * a / one_m_u;

    const double eps = m.eps();
    const double mu = m.mu();

    ChiExpansions e;
    e.g_yy_o0 = Complex{-mu * zeta * zeta / kap * inv_d, 0.0};
    e.g_zz_o0 = Complex{k_x * k_x / (eps * kap) * inv_d, 0.0};
    e.dzz_g_xx_o0 = Complex{-kap * k2 / eps * inv_d, 0.0};
    e.dz_g_zx_o0 = kI * (kap * k_x / eps * inv_d);

    // omega = i zeta makes the first-order corrections imaginary.
    e.g_yy_o1 = e.g_yy_o0 * (1.0 + kI * (mu * k_x * zeta / k2) * (1.0 + T) * m.chi_yz());
    e.dz_g_zx_o1 = kI * (kap / eps * inv_d) *
                   (k_x + kI * mu * zeta * m.chi_zy() * (1.0 + (k_x * k_x / k2) * (1.0 - T)));
    e.g_zz_o1 = e.g_zz_o0 * (1.0 - kI * (mu * k_x * zeta / k2) * (3.0 - T) * m.chi_zy());
    return e;
}

}  // namespace feigel::greens

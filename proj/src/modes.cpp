#include "feigel/modes.hpp"

#include <cmath>
#include <stdexcept>

#include "feigel/constants.hpp"

namespace feigel::modes {

ModeSpec::ModeSpec(double k_x_, int n_, double a_) : k_x(k_x_), n(n_), a(a_) {
    if (n < 1) throw std::invalid_argument("ModeSpec: n must be >= 1");
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::invalid_argument("ModeSpec: a must be finite and > 0");
    if (!std::isfinite(k_x)) throw std::invalid_argument("ModeSpec: k_x must be finite");
}

double ModeSpec::k_n() const { return pi * n / a; }

double dispersion(const ModeSpec& mode, const MaterialParams& m) {
    const double kn = mode.k_n();
    const double q = std::sqrt(mode.k_x * mode.k_x + kn * kn);
    const double base = q / std::sqrt(m.eps() * m.mu());
    return base * (1.0 - std::sqrt(m.mu() / m.eps()) * (mode.k_x / q) * m.chi_yz());
}

FieldState te_fields(const ModeSpec& mode, const MaterialParams& m, double z,
                     double phase) {
    if (z < 0.0 || z > mode.a)
        throw std::invalid_argument("te_fields: z must lie in [0, a]");
    const double kn = mode.k_n();
    const double omega = dispersion(mode, m);
    const double amp = std::sqrt(2.0 / mode.a);
    const Complex ph = std::polar(1.0, phase);

    CVec3 E{}, B{};
    E[1] = amp * std::sin(kn * z) * ph;
    B[0] = amp * (Complex{0.0, kn / omega}) * std::cos(kn * z) * ph;
    B[2] = amp * (mode.k_x / omega) * std::sin(kn * z) * ph;
    return fields_from_eb(E, B, m);
}

InstantFields te_fields_real(const ModeSpec& mode, const MaterialParams& m,
                             double x, double z, double t) {
    const double omega = dispersion(mode, m);
    const FieldState f = te_fields(mode, m, z, mode.k_x * x - omega * t);
    return real_instant(f, m);
}

double mode_energy(const ModeSpec& mode, const MaterialParams& m) {
    const double kn = mode.k_n();
    const double q2 = mode.k_x * mode.k_x + kn * kn;
    const double omega = dispersion(mode, m);
    return 0.25 * m.eps() * (1.0 + q2 / (m.eps() * m.mu() * omega * omega));
}

double mode_flux(const ModeSpec& mode, const MaterialParams& m) {
    const double kn = mode.k_n();
    const double q2 = mode.k_x * mode.k_x + kn * kn;
    const double q = std::sqrt(q2);
    return 0.5 * (std::sqrt(m.eps() / m.mu()) * mode.k_x / q -
                  (kn * kn / q2) * m.chi_yz());
}

double mode_group_velocity(const ModeSpec& mode, const MaterialParams& m) {
    const double kn = mode.k_n();
    const double q = std::sqrt(mode.k_x * mode.k_x + kn * kn);
    return mode.k_x / (q * std::sqrt(m.eps() * m.mu())) - m.chi_yz() / m.eps();
}

double mode_momentum(const ModeSpec& mode, const MaterialParams& m) {
    const double omega = dispersion(mode, m);
    return 0.5 * m.eps() * (mode.k_x / omega) *
           (1.0 + mode.k_x * m.chi_yz() / (m.eps() * omega));
}

ModeObservables observables(const ModeSpec& mode, const MaterialParams& m) {
    ModeObservables o;
    o.omega = dispersion(mode, m);
    o.W = mode_energy(mode, m);
    o.q_x = mode_flux(mode, m);
    o.u_x = mode_group_velocity(mode, m);
    o.G_x = mode_momentum(mode, m);
    return o;
}

}  // namespace feigel::modes

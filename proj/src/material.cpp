#include "feigel/material.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace feigel {

MaterialParams::MaterialParams(double eps, double mu, const Mat3& chi, double chi_max)
    : eps_(eps), mu_(mu), chi_(chi) {
    if (!std::isfinite(eps) || eps <= 0.0)
        throw std::invalid_argument("MaterialParams: eps must be finite and > 0");
    if (!std::isfinite(mu) || mu <= 0.0)
        throw std::invalid_argument("MaterialParams: mu must be finite and > 0");
    if (!std::isfinite(chi_max) || chi_max <= 0.0)
        throw std::invalid_argument("MaterialParams: chi_max must be finite and > 0");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (!std::isfinite(chi_(i, j)))
                throw std::invalid_argument("MaterialParams: chi entries must be finite");
        }
    if (chi_norm() > chi_max)
        throw std::invalid_argument(
            "MaterialParams: max|chi_ik| = " + std::to_string(chi_norm()) +
            " exceeds chi_max = " + std::to_string(chi_max) +
            " (the formalism is first order in chi)");
}

MaterialParams MaterialParams::isotropic(double eps, double mu) {
    return MaterialParams(eps, mu, Mat3::zero());
}

MaterialParams MaterialParams::yz_coupled(double eps, double mu, double chi_yz,
                                          double chi_zy, double chi_max) {
    Mat3 chi = Mat3::zero();
    chi(1, 2) = chi_yz;
    chi(2, 1) = chi_zy;
    return MaterialParams(eps, mu, chi, chi_max);
}

double MaterialParams::chi_norm() const {
    double v = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) v = std::max(v, std::abs(chi_(i, j)));
    return v;
}

CVec3 d_from_eb(const CVec3& E, const CVec3& B, const MaterialParams& m) {
    CVec3 d = matvec(m.chi(), B);
    for (int i = 0; i < 3; ++i) d[i] += m.eps() * E[i];
    return d;
}

CVec3 h_from_eb(const CVec3& E, const CVec3& B, const MaterialParams& m) {
    CVec3 h = matvec_t(m.chi(), E);
    for (int i = 0; i < 3; ++i) h[i] = B[i] / m.mu() - h[i];
    return h;
}

EBPair invert_constitutive(const CVec3& D, const CVec3& H, const MaterialParams& m) {
    EBPair r;
    const CVec3 chiH = matvec(m.chi(), H);
    const CVec3 chiTD = matvec_t(m.chi(), D);
    for (int i = 0; i < 3; ++i) {
        r.E[i] = (D[i] - m.mu() * chiH[i]) / m.eps();
        r.B[i] = m.mu() * (H[i] + chiTD[i] / m.eps());
    }
    return r;
}

FieldState fields_from_eb(const CVec3& E, const CVec3& B, const MaterialParams& m) {
    return FieldState{E, B, d_from_eb(E, B, m), h_from_eb(E, B, m)};
}

InstantFields instant_from_eb(const Vec3& E, const Vec3& B, const MaterialParams& m) {
    InstantFields f;
    f.E = E;
    f.B = B;
    const Vec3 chiB = matvec(m.chi(), B);
    const Vec3 chiTE = matvec_t(m.chi(), E);
    for (int i = 0; i < 3; ++i) {
        f.D[i] = m.eps() * E[i] + chiB[i];
        f.H[i] = B[i] / m.mu() - chiTE[i];
    }
    return f;
}

InstantFields real_instant(const FieldState& f, const MaterialParams& m) {
    return instant_from_eb(real(f.E), real(f.B), m);
}

}  // namespace feigel

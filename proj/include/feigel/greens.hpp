#pragma once

#include <variant>

#include "feigel/linalg.hpp"
#include "feigel/material.hpp"

namespace feigel::greens {

/// Real-frequency evaluation.
struct RealFreq {
    double omega;
};

/// Imaginary-axis evaluation (omega = i zeta after the standard rotation).
struct ImagFreq {
    double zeta;
};

/// Tagged so real- and imaginary-axis evaluations cannot be mixed by accident.
using Frequency = std::variant<RealFreq, ImagFreq>;

inline bool is_rotated(const Frequency& f) {
    return std::holds_alternative<ImagFreq>(f);
}

/// omega as a complex number: the real value on the real branch, i*zeta on
/// the rotated branch.
Complex omega_of(const Frequency& f);

/// Transverse-spectral evaluation point for the reduced Green components.
/// z and zp must lie in [0, a] of the cavity they are used with.
struct SpectralPoint {
    double k_x;
    Frequency freq;
    double z;
    double zp;
};

/// Transverse constant kappa = sqrt(k_x^2 - eps mu omega^2); real and
/// positive on the rotated branch, possibly imaginary on the real branch
/// (principal square root). Throws DegeneratePoint on kappa^2 = 0.
Complex kappa(double k_x, const Frequency& f, const MaterialParams& m);

/// kappa together with its coupling-shifted companions
///   K = kappa (1 + mu k_x omega chi_zy / kappa^2),
///   L = kappa (1 - mu k_x omega chi_yz / kappa^2).
/// On the rotated branch omega = i zeta is substituted throughout, so the
/// first-order corrections are imaginary; K and L are real and positive
/// there only for vanishing coupling. Requires kappa^2 > 0 (evanescent or
/// rotated regime).
struct KappaTriple {
    double kappa;
    Complex K;
    Complex L;
};

KappaTriple shifted_constants(double k_x, const Frequency& f, const MaterialParams& m);

// Full solutions of the two decoupled component equations, including the
// source |z-z'| term and the (z+z') terms. They vanish at z = 0 and z = a
// and exist for the boundary-condition and residual tests; physics paths
// use the reduced *_eff components below.
Complex g_yy_full(const SpectralPoint& p, const MaterialParams& m, double a);
Complex g_xx_full(const SpectralPoint& p, const MaterialParams& m, double a);

// Reduced ("effective") components: only the geometry-dependent part that
// survives in physical quantities. Exponentials are evaluated in rescaled
// form, so arguments with 2*kappa*a far beyond 700 stay finite.
Complex g_xx_eff(const SpectralPoint& p, const MaterialParams& m, double a);
Complex g_yy_eff(const SpectralPoint& p, const MaterialParams& m, double a);
Complex g_zx_eff(const SpectralPoint& p, const MaterialParams& m, double a);
Complex g_xz_eff(const SpectralPoint& p, const MaterialParams& m, double a);
Complex g_zz_eff(const SpectralPoint& p, const MaterialParams& m, double a);

/// First-order coupling expansions of the reduced components and their
/// derivatives at coincidence z = z', on the rotated branch. The *_o1
/// fields carry the coupling corrections (imaginary there); the *_o0 fields
/// are the non-chiral leading forms that multiply explicit chi factors in
/// the momentum bracket and need no expansion.
struct ChiExpansions {
    Complex g_yy_o1;     // g_yy to first order in chi_yz
    Complex dz_g_zx_o1;  // d/dz g_zx to first order in chi_zy
    Complex g_zz_o1;     // g_zz to first order in chi_zy
    Complex dzz_g_xx_o0; // d^2/dz^2 g_xx, leading order
    Complex dz_g_zx_o0;  // d/dz g_zx = d/dz g_xz, leading order
    Complex g_yy_o0;
    Complex g_zz_o0;
};

/// Requires a rotated-branch point with z == zp.
ChiExpansions chi_expansions(const SpectralPoint& p, const MaterialParams& m, double a);

/// Same, addressed directly by (k_x, zeta).
ChiExpansions chi_expansions(double k_x, double zeta, const MaterialParams& m, double a);

}  // namespace feigel::greens

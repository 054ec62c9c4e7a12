#pragma once

#include "feigel/greens.hpp"
#include "feigel/material.hpp"

namespace feigel::vacuum {

/// Riemann zeta(3) by direct series summation (tail below 1.3e-13 at the
/// chosen cutoff), computed once and cached. Kept as a series so the
/// analytic oracles stay self-contained.
double zeta3();

/// Spectral two-point functions at coincidence z = z' on the imaginary
/// frequency axis, assembled from the first-order Green-component
/// expansions. The electric-magnetic pairs carry the coupling corrections;
/// the magnetic-magnetic pairs are leading order (they multiply explicit
/// coupling factors in the momentum bracket).
struct Correlators {
    Complex ey_bz;  // <E_y B_z>
    Complex ez_by;  // <E_z B_y>
    Complex by_by;  // <B_y B_y>
    Complex bz_bz;  // <B_z B_z>
};

Correlators correlators(const greens::SpectralPoint& p, const MaterialParams& m,
                        double a);

/// The full complex momentum bracket at (zeta, k_x): the correlator
/// combination whose real part (after rotation) carries the coupling-linear
/// momentum density. The coupling-free part is imaginary and odd in k_x,
/// dropping under the symmetric fold. Requires zeta > 0.
Complex momentum_bracket(double zeta, double k_x, const MaterialParams& m, double a);

/// Per-coupling-channel integrand densities: the momentum density is
///   g_x = Int ( coeff_zy * chi_zy + coeff_yz * chi_yz ) dmu
/// over the respective measure, with every constant prefactor folded in
/// (hbar = 1). Cartesian: dmu = dzeta dk_x over the first quadrant.
/// Polar: dmu = dkappa dtheta over kappa > 0, theta in [0, pi/2); regular
/// everywhere including kappa -> 0 and theta -> pi/2.
struct ChannelPair {
    double coeff_zy;
    double coeff_yz;
};

ChannelPair integrand_cartesian(double zeta, double k_x, const MaterialParams& m,
                                double a);
ChannelPair integrand_polar(double kappa, double theta, const MaterialParams& m,
                            double a);

struct QuadratureConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-14;
    double kappa_a_max = 40.0;  // radial truncation of the semi-infinite integral
    int max_subdivisions = 2000;
};

struct VacuumMomentumResult {
    double g_hat;       // coeff_zy * chi_zy + coeff_yz * chi_yz
    double coeff_zy;    // normalized coupling coefficients: a^3 * dg/dchi
    double coeff_yz;
    double abs_err_est;
    long long n_evals;
    bool converged;     // false when the tolerance could not be met
};

/// Adaptive iterated quadrature of the polar channels (theta outer, kappa
/// inner). Never returns a silently bad number: on tolerance failure the
/// best value is returned with converged = false.
VacuumMomentumResult vacuum_momentum(const MaterialParams& m, double a,
                                     const QuadratureConfig& cfg = {});

/// Cross-check path: the same coefficients through the Cartesian
/// parametrization (k_x outer, zeta inner over the first quadrant, truncated
/// at the same radial support).
VacuumMomentumResult vacuum_momentum_cartesian(const MaterialParams& m, double a,
                                               const QuadratureConfig& cfg = {});

/// Closed-form momentum density zeta(3)/(16 pi a^3) sqrt(mu/eps) chi_zy
/// (natural units, hbar = 1).
double closed_form(const MaterialParams& m, double a);

/// Radial moments of the plate factor,
///   I1 = Int kappa^2/d dkappa            = zeta(3) / (4 a^3),
///   I2 = Int kappa^2 2 kappa a e^{2ka}/d^2 dkappa = 3 zeta(3) / (4 a^3),
/// computed by quadrature and checked against the Bose-series values;
/// throws ToleranceNotMet if the two routes disagree beyond 1e-10.
struct RadialMoments {
    double i1;
    double i2;
};

RadialMoments radial_moments(double a);

}  // namespace feigel::vacuum

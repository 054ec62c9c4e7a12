#pragma once

#include "feigel/material.hpp"

namespace feigel::modes {

/// One discrete TE cavity mode: signed longitudinal wavenumber k_x (the sign
/// encodes the propagation direction) and transverse index n >= 1 giving
/// k_n = pi n / a for plates at z = 0 and z = a.
struct ModeSpec {
    double k_x;
    int n;
    double a;

    ModeSpec(double k_x_, int n_, double a_);
    double k_n() const;
};

struct ModeObservables {
    double omega;  // eigenfrequency
    double W;      // energy per unit length and width
    double q_x;    // integrated energy flux
    double u_x;    // group velocity
    double G_x;    // integrated momentum (Minkowski)
};

/// Eigenfrequency to first order in the coupling; left-movers via k_x -> -k_x.
double dispersion(const ModeSpec& mode, const MaterialParams& m);

/// Normalized TE field amplitudes at height z with phase factor e^{i phase};
/// E along y, B in the x-z plane, D and H derived through the material.
FieldState te_fields(const ModeSpec& mode, const MaterialParams& m, double z,
                     double phase);

/// Real instantaneous mode fields at (x, z, t): the real part of the complex
/// mode at phase k_x x - omega t.
InstantFields te_fields_real(const ModeSpec& mode, const MaterialParams& m,
                             double x, double z, double t);

/// Integrated energy per unit length and width, evaluated from the
/// unexpanded integral with the numeric eigenfrequency (this is the form
/// that closes the q_x = W u_x identity to first order).
double mode_energy(const ModeSpec& mode, const MaterialParams& m);

/// Integrated energy flux along x.
double mode_flux(const ModeSpec& mode, const MaterialParams& m);

/// Group velocity d omega / d k_x (analytic first-order form).
double mode_group_velocity(const ModeSpec& mode, const MaterialParams& m);

/// Integrated Minkowski momentum along x.
double mode_momentum(const ModeSpec& mode, const MaterialParams& m);

ModeObservables observables(const ModeSpec& mode, const MaterialParams& m);

}  // namespace feigel::modes

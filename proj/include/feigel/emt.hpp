#pragma once

#include <functional>

#include "feigel/linalg.hpp"
#include "feigel/material.hpp"

namespace feigel::emt {

using StressTensor = Mat3;

// Time-averaged bilinears of complex monochromatic amplitudes,
// (1/2) Re(X Y*) convention.
Vec3 poynting(const FieldState& f);                 // Re(E x H*) / 2
double energy_density(const FieldState& f);         // Re(E.D* + H.B*) / 4
Vec3 momentum_minkowski(const FieldState& f);       // Re(D x B*) / 2
Vec3 momentum_abraham(const FieldState& f);         // Re(E x H*) / 2  (c = 1)

// Un-averaged bilinears of real instantaneous fields.
Vec3 poynting(const InstantFields& f);              // E x H
double energy_density(const InstantFields& f);      // (E.D + H.B) / 2
Vec3 momentum_minkowski(const InstantFields& f);    // D x B
Vec3 momentum_abraham(const InstantFields& f);      // E x H

/// Minkowski stress on real instantaneous fields:
///   T_ik = E_i D_k + H_i B_k - (1/2) delta_ik (E.D + H.B).
/// Consumes fields only; the coupling enters solely through D and H.
StressTensor stress_minkowski(const InstantFields& f);

/// Symmetrized (Abraham) stress; symmetric by construction.
StressTensor stress_abraham(const InstantFields& f);

struct SpacetimePoint {
    double x, y, z, t;
};

/// Real instantaneous field configuration over spacetime. Must be safe for
/// concurrent evaluation; the residual routines call it at stencil offsets.
using FieldFn = std::function<InstantFields(const SpacetimePoint&)>;

/// Momentum-balance residual d_k T_ik - d_t g_i (zero charge and current)
/// by second-order central differences with spacing `step`. For an exact
/// field solution the residual vanishes at second order in step. A halved-
/// step evaluation guards the scheme: if both residuals are above the
/// finite-difference rounding floor and their norm ratio deviates from 4 by
/// more than 50%, StepTooLarge is thrown.
Vec3 conservation_residual(const FieldFn& fn, const SpacetimePoint& p, double step);

/// Energy-balance residual div S + d_t w (zero current), same scheme and
/// the same step guard.
double energy_conservation_residual(const FieldFn& fn, const SpacetimePoint& p,
                                    double step);

/// Mechanical momentum density imparted by ramping crossed static fields
/// from zero to (E0, H0): (eps mu - 1) E0 x H0 in natural units.
Vec3 abraham_impulse(const Vec3& E0, const Vec3& H0, const MaterialParams& m);

}  // namespace feigel::emt

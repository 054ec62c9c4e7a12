#pragma once

#include "feigel/linalg.hpp"

namespace feigel {

/// Homogeneous magnetoelectric medium: scalar relative permittivity and
/// permeability plus a dense 3x3 real coupling matrix chi. The whole
/// formalism is first order in chi, so the constructor rejects couplings
/// above a configurable bound (default 1e-2); larger values silently
/// invalidate every downstream expansion.
///
/// All quantities are dimensionless; the library uses natural units
/// hbar = c = eps0 = mu0 = 1 throughout.
class MaterialParams {
public:
    static constexpr double default_chi_max = 1e-2;

    MaterialParams(double eps, double mu, const Mat3& chi,
                   double chi_max = default_chi_max);

    /// Non-chiral medium (chi = 0).
    static MaterialParams isotropic(double eps, double mu);

    /// Coupling with only the (y,z) and (z,y) entries populated, the form
    /// used by the cavity calculation.
    static MaterialParams yz_coupled(double eps, double mu, double chi_yz,
                                     double chi_zy,
                                     double chi_max = default_chi_max);

    double eps() const { return eps_; }
    double mu() const { return mu_; }
    const Mat3& chi() const { return chi_; }
    double chi_yz() const { return chi_(1, 2); }
    double chi_zy() const { return chi_(2, 1); }

    /// Largest |chi_ik| entry.
    double chi_norm() const;

private:
    double eps_;
    double mu_;
    Mat3 chi_;
};

/// Complex field amplitudes at a point. D and H are always derived from
/// (E, B) through the constitutive relations, never stored independently.
struct FieldState {
    CVec3 E, B, D, H;
};

/// Real instantaneous fields (same derived-consistency contract).
struct InstantFields {
    Vec3 E, B, D, H;
};

/// D_i = eps E_i + chi_ik B_k.
CVec3 d_from_eb(const CVec3& E, const CVec3& B, const MaterialParams& m);

/// H_i = -chi_ki E_k + B_i / mu  (note the transpose on chi).
CVec3 h_from_eb(const CVec3& E, const CVec3& B, const MaterialParams& m);

struct EBPair {
    CVec3 E, B;
};

/// First-order-in-chi inversion:
///   E = (D - mu chi H) / eps,  B = mu (H + chi^T D / eps).
/// Round-trips with the forward pair to O(chi^2).
EBPair invert_constitutive(const CVec3& D, const CVec3& H, const MaterialParams& m);

FieldState fields_from_eb(const CVec3& E, const CVec3& B, const MaterialParams& m);
InstantFields instant_from_eb(const Vec3& E, const Vec3& B, const MaterialParams& m);

/// Real part of a complex field state, with D and H rebuilt from the real
/// (E, B) so the derived-consistency invariant holds.
InstantFields real_instant(const FieldState& f, const MaterialParams& m);

}  // namespace feigel

#pragma once

#include <vector>

#include "tomolight/types.hpp"

namespace tomolight {

/// Kerr medium H = chi N(N-1). Time is held as a fraction of T_rev = pi/chi so
/// that rational revival instants map to exact phases.
struct KerrParams {
    double chi = 1.0;
    double t_over_trev = 0.0;

    static KerrParams from_time(double chi, double t);
    static KerrParams at_fraction(double chi, double t_over_trev);

    double t_rev() const;
    double t() const;
};

struct FractionalRevivalSpec {
    int j = 1;
    int k = 2;
};

/// Canonical (j, k) with gcd(j, k) = 1; gcd_reduced records whether a common
/// factor was divided out.
struct CanonicalRevival {
    FractionalRevivalSpec spec;
    bool gcd_reduced = false;
};

CanonicalRevival canonical_revival(int j, int k);

FockVector evolve_kerr(const FockVector& v, const KerrParams& params);

/// f_s (k odd) or g_s (k even), s = 0..k-1.
std::vector<cplx> fractional_revival_coeffs(int k);

/// Coherent state evolved to t = T_rev/k as a k-term superposition.
CoherentSuperposition fractional_revival_state(cplx alpha, int k);

/// Coherent state evolved to t = j T_rev/k, coefficients from a length-k DFT of
/// the periodic Kerr phase. Labels are alpha e^{-2 pi i s/k}.
struct RevivalDecomposition {
    CoherentSuperposition state;
    CanonicalRevival canonical;
};
RevivalDecomposition fractional_revival_state(cplx alpha, int j, int k);

/// |psi_{l,h}> evolved to t = T_rev/k as an l*k-term superposition.
CoherentSuperposition cat_fractional_revival_state(const CatSpec& spec, int k);

/// Rotation angle of |psi_{l,h}> at t = j T_rev / l^2.
double cat_rotation_angle(int l, int h, int j);

/// |psi_{l,h}> at t = j T_rev / l^2 written as a phase times a rotated cat.
CoherentSuperposition cat_rotation_form(const CatSpec& spec, int j);

/// |<v0|vt>|^2
double autocorrelation(const FockVector& v0, const FockVector& vt);

/// <psi| a^m |psi>
cplx moment_a_power(const FockVector& v, int m);

/// <psi| x^m |psi> with x = (a + a^dag)/sqrt(2).
double moment_x_power(const FockVector& v, int m);

/// <psi| p^m |psi> with p = (a - a^dag)/(i sqrt(2)).
double moment_p_power(const FockVector& v, int m);

}  // namespace tomolight

#pragma once

#include "tomolight/types.hpp"

namespace tomolight {

void validate(const CatSpec& spec);

/// N_{l,h} for the order-l superposed coherent state.
double cat_normalization(int l, int h, double abs_alpha_sq);

/// Fock form of |psi_{l,h}>; support only on n = h (mod l).
FockVector make_cat(const CatSpec& spec, const TruncationPolicy& policy = {});
FockVector make_cat_at(const CatSpec& spec, int cutoff);

/// l terms N e^{-2 pi i r h / l} |alpha e^{2 pi i r / l}>, r = 0..l-1.
CoherentSuperposition cat_superposition_form(const CatSpec& spec);

/// <psi|psi> from pairwise coherent overlaps.
double superposition_norm_sq(const CoherentSuperposition& s);

/// Cutoff large enough for every label of s.
int superposition_cutoff(const CoherentSuperposition& s, const TruncationPolicy& policy = {});

FockVector to_fock(const CoherentSuperposition& s, const TruncationPolicy& policy = {});
FockVector to_fock_at(const CoherentSuperposition& s, int cutoff);

DensityMatrix density_from_pure(const FockVector& v);

/// Truncated lowering operator a on {|0>, ..., |cutoff>}.
Eigen::MatrixXcd lowering_operator(int cutoff);

/// |<a|b>|^2 for normalized vectors; the shorter vector is zero-padded.
double fidelity(const FockVector& a, const FockVector& b);

/// Copy of v zero-padded (or cut) to the given cutoff.
FockVector resized(const FockVector& v, int cutoff);

}  // namespace tomolight

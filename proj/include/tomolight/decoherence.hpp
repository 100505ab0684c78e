#pragma once

#include <vector>

#include "tomolight/tomography.hpp"
#include "tomolight/types.hpp"

namespace tomolight {

enum class Channel { AmplitudeDecay, PhaseDamping };

/// Every solution depends on rate * tau only, so that product is what is stored.
struct DecoherenceParams {
    Channel model = Channel::AmplitudeDecay;
    double scaled = 0.0;  ///< gamma tau or kappa tau

    static DecoherenceParams from_rate(Channel model, double rate, double tau);
};

void validate(const DecoherenceParams& p);

/// Two-mode coherent superposition sum_r c_r |a_r>|b_r>.
struct TwoModeTerm {
    cplx coeff;
    cplx label1;
    cplx label2;
};
struct TwoModeSuperposition {
    std::vector<TwoModeTerm> terms;
};

/// |Phi>_h as coherent labels: N e^{-2 pi i r h/l} |alpha_r/sqrt2>|alpha_r/sqrt2>.
TwoModeSuperposition beam_split_cat_form(const CatSpec& spec);

TwoModeState to_two_mode(const TwoModeSuperposition& s, int cutoff1, int cutoff2);

// ---- single mode ----

/// rho(tau) = sum c_r c_r'^* <a_r'|a_r>^{1 - e^{-2 gamma tau}} |a_r e^{-gamma tau}><a_r' e^{-gamma tau}|
DensityMatrix amp_decay_superposition(const CoherentSuperposition& s, const DecoherenceParams& p,
                                      const TruncationPolicy& policy = {});
DensityMatrix amp_decay_superposition_at(const CoherentSuperposition& s, const DecoherenceParams& p, int cutoff);

/// Amplitude decay of an arbitrary density matrix through its Kraus operators.
DensityMatrix amp_decay_density(const DensityMatrix& rho0, const DecoherenceParams& p);

/// rho_{n n'} e^{-kappa tau (n - n')^2}
DensityMatrix phase_damp_density(const DensityMatrix& rho0, const DecoherenceParams& p);

/// Closed-form tomogram of an amplitude-decayed coherent superposition.
TomogramGrid amp_decay_tomogram(const CoherentSuperposition& s, const DecoherenceParams& p, const QuadratureGrid& grid);

/// gamma tau -> infinity: the vacuum projector.
DensityMatrix amp_decay_long_time(int cutoff);

/// kappa tau -> infinity: only the diagonal survives.
DensityMatrix phase_damp_long_time(const DensityMatrix& rho0);

// ---- two modes, equal couplings ----

TwoModeState two_mode_amp_decay(const TwoModeSuperposition& s, const DecoherenceParams& p, int cutoff1, int cutoff2);

/// Beam-split cat under amplitude decay. cutoff <= 0 selects the cat's cutoff.
TwoModeState two_mode_amp_decay(const CatSpec& spec, const DecoherenceParams& p, int cutoff = 0);

/// Kraus form on any two-mode state.
TwoModeState two_mode_amp_decay_state(const TwoModeState& s, const DecoherenceParams& p);

/// rho_{m1 m2; n1 n2} e^{-kappa tau [(m1 - n1)^2 + (m2 - n2)^2]}
TwoModeState two_mode_phase_damp_state(const TwoModeState& s, const DecoherenceParams& p);

/// Beam-split cat under phase damping. cutoff <= 0 selects the cat's cutoff.
TwoModeState two_mode_phase_damp(const CatSpec& spec, const DecoherenceParams& p, int cutoff = 0);

/// kappa tau -> infinity limit of the beam-split 2-cat, built from the
/// diagonal element formula.
TwoModeState two_mode_phase_damp_long_time(const CatSpec& spec, int cutoff);

}  // namespace tomolight

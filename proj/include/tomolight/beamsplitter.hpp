#pragma once

#include <vector>

#include "tomolight/types.hpp"

namespace tomolight {

enum class Mode { C, D };

struct EntanglementResult {
    double value = 0.0;           ///< ebits
    std::vector<double> spectrum;  ///< eigenvalues before clipping
    int clipped = 0;              ///< eigenvalues below the clip threshold
};

inline constexpr double kEigenClip = 1e-14;

/// 50/50 beam splitter with vacuum in the second port:
/// c_{p, n-p} = c_n 2^{-n/2} sqrt(C(n, p)). Both output cutoffs equal v.cutoff().
TwoModeState bs_transform(const FockVector& v);

/// Same, with the output truncated to the given per-mode cutoffs.
TwoModeState bs_transform(const FockVector& v, int cutoff1, int cutoff2);

/// |Phi>_h: beam-split |psi_{l,h}>.
TwoModeState beam_split_cat(const CatSpec& spec, const TruncationPolicy& policy = {});

DensityMatrix reduced_density(const TwoModeState& s, Mode mode);

/// -sum lambda log2 lambda over eigenvalues above kEigenClip.
EntanglementResult von_neumann_entropy(const DensityMatrix& rho);

/// Entropy of entanglement of a pure two-mode state (Schmidt coefficients), or
/// von Neumann entropy of the mode-c reduction of a mixed one.
EntanglementResult entanglement_entropy(const TwoModeState& s);

/// Partial transpose on mode c.
Eigen::MatrixXcd partial_transpose(const TwoModeState& s);

/// log2 of the trace norm of the partial transpose.
EntanglementResult log_negativity(const TwoModeState& s);

/// (<n^2> - <n>^2)/<n> - 1, with 0 for the vacuum.
double mandel_q(const FockVector& v);

/// Normalized mode-c state after measuring X_{theta2} = x2 on mode d.
FockVector conditional_project(const TwoModeState& s, double x2, double theta2);

/// Mixed-state counterpart of conditional_project (works for pure input too).
DensityMatrix conditional_density(const TwoModeState& s, double x2, double theta2);

/// Kerr evolution, beam splitter and entanglement entropy at each t/T_rev.
/// cutoff <= 0 keeps the automatic coherent cutoff.
std::vector<double> entanglement_timeseries(cplx alpha, double chi, const std::vector<double>& t_over_trev,
                                            int cutoff = 0);

/// Copy with both modes cut (or zero-padded) to the given cutoffs.
TwoModeState truncated(const TwoModeState& s, int cutoff1, int cutoff2);

}  // namespace tomolight

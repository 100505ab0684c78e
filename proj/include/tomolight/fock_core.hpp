#pragma once

#include <vector>

#include "tomolight/types.hpp"

namespace tomolight {

/// Normalized oscillator eigenfunction psi_n(x) = H_n(x) e^{-x^2/2} / sqrt(2^n n! sqrt(pi)),
/// evaluated by the three-term recurrence on psi_n itself.
double hermite_psi(int n, double x);

/// psi_0(x) .. psi_nmax(x) in one recurrence sweep.
std::vector<double> hermite_psi_all(int nmax, double x);

/// Table T(n, j) = psi_n(xs[j]) for n = 0..nmax.
Eigen::MatrixXd hermite_table(int nmax, const std::vector<double>& xs);

double log_factorial(int n);

/// P(N > cutoff) for N ~ Poisson(mean).
double poisson_tail(double mean, int cutoff);

/// Cutoff used for a coherent state with the given mean photon number.
int coherent_cutoff(double abs_alpha_sq, const TruncationPolicy& policy = {});

FockVector coherent_amps(cplx alpha, const TruncationPolicy& policy = {});

/// Same amplitudes at a caller-chosen cutoff (no tail check).
FockVector coherent_amps_at(cplx alpha, int cutoff);

/// <X_theta, theta | alpha>
cplx quad_overlap_coherent(double x, double theta, cplx alpha);

/// <X_theta, theta | n> = psi_n(x) e^{-i n theta}
cplx quad_overlap_fock(double x, double theta, int n);

/// <beta | alpha> for two coherent states.
cplx coherent_overlap(cplx beta, cplx alpha);

/// Argument of alpha mapped into [0, 2 pi).
double principal_arg(cplx alpha);

}  // namespace tomolight

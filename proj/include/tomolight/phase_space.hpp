#pragma once

#include <vector>

#include "tomolight/types.hpp"

namespace tomolight {

/// Phase-plane sample points, beta = (x + i p)/sqrt(2).
struct PhasePlaneGrid {
    std::vector<double> x;
    std::vector<double> p;

    std::size_t n_x() const { return x.size(); }
    std::size_t n_p() const { return p.size(); }
};

PhasePlaneGrid make_phase_plane_grid(double extent = 12.0, std::size_t n = 481);
void validate(const PhasePlaneGrid& g);

/// W(x_i, p_j) of a coherent superposition, normalized so that the integral
/// over d^2 beta = dx dp / 2 is one (single coherent state peaks at 2/pi).
Eigen::MatrixXd wigner_superposition(const CoherentSuperposition& s, const PhasePlaneGrid& grid);

/// Q(beta) = |<beta|psi>|^2 / pi.
Eigen::MatrixXd husimi_q(const FockVector& v, const PhasePlaneGrid& grid);

/// 2 pi |alpha| / (2 sqrt(ln 10))
double n_max_distinguishable(double abs_alpha);

/// Trapezoid integral of a sampled phase-plane function over d^2 beta.
double phase_plane_integral(const Eigen::MatrixXd& f, const PhasePlaneGrid& grid);

/// Position density from the Wigner function: (1/2) * integral of W over p.
std::vector<double> wigner_position_marginal(const Eigen::MatrixXd& w, const PhasePlaneGrid& grid);

/// Points that dominate their 3x3 neighbourhood and exceed
/// fraction * (global maximum).
int count_lobes(const Eigen::MatrixXd& f, double fraction = 0.5);

}  // namespace tomolight

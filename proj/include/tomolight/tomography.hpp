#pragma once

#include <vector>

#include "tomolight/types.hpp"

namespace tomolight {

/// Sample points in the X_theta - theta plane. x is uniform, symmetric about
/// zero and has an odd number of points.
struct QuadratureGrid {
    std::vector<double> theta;
    std::vector<double> x;

    std::size_t n_theta() const { return theta.size(); }
    std::size_t n_x() const { return x.size(); }
    double dx() const { return x.size() > 1 ? x[1] - x[0] : 0.0; }
};

/// theta in [0, 2 pi] with n_theta points, x in [-x_max, x_max] with n_x points.
QuadratureGrid make_quadrature_grid(std::size_t n_theta = 201, double x_max = 12.0, std::size_t n_x = 1201);
QuadratureGrid make_quadrature_grid(std::vector<double> thetas, double x_max, std::size_t n_x);
void validate(const QuadratureGrid& g);

struct TomogramGrid {
    QuadratureGrid grid;
    Eigen::MatrixXd omega;  ///< n_theta x n_x
};

/// Two-mode tomogram stored as one (n_x1 x n_x2) slice per (theta1, theta2).
struct TwoModeTomogramGrid {
    QuadratureGrid grid1;
    QuadratureGrid grid2;
    std::vector<Eigen::MatrixXd> slices;  ///< index i1 * n_theta2 + i2

    const Eigen::MatrixXd& at(std::size_t i1, std::size_t i2) const { return slices[i1 * grid2.n_theta() + i2]; }
};

/// Upper bound on the number of stored values of a materialized two-mode grid.
inline constexpr std::size_t kMaxTwoModeEntries = 10'000'000;

TomogramGrid tomogram_pure(const FockVector& v, const QuadratureGrid& grid);
TomogramGrid tomogram_coherent_closed(cplx alpha, const QuadratureGrid& grid);
TomogramGrid tomogram_superposition_closed(const CoherentSuperposition& s, const QuadratureGrid& grid);
TomogramGrid tomogram_density(const DensityMatrix& rho, const QuadratureGrid& grid);

/// The pure-state exponential factor of a coherent label, so that
/// <X, theta | beta> = eta(X, theta, beta) / pi^{1/4}.
cplx eta_factor(double x, double theta, cplx beta);

/// One (theta1, theta2) slice of a two-mode tomogram over x1 x x2.
Eigen::MatrixXd tomogram_two_mode_slice(const TwoModeState& state, double theta1, double theta2,
                                        const std::vector<double>& x1, const std::vector<double>& x2);

TwoModeTomogramGrid tomogram_two_mode(const TwoModeState& state, const QuadratureGrid& grid1,
                                      const QuadratureGrid& grid2);

/// Single-mode tomogram of mode c after measuring X_{theta2} = x2 on mode d.
TomogramGrid conditional_tomogram(const TwoModeState& state, double x2, double theta2, const QuadratureGrid& grid);

/// Trapezoid integral over x of every theta row.
std::vector<double> row_normalization(const TomogramGrid& t);

/// Largest |omega(X, theta + pi) - omega(-X, theta)| over matched grid rows.
double symmetry_defect(const TomogramGrid& t);

/// Interior points with y[i-1] < y[i] >= y[i+1] and y[i] > threshold.
int count_local_maxima(const std::vector<double>& y, double threshold);

/// Strand threshold 0.1 / sqrt(pi).
double default_strand_threshold();

std::vector<double> tomogram_row(const TomogramGrid& t, std::size_t theta_index);

}  // namespace tomolight

#pragma once

#include <vector>

#include "tomolight/types.hpp"

namespace tomolight {

/// Conjugate Rényi orders with 1/zeta + 1/eta = 2.
struct RenyiOrderPair {
    double zeta = 2.0 / 3.0;
    double eta = 2.0;

    static RenyiOrderPair from_zeta(double zeta);
};

void validate(const RenyiOrderPair& orders);

/// Default quadrature grid for entropies: [-16, 16] with 3201 points.
std::vector<double> entropy_grid();

/// |sum_n c_n psi_n(x)|^2
std::vector<double> position_density(const FockVector& v, const std::vector<double>& xs);

/// |sum_n (-i)^n c_n psi_n(p)|^2
std::vector<double> momentum_density(const FockVector& v, const std::vector<double>& ps);

/// ln(trapezoid of f^order) / (1 - order) on a uniform grid.
double renyi_entropy(const std::vector<double>& density, const std::vector<double>& xs, double order);

double renyi_bound(const RenyiOrderPair& orders);

/// Limit of the bound as both orders tend to one.
inline constexpr double kShannonBound = 2.1447298858494002;  // 1 + ln(pi)

/// Position (order zeta) plus momentum (order eta) Rényi entropies of the
/// Kerr-evolved state at each t/T_rev. An empty xs selects entropy_grid().
std::vector<double> renyi_sum_timeseries(const FockVector& initial, double chi, const std::vector<double>& t_over_trev,
                                         const RenyiOrderPair& orders, std::vector<double> xs = {});

}  // namespace tomolight

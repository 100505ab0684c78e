#include "tomolight/entropy.hpp"

#include <cmath>

#include "tomolight/fock_core.hpp"
#include "tomolight/kerr_dynamics.hpp"
#include "tomolight/parallel.hpp"
#include "tomolight/quadrature.hpp"

namespace tomolight {

RenyiOrderPair RenyiOrderPair::from_zeta(double zeta) {
    RenyiOrderPair o{zeta, zeta / (2.0 * zeta - 1.0)};
    validate(o);
    return o;
}

void validate(const RenyiOrderPair& o) {
    if (!(o.zeta > 0.0) || !(o.eta > 0.0) || !std::isfinite(o.zeta) || !std::isfinite(o.eta)) {
        throw InvalidArgument("Rényi orders must be positive and finite");
    }
    if (o.zeta == 1.0 || o.eta == 1.0) throw InvalidArgument("order 1 is the Shannon limit; use kShannonBound");
    if (std::abs(1.0 / o.zeta + 1.0 / o.eta - 2.0) > 1e-12) throw InvalidArgument("orders must satisfy 1/zeta + 1/eta = 2");
}

std::vector<double> entropy_grid() { return linspace(-16.0, 16.0, 3201); }

namespace {

std::vector<double> density_from_table(const Eigen::VectorXcd& c, const Eigen::MatrixXd& psi) {
    const Eigen::RowVectorXd re = c.real().transpose() * psi;
    const Eigen::RowVectorXd im = c.imag().transpose() * psi;
    std::vector<double> out(static_cast<std::size_t>(psi.cols()));
    for (Eigen::Index j = 0; j < psi.cols(); ++j) out[static_cast<std::size_t>(j)] = re(j) * re(j) + im(j) * im(j);
    return out;
}

Eigen::VectorXcd momentum_coeffs(const Eigen::VectorXcd& c) {
    static const cplx phases[4] = {{1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
    Eigen::VectorXcd out(c.size());
    for (Eigen::Index n = 0; n < c.size(); ++n) out(n) = c(n) * phases[n % 4];
    return out;
}

double grid_step(const std::vector<double>& xs) {
    if (xs.size() < 2) throw InvalidArgument("quadrature grid needs at least 2 points");
    const double d = xs[1] - xs[0];
    if (!(d > 0.0)) throw InvalidArgument("quadrature grid must be increasing");
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (std::abs(xs[i] - xs[i - 1] - d) > 1e-9 * d) throw InvalidArgument("quadrature grid must be uniform");
    }
    return d;
}

}  // namespace

std::vector<double> position_density(const FockVector& v, const std::vector<double>& xs) {
    return density_from_table(v.amps, hermite_table(v.cutoff(), xs));
}

std::vector<double> momentum_density(const FockVector& v, const std::vector<double>& ps) {
    return density_from_table(momentum_coeffs(v.amps), hermite_table(v.cutoff(), ps));
}

double renyi_entropy(const std::vector<double>& density, const std::vector<double>& xs, double order) {
    if (!(order > 0.0) || order == 1.0) throw InvalidArgument("Rényi order must be positive and different from 1");
    if (density.size() != xs.size()) throw InvalidArgument("density and grid sizes differ");
    const double dx = grid_step(xs);
    const double mass = trapezoid(density, dx);
    if (std::abs(mass - 1.0) > 1e-3) {
        throw NonNormalizedDensity("density integrates to " + std::to_string(mass) + " instead of 1");
    }
    std::vector<double> powered(density.size());
    for (std::size_t i = 0; i < density.size(); ++i) powered[i] = std::pow(std::max(density[i], 0.0), order);
    return std::log(trapezoid(powered, dx)) / (1.0 - order);
}

double renyi_bound(const RenyiOrderPair& o) {
    validate(o);
    return -std::log(o.zeta / kPi) / (2.0 * (1.0 - o.zeta)) - std::log(o.eta / kPi) / (2.0 * (1.0 - o.eta));
}

std::vector<double> renyi_sum_timeseries(const FockVector& initial, double chi, const std::vector<double>& t_over_trev,
                                         const RenyiOrderPair& orders, std::vector<double> xs) {
    validate(orders);
    for (double f : t_over_trev) {
        if (!(f >= 0.0 && f <= 1.0)) throw InvalidArgument("times must lie within [0, T_rev]");
    }
    if (xs.empty()) xs = entropy_grid();
    const Eigen::MatrixXd psi = hermite_table(initial.cutoff(), xs);
    std::vector<double> out(t_over_trev.size());
    parallel_for(t_over_trev.size(), [&](std::size_t i) {
        const FockVector vt = evolve_kerr(initial, KerrParams::at_fraction(chi, t_over_trev[i]));
        const double rx = renyi_entropy(density_from_table(vt.amps, psi), xs, orders.zeta);
        const double rp = renyi_entropy(density_from_table(momentum_coeffs(vt.amps), psi), xs, orders.eta);
        out[i] = rx + rp;
    });
    return out;
}

}  // namespace tomolight

#include "tomolight/tomography.hpp"

#include <cmath>

#include "tomolight/beamsplitter.hpp"
#include "tomolight/fock_core.hpp"
#include "tomolight/parallel.hpp"
#include "tomolight/quadrature.hpp"

namespace tomolight {

namespace {

const double kInvSqrtPi = 1.0 / std::sqrt(kPi);

TomogramGrid empty_like(const QuadratureGrid& grid) {
    validate(grid);
    TomogramGrid t;
    t.grid = grid;
    t.omega = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(grid.n_theta()), static_cast<Eigen::Index>(grid.n_x()));
    return t;
}

// P(n, j) = psi_n(x_j) e^{-i n theta}
Eigen::MatrixXcd phased_table(const Eigen::MatrixXd& psi, double theta) {
    Eigen::MatrixXcd p(psi.rows(), psi.cols());
    for (Eigen::Index n = 0; n < psi.rows(); ++n) {
        p.row(n) = psi.row(n).cast<cplx>() * std::polar(1.0, -static_cast<double>(n) * theta);
    }
    return p;
}

}  // namespace

QuadratureGrid make_quadrature_grid(std::size_t n_theta, double x_max, std::size_t n_x) {
    return make_quadrature_grid(linspace(0.0, 2.0 * kPi, n_theta), x_max, n_x);
}

QuadratureGrid make_quadrature_grid(std::vector<double> thetas, double x_max, std::size_t n_x) {
    QuadratureGrid g;
    g.theta = std::move(thetas);
    g.x = linspace(-x_max, x_max, n_x);
    if (n_x % 2 == 1) g.x[n_x / 2] = 0.0;
    validate(g);
    return g;
}

void validate(const QuadratureGrid& g) {
    if (g.x.size() < 3 || g.x.size() % 2 == 0) throw InvalidArgument("x grid needs an odd number (>= 3) of points");
    if (g.theta.empty()) throw InvalidArgument("theta grid is empty");
    const double dx = g.dx();
    if (!(dx > 0.0)) throw InvalidArgument("x grid must be increasing");
    for (std::size_t i = 1; i < g.x.size(); ++i) {
        if (std::abs((g.x[i] - g.x[i - 1]) - dx) > 1e-9 * dx) throw InvalidArgument("x grid must be uniform");
    }
    if (std::abs(g.x.front() + g.x.back()) > 1e-9 * dx) throw InvalidArgument("x grid must be symmetric about 0");
    for (std::size_t i = 1; i < g.theta.size(); ++i) {
        if (!(g.theta[i] >= g.theta[i - 1])) throw InvalidArgument("theta grid must be sorted");
    }
}

TomogramGrid tomogram_pure(const FockVector& v, const QuadratureGrid& grid) {
    TomogramGrid t = empty_like(grid);
    const Eigen::MatrixXd psi = hermite_table(v.cutoff(), grid.x);
    parallel_for(grid.n_theta(), [&](std::size_t i) {
        Eigen::VectorXcd b(v.cutoff() + 1);
        for (int n = 0; n <= v.cutoff(); ++n) b(n) = v.amps(n) * std::polar(1.0, -n * grid.theta[i]);
        const Eigen::RowVectorXd re = b.real().transpose() * psi;
        const Eigen::RowVectorXd im = b.imag().transpose() * psi;
        t.omega.row(static_cast<Eigen::Index>(i)) = re.array().square() + im.array().square();
    });
    return t;
}

TomogramGrid tomogram_coherent_closed(cplx alpha, const QuadratureGrid& grid) {
    TomogramGrid t = empty_like(grid);
    const double r = std::abs(alpha);
    const double delta = std::arg(alpha);
    parallel_for(grid.n_theta(), [&](std::size_t i) {
        const double centre = std::sqrt(2.0) * r * std::cos(delta - grid.theta[i]);
        for (std::size_t j = 0; j < grid.n_x(); ++j) {
            const double d = grid.x[j] - centre;
            t.omega(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = kInvSqrtPi * std::exp(-d * d);
        }
    });
    return t;
}

cplx eta_factor(double x, double theta, cplx beta) {
    const cplx e1 = std::polar(1.0, -theta);
    return std::exp(-0.5 * std::norm(beta) - 0.5 * x * x + std::sqrt(2.0) * beta * x * e1 - 0.5 * beta * beta * e1 * e1);
}

TomogramGrid tomogram_superposition_closed(const CoherentSuperposition& s, const QuadratureGrid& grid) {
    TomogramGrid t = empty_like(grid);
    parallel_for(grid.n_theta(), [&](std::size_t i) {
        for (std::size_t j = 0; j < grid.n_x(); ++j) {
            cplx amp = 0.0;
            for (const auto& term : s.terms) amp += term.coeff * eta_factor(grid.x[j], grid.theta[i], term.label);
            t.omega(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = kInvSqrtPi * std::norm(amp);
        }
    });
    return t;
}

TomogramGrid tomogram_density(const DensityMatrix& rho, const QuadratureGrid& grid) {
    const int n = rho.dim() - 1;
    if (n < 0) throw InvalidArgument("empty density matrix");
    const double herm = (rho.elems - rho.elems.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-10 * std::max(1.0, rho.elems.cwiseAbs().maxCoeff())) {
        throw InvalidArgument("density matrix is not Hermitian");
    }
    TomogramGrid t = empty_like(grid);
    const Eigen::MatrixXd psi = hermite_table(n, grid.x);
    std::vector<int> bad(grid.n_x(), 0);
    parallel_for(grid.n_x(), [&](std::size_t j) {
        const Eigen::Index jj = static_cast<Eigen::Index>(j);
        // S_d = sum_m rho_{m, m-d} psi_m psi_{m-d}, d >= 0
        std::vector<cplx> s(static_cast<std::size_t>(n) + 1, 0.0);
        for (int d = 0; d <= n; ++d) {
            cplx acc = 0.0;
            for (int m = d; m <= n; ++m) acc += rho.elems(m, m - d) * (psi(m, jj) * psi(m - d, jj));
            s[d] = acc;
        }
        for (std::size_t i = 0; i < grid.n_theta(); ++i) {
            double w = s[0].real();
            for (int d = 1; d <= n; ++d) w += 2.0 * (s[d] * std::polar(1.0, -d * grid.theta[i])).real();
            if (w < -1e-6) bad[j] = 1;
            t.omega(static_cast<Eigen::Index>(i), jj) = std::max(w, 0.0);
        }
    });
    for (int b : bad) {
        if (b) throw NegativeTomogram("tomogram value below -1e-6; density matrix is not positive");
    }
    return t;
}

Eigen::MatrixXd tomogram_two_mode_slice(const TwoModeState& state, double theta1, double theta2,
                                        const std::vector<double>& x1, const std::vector<double>& x2) {
    const Eigen::MatrixXcd p1 = phased_table(hermite_table(state.cutoff1, x1), theta1);
    const Eigen::MatrixXcd p2 = phased_table(hermite_table(state.cutoff2, x2), theta2);
    const Eigen::Index n1 = static_cast<Eigen::Index>(x1.size());
    const Eigen::Index n2 = static_cast<Eigen::Index>(x2.size());
    if (state.is_pure()) {
        // <psi|X1,th1>|X2,th2> conjugated: sum_mn c_mn P1(m,x1) P2(n,x2)
        const Eigen::MatrixXcd amp = p1.transpose() * state.amps * p2;
        return amp.cwiseAbs2();
    }
    const int d1 = state.cutoff1 + 1;
    const int d2 = state.cutoff2 + 1;
    // M_j(m1, n1) = sum_{m2, n2} rho[m1 m2; n1 n2] P2(m2, j) conj(P2(n2, j))
    std::vector<Eigen::MatrixXcd> m(static_cast<std::size_t>(n2), Eigen::MatrixXcd::Zero(d1, d1));
    const Eigen::MatrixXcd p2c = p2.conjugate();
    for (int m1 = 0; m1 < d1; ++m1) {
        for (int k1 = 0; k1 < d1; ++k1) {
            const Eigen::MatrixXcd block = state.rho.block(m1 * d2, k1 * d2, d2, d2);
            const Eigen::MatrixXcd v = block * p2c;
            for (Eigen::Index j = 0; j < n2; ++j) m[static_cast<std::size_t>(j)](m1, k1) = (p2.col(j).transpose() * v.col(j)).value();
        }
    }
    Eigen::MatrixXd out(n1, n2);
    const Eigen::MatrixXcd p1c = p1.conjugate();
    for (Eigen::Index j = 0; j < n2; ++j) {
        const Eigen::MatrixXcd w = m[static_cast<std::size_t>(j)] * p1c;
        for (Eigen::Index i = 0; i < n1; ++i) {
            out(i, j) = (p1.col(i).transpose() * w.col(i)).value().real();
        }
    }
    return out;
}

TwoModeTomogramGrid tomogram_two_mode(const TwoModeState& state, const QuadratureGrid& grid1,
                                      const QuadratureGrid& grid2) {
    validate(grid1);
    validate(grid2);
    const std::size_t total = grid1.n_theta() * grid2.n_theta() * grid1.n_x() * grid2.n_x();
    if (total > kMaxTwoModeEntries) {
        throw InvalidArgument("two-mode tomogram grid has " + std::to_string(total) +
                              " entries; request individual (theta1, theta2) slices instead");
    }
    TwoModeTomogramGrid out;
    out.grid1 = grid1;
    out.grid2 = grid2;
    out.slices.resize(grid1.n_theta() * grid2.n_theta());
    parallel_for(out.slices.size(), [&](std::size_t idx) {
        const std::size_t i1 = idx / grid2.n_theta();
        const std::size_t i2 = idx % grid2.n_theta();
        out.slices[idx] = tomogram_two_mode_slice(state, grid1.theta[i1], grid2.theta[i2], grid1.x, grid2.x);
    });
    return out;
}

TomogramGrid conditional_tomogram(const TwoModeState& state, double x2, double theta2, const QuadratureGrid& grid) {
    if (state.is_pure()) return tomogram_pure(conditional_project(state, x2, theta2), grid);
    return tomogram_density(conditional_density(state, x2, theta2), grid);
}

std::vector<double> row_normalization(const TomogramGrid& t) {
    std::vector<double> out(t.grid.n_theta());
    const double dx = t.grid.dx();
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Eigen::RowVectorXd row = t.omega.row(static_cast<Eigen::Index>(i));
        out[i] = trapezoid(row.data(), static_cast<std::size_t>(row.size()), dx);
    }
    return out;
}

double symmetry_defect(const TomogramGrid& t) {
    double worst = 0.0;
    const auto& th = t.grid.theta;
    const Eigen::Index nx = static_cast<Eigen::Index>(t.grid.n_x());
    for (std::size_t i = 0; i < th.size(); ++i) {
        for (std::size_t k = 0; k < th.size(); ++k) {
            if (std::abs(th[k] - (th[i] + kPi)) > 1e-12) continue;
            for (Eigen::Index j = 0; j < nx; ++j) {
                const double d = std::abs(t.omega(static_cast<Eigen::Index>(k), j) -
                                          t.omega(static_cast<Eigen::Index>(i), nx - 1 - j));
                worst = std::max(worst, d);
            }
        }
    }
    return worst;
}

int count_local_maxima(const std::vector<double>& y, double threshold) {
    int count = 0;
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        if (y[i] > threshold && y[i] > y[i - 1] && y[i] >= y[i + 1]) ++count;
    }
    return count;
}

double default_strand_threshold() { return 0.1 * kInvSqrtPi; }

std::vector<double> tomogram_row(const TomogramGrid& t, std::size_t theta_index) {
    const Eigen::RowVectorXd row = t.omega.row(static_cast<Eigen::Index>(theta_index));
    return std::vector<double>(row.data(), row.data() + row.size());
}

}  // namespace tomolight

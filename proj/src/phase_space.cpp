#include "tomolight/phase_space.hpp"

#include <cmath>

#include "tomolight/parallel.hpp"
#include "tomolight/quadrature.hpp"

namespace tomolight {

namespace {

void check_uniform(const std::vector<double>& v, const char* name) {
    if (v.size() < 3) throw InvalidArgument(std::string(name) + " grid needs at least 3 points");
    const double d = v[1] - v[0];
    if (!(d > 0.0)) throw InvalidArgument(std::string(name) + " grid must be increasing");
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (std::abs(v[i] - v[i - 1] - d) > 1e-9 * d) throw InvalidArgument(std::string(name) + " grid must be uniform");
    }
    if (std::abs(v.front() + v.back()) > 1e-9 * d) throw InvalidArgument(std::string(name) + " grid must be symmetric");
}

cplx beta_at(double x, double p) { return cplx(x, p) / std::sqrt(2.0); }

}  // namespace

PhasePlaneGrid make_phase_plane_grid(double extent, std::size_t n) {
    PhasePlaneGrid g{linspace(-extent, extent, n), linspace(-extent, extent, n)};
    validate(g);
    return g;
}

void validate(const PhasePlaneGrid& g) {
    check_uniform(g.x, "x");
    check_uniform(g.p, "p");
}

Eigen::MatrixXd wigner_superposition(const CoherentSuperposition& s, const PhasePlaneGrid& grid) {
    validate(grid);
    const std::size_t n = s.terms.size();
    if (n == 0) throw InvalidArgument("empty superposition");
    Eigen::MatrixXcd kern(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            kern(i, j) = std::exp(-s.terms[i].label * std::conj(s.terms[j].label));

    Eigen::MatrixXd w(grid.n_x(), grid.n_p());
    parallel_for(grid.n_x(), [&](std::size_t ix) {
        Eigen::VectorXcd u(n);
        for (std::size_t jp = 0; jp < grid.n_p(); ++jp) {
            const cplx b = beta_at(grid.x[ix], grid.p[jp]);
            const double bb = std::norm(b);
            for (std::size_t i = 0; i < n; ++i) {
                const cplx a = s.terms[i].label;
                u(i) = s.terms[i].coeff * std::exp(2.0 * std::conj(b) * a - 0.5 * std::norm(a) - bb);
            }
            const cplx val = (u.transpose() * kern * u.conjugate()).value();
            w(ix, jp) = 2.0 / kPi * val.real();
        }
    });
    return w;
}

Eigen::MatrixXd husimi_q(const FockVector& v, const PhasePlaneGrid& grid) {
    validate(grid);
    Eigen::MatrixXd q(grid.n_x(), grid.n_p());
    parallel_for(grid.n_x(), [&](std::size_t ix) {
        for (std::size_t jp = 0; jp < grid.n_p(); ++jp) {
            const cplx bc = std::conj(beta_at(grid.x[ix], grid.p[jp]));
            // term_n = e^{-|beta|^2/2} (beta*)^n / sqrt(n!)
            cplx term = std::exp(-0.5 * std::norm(bc));
            cplx acc = v.amps(0) * term;
            for (int k = 1; k <= v.cutoff(); ++k) {
                term *= bc / std::sqrt(static_cast<double>(k));
                acc += v.amps(k) * term;
            }
            q(ix, jp) = std::norm(acc) / kPi;
        }
    });
    return q;
}

double n_max_distinguishable(double abs_alpha) {
    if (!(abs_alpha >= 0.0)) throw InvalidArgument("|alpha| must be non-negative");
    return 2.0 * kPi * abs_alpha / (2.0 * std::sqrt(std::log(10.0)));
}

double phase_plane_integral(const Eigen::MatrixXd& f, const PhasePlaneGrid& grid) {
    if (static_cast<std::size_t>(f.rows()) != grid.n_x() || static_cast<std::size_t>(f.cols()) != grid.n_p()) {
        throw InvalidArgument("sample matrix does not match the grid");
    }
    const double dp = grid.p[1] - grid.p[0];
    std::vector<double> rows(grid.n_x());
    for (std::size_t i = 0; i < grid.n_x(); ++i) {
        const Eigen::RowVectorXd r = f.row(static_cast<Eigen::Index>(i));
        rows[i] = trapezoid(r.data(), grid.n_p(), dp);
    }
    return 0.5 * trapezoid(rows.data(), rows.size(), grid.x[1] - grid.x[0]);
}

std::vector<double> wigner_position_marginal(const Eigen::MatrixXd& w, const PhasePlaneGrid& grid) {
    if (static_cast<std::size_t>(w.rows()) != grid.n_x() || static_cast<std::size_t>(w.cols()) != grid.n_p()) {
        throw InvalidArgument("sample matrix does not match the grid");
    }
    const double dp = grid.p[1] - grid.p[0];
    std::vector<double> out(grid.n_x());
    for (std::size_t i = 0; i < grid.n_x(); ++i) {
        const Eigen::RowVectorXd r = w.row(static_cast<Eigen::Index>(i));
        out[i] = 0.5 * trapezoid(r.data(), grid.n_p(), dp);
    }
    return out;
}

int count_lobes(const Eigen::MatrixXd& f, double fraction) {
    const double threshold = fraction * f.maxCoeff();
    int count = 0;
    for (Eigen::Index i = 1; i + 1 < f.rows(); ++i) {
        for (Eigen::Index j = 1; j + 1 < f.cols(); ++j) {
            const double v = f(i, j);
            if (!(v > threshold)) continue;
            bool peak = true;
            for (int di = -1; di <= 1 && peak; ++di) {
                for (int dj = -1; dj <= 1; ++dj) {
                    if (di == 0 && dj == 0) continue;
                    const double nb = f(i + di, j + dj);
                    // ties with neighbours already scanned reject the point
                    const bool earlier = di < 0 || (di == 0 && dj < 0);
                    if (earlier ? !(v > nb) : !(v >= nb)) {
                        peak = false;
                        break;
                    }
                }
            }
            if (peak) ++count;
        }
    }
    return count;
}

}  // namespace tomolight

#pragma once

// Reference computations used only by the tests. None of them calls into the
// library routine it is checking.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;

// Poisson pmf by a running product, no factorial tables.
inline double poisson_pmf(int k, double mean) {
    double p = std::exp(-mean);
    for (int i = 1; i <= k; ++i) p *= mean / i;
    return p;
}

// Plain truncated Taylor sum for N_{l,h}: 1 / sqrt(sum_{r,r'} e^{2 pi i h (r'-r)/l} <a_r'|a_r>).
inline double cat_norm_direct(int l, int h, cplx alpha) {
    cplx s = 0.0;
    for (int r = 0; r < l; ++r)
        for (int q = 0; q < l; ++q) {
            const cplx ar = alpha * std::polar(1.0, 2 * kPi * r / l);
            const cplx aq = alpha * std::polar(1.0, 2 * kPi * q / l);
            s += std::polar(1.0, 2 * kPi * h * (q - r) / l) *
                 std::exp(-0.5 * std::norm(ar) - 0.5 * std::norm(aq) + std::conj(aq) * ar);
        }
    return 1.0 / std::sqrt(s.real());
}

// Physicists' Hermite polynomials H_0..H_nmax at x by the textbook recurrence.
inline std::vector<double> hermite_raw(int nmax, double x) {
    std::vector<double> h(static_cast<std::size_t>(nmax) + 1);
    h[0] = 1.0;
    if (nmax >= 1) h[1] = 2.0 * x;
    for (int n = 1; n < nmax; ++n) h[n + 1] = 2.0 * x * h[n] - 2.0 * n * h[n - 1];
    return h;
}

// Phase-damped order-l cat tomogram written with raw Hermite polynomials.
inline double phase_damped_cat_tomogram(int l, int h, cplx alpha, double ktau, double x, double theta, int nmax,
                                        double n_lh) {
    const std::vector<double> hx = hermite_raw(nmax, x);
    std::vector<cplx> u;
    std::vector<int> idx;
    double lf = 0.0;  // ln n!
    for (int n = 0; n <= nmax; ++n) {
        if (n > 0) lf += std::log(static_cast<double>(n));
        if (n % l != h) continue;
        // alpha^n H_n e^{-i n theta} / (n! 2^{n/2})
        const double mag = std::exp(n * std::log(std::abs(alpha)) - lf - 0.5 * n * std::log(2.0));
        u.push_back(mag * hx[n] * std::polar(1.0, n * (std::arg(alpha) - theta)));
        idx.push_back(n);
    }
    cplx s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j) {
            const double d = idx[i] - idx[j];
            s += u[i] * std::conj(u[j]) * std::exp(-d * d * ktau);
        }
    return l * l * n_lh * n_lh * std::exp(-x * x - std::norm(alpha)) / std::sqrt(kPi) * s.real();
}

enum class Lindblad { Amplitude, Phase };

// RK4 on the single-mode master equation with unit rate, from rho0, with the
// given step; returns rho at each requested number of steps.
inline std::vector<Eigen::MatrixXcd> rk4_single_mode(const Eigen::MatrixXcd& rho0, Lindblad kind, double step,
                                                     const std::vector<int>& checkpoints) {
    const int d = static_cast<int>(rho0.rows());
    Eigen::MatrixXd coupling(d, d), diag(d, d);
    for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
            if (kind == Lindblad::Amplitude) {
                coupling(m, n) = (m + 1 < d && n + 1 < d) ? 2.0 * std::sqrt((m + 1.0) * (n + 1.0)) : 0.0;
                diag(m, n) = -(m + n);
            } else {
                coupling(m, n) = 0.0;
                diag(m, n) = -static_cast<double>((m - n) * (m - n));
            }
        }
    auto deriv = [&](const Eigen::MatrixXcd& r) {
        Eigen::MatrixXcd out = diag.cast<cplx>().cwiseProduct(r);
        if (kind == Lindblad::Amplitude) {
            out.topLeftCorner(d - 1, d - 1) +=
                coupling.topLeftCorner(d - 1, d - 1).cast<cplx>().cwiseProduct(r.bottomRightCorner(d - 1, d - 1));
        }
        return out;
    };
    std::vector<Eigen::MatrixXcd> out;
    Eigen::MatrixXcd r = rho0;
    int done = 0;
    for (int target : checkpoints) {
        for (; done < target; ++done) {
            const Eigen::MatrixXcd k1 = deriv(r);
            const Eigen::MatrixXcd k2 = deriv(r + 0.5 * step * k1);
            const Eigen::MatrixXcd k3 = deriv(r + 0.5 * step * k2);
            const Eigen::MatrixXcd k4 = deriv(r + step * k3);
            r += step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        out.push_back(r);
    }
    return out;
}

// Single-mode propagators of the unit-rate generator restricted to each
// diagonal chain {(j + d, j)} (d >= 0) or {(j, j - d)} (d < 0), obtained by
// RK4 on P' = G P with P(0) = I. Index [d + cutoff] per checkpoint.
using ChainPropagators = std::vector<Eigen::MatrixXd>;

inline std::vector<ChainPropagators> rk4_chain_propagators(int cutoff, Lindblad kind, double step,
                                                           const std::vector<int>& checkpoints) {
    const int nd = 2 * cutoff + 1;
    std::vector<ChainPropagators> out(checkpoints.size(), ChainPropagators(static_cast<std::size_t>(nd)));
    for (int d = -cutoff; d <= cutoff; ++d) {
        const int ad = std::abs(d);
        const int len = cutoff - ad + 1;
        Eigen::MatrixXd g = Eigen::MatrixXd::Zero(len, len);
        for (int j = 0; j < len; ++j) {
            // chain element j is (j + ad, j) up to ordering; m + n = 2j + ad, m - n = +-ad
            if (kind == Lindblad::Amplitude) {
                g(j, j) = -(2.0 * j + ad);
                if (j + 1 < len) g(j, j + 1) = 2.0 * std::sqrt((j + ad + 1.0) * (j + 1.0));
            } else {
                g(j, j) = -static_cast<double>(ad * ad);
            }
        }
        Eigen::MatrixXd p = Eigen::MatrixXd::Identity(len, len);
        int done = 0;
        for (std::size_t c = 0; c < checkpoints.size(); ++c) {
            for (; done < checkpoints[c]; ++done) {
                const Eigen::MatrixXd k1 = g * p;
                const Eigen::MatrixXd k2 = g * (p + 0.5 * step * k1);
                const Eigen::MatrixXd k3 = g * (p + 0.5 * step * k2);
                const Eigen::MatrixXd k4 = g * (p + step * k3);
                p += step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            }
            out[c][static_cast<std::size_t>(d + cutoff)] = p;
        }
    }
    return out;
}

// Applies the chain propagators to one mode of a two-mode density matrix
// (composite index m1 * (cutoff + 1) + m2, equal cutoffs).
inline Eigen::MatrixXcd apply_chain_propagators(const Eigen::MatrixXcd& rho, const ChainPropagators& prop, int cutoff,
                                                int mode) {
    const int d1 = cutoff + 1;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
    auto at = [&](const Eigen::MatrixXcd& r, int m1, int m2, int n1, int n2) -> cplx {
        return r(m1 * d1 + m2, n1 * d1 + n2);
    };
    for (int m = 0; m <= cutoff; ++m)
        for (int n = 0; n <= cutoff; ++n) {
            const int d = m - n;
            const int ad = std::abs(d);
            const Eigen::MatrixXd& p = prop[static_cast<std::size_t>(d + cutoff)];
            const int j = std::min(m, n);
            for (int jj = j; jj < p.cols(); ++jj) {
                const double w = p(j, jj);
                if (w == 0.0) continue;
                const int mm = d >= 0 ? jj + ad : jj;
                const int nn = d >= 0 ? jj : jj + ad;
                for (int a = 0; a <= cutoff; ++a)
                    for (int b = 0; b <= cutoff; ++b) {
                        if (mode == 1) {
                            out(m * d1 + a, n * d1 + b) += w * at(rho, mm, a, nn, b);
                        } else {
                            out(a * d1 + m, b * d1 + n) += w * at(rho, a, mm, b, nn);
                        }
                    }
            }
        }
    return out;
}

// <a^m> for an order-l cat evolved under chi N(N-1) for time chi*t = ct,
// written as a sum over the l coherent components.
inline cplx cat_moment_a_closed(int l, cplx alpha, double n_lh, int m, double ct) {
    const double a2 = std::norm(alpha);
    cplx s = 0.0;
    for (int r = 0; r < l; ++r) {
        const double phi = 2.0 * ct * m - 2.0 * kPi * r / l;
        s += std::exp(-a2 * (1.0 - std::cos(phi)) - cplx(0.0, 1.0) * a2 * std::sin(phi));
    }
    return static_cast<double>(l) * n_lh * n_lh * std::pow(alpha, m) * std::exp(cplx(0.0, -ct * m * (m - 1))) * s;
}

// <a^{2k}> for the even 2-cat.
inline cplx even_cat_a2k(cplx alpha, double n20, int k, double ct) {
    const double a2 = std::norm(alpha);
    const double p = 4.0 * k * ct;
    const cplx i(0.0, 1.0);
    return 2.0 * n20 * n20 * std::pow(alpha, 2 * k) * std::exp(-i * static_cast<double>(2 * k * (2 * k - 1)) * ct) *
           (std::exp(-a2 * (1.0 - std::cos(p)) - i * a2 * std::sin(p)) +
            std::exp(-a2 * (1.0 + std::cos(p)) + i * a2 * std::sin(p)));
}

// <x^2> for the even 2-cat at large |alpha|, phase written as -2 delta.
inline double even_cat_x2(cplx alpha, double n20, double ct) {
    const double a2 = std::norm(alpha);
    const double d = std::arg(alpha);
    return 2.0 * n20 * n20 * a2 *
               (std::exp(-a2 * (1.0 - std::cos(4 * ct))) * std::cos(2 * ct + a2 * std::sin(4 * ct) - 2 * d) +
                std::exp(-a2 * (1.0 + std::cos(4 * ct))) * std::cos(2 * ct - a2 * std::sin(4 * ct) - 2 * d)) +
           a2 + 0.5;
}

// <x^3> for the even 3-cat.
inline double even_3cat_x3(cplx alpha, double n30, double ct) {
    const double a2 = std::norm(alpha);
    const double d = std::arg(alpha);
    const double p = 6.0 * ct;
    const double s6 = kPi / 6.0;
    return 3.0 * n30 * n30 * std::pow(a2, 1.5) / std::sqrt(2.0) *
           (std::exp(-a2 * (1.0 - std::cos(p))) * std::cos(p + a2 * std::sin(p) - 3 * d) +
            std::exp(-a2 * (1.0 - std::sin(p - s6))) * std::cos(p - a2 * std::cos(p - s6) - 3 * d) +
            std::exp(-a2 * (1.0 + std::sin(p + s6))) * std::cos(p + a2 * std::cos(p + s6) - 3 * d));
}

// Mandel Q of the conditional state of |Phi>_0 after measuring X_{theta2} = x2.
inline double conditional_mandel_closed(double abs_alpha, double x2, double rel_phase) {
    const double a2 = abs_alpha * abs_alpha;
    const double ch = std::cosh(2.0 * abs_alpha * x2 * std::cos(rel_phase));
    const double co = std::cos(2.0 * abs_alpha * x2 * std::sin(rel_phase));
    return 2.0 * a2 * std::exp(-a2) * ch * co / (ch * ch - 4.0 * std::exp(-2.0 * a2) * co * co);
}

}  // namespace oracle

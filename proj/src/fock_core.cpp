#include "tomolight/fock_core.hpp"

#include <cmath>

namespace tomolight {

namespace {

constexpr double kRescaleHigh = 1e150;

}  // namespace

std::vector<double> hermite_psi_all(int nmax, double x) {
    if (nmax < 0) throw InvalidArgument("hermite_psi: n must be non-negative");
    std::vector<double> out(static_cast<std::size_t>(nmax) + 1);

    // The recurrence is run on a rescaled copy; log_scale carries the factor
    // back out so that e^{-x^2/2} never underflows for large |x|.
    double log_scale = -0.5 * x * x - 0.25 * std::log(kPi);
    double prev = 0.0;
    double cur = 1.0;
    std::vector<double> raw(out.size());
    std::vector<double> scale_at(out.size());
    raw[0] = cur;
    scale_at[0] = log_scale;
    for (int n = 0; n < nmax; ++n) {
        double next = x * std::sqrt(2.0 / (n + 1)) * cur - std::sqrt(static_cast<double>(n) / (n + 1)) * prev;
        prev = cur;
        cur = next;
        if (std::abs(cur) > kRescaleHigh) {
            prev /= kRescaleHigh;
            cur /= kRescaleHigh;
            log_scale += std::log(kRescaleHigh);
        }
        raw[n + 1] = cur;
        scale_at[n + 1] = log_scale;
    }
    for (std::size_t n = 0; n < out.size(); ++n) {
        if (raw[n] == 0.0) {
            out[n] = 0.0;
        } else if (scale_at[n] > -700.0) {
            out[n] = raw[n] * std::exp(scale_at[n]);
        } else {
            out[n] = std::copysign(std::exp(scale_at[n] + std::log(std::abs(raw[n]))), raw[n]);
        }
    }
    return out;
}

double hermite_psi(int n, double x) { return hermite_psi_all(n, x).back(); }

Eigen::MatrixXd hermite_table(int nmax, const std::vector<double>& xs) {
    Eigen::MatrixXd t(nmax + 1, static_cast<Eigen::Index>(xs.size()));
    for (std::size_t j = 0; j < xs.size(); ++j) {
        auto col = hermite_psi_all(nmax, xs[j]);
        for (int n = 0; n <= nmax; ++n) t(n, static_cast<Eigen::Index>(j)) = col[n];
    }
    return t;
}

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

double poisson_tail(double mean, int cutoff) {
    if (mean <= 0.0) return 0.0;
    double sum = 0.0;
    for (int n = cutoff + 1;; ++n) {
        double term = std::exp(-mean + n * std::log(mean) - log_factorial(n));
        sum += term;
        if (n > mean && term < 1e-18 * sum) break;
        if (n > mean && term == 0.0) break;
    }
    return sum;
}

int coherent_cutoff(double abs_alpha_sq, const TruncationPolicy& policy) {
    if (!(policy.epsilon > 0.0 && policy.epsilon <= 1e-3)) {
        throw InvalidArgument("truncation epsilon must lie in (0, 1e-3]");
    }
    if (!(abs_alpha_sq >= 0.0) || abs_alpha_sq > 1e4) {
        throw InvalidArgument("|alpha|^2 must lie in [0, 1e4]");
    }
    int n = static_cast<int>(std::ceil(abs_alpha_sq + 10.0 * std::sqrt(abs_alpha_sq + 1.0)));
    while (poisson_tail(abs_alpha_sq, n) >= policy.epsilon) {
        ++n;
        if (n > policy.hard_max) break;
    }
    if (n > policy.hard_max) {
        throw CutoffOverflow("required Fock cutoff " + std::to_string(n) + " exceeds hard maximum " +
                             std::to_string(policy.hard_max));
    }
    return n;
}

FockVector coherent_amps_at(cplx alpha, int cutoff) {
    if (cutoff < 0) throw InvalidArgument("cutoff must be non-negative");
    Eigen::VectorXcd a = Eigen::VectorXcd::Zero(cutoff + 1);
    const double r = std::abs(alpha);
    if (r == 0.0) {
        a(0) = 1.0;
        return FockVector(std::move(a));
    }
    const double delta = std::arg(alpha);
    const double log_r = std::log(r);
    for (int n = 0; n <= cutoff; ++n) {
        double mag = std::exp(-0.5 * r * r + n * log_r - 0.5 * log_factorial(n));
        a(n) = std::polar(mag, n * delta);
    }
    return FockVector(std::move(a));
}

FockVector coherent_amps(cplx alpha, const TruncationPolicy& policy) {
    return coherent_amps_at(alpha, coherent_cutoff(std::norm(alpha), policy));
}

cplx quad_overlap_coherent(double x, double theta, cplx alpha) {
    const cplx e1 = std::polar(1.0, -theta);
    cplx expo = -0.5 * x * x - 0.5 * std::norm(alpha) - 0.5 * alpha * alpha * e1 * e1 +
                std::sqrt(2.0) * alpha * x * e1;
    return std::exp(expo) * std::pow(kPi, -0.25);
}

cplx quad_overlap_fock(double x, double theta, int n) {
    return hermite_psi(n, x) * std::polar(1.0, -n * theta);
}

cplx coherent_overlap(cplx beta, cplx alpha) {
    return std::exp(-0.5 * std::norm(beta) - 0.5 * std::norm(alpha) + std::conj(beta) * alpha);
}

double principal_arg(cplx alpha) {
    double d = std::arg(alpha);
    if (d < 0.0) d += 2.0 * kPi;
    if (d >= 2.0 * kPi) d -= 2.0 * kPi;
    return d;
}

}  // namespace tomolight

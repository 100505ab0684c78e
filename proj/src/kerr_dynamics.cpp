#include "tomolight/kerr_dynamics.hpp"

#include <cmath>
#include <numeric>

#include "tomolight/fock_core.hpp"
#include "tomolight/states.hpp"

namespace tomolight {

KerrParams KerrParams::from_time(double chi, double t) {
    if (!(chi > 0.0)) throw InvalidArgument("chi must be positive");
    if (!(t >= 0.0)) throw InvalidArgument("time must be non-negative");
    return KerrParams{chi, chi * t / kPi};
}

KerrParams KerrParams::at_fraction(double chi, double t_over_trev) {
    if (!(chi > 0.0)) throw InvalidArgument("chi must be positive");
    if (!(t_over_trev >= 0.0)) throw InvalidArgument("time must be non-negative");
    return KerrParams{chi, t_over_trev};
}

double KerrParams::t_rev() const { return kPi / chi; }

double KerrParams::t() const { return t_over_trev * t_rev(); }

CanonicalRevival canonical_revival(int j, int k) {
    if (j < 1 || k < 1) throw InvalidArgument("fractional revival needs j >= 1 and k >= 1");
    const int g = std::gcd(j, k);
    return CanonicalRevival{{j / g, k / g}, g != 1};
}

FockVector evolve_kerr(const FockVector& v, const KerrParams& params) {
    if (!(params.chi > 0.0)) throw InvalidArgument("chi must be positive");
    FockVector out = v;
    const double f = params.t_over_trev;
    for (int n = 0; n <= v.cutoff(); ++n) {
        const double m = static_cast<double>(n) * (n - 1);
        const double turns = std::fmod(f * m, 2.0);
        out.amps(n) *= std::polar(1.0, -kPi * turns);
    }
    return out;
}

std::vector<cplx> fractional_revival_coeffs(int k) {
    if (k < 1) throw InvalidArgument("k must be >= 1");
    std::vector<cplx> c(k);
    const double inv = 1.0 / std::sqrt(static_cast<double>(k));
    for (int s = 0; s < k; ++s) {
        if (k % 2 == 1) {
            const double ph = kPi * s * (s + 1.0) / k - kPi * (static_cast<double>(k) * k - 1.0) / (4.0 * k);
            c[s] = std::polar(inv, ph);
        } else {
            const double ph = kPi * static_cast<double>(s) * s / k - kPi / 4.0;
            c[s] = std::polar(inv, ph);
        }
    }
    return c;
}

namespace {

cplx revival_label(cplx alpha, int s, int k) {
    cplx lab = alpha * std::polar(1.0, -2.0 * kPi * s / k);
    if (k % 2 == 0) lab *= std::polar(1.0, kPi / k);
    return lab;
}

}  // namespace

CoherentSuperposition fractional_revival_state(cplx alpha, int k) {
    const auto coeffs = fractional_revival_coeffs(k);
    CoherentSuperposition s;
    for (int i = 0; i < k; ++i) s.terms.push_back({coeffs[i], revival_label(alpha, i, k)});
    return s;
}

RevivalDecomposition fractional_revival_state(cplx alpha, int j, int k) {
    RevivalDecomposition out;
    out.canonical = canonical_revival(j, k);
    const long jj = out.canonical.spec.j;
    const long kk = out.canonical.spec.k;
    // odd j with even k takes the half-step label offset e^{i pi/k}
    const long shift = (jj * (kk - 1)) % 2;
    const cplx offset = std::polar(1.0, kPi * static_cast<double>(shift) / kk);
    for (long s = 0; s < kk; ++s) {
        cplx f = 0.0;
        for (long n = 0; n < kk; ++n) {
            const long turns = (jj * n * (n - 1) + shift * n) % (2 * kk);
            f += std::polar(1.0, -kPi * static_cast<double>(turns) / kk + 2.0 * kPi * s * n / kk);
        }
        f /= static_cast<double>(kk);
        out.state.terms.push_back({f, alpha * offset * std::polar(1.0, -2.0 * kPi * s / kk)});
    }
    return out;
}

CoherentSuperposition cat_fractional_revival_state(const CatSpec& spec, int k) {
    validate(spec);
    const double n_lh = cat_normalization(spec.l, spec.h, std::norm(spec.alpha));
    const auto f = fractional_revival_coeffs(k);
    CoherentSuperposition out;
    for (int s = 0; s < k; ++s) {
        for (int r = 0; r < spec.l; ++r) {
            const double rl = 2.0 * kPi * r / spec.l;
            const cplx coeff = n_lh * f[s] * std::polar(1.0, -rl * spec.h);
            out.terms.push_back({coeff, revival_label(spec.alpha * std::polar(1.0, rl), s, k)});
        }
    }
    return out;
}

double cat_rotation_angle(int l, int h, int j) {
    validate(CatSpec{l, h, 0.0});
    return -kPi * j * (2.0 * h - 1.0 + l) / (static_cast<double>(l) * l);
}

CoherentSuperposition cat_rotation_form(const CatSpec& spec, int j) {
    const double phi = cat_rotation_angle(spec.l, spec.h, j);
    const double l2 = static_cast<double>(spec.l) * spec.l;
    const double gamma = -kPi * j * spec.h * (spec.h - 1.0) / l2 - phi * spec.h;
    CatSpec rotated = spec;
    rotated.alpha = spec.alpha * std::polar(1.0, phi);
    CoherentSuperposition s = cat_superposition_form(rotated);
    for (auto& t : s.terms) t.coeff *= std::polar(1.0, gamma);
    return s;
}

double autocorrelation(const FockVector& v0, const FockVector& vt) {
    if (v0.cutoff() != vt.cutoff()) throw CutoffMismatch("autocorrelation needs equal cutoffs");
    return std::norm(v0.amps.dot(vt.amps));
}

cplx moment_a_power(const FockVector& v, int m) {
    if (m < 1) throw InvalidArgument("moment order must be >= 1");
    cplx acc = 0.0;
    for (int n = 0; n + m <= v.cutoff(); ++n) {
        const double w = std::exp(0.5 * (log_factorial(n + m) - log_factorial(n)));
        acc += std::conj(v.amps(n)) * v.amps(n + m) * w;
    }
    return acc;
}

namespace {

// Applies q = (a e^{-i phi} + a^dag e^{i phi})/sqrt(2) m times on a vector padded
// by m entries, so the truncation never clips the result.
double quadrature_moment(const FockVector& v, int m, double phi) {
    if (m < 1 || m > 12) throw InvalidArgument("quadrature moment order must lie in [1, 12]");
    const int n = v.cutoff() + m;
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(n + 1);
    w.head(v.cutoff() + 1) = v.amps;
    const cplx em = std::polar(1.0, -phi);
    const cplx ep = std::polar(1.0, phi);
    const double s2 = 1.0 / std::sqrt(2.0);
    for (int step = 0; step < m; ++step) {
        Eigen::VectorXcd next = Eigen::VectorXcd::Zero(n + 1);
        for (int k = 0; k <= n; ++k) {
            if (k + 1 <= n) next(k) += em * std::sqrt(k + 1.0) * w(k + 1);
            if (k >= 1) next(k) += ep * std::sqrt(static_cast<double>(k)) * w(k - 1);
        }
        w = next * s2;
    }
    const cplx r = v.amps.dot(w.head(v.cutoff() + 1));
    const double scale = std::max(1.0, std::abs(r));
    if (std::abs(r.imag()) > 1e-9 * scale) {
        throw NumericError("quadrature moment has a non-negligible imaginary part");
    }
    return r.real();
}

}  // namespace

double moment_x_power(const FockVector& v, int m) { return quadrature_moment(v, m, 0.0); }

double moment_p_power(const FockVector& v, int m) { return quadrature_moment(v, m, kPi / 2.0); }

}  // namespace tomolight

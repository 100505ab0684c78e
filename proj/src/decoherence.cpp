#include "tomolight/decoherence.hpp"

#include <cmath>

#include "tomolight/fock_core.hpp"
#include "tomolight/parallel.hpp"
#include "tomolight/states.hpp"

namespace tomolight {

DecoherenceParams DecoherenceParams::from_rate(Channel model, double rate, double tau) {
    if (!(rate > 0.0)) throw InvalidArgument("decoherence rate must be positive");
    if (!(tau >= 0.0)) throw InvalidArgument("tau must be non-negative");
    DecoherenceParams p{model, rate * tau};
    validate(p);
    return p;
}

void validate(const DecoherenceParams& p) {
    if (!(p.scaled >= 0.0) || !std::isfinite(p.scaled)) throw InvalidArgument("scaled time must be finite and >= 0");
}

namespace {

void require(const DecoherenceParams& p, Channel c) {
    validate(p);
    if (p.model != c) {
        throw InvalidArgument(c == Channel::AmplitudeDecay ? "expected the amplitude-decay model"
                                                           : "expected the phase-damping model");
    }
}

// 1 - e^{-2 gamma tau}
double loss_fraction(double scaled) { return -std::expm1(-2.0 * scaled); }

// <b|a>^{loss} written through the exponent
cplx overlap_power(cplx a, cplx b, double loss) {
    return std::exp(loss * (-0.5 * std::norm(a) - 0.5 * std::norm(b) + std::conj(b) * a));
}

// ln K_k(m) for the amplitude-decay Kraus operator K_k = sum_m sqrt(C(m+k,k)) eta^m (1-eta^2)^{k/2} |m><m+k|
double log_kraus(int k, int m, double scaled, double log_loss) {
    return 0.5 * (log_factorial(m + k) - log_factorial(m) - log_factorial(k)) - m * scaled + 0.5 * k * log_loss;
}

}  // namespace

TwoModeSuperposition beam_split_cat_form(const CatSpec& spec) {
    const CoherentSuperposition single = cat_superposition_form(spec);
    TwoModeSuperposition out;
    const double s2 = 1.0 / std::sqrt(2.0);
    for (const auto& t : single.terms) out.terms.push_back({t.coeff, t.label * s2, t.label * s2});
    return out;
}

TwoModeState to_two_mode(const TwoModeSuperposition& s, int cutoff1, int cutoff2) {
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(cutoff1 + 1, cutoff2 + 1);
    for (const auto& t : s.terms) {
        c += t.coeff * coherent_amps_at(t.label1, cutoff1).amps * coherent_amps_at(t.label2, cutoff2).amps.transpose();
    }
    return TwoModeState::from_amplitudes(std::move(c));
}

DensityMatrix amp_decay_superposition(const CoherentSuperposition& s, const DecoherenceParams& p,
                                      const TruncationPolicy& policy) {
    return amp_decay_superposition_at(s, p, superposition_cutoff(s, policy));
}

DensityMatrix amp_decay_superposition_at(const CoherentSuperposition& s, const DecoherenceParams& p, int cutoff) {
    require(p, Channel::AmplitudeDecay);
    const std::size_t n = s.terms.size();
    if (n == 0) throw InvalidArgument("empty superposition");
    const double shrink = std::exp(-p.scaled);
    const double loss = loss_fraction(p.scaled);
    Eigen::MatrixXcd basis(cutoff + 1, static_cast<Eigen::Index>(n));
    Eigen::MatrixXcd weight(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        basis.col(static_cast<Eigen::Index>(i)) = coherent_amps_at(s.terms[i].label * shrink, cutoff).amps;
        for (std::size_t j = 0; j < n; ++j) {
            weight(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                s.terms[i].coeff * std::conj(s.terms[j].coeff) * overlap_power(s.terms[i].label, s.terms[j].label, loss);
        }
    }
    return DensityMatrix(basis * weight * basis.adjoint());
}

DensityMatrix amp_decay_density(const DensityMatrix& rho0, const DecoherenceParams& p) {
    require(p, Channel::AmplitudeDecay);
    if (p.scaled == 0.0) return rho0;
    const int d = rho0.dim();
    const double log_loss = std::log(loss_fraction(p.scaled));
    Eigen::MatrixXd lk(d, d);  // lk(k, m) = ln K_k(m), m + k < d
    for (int k = 0; k < d; ++k)
        for (int m = 0; m + k < d; ++m) lk(k, m) = log_kraus(k, m, p.scaled, log_loss);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            cplx acc = 0.0;
            for (int k = 0; m + k < d && n + k < d; ++k) acc += std::exp(lk(k, m) + lk(k, n)) * rho0.elems(m + k, n + k);
            out(m, n) = acc;
        }
    }
    return DensityMatrix(std::move(out));
}

DensityMatrix phase_damp_density(const DensityMatrix& rho0, const DecoherenceParams& p) {
    require(p, Channel::PhaseDamping);
    DensityMatrix out = rho0;
    for (int m = 0; m < out.dim(); ++m) {
        for (int n = 0; n < out.dim(); ++n) {
            if (m == n) continue;
            const double d = m - n;
            out.elems(m, n) *= std::exp(-p.scaled * d * d);
        }
    }
    return out;
}

TomogramGrid amp_decay_tomogram(const CoherentSuperposition& s, const DecoherenceParams& p, const QuadratureGrid& grid) {
    require(p, Channel::AmplitudeDecay);
    validate(grid);
    const std::size_t n = s.terms.size();
    const double shrink = std::exp(-p.scaled);
    const double loss = loss_fraction(p.scaled);
    Eigen::MatrixXcd weight(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            weight(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                s.terms[i].coeff * std::conj(s.terms[j].coeff) * overlap_power(s.terms[i].label, s.terms[j].label, loss);

    TomogramGrid t;
    t.grid = grid;
    t.omega.resize(static_cast<Eigen::Index>(grid.n_theta()), static_cast<Eigen::Index>(grid.n_x()));
    const double inv_sqrt_pi = 1.0 / std::sqrt(kPi);
    parallel_for(grid.n_theta(), [&](std::size_t i) {
        Eigen::VectorXcd zeta(static_cast<Eigen::Index>(n));
        for (std::size_t j = 0; j < grid.n_x(); ++j) {
            for (std::size_t r = 0; r < n; ++r) {
                zeta(static_cast<Eigen::Index>(r)) = eta_factor(grid.x[j], grid.theta[i], s.terms[r].label * shrink);
            }
            const cplx v = (zeta.transpose() * weight * zeta.conjugate()).value();
            t.omega(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = inv_sqrt_pi * v.real();
        }
    });
    return t;
}

DensityMatrix amp_decay_long_time(int cutoff) {
    if (cutoff < 0) throw InvalidArgument("cutoff must be non-negative");
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
    r(0, 0) = 1.0;
    return DensityMatrix(std::move(r));
}

DensityMatrix phase_damp_long_time(const DensityMatrix& rho0) {
    return DensityMatrix(Eigen::MatrixXcd(rho0.elems.diagonal().asDiagonal()));
}

TwoModeState two_mode_amp_decay(const TwoModeSuperposition& s, const DecoherenceParams& p, int cutoff1, int cutoff2) {
    require(p, Channel::AmplitudeDecay);
    if (cutoff1 < 0 || cutoff2 < 0) throw InvalidArgument("cutoffs must be non-negative");
    const std::size_t n = s.terms.size();
    if (n == 0) throw InvalidArgument("empty superposition");
    const double shrink = std::exp(-p.scaled);
    const double loss = loss_fraction(p.scaled);
    const int d2 = cutoff2 + 1;
    const Eigen::Index dim = static_cast<Eigen::Index>(cutoff1 + 1) * d2;
    Eigen::MatrixXcd basis(dim, static_cast<Eigen::Index>(n));
    Eigen::MatrixXcd weight(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const Eigen::VectorXcd a = coherent_amps_at(s.terms[i].label1 * shrink, cutoff1).amps;
        const Eigen::VectorXcd b = coherent_amps_at(s.terms[i].label2 * shrink, cutoff2).amps;
        for (int m1 = 0; m1 <= cutoff1; ++m1)
            for (int m2 = 0; m2 < d2; ++m2) basis(m1 * d2 + m2, static_cast<Eigen::Index>(i)) = a(m1) * b(m2);
        for (std::size_t j = 0; j < n; ++j) {
            weight(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                s.terms[i].coeff * std::conj(s.terms[j].coeff) *
                overlap_power(s.terms[i].label1, s.terms[j].label1, loss) *
                overlap_power(s.terms[i].label2, s.terms[j].label2, loss);
        }
    }
    return TwoModeState::from_density(basis * weight * basis.adjoint(), cutoff1, cutoff2);
}

TwoModeState two_mode_amp_decay(const CatSpec& spec, const DecoherenceParams& p, int cutoff) {
    if (cutoff <= 0) cutoff = make_cat(spec).cutoff();
    return two_mode_amp_decay(beam_split_cat_form(spec), p, cutoff, cutoff);
}

TwoModeState two_mode_amp_decay_state(const TwoModeState& s, const DecoherenceParams& p) {
    require(p, Channel::AmplitudeDecay);
    TwoModeState out = TwoModeState::from_density(s.density(), s.cutoff1, s.cutoff2);
    if (p.scaled == 0.0) return out;
    const double log_loss = std::log(loss_fraction(p.scaled));
    const int dmax = std::max(s.cutoff1, s.cutoff2) + 1;
    Eigen::MatrixXd kr = Eigen::MatrixXd::Zero(dmax, dmax);  // kr(k, m) = K_k(m)
    for (int k = 0; k < dmax; ++k)
        for (int m = 0; m + k < dmax; ++m) kr(k, m) = std::exp(log_kraus(k, m, p.scaled, log_loss));

    // one mode at a time; the two channels commute
    const Eigen::MatrixXcd r0 = out.rho;
    Eigen::MatrixXcd r1 = Eigen::MatrixXcd::Zero(r0.rows(), r0.cols());
    for (int m1 = 0; m1 <= s.cutoff1; ++m1)
        for (int n1 = 0; n1 <= s.cutoff1; ++n1)
            for (int k = 0; m1 + k <= s.cutoff1 && n1 + k <= s.cutoff1; ++k) {
                const double w = kr(k, m1) * kr(k, n1);
                for (int m2 = 0; m2 <= s.cutoff2; ++m2)
                    for (int n2 = 0; n2 <= s.cutoff2; ++n2)
                        r1(out.index(m1, m2), out.index(n1, n2)) += w * r0(out.index(m1 + k, m2), out.index(n1 + k, n2));
            }
    Eigen::MatrixXcd r2 = Eigen::MatrixXcd::Zero(r0.rows(), r0.cols());
    for (int m2 = 0; m2 <= s.cutoff2; ++m2)
        for (int n2 = 0; n2 <= s.cutoff2; ++n2)
            for (int k = 0; m2 + k <= s.cutoff2 && n2 + k <= s.cutoff2; ++k) {
                const double w = kr(k, m2) * kr(k, n2);
                for (int m1 = 0; m1 <= s.cutoff1; ++m1)
                    for (int n1 = 0; n1 <= s.cutoff1; ++n1)
                        r2(out.index(m1, m2), out.index(n1, n2)) += w * r1(out.index(m1, m2 + k), out.index(n1, n2 + k));
            }
    out.rho = std::move(r2);
    return out;
}

TwoModeState two_mode_phase_damp_state(const TwoModeState& s, const DecoherenceParams& p) {
    require(p, Channel::PhaseDamping);
    TwoModeState out = TwoModeState::from_density(s.density(), s.cutoff1, s.cutoff2);
    for (int m1 = 0; m1 <= s.cutoff1; ++m1)
        for (int m2 = 0; m2 <= s.cutoff2; ++m2)
            for (int n1 = 0; n1 <= s.cutoff1; ++n1)
                for (int n2 = 0; n2 <= s.cutoff2; ++n2) {
                    if (m1 == n1 && m2 == n2) continue;
                    const double d = (m1 - n1) * (m1 - n1) + (m2 - n2) * (m2 - n2);
                    out.rho(out.index(m1, m2), out.index(n1, n2)) *= std::exp(-p.scaled * d);
                }
    return out;
}

TwoModeState two_mode_phase_damp(const CatSpec& spec, const DecoherenceParams& p, int cutoff) {
    if (cutoff <= 0) cutoff = make_cat(spec).cutoff();
    return two_mode_phase_damp_state(to_two_mode(beam_split_cat_form(spec), cutoff, cutoff), p);
}

TwoModeState two_mode_phase_damp_long_time(const CatSpec& spec, int cutoff) {
    validate(spec);
    if (cutoff < 0) throw InvalidArgument("cutoff must be non-negative");
    const double nlh = cat_normalization(spec.l, spec.h, std::norm(spec.alpha));
    const double bsq = 0.5 * std::norm(spec.alpha);
    TwoModeState out = TwoModeState::from_density(
        Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(cutoff + 1) * (cutoff + 1),
                               static_cast<Eigen::Index>(cutoff + 1) * (cutoff + 1)),
        cutoff, cutoff);
    for (int m1 = 0; m1 <= cutoff; ++m1) {
        for (int m2 = 0; m2 <= cutoff; ++m2) {
            if ((m1 + m2) % spec.l != spec.h) continue;
            const int s = m1 + m2;
            const double log_mag = -2.0 * bsq + (bsq > 0.0 ? s * std::log(bsq) : (s == 0 ? 0.0 : -INFINITY)) -
                                   log_factorial(m1) - log_factorial(m2);
            const double l = spec.l;
            out.rho(out.index(m1, m2), out.index(m1, m2)) = nlh * nlh * l * l * std::exp(log_mag);
        }
    }
    return out;
}

}  // namespace tomolight

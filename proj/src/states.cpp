#include "tomolight/states.hpp"

#include <algorithm>
#include <cmath>

#include "tomolight/fock_core.hpp"

namespace tomolight {

void validate(const CatSpec& spec) {
    if (spec.l < 1) throw InvalidArgument("cat order l must be >= 1");
    if (spec.h < 0 || spec.h >= spec.l) throw InvalidArgument("cat parity index h must lie in [0, l-1]");
    if (!std::isfinite(spec.alpha.real()) || !std::isfinite(spec.alpha.imag())) {
        throw InvalidArgument("alpha must be finite");
    }
}

namespace {

// e^{-A} sum_{n = h mod l} A^n / n!. The roots-of-unity filter is exact but
// cancels when the class is nearly empty; the positive series covers that case.
double residue_class_mass(int l, int h, double a) {
    if (a == 0.0) return h == 0 ? 1.0 : 0.0;
    double filtered = 0.0;
    for (int r = 0; r < l; ++r) {
        const double ang = 2.0 * kPi * r / l;
        filtered += std::exp(-a * (1.0 - std::cos(ang))) * std::cos(a * std::sin(ang) - ang * h);
    }
    filtered /= l;
    if (filtered > 1e-3) return filtered;
    const double log_a = std::log(a);
    const int n_end = static_cast<int>(std::ceil(a + 40.0 * std::sqrt(a) + 60.0));
    double sum = 0.0;
    for (int n = h; n <= n_end; n += l) {
        sum += std::exp(-a + n * log_a - log_factorial(n));
    }
    return sum;
}

}  // namespace

double cat_normalization(int l, int h, double abs_alpha_sq) {
    validate(CatSpec{l, h, 0.0});
    if (!(abs_alpha_sq >= 0.0)) throw InvalidArgument("|alpha|^2 must be non-negative");
    const double mass = residue_class_mass(l, h, abs_alpha_sq);
    if (!(mass > 1e-300)) {
        throw DegenerateCat("components of |psi_{" + std::to_string(l) + "," + std::to_string(h) +
                            "}> cancel; the state does not exist at this |alpha|");
    }
    return 1.0 / (static_cast<double>(l) * std::sqrt(mass));
}

FockVector make_cat_at(const CatSpec& spec, int cutoff) {
    validate(spec);
    const double n_lh = cat_normalization(spec.l, spec.h, std::norm(spec.alpha));
    FockVector v = coherent_amps_at(spec.alpha, cutoff);
    for (int n = 0; n <= cutoff; ++n) {
        if (n % spec.l == spec.h) {
            v.amps(n) *= spec.l * n_lh;
        } else {
            v.amps(n) = 0.0;
        }
    }
    if (std::abs(spec.alpha) == 0.0) v.amps(0) = 1.0;
    return v;
}

FockVector make_cat(const CatSpec& spec, const TruncationPolicy& policy) {
    validate(spec);
    TruncationPolicy p = policy;
    p.epsilon = policy.epsilon / spec.l;
    return make_cat_at(spec, coherent_cutoff(std::norm(spec.alpha), p));
}

CoherentSuperposition cat_superposition_form(const CatSpec& spec) {
    validate(spec);
    const double n_lh = cat_normalization(spec.l, spec.h, std::norm(spec.alpha));
    CoherentSuperposition s;
    s.terms.reserve(spec.l);
    for (int r = 0; r < spec.l; ++r) {
        const double ang = 2.0 * kPi * r / spec.l;
        s.terms.push_back({n_lh * std::polar(1.0, -ang * spec.h), spec.alpha * std::polar(1.0, ang)});
    }
    return s;
}

double superposition_norm_sq(const CoherentSuperposition& s) {
    cplx acc = 0.0;
    for (const auto& a : s.terms) {
        for (const auto& b : s.terms) {
            acc += std::conj(a.coeff) * b.coeff * coherent_overlap(a.label, b.label);
        }
    }
    return acc.real();
}

int superposition_cutoff(const CoherentSuperposition& s, const TruncationPolicy& policy) {
    double m = 0.0;
    for (const auto& t : s.terms) m = std::max(m, std::norm(t.label));
    return coherent_cutoff(m, policy);
}

FockVector to_fock_at(const CoherentSuperposition& s, int cutoff) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(cutoff + 1);
    for (const auto& t : s.terms) v += t.coeff * coherent_amps_at(t.label, cutoff).amps;
    return FockVector(std::move(v));
}

FockVector to_fock(const CoherentSuperposition& s, const TruncationPolicy& policy) {
    return to_fock_at(s, superposition_cutoff(s, policy));
}

DensityMatrix density_from_pure(const FockVector& v) {
    return DensityMatrix(v.amps * v.amps.adjoint());
}

Eigen::MatrixXcd lowering_operator(int cutoff) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1);
    for (int n = 1; n <= cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

FockVector resized(const FockVector& v, int cutoff) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(cutoff + 1);
    const int m = std::min(cutoff, v.cutoff());
    out.head(m + 1) = v.amps.head(m + 1);
    return FockVector(std::move(out));
}

double fidelity(const FockVector& a, const FockVector& b) {
    const int n = std::max(a.cutoff(), b.cutoff());
    const FockVector pa = resized(a, n);
    const FockVector pb = resized(b, n);
    return std::norm(pa.amps.dot(pb.amps));
}

}  // namespace tomolight

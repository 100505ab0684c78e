#include "tomolight/beamsplitter.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "tomolight/fock_core.hpp"
#include "tomolight/kerr_dynamics.hpp"
#include "tomolight/parallel.hpp"
#include "tomolight/states.hpp"

namespace tomolight {

TwoModeState TwoModeState::from_amplitudes(Eigen::MatrixXcd c) {
    if (c.rows() < 1 || c.cols() < 1) throw InvalidArgument("empty two-mode amplitude matrix");
    TwoModeState s;
    s.kind = Kind::Pure;
    s.cutoff1 = static_cast<int>(c.rows()) - 1;
    s.cutoff2 = static_cast<int>(c.cols()) - 1;
    s.amps = std::move(c);
    return s;
}

TwoModeState TwoModeState::from_density(Eigen::MatrixXcd r, int cutoff1, int cutoff2) {
    if (cutoff1 < 0 || cutoff2 < 0) throw InvalidArgument("cutoffs must be non-negative");
    const Eigen::Index d = static_cast<Eigen::Index>(cutoff1 + 1) * (cutoff2 + 1);
    if (r.rows() != d || r.cols() != d) throw InvalidArgument("density size does not match the cutoffs");
    TwoModeState s;
    s.kind = Kind::Mixed;
    s.cutoff1 = cutoff1;
    s.cutoff2 = cutoff2;
    s.rho = std::move(r);
    return s;
}

Eigen::MatrixXcd TwoModeState::density() const {
    if (!is_pure()) return rho;
    Eigen::VectorXcd v(dim());
    for (int m1 = 0; m1 <= cutoff1; ++m1) {
        for (int m2 = 0; m2 <= cutoff2; ++m2) v(index(m1, m2)) = amps(m1, m2);
    }
    return v * v.adjoint();
}

double TwoModeState::trace() const { return is_pure() ? amps.squaredNorm() : rho.trace().real(); }

TwoModeState bs_transform(const FockVector& v) { return bs_transform(v, v.cutoff(), v.cutoff()); }

TwoModeState bs_transform(const FockVector& v, int cutoff1, int cutoff2) {
    if (cutoff1 < 0 || cutoff2 < 0) throw InvalidArgument("cutoffs must be non-negative");
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(cutoff1 + 1, cutoff2 + 1);
    const double ln2 = std::log(2.0);
    for (int n = 0; n <= v.cutoff(); ++n) {
        if (v.amps(n) == cplx(0.0)) continue;
        const int p_lo = std::max(0, n - cutoff2);
        const int p_hi = std::min(n, cutoff1);
        for (int p = p_lo; p <= p_hi; ++p) {
            const double lw = 0.5 * (log_factorial(n) - log_factorial(p) - log_factorial(n - p)) - 0.5 * n * ln2;
            c(p, n - p) = v.amps(n) * std::exp(lw);
        }
    }
    return TwoModeState::from_amplitudes(std::move(c));
}

TwoModeState beam_split_cat(const CatSpec& spec, const TruncationPolicy& policy) {
    return bs_transform(make_cat(spec, policy));
}

TwoModeState truncated(const TwoModeState& s, int cutoff1, int cutoff2) {
    if (cutoff1 < 0 || cutoff2 < 0) throw InvalidArgument("cutoffs must be non-negative");
    const int k1 = std::min(cutoff1, s.cutoff1);
    const int k2 = std::min(cutoff2, s.cutoff2);
    if (s.is_pure()) {
        Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(cutoff1 + 1, cutoff2 + 1);
        c.topLeftCorner(k1 + 1, k2 + 1) = s.amps.topLeftCorner(k1 + 1, k2 + 1);
        return TwoModeState::from_amplitudes(std::move(c));
    }
    TwoModeState out = TwoModeState::from_density(
        Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(cutoff1 + 1) * (cutoff2 + 1),
                               static_cast<Eigen::Index>(cutoff1 + 1) * (cutoff2 + 1)),
        cutoff1, cutoff2);
    for (int m1 = 0; m1 <= k1; ++m1)
        for (int m2 = 0; m2 <= k2; ++m2)
            for (int n1 = 0; n1 <= k1; ++n1)
                for (int n2 = 0; n2 <= k2; ++n2)
                    out.rho(out.index(m1, m2), out.index(n1, n2)) = s.rho(s.index(m1, m2), s.index(n1, n2));
    return out;
}

DensityMatrix reduced_density(const TwoModeState& s, Mode mode) {
    if (s.is_pure()) {
        if (mode == Mode::C) return DensityMatrix(s.amps * s.amps.adjoint());
        return DensityMatrix(s.amps.transpose() * s.amps.conjugate());
    }
    if (mode == Mode::C) {
        Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(s.cutoff1 + 1, s.cutoff1 + 1);
        for (int m1 = 0; m1 <= s.cutoff1; ++m1)
            for (int n1 = 0; n1 <= s.cutoff1; ++n1)
                for (int k = 0; k <= s.cutoff2; ++k) r(m1, n1) += s.rho(s.index(m1, k), s.index(n1, k));
        return DensityMatrix(std::move(r));
    }
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(s.cutoff2 + 1, s.cutoff2 + 1);
    for (int m2 = 0; m2 <= s.cutoff2; ++m2)
        for (int n2 = 0; n2 <= s.cutoff2; ++n2)
            for (int k = 0; k <= s.cutoff1; ++k) r(m2, n2) += s.rho(s.index(k, m2), s.index(k, n2));
    return DensityMatrix(std::move(r));
}

namespace {

EntanglementResult entropy_of_spectrum(std::vector<double> lambda) {
    EntanglementResult res;
    double e = 0.0;
    for (double l : lambda) {
        if (l < -1e-6) throw NonPositiveDensity("density matrix has eigenvalue " + std::to_string(l));
        if (l <= kEigenClip) {
            ++res.clipped;
            continue;
        }
        e -= l * std::log2(l);
    }
    res.value = std::max(e, 0.0);
    res.spectrum = std::move(lambda);
    return res;
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
    const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericError("Hermitian eigen-solver did not converge");
    const Eigen::VectorXd ev = es.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

std::vector<double> schmidt_spectrum(const Eigen::MatrixXcd& c) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(c);
    if (svd.info() != Eigen::Success) throw NumericError("SVD did not converge");
    const Eigen::VectorXd sv = svd.singularValues();
    std::vector<double> out(static_cast<std::size_t>(sv.size()));
    for (Eigen::Index i = 0; i < sv.size(); ++i) out[static_cast<std::size_t>(i)] = sv(i) * sv(i);
    return out;
}

}  // namespace

EntanglementResult von_neumann_entropy(const DensityMatrix& rho) {
    if (rho.dim() == 0) throw InvalidArgument("empty density matrix");
    return entropy_of_spectrum(hermitian_eigenvalues(rho.elems));
}

EntanglementResult entanglement_entropy(const TwoModeState& s) {
    if (s.is_pure()) return entropy_of_spectrum(schmidt_spectrum(s.amps));
    return von_neumann_entropy(reduced_density(s, Mode::C));
}

Eigen::MatrixXcd partial_transpose(const TwoModeState& s) {
    const Eigen::MatrixXcd rho = s.density();
    Eigen::MatrixXcd pt(rho.rows(), rho.cols());
    for (int m1 = 0; m1 <= s.cutoff1; ++m1)
        for (int n1 = 0; n1 <= s.cutoff1; ++n1)
            for (int m2 = 0; m2 <= s.cutoff2; ++m2)
                for (int n2 = 0; n2 <= s.cutoff2; ++n2)
                    pt(s.index(m1, m2), s.index(n1, n2)) = rho(s.index(n1, m2), s.index(m1, n2));
    return pt;
}

EntanglementResult log_negativity(const TwoModeState& s) {
    EntanglementResult res;
    if (s.is_pure()) {
        // pure states: trace norm of the partial transpose is (sum of Schmidt coefficients)^2
        res.spectrum = schmidt_spectrum(s.amps);
        double root_sum = 0.0;
        for (double l : res.spectrum) root_sum += std::sqrt(std::max(l, 0.0));
        res.value = std::max(0.0, 2.0 * std::log2(root_sum));
        return res;
    }
    res.spectrum = hermitian_eigenvalues(partial_transpose(s));
    double norm1 = 0.0;
    for (double l : res.spectrum) {
        if (std::abs(l) <= kEigenClip) ++res.clipped;
        norm1 += std::abs(l);
    }
    res.value = std::max(0.0, std::log2(norm1));
    return res;
}

double mandel_q(const FockVector& v) {
    double n1 = 0.0;
    double n2 = 0.0;
    double norm = 0.0;
    for (int n = 0; n <= v.cutoff(); ++n) {
        const double p = std::norm(v.amps(n));
        norm += p;
        n1 += n * p;
        n2 += static_cast<double>(n) * n * p;
    }
    if (norm <= 0.0) throw InvalidArgument("zero vector");
    n1 /= norm;
    n2 /= norm;
    if (n1 == 0.0) return 0.0;
    return (n2 - n1 * n1) / n1 - 1.0;
}

namespace {

Eigen::VectorXcd projector_row(int cutoff, double x2, double theta2) {
    const std::vector<double> psi = hermite_psi_all(cutoff, x2);
    Eigen::VectorXcd b(cutoff + 1);
    for (int n = 0; n <= cutoff; ++n) b(n) = psi[static_cast<std::size_t>(n)] * std::polar(1.0, -n * theta2);
    return b;
}

constexpr double kMinConditionalNorm = 1e-12;

}  // namespace

FockVector conditional_project(const TwoModeState& s, double x2, double theta2) {
    if (!s.is_pure()) throw InvalidArgument("conditional_project needs a pure state; use conditional_density");
    const Eigen::VectorXcd c = s.amps * projector_row(s.cutoff2, x2, theta2);
    const double norm = c.norm();
    if (!(norm > kMinConditionalNorm)) throw ZeroProbabilitySlice("conditional state has vanishing norm at this slice");
    return FockVector(c / norm);
}

DensityMatrix conditional_density(const TwoModeState& s, double x2, double theta2) {
    if (s.is_pure()) return density_from_pure(conditional_project(s, x2, theta2));
    const Eigen::VectorXcd b = projector_row(s.cutoff2, x2, theta2);
    const int d2 = s.cutoff2 + 1;
    Eigen::MatrixXcd r(s.cutoff1 + 1, s.cutoff1 + 1);
    for (int m1 = 0; m1 <= s.cutoff1; ++m1) {
        for (int n1 = 0; n1 <= s.cutoff1; ++n1) {
            r(m1, n1) = (b.transpose() * s.rho.block(m1 * d2, n1 * d2, d2, d2) * b.conjugate()).value();
        }
    }
    const double tr = r.trace().real();
    if (!(tr > kMinConditionalNorm * kMinConditionalNorm)) {
        throw ZeroProbabilitySlice("conditional state has vanishing trace at this slice");
    }
    return DensityMatrix(r / tr);
}

std::vector<double> entanglement_timeseries(cplx alpha, double chi, const std::vector<double>& t_over_trev,
                                            int cutoff) {
    for (double f : t_over_trev) {
        if (!(f >= 0.0 && f <= 1.0)) throw InvalidArgument("times must lie within [0, T_rev]");
    }
    const FockVector v0 = cutoff > 0 ? coherent_amps_at(alpha, cutoff) : coherent_amps(alpha);
    std::vector<double> out(t_over_trev.size());
    parallel_for(t_over_trev.size(), [&](std::size_t i) {
        const FockVector vt = evolve_kerr(v0, KerrParams::at_fraction(chi, t_over_trev[i]));
        out[i] = entanglement_entropy(bs_transform(vt)).value;
    });
    return out;
}

}  // namespace tomolight

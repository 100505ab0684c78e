#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace tomolight {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Library-wide error root. Every failure raised by tomolight derives from it.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid caller input (violated precondition).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Failures of a numerical nature (eigen-solver breakdown, underflow, ...).
class NumericError : public Error {
public:
    using Error::Error;
};

class CutoffOverflow : public NumericError {
public:
    using NumericError::NumericError;
};

class DegenerateCat : public NumericError {
public:
    using NumericError::NumericError;
};

class CutoffMismatch : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class NegativeTomogram : public NumericError {
public:
    using NumericError::NumericError;
};

class ZeroProbabilitySlice : public NumericError {
public:
    using NumericError::NumericError;
};

class NonNormalizedDensity : public NumericError {
public:
    using NumericError::NumericError;
};

class NonPositiveDensity : public NumericError {
public:
    using NumericError::NumericError;
};

/// Tail-probability bound used when choosing a Fock cutoff.
struct TruncationPolicy {
    double epsilon = 1e-12;
    int hard_max = 4096;
};

/// Truncated pure single-mode state, amplitudes indexed by photon number.
struct FockVector {
    Eigen::VectorXcd amps;

    FockVector() = default;
    explicit FockVector(Eigen::VectorXcd a) : amps(std::move(a)) {}

    int cutoff() const { return static_cast<int>(amps.size()) - 1; }
    double norm_sq() const { return amps.squaredNorm(); }
};

/// Truncated single-mode density matrix.
struct DensityMatrix {
    Eigen::MatrixXcd elems;

    DensityMatrix() = default;
    explicit DensityMatrix(Eigen::MatrixXcd m) : elems(std::move(m)) {}

    int dim() const { return static_cast<int>(elems.rows()); }
    cplx trace() const { return elems.trace(); }
};

/// One term of a coherent-state superposition: coeff * |label>.
struct CoherentTerm {
    cplx coeff;
    cplx label;
};

/// Exact symbolic form sum_s c_s |alpha_s>.
struct CoherentSuperposition {
    std::vector<CoherentTerm> terms;
};

/// Order-l superposed coherent state |psi_{l,h}>.
struct CatSpec {
    int l = 1;
    int h = 0;
    cplx alpha{0.0, 0.0};
};

/// Truncated two-mode state: either pure amplitudes c_{m n} (mode c index m,
/// mode d index n) or density elements rho_{m1 m2; n1 n2}. Composite index of
/// the density form is m1 * (n2 + 1) + m2.
struct TwoModeState {
    enum class Kind { Pure, Mixed };

    Kind kind = Kind::Pure;
    int cutoff1 = 0;
    int cutoff2 = 0;
    Eigen::MatrixXcd amps;
    Eigen::MatrixXcd rho;

    static TwoModeState from_amplitudes(Eigen::MatrixXcd c);
    static TwoModeState from_density(Eigen::MatrixXcd r, int cutoff1, int cutoff2);

    bool is_pure() const { return kind == Kind::Pure; }
    int dim() const { return (cutoff1 + 1) * (cutoff2 + 1); }
    int index(int m1, int m2) const { return m1 * (cutoff2 + 1) + m2; }

    /// Density matrix in the composite basis (built from amps when pure).
    Eigen::MatrixXcd density() const;
    /// Norm (pure) or trace (mixed).
    double trace() const;
};

}  // namespace tomolight

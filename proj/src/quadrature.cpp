#include "tomolight/quadrature.hpp"

#include <stdexcept>

namespace tomolight {

std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = a;
        return v;
    }
    const double step = (b - a) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) v[i] = a + step * static_cast<double>(i);
    if (n > 1) v[n - 1] = b;
    return v;
}

double trapezoid(const double* y, std::size_t n, double dx) {
    if (n < 2) return 0.0;
    double s = 0.5 * (y[0] + y[n - 1]);
    for (std::size_t i = 1; i + 1 < n; ++i) s += y[i];
    return s * dx;
}

double trapezoid(const std::vector<double>& y, double dx) { return trapezoid(y.data(), y.size(), dx); }

}  // namespace tomolight

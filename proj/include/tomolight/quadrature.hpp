#pragma once

#include <cstddef>
#include <vector>

namespace tomolight {

/// n evenly spaced points from a to b inclusive.
std::vector<double> linspace(double a, double b, std::size_t n);

/// Trapezoid rule on a uniform grid with spacing dx.
double trapezoid(const double* y, std::size_t n, double dx);
double trapezoid(const std::vector<double>& y, double dx);

}  // namespace tomolight

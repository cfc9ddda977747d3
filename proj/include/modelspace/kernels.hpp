#pragma once

// Data-parallel inner loops. Every kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::omp with identical
// per-element arithmetic, so results agree bit-for-bit.

#include <complex>
#include <span>
#include <vector>

namespace modelspace::kernels {

using Complex = std::complex<double>;

/// exp(2 pi i (t + offset) / M), t = 0..M-1
std::vector<Complex> circle_nodes(std::size_t m, double offset);

struct SublevelScan {
    double sup = 0.0;       // max |f| over points where |B| < eps
    std::size_t hits = 0;   // number of such points
};

struct ArcScan {
    double max_oscillation = 0.0;
    std::size_t best_length = 0;
    std::size_t best_offset = 0;
};

namespace serial {

/// Finite Blaschke product evaluated at each point, factors in the given order.
std::vector<Complex> blaschke_values(std::span<const Complex> zeros, std::span<const Complex> points);

/// sum_j (1-|z_j|)/|zeta_t - z_j| over the points.
std::vector<double> frostman_values(std::span<const Complex> zeros, std::span<const Complex> points);

/// Max over arcs of length M, M/2, ..., 4 (all M offsets, cyclic) of the
/// mean absolute deviation from the arc mean.
ArcScan dyadic_arc_oscillation(std::span<const Complex> samples);

/// Direct O(M^2) transform: out[k] = (1/M) sum_t x_t exp(-2 pi i t k / M).
std::vector<Complex> dft(std::span<const Complex> samples);

/// sum_n coeffs[n] z^n (Horner) at each point.
std::vector<Complex> power_series_values(std::span<const Complex> coeffs, std::span<const Complex> points);

/// Scans points for |B(z)| < eps and records max |sum_n coeffs[n] z^n| there.
SublevelScan sublevel_scan(std::span<const Complex> zeros, std::span<const Complex> coeffs,
                           std::span<const Complex> points, double eps);

}  // namespace serial

namespace omp {

std::vector<Complex> blaschke_values(std::span<const Complex> zeros, std::span<const Complex> points);
std::vector<double> frostman_values(std::span<const Complex> zeros, std::span<const Complex> points);
ArcScan dyadic_arc_oscillation(std::span<const Complex> samples);
std::vector<Complex> power_series_values(std::span<const Complex> coeffs, std::span<const Complex> points);
SublevelScan sublevel_scan(std::span<const Complex> zeros, std::span<const Complex> coeffs,
                           std::span<const Complex> points, double eps);

}  // namespace omp

}  // namespace modelspace::kernels

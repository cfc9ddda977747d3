#include "modelspace/kernels.hpp"

#include "modelspace/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace modelspace::kernels {

std::vector<Complex> circle_nodes(std::size_t m, double offset) {
    std::vector<Complex> nodes(m);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
    for (std::size_t t = 0; t < m; ++t) {
        nodes[t] = std::polar(1.0, step * (static_cast<double>(t) + offset));
    }
    return nodes;
}

namespace {

inline Complex product_at(std::span<const Complex> zeros, Complex z) {
    Complex acc{1.0, 0.0};
    for (const auto& a : zeros) acc *= blaschke_factor(a, z);
    return acc;
}

inline double frostman_at(std::span<const Complex> zeros, Complex zeta) {
    double sum = 0.0;
    for (const auto& a : zeros) sum += (1.0 - std::abs(a)) / std::abs(zeta - a);
    return sum;
}

inline Complex horner(std::span<const Complex> coeffs, Complex z) {
    Complex acc{0.0, 0.0};
    for (std::size_t n = coeffs.size(); n-- > 0;) acc = acc * z + coeffs[n];
    return acc;
}

// Samples repeated twice so cyclic arcs are contiguous.
// Real and imaginary parts laid out twice so every cyclic arc is contiguous.
struct SplitBuffer {
    std::vector<double> re;
    std::vector<double> im;
};

SplitBuffer doubled(std::span<const Complex> x) {
    const std::size_t m = x.size();
    SplitBuffer out{std::vector<double>(2 * m), std::vector<double>(2 * m)};
    for (std::size_t t = 0; t < 2 * m; ++t) {
        out.re[t] = x[t % m].real();
        out.im[t] = x[t % m].imag();
    }
    return out;
}

// Mean absolute deviation over the arc [start, start + len) of a doubled buffer.
inline double arc_deviation(const SplitBuffer& x, std::size_t start, std::size_t len) {
    const double* re = x.re.data() + start;
    const double* im = x.im.data() + start;
    double sr = 0.0;
    double si = 0.0;
#pragma omp simd reduction(+ : sr, si)
    for (std::size_t i = 0; i < len; ++i) {
        sr += re[i];
        si += im[i];
    }
    const double mr = sr / static_cast<double>(len);
    const double mi = si / static_cast<double>(len);
    double dev = 0.0;
#pragma omp simd reduction(+ : dev)
    for (std::size_t i = 0; i < len; ++i) {
        const double dr = re[i] - mr;
        const double di = im[i] - mi;
        dev += std::sqrt(dr * dr + di * di);
    }
    return dev / static_cast<double>(len);
}

void consider(ArcScan& best, double value, std::size_t len, std::size_t offset) {
    if (value > best.max_oscillation) {
        best.max_oscillation = value;
        best.best_length = len;
        best.best_offset = offset;
    }
}

}  // namespace

namespace serial {

std::vector<Complex> blaschke_values(std::span<const Complex> zeros, std::span<const Complex> points) {
    std::vector<Complex> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) out[i] = product_at(zeros, points[i]);
    return out;
}

std::vector<double> frostman_values(std::span<const Complex> zeros, std::span<const Complex> points) {
    std::vector<double> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) out[i] = frostman_at(zeros, points[i]);
    return out;
}

ArcScan dyadic_arc_oscillation(std::span<const Complex> samples) {
    ArcScan best;
    const std::size_t m = samples.size();
    if (m == 0) return best;
    const auto buf = doubled(samples);
    consider(best, arc_deviation(buf, 0, m), m, 0);
    for (std::size_t len = m / 2; len >= 4; len /= 2) {
        for (std::size_t s = 0; s < m; ++s) consider(best, arc_deviation(buf, s, len), len, s);
    }
    return best;
}

std::vector<Complex> dft(std::span<const Complex> samples) {
    const std::size_t m = samples.size();
    std::vector<Complex> out(m);
    const double step = -2.0 * std::numbers::pi / static_cast<double>(m);
    for (std::size_t k = 0; k < m; ++k) {
        Complex acc{0.0, 0.0};
        for (std::size_t t = 0; t < m; ++t) {
            acc += samples[t] * std::polar(1.0, step * static_cast<double>((t * k) % m));
        }
        out[k] = acc / static_cast<double>(m);
    }
    return out;
}

std::vector<Complex> power_series_values(std::span<const Complex> coeffs, std::span<const Complex> points) {
    std::vector<Complex> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) out[i] = horner(coeffs, points[i]);
    return out;
}

SublevelScan sublevel_scan(std::span<const Complex> zeros, std::span<const Complex> coeffs,
                           std::span<const Complex> points, double eps) {
    SublevelScan scan;
    for (const auto& z : points) {
        if (std::abs(product_at(zeros, z)) >= eps) continue;
        ++scan.hits;
        scan.sup = std::max(scan.sup, std::abs(horner(coeffs, z)));
    }
    return scan;
}

}  // namespace serial

namespace omp {

std::vector<Complex> blaschke_values(std::span<const Complex> zeros, std::span<const Complex> points) {
    std::vector<Complex> out(points.size());
    const auto n = static_cast<long>(points.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = product_at(zeros, points[static_cast<std::size_t>(i)]);
    return out;
}

std::vector<double> frostman_values(std::span<const Complex> zeros, std::span<const Complex> points) {
    std::vector<double> out(points.size());
    const auto n = static_cast<long>(points.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = frostman_at(zeros, points[static_cast<std::size_t>(i)]);
    return out;
}

ArcScan dyadic_arc_oscillation(std::span<const Complex> samples) {
    ArcScan best;
    const std::size_t m = samples.size();
    if (m == 0) return best;
    const auto buf = doubled(samples);
    consider(best, arc_deviation(buf, 0, m), m, 0);
    std::vector<double> level(m);
    for (std::size_t len = m / 2; len >= 4; len /= 2) {
        const auto count = static_cast<long>(m);
#pragma omp parallel for schedule(static)
        for (long s = 0; s < count; ++s) {
            level[static_cast<std::size_t>(s)] = arc_deviation(buf, static_cast<std::size_t>(s), len);
        }
        // Serial reduction keeps the tie-breaking identical to the reference.
        for (std::size_t s = 0; s < m; ++s) consider(best, level[s], len, s);
    }
    return best;
}

std::vector<Complex> power_series_values(std::span<const Complex> coeffs, std::span<const Complex> points) {
    std::vector<Complex> out(points.size());
    const auto n = static_cast<long>(points.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = horner(coeffs, points[static_cast<std::size_t>(i)]);
    return out;
}

SublevelScan sublevel_scan(std::span<const Complex> zeros, std::span<const Complex> coeffs,
                           std::span<const Complex> points, double eps) {
    double sup = 0.0;
    std::size_t hits = 0;
    const auto n = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic, 64) reduction(max : sup) reduction(+ : hits)
    for (long i = 0; i < n; ++i) {
        const Complex z = points[static_cast<std::size_t>(i)];
        if (std::abs(product_at(zeros, z)) >= eps) continue;
        ++hits;
        sup = std::max(sup, std::abs(horner(coeffs, z)));
    }
    return {sup, hits};
}

}  // namespace omp

}  // namespace modelspace::kernels

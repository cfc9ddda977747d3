#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace modelspace {

using Complex = std::complex<double>;

/// Points closer than this to the unit circle are rejected.
inline constexpr double kEtaMin = 1e-6;

class DiskPoint {
public:
    DiskPoint() = default;
    explicit DiskPoint(Complex z);

    Complex value() const { return z_; }
    double modulus() const { return std::abs(z_); }
    /// 1 - |z|, the distance to the boundary.
    double depth() const { return 1.0 - std::abs(z_); }

    operator Complex() const { return z_; }

private:
    Complex z_{0.0, 0.0};
};

/// Ordered, pairwise-distinct zeros of a finite Blaschke product.
/// Order is preserved exactly as given so that value sequences stay aligned.
class ZeroSequence {
public:
    explicit ZeroSequence(std::vector<Complex> points,
                          std::vector<std::string> labels = {});

    std::size_t size() const { return points_.size(); }
    const DiskPoint& operator[](std::size_t i) const { return points_[i]; }
    std::span<const DiskPoint> points() const { return points_; }
    std::vector<Complex> values() const;
    const std::vector<std::string>& labels() const { return labels_; }

    /// Leading N points (nested truncation).
    ZeroSequence truncated(std::size_t n) const;

    /// Indices sorted by increasing modulus, ties broken by argument.
    std::vector<std::size_t> canonical_order() const;

private:
    std::vector<DiskPoint> points_;
    std::vector<std::string> labels_;
};

/// Complex values aligned index-by-index with a ZeroSequence.
class ValueSequence {
public:
    ValueSequence() = default;
    explicit ValueSequence(std::vector<Complex> values) : values_(std::move(values)) {}

    std::size_t size() const { return values_.size(); }
    const Complex& operator[](std::size_t i) const { return values_[i]; }
    std::span<const Complex> values() const { return values_; }
    ValueSequence truncated(std::size_t n) const;

    /// sum_j |w_j|^p (1 - |z_j|)^gamma
    double weighted_lp_sum(const ZeroSequence& zeros, double p, double gamma) const;

private:
    std::vector<Complex> values_;
};

void require_aligned(const ZeroSequence& zeros, const ValueSequence& values);

enum class SmoothnessClass { Lipschitz, BMO, Gevrey, Sobolev };

struct SmoothnessDescriptor {
    SmoothnessClass tag = SmoothnessClass::BMO;
    double alpha = 0.0;
    double p = 0.0;
    double s = 0.0;

    static SmoothnessDescriptor lipschitz(double alpha);
    static SmoothnessDescriptor bmo();
    static SmoothnessDescriptor gevrey(double alpha);
    static SmoothnessDescriptor sobolev(double p, double s);

    std::string name() const;
};

/// Named scalars, series and notes produced by diagnostic routines.
struct DiagnosticsReport {
    std::map<std::string, double> scalars;
    std::map<std::string, std::vector<double>> series;
    std::vector<std::string> notes;

    double at(const std::string& key) const;
};

/// |a - b| / |1 - conj(a) b|
double pseudohyperbolic_distance(DiskPoint a, DiskPoint b);

enum class SequenceKind { RadialGeometric, RotatedRadial, Separated, Explicit };

struct SequenceParams {
    SequenceKind kind = SequenceKind::RadialGeometric;
    std::size_t count = 0;
    double q = 0.5;               // radial kinds: z_k = (1 - q^k) e^{i k step}
    double angle_step = 0.0;      // rotated_radial
    double c = 1.0;               // separated: |z_j - z_k| >= c (1 - |z_j|)^s
    double s = 0.25;
    std::uint64_t seed = 0;       // separated: per-ring angular jitter
    std::vector<Complex> points;  // explicit
};

ZeroSequence generate_sequence(const SequenceParams& params);

/// blaschke_sum, min_separation, max_modulus, size
DiagnosticsReport validate_sequence(const ZeroSequence& zeros);

}  // namespace modelspace

#include "modelspace/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace modelspace {

DiskPoint::DiskPoint(Complex z) : z_(z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw std::invalid_argument("disk point must be finite");
    }
    if (std::abs(z) > 1.0 - kEtaMin) {
        std::ostringstream msg;
        msg << "disk point " << z << " violates |z| <= 1 - " << kEtaMin;
        throw std::invalid_argument(msg.str());
    }
}

ZeroSequence::ZeroSequence(std::vector<Complex> points, std::vector<std::string> labels)
    : labels_(std::move(labels)) {
    if (points.empty()) {
        throw std::invalid_argument("zero sequence must contain at least one point");
    }
    if (!labels_.empty() && labels_.size() != points.size()) {
        throw std::invalid_argument("label count does not match point count");
    }
    points_.reserve(points.size());
    for (const auto& z : points) points_.emplace_back(z);
    for (std::size_t i = 0; i < points_.size(); ++i) {
        for (std::size_t j = i + 1; j < points_.size(); ++j) {
            if (pseudohyperbolic_distance(points_[i], points_[j]) <= 0.0) {
                std::ostringstream msg;
                msg << "duplicate zero at indices " << i << " and " << j;
                throw std::invalid_argument(msg.str());
            }
        }
    }
}

std::vector<Complex> ZeroSequence::values() const {
    std::vector<Complex> out;
    out.reserve(points_.size());
    for (const auto& p : points_) out.push_back(p.value());
    return out;
}

ZeroSequence ZeroSequence::truncated(std::size_t n) const {
    if (n == 0 || n > points_.size()) {
        throw std::out_of_range("truncation length out of range");
    }
    std::vector<Complex> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(points_[i].value());
    std::vector<std::string> lbl;
    if (!labels_.empty()) lbl.assign(labels_.begin(), labels_.begin() + static_cast<long>(n));
    return ZeroSequence(std::move(pts), std::move(lbl));
}

std::vector<std::size_t> ZeroSequence::canonical_order() const {
    std::vector<std::size_t> idx(points_.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const double ma = points_[a].modulus();
        const double mb = points_[b].modulus();
        if (ma != mb) return ma < mb;
        return std::arg(points_[a].value()) < std::arg(points_[b].value());
    });
    return idx;
}

ValueSequence ValueSequence::truncated(std::size_t n) const {
    if (n > values_.size()) throw std::out_of_range("truncation length out of range");
    return ValueSequence(std::vector<Complex>(values_.begin(), values_.begin() + static_cast<long>(n)));
}

double ValueSequence::weighted_lp_sum(const ZeroSequence& zeros, double p, double gamma) const {
    require_aligned(zeros, *this);
    double sum = 0.0;
    for (std::size_t j = 0; j < values_.size(); ++j) {
        sum += std::pow(std::abs(values_[j]), p) * std::pow(zeros[j].depth(), gamma);
    }
    return sum;
}

void require_aligned(const ZeroSequence& zeros, const ValueSequence& values) {
    if (zeros.size() != values.size()) {
        std::ostringstream msg;
        msg << "value sequence length " << values.size() << " does not match "
            << zeros.size() << " zeros";
        throw std::invalid_argument(msg.str());
    }
}

SmoothnessDescriptor SmoothnessDescriptor::lipschitz(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("Lipschitz class needs alpha > 0");
    return {SmoothnessClass::Lipschitz, alpha, 0.0, 0.0};
}

SmoothnessDescriptor SmoothnessDescriptor::bmo() { return {SmoothnessClass::BMO, 0.0, 0.0, 0.0}; }

SmoothnessDescriptor SmoothnessDescriptor::gevrey(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("Gevrey class needs alpha > 0");
    return {SmoothnessClass::Gevrey, alpha, 0.0, 0.0};
}

SmoothnessDescriptor SmoothnessDescriptor::sobolev(double p, double s) {
    if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("Sobolev class needs 1 < p < inf");
    if (!(s > 0.0)) throw std::invalid_argument("Sobolev class needs s > 0");
    return {SmoothnessClass::Sobolev, 0.0, p, s};
}

std::string SmoothnessDescriptor::name() const {
    std::ostringstream out;
    switch (tag) {
        case SmoothnessClass::Lipschitz: out << "lipschitz(alpha=" << alpha << ")"; break;
        case SmoothnessClass::BMO: out << "bmo"; break;
        case SmoothnessClass::Gevrey: out << "gevrey(alpha=" << alpha << ")"; break;
        case SmoothnessClass::Sobolev: out << "sobolev(p=" << p << ",s=" << s << ")"; break;
    }
    return out.str();
}

double DiagnosticsReport::at(const std::string& key) const {
    auto it = scalars.find(key);
    if (it == scalars.end()) throw std::out_of_range("no scalar named " + key);
    return it->second;
}

double pseudohyperbolic_distance(DiskPoint a, DiskPoint b) {
    const Complex za = a.value();
    const Complex zb = b.value();
    return std::abs(za - zb) / std::abs(1.0 - std::conj(za) * zb);
}

namespace {

std::vector<Complex> radial(std::size_t n, double q, double step) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("radial generator needs q in (0,1)");
    std::vector<Complex> pts;
    pts.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const double depth = std::pow(q, static_cast<double>(k));
        if (depth < kEtaMin) {
            std::ostringstream msg;
            msg << "radial point " << k << " has 1-|z| = " << depth << " < eta_min";
            throw std::invalid_argument(msg.str());
        }
        pts.push_back(std::polar(1.0 - depth, step * static_cast<double>(k)));
    }
    return pts;
}

// Greedy placement on rings of depth 2^-m; candidates are accepted when the
// separation inequality holds in both directions with every accepted point.
std::vector<Complex> separated(std::size_t n, double c, double s, std::uint64_t seed) {
    if (!(c > 0.0)) throw std::invalid_argument("separated generator needs c > 0");
    if (!(s > 0.0 && s < 0.5)) throw std::invalid_argument("separated generator needs s in (0, 1/2)");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(0.0, 1.0);
    std::vector<Complex> pts;
    for (int m = 1; pts.size() < n; ++m) {
        const double depth = std::ldexp(1.0, -m);
        if (depth < kEtaMin) {
            throw std::invalid_argument("separated generator exhausted rings above eta_min");
        }
        const double radius = 1.0 - depth;
        const double need = c * std::pow(depth, s);
        const auto candidates = static_cast<std::size_t>(
            std::max(8.0, std::ceil(4.0 * std::numbers::pi / need)));
        const double offset = jitter(rng);
        for (std::size_t i = 0; i < candidates && pts.size() < n; ++i) {
            const double angle = 2.0 * std::numbers::pi * (static_cast<double>(i) + offset) /
                                 static_cast<double>(candidates);
            const Complex z = std::polar(radius, angle);
            bool ok = true;
            for (const auto& w : pts) {
                const double dw = 1.0 - std::abs(w);
                if (std::abs(z - w) < c * std::pow(std::max(depth, dw), s)) {
                    ok = false;
                    break;
                }
            }
            if (ok) pts.push_back(z);
        }
    }
    return pts;
}

}  // namespace

ZeroSequence generate_sequence(const SequenceParams& params) {
    std::vector<Complex> pts;
    switch (params.kind) {
        case SequenceKind::RadialGeometric:
            pts = radial(params.count, params.q, 0.0);
            break;
        case SequenceKind::RotatedRadial:
            pts = radial(params.count, params.q, params.angle_step);
            break;
        case SequenceKind::Separated:
            pts = separated(params.count, params.c, params.s, params.seed);
            break;
        case SequenceKind::Explicit:
            return ZeroSequence(params.points);
    }
    if (pts.empty()) throw std::invalid_argument("generator requires count >= 1");
    ZeroSequence raw(pts);
    std::vector<Complex> ordered;
    for (auto i : raw.canonical_order()) ordered.push_back(pts[i]);
    return ZeroSequence(std::move(ordered));
}

DiagnosticsReport validate_sequence(const ZeroSequence& zeros) {
    DiagnosticsReport report;
    double sum = 0.0;
    double max_mod = 0.0;
    for (const auto& z : zeros.points()) {
        sum += z.depth();
        max_mod = std::max(max_mod, z.modulus());
    }
    double min_rho = 1.0;
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        for (std::size_t j = i + 1; j < zeros.size(); ++j) {
            min_rho = std::min(min_rho, pseudohyperbolic_distance(zeros[i], zeros[j]));
        }
    }
    report.scalars["blaschke_sum"] = sum;
    report.scalars["min_separation"] = zeros.size() > 1 ? min_rho : 1.0;
    report.scalars["max_modulus"] = max_mod;
    report.scalars["size"] = static_cast<double>(zeros.size());
    if (zeros.size() == 1) report.notes.push_back("single zero: min_separation reported as 1");
    return report;
}

}  // namespace modelspace

#include "modelspace/blaschke.hpp"

#include "modelspace/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/tools/minima.hpp>

namespace modelspace {

namespace {

constexpr double kBoundarySlack = 1e-12;

Complex unimodular_sign(Complex a) {
    const double r = std::abs(a);
    return r == 0.0 ? Complex{-1.0, 0.0} : a / r;
}

void require_closed_disk(Complex z) {
    if (!(std::abs(z) <= 1.0 + kBoundarySlack)) {
        std::ostringstream msg;
        msg << "point " << z << " lies outside the closed unit disk";
        throw std::domain_error(msg.str());
    }
}

}  // namespace

Complex blaschke_factor(Complex zero, Complex z) {
    if (zero == Complex{0.0, 0.0}) return z;
    const Complex denom = 1.0 - std::conj(zero) * z;
    if (denom == Complex{0.0, 0.0}) throw std::domain_error("blaschke factor pole hit");
    // |a|/a = conj(a)/|a|
    return std::conj(unimodular_sign(zero)) * (zero - z) / denom;
}

Complex blaschke_factor_derivative_at_zero(Complex zero) {
    if (zero == Complex{0.0, 0.0}) return {1.0, 0.0};
    return -std::conj(unimodular_sign(zero)) / (1.0 - std::norm(zero));
}

BlaschkeProduct::BlaschkeProduct(ZeroSequence zeros, double tail_bound)
    : zeros_(std::move(zeros)), tail_bound_(tail_bound) {
    if (!(tail_bound_ >= 0.0)) throw std::invalid_argument("tail bound must be nonnegative");
    order_ = zeros_.canonical_order();
    ordered_.reserve(order_.size());
    for (auto i : order_) ordered_.push_back(zeros_[i].value());
}

Complex BlaschkeProduct::eval(Complex z) const {
    require_closed_disk(z);
    Complex acc{1.0, 0.0};
    for (const auto& a : ordered_) acc *= blaschke_factor(a, z);
    return acc;
}

ProductValue BlaschkeProduct::eval_with_bound(Complex z) const {
    ProductValue out{eval(z), 0.0};
    if (tail_bound_ > 0.0) {
        const double r = std::abs(z);
        // |1 - b_a(z)| <= (1-|a|)(1+|z|)/(1-|z|) for each dropped factor.
        out.error_bound = r >= 1.0 ? std::numeric_limits<double>::infinity()
                                   : std::abs(out.value) *
                                         std::expm1(tail_bound_ * (1.0 + r) / (1.0 - r));
    }
    return out;
}

Complex BlaschkeProduct::eval_without(std::size_t skip, Complex z) const {
    Complex acc{1.0, 0.0};
    for (std::size_t i = 0; i < ordered_.size(); ++i) {
        if (order_[i] == skip) continue;
        acc *= blaschke_factor(ordered_[i], z);
    }
    return acc;
}

Complex BlaschkeProduct::derivative_at_zero(std::size_t j) const {
    if (j >= zeros_.size()) throw std::out_of_range("zero index out of range");
    const Complex zj = zeros_[j].value();
    return blaschke_factor_derivative_at_zero(zj) * eval_without(j, zj);
}

double interpolation_delta(const BlaschkeProduct& b) {
    double delta = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.size(); ++j) {
        delta = std::min(delta, std::abs(b.derivative_at_zero(j)) * b.zeros()[j].depth());
    }
    return delta;
}

double frostman_sum(const ZeroSequence& zeros, Complex zeta) {
    if (std::abs(std::abs(zeta) - 1.0) > 1e-12) throw std::domain_error("frostman_sum needs |zeta| = 1");
    double sum = 0.0;
    for (const auto& z : zeros.points()) {
        const double dist = std::abs(zeta - z.value());
        if (dist < 1e-15) throw std::domain_error("boundary point coincides with a zero");
        sum += z.depth() / dist;
    }
    return sum;
}

double frostman_sup(const ZeroSequence& zeros, std::size_t grid_size) {
    if (grid_size < 16) throw std::invalid_argument("frostman_sup needs at least 16 grid points");
    const auto pts = zeros.values();
    const auto nodes = kernels::circle_nodes(grid_size, 0.0);
    const auto values = kernels::omp::frostman_values(pts, nodes);

    const std::size_t m = grid_size;
    std::vector<std::size_t> peaks;
    for (std::size_t t = 0; t < m; ++t) {
        const double v = values[t];
        if (v >= values[(t + m - 1) % m] && v >= values[(t + 1) % m]) peaks.push_back(t);
    }
    std::sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) {
        return values[a] != values[b] ? values[a] > values[b] : a < b;
    });
    if (peaks.size() > 8) peaks.resize(8);

    double best = *std::max_element(values.begin(), values.end());
    const double h = 2.0 * std::numbers::pi / static_cast<double>(m);
    auto negative = [&](double t) { return -frostman_sum(zeros, std::polar(1.0, t)); };
    for (auto t : peaks) {
        const double center = h * static_cast<double>(t);
        const auto [arg, val] =
            boost::math::tools::brent_find_minima(negative, center - h, center + h, 52);
        (void)arg;
        best = std::max(best, -val);
    }
    return best;
}

bool sublevel_indicator(const BlaschkeProduct& b, double eps, Complex z) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("sublevel threshold must lie in (0,1)");
    return std::abs(b.eval(z)) < eps;
}

}  // namespace modelspace

#include "modelspace/boundary.hpp"

#include "modelspace/kernels.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace modelspace {

namespace {

// FFTW planning is not thread-safe; execution with new arrays is.
class PlanCache {
public:
    fftw_plan get(std::size_t n, int sign) {
        std::lock_guard lock(mutex_);
        auto key = std::make_pair(n, sign);
        if (auto it = plans_.find(key); it != plans_.end()) return it->second;
        auto* in = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
        auto* out = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
        fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), in, out, sign,
                                          FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(in);
        fftw_free(out);
        plans_.emplace(key, plan);
        return plan;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& plan_cache() {
    static PlanCache cache;
    return cache;
}

void transform(std::span<const Complex> in, std::span<Complex> out, int sign) {
    fftw_plan plan = plan_cache().get(in.size(), sign);
    // fftw_execute_dft takes non-const input but does not modify it for out-of-place plans.
    auto* src = reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in.data()));
    auto* dst = reinterpret_cast<fftw_complex*>(out.data());
    fftw_execute_dft(plan, src, dst);
}

bool is_power_of_two(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

Complex offset_phase(const BoundaryGrid& grid, long n) {
    if (grid.offset() == 0.0) return {1.0, 0.0};
    return std::polar(1.0, -2.0 * std::numbers::pi * grid.offset() * static_cast<double>(n) /
                               static_cast<double>(grid.size()));
}

double energy(std::span<const Complex> coeffs) {
    double e = 0.0;
    for (const auto& c : coeffs) e += std::norm(c);
    return e;
}

}  // namespace

BoundaryGrid::BoundaryGrid(std::size_t size, double offset) : size_(size), offset_(offset) {
    if (!is_power_of_two(size) || size < 16) {
        std::ostringstream msg;
        msg << "grid size " << size << " must be a power of two >= 16";
        throw std::invalid_argument(msg.str());
    }
    if (!(offset >= 0.0 && offset < 1.0)) throw std::invalid_argument("grid offset must lie in [0,1)");
    nodes_ = std::make_shared<const std::vector<Complex>>(kernels::circle_nodes(size, offset));
}

BoundaryGrid BoundaryGrid::from_log2(int log2_size, double offset) {
    if (log2_size < 4 || log2_size > 26) throw std::invalid_argument("grid log2 size must lie in [4, 26]");
    return BoundaryGrid(std::size_t{1} << log2_size, offset);
}

double BoundaryGrid::angle(std::size_t t) const {
    return 2.0 * std::numbers::pi * (static_cast<double>(t) + offset_) / static_cast<double>(size_);
}

std::vector<Complex> fourier(const BoundaryGrid& grid, std::span<const Complex> samples) {
    const std::size_t m = grid.size();
    if (samples.size() != m) throw std::invalid_argument("sample count does not match grid");
    std::vector<Complex> raw(m);
    transform(samples, raw, FFTW_FORWARD);
    std::vector<Complex> spectrum(m);
    const long half = static_cast<long>(m / 2);
    const double scale = 1.0 / static_cast<double>(m);
    for (long n = -half; n < half; ++n) {
        const auto k = static_cast<std::size_t>((n + static_cast<long>(m)) % static_cast<long>(m));
        spectrum[static_cast<std::size_t>(n + half)] = raw[k] * scale * offset_phase(grid, n);
    }
    return spectrum;
}

std::vector<Complex> synthesize(const BoundaryGrid& grid, std::span<const Complex> spectrum) {
    const std::size_t m = grid.size();
    if (spectrum.size() != m) throw std::invalid_argument("spectrum length does not match grid");
    std::vector<Complex> raw(m);
    const long half = static_cast<long>(m / 2);
    for (long n = -half; n < half; ++n) {
        const auto k = static_cast<std::size_t>((n + static_cast<long>(m)) % static_cast<long>(m));
        raw[k] = spectrum[static_cast<std::size_t>(n + half)] * std::conj(offset_phase(grid, n));
    }
    std::vector<Complex> samples(m);
    transform(raw, samples, FFTW_BACKWARD);
    return samples;
}

BoundaryFunction::BoundaryFunction(BoundaryGrid grid, std::vector<Complex> samples, std::vector<Complex> spectrum)
    : grid_(std::move(grid)), samples_(std::move(samples)), spectrum_(std::move(spectrum)) {}

BoundaryFunction BoundaryFunction::from_samples(BoundaryGrid grid, std::vector<Complex> samples) {
    auto spectrum = fourier(grid, samples);
    return BoundaryFunction(std::move(grid), std::move(samples), std::move(spectrum));
}

BoundaryFunction BoundaryFunction::from_spectrum(BoundaryGrid grid, std::vector<Complex> spectrum) {
    auto samples = synthesize(grid, spectrum);
    return BoundaryFunction(std::move(grid), std::move(samples), std::move(spectrum));
}

BoundaryFunction BoundaryFunction::from_modes(BoundaryGrid grid, std::span<const Complex> coeffs, long first_mode) {
    std::vector<Complex> spectrum(grid.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const long n = first_mode + static_cast<long>(i);
        if (n < grid.min_mode() || n >= grid.max_mode()) {
            throw std::invalid_argument("mode outside the grid band");
        }
        spectrum[static_cast<std::size_t>(n - grid.min_mode())] = coeffs[i];
    }
    return from_spectrum(std::move(grid), std::move(spectrum));
}

BoundaryFunction BoundaryFunction::constant(BoundaryGrid grid, Complex c) {
    const Complex coeffs[] = {c};
    return from_modes(std::move(grid), coeffs, 0);
}

Complex BoundaryFunction::coeff(long n) const {
    if (n < grid_.min_mode() || n >= grid_.max_mode()) return {0.0, 0.0};
    return spectrum_[static_cast<std::size_t>(n - grid_.min_mode())];
}

std::span<const Complex> BoundaryFunction::analytic_coeffs() const {
    return std::span<const Complex>(spectrum_).subspan(size() / 2);
}

void BoundaryFunction::require_same_grid(const BoundaryFunction& other) const {
    if (!(grid_ == other.grid_)) throw std::invalid_argument("boundary functions live on different grids");
}

BoundaryFunction BoundaryFunction::conj() const {
    std::vector<Complex> s(samples_.size());
    std::transform(samples_.begin(), samples_.end(), s.begin(), [](Complex v) { return std::conj(v); });
    return from_samples(grid_, std::move(s));
}

BoundaryFunction BoundaryFunction::operator*(const BoundaryFunction& other) const {
    require_same_grid(other);
    std::vector<Complex> s(samples_.size());
    for (std::size_t t = 0; t < s.size(); ++t) s[t] = samples_[t] * other.samples_[t];
    return from_samples(grid_, std::move(s));
}

BoundaryFunction BoundaryFunction::operator+(const BoundaryFunction& other) const {
    require_same_grid(other);
    std::vector<Complex> s(samples_.size());
    for (std::size_t t = 0; t < s.size(); ++t) s[t] = samples_[t] + other.samples_[t];
    return from_samples(grid_, std::move(s));
}

BoundaryFunction BoundaryFunction::operator-(const BoundaryFunction& other) const {
    require_same_grid(other);
    std::vector<Complex> s(samples_.size());
    for (std::size_t t = 0; t < s.size(); ++t) s[t] = samples_[t] - other.samples_[t];
    return from_samples(grid_, std::move(s));
}

BoundaryFunction BoundaryFunction::operator*(Complex scale) const {
    std::vector<Complex> s(samples_.size());
    for (std::size_t t = 0; t < s.size(); ++t) s[t] = samples_[t] * scale;
    return from_samples(grid_, std::move(s));
}

BoundaryFunction riesz_project(const BoundaryFunction& f, RieszSign sign) {
    std::vector<Complex> spectrum = f.spectrum();
    const std::size_t half = f.size() / 2;
    if (sign == RieszSign::Plus) {
        std::fill(spectrum.begin(), spectrum.begin() + static_cast<long>(half), Complex{});
    } else {
        std::fill(spectrum.begin() + static_cast<long>(half), spectrum.end(), Complex{});
    }
    return BoundaryFunction::from_spectrum(f.grid(), std::move(spectrum));
}

double h2_defect(const BoundaryFunction& f) {
    const auto& spec = f.spectrum();
    const double total = energy(spec);
    if (total == 0.0) return 0.0;
    return energy(std::span<const Complex>(spec).first(f.size() / 2)) / total;
}

namespace {

void require_h2(const BoundaryFunction& f, double tol, const char* op) {
    const double d = h2_defect(f);
    if (d > tol) {
        std::ostringstream msg;
        msg << op << ": input has H^2 defect " << d << " > " << tol;
        throw DefectError(msg.str(), d);
    }
}

void require_unimodular(const BoundaryFunction& theta) {
    const double err = unimodularity_error(theta);
    if (err > kUnimodularTol) {
        std::ostringstream msg;
        msg << "inner function samples deviate from |theta| = 1 by " << err;
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

BoundaryFunction backward_shift(const BoundaryFunction& f, double tol) {
    require_h2(f, tol, "backward_shift");
    const std::size_t m = f.size();
    const std::size_t half = m / 2;
    std::vector<Complex> spectrum(m);
    const auto& src = f.spectrum();
    for (std::size_t i = half; i + 1 < m; ++i) spectrum[i] = src[i + 1];
    return BoundaryFunction::from_spectrum(f.grid(), std::move(spectrum));
}

double unimodularity_error(const BoundaryFunction& theta) {
    double err = 0.0;
    for (const auto& v : theta.samples()) err = std::max(err, std::abs(std::abs(v) - 1.0));
    return err;
}

BoundaryFunction tilde(const BoundaryFunction& theta, const BoundaryFunction& f) {
    require_unimodular(theta);
    if (!(theta.grid() == f.grid())) throw std::invalid_argument("tilde: grids differ");
    std::vector<Complex> s(f.size());
    const auto& grid = f.grid();
    for (std::size_t t = 0; t < s.size(); ++t) {
        s[t] = std::conj(grid.node(t)) * std::conj(f[t]) * theta[t];
    }
    return BoundaryFunction::from_samples(grid, std::move(s));
}

BoundaryFunction model_project(const BoundaryFunction& theta, const BoundaryFunction& f, double tol) {
    require_unimodular(theta);
    require_h2(f, tol, "model_project");
    return theta * riesz_project(theta.conj() * f, RieszSign::Minus);
}

BoundaryFunction toeplitz_coanalytic(const BoundaryFunction& psi, const BoundaryFunction& f) {
    return riesz_project(psi.conj() * f, RieszSign::Plus);
}

double lp_norm(const BoundaryFunction& f, double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("lp_norm needs p >= 1");
    if (std::isinf(p)) {
        double m = 0.0;
        for (const auto& v : f.samples()) m = std::max(m, std::abs(v));
        return m;
    }
    double sum = 0.0;
    for (const auto& v : f.samples()) sum += std::pow(std::abs(v), p);
    return std::pow(sum / static_cast<double>(f.size()), 1.0 / p);
}

double bmo_norm(const BoundaryFunction& f) {
    Complex mean{0.0, 0.0};
    for (const auto& v : f.samples()) mean += v;
    mean /= static_cast<double>(f.size());
    return std::abs(mean) + kernels::omp::dyadic_arc_oscillation(f.samples()).max_oscillation;
}

Complex inner_product(const BoundaryFunction& f, const BoundaryFunction& g) {
    if (!(f.grid() == g.grid())) throw std::invalid_argument("inner_product: grids differ");
    Complex acc{0.0, 0.0};
    for (std::size_t t = 0; t < f.size(); ++t) acc += f[t] * std::conj(g[t]);
    return acc / static_cast<double>(f.size());
}

double model_defect(const BoundaryFunction& theta, const BoundaryFunction& f) {
    return std::max(h2_defect(f), h2_defect(tilde(theta, f)));
}

double membership_defect(const BoundaryFunction* theta, const BoundaryFunction& f, MemberSpace space) {
    if (space == MemberSpace::H2) return h2_defect(f);
    if (theta == nullptr) throw std::invalid_argument("model space membership needs an inner function");
    return model_defect(*theta, f);
}

BoundaryFunction reflect(const BoundaryFunction& f) {
    const std::size_t m = f.size();
    std::vector<Complex> spectrum(m);
    const long lo = f.grid().min_mode();
    for (long n = lo; n < -lo; ++n) {
        // Mode -M/2 has no partner inside the band; it maps onto itself.
        const long src = (n == lo) ? lo : -n;
        spectrum[static_cast<std::size_t>(n - lo)] = f.coeff(src);
    }
    return BoundaryFunction::from_spectrum(f.grid(), std::move(spectrum));
}

BoundaryFunction blaschke_boundary(const BlaschkeProduct& b, const BoundaryGrid& grid) {
    return BoundaryFunction::from_samples(grid, kernels::omp::blaschke_values(b.canonical_zeros(), grid.nodes()));
}

}  // namespace modelspace

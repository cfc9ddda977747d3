#include "modelspace/experiments.hpp"

#include "modelspace/interp.hpp"
#include "modelspace/kernels.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

namespace modelspace {

std::vector<double> ExperimentResult::values(const std::string& label) const {
    std::vector<double> out;
    for (const auto& e : series) {
        if (e.label == label) out.push_back(e.value);
    }
    return out;
}

void ExperimentResult::add(const std::string& label, std::size_t index, double value) {
    series.push_back({label, index, value});
}

TrendCheck check_trend(const std::string& label, const std::vector<double>& values, double factor,
                       std::size_t min_steps) {
    TrendCheck out;
    out.series = label;
    if (values.size() < 2) return out;
    out.strictly_increasing = true;
    out.min_step_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (!(values[i] > values[i - 1])) out.strictly_increasing = false;
        out.min_step_ratio = std::min(out.min_step_ratio, values[i] / values[i - 1]);
    }
    out.growth_trend = values.size() - 1 >= min_steps && out.min_step_ratio >= factor;
    return out;
}

BoundaryFunction log_one_minus_z(const BoundaryGrid& grid) {
    std::vector<Complex> coeffs(grid.size() / 2);
    for (std::size_t n = 1; n < coeffs.size(); ++n) coeffs[n] = -1.0 / static_cast<double>(n);
    return BoundaryFunction::from_modes(grid, coeffs, 0);
}

BoundaryFunction sampled_log_one_minus_z(const BoundaryGrid& grid) {
    if (grid.offset() == 0.0) throw std::invalid_argument("log(1-z) cannot be sampled at zeta = 1; rotate the grid");
    return BoundaryFunction::sample(grid, [](Complex zeta) { return std::log(1.0 - zeta); });
}

double kernel_l1_norm_quadrature(double radius) {
    if (!(radius >= 0.0 && radius < 1.0)) throw std::invalid_argument("kernel radius must lie in [0,1)");
    auto integrand = [radius](double t) {
        return 1.0 / std::sqrt(1.0 - 2.0 * radius * std::cos(t) + radius * radius);
    };
    // The integrand peaks at t = 0 with width ~ 1 - r; split there geometrically.
    std::vector<double> cuts{0.0};
    for (double w = 1.0 - radius; w < std::numbers::pi; w *= 4.0) cuts.push_back(w);
    cuts.push_back(std::numbers::pi);
    double total = 0.0;
    for (std::size_t i = 1; i < cuts.size(); ++i) {
        total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, cuts[i - 1], cuts[i], 15,
                                                                               1e-14);
    }
    return total / std::numbers::pi;  // 2 * (1/2pi) * int_0^pi
}

bool under_resolved(const ZeroSequence& zeros, std::size_t grid_size, double tol) {
    double rmax = 0.0;
    for (const auto& z : zeros.points()) rmax = std::max(rmax, z.modulus());
    return std::pow(rmax, static_cast<double>(grid_size) / 2.0) > tol;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::size_t> default_truncations(const ZeroSequence& zeros, std::vector<std::size_t> requested) {
    if (requested.empty()) {
        for (std::size_t n = 1; n <= zeros.size(); ++n) requested.push_back(n);
    }
    for (auto n : requested) {
        if (n == 0 || n > zeros.size()) throw std::invalid_argument("truncation length out of range");
    }
    return requested;
}

void warn_resolution(ExperimentResult& result, const ZeroSequence& zeros, std::size_t grid_size) {
    if (under_resolved(zeros, grid_size)) {
        std::ostringstream msg;
        msg << "grid M=" << grid_size << " under-resolves the kernel of the zero nearest the circle";
        result.warnings.push_back(msg.str());
    }
}

struct Projection {
    BoundaryFunction theta;
    BoundaryFunction coanalytic;  // P-(conj(theta) phi)
    BoundaryFunction g;           // theta * coanalytic
};

Projection project_log(const ZeroSequence& zeros, const BoundaryFunction& phi) {
    const BlaschkeProduct b(zeros);
    auto theta = blaschke_boundary(b, phi.grid());
    auto coanalytic = riesz_project(theta.conj() * phi, RieszSign::Minus);
    auto g = theta * coanalytic;
    return {std::move(theta), std::move(coanalytic), std::move(g)};
}

}  // namespace

ExperimentResult exp_nonduality(const ZeroSequence& zeros, std::size_t grid_size,
                                std::vector<std::size_t> truncations) {
    const auto start = Clock::now();
    ExperimentResult result;
    result.name = "nonduality";
    result.parameters["grid_size"] = static_cast<double>(grid_size);
    result.parameters["zeros"] = static_cast<double>(zeros.size());
    truncations = default_truncations(zeros, std::move(truncations));
    warn_resolution(result, zeros, grid_size);

    const BoundaryGrid grid(grid_size);
    const auto phi = log_one_minus_z(grid);

    std::vector<double> bmo_series;
    for (auto n : truncations) {
        const auto zn = zeros.truncated(n);
        const auto proj = project_log(zn, phi);
        const double bmo = bmo_norm(proj.coanalytic);
        bmo_series.push_back(bmo);
        result.add("bmo_coanalytic", n, bmo);
        result.add("sup_g", n, lp_norm(proj.g, std::numeric_limits<double>::infinity()));
    }

    const auto full = project_log(zeros, phi);
    result.parameters["g_h2_defect"] = h2_defect(full.g);
    std::vector<Complex> g_values;
    for (std::size_t j = 0; j < zeros.size(); ++j) {
        const Complex gj = cauchy_eval(full.g, zeros[j], 1.0);
        const Complex fj = cauchy_eval(phi, zeros[j]);
        g_values.push_back(gj);
        result.add("value_residual", j, std::abs(gj - fj));
        result.add("phi_truncation", j, std::abs(fj - std::log(1.0 - zeros[j].value())));
        result.add("g_log_ratio", j, std::abs(gj) / std::log(2.0 / zeros[j].depth()));
    }
    result.verdicts.push_back(log_growth_check(zeros, ValueSequence(g_values)));
    result.trends.push_back(check_trend("bmo_coanalytic", bmo_series));
    result.runtime_seconds = seconds_since(start);
    return result;
}

ExperimentResult exp_noninterpolation(const ZeroSequence& zeros, std::size_t grid_size,
                                      std::vector<std::size_t> truncations) {
    const auto start = Clock::now();
    ExperimentResult result;
    result.name = "noninterpolation";
    result.parameters["grid_size"] = static_cast<double>(grid_size);
    result.parameters["zeros"] = static_cast<double>(zeros.size());
    truncations = default_truncations(zeros, std::move(truncations));
    warn_resolution(result, zeros, grid_size);

    const BoundaryGrid grid(grid_size);
    for (std::size_t j = 0; j < zeros.size(); ++j) {
        const Complex zj = zeros[j].value();
        const auto kernel = BoundaryFunction::sample(grid, [zj](Complex z) { return 1.0 / (1.0 - std::conj(zj) * z); });
        const double grid_norm = lp_norm(kernel, 1.0);
        const double quad_norm = kernel_l1_norm_quadrature(zeros[j].modulus());
        const double scale = std::log(2.0 / zeros[j].depth());
        result.add("kernel_l1_grid", j, grid_norm);
        result.add("kernel_l1_quadrature", j, quad_norm);
        result.add("kernel_l1_route_gap", j, std::abs(grid_norm - quad_norm));
        result.add("kernel_l1_log_ratio", j, quad_norm / scale);
    }

    const auto phi = log_one_minus_z(grid);
    std::vector<double> bmo_series;
    for (auto n : truncations) {
        const auto zn = zeros.truncated(n);
        const auto proj = project_log(zn, phi);
        std::vector<Complex> w;
        for (const auto& z : zn.points()) w.push_back(cauchy_eval(proj.g, z, 1.0));
        const ValueSequence values(std::move(w));
        const auto interpolant = lagrange_interpolant(zn, values).sample(grid);
        const double bmo = bmo_norm(interpolant);
        bmo_series.push_back(bmo);
        result.add("interpolant_bmo", n, bmo);
        if (n == truncations.back()) result.verdicts.push_back(log_growth_check(zn, values));
    }
    result.trends.push_back(check_trend("interpolant_bmo", bmo_series));
    result.runtime_seconds = seconds_since(start);
    return result;
}

namespace {

ExperimentResult theorem_b_series(const ZeroSequence& zeros, std::size_t grid_size,
                                  const std::function<ValueSequence(const ZeroSequence&)>& values_for) {
    const auto start = Clock::now();
    ExperimentResult result;
    result.name = "theoremB";
    result.parameters["grid_size"] = static_cast<double>(grid_size);
    result.parameters["zeros"] = static_cast<double>(zeros.size());
    warn_resolution(result, zeros, grid_size);
    const BoundaryGrid grid(grid_size);
    std::vector<double> conj_max;
    std::vector<double> interp_sup;
    for (std::size_t n = 1; n <= zeros.size(); ++n) {
        const auto zn = zeros.truncated(n);
        const auto w = values_for(zn);
        const auto wt = conjugate_sequence(zn, w);
        double mx = 0.0;
        for (const auto& v : wt.values()) mx = std::max(mx, std::abs(v));
        const double sup = lp_norm(lagrange_interpolant(zn, w).sample(grid), std::numeric_limits<double>::infinity());
        conj_max.push_back(mx);
        interp_sup.push_back(sup);
        result.add("max_conjugate", n, mx);
        result.add("interpolant_sup", n, sup);
        if (n == zeros.size()) result.verdicts.push_back(decay_verdict(zn, wt, SmoothnessDescriptor::bmo()));
    }
    result.trends.push_back(check_trend("max_conjugate", conj_max));
    result.trends.push_back(check_trend("interpolant_sup", interp_sup));
    result.runtime_seconds = seconds_since(start);
    return result;
}

}  // namespace

ExperimentResult exp_theoremB(const ZeroSequence& zeros, const ValueSequence& values, std::size_t grid_size) {
    require_aligned(zeros, values);
    return theorem_b_series(zeros, grid_size,
                            [&](const ZeroSequence& zn) { return values.truncated(zn.size()); });
}

ExperimentResult exp_theoremB_constructed(const ZeroSequence& zeros, const std::function<Complex(std::size_t)>& target,
                                          std::size_t grid_size) {
    return theorem_b_series(zeros, grid_size, [&](const ZeroSequence& zn) {
        std::vector<Complex> t;
        for (std::size_t k = 1; k <= zn.size(); ++k) t.push_back(target(k));
        return invert_conjugate(zn, ValueSequence(std::move(t))).values;
    });
}

ExperimentResult exp_sublevel(const BlaschkeProduct& b, const BoundaryFunction& f, double eps,
                              LatticeDensity density) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("sublevel threshold must lie in (0,1)");
    if (density.radial < 2 || density.angular < 4) throw std::invalid_argument("lattice density too small");
    const auto start = Clock::now();
    ExperimentResult result;
    result.name = "sublevel";
    result.parameters["eps"] = eps;
    result.parameters["grid_size"] = static_cast<double>(f.size());
    result.parameters["radial"] = static_cast<double>(density.radial);
    result.parameters["angular"] = static_cast<double>(density.angular);
    const double defect = h2_defect(f);
    if (defect > kDefaultDefectTol) {
        throw DefectError("exp_sublevel: f must be analytic on the grid", defect);
    }
    warn_resolution(result, b.zeros(), f.size());

    // Depths from 1 (the origin) down to the resolution limit of the grid, geometric.
    const double min_depth = std::max(kEtaMin, 40.0 / static_cast<double>(f.size()));
    std::vector<Complex> lattice;
    lattice.reserve(density.radial * density.angular);
    for (std::size_t i = 0; i < density.radial; ++i) {
        const double depth = std::pow(min_depth, static_cast<double>(i) / static_cast<double>(density.radial - 1));
        const double r = 1.0 - depth;
        if (r == 0.0) {
            lattice.emplace_back(0.0, 0.0);
            continue;
        }
        for (std::size_t a = 0; a < density.angular; ++a) {
            lattice.push_back(std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(a) /
                                                static_cast<double>(density.angular)));
        }
    }
    const auto coeffs = f.analytic_coeffs();
    const auto scan = kernels::omp::sublevel_scan(b.canonical_zeros(), coeffs, lattice, eps);
    // The zeros lie in every sublevel set; include them so the scan sees the deepest points.
    const auto zeros = b.zeros().values();
    const auto at_zeros = kernels::omp::sublevel_scan(b.canonical_zeros(), coeffs, zeros, eps);
    const double boundary_sup = lp_norm(f, std::numeric_limits<double>::infinity());
    result.add("sublevel_sup", b.size(), std::max(scan.sup, at_zeros.sup));
    result.add("boundary_sup", b.size(), boundary_sup);
    result.add("sublevel_hits", b.size(), static_cast<double>(scan.hits));
    const auto theta = blaschke_boundary(b, f.grid());
    result.add("bmo_conj_theta_f", b.size(), bmo_norm(reflect(theta.conj() * f)));
    if (scan.hits == 0) result.warnings.push_back("lattice misses the sublevel set; increase density or eps");
    result.runtime_seconds = seconds_since(start);
    return result;
}

}  // namespace modelspace

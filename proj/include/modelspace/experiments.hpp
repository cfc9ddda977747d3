#pragma once

#include "modelspace/blaschke.hpp"
#include "modelspace/boundary.hpp"
#include "modelspace/classify.hpp"
#include "modelspace/core.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace modelspace {

struct SeriesEntry {
    std::string label;
    std::size_t index;
    double value;
};

/// Monotone-growth summary of one series.
struct TrendCheck {
    std::string series;
    bool strictly_increasing = false;
    double min_step_ratio = 0.0;  // min over steps of value[i+1] / value[i]
    bool growth_trend = false;    // every step >= factor over >= min_steps steps
};

struct ExperimentResult {
    std::string name;
    std::map<std::string, double> parameters;
    std::vector<SeriesEntry> series;
    std::vector<DecayVerdict> verdicts;
    std::vector<TrendCheck> trends;
    std::vector<std::string> warnings;
    double runtime_seconds = 0.0;

    /// Values of one labelled series, in insertion order.
    std::vector<double> values(const std::string& label) const;
    void add(const std::string& label, std::size_t index, double value);
};

/// Growth-trend thresholds for asymptotic statements rendered at finite N.
inline constexpr double kTrendFactor = 1.1;
inline constexpr std::size_t kTrendMinSteps = 4;

TrendCheck check_trend(const std::string& label, const std::vector<double>& values,
                       double factor = kTrendFactor, std::size_t min_steps = kTrendMinSteps);

/// Band-limited boundary function of log(1 - z): coefficients -1/n, 1 <= n < M/2.
BoundaryFunction log_one_minus_z(const BoundaryGrid& grid);

/// Direct samples log(1 - zeta_t); the grid must not contain zeta = 1.
BoundaryFunction sampled_log_one_minus_z(const BoundaryGrid& grid);

/// (1/2pi) int |1 - r e^{it}|^-1 dt by adaptive Gauss-Kronrod quadrature.
double kernel_l1_norm_quadrature(double radius);

/// True when max_j |z_j|^(M/2) exceeds tol, i.e. the grid cannot carry the
/// kernel of the zero nearest the circle.
bool under_resolved(const ZeroSequence& zeros, std::size_t grid_size, double tol = 1e-7);

/// log(1-z) projected onto K^2_B for nested truncations Z_1..Z_N.
ExperimentResult exp_nonduality(const ZeroSequence& zeros, std::size_t grid_size,
                                std::vector<std::size_t> truncations = {});

/// Kernel L^1 norms by two routes and the bmo trend of interpolants of g|_Z.
ExperimentResult exp_noninterpolation(const ZeroSequence& zeros, std::size_t grid_size,
                                      std::vector<std::size_t> truncations = {});

/// max |w~_k| and sup |interpolant| over nested truncations with fixed W.
ExperimentResult exp_theoremB(const ZeroSequence& zeros, const ValueSequence& values, std::size_t grid_size);

/// Same, with W_N = invert_conjugate(Z_N, {target(k)}) rebuilt for every N (k is 1-based).
ExperimentResult exp_theoremB_constructed(const ZeroSequence& zeros, const std::function<Complex(std::size_t)>& target,
                                          std::size_t grid_size);

struct LatticeDensity {
    std::size_t radial = 64;
    std::size_t angular = 256;
};

/// sup |f| over the sublevel set {|B| < eps} on a polar lattice versus sup |f| on the circle.
ExperimentResult exp_sublevel(const BlaschkeProduct& b, const BoundaryFunction& f, double eps,
                              LatticeDensity density = {});

}  // namespace modelspace

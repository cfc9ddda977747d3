#pragma once

#include "modelspace/blaschke.hpp"
#include "modelspace/boundary.hpp"
#include "modelspace/core.hpp"

#include <string>
#include <vector>

namespace modelspace {

enum class Verdict { Holds, Fails, Inconclusive };
std::string to_string(Verdict v);

enum class GrowthMode {
    PerIndex,    // every step of the run grows by growth_factor
    Cumulative,  // last/first over a strictly increasing run reaches growth_factor
};

/// Decision-rule thresholds for finite-data verdicts.
struct DecisionRule {
    double max_over_median = 10.0;   // "holds" when window max/median is at most this
    double growth_factor = 1.5;      // "fails" when a run of window ratios grows by this much
    std::size_t min_run = 4;         // ... over at least this many consecutive window indices
    GrowthMode growth_mode = GrowthMode::PerIndex;
    double gevrey_min_constant = 1e-3;
};

/// Result of testing a trace (or its conjugate sequence) against one class.
/// Ratios are listed in window order: indices sorted by 1 - |z_k| decreasing.
struct DecayVerdict {
    SmoothnessDescriptor descriptor;
    Verdict verdict = Verdict::Inconclusive;
    double fitted_constant = 0.0;
    std::vector<double> per_index_ratios;
    std::vector<std::size_t> order;  // original index of each ratio
    std::size_t window_start = 0;    // first ratio inside the decision window
    std::string rule;                // human-readable account of the decision inputs
};

/// Per-class test ratios of a value sequence, listed in window order.
///   Lipschitz(a): |v_k| / (1-|z_k|)^a
///   BMO:          |v_k|
///   Gevrey(a):    -(1-|z_k|)^a log|v_k|
///   Sobolev(p,s): partial sums of |v_k|^p (1-|z_k|)^(1-sp)
DecayVerdict decay_verdict(const ZeroSequence& zeros, const ValueSequence& values,
                           const SmoothnessDescriptor& descriptor, const DecisionRule& rule = {});

/// decay_verdict applied to the conjugate sequence of W.
DecayVerdict classify_trace(const ZeroSequence& zeros, const ValueSequence& values,
                            const SmoothnessDescriptor& descriptor, const DecisionRule& rule = {});

/// Ratios |w_k| / log(2 / (1-|z_k|)); membership in l^inf_log.
DecayVerdict log_growth_check(const ZeroSequence& zeros, const ValueSequence& values,
                              const DecisionRule& rule = {});

struct LipschitzLevel {
    double step;   // h = 2 pi 2^-l
    double ratio;  // ||Delta_h^n f||_inf / h^alpha
};

/// Difference ratios for every grid-aligned step, n = floor(alpha) + 1.
std::vector<LipschitzLevel> lipschitz_profile(const BoundaryFunction& f, double alpha);

/// Derivative d^k/dt^k of t -> f(e^{it}) through the multiplier (in)^k.
BoundaryFunction spectral_derivative(const BoundaryFunction& f, int order);

inline constexpr int kGevreyMaxOrder = 20;

/// Lipschitz: sup of lipschitz_profile; BMO: bmo_norm; Gevrey: smallest Q with
/// ||f^(k)|| <= Q^(k+1) (k!)^(1+1/a) for k <= 20; Sobolev: ||g||_p, g^(n) = (in)^s f^(n).
double measure_smoothness(const BoundaryFunction& f, const SmoothnessDescriptor& descriptor);

/// Pairs the smoothness of the mirrored P-(conj(B) f) with the decay verdict of
/// the trace {f(z_k)}.
DiagnosticsReport lemma1_check(const BlaschkeProduct& b, const BoundaryFunction& f,
                               const SmoothnessDescriptor& descriptor, double tol = kDefaultDefectTol);

}  // namespace modelspace

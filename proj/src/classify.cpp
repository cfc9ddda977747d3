#include "modelspace/classify.hpp"

#include "modelspace/interp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace modelspace {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

namespace {

std::vector<std::size_t> depth_decreasing_order(const ZeroSequence& zeros) {
    std::vector<std::size_t> idx(zeros.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return zeros[a].depth() > zeros[b].depth(); });
    return idx;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Largest last/first over runs of at least min_run values in which every step
// satisfies the mode's step test.
double run_growth(const std::vector<double>& w, const DecisionRule& rule) {
    const auto step_ok = [&](std::size_t i) {
        if (!(w[i - 1] > 0.0)) return false;
        return rule.growth_mode == GrowthMode::PerIndex ? w[i] >= rule.growth_factor * w[i - 1] : w[i] > w[i - 1];
    };
    double best = 0.0;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= w.size(); ++i) {
        if (i < w.size() && step_ok(i)) continue;
        const std::size_t len = i - start;
        if (len >= rule.min_run && w[start] > 0.0) best = std::max(best, w[i - 1] / w[start]);
        start = i;
    }
    return best;
}

void apply_growth_rule(DecayVerdict& out, const DecisionRule& rule) {
    const std::vector<double> window(out.per_index_ratios.begin() + static_cast<long>(out.window_start),
                                     out.per_index_ratios.end());
    std::ostringstream text;
    text << "window=[" << out.window_start << "," << out.per_index_ratios.size() << ")";
    const double growth = run_growth(window, rule);
    text << (rule.growth_mode == GrowthMode::PerIndex ? " per_index_run_growth=" : " run_growth=") << growth;
    if (growth >= rule.growth_factor) {
        out.verdict = Verdict::Fails;
        text << " >= " << rule.growth_factor << " -> fails";
        out.rule = text.str();
        return;
    }
    const double mx = *std::max_element(window.begin(), window.end());
    const double med = median(window);
    double spread = 0.0;
    if (mx > 0.0) spread = med > 0.0 ? mx / med : std::numeric_limits<double>::infinity();
    text << " max/median=" << spread;
    if (std::isfinite(mx) && spread <= rule.max_over_median) {
        out.verdict = Verdict::Holds;
        text << " <= " << rule.max_over_median << " -> holds";
    } else {
        out.verdict = Verdict::Inconclusive;
        text << " -> inconclusive";
    }
    out.rule = text.str();
}

DecayVerdict ratio_verdict(const ZeroSequence& zeros, const std::vector<double>& raw_ratios,
                           const SmoothnessDescriptor& descriptor, const DecisionRule& rule,
                           bool partial_sums) {
    DecayVerdict out;
    out.descriptor = descriptor;
    out.order = depth_decreasing_order(zeros);
    out.window_start = zeros.size() / 2;
    double running = 0.0;
    for (auto i : out.order) {
        if (partial_sums) {
            running += raw_ratios[i];
            out.per_index_ratios.push_back(running);
        } else {
            out.per_index_ratios.push_back(raw_ratios[i]);
        }
    }
    if (descriptor.tag == SmoothnessClass::Gevrey) {
        const double c = *std::min_element(out.per_index_ratios.begin() + static_cast<long>(out.window_start),
                                           out.per_index_ratios.end());
        out.fitted_constant = c;
        std::ostringstream text;
        text << "window=[" << out.window_start << "," << out.per_index_ratios.size() << ") min c=" << c;
        if (c >= rule.gevrey_min_constant) {
            out.verdict = Verdict::Holds;
            text << " >= " << rule.gevrey_min_constant << " -> holds";
        } else if (c <= 0.0) {
            out.verdict = Verdict::Fails;
            text << " <= 0 -> fails";
        } else {
            out.verdict = Verdict::Inconclusive;
            text << " -> inconclusive";
        }
        out.rule = text.str();
        return out;
    }
    out.fitted_constant = partial_sums ? out.per_index_ratios.back()
                                       : *std::max_element(out.per_index_ratios.begin(), out.per_index_ratios.end());
    apply_growth_rule(out, rule);
    return out;
}

}  // namespace

DecayVerdict decay_verdict(const ZeroSequence& zeros, const ValueSequence& values,
                           const SmoothnessDescriptor& descriptor, const DecisionRule& rule) {
    require_aligned(zeros, values);
    std::vector<double> ratios(zeros.size());
    for (std::size_t k = 0; k < zeros.size(); ++k) {
        const double depth = zeros[k].depth();
        const double v = std::abs(values[k]);
        switch (descriptor.tag) {
            case SmoothnessClass::Lipschitz: ratios[k] = v / std::pow(depth, descriptor.alpha); break;
            case SmoothnessClass::BMO: ratios[k] = v; break;
            case SmoothnessClass::Gevrey:
                ratios[k] = v == 0.0 ? std::numeric_limits<double>::infinity()
                                     : -std::pow(depth, descriptor.alpha) * std::log(v);
                break;
            case SmoothnessClass::Sobolev:
                ratios[k] = std::pow(v, descriptor.p) * std::pow(depth, 1.0 - descriptor.s * descriptor.p);
                break;
        }
    }
    return ratio_verdict(zeros, ratios, descriptor, rule, descriptor.tag == SmoothnessClass::Sobolev);
}

DecayVerdict classify_trace(const ZeroSequence& zeros, const ValueSequence& values,
                            const SmoothnessDescriptor& descriptor, const DecisionRule& rule) {
    return decay_verdict(zeros, conjugate_sequence(zeros, values), descriptor, rule);
}

DecayVerdict log_growth_check(const ZeroSequence& zeros, const ValueSequence& values, const DecisionRule& rule) {
    require_aligned(zeros, values);
    std::vector<double> ratios(zeros.size());
    for (std::size_t k = 0; k < zeros.size(); ++k) {
        ratios[k] = std::abs(values[k]) / std::log(2.0 / zeros[k].depth());
    }
    // Bounded-ratio test, same rule as the BMO class.
    return ratio_verdict(zeros, ratios, SmoothnessDescriptor::bmo(), rule, false);
}

std::vector<LipschitzLevel> lipschitz_profile(const BoundaryFunction& f, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("lipschitz_profile needs alpha > 0");
    const std::size_t m = f.size();
    const int order = static_cast<int>(std::floor(alpha)) + 1;
    const int levels = static_cast<int>(std::log2(static_cast<double>(m))) - 2;
    std::vector<LipschitzLevel> out;
    for (int l = 1; l <= levels; ++l) {
        const std::size_t shift = m >> l;
        const double h = 2.0 * std::numbers::pi * std::ldexp(1.0, -l);
        std::vector<Complex> diff(f.samples().begin(), f.samples().end());
        for (int k = 0; k < order; ++k) {
            std::vector<Complex> next(m);
            for (std::size_t t = 0; t < m; ++t) next[t] = diff[(t + shift) % m] - diff[t];
            diff.swap(next);
        }
        double sup = 0.0;
        for (const auto& v : diff) sup = std::max(sup, std::abs(v));
        out.push_back({h, sup / std::pow(h, alpha)});
    }
    return out;
}

BoundaryFunction spectral_derivative(const BoundaryFunction& f, int order) {
    std::vector<Complex> spectrum = f.spectrum();
    const long lo = f.grid().min_mode();
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        const long n = lo + static_cast<long>(i);
        spectrum[i] *= std::pow(Complex{0.0, static_cast<double>(n)}, order);
    }
    return BoundaryFunction::from_spectrum(f.grid(), std::move(spectrum));
}

namespace {

double gevrey_constant(const BoundaryFunction& f, double alpha) {
    double best = -std::numeric_limits<double>::infinity();
    for (int k = 0; k <= kGevreyMaxOrder; ++k) {
        const double sup = lp_norm(k == 0 ? f : spectral_derivative(f, k), std::numeric_limits<double>::infinity());
        if (sup == 0.0) continue;
        const double log_q =
            (std::log(sup) - (1.0 + 1.0 / alpha) * std::lgamma(static_cast<double>(k) + 1.0)) /
            static_cast<double>(k + 1);
        best = std::max(best, log_q);
    }
    return std::isinf(best) ? 0.0 : std::exp(best);
}

BoundaryFunction fractional_derivative(const BoundaryFunction& f, double s) {
    std::vector<Complex> spectrum = f.spectrum();
    const long lo = f.grid().min_mode();
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        const long n = lo + static_cast<long>(i);
        if (n == 0) {
            spectrum[i] = 0.0;
            continue;
        }
        // Principal branch: (in)^s = |n|^s exp(i sign(n) pi s / 2)
        const double mag = std::pow(std::abs(static_cast<double>(n)), s);
        const double phase = (n > 0 ? 1.0 : -1.0) * std::numbers::pi * s / 2.0;
        spectrum[i] *= std::polar(mag, phase);
    }
    return BoundaryFunction::from_spectrum(f.grid(), std::move(spectrum));
}

}  // namespace

double measure_smoothness(const BoundaryFunction& f, const SmoothnessDescriptor& descriptor) {
    switch (descriptor.tag) {
        case SmoothnessClass::Lipschitz: {
            double sup = 0.0;
            for (const auto& level : lipschitz_profile(f, descriptor.alpha)) sup = std::max(sup, level.ratio);
            return sup;
        }
        case SmoothnessClass::BMO: return bmo_norm(f);
        case SmoothnessClass::Gevrey: return gevrey_constant(f, descriptor.alpha);
        case SmoothnessClass::Sobolev: return lp_norm(fractional_derivative(f, descriptor.s), descriptor.p);
    }
    return 0.0;
}

DiagnosticsReport lemma1_check(const BlaschkeProduct& b, const BoundaryFunction& f,
                               const SmoothnessDescriptor& descriptor, double tol) {
    const auto theta = blaschke_boundary(b, f.grid());
    const auto coanalytic = riesz_project(theta.conj() * f, RieszSign::Minus);
    const auto mirrored = reflect(coanalytic);
    const auto values = trace(f, b.zeros(), tol);
    const auto verdict = decay_verdict(b.zeros(), values, descriptor);

    DiagnosticsReport report;
    report.scalars["projection_smoothness"] = measure_smoothness(mirrored, descriptor);
    report.scalars["projection_l2"] = lp_norm(coanalytic, 2.0);
    report.scalars["trace_fitted_constant"] = verdict.fitted_constant;
    report.scalars["trace_verdict"] = static_cast<double>(verdict.verdict);
    report.series["trace_ratios"] = verdict.per_index_ratios;
    std::vector<double> moduli;
    for (const auto& v : values.values()) moduli.push_back(std::abs(v));
    report.series["trace_modulus"] = std::move(moduli);
    report.notes.push_back("class " + descriptor.name() + ": trace verdict " + to_string(verdict.verdict) +
                           " (" + verdict.rule + ")");
    report.notes.push_back("finite B: both sides finite; compare across nested truncations");
    return report;
}

}  // namespace modelspace

#pragma once

#include "modelspace/blaschke.hpp"
#include "modelspace/boundary.hpp"
#include "modelspace/core.hpp"

#include <concepts>
#include <optional>
#include <stdexcept>

namespace modelspace {

/// Condition numbers above this are refused by the linear-solve routes.
inline constexpr double kMaxCondition = 1e12;
/// Distance to a node below which the Lagrange kernel uses its limit form.
inline constexpr double kLimitBranchRadius = 1e-9;

class IllConditioned : public std::runtime_error {
public:
    IllConditioned(const std::string& what, double condition)
        : std::runtime_error(what), condition_(condition) {}
    double condition() const { return condition_; }

private:
    double condition_;
};

/// sum_{n >= 0} f^(n) z^n, the Cauchy integral of an H^2 boundary function.
Complex cauchy_eval(const BoundaryFunction& f, DiskPoint z, double tol = kDefaultDefectTol);

/// {f(z_j)} for any callable f.
template <typename F>
    requires std::invocable<F&, Complex>
ValueSequence trace(F&& f, const ZeroSequence& zeros) {
    std::vector<Complex> out;
    out.reserve(zeros.size());
    for (const auto& z : zeros.points()) out.push_back(f(z.value()));
    return ValueSequence(std::move(out));
}

/// Trace of an H^2 boundary function through its Cauchy integral.
ValueSequence trace(const BoundaryFunction& f, const ZeroSequence& zeros, double tol = kDefaultDefectTol);

enum class InterpolantForm { Lagrange, KernelBasis };

/// An element of K^2_B stored either as
///   Lagrange:    sum_j c_j B(z) / (z - z_j),  c_j = w_j / B'(z_j)
///   KernelBasis: sum_j c_j / (1 - conj(z_j) z)
class InterpolantRepresentation {
public:
    InterpolantRepresentation(BlaschkeProduct product, std::vector<Complex> coefficients,
                              InterpolantForm form, double condition_number);

    const ZeroSequence& zeros() const { return product_.zeros(); }
    const BlaschkeProduct& product() const { return product_; }
    const std::vector<Complex>& coefficients() const { return coefficients_; }
    InterpolantForm form() const { return form_; }
    /// 1 for the closed-form Lagrange route.
    double condition_number() const { return condition_; }

    Complex operator()(Complex z) const { return eval(z); }
    Complex eval(Complex z) const;

    BoundaryFunction sample(const BoundaryGrid& grid) const;
    /// Samples the interpolant on the grid and keeps them.
    void attach_samples(const BoundaryGrid& grid) { boundary_samples_ = sample(grid); }
    const std::optional<BoundaryFunction>& boundary_samples() const { return boundary_samples_; }

private:
    BlaschkeProduct product_;
    std::vector<Complex> coefficients_;
    InterpolantForm form_;
    double condition_;
    std::optional<BoundaryFunction> boundary_samples_;
};

/// w~_k = sum_j w_j / (B'(z_j) (1 - z_j conj(z_k)))
ValueSequence conjugate_sequence(const ZeroSequence& zeros, const ValueSequence& values);

struct ConjugateInverse {
    ValueSequence values;
    double condition_number = 1.0;
};

/// Solves conjugate_sequence(Z, W) = W~ for W.
ConjugateInverse invert_conjugate(const ZeroSequence& zeros, const ValueSequence& conjugate);

InterpolantRepresentation lagrange_interpolant(const ZeroSequence& zeros, const ValueSequence& values);
InterpolantRepresentation kernel_interpolant(const ZeroSequence& zeros, const ValueSequence& values);

/// Builds f = lagrange_interpolant(Z, W), g = tilde(B, f) on an M-point grid and
/// reports max_k |conj(g(z_k)) - w~_k| as "max_discrepancy".
DiagnosticsReport residue_identity_check(const ZeroSequence& zeros, const ValueSequence& values,
                                         std::size_t grid_size);

}  // namespace modelspace

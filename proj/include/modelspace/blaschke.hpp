#pragma once

#include "modelspace/core.hpp"

namespace modelspace {

/// (|a|/a) (a - z) / (1 - conj(a) z), with |a|/a := -1 at a = 0 so the factor is z.
Complex blaschke_factor(Complex zero, Complex z);

/// d/dz of blaschke_factor at its own zero: -(|a|/a) / (1 - |a|^2).
Complex blaschke_factor_derivative_at_zero(Complex zero);

struct ProductValue {
    Complex value;
    /// Bound on |B(z) - B_N(z)| from the dropped tail; 0 for exact finite products.
    double error_bound = 0.0;
};

/// Finite Blaschke product with its zero sequence. A nonzero tail_bound marks
/// the product as a truncation of an infinite one.
class BlaschkeProduct {
public:
    explicit BlaschkeProduct(ZeroSequence zeros, double tail_bound = 0.0);

    const ZeroSequence& zeros() const { return zeros_; }
    std::size_t size() const { return zeros_.size(); }
    double tail_bound() const { return tail_bound_; }
    /// Zeros in canonical order (increasing modulus, then argument).
    std::span<const Complex> canonical_zeros() const { return ordered_; }

    Complex operator()(Complex z) const { return eval(z); }
    Complex eval(Complex z) const;
    ProductValue eval_with_bound(Complex z) const;

    /// Product of all factors except the one at index `skip`.
    Complex eval_without(std::size_t skip, Complex z) const;

    /// B'(z_j) from the closed form b_j'(z_j) * prod_{k != j} b_k(z_j).
    Complex derivative_at_zero(std::size_t j) const;

private:
    ZeroSequence zeros_;
    std::vector<Complex> ordered_;  // canonical order, fixes the multiplication order
    std::vector<std::size_t> order_;
    double tail_bound_;
};

/// inf_j |B'(z_j)| (1 - |z_j|)
double interpolation_delta(const BlaschkeProduct& b);

/// sum_j (1 - |z_j|) / |zeta - z_j| for |zeta| = 1.
double frostman_sum(const ZeroSequence& zeros, Complex zeta);

/// Supremum of frostman_sum over the circle: M-point grid scan followed by
/// local refinement around the largest grid peaks.
double frostman_sup(const ZeroSequence& zeros, std::size_t grid_size);

bool sublevel_indicator(const BlaschkeProduct& b, double eps, Complex z);

}  // namespace modelspace

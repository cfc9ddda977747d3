#include "modelspace/interp.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace modelspace {

namespace {

double condition_number(const Eigen::MatrixXcd& a) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    const auto& sv = svd.singularValues();
    const double smallest = sv(sv.size() - 1);
    return smallest == 0.0 ? std::numeric_limits<double>::infinity() : sv(0) / smallest;
}

std::vector<Complex> solve_checked(const Eigen::MatrixXcd& a, std::span<const Complex> rhs,
                                   const char* what, double& condition) {
    condition = condition_number(a);
    if (!(condition <= kMaxCondition)) {
        std::ostringstream msg;
        msg << what << ": condition number " << condition << " exceeds " << kMaxCondition;
        throw IllConditioned(msg.str(), condition);
    }
    Eigen::VectorXcd b(static_cast<Eigen::Index>(rhs.size()));
    for (std::size_t i = 0; i < rhs.size(); ++i) b(static_cast<Eigen::Index>(i)) = rhs[i];
    Eigen::VectorXcd x = a.partialPivLu().solve(b);
    return {x.data(), x.data() + x.size()};
}

// A_{kj} = 1 / (B'(z_j) (1 - z_j conj(z_k)))
Eigen::MatrixXcd conjugate_matrix(const ZeroSequence& zeros, const BlaschkeProduct& b) {
    const auto n = static_cast<Eigen::Index>(zeros.size());
    Eigen::MatrixXcd a(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const Complex zj = zeros[static_cast<std::size_t>(j)].value();
        const Complex dj = b.derivative_at_zero(static_cast<std::size_t>(j));
        for (Eigen::Index k = 0; k < n; ++k) {
            const Complex zk = zeros[static_cast<std::size_t>(k)].value();
            a(k, j) = 1.0 / (dj * (1.0 - zj * std::conj(zk)));
        }
    }
    return a;
}

}  // namespace

Complex cauchy_eval(const BoundaryFunction& f, DiskPoint z, double tol) {
    const double defect = h2_defect(f);
    if (defect > tol) {
        std::ostringstream msg;
        msg << "cauchy_eval: input has H^2 defect " << defect << " > " << tol;
        throw DefectError(msg.str(), defect);
    }
    const auto coeffs = f.analytic_coeffs();
    const Complex x = z.value();
    Complex acc{0.0, 0.0};
    for (std::size_t n = coeffs.size(); n-- > 0;) acc = acc * x + coeffs[n];
    return acc;
}

ValueSequence trace(const BoundaryFunction& f, const ZeroSequence& zeros, double tol) {
    std::vector<Complex> out;
    out.reserve(zeros.size());
    for (const auto& z : zeros.points()) out.push_back(cauchy_eval(f, z, tol));
    return ValueSequence(std::move(out));
}

InterpolantRepresentation::InterpolantRepresentation(BlaschkeProduct product, std::vector<Complex> coefficients,
                                                     InterpolantForm form, double condition_number)
    : product_(std::move(product)), coefficients_(std::move(coefficients)), form_(form),
      condition_(condition_number) {
    if (coefficients_.size() != product_.size()) {
        throw std::invalid_argument("interpolant coefficient count does not match zeros");
    }
}

Complex InterpolantRepresentation::eval(Complex z) const {
    const auto& zs = product_.zeros();
    Complex acc{0.0, 0.0};
    if (form_ == InterpolantForm::KernelBasis) {
        for (std::size_t j = 0; j < zs.size(); ++j) {
            acc += coefficients_[j] / (1.0 - std::conj(zs[j].value()) * z);
        }
        return acc;
    }
    std::size_t near = zs.size();
    for (std::size_t j = 0; j < zs.size(); ++j) {
        if (std::abs(z - zs[j].value()) < kLimitBranchRadius) {
            near = j;
            break;
        }
    }
    if (near == zs.size()) {
        for (std::size_t j = 0; j < zs.size(); ++j) acc += coefficients_[j] / (z - zs[j].value());
        return acc * product_.eval(z);
    }
    // Limit branch: B(z)/(z - z_j) = b_j(z)/(z - z_j) * prod_{k != j} b_k(z), and
    // b_j(z)/(z - z_j) = -(|z_j|/z_j) / (1 - conj(z_j) z) (= 1 when z_j = 0).
    const Complex zj = zs[near].value();
    const Complex local = zj == Complex{0.0, 0.0}
                              ? Complex{1.0, 0.0}
                              : -(std::abs(zj) / zj) / (1.0 - std::conj(zj) * z);
    acc = coefficients_[near] * local * product_.eval_without(near, z);
    const Complex bz = product_.eval(z);
    for (std::size_t j = 0; j < zs.size(); ++j) {
        if (j != near) acc += coefficients_[j] * bz / (z - zs[j].value());
    }
    return acc;
}

BoundaryFunction InterpolantRepresentation::sample(const BoundaryGrid& grid) const {
    std::vector<Complex> s(grid.size());
    const auto n = static_cast<long>(grid.size());
#pragma omp parallel for schedule(static)
    for (long t = 0; t < n; ++t) s[static_cast<std::size_t>(t)] = eval(grid.node(static_cast<std::size_t>(t)));
    return BoundaryFunction::from_samples(grid, std::move(s));
}

ValueSequence conjugate_sequence(const ZeroSequence& zeros, const ValueSequence& values) {
    require_aligned(zeros, values);
    const BlaschkeProduct b(zeros);
    const std::size_t n = zeros.size();
    std::vector<Complex> weights(n);
    for (std::size_t j = 0; j < n; ++j) weights[j] = values[j] / b.derivative_at_zero(j);
    std::vector<Complex> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex zk = std::conj(zeros[k].value());
        Complex acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) acc += weights[j] / (1.0 - zeros[j].value() * zk);
        out[k] = acc;
    }
    return ValueSequence(std::move(out));
}

ConjugateInverse invert_conjugate(const ZeroSequence& zeros, const ValueSequence& conjugate) {
    require_aligned(zeros, conjugate);
    const BlaschkeProduct b(zeros);
    ConjugateInverse out;
    out.values = ValueSequence(
        solve_checked(conjugate_matrix(zeros, b), conjugate.values(), "invert_conjugate", out.condition_number));
    return out;
}

InterpolantRepresentation lagrange_interpolant(const ZeroSequence& zeros, const ValueSequence& values) {
    require_aligned(zeros, values);
    BlaschkeProduct b(zeros);
    std::vector<Complex> coeffs(zeros.size());
    for (std::size_t j = 0; j < zeros.size(); ++j) coeffs[j] = values[j] / b.derivative_at_zero(j);
    return InterpolantRepresentation(std::move(b), std::move(coeffs), InterpolantForm::Lagrange, 1.0);
}

InterpolantRepresentation kernel_interpolant(const ZeroSequence& zeros, const ValueSequence& values) {
    require_aligned(zeros, values);
    const auto n = static_cast<Eigen::Index>(zeros.size());
    Eigen::MatrixXcd gram(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index j = 0; j < n; ++j) {
            gram(k, j) = 1.0 / (1.0 - std::conj(zeros[static_cast<std::size_t>(j)].value()) *
                                          zeros[static_cast<std::size_t>(k)].value());
        }
    }
    double cond = 0.0;
    auto coeffs = solve_checked(gram, values.values(), "kernel_interpolant", cond);
    return InterpolantRepresentation(BlaschkeProduct(zeros), std::move(coeffs), InterpolantForm::KernelBasis, cond);
}

DiagnosticsReport residue_identity_check(const ZeroSequence& zeros, const ValueSequence& values,
                                         std::size_t grid_size) {
    const BoundaryGrid grid(grid_size);
    const auto f = lagrange_interpolant(zeros, values);
    const auto theta = blaschke_boundary(f.product(), grid);
    const auto fs = f.sample(grid);
    const auto g = tilde(theta, fs);
    const auto conj_seq = conjugate_sequence(zeros, values);

    DiagnosticsReport report;
    std::vector<double> discrepancy;
    double worst = 0.0;
    for (std::size_t k = 0; k < zeros.size(); ++k) {
        // g's defect is reported rather than enforced: aliasing of B on the grid
        // is what the check measures.
        const Complex gk = cauchy_eval(g, zeros[k], 1.0);
        const double d = std::abs(std::conj(gk) - conj_seq[k]);
        discrepancy.push_back(d);
        worst = std::max(worst, d);
    }
    report.scalars["max_discrepancy"] = worst;
    report.scalars["grid_size"] = static_cast<double>(grid_size);
    report.scalars["interpolant_model_defect"] = model_defect(theta, fs);
    report.scalars["tilde_h2_defect"] = h2_defect(g);
    report.series["discrepancy"] = std::move(discrepancy);
    return report;
}

}  // namespace modelspace

#pragma once

#include "modelspace/blaschke.hpp"
#include "modelspace/core.hpp"

#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace modelspace {

/// Relative negative-mode energy above which a function is not treated as H^2.
inline constexpr double kDefaultDefectTol = 1e-8;
/// Allowed deviation of |theta| from 1 on the grid nodes.
inline constexpr double kUnimodularTol = 1e-8;

/// Thrown when an operation that needs H^2 input receives too much
/// negative-mode energy.
class DefectError : public std::domain_error {
public:
    DefectError(const std::string& what, double defect)
        : std::domain_error(what), defect_(defect) {}
    double defect() const { return defect_; }

private:
    double defect_;
};

/// Uniform grid zeta_t = exp(2 pi i (t + offset) / M) with M = 2^m, m >= 4.
/// offset is 0 for the standard grid or 1/2 for the half-node rotation.
class BoundaryGrid {
public:
    explicit BoundaryGrid(std::size_t size, double offset = 0.0);
    static BoundaryGrid from_log2(int log2_size, double offset = 0.0);

    std::size_t size() const { return size_; }
    double offset() const { return offset_; }
    Complex node(std::size_t t) const { return (*nodes_)[t]; }
    std::span<const Complex> nodes() const { return *nodes_; }
    /// Angle of node t in [0, 2 pi).
    double angle(std::size_t t) const;

    /// Lowest and one-past-highest representable Fourier mode.
    long min_mode() const { return -static_cast<long>(size_ / 2); }
    long max_mode() const { return static_cast<long>(size_ / 2); }

    bool operator==(const BoundaryGrid& other) const {
        return size_ == other.size_ && offset_ == other.offset_;
    }

private:
    std::size_t size_;
    double offset_;
    std::shared_ptr<const std::vector<Complex>> nodes_;
};

/// Samples on a BoundaryGrid together with their Fourier coefficients
/// f^(n) = int conj(zeta)^n f dm, n in [-M/2, M/2). Immutable.
class BoundaryFunction {
public:
    static BoundaryFunction from_samples(BoundaryGrid grid, std::vector<Complex> samples);
    /// Coefficients for modes first_mode, first_mode + 1, ...; all others zero.
    static BoundaryFunction from_modes(BoundaryGrid grid, std::span<const Complex> coeffs, long first_mode);
    /// Full spectrum in mode order -M/2 .. M/2-1.
    static BoundaryFunction from_spectrum(BoundaryGrid grid, std::vector<Complex> spectrum);
    static BoundaryFunction constant(BoundaryGrid grid, Complex c);
    /// Samples of an arbitrary callable on the grid nodes.
    template <typename F>
    static BoundaryFunction sample(const BoundaryGrid& grid, F&& f) {
        std::vector<Complex> s(grid.size());
        for (std::size_t t = 0; t < grid.size(); ++t) s[t] = f(grid.node(t));
        return from_samples(grid, std::move(s));
    }

    const BoundaryGrid& grid() const { return grid_; }
    std::size_t size() const { return samples_.size(); }
    std::span<const Complex> samples() const { return samples_; }
    Complex operator[](std::size_t t) const { return samples_[t]; }

    /// Fourier coefficient of mode n; zero outside the representable band.
    Complex coeff(long n) const;
    /// Spectrum in mode order -M/2 .. M/2-1.
    const std::vector<Complex>& spectrum() const { return spectrum_; }
    /// Coefficients of modes 0 .. M/2-1.
    std::span<const Complex> analytic_coeffs() const;

    BoundaryFunction conj() const;
    BoundaryFunction operator*(const BoundaryFunction& other) const;
    BoundaryFunction operator+(const BoundaryFunction& other) const;
    BoundaryFunction operator-(const BoundaryFunction& other) const;
    BoundaryFunction operator*(Complex scale) const;

private:
    BoundaryFunction(BoundaryGrid grid, std::vector<Complex> samples, std::vector<Complex> spectrum);
    void require_same_grid(const BoundaryFunction& other) const;

    BoundaryGrid grid_;
    std::vector<Complex> samples_;
    std::vector<Complex> spectrum_;
};

/// Spectrum (mode order) of samples on the grid, via FFT.
std::vector<Complex> fourier(const BoundaryGrid& grid, std::span<const Complex> samples);
/// Samples from a spectrum given in mode order.
std::vector<Complex> synthesize(const BoundaryGrid& grid, std::span<const Complex> spectrum);

enum class RieszSign { Plus, Minus };

/// P+ keeps modes n >= 0, P- keeps modes n <= -1.
BoundaryFunction riesz_project(const BoundaryFunction& f, RieszSign sign);

/// (f - f(0)) / z
BoundaryFunction backward_shift(const BoundaryFunction& f, double tol = kDefaultDefectTol);

/// zeta -> conj(zeta) conj(f) theta
BoundaryFunction tilde(const BoundaryFunction& theta, const BoundaryFunction& f);

/// theta P-(conj(theta) f), the orthogonal projection of H^2 onto K^2_theta.
BoundaryFunction model_project(const BoundaryFunction& theta, const BoundaryFunction& f,
                               double tol = kDefaultDefectTol);

/// P+(conj(psi) f)
BoundaryFunction toeplitz_coanalytic(const BoundaryFunction& psi, const BoundaryFunction& f);

/// (1/M sum |f|^p)^(1/p); max |f| for p = inf.
double lp_norm(const BoundaryFunction& f, double p);

/// |mean| + max over dyadic-length arcs (all offsets) of the mean oscillation.
double bmo_norm(const BoundaryFunction& f);

/// Discrete inner product (1/M) sum f conj(g).
Complex inner_product(const BoundaryFunction& f, const BoundaryFunction& g);

/// Fraction of the energy carried by negative modes.
double h2_defect(const BoundaryFunction& f);
/// max(h2_defect(f), h2_defect(tilde(theta, f)))
double model_defect(const BoundaryFunction& theta, const BoundaryFunction& f);

enum class MemberSpace { H2, ModelSpace };
double membership_defect(const BoundaryFunction* theta, const BoundaryFunction& f, MemberSpace space);

/// Mirror zeta -> conj(zeta): coefficients of mode n move to mode -n.
BoundaryFunction reflect(const BoundaryFunction& f);

/// Boundary samples of a Blaschke product.
BoundaryFunction blaschke_boundary(const BlaschkeProduct& b, const BoundaryGrid& grid);

/// max_t ||theta(zeta_t)| - 1|
double unimodularity_error(const BoundaryFunction& theta);

}  // namespace modelspace

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>

#include "pntsi/errors.hpp"

namespace pntsi {

struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 0.0;
    int max_depth = 24;

    void validate() const {
        if (!(abs_tol > 0)) throw std::domain_error("QuadratureConfig: abs_tol must be > 0");
        if (!(rel_tol >= 0)) throw std::domain_error("QuadratureConfig: rel_tol must be >= 0");
        if (max_depth < 1) throw std::domain_error("QuadratureConfig: max_depth must be >= 1");
    }
};

struct IntegrationResult {
    std::complex<double> value{};
    double error = 0.0;   ///< accumulated error estimate (absolute)
    bool converged = true;
};

/// Gamma(m+1) / Gamma(m+3/2), m > 1. Evaluated through log-gamma with the
/// exponents subtracted before exponentiation.
double gamma_ratio(double m);

namespace detail {
/// One Gauss(7)/Kronrod(15) panel on [a,b]: Kronrod estimate plus the
/// |K - G| error heuristic. Defined in numerics.cpp on top of Boost.Math.
void gk15_panel(const std::function<std::complex<double>(double)>& f, double a, double b,
                std::complex<double>& value, double& error);
}  // namespace detail

/// Adaptive Gauss-Kronrod integration of a complex-valued f over [a,b].
/// Bisection continues until each panel's error estimate fits its share of
/// the tolerance budget or max_depth is reached; `converged` reports whether
/// the final accumulated estimate met max(abs_tol, rel_tol*|value|).
IntegrationResult integrate(const std::function<std::complex<double>(double)>& f, double a,
                            double b, const QuadratureConfig& cfg);

/// integrate() that throws quadrature_error instead of reporting failure.
IntegrationResult integrate_or_throw(const std::function<std::complex<double>(double)>& f,
                                     double a, double b, const QuadratureConfig& cfg);

/// Neumaier-compensated accumulator; error stays O(eps * sum |x|)
/// independent of the number of terms at first order.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double compensated_sum(std::span<const double> xs);

}  // namespace pntsi

#include "pntsi/numerics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <functional>
#include <stack>

namespace pntsi {

double gamma_ratio(double m) {
    if (!(m > 1.0)) throw std::domain_error("gamma_ratio: requires m > 1");
    return std::exp(std::lgamma(m + 1.0) - std::lgamma(m + 1.5));
}

namespace detail {

void gk15_panel(const std::function<std::complex<double>(double)>& f, double a, double b,
                std::complex<double>& value, double& error) {
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    // max_depth = 0 turns the adaptive entry point into a single panel.
    value = GK::integrate(f, a, b, 0, 0.0, &error, nullptr);
}

}  // namespace detail

IntegrationResult integrate(const std::function<std::complex<double>(double)>& f, double a,
                            double b, const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(a < b)) throw std::domain_error("integrate: requires a < b");

    struct Panel {
        double a, b, tol;
        int depth;
    };

    std::complex<double> first;
    double first_err;
    detail::gk15_panel(f, a, b, first, first_err);
    double budget = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(first));

    IntegrationResult out;
    CompensatedSum re, im, err;
    std::stack<Panel> work;
    work.push({a, b, budget, 0});
    // depth already caps the recursion; the panel budget guards against
    // pathological integrands exhausting memory first
    std::size_t panels_left = std::size_t{1} << 18;

    while (!work.empty()) {
        Panel p = work.top();
        work.pop();
        std::complex<double> v;
        double e;
        detail::gk15_panel(f, p.a, p.b, v, e);
        if (e <= p.tol || p.depth >= cfg.max_depth || panels_left == 0) {
            re.add(v.real());
            im.add(v.imag());
            err.add(e);
            if (panels_left > 0) --panels_left;
            continue;
        }
        const double mid = 0.5 * (p.a + p.b);
        work.push({p.a, mid, 0.5 * p.tol, p.depth + 1});
        work.push({mid, p.b, 0.5 * p.tol, p.depth + 1});
        --panels_left;
    }

    out.value = {re.value(), im.value()};
    out.error = err.value();
    out.converged = out.error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value));
    return out;
}

IntegrationResult integrate_or_throw(const std::function<std::complex<double>(double)>& f,
                                     double a, double b, const QuadratureConfig& cfg) {
    IntegrationResult r = integrate(f, a, b, cfg);
    if (!r.converged)
        throw quadrature_error("quadrature did not converge: error estimate " +
                               std::to_string(r.error) + " over [" + std::to_string(a) + ", " +
                               std::to_string(b) + "]");
    return r;
}

double compensated_sum(std::span<const double> xs) {
    CompensatedSum acc;
    for (double x : xs) acc.add(x);
    return acc.value();
}

}  // namespace pntsi

#include "pntsi/weights.hpp"

#include <cmath>

namespace pntsi {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

double w_hat(const WeightShape& shape, double t) {
    if (!(t >= 0.0 && t <= 2.0)) throw std::domain_error("w_hat: t outside [0, 2]");
    if (t == 0.0 || t == 2.0) return 0.0;
    return std::pow(t, shape.m) * std::pow(2.0 - t, shape.m);
}

double w_hat_d1(const WeightShape& shape, double t) {
    if (!(t >= 0.0 && t <= 2.0)) throw std::domain_error("w_hat_d1: t outside [0, 2]");
    const double m = shape.m;
    // m t^{m-1} (2-t)^{m-1} (2-2t)
    return m * std::pow(t, m - 1.0) * std::pow(2.0 - t, m - 1.0) * (2.0 - 2.0 * t);
}

double w_hat_d2(const WeightShape& shape, double t) {
    if (!(t >= 0.0 && t <= 2.0)) throw std::domain_error("w_hat_d2: t outside [0, 2]");
    const double m = shape.m;
    // 2m t^{m-2} (2-t)^{m-2} [2(m-1)(1-t)^2 - t(2-t)]; the bracket changes
    // sign at t = 1 - 1/sqrt(2m-1), the extremum behind phi_bound(j=2)
    const double bracket = 2.0 * (m - 1.0) * (1.0 - t) * (1.0 - t) - t * (2.0 - t);
    return 2.0 * m * std::pow(t, m - 2.0) * std::pow(2.0 - t, m - 2.0) * bracket;
}

double w_pm(const WindowParams& params, const WeightShape& shape, double t) {
    if (!(t >= 0.0)) throw std::domain_error("w_pm: t must be >= 0");
    const double d0 = params.delta0();
    const double a = params.alpha();
    const double b = params.beta();
    if (t > a - d0 && t < a) return w_hat(shape, (t - a + d0) / d0);
    if (t >= a && t <= b) return 1.0;
    if (t > b && t < b + d0) return w_hat(shape, (t - b + d0) / d0);
    return 0.0;
}

IntegrationResult mellin_W(const WindowParams& params, const WeightShape& shape,
                           std::complex<double> s, const QuadratureConfig& cfg) {
    if (!(s.real() > 0.0)) throw std::domain_error("mellin_W: requires Re(s) > 0");
    const double d0 = params.delta0();
    const double a = params.alpha();
    const double b = params.beta();
    const std::complex<double> sm1 = s - 1.0;

    auto integrand = [&](double y) -> std::complex<double> {
        return std::exp(sm1 * std::log(y)) * w_pm(params, shape, y);
    };

    IntegrationResult total;
    const double seams[4] = {a - d0, a, b, b + d0};
    for (int i = 0; i < 3; ++i) {
        if (!(seams[i] < seams[i + 1])) continue;  // plateau may be empty (delta = h/2)
        IntegrationResult part = integrate(integrand, seams[i], seams[i + 1], cfg);
        total.value += part.value;
        total.error += part.error;
        total.converged = total.converged && part.converged;
    }
    return total;
}

double closed_W1(const WindowParams& params, const WeightShape& shape) {
    const double g = gamma_ratio(shape.m) * std::sqrt(kPi);
    if (params.sign == Sign::plus) return params.h0() + g * params.delta0();
    return params.h0() - (2.0 - g) * params.delta0();
}

double phi_bound(const WeightShape& shape, double h0, double delta0, int j) {
    if (!(delta0 >= 0.0 && delta0 < 1.0))
        throw std::domain_error("phi_bound: requires 0 <= delta0 < 1");
    const double m = shape.m;
    switch (j) {
        case 0: {
            if (!(delta0 > 0.0)) throw std::domain_error("phi_bound: j=0 requires delta0 > 0");
            return h0 / delta0 + 2.0 * gamma_ratio(m) * std::sqrt(kPi / (1.0 - delta0));
        }
        case 1:
            return 2.0 * std::sqrt(1.0 + h0 + delta0);
        case 2: {
            const double c = 1.0 / std::sqrt(2.0 * m - 1.0);
            return 8.0 * m * std::pow(1.0 + h0 + delta0, 1.5) / std::sqrt(2.0 * m - 1.0) *
                   std::pow((1.0 - c) * (1.0 + c), m - 1.0);
        }
        default:
            throw std::domain_error("phi_bound: j must be 0, 1 or 2");
    }
}

double phi_bound0_sqrt_m(const WeightShape& shape, double h0, double delta0) {
    if (!(delta0 > 0.0 && delta0 < 1.0))
        throw std::domain_error("phi_bound0_sqrt_m: requires 0 < delta0 < 1");
    return h0 / delta0 + 2.0 * std::sqrt(kPi / (shape.m * (1.0 - delta0)));
}

double trivial_zero_bound(double delta0, int ell) {
    if (!(delta0 >= 0.0 && delta0 < 1.0))
        throw std::domain_error("trivial_zero_bound: requires 0 <= delta0 < 1");
    if (ell < 1) throw std::domain_error("trivial_zero_bound: requires ell >= 1");
    return std::pow(1.0 - delta0, -2.0 * ell) / static_cast<double>(ell);
}

double trivial_tail(double x, double delta) {
    if (!(x - delta > 1.0)) throw std::domain_error("trivial_tail: requires x - delta > 1");
    return 1.0 / ((x - delta) * (x - delta));
}

}  // namespace pntsi

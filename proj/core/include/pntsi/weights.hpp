#pragma once

#include <complex>

#include "pntsi/numerics.hpp"

namespace pntsi {

/// Exponent of the bump profile t^m (2-t)^m on [0,2]. m > 1 keeps the
/// profile twice differentiable with vanishing derivatives at 0 and 2,
/// and keeps the interior extremum used by phi_bound(j=2) well defined.
struct WeightShape {
    double m;

    explicit WeightShape(double m_) : m(m_) {
        if (!(m > 1.0)) throw std::domain_error("WeightShape: requires m > 1");
    }
};

enum class Sign { plus, minus };

/// Geometry of one smoothed window: the interval (x, x+h] with ramps of
/// width delta on each side. The plus window majorizes the interval
/// indicator, the minus window minorizes it.
struct WindowParams {
    double x;
    double h;
    double delta;
    Sign sign;

    WindowParams(double x_, double h_, double delta_, Sign sign_)
        : x(x_), h(h_), delta(delta_), sign(sign_) {
        if (!(x > 0)) throw std::domain_error("WindowParams: requires x > 0");
        if (!(h > 0)) throw std::domain_error("WindowParams: requires h > 0");
        if (!(delta > 0 && delta <= h / 2))
            throw std::domain_error("WindowParams: requires 0 < delta <= h/2");
        if (!(delta / x < 1)) throw std::domain_error("WindowParams: requires delta/x < 1");
    }

    double h0() const { return h / x; }
    double delta0() const { return delta / x; }
    double alpha() const { return sign == Sign::plus ? 1.0 : 1.0 + delta0(); }
    double beta() const { return sign == Sign::plus ? 1.0 + h0() : 1.0 + h0() - delta0(); }
};

/// Bump profile t^m (2-t)^m and its first two derivatives. Domain [0,2].
double w_hat(const WeightShape& shape, double t);
double w_hat_d1(const WeightShape& shape, double t);
double w_hat_d2(const WeightShape& shape, double t);

/// Windowed weight: 0 / rising bump / 1 / falling bump / 0. Defined for all
/// t >= 0 (zero outside the support).
double w_pm(const WindowParams& params, const WeightShape& shape, double t);

/// Mellin transform W(s) = integral of y^{s-1} w(y) dy over the support,
/// by quadrature split at the two ramp seams. Requires Re(s) > 0.
IntegrationResult mellin_W(const WindowParams& params, const WeightShape& shape,
                           std::complex<double> s, const QuadratureConfig& cfg);

/// Closed form of W(1): h0 + G*sqrt(pi)*delta0 for the plus window and
/// h0 - (2 - G*sqrt(pi))*delta0 for the minus window, G = gamma_ratio(m).
double closed_W1(const WindowParams& params, const WeightShape& shape);

/// Envelope factors for |W(rho)| <= delta0^{1-j} * phi_bound(j) / |rho|^j,
/// j in {0,1,2}. For j = 0 the h/delta entry is taken as h0/delta0.
double phi_bound(const WeightShape& shape, double h0, double delta0, int j);

/// Variant of phi_bound(j=0) with the gamma ratio relaxed to 1/sqrt(m);
/// this is the form the psi2/psi3 assemblies use.
double phi_bound0_sqrt_m(const WeightShape& shape, double h0, double delta0);

/// Bound on |W(-2l)| for the trivial zeros: (1-delta0)^{-2l} / l.
double trivial_zero_bound(double delta0, int ell);

/// Bound on the full trivial-zero series sum_k x^{-2k} |W(-2k)|:
/// 1/(x-delta)^2, requires x > delta + 1.
double trivial_tail(double x, double delta);

}  // namespace pntsi

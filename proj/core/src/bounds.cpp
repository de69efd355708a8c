#include "pntsi/bounds.hpp"

#include <cmath>

namespace pntsi {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

void require(bool ok, const char* constraint) {
    if (!ok) throw window_error(constraint);
}
}  // namespace

void BoundParams::validate(bool needs_x) const {
    require(m > 1.0, "m > 1");
    require(kappa1 >= 1.0 && kappa1 <= kappa2, "1 <= kappa1 <= kappa2");
    require(kappa1 <= 3.0, "kappa1 <= 3");
    require(kappa3 >= 2.0, "kappa3 >= 2");
    if (needs_x) {
        require(eps > 0.0 && eps < 0.4, "0 < eps < 0.4");
        require(x0 >= theorem_x_min, "x >= 4e18");
        require(kappa3 < std::log(x0), "kappa3 < log x");
    }
}

double w1_deviation_factor(double m) {
    const double g = gamma_ratio(m) * std::sqrt(kPi);
    return std::max(2.0 - g, g);
}

double phi2_core(double m) {
    const double c2 = 1.0 / (2.0 * m - 1.0);
    return 8.0 * m / std::sqrt(2.0 * m - 1.0) * std::pow(1.0 - c2, m - 1.0);
}

// ---------------------------------------------------------------------------

Psi1Breakdown psi1_terms(double x, double delta, double h, double m, double eps, double kappa1,
                         double kappa2) {
    BoundParams p{x, eps, m, kappa1, kappa2, /*kappa3=*/2.0};
    p.validate();
    require(delta > 0.0 && delta <= h / 2.0, "0 < delta <= h/2");
    require(kappa1 * x / h >= 1.0, "kappa1 * x / h >= 1");
    const double sqlx = std::sqrt(x) * std::log(x);
    require(h >= sqlx, "h >= sqrt(x) log(x)");
    require(h <= std::pow(x, 1.0 - eps), "h <= x^(1-eps)");

    const double lx = std::log(x);
    const double h0 = h / x;
    const double d0 = delta / x;
    Psi1Breakdown b;
    b.w1_and_trivial =
        (delta * w1_deviation_factor(m) + 1.0 / ((x - delta) * (x - delta))) / sqlx;
    b.low_range = (kappa1 / kPi) * (0.5 + std::log(kappa1) / lx) *
                  (1.0 + (2.0 * delta / h) * gamma_ratio(m) * std::sqrt(kPi / (1.0 - d0)));
    b.mid_range = std::sqrt(1.0 + 1.5 * h0) *
                  (std::log(kappa2 / kappa1) / kPi +
                   4.0 * e_pair(kappa1 * x / h, kappa2 * x / delta) / lx);
    b.high_range = std::pow(1.0 + 1.5 * h0, 1.5) * phi2_core(m) / (kappa2 * kPi);
    return b;
}

double psi1(double x, double delta, double h, double m, double eps, double kappa1,
            double kappa2) {
    return psi1_terms(x, delta, h, m, eps, kappa1, kappa2).total();
}

Psi2Breakdown psi2_terms(const BoundParams& p) {
    p.validate();
    const double x = p.x0;
    const double lx = std::log(x);
    const double d0 = lx / (p.kappa3 * std::sqrt(x));  // delta0 once delta = sqrt(x) log(x)/kappa3
    const double xe = std::pow(x, -p.eps);
    const double g = gamma_ratio(p.m);

    Psi2Breakdown b;
    b.w1_deviation = w1_deviation_factor(p.m) / p.kappa3;
    b.trivial_zeros = std::pow(x, -2.5) / ((1.0 - d0) * (1.0 - d0));
    b.log_kappa3 = std::log(p.kappa3) / kPi;
    b.low_range = (p.kappa1 / kPi) * (0.5 + std::log(p.kappa1) / lx) *
                  (1.0 + (2.0 / p.kappa3) * g * std::sqrt(kPi / (1.0 - d0)));
    const double t_low = p.kappa1 * std::sqrt(x) / lx;
    const double t_high = p.kappa2 * p.kappa3 * std::sqrt(x) / lx;
    b.mid_range = std::sqrt(1.0 + 1.5 * xe) *
                  (std::log(p.kappa2 / p.kappa1) / kPi + 4.0 * e_pair(t_low, t_high) / lx);
    b.high_range = std::pow(1.0 + 1.5 * xe, 1.5) * phi2_core(p.m) / (p.kappa2 * kPi);
    b.range_widening = (std::sqrt(1.0 + 1.5 * xe) - 1.0) / kPi *
                       std::log(p.kappa3 * std::pow(x, 0.5 - p.eps) / lx);
    return b;
}

double psi2(const BoundParams& p) { return psi2_terms(p).total(); }

double psi2_limit(double m, double kappa1, double kappa2, double kappa3) {
    BoundParams p{/*x0=*/theorem_x_min, /*eps=*/0.25, m, kappa1, kappa2, kappa3};
    p.validate(/*needs_x=*/false);
    const double g = gamma_ratio(m);
    return w1_deviation_factor(m) / kappa3 +
           (kappa1 / (2.0 * kPi)) * (1.0 + (2.0 / kappa3) * g * std::sqrt(kPi)) +
           std::log(kappa3) / kPi + std::log(kappa2 / kappa1) / kPi +
           phi2_core(m) / (kappa2 * kPi);
}

Psi3Breakdown psi3_terms(double x, double m, double kappa1, double kappa2, double kappa3) {
    BoundParams p{x, /*eps=*/0.25, m, kappa1, kappa2, kappa3};
    p.validate();
    const double lx = std::log(x);
    const double d0 = lx / (kappa3 * std::sqrt(x));
    const double g = gamma_ratio(m);
    const double xq = std::pow(x, -0.25);

    Psi3Breakdown b;
    b.w1_deviation = w1_deviation_factor(m) / kappa3;
    b.trivial_zeros = std::pow(x, -2.5) / ((1.0 - d0) * (1.0 - d0));
    b.log_kappa3 = std::sqrt(2.0) * std::log(kappa3) / kPi;
    b.low_range = (kappa1 / kPi) * (0.5 + std::log(kappa1) / lx) *
                  (1.0 + (2.0 / kappa3) * g * std::sqrt(2.0 * kPi));
    const double t_low = kappa1 * std::sqrt(x) / lx;
    const double t_high = kappa2 * kappa3 * std::sqrt(x) / lx;
    b.mid_range = std::sqrt(2.5) *
                  (std::log(kappa2 / kappa1) / kPi + 4.0 * e_pair(t_low, t_high) / lx);
    b.high_range = std::pow(2.5, 1.5) * phi2_core(m) / (kappa2 * kPi);
    b.range_widening =
        (std::sqrt(1.0 + xq + d0) - std::sqrt(1.0 + xq)) / kPi * std::log(kappa3 * std::sqrt(x) / lx);
    return b;
}

double psi3(double x, double m, double kappa1, double kappa2, double kappa3) {
    return psi3_terms(x, m, kappa1, kappa2, kappa3).total();
}

// ---------------------------------------------------------------------------

namespace {

double log_ratio(double x, double h) { return std::log(h / (std::sqrt(x) * std::log(x))); }

double narrow_bound(double x, double h, double constant) {
    return (log_ratio(x, h) / kPi + constant) * std::sqrt(x) * std::log(x);
}

double broad_bound(double x, double h, double constant) {
    return (std::sqrt(2.0) / kPi * log_ratio(x, h) + constant) * std::sqrt(x) * std::log(x);
}

}  // namespace

void check_window(BoundVariant variant, double x, double h) {
    const double lx = std::log(x);
    const double sqlx = std::sqrt(x) * lx;
    if (variant == BoundVariant::chd)
        require(lx >= 40.0, "log(x) >= 40");
    else
        require(x >= theorem_x_min, "x >= 4e18");
    switch (variant) {
        case BoundVariant::psi:
        case BoundVariant::theta:
        case BoundVariant::chd:
            require(h >= sqlx, "h >= sqrt(x) log(x)");
            require(h <= std::pow(x, 0.75), "h <= x^(3/4)");
            break;
        case BoundVariant::pi:
            require(h >= std::sqrt(x) * lx * lx, "h >= sqrt(x) log(x)^2");
            require(h <= std::pow(x, 0.75), "h <= x^(3/4)");
            break;
        case BoundVariant::psi_broad:
        case BoundVariant::theta_broad:
            require(h >= sqlx, "h >= sqrt(x) log(x)");
            require(h < x, "h < x");
            break;
        case BoundVariant::pi_broad:
            require(h >= std::sqrt(x) * lx * lx, "h >= sqrt(x) log(x)^2");
            require(h < x, "h < x");
            break;
    }
}

double interval_bound(BoundVariant variant, double x, double h) {
    check_window(variant, x, h);
    const double lx = std::log(x);
    switch (variant) {
        case BoundVariant::psi:
        case BoundVariant::theta:
            return narrow_bound(x, h, 1.831);
        case BoundVariant::pi:
            return (log_ratio(x, h) / kPi + 3.855) * h / (lx * lx);
        case BoundVariant::psi_broad:
        case BoundVariant::theta_broad:
            return broad_bound(x, h, 3.036);
        case BoundVariant::pi_broad:
            return (std::sqrt(2.0) / kPi * log_ratio(x, h) + 6.072) * h / (lx * lx);
        case BoundVariant::chd:
            return narrow_bound(x, h, 2.167);
    }
    throw std::logic_error("interval_bound: unreachable");
}

double psi_interval_bound(double x, double h) { return interval_bound(BoundVariant::psi, x, h); }
double theta_interval_bound(double x, double h) {
    return interval_bound(BoundVariant::theta, x, h);
}
double pi_interval_bound(double x, double h) { return interval_bound(BoundVariant::pi, x, h); }
double broad_psi_bound(double x, double h) {
    return interval_bound(BoundVariant::psi_broad, x, h);
}
double broad_theta_bound(double x, double h) {
    return interval_bound(BoundVariant::theta_broad, x, h);
}
double broad_pi_bound(double x, double h) { return interval_bound(BoundVariant::pi_broad, x, h); }
double chd_reference_bound(double x, double h) {
    return interval_bound(BoundVariant::chd, x, h);
}

ThetaPsiGap theta_psi_gap(double x) {
    require(std::log(x) >= 40.0, "log(x) >= 40");
    const double sx = std::sqrt(x);
    const double cx = std::cbrt(x);
    const double alpha1 = 1.0 + 1.93378e-8;
    const double alpha2 = 1.04320;
    return {0.999 * sx + cx, alpha1 * sx + alpha2 * cx};
}

double rosser_theta_multiplier() { return 1.01168; }

const char* to_string(BoundVariant v) {
    switch (v) {
        case BoundVariant::psi: return "psi";
        case BoundVariant::theta: return "theta";
        case BoundVariant::pi: return "pi";
        case BoundVariant::psi_broad: return "psi-broad";
        case BoundVariant::theta_broad: return "theta-broad";
        case BoundVariant::pi_broad: return "pi-broad";
        case BoundVariant::chd: return "chd";
    }
    return "?";
}

BoundVariant bound_variant_from_string(const std::string& s) {
    if (s == "psi") return BoundVariant::psi;
    if (s == "theta") return BoundVariant::theta;
    if (s == "pi") return BoundVariant::pi;
    if (s == "psi-broad") return BoundVariant::psi_broad;
    if (s == "theta-broad") return BoundVariant::theta_broad;
    if (s == "pi-broad") return BoundVariant::pi_broad;
    if (s == "chd") return BoundVariant::chd;
    throw std::invalid_argument("unknown bound variant: " + s);
}

}  // namespace pntsi

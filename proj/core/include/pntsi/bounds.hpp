#pragma once

#include <array>
#include <map>
#include <string>

#include "pntsi/weights.hpp"
#include "pntsi/zeros.hpp"

namespace pntsi {

/// Free parameters of the error-constant assemblies. kappa1/kappa2 split
/// the zero ordinates into three ranges, kappa3 fixes the smoothing width
/// via delta = sqrt(x) log(x) / kappa3, m is the weight exponent.
struct BoundParams {
    double x0 = 4e18;
    double eps = 0.25;
    double m = 2.36856;
    double kappa1 = 1.29329;
    double kappa2 = 6.48028;
    double kappa3 = 4.32346;

    /// Throws window_error naming the violated constraint. `needs_x` selects
    /// whether the x0-dependent constraints apply (they do not for the
    /// x -> infinity limit evaluator).
    void validate(bool needs_x = true) const;
};

constexpr double theorem_x_min = 4e18;

/// max{2 - G sqrt(pi), G sqrt(pi)} with G = gamma_ratio(m); the closed-form
/// |x W(1) - h| <= max{...} * delta factor.
double w1_deviation_factor(double m);

/// 8m/sqrt(2m-1) * (1 - 1/(2m-1))^(m-1): phi_bound(j=2) stripped of its
/// (1 + h0 + delta0)^(3/2) window factor.
double phi2_core(double m);

// ---------------------------------------------------------------------------
// Error-constant assemblies. Each term of the displayed expressions is
// exposed for diagnostics; total() is the assembled value.

struct Psi1Breakdown {
    double w1_and_trivial;  ///< (delta*max{..} + 1/(x-delta)^2) / (sqrt x log x)
    double low_range;       ///< kappa1 block, zeros up to kappa1 x/h
    double mid_range;       ///< weighted-sum block over [kappa1 x/h, kappa2 x/delta]
    double high_range;      ///< phi2 tail block beyond kappa2 x/delta
    double total() const { return w1_and_trivial + low_range + mid_range + high_range; }
};

/// Assembly for explicit delta and h. Preconditions: parameter invariants,
/// 0 < delta <= h/2, kappa1*x/h >= 1, sqrt(x) log(x) <= h <= x^(1-eps).
Psi1Breakdown psi1_terms(double x, double delta, double h, double m, double eps, double kappa1,
                         double kappa2);
double psi1(double x, double delta, double h, double m, double eps, double kappa1,
            double kappa2);

struct Psi2Breakdown {
    double w1_deviation;    ///< max{..}/kappa3
    double trivial_zeros;   ///< x^{-5/2}/(1 - log x/(kappa3 sqrt x))^2
    double log_kappa3;      ///< log(kappa3)/pi
    double low_range;       ///< kappa1 block
    double mid_range;       ///< BPT block with E(kappa1 sqrt x/log x, kappa2 kappa3 sqrt x/log x)
    double high_range;      ///< phi2 tail block
    double range_widening;  ///< ((1 + 1.5 x^-eps)^(1/2) - 1)/pi * log(kappa3 x^(1/2-eps)/log x)
    double total() const {
        return w1_deviation + trivial_zeros + log_kappa3 + low_range + mid_range + high_range +
               range_widening;
    }
};

Psi2Breakdown psi2_terms(const BoundParams& p);
double psi2(const BoundParams& p);
inline double psi2(double x, double m, double eps, double kappa1, double kappa2, double kappa3) {
    return psi2({x, eps, m, kappa1, kappa2, kappa3});
}

/// The x -> infinity limit of the psi2 assembly (five surviving terms).
double psi2_limit(double m, double kappa1, double kappa2, double kappa3);

struct Psi3Breakdown {
    double w1_deviation;
    double trivial_zeros;
    double log_kappa3;      ///< sqrt(2) log(kappa3)/pi
    double low_range;       ///< kappa1 block with the sqrt(2 pi) gamma factor
    double mid_range;       ///< (5/2)^(1/2) BPT block
    double high_range;      ///< (5/2)^(3/2) phi2 tail block
    double range_widening;
    double total() const {
        return w1_deviation + trivial_zeros + log_kappa3 + low_range + mid_range + high_range +
               range_widening;
    }
};

/// Assembly for the h < x range (eps plays no role; the h-dependent factors
/// are bounded by their worst case 1 + h0 + delta0 < 5/2).
Psi3Breakdown psi3_terms(double x, double m, double kappa1, double kappa2, double kappa3);
double psi3(double x, double m, double kappa1, double kappa2, double kappa3);

// ---------------------------------------------------------------------------
// Theorem-level interval bounds: right-hand sides of the final inequalities.

enum class BoundVariant { psi, theta, pi, psi_broad, theta_broad, pi_broad, chd };

/// Throws window_error naming the violated constraint for the variant.
void check_window(BoundVariant variant, double x, double h);

/// RHS of the corresponding theorem inequality at (x, h); validates the
/// window first.
double interval_bound(BoundVariant variant, double x, double h);

double psi_interval_bound(double x, double h);
double theta_interval_bound(double x, double h);
double pi_interval_bound(double x, double h);
double broad_psi_bound(double x, double h);
double broad_theta_bound(double x, double h);
double broad_pi_bound(double x, double h);
double chd_reference_bound(double x, double h);

/// Bracket for psi(x) - theta(x): (0.999 sqrt x + x^(1/3),
/// alpha1 sqrt x + alpha2 x^(1/3)). Requires log x >= 40.
struct ThetaPsiGap {
    double lower;
    double upper;
};
ThetaPsiGap theta_psi_gap(double x);

/// Multiplier used as theta(t) <= 1.01168 t in the pi-bound transfer.
double rosser_theta_multiplier();

const char* to_string(BoundVariant v);
BoundVariant bound_variant_from_string(const std::string& s);

}  // namespace pntsi

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "pntsi/numerics.hpp"

namespace pntsi {

/// Ascending positive ordinates of nontrivial zeta zeros (RH form: the
/// zeros are 1/2 + i*gamma). Sums beyond max_height() are undefined, not
/// zero, so queries past the table raise.
class ZeroTable {
public:
    /// Validates: nonempty, strictly increasing, positive, first ordinate
    /// in (14.13, 14.14).
    ZeroTable(std::vector<double> ordinates, std::string source);

    /// Load from text (one ordinate per line, '#' comments). Keeps a binary
    /// sidecar cache <path>.cache and reuses it while it is newer than the
    /// text file.
    struct LoadStats {
        bool cache_hit = false;
        bool cache_written = false;
    };
    static ZeroTable load(const std::filesystem::path& path, LoadStats* stats = nullptr);

    const std::vector<double>& ordinates() const { return ordinates_; }
    const std::string& source() const { return source_; }
    std::size_t size() const { return ordinates_.size(); }
    double max_height() const { return ordinates_.back(); }

private:
    std::vector<double> ordinates_;
    std::string source_;
};

/// N(T): number of table ordinates with 0 < gamma <= T. T must not exceed
/// max_height (the table cannot answer beyond its horizon).
std::int64_t count_N(const ZeroTable& table, double T);

/// Q(T) = N(T) - (T/2pi) log(T/2pi e) + 7/8, for 2pi <= T <= max_height.
double q_deviation(const ZeroTable& table, double T);

/// R(T) = min{0.28 log T, 0.1038 log T + 0.2573 log log T + 9.3675}.
/// For T < e only the first branch is meaningful (log log T < 0 there and
/// undefined at T <= 1); requires T > 1.
double r_bound(double T);

/// Crude count bound T log T / (2pi), T >= 1.
double n_crude_upper(double T);

/// Bound on the symmetric tail sum over |gamma| >= T of 1/gamma^2:
/// log T / (pi T), T >= 1.
double skewes_tail_bound(double T);

struct BptConstants {
    double a0 = 2.067;
    double a1 = 0.059;
    double a2 = 1.0 / 150.0;
};

/// Boundary-term bound |E(U)| <= 2(A0 + A1 log U)|phi'(U)| + (A1+A2) phi(U)/U.
double e_lemma_term(const BptConstants& cts, double U, double phi_U, double dphi_U);

/// A positive decreasing weight with its derivative, as the weighted
/// zero-sum estimate requires.
struct DifferentiableFn {
    std::function<double(double)> value;
    std::function<double(double)> deriv;
};

struct BptEstimate {
    double main;      ///< (1/2pi) integral of phi(t) log(t/2pi) dt over [U,V]
    double envelope;  ///< phi(V) R(V) + phi(U) R(U) + E-term bound at U
};

/// Estimate of sum over table ordinates in [U, V] of phi(gamma), with a
/// proven error envelope. Requires 2pi <= U <= V.
BptEstimate bpt_sum_estimate(const DifferentiableFn& phi, double U, double V,
                             const QuadratureConfig& cfg, const BptConstants& cts = {});

/// E(T1, T2) = 2(R(T2)/T2 + R(T1)/T1 + (A1 + A2 + 2(A0 + A1 log T1))/T1^2).
double e_pair(const BptConstants& cts, double T1, double T2);
inline double e_pair(double T1, double T2) { return e_pair(BptConstants{}, T1, T2); }

/// 2 * sum of f(gamma) over table ordinates in [lo, hi], compensated.
/// All symmetric sums over |gamma| route through here so the +/- pairing
/// factor lives in exactly one place.
double symmetric_zero_sum(const ZeroTable& table, double lo, double hi,
                          const std::function<double(double)>& f);

}  // namespace pntsi

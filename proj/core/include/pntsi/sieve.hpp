#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pntsi/weights.hpp"
#include "pntsi/zeros.hpp"

namespace pntsi {

/// Largest value the sieve accepts; desk-scale tooling only.
constexpr std::uint64_t sieve_ceiling = 1'000'000'000'000ULL;

/// Primes up to and including `limit`, by plain sieve of Eratosthenes.
std::vector<std::uint32_t> base_primes(std::uint32_t limit);

/// Streams the primes in [lo, hi] in ascending order through `visit`.
/// Wheel mod 30, segments of 2^20 numbers; segments are sieved by a worker
/// pool but always consumed in segment order, so the stream is
/// deterministic for any thread count.
void segmented_primes(std::uint64_t lo, std::uint64_t hi,
                      const std::function<void(std::uint64_t)>& visit, unsigned threads = 0);

/// Convenience collector for ranges small enough to hold in memory.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

/// Exact increments of the prime-counting functions over (x, x+h].
struct IntervalCensus {
    std::uint64_t x = 0;
    std::uint64_t h = 0;
    std::uint64_t pi_inc = 0;  ///< #primes in (x, x+h]
    double theta_inc = 0.0;    ///< sum of log p over those primes
    double psi_inc = 0.0;      ///< theta_inc plus prime-power terms log p, p^k in (x, x+h]
};
IntervalCensus census(std::uint64_t x, std::uint64_t h, unsigned threads = 0);

/// Prime-power-only part of psi over (x, x+h]: sum of log p over p^k with
/// k >= 2. Enumerates p <= sqrt(x+h) directly.
double prime_power_psi(std::uint64_t x, std::uint64_t h);

/// Scan of consecutive prime gaps p_n in [11, limit] against (log p_n)^2.
struct GapReport {
    double max_ratio = 0.0;       ///< max (p_{n+1}-p_n)/(log p_n)^2
    std::uint64_t at_prime = 0;   ///< p_n attaining the max
    std::uint64_t gap = 0;
    std::uint64_t primes_checked = 0;
    bool passed = false;  ///< max_ratio < 1
};
GapReport verify_gap_claim(std::uint64_t limit, unsigned threads = 0);

/// Exact sum over n of w(n/x) Lambda(n) for the given window, compensated
/// summation in ascending n.
double weighted_lambda_sum(const WindowParams& params, const WeightShape& shape,
                           unsigned threads = 0);

/// Truncated right-hand side of the smoothed explicit formula:
///   value = x W(1) - 2 sum_{gamma <= height} Re(x^{1/2+i gamma} W(1/2+i gamma))
/// The trivial-zero series is never evaluated, only bounded; its bound and
/// the zero-sum tail bound (phi_bound j=2 plus the Skewes tail) make up
/// `truncation_envelope`, together with the accumulated quadrature error of
/// the retained terms scaled by sqrt(x).
struct ExplicitFormulaResult {
    double value = 0.0;
    double truncation_envelope = 0.0;
    double zero_sum = 0.0;           ///< the subtracted 2 Re(...) partial sum
    double quadrature_error = 0.0;   ///< part of the envelope, reported separately
    std::int64_t zeros_used = 0;
};
ExplicitFormulaResult explicit_formula_rhs(const WindowParams& params, const WeightShape& shape,
                                           const ZeroTable& table, double height,
                                           const QuadratureConfig& cfg);

}  // namespace pntsi

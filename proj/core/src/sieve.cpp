#include "pntsi/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

namespace pntsi {

namespace {

constexpr std::uint64_t kSegmentSpan = 1ULL << 20;  // numbers per segment
constexpr std::uint32_t kWheel = 30;
constexpr std::uint8_t kResidues[8] = {1, 7, 11, 13, 17, 19, 23, 29};
constexpr std::uint8_t kGaps[8] = {6, 4, 2, 4, 2, 4, 6, 2};  // to next residue

struct WheelRank {
    std::uint8_t rank[30];
    constexpr WheelRank() : rank{} {
        for (auto& r : rank) r = 0xFF;
        for (std::uint8_t i = 0; i < 8; ++i) rank[kResidues[i]] = i;
    }
};
constexpr WheelRank kRank;

/// Bitmap of wheel positions over numbers [base, base+span), base % 30 == 0.
/// Bit index: (n - base)/30 * 8 + rank(n % 30); set = possibly prime.
std::vector<std::uint8_t> sieve_segment(std::uint64_t base, std::uint64_t span,
                                        const std::vector<std::uint32_t>& primes) {
    const std::size_t blocks = static_cast<std::size_t>((span + kWheel - 1) / kWheel);
    std::vector<std::uint8_t> bits(blocks, 0xFF);
    const std::uint64_t end = base + span;
    for (std::uint32_t p : primes) {
        if (p < 7) continue;
        const std::uint64_t p64 = p;
        if (p64 * p64 >= end) break;
        // first wheel-coprime k with p*k >= max(p^2, base)
        std::uint64_t k = std::max<std::uint64_t>(p64, (base + p64 - 1) / p64);
        std::uint8_t r = kRank.rank[k % kWheel];
        while (r == 0xFF) {
            ++k;
            r = kRank.rank[k % kWheel];
        }
        std::uint64_t c = p64 * k;
        while (c < end) {
            const std::uint64_t off = c - base;
            bits[off / kWheel] &= static_cast<std::uint8_t>(~(1u << kRank.rank[off % kWheel]));
            c += p64 * kGaps[r];
            r = static_cast<std::uint8_t>((r + 1) & 7);
        }
    }
    return bits;
}

void emit_segment(const std::vector<std::uint8_t>& bits, std::uint64_t base, std::uint64_t lo,
                  std::uint64_t hi, const std::function<void(std::uint64_t)>& visit) {
    const std::uint64_t end = std::min(base + bits.size() * kWheel, hi + 1);
    for (std::size_t b = 0; b < bits.size(); ++b) {
        std::uint8_t m = bits[b];
        if (!m) continue;
        const std::uint64_t n0 = base + b * kWheel;
        if (n0 >= end) break;
        while (m) {
            const int i = std::countr_zero(m);
            m &= static_cast<std::uint8_t>(m - 1);
            const std::uint64_t n = n0 + kResidues[i];
            if (n < lo || n < 7) continue;  // 1 and the wheel primes are handled outside
            if (n > hi) return;
            visit(n);
        }
    }
}

}  // namespace

std::vector<std::uint32_t> base_primes(std::uint32_t limit) {
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i)
            composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

void segmented_primes(std::uint64_t lo, std::uint64_t hi,
                      const std::function<void(std::uint64_t)>& visit, unsigned threads) {
    if (lo < 2) throw std::domain_error("segmented_primes: requires lo >= 2");
    if (lo > hi) throw std::domain_error("segmented_primes: requires lo <= hi");
    if (hi > sieve_ceiling) throw std::out_of_range("segmented_primes: hi exceeds sieve ceiling");

    for (std::uint64_t p : {2ULL, 3ULL, 5ULL})
        if (p >= lo && p <= hi) visit(p);

    const auto primes = base_primes(static_cast<std::uint32_t>(std::sqrt(static_cast<double>(hi))) + 2);
    const std::uint64_t first_base = (lo / kWheel) * kWheel;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

    if (threads <= 1) {
        for (std::uint64_t base = first_base; base <= hi; base += kSegmentSpan) {
            const std::uint64_t span = std::min(kSegmentSpan, hi - base + 1);
            emit_segment(sieve_segment(base, span, primes), base, lo, hi, visit);
        }
        return;
    }

    // sieve up to `threads` segments concurrently, consume strictly in order
    std::vector<std::pair<std::uint64_t, std::future<std::vector<std::uint8_t>>>> inflight;
    std::uint64_t next_base = first_base;
    auto launch = [&]() {
        if (next_base > hi) return false;
        const std::uint64_t base = next_base;
        const std::uint64_t span = std::min(kSegmentSpan, hi - base + 1);
        inflight.emplace_back(base, std::async(std::launch::async, [base, span, &primes]() {
                                  return sieve_segment(base, span, primes);
                              }));
        next_base += kSegmentSpan;
        return true;
    };
    for (unsigned i = 0; i < threads; ++i) launch();
    while (!inflight.empty()) {
        auto [base, fut] = std::move(inflight.front());
        inflight.erase(inflight.begin());
        const auto bits = fut.get();
        launch();
        emit_segment(bits, base, lo, hi, visit);
    }
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    segmented_primes(std::max<std::uint64_t>(lo, 2), hi,
                     [&](std::uint64_t p) { out.push_back(p); }, 1);
    return out;
}

double prime_power_psi(std::uint64_t x, std::uint64_t h) {
    const std::uint64_t hi = x + h;
    const auto ps = base_primes(static_cast<std::uint32_t>(std::sqrt(static_cast<double>(hi))) + 1);
    CompensatedSum acc;
    for (std::uint32_t p : ps) {
        const std::uint64_t p64 = p;
        if (p64 * p64 > hi) break;
        const double lp = std::log(static_cast<double>(p));
        std::uint64_t pk = p64 * p64;
        while (true) {
            if (pk > x) acc.add(lp);
            if (pk > hi / p64) break;
            pk *= p64;
            if (pk > hi) break;
        }
    }
    return acc.value();
}

IntervalCensus census(std::uint64_t x, std::uint64_t h, unsigned threads) {
    if (x < 2) throw std::domain_error("census: requires x >= 2");
    if (h < 1) throw std::domain_error("census: requires h >= 1");
    if (x + h > sieve_ceiling) throw std::out_of_range("census: x + h exceeds sieve ceiling");
    IntervalCensus c;
    c.x = x;
    c.h = h;
    CompensatedSum theta;
    segmented_primes(x + 1, x + h,
                     [&](std::uint64_t p) {
                         ++c.pi_inc;
                         theta.add(std::log(static_cast<double>(p)));
                     },
                     threads);
    c.theta_inc = theta.value();
    c.psi_inc = c.theta_inc + prime_power_psi(x, h);
    return c;
}

GapReport verify_gap_claim(std::uint64_t limit, unsigned threads) {
    if (limit < 13) throw std::domain_error("verify_gap_claim: limit too small to contain a gap");
    if (limit > sieve_ceiling) throw std::out_of_range("verify_gap_claim: limit exceeds sieve ceiling");

    GapReport rep;
    const double ll = std::log(static_cast<double>(limit));
    std::uint64_t margin = static_cast<std::uint64_t>(4.0 * ll * ll) + 100;
    std::uint64_t prev = 0;
    bool closed = false;  // saw a prime beyond `limit`
    while (!closed) {
        prev = 0;
        rep = GapReport{};
        segmented_primes(2, limit + margin,
                         [&](std::uint64_t p) {
                             if (prev >= 11 && prev <= limit) {
                                 const std::uint64_t gap = p - prev;
                                 const double lp = std::log(static_cast<double>(prev));
                                 const double ratio = static_cast<double>(gap) / (lp * lp);
                                 if (ratio > rep.max_ratio) {
                                     rep.max_ratio = ratio;
                                     rep.at_prime = prev;
                                     rep.gap = gap;
                                 }
                                 ++rep.primes_checked;
                             }
                             if (prev > limit || p > limit) closed = true;
                             prev = p;
                         },
                         threads);
        margin *= 4;  // no prime past `limit` found (will not trigger at desk scale)
    }
    rep.passed = rep.max_ratio < 1.0;
    return rep;
}

double weighted_lambda_sum(const WindowParams& params, const WeightShape& shape,
                           unsigned threads) {
    const double lo_real = params.x * params.alpha() - params.delta;
    const double hi_real = params.x * params.beta() + params.delta;
    if (hi_real > static_cast<double>(sieve_ceiling))
        throw std::out_of_range("weighted_lambda_sum: window exceeds sieve ceiling");
    const std::uint64_t lo = static_cast<std::uint64_t>(std::max(2.0, std::floor(lo_real)));
    const std::uint64_t hi = static_cast<std::uint64_t>(std::ceil(hi_real));

    CompensatedSum acc;
    segmented_primes(lo, hi,
                     [&](std::uint64_t p) {
                         const double w = w_pm(params, shape, static_cast<double>(p) / params.x);
                         if (w != 0.0) acc.add(w * std::log(static_cast<double>(p)));
                     },
                     threads);
    // prime powers p^k inside the window, ordered by p then k
    const auto ps = base_primes(static_cast<std::uint32_t>(std::sqrt(hi_real)) + 1);
    for (std::uint32_t p : ps) {
        const std::uint64_t p64 = p;
        if (p64 * p64 > hi) break;
        const double lp = std::log(static_cast<double>(p));
        std::uint64_t pk = p64 * p64;
        while (true) {
            if (pk >= lo) {
                const double w = w_pm(params, shape, static_cast<double>(pk) / params.x);
                if (w != 0.0) acc.add(w * lp);
            }
            if (pk > hi / p64) break;
            pk *= p64;
            if (pk > hi) break;
        }
    }
    return acc.value();
}

ExplicitFormulaResult explicit_formula_rhs(const WindowParams& params, const WeightShape& shape,
                                           const ZeroTable& table, double height,
                                           const QuadratureConfig& cfg) {
    if (height > table.max_height())
        throw std::out_of_range("explicit_formula_rhs: height exceeds the zero table");
    const double x = params.x;
    const double sqrt_x = std::sqrt(x);
    const double log_x = std::log(x);

    ExplicitFormulaResult out;
    CompensatedSum zsum;
    CompensatedSum qerr;
    for (double gamma : table.ordinates()) {
        if (gamma > height) break;
        const std::complex<double> s{0.5, gamma};
        const IntegrationResult w = mellin_W(params, shape, s, cfg);
        if (!w.converged)
            throw quadrature_error("explicit_formula_rhs: W(s) quadrature did not converge at "
                                   "gamma = " + std::to_string(gamma));
        // Re(x^s W(s)) for s = 1/2 + i gamma
        const double phase = gamma * log_x;
        zsum.add(sqrt_x * (std::cos(phase) * w.value.real() - std::sin(phase) * w.value.imag()));
        qerr.add(sqrt_x * w.error);
        ++out.zeros_used;
    }
    out.zero_sum = 2.0 * zsum.value();
    out.value = x * closed_W1(params, shape) - out.zero_sum;
    out.quadrature_error = 2.0 * qerr.value();

    // discarded zeros: |x^rho W(rho)| <= sqrt(x) * phi2/(delta0 * gamma^2),
    // summed over |gamma| > height via the Skewes tail bound
    const double phi2 = phi_bound(shape, params.h0(), params.delta0(), 2);
    const double zero_tail =
        (x * sqrt_x / params.delta) * phi2 * skewes_tail_bound(height);
    out.truncation_envelope =
        zero_tail + trivial_tail(x, params.delta) + out.quadrature_error;
    return out;
}

}  // namespace pntsi

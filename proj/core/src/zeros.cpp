#include "pntsi/zeros.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <charconv>
#include <cstring>
#include <fstream>

namespace pntsi {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;
constexpr char kCacheMagic[8] = {'P', 'N', 'T', 'Z', 'C', 'A', 'C', 'H'};

std::filesystem::path cache_path(const std::filesystem::path& src) {
    std::filesystem::path p = src;
    p += ".cache";
    return p;
}

bool try_load_cache(const std::filesystem::path& src, std::vector<double>& out) {
    namespace fs = std::filesystem;
    const fs::path cp = cache_path(src);
    std::error_code ec;
    if (!fs::exists(cp, ec)) return false;
    if (fs::last_write_time(src, ec) > fs::last_write_time(cp, ec)) return false;

    std::ifstream in(cp, std::ios::binary);
    if (!in) return false;
    char magic[8];
    std::uint64_t count = 0;
    in.read(magic, 8);
    in.read(reinterpret_cast<char*>(&count), 8);
    if (!in || std::memcmp(magic, kCacheMagic, 8) != 0) return false;
    out.resize(count);
    in.read(reinterpret_cast<char*>(out.data()), static_cast<std::streamsize>(count * 8));
    return static_cast<bool>(in);
}

void write_cache(const std::filesystem::path& src, const std::vector<double>& vals) {
    std::ofstream out(cache_path(src), std::ios::binary | std::ios::trunc);
    if (!out) return;  // cache is an optimization; failure to write is not fatal
    const std::uint64_t count = vals.size();
    out.write(kCacheMagic, 8);
    out.write(reinterpret_cast<const char*>(&count), 8);
    out.write(reinterpret_cast<const char*>(vals.data()),
              static_cast<std::streamsize>(count * 8));
}

std::vector<double> parse_text(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path.string(), 0, "cannot open file");
    std::vector<double> vals;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        std::size_t e = line.find_last_not_of(" \t\r");
        double v = 0.0;
        auto [ptr, err] = std::from_chars(line.data() + b, line.data() + e + 1, v);
        if (err != std::errc{} || ptr != line.data() + e + 1)
            throw parse_error(path.string(), lineno, "not a decimal ordinate: '" + line + "'");
        if (!(v > 0.0))
            throw parse_error(path.string(), lineno, "ordinate must be positive");
        if (!vals.empty() && !(v > vals.back()))
            throw parse_error(path.string(), lineno, "ordinates must be strictly increasing");
        vals.push_back(v);
    }
    return vals;
}

}  // namespace

ZeroTable::ZeroTable(std::vector<double> ordinates, std::string source)
    : ordinates_(std::move(ordinates)), source_(std::move(source)) {
    if (ordinates_.empty()) throw std::invalid_argument("ZeroTable: empty table rejected");
    if (!(ordinates_.front() > 14.13 && ordinates_.front() < 14.14))
        throw std::invalid_argument("ZeroTable: first ordinate must lie in (14.13, 14.14)");
    for (std::size_t i = 0; i + 1 < ordinates_.size(); ++i)
        if (!(ordinates_[i] < ordinates_[i + 1]))
            throw std::invalid_argument("ZeroTable: ordinates must be strictly increasing");
}

ZeroTable ZeroTable::load(const std::filesystem::path& path, LoadStats* stats) {
    std::vector<double> vals;
    LoadStats st;
    if (try_load_cache(path, vals)) {
        st.cache_hit = true;
    } else {
        vals = parse_text(path);
        if (vals.empty()) throw parse_error(path.string(), 0, "empty table rejected");
        write_cache(path, vals);
        st.cache_written = true;
    }
    if (stats) *stats = st;
    return ZeroTable(std::move(vals), path.string());
}

std::int64_t count_N(const ZeroTable& table, double T) {
    if (!(T > 0.0)) throw std::domain_error("count_N: requires T > 0");
    if (T > table.max_height())
        throw std::out_of_range("count_N: T exceeds the table's max height");
    const auto& ord = table.ordinates();
    return std::upper_bound(ord.begin(), ord.end(), T) - ord.begin();
}

double q_deviation(const ZeroTable& table, double T) {
    if (!(T >= kTwoPi)) throw std::domain_error("q_deviation: requires T >= 2*pi");
    const double n = static_cast<double>(count_N(table, T));
    return n - (T / kTwoPi) * std::log(T / (kTwoPi * std::exp(1.0))) + 7.0 / 8.0;
}

double r_bound(double T) {
    if (!(T > 1.0)) throw std::domain_error("r_bound: requires T > 1");
    const double first = 0.28 * std::log(T);
    if (T < std::exp(1.0)) return first;
    const double second = 0.1038 * std::log(T) + 0.2573 * std::log(std::log(T)) + 9.3675;
    return std::min(first, second);
}

double n_crude_upper(double T) {
    if (!(T >= 1.0)) throw std::domain_error("n_crude_upper: requires T >= 1");
    return T * std::log(T) / kTwoPi;
}

double skewes_tail_bound(double T) {
    if (!(T >= 1.0)) throw std::domain_error("skewes_tail_bound: requires T >= 1");
    return std::log(T) / (kPi * T);
}

double e_lemma_term(const BptConstants& cts, double U, double phi_U, double dphi_U) {
    if (!(U >= kTwoPi)) throw std::domain_error("e_lemma_term: requires U >= 2*pi");
    if (!(phi_U >= 0.0)) throw std::domain_error("e_lemma_term: requires phi(U) >= 0");
    return 2.0 * (cts.a0 + cts.a1 * std::log(U)) * std::abs(dphi_U) +
           (cts.a1 + cts.a2) * phi_U / U;
}

BptEstimate bpt_sum_estimate(const DifferentiableFn& phi, double U, double V,
                             const QuadratureConfig& cfg, const BptConstants& cts) {
    if (!(U >= kTwoPi && U <= V)) throw std::domain_error("bpt_sum_estimate: requires 2pi <= U <= V");
    double main = 0.0;
    if (U < V) {
        auto f = [&](double t) -> std::complex<double> {
            return phi.value(t) * std::log(t / kTwoPi);
        };
        main = integrate_or_throw(f, U, V, cfg).value.real() / kTwoPi;
    }
    const double env = phi.value(V) * r_bound(V) + phi.value(U) * r_bound(U) +
                       e_lemma_term(cts, U, phi.value(U), phi.deriv(U));
    return {main, env};
}

double e_pair(const BptConstants& cts, double T1, double T2) {
    if (!(T1 > 1.0 && T2 > 1.0)) throw std::domain_error("e_pair: requires T1, T2 > 1");
    return 2.0 * (r_bound(T2) / T2 + r_bound(T1) / T1 +
                  (cts.a1 + cts.a2 + 2.0 * (cts.a0 + cts.a1 * std::log(T1))) / (T1 * T1));
}

double symmetric_zero_sum(const ZeroTable& table, double lo, double hi,
                          const std::function<double(double)>& f) {
    const auto& ord = table.ordinates();
    auto it = std::lower_bound(ord.begin(), ord.end(), lo);
    auto end = std::upper_bound(ord.begin(), ord.end(), hi);
    CompensatedSum acc;
    for (; it != end; ++it) acc.add(f(*it));
    return 2.0 * acc.value();
}

}  // namespace pntsi

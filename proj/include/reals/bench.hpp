#pragma once

/// Benchmark workloads: cosines of consecutive-Fibonacci ratios (both
/// near the golden ratio, but with very different operand sizes) and a
/// pi smoke problem. Problems run sequentially and report wall-clock
/// time plus a checksum of the digit string.

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reals/elementary.hpp"
#include "reals/eval.hpp"

namespace reals {

inline Int fibonacci(unsigned long n) {
    Int f;
    mpz_fib_ui(f.get_mpz_t(), n);
    return f;
}

inline std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

struct BenchResult {
    std::string name;
    double seconds;
    std::string checksum;
    std::string output;
};

namespace detail {

inline BenchResult time_problem(std::string name, const CReal& value, int digits) {
    auto start = std::chrono::steady_clock::now();
    DigitOutput out = format_digits(value, digits);
    auto stop = std::chrono::steady_clock::now();
    std::string rendered = out.decimal();
    return BenchResult{std::move(name), std::chrono::duration<double>(stop - start).count(),
                       fnv1a_hex(rendered), std::move(rendered)};
}

}  // namespace detail

/// suite "table1": cos(F4/F5) and cos(F2394/F2395); suite "smoke": pi.
inline std::vector<BenchResult> run_benchmarks(const std::string& suite, int digits) {
    std::vector<BenchResult> results;
    if (suite == "table1") {
        Rational small_ratio(fibonacci(4), fibonacci(5));
        results.push_back(detail::time_problem(
            "cos(F4/F5)", cos_real(CReal::from_rational(small_ratio)), digits));
        Rational big_ratio(fibonacci(2394), fibonacci(2395));
        results.push_back(detail::time_problem(
            "cos(F2394/F2395)", cos_real(CReal::from_rational(big_ratio)), digits));
    } else if (suite == "smoke") {
        results.push_back(detail::time_problem("pi", pi(), digits));
    } else {
        throw std::invalid_argument("unknown benchmark suite '" + suite + "'");
    }
    return results;
}

}  // namespace reals

#pragma once

#include <cstdint>

namespace qgt {

/// base^exp by repeated squaring. Deterministic across platforms and much
/// cheaper than std::pow for the large integer exponents (up to 2^14) that
/// the density-evolution recursions need.
inline double ipow(double base, std::uint64_t exp) {
    double result = 1.0;
    double b = base;
    while (exp != 0) {
        if (exp & 1u) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

/// P[Bino(n, p) <= k]. Incremental term recursion; falls back to a log-space
/// recursion when the leading term underflows. Stable for n up to ~2^14.
double binomial_cdf(std::uint64_t n, std::uint64_t k, double p);

} // namespace qgt

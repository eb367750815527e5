#include "qgt/binomial.hpp"

#include <algorithm>
#include <cmath>

namespace qgt {

double binomial_cdf(std::uint64_t n, std::uint64_t k, double p) {
    if (p <= 0.0) return 1.0;
    if (p >= 1.0) return k >= n ? 1.0 : 0.0;
    if (k >= n) return 1.0;

    const double nd = static_cast<double>(n);
    double term = ipow(1.0 - p, n);
    if (term > 0.0) {
        const double ratio = p / (1.0 - p);
        double sum = term;
        for (std::uint64_t i = 0; i < k; ++i) {
            term *= (nd - static_cast<double>(i)) / static_cast<double>(i + 1) * ratio;
            sum += term;
        }
        return std::min(sum, 1.0);
    }

    // Leading term underflowed: run the same recursion on logs and rescale
    // through a streaming log-sum-exp.
    const double log_ratio = std::log(p) - std::log1p(-p);
    double log_term = nd * std::log1p(-p);
    double max_log = log_term;
    double scaled_sum = 1.0; // sum of exp(log_term_i - max_log)
    for (std::uint64_t i = 0; i < k; ++i) {
        log_term += std::log((nd - static_cast<double>(i)) / static_cast<double>(i + 1)) + log_ratio;
        if (log_term > max_log) {
            scaled_sum = scaled_sum * std::exp(max_log - log_term) + 1.0;
            max_log = log_term;
        } else {
            scaled_sum += std::exp(log_term - max_log);
        }
    }
    return std::min(std::exp(max_log) * scaled_sum, 1.0);
}

} // namespace qgt

#include "qgt/ensemble.hpp"

#include <stdexcept>
#include <string>

#include "qgt/errors.hpp"

namespace qgt {

const char* to_string(Scheme s) { return s == Scheme::Ldpc ? "ldpc" : "gldpc"; }

void CouplingSpec::validate() const {
    if (memory < 1) throw std::invalid_argument("coupling memory w must be >= 1");
    if (memory >= chain_length)
        throw std::invalid_argument("coupling requires w < L (got w=" + std::to_string(memory) +
                                    ", L=" + std::to_string(chain_length) + ")");
}

void EnsembleSpec::validate() const {
    if (vn_degree < 2) throw std::invalid_argument("vn degree d_v must be >= 2");
    if (cn_degree <= vn_degree) throw std::invalid_argument("cn degree d_c must exceed d_v");
    if (scheme == Scheme::Ldpc && correction_radius != 0)
        throw std::invalid_argument("ldpc scheme means correction radius t = 0");
    if (scheme == Scheme::Gldpc) {
        if (correction_radius < 1) throw std::invalid_argument("gldpc scheme needs t >= 1");
        if (correction_radius >= cn_degree) throw std::invalid_argument("gldpc needs t < d_c");
    }
    if (coupling) coupling->validate();
}

void PopulationSpec::validate(const EnsembleSpec& spec) const {
    if (items == 0) throw std::invalid_argument("population must be non-empty");
    if (!(prevalence >= 0.0 && prevalence <= 1.0))
        throw std::invalid_argument("prevalence gamma must lie in [0, 1]");
    if (items * spec.vn_degree % spec.cn_degree != 0)
        throw std::invalid_argument("items * d_v must be divisible by d_c");
}

std::uint64_t tests_per_bundle(std::uint32_t cn_degree, std::uint32_t correction_radius) {
    return static_cast<std::uint64_t>(correction_radius) * ceil_log2_cn_alphabet(cn_degree) + 1;
}

double rate_formula(std::uint32_t vn_degree, std::uint32_t cn_degree, std::uint32_t correction_radius) {
    // Exact integer numerator; a single correctly-rounded division surfaces it.
    const std::uint64_t numerator =
        static_cast<std::uint64_t>(vn_degree) * tests_per_bundle(cn_degree, correction_radius);
    return static_cast<double>(numerator) / static_cast<double>(cn_degree);
}

double rate(const EnsembleSpec& spec) {
    spec.validate();
    return rate_formula(spec.vn_degree, spec.cn_degree, spec.correction_radius);
}

double coupled_rate(const EnsembleSpec& spec) {
    spec.validate();
    if (!spec.coupling) throw std::invalid_argument("coupled_rate requires coupling parameters");
    const auto& c = *spec.coupling;
    return (1.0 + static_cast<double>(c.memory) / static_cast<double>(c.chain_length)) *
           rate_formula(spec.vn_degree, spec.cn_degree, spec.correction_radius);
}

double tests_per_defective(double omega, double gamma) {
    if (!(gamma > 0.0)) throw std::domain_error("tests_per_defective needs gamma > 0");
    return omega / gamma;
}

RateSearchResult dc_for_rate(Scheme scheme, std::uint32_t correction_radius, std::uint32_t vn_degree,
                             double omega_target, std::uint32_t dc_limit) {
    if (scheme == Scheme::Ldpc && correction_radius != 0)
        throw std::invalid_argument("ldpc scheme means t = 0");
    if (scheme == Scheme::Gldpc && correction_radius < 1)
        throw std::invalid_argument("gldpc scheme needs t >= 1");
    if (!(omega_target > 0.0 && omega_target < 1.0))
        throw std::invalid_argument("omega target must lie in (0, 1)");

    const std::uint32_t dc_lo = std::max(vn_degree + 1, correction_radius + 1);
    RateSearchResult best;
    for (std::uint32_t dc = dc_lo; dc <= dc_limit; ++dc) {
        const double r = rate_formula(vn_degree, dc, correction_radius);
        if (r > omega_target) continue;
        // argmax of rate under the cap; equal rates resolve toward larger dc,
        // so exact hits end at the largest dc realizing the target.
        if (r > best.achieved_rate || (r == best.achieved_rate && dc > best.cn_degree)) {
            best.cn_degree = dc;
            best.achieved_rate = r;
        }
    }
    if (best.cn_degree == 0)
        throw InfeasibleError("no cn degree in range achieves rate <= target");
    best.exact = best.achieved_rate == omega_target;
    return best;
}

} // namespace qgt

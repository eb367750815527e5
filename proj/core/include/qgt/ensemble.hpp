#pragma once

#include <bit>
#include <cstdint>
#include <optional>

namespace qgt {

enum class Scheme { Ldpc, Gldpc };

const char* to_string(Scheme s);

/// Spatial-coupling parameters: memory w and chain length L.
struct CouplingSpec {
    std::uint32_t memory = 0;       // w
    std::uint32_t chain_length = 0; // L

    /// Enforces 1 <= w < L. (The degenerate w = 0, L = 1 chain is still a
    /// valid input to the coupled samplers/recursions and is exercised by the
    /// reduction tests, but it is not a declarable ensemble.)
    void validate() const;
};

/// A group-testing ensemble: scheme family, degrees, correction radius and
/// optional coupling. Owns all rate formulas' symbols.
struct EnsembleSpec {
    Scheme scheme = Scheme::Ldpc;
    std::uint32_t vn_degree = 0;         // d_v
    std::uint32_t cn_degree = 0;         // d_c
    std::uint32_t correction_radius = 0; // t; 0 iff scheme == Ldpc
    std::optional<CouplingSpec> coupling;

    bool coupled() const { return coupling.has_value(); }
    void validate() const;
};

/// Item population: total items n (uncoupled) or items per position n_b
/// (coupled), plus the prevalence gamma.
struct PopulationSpec {
    std::uint64_t items = 0;
    double prevalence = 0.0;

    void validate(const EnsembleSpec& spec) const;
};

/// ceil(log2(dc + 1)); the number of parity-test blocks a radius-t component
/// code needs per correctable error.
inline std::uint32_t ceil_log2_cn_alphabet(std::uint32_t cn_degree) {
    return static_cast<std::uint32_t>(std::bit_width(cn_degree));
}

/// Tests per constraint-node bundle: t*ceil(log2(dc+1)) + 1.
std::uint64_t tests_per_bundle(std::uint32_t cn_degree, std::uint32_t correction_radius);

/// Rate formula (tests per item) without spec validation; exposed for the
/// degenerate identities the validated path rejects.
double rate_formula(std::uint32_t vn_degree, std::uint32_t cn_degree, std::uint32_t correction_radius);

/// Tests per item, Omega = (dv/dc) * (t*ceil(log2(dc+1)) + 1). Coupling is
/// ignored here; see coupled_rate.
double rate(const EnsembleSpec& spec);

/// Omega_SC = (1 + w/L) * Omega. Requires coupling.
double coupled_rate(const EnsembleSpec& spec);

/// omega / gamma: expected tests per defective item.
double tests_per_defective(double omega, double gamma);

struct RateSearchResult {
    std::uint32_t cn_degree = 0;
    double achieved_rate = 0.0;
    bool exact = false; // achieved_rate == requested target
};

/// Largest dc whose rate equals omega_target exactly when such dc exists,
/// otherwise the dc maximizing rate <= omega_target (ties broken toward
/// larger dc). Throws InfeasibleError when no dc in (dv, dc_limit] fits.
RateSearchResult dc_for_rate(Scheme scheme, std::uint32_t correction_radius, std::uint32_t vn_degree,
                             double omega_target, std::uint32_t dc_limit = 1u << 16);

} // namespace qgt

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace qgt {

/// Immutable bipartite pooling graph in CSR form, items (VNs) on one side and
/// tests or test bundles (CNs) on the other. Coupled graphs carry the chain
/// layout; positions are 1-based and derived from the block structure.
struct BipartiteGraph {
    std::uint32_t n_vns = 0;
    std::uint32_t n_cns = 0;
    std::uint32_t vn_degree = 0;         // every VN has exactly this degree
    std::uint32_t cn_degree_nominal = 0; // exact for uncoupled CNs, mean for coupled

    std::vector<std::uint32_t> vn_offsets; // size n_vns + 1
    std::vector<std::uint32_t> vn_edges;   // CN indices, grouped per VN
    std::vector<std::uint32_t> cn_offsets; // size n_cns + 1
    std::vector<std::uint32_t> cn_edges;   // VN indices, grouped per CN

    // Coupled layout (all zero when uncoupled).
    std::uint32_t memory = 0;             // w
    std::uint32_t chain_length = 0;       // L
    std::uint32_t items_per_position = 0; // n_b
    std::uint32_t cns_per_position = 0;

    bool coupled() const { return chain_length != 0; }
    std::uint64_t edge_count() const { return vn_edges.size(); }

    std::span<const std::uint32_t> cns_of(std::uint32_t vn) const {
        return {vn_edges.data() + vn_offsets[vn], vn_offsets[vn + 1] - vn_offsets[vn]};
    }
    std::span<const std::uint32_t> vns_of(std::uint32_t cn) const {
        return {cn_edges.data() + cn_offsets[cn], cn_offsets[cn + 1] - cn_offsets[cn]};
    }
    std::uint32_t cn_degree_of(std::uint32_t cn) const {
        return cn_offsets[cn + 1] - cn_offsets[cn];
    }

    /// Spatial position tau of a node, in [1, L] for VNs and [1, L+w] for CNs.
    std::uint32_t vn_position(std::uint32_t vn) const { return vn / items_per_position + 1; }
    std::uint32_t cn_position(std::uint32_t cn) const { return cn / cns_per_position + 1; }
};

/// Node/edge counts a coupled sample will have, computable without sampling.
struct CoupledLayout {
    std::uint64_t n_vns = 0;
    std::uint64_t n_cns = 0;
    std::uint64_t cns_per_position = 0;
    std::uint64_t cn_positions = 0;
    std::uint64_t edges = 0;
};
CoupledLayout coupled_layout(std::uint64_t items_per_position, std::uint32_t vn_degree,
                             std::uint32_t cn_degree, std::uint32_t memory, std::uint32_t chain_length);

/// Uniform configuration-model sample of a (dv, dc)-regular simple graph.
/// Parallel edges are repaired by pairwise edge swaps with a retry budget of
/// 100 * |E|; exhausting it raises SamplingError. Deterministic given seed.
BipartiteGraph sample_regular(std::uint64_t items, std::uint32_t vn_degree, std::uint32_t cn_degree,
                              std::uint64_t seed);

/// Spatially coupled sample: L*n_b VNs at positions 1..L, n_b*dv/dc CNs at
/// each position 1..L+w. Every VN draws dv positions uniformly from
/// [tau, tau+w] and attaches to a uniform CN at the drawn position, redrawing
/// on duplicate (VN, CN) pairs. CN degrees are binomial around dc; boundary
/// positions run lower. Deterministic given seed.
BipartiteGraph sample_coupled(std::uint64_t items_per_position, std::uint32_t vn_degree,
                              std::uint32_t cn_degree, std::uint32_t memory,
                              std::uint32_t chain_length, std::uint64_t seed);

/// Per-CN count of incident unresolved VNs. Does not mutate the graph.
std::vector<std::uint32_t> residual_degrees(const BipartiteGraph& graph,
                                            const std::vector<bool>& resolved_vns);

/// Plain-text export: header "n_vns n_cns dv dc [w L]", then one
/// "vn_index cn_index" line per edge.
void write_edge_list(const BipartiteGraph& graph, std::ostream& out);

} // namespace qgt

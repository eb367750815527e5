#include "qgt/graph.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "qgt/errors.hpp"
#include "qgt/rng.hpp"

namespace qgt {

namespace {

void build_cn_csr(BipartiteGraph& g) {
    g.cn_offsets.assign(g.n_cns + 1, 0);
    for (std::uint32_t cn : g.vn_edges) ++g.cn_offsets[cn + 1];
    for (std::uint32_t c = 0; c < g.n_cns; ++c) g.cn_offsets[c + 1] += g.cn_offsets[c];
    g.cn_edges.resize(g.vn_edges.size());
    std::vector<std::uint32_t> cursor(g.cn_offsets.begin(), g.cn_offsets.end() - 1);
    for (std::uint32_t v = 0; v < g.n_vns; ++v) {
        for (std::uint32_t cn : g.cns_of(v)) g.cn_edges[cursor[cn]++] = v;
    }
}

// Does vn already carry an edge to cn, ignoring slot `skip`?
bool vn_has_cn(const std::vector<std::uint32_t>& cn_of, std::uint64_t vn_begin, std::uint32_t dv,
               std::uint64_t skip, std::uint32_t cn) {
    for (std::uint64_t s = vn_begin; s < vn_begin + dv; ++s) {
        if (s != skip && cn_of[s] == cn) return true;
    }
    return false;
}

} // namespace

CoupledLayout coupled_layout(std::uint64_t items_per_position, std::uint32_t vn_degree,
                             std::uint32_t cn_degree, std::uint32_t memory,
                             std::uint32_t chain_length) {
    if (items_per_position == 0 || vn_degree == 0 || cn_degree == 0 || chain_length == 0)
        throw std::invalid_argument("coupled layout parameters must be positive");
    if (items_per_position * vn_degree % cn_degree != 0)
        throw std::invalid_argument("n_b * d_v must be divisible by d_c");
    CoupledLayout lay;
    lay.cns_per_position = items_per_position * vn_degree / cn_degree;
    lay.cn_positions = static_cast<std::uint64_t>(chain_length) + memory;
    lay.n_vns = items_per_position * chain_length;
    lay.n_cns = lay.cns_per_position * lay.cn_positions;
    lay.edges = lay.n_vns * vn_degree;
    return lay;
}

BipartiteGraph sample_regular(std::uint64_t items, std::uint32_t vn_degree, std::uint32_t cn_degree,
                              std::uint64_t seed) {
    if (items == 0 || vn_degree == 0 || cn_degree == 0)
        throw std::invalid_argument("graph parameters must be positive");
    if (items * vn_degree % cn_degree != 0)
        throw std::invalid_argument("n * d_v must be divisible by d_c");
    if (cn_degree > items)
        throw std::invalid_argument("d_c exceeds the item count; parallel edges are unavoidable");
    if (items > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("item count exceeds index range");

    const std::uint64_t n_edges = items * vn_degree;
    const std::uint64_t n_cns = n_edges / cn_degree;
    if (vn_degree > n_cns)
        throw std::invalid_argument("d_v exceeds the test count; parallel edges are unavoidable");

    Rng rng(seed);

    // Configuration model: CN sockets in blocks, Fisher-Yates shuffled, paired
    // with VN slots in order (slot e belongs to VN e / dv).
    std::vector<std::uint32_t> cn_of(n_edges);
    for (std::uint64_t e = 0; e < n_edges; ++e) cn_of[e] = static_cast<std::uint32_t>(e / cn_degree);
    for (std::uint64_t i = n_edges - 1; i > 0; --i) {
        const std::uint64_t j = rng.bounded(i + 1);
        std::swap(cn_of[i], cn_of[j]);
    }

    // Repair parallel edges by pairwise swaps.
    std::vector<std::uint64_t> bad;
    for (std::uint64_t v = 0; v < items; ++v) {
        const std::uint64_t begin = v * vn_degree;
        for (std::uint64_t s = begin + 1; s < begin + vn_degree; ++s) {
            if (vn_has_cn(cn_of, begin, vn_degree, s, cn_of[s])) bad.push_back(s);
        }
    }
    std::uint64_t budget = 100 * n_edges;
    while (!bad.empty()) {
        const std::uint64_t slot = bad.back();
        const std::uint64_t vn_begin = slot / vn_degree * vn_degree;
        if (!vn_has_cn(cn_of, vn_begin, vn_degree, slot, cn_of[slot])) {
            bad.pop_back();
            continue;
        }
        if (budget-- == 0) throw SamplingError("parallel-edge repair exhausted its retry budget");
        const std::uint64_t other = rng.bounded(n_edges);
        const std::uint64_t other_begin = other / vn_degree * vn_degree;
        if (other_begin == vn_begin) continue;
        const std::uint32_t c1 = cn_of[slot];
        const std::uint32_t c2 = cn_of[other];
        if (c1 == c2) continue;
        if (vn_has_cn(cn_of, vn_begin, vn_degree, slot, c2)) continue;
        if (vn_has_cn(cn_of, other_begin, vn_degree, other, c1)) continue;
        cn_of[slot] = c2;
        cn_of[other] = c1;
        bad.pop_back();
    }

    BipartiteGraph g;
    g.n_vns = static_cast<std::uint32_t>(items);
    g.n_cns = static_cast<std::uint32_t>(n_cns);
    g.vn_degree = vn_degree;
    g.cn_degree_nominal = cn_degree;
    g.vn_offsets.resize(items + 1);
    for (std::uint64_t v = 0; v <= items; ++v)
        g.vn_offsets[v] = static_cast<std::uint32_t>(v * vn_degree);
    g.vn_edges = std::move(cn_of);
    build_cn_csr(g);
    return g;
}

BipartiteGraph sample_coupled(std::uint64_t items_per_position, std::uint32_t vn_degree,
                              std::uint32_t cn_degree, std::uint32_t memory,
                              std::uint32_t chain_length, std::uint64_t seed) {
    const CoupledLayout lay =
        coupled_layout(items_per_position, vn_degree, cn_degree, memory, chain_length);
    if (memory >= chain_length && !(memory == 0 && chain_length == 1))
        throw std::invalid_argument("coupled sampling requires w < L");
    if (lay.n_vns > std::numeric_limits<std::uint32_t>::max() ||
        lay.n_cns > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("coupled graph exceeds index range");
    if ((static_cast<std::uint64_t>(memory) + 1) * lay.cns_per_position < vn_degree)
        throw std::invalid_argument("fewer than d_v distinct (position, cn) pairs reachable");

    Rng rng(seed);
    const auto m_pos = static_cast<std::uint32_t>(lay.cns_per_position);

    BipartiteGraph g;
    g.n_vns = static_cast<std::uint32_t>(lay.n_vns);
    g.n_cns = static_cast<std::uint32_t>(lay.n_cns);
    g.vn_degree = vn_degree;
    g.cn_degree_nominal = cn_degree;
    g.memory = memory;
    g.chain_length = chain_length;
    g.items_per_position = static_cast<std::uint32_t>(items_per_position);
    g.cns_per_position = m_pos;

    g.vn_offsets.resize(lay.n_vns + 1);
    for (std::uint64_t v = 0; v <= lay.n_vns; ++v)
        g.vn_offsets[v] = static_cast<std::uint32_t>(v * vn_degree);
    g.vn_edges.resize(lay.edges);

    constexpr int kCnRetries = 16;
    constexpr int kPositionRetries = 100;
    for (std::uint64_t v = 0; v < lay.n_vns; ++v) {
        const std::uint32_t tau = static_cast<std::uint32_t>(v / items_per_position); // 0-based
        std::uint32_t* slots = g.vn_edges.data() + v * vn_degree;
        for (std::uint32_t k = 0; k < vn_degree; ++k) {
            bool placed = false;
            for (int attempt = 0; attempt < kPositionRetries && !placed; ++attempt) {
                const std::uint32_t pos = tau + static_cast<std::uint32_t>(rng.bounded(memory + 1));
                for (int r = 0; r < kCnRetries; ++r) {
                    const std::uint32_t cn =
                        pos * m_pos + static_cast<std::uint32_t>(rng.bounded(m_pos));
                    bool dup = false;
                    for (std::uint32_t k2 = 0; k2 < k; ++k2) dup |= slots[k2] == cn;
                    if (!dup) {
                        slots[k] = cn;
                        placed = true;
                        break;
                    }
                }
            }
            if (!placed) throw SamplingError("coupled attachment exhausted its retry budget");
        }
    }
    build_cn_csr(g);
    return g;
}

std::vector<std::uint32_t> residual_degrees(const BipartiteGraph& graph,
                                            const std::vector<bool>& resolved_vns) {
    if (resolved_vns.size() != graph.n_vns)
        throw std::invalid_argument("resolved bit set size must equal the VN count");
    std::vector<std::uint32_t> out(graph.n_cns, 0);
    for (std::uint32_t c = 0; c < graph.n_cns; ++c) {
        std::uint32_t d = 0;
        for (std::uint32_t v : graph.vns_of(c)) d += !resolved_vns[v];
        out[c] = d;
    }
    return out;
}

void write_edge_list(const BipartiteGraph& graph, std::ostream& out) {
    out << graph.n_vns << ' ' << graph.n_cns << ' ' << graph.vn_degree << ' '
        << graph.cn_degree_nominal;
    if (graph.coupled()) out << ' ' << graph.memory << ' ' << graph.chain_length;
    out << '\n';
    for (std::uint32_t v = 0; v < graph.n_vns; ++v) {
        for (std::uint32_t c : graph.cns_of(v)) out << v << ' ' << c << '\n';
    }
}

} // namespace qgt

#ifndef EPI_GRAPH_HPP
#define EPI_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace epi {

enum class EdgeKind : std::uint8_t { Short, Long };

struct Edge {
    std::uint32_t u;
    std::uint32_t v;
    EdgeKind kind;
};

/// Watts-Strogatz small-world network. Built once, immutable afterwards;
/// safe to share between concurrently running replicas.
///
/// Every edge is tagged at generation time: lattice edges left in place are
/// Short, rewired edges are Long. The edge list order is stable under a
/// fixed seed (rewired edges keep their original slot).
class Graph {
public:
    /// Ring lattice on n nodes with k/2 neighbours to each side, then each
    /// lattice edge is independently rewired with probability p: the lower
    /// endpoint is kept and the other endpoint is redrawn uniformly,
    /// avoiding self-loops and duplicates. A rewire that finds no valid
    /// target after n attempts leaves the edge in place tagged Short.
    ///
    /// Throws std::invalid_argument for odd k, k >= n, n < k+2 or p outside
    /// [0,1].
    static Graph generate(std::uint32_t n, std::uint32_t k, double p, std::uint64_t seed);

    /// Builds a graph from an explicit edge list (tests, file loading).
    /// Rejects self-loops and duplicate undirected edges.
    static Graph from_edges(std::uint32_t n, std::vector<Edge> edges);

    std::uint32_t node_count() const { return n_; }
    std::uint32_t ties_per_node() const { return k_; }
    double long_tie_fraction_param() const { return p_; }
    std::uint64_t seed() const { return seed_; }

    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t long_edge_count() const { return long_count_; }

    /// Neighbours of u as (node, edge index) pairs.
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& neighbors(std::uint32_t u) const {
        return adjacency_[u];
    }

    /// Edge-list dump: header "n k p seed", then one "u v kind" line per edge.
    void dump(std::ostream& os) const;
    static Graph load(std::istream& is);

private:
    Graph() = default;

    std::uint32_t n_ = 0;
    std::uint32_t k_ = 0;
    double p_ = 0.0;
    std::uint64_t seed_ = 0;
    std::size_t long_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adjacency_;
};

/// Hop distance between u and v along the ring: min(|u-v|, n-|u-v|).
std::uint32_t ring_distance(std::uint32_t u, std::uint32_t v, std::uint32_t n);

/// Contiguous ring blocks of n/n_regions nodes each; node i belongs to
/// region floor(i / (n/n_regions)). Requires n_regions to divide n.
class RegionPartition {
public:
    RegionPartition(std::uint32_t n, std::uint32_t n_regions);

    std::uint32_t n_regions() const { return n_regions_; }
    std::uint32_t region_of(std::uint32_t node) const { return node / block_; }

private:
    std::uint32_t n_regions_;
    std::uint32_t block_;
};

}  // namespace epi

#endif

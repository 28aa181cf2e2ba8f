#include "epi/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace epi {

namespace {

bool has_neighbor(const std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>& adj,
                  std::uint32_t u, std::uint32_t v) {
    for (const auto& [w, eid] : adj[u]) {
        (void)eid;
        if (w == v) return true;
    }
    return false;
}

}  // namespace

Graph Graph::generate(std::uint32_t n, std::uint32_t k, double p, std::uint64_t seed) {
    if (k % 2 != 0) throw std::invalid_argument("graph: k must be even");
    if (k >= n) throw std::invalid_argument("graph: k must be smaller than n");
    if (n < k + 2) throw std::invalid_argument("graph: need n >= k+2");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("graph: p must be in [0,1]");

    Graph g;
    g.n_ = n;
    g.k_ = k;
    g.p_ = p;
    g.seed_ = seed;
    g.edges_.reserve(static_cast<std::size_t>(n) * k / 2);
    g.adjacency_.assign(n, {});

    // Ring lattice: node i to its k/2 clockwise neighbours.
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 1; j <= k / 2; ++j) {
            std::uint32_t v = (i + j) % n;
            std::uint32_t eid = static_cast<std::uint32_t>(g.edges_.size());
            g.edges_.push_back({i, v, EdgeKind::Short});
            g.adjacency_[i].emplace_back(v, eid);
            g.adjacency_[v].emplace_back(i, eid);
        }
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::uint32_t> any_node(0, n - 1);

    for (std::uint32_t eid = 0; eid < g.edges_.size(); ++eid) {
        if (unit(rng) >= p) continue;
        Edge& e = g.edges_[eid];
        std::uint32_t u = e.u;
        std::uint32_t old_v = e.v;
        // Keep u, redraw the other endpoint. Give up after n attempts and
        // leave the lattice edge in place (only relevant for tiny n).
        bool rewired = false;
        for (std::uint32_t attempt = 0; attempt < n; ++attempt) {
            std::uint32_t w = any_node(rng);
            if (w == u || w == old_v || has_neighbor(g.adjacency_, u, w)) continue;
            auto& au = g.adjacency_[u];
            for (auto& nb : au) {
                if (nb.second == eid) {
                    nb.first = w;
                    break;
                }
            }
            auto& av = g.adjacency_[old_v];
            av.erase(std::find_if(av.begin(), av.end(),
                                  [eid](const auto& nb) { return nb.second == eid; }));
            g.adjacency_[w].emplace_back(u, eid);
            e.v = w;
            e.kind = EdgeKind::Long;
            rewired = true;
            break;
        }
        if (rewired) ++g.long_count_;
    }
    return g;
}

Graph Graph::from_edges(std::uint32_t n, std::vector<Edge> edges) {
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adjacency_.assign(n, {});
    for (std::uint32_t eid = 0; eid < g.edges_.size(); ++eid) {
        const Edge& e = g.edges_[eid];
        if (e.u >= n || e.v >= n) throw std::invalid_argument("graph: endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("graph: self-loop");
        if (has_neighbor(g.adjacency_, e.u, e.v))
            throw std::invalid_argument("graph: duplicate edge");
        g.adjacency_[e.u].emplace_back(e.v, eid);
        g.adjacency_[e.v].emplace_back(e.u, eid);
        if (e.kind == EdgeKind::Long) ++g.long_count_;
    }
    return g;
}

void Graph::dump(std::ostream& os) const {
    os << n_ << ' ' << k_ << ' ' << p_ << ' ' << seed_ << '\n';
    for (const Edge& e : edges_) {
        os << e.u << ' ' << e.v << ' ' << (e.kind == EdgeKind::Short ? "short" : "long") << '\n';
    }
}

Graph Graph::load(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw std::runtime_error("graph load: empty input");
    std::istringstream hs(header);
    std::uint32_t n = 0, k = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    if (!(hs >> n >> k >> p >> seed)) throw std::runtime_error("graph load: bad header");

    std::vector<Edge> edges;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::uint32_t u = 0, v = 0;
        std::string kind;
        if (!(ls >> u >> v >> kind)) throw std::runtime_error("graph load: bad edge line");
        if (kind != "short" && kind != "long")
            throw std::runtime_error("graph load: unknown edge kind '" + kind + "'");
        edges.push_back({u, v, kind == "short" ? EdgeKind::Short : EdgeKind::Long});
    }
    Graph g = from_edges(n, std::move(edges));
    g.k_ = k;
    g.p_ = p;
    g.seed_ = seed;
    return g;
}

std::uint32_t ring_distance(std::uint32_t u, std::uint32_t v, std::uint32_t n) {
    if (u >= n || v >= n) throw std::invalid_argument("ring_distance: node out of range");
    std::uint32_t d = u > v ? u - v : v - u;
    return std::min(d, n - d);
}

RegionPartition::RegionPartition(std::uint32_t n, std::uint32_t n_regions)
    : n_regions_(n_regions) {
    if (n_regions == 0 || n % n_regions != 0)
        throw std::invalid_argument("partition: n_regions must divide n");
    block_ = n / n_regions;
}

}  // namespace epi

#include "qroute/topology.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace qroute {

namespace {

constexpr std::uint32_t kUnreached = 0xFFFFFFFFu;

void add_edge(CouplingGraph& g, std::uint32_t u, std::uint32_t v) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
}

void finalize(CouplingGraph& g) {
    for (auto& nbrs : g.adj) {
        std::sort(nbrs.begin(), nbrs.end());
    }
}

std::vector<std::uint32_t> bfs_dist(const CouplingGraph& g, std::uint32_t src) {
    std::vector<std::uint32_t> dist(g.num_nodes, kUnreached);
    std::deque<std::uint32_t> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        const std::uint32_t u = queue.front();
        queue.pop_front();
        for (std::uint32_t v : g.adj[u]) {
            if (dist[v] == kUnreached) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

}  // namespace

const char* topology_name(TopologyKind kind) {
    switch (kind) {
        case TopologyKind::Star: return "star";
        case TopologyKind::HeavyHex: return "heavy_hex";
        case TopologyKind::Square: return "square";
        case TopologyKind::Path: return "path";
        case TopologyKind::Custom: return "custom";
    }
    return "?";
}

bool CouplingGraph::adjacent(std::uint32_t u, std::uint32_t v) const {
    const auto& nbrs = adj[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::size_t CouplingGraph::num_edges() const {
    std::size_t twice = 0;
    for (const auto& nbrs : adj) {
        twice += nbrs.size();
    }
    return twice / 2;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> CouplingGraph::edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(num_edges());
    for (std::uint32_t u = 0; u < num_nodes; ++u) {
        for (std::uint32_t v : adj[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

std::string CouplingGraph::param_string() const {
    switch (kind) {
        case TopologyKind::Star:
        case TopologyKind::Path:
            return "n=" + std::to_string(param_a);
        case TopologyKind::Square:
            return std::to_string(param_a) + "x" + std::to_string(param_b);
        case TopologyKind::HeavyHex:
            return "d=" + std::to_string(param_a);
        case TopologyKind::Custom:
            return "nodes=" + std::to_string(num_nodes);
    }
    return "";
}

CouplingGraph build_star(std::uint32_t n) {
    if (n < 2) {
        throw std::invalid_argument("build_star: n must be >= 2");
    }
    CouplingGraph g{n, std::vector<std::vector<std::uint32_t>>(n),
                    TopologyKind::Star, n, 0};
    for (std::uint32_t i = 1; i < n; ++i) {
        add_edge(g, 0, i);
    }
    finalize(g);
    return g;
}

CouplingGraph build_square_lattice(std::uint32_t rows, std::uint32_t cols) {
    if (static_cast<std::uint64_t>(rows) * cols < 2) {
        throw std::invalid_argument("build_square_lattice: rows*cols must be >= 2");
    }
    const std::uint32_t n = rows * cols;
    CouplingGraph g{n, std::vector<std::vector<std::uint32_t>>(n),
                    TopologyKind::Square, rows, cols};
    for (std::uint32_t r = 0; r < rows; ++r) {
        for (std::uint32_t c = 0; c < cols; ++c) {
            const std::uint32_t id = r * cols + c;
            if (c + 1 < cols) {
                add_edge(g, id, id + 1);
            }
            if (r + 1 < rows) {
                add_edge(g, id, id + cols);
            }
        }
    }
    finalize(g);
    return g;
}

CouplingGraph build_heavy_hex(std::uint32_t d) {
    if (d < 3 || d % 2 == 0) {
        throw std::invalid_argument("build_heavy_hex: d must be odd and >= 3");
    }
    const std::uint32_t n_data = d * d;
    const std::uint32_t n_flag = d * (d - 1);
    std::uint32_t n_bridge = 0;
    for (std::uint32_t gap = 0; gap + 1 < d; ++gap) {
        n_bridge += (gap % 2 == 0) ? (d + 1) / 2 : (d - 1) / 2;
    }
    const std::uint32_t n = n_data + n_flag + n_bridge;

    CouplingGraph g{n, std::vector<std::vector<std::uint32_t>>(n),
                    TopologyKind::HeavyHex, d, 0};
    const auto data_id = [d](std::uint32_t r, std::uint32_t c) { return r * d + c; };

    // flags: F[r][c] between D[r][c] and D[r][c+1]
    std::uint32_t next = n_data;
    for (std::uint32_t r = 0; r < d; ++r) {
        for (std::uint32_t c = 0; c + 1 < d; ++c) {
            add_edge(g, next, data_id(r, c));
            add_edge(g, next, data_id(r, c + 1));
            ++next;
        }
    }
    // bridges: even gaps on even columns, odd gaps on odd columns
    for (std::uint32_t gap = 0; gap + 1 < d; ++gap) {
        for (std::uint32_t c = gap % 2; c < d; c += 2) {
            add_edge(g, next, data_id(gap, c));
            add_edge(g, next, data_id(gap + 1, c));
            ++next;
        }
    }
    finalize(g);
    return g;
}

CouplingGraph build_path(std::uint32_t n) {
    if (n < 2) {
        throw std::invalid_argument("build_path: n must be >= 2");
    }
    CouplingGraph g{n, std::vector<std::vector<std::uint32_t>>(n),
                    TopologyKind::Path, n, 0};
    for (std::uint32_t i = 0; i + 1 < n; ++i) {
        add_edge(g, i, i + 1);
    }
    finalize(g);
    return g;
}

DistanceMatrix all_pairs_distances(const CouplingGraph& g) {
    DistanceMatrix m{g.num_nodes, {}};
    m.dist.resize(static_cast<std::size_t>(g.num_nodes) * g.num_nodes);
    for (std::uint32_t src = 0; src < g.num_nodes; ++src) {
        const auto row = bfs_dist(g, src);
        for (std::uint32_t v = 0; v < g.num_nodes; ++v) {
            if (row[v] == kUnreached) {
                throw std::invalid_argument("all_pairs_distances: graph is disconnected");
            }
            m.dist[static_cast<std::size_t>(src) * g.num_nodes + v] = row[v];
        }
    }
    return m;
}

std::vector<std::uint32_t> shortest_path(const CouplingGraph& g, std::uint32_t a,
                                         std::uint32_t b) {
    if (a == b) {
        throw std::invalid_argument("shortest_path: endpoints must differ");
    }
    const auto dist = bfs_dist(g, b);
    if (dist[a] == kUnreached) {
        throw std::invalid_argument("shortest_path: no path between endpoints");
    }
    std::vector<std::uint32_t> path{a};
    std::uint32_t cur = a;
    while (cur != b) {
        // neighbor lists are sorted, so the first match is the smallest id
        for (std::uint32_t v : g.adj[cur]) {
            if (dist[v] + 1 == dist[cur]) {
                cur = v;
                break;
            }
        }
        path.push_back(cur);
    }
    return path;
}

std::string to_edge_list(const CouplingGraph& g) {
    std::string out = std::to_string(g.num_nodes) + "\n";
    for (const auto& [u, v] : g.edges()) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

}  // namespace qroute

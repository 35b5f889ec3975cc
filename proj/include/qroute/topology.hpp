#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qroute {

enum class TopologyKind : std::uint8_t { Star, HeavyHex, Square, Path, Custom };

const char* topology_name(TopologyKind kind);

/// Undirected, connected, simple physical-qubit adjacency. Neighbor lists
/// are kept sorted so every traversal is deterministic.
struct CouplingGraph {
    std::uint32_t num_nodes = 0;
    std::vector<std::vector<std::uint32_t>> adj;
    TopologyKind kind = TopologyKind::Custom;
    std::uint32_t param_a = 0;  // star/path: n, square: rows, heavy-hex: d
    std::uint32_t param_b = 0;  // square: cols

    bool adjacent(std::uint32_t u, std::uint32_t v) const;
    std::size_t num_edges() const;
    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;
    /// Builder parameters in display form ("n=5", "3x3", "d=7").
    std::string param_string() const;
};

/// Hub-and-spoke graph: node 0 is the center, edges {0, i} for i in 1..n-1.
CouplingGraph build_star(std::uint32_t n);

/// Row-major grid: node id = r*cols + c, edges between grid neighbors.
CouplingGraph build_square_lattice(std::uint32_t rows, std::uint32_t cols);

/// Degree-<=3 heavy-hex style lattice for odd d >= 3.
///
/// Layout: d x d data qubits D[r][c]; one flag qubit between each
/// horizontally adjacent data pair; bridge qubits linking vertically
/// adjacent rows, placed on even columns in even row gaps and odd columns
/// in odd row gaps. Ids are assigned data first (row-major), then flags
/// (row-major), then bridges (gap-major, ascending column).
/// Total nodes: (5*d*d - 3*d) / 2.
CouplingGraph build_heavy_hex(std::uint32_t d);

/// Linear chain, edges {i, i+1}.
CouplingGraph build_path(std::uint32_t n);

struct DistanceMatrix {
    std::uint32_t num_nodes = 0;
    std::vector<std::uint32_t> dist;  // dense, row-major

    std::uint32_t operator()(std::uint32_t u, std::uint32_t v) const {
        return dist[static_cast<std::size_t>(u) * num_nodes + v];
    }
};

/// BFS hop counts between every node pair. Throws if the graph is
/// disconnected.
DistanceMatrix all_pairs_distances(const CouplingGraph& g);

/// The lexicographically smallest shortest path from a to b, as a node
/// sequence starting at a and ending at b. BFS from b records distances,
/// then a greedy descent from a always picks the smallest-id neighbor one
/// hop closer.
std::vector<std::uint32_t> shortest_path(const CouplingGraph& g, std::uint32_t a,
                                         std::uint32_t b);

/// Edge-list text form: first line num_nodes, then one "u v" per line,
/// sorted.
std::string to_edge_list(const CouplingGraph& g);

}  // namespace qroute

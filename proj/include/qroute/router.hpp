#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qroute/circuit.hpp"
#include "qroute/topology.hpp"

namespace qroute {

/// phys_to_log entry for a physical qubit holding no logical qubit.
inline constexpr std::int32_t kUnoccupied = -1;

/// Bijection from logical qubits onto a subset of the physical qubits.
struct Mapping {
    std::vector<std::uint32_t> log_to_phys;
    std::vector<std::int32_t> phys_to_log;  // kUnoccupied where empty

    static Mapping identity(std::uint32_t n_logical, std::uint32_t n_physical);

    std::uint32_t phys_of(std::uint32_t logical) const { return log_to_phys[logical]; }

    /// Exchanges the logical contents of physical slots p and q; either may
    /// be unoccupied.
    void apply_swap(std::uint32_t p, std::uint32_t q);

    bool operator==(const Mapping&) const = default;
};

enum class InitialMapStrategy : std::uint8_t { Identity, DegreeMatched };
enum class RouteStrategy : std::uint8_t { Baseline, Lookahead };

const char* strategy_name(RouteStrategy s);
const char* mapping_name(InitialMapStrategy s);

/// Identity places logical l on physical l. DegreeMatched pairs logical
/// qubits sorted by descending two-qubit-gate participation with physical
/// nodes sorted by descending degree (ties on index in both orders).
Mapping initial_mapping(InitialMapStrategy strategy, const Circuit& c,
                        const CouplingGraph& g);

/// A circuit rewritten onto physical qubits: every two-qubit gate acts on
/// coupled qubits, and replaying the gates from initial_mapping (each
/// routing SWAP transposing its phys_to_log entries) yields final_mapping.
struct RoutedCircuit {
    CouplingGraph graph;
    Mapping initial_mapping;
    Mapping final_mapping;
    std::vector<Gate> gates;  // physical-qubit operands
    std::uint32_t num_logical = 0;
};

struct RoutingStats {
    std::uint64_t n_swap_inserted = 0;
    /// (source gate index, SWAPs inserted to make it executable); only
    /// gates that needed SWAPs appear.
    std::vector<std::pair<std::size_t, std::uint32_t>> per_gate_swaps;
};

struct RoutingResult {
    RoutedCircuit circuit;
    RoutingStats stats;
};

/// Inserts routing SWAPs so every two-qubit gate acts on adjacent physical
/// qubits.
///
/// Baseline walks the gate list in order; a non-adjacent pair is resolved
/// by moving the logical at the smaller physical id along the
/// lexicographically smallest shortest path until adjacent.
///
/// Lookahead keeps a front layer of ready two-qubit gates and, when none is
/// executable, greedily applies the SWAP (among edges touching front-layer
/// operands) minimizing total front-layer distance plus 0.5 times the
/// distance over the next 20 upcoming two-qubit gates, ties broken by the
/// smallest (min id, max id) pair. If the best score fails to strictly
/// improve for num_nodes consecutive SWAPs, it falls back to baseline path
/// steps for the oldest front gate until that gate executes.
RoutingResult route(const Circuit& c, const CouplingGraph& g, const Mapping& m0,
                    RouteStrategy strategy);

/// True iff rc is a faithful routing of c: all two-qubit gates adjacent,
/// and dropping routing SWAPs while replaying the mapping reproduces the
/// original gate sequence exactly.
bool verify_routed(const Circuit& c, const RoutedCircuit& rc);

/// Exhaustive BFS oracle over (mapping, gates-completed) states; returns
/// the minimum number of routing SWAPs that completes all two-qubit gates
/// in order, or nullopt when it exceeds `budget`. Only for tiny instances
/// (<= 6 physical qubits, <= 3 two-qubit gates, budget <= 6).
std::optional<std::uint32_t> brute_force_min_swaps(const Circuit& c,
                                                   const CouplingGraph& g,
                                                   const Mapping& m0,
                                                   std::uint32_t budget);

}  // namespace qroute

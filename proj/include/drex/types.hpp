#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "drex/errors.hpp"

namespace drex {

using Bytes = std::int64_t;
using ItemId = std::int64_t;

// One storage node: the unit of placement. Bandwidths are bytes/second,
// afr is the annual failure probability.
struct StorageNode {
    int id = 0;
    Bytes capacity = 0;
    Bytes free = 0;
    double write_bw = 0.0;
    double read_bw = 0.0;
    double afr = 0.0;
    bool alive = true;

    Bytes used() const { return capacity - free; }
};

// One storage request: the unit of work.
struct DataItem {
    ItemId id = 0;
    Bytes size = 0;
    double submit_time = 0.0;      // seconds, trace-relative epoch
    double retention_days = 0.0;
    double reliability_target = 0.0;  // in (0,1)
};

// ceil(size / k) in integer bytes.
inline Bytes chunk_size_for(Bytes size, int k) {
    return (size + static_cast<Bytes>(k) - 1) / static_cast<Bytes>(k);
}

// Chosen coding parameters plus node mapping for one stored item.
// nodes holds k + p distinct node ids, one chunk per node.
struct Placement {
    ItemId item_id = 0;
    int k = 0;
    int p = 0;
    std::vector<int> nodes;
    Bytes chunk_size = 0;

    int total_chunks() const { return k + p; }
    Bytes stored_bytes() const { return chunk_size * static_cast<Bytes>(nodes.size()); }
};

// Mutable free-space/liveness view the simulator threads through time.
// Single-writer: one simulation owns one state.
class ClusterState {
public:
    ClusterState() = default;
    explicit ClusterState(std::vector<StorageNode> nodes) : nodes_(std::move(nodes)) {}

    const std::vector<StorageNode>& nodes() const { return nodes_; }
    const StorageNode& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
    StorageNode& node(int id) { return nodes_.at(static_cast<std::size_t>(id)); }

    const std::map<ItemId, Placement>& placements() const { return placements_; }
    bool has_placement(ItemId id) const { return placements_.count(id) != 0; }
    const Placement& placement(ItemId id) const;

    double clock() const { return clock_; }
    void set_clock(double seconds) { clock_ = seconds; }

    std::size_t live_count() const;
    Bytes total_live_capacity() const;
    Bytes total_live_used() const;

    // Debits chunk_size from every mapped node and records the placement.
    // Throws DeadNode / CapacityExceeded without mutating anything.
    void apply_placement(const Placement& placement);

    // Credits chunk_size back to each surviving mapped node and deletes the
    // placement. Dead nodes hold nothing reclaimable. Throws UnknownItem.
    void remove_placement(ItemId item_id);

    // Marks a node dead. Its free space is no longer part of any live total;
    // placements referencing it are left to the caller (see simulator recovery).
    void kill_node(int id) { node(id).alive = false; }

    // Swaps node `from` for node `to` in an existing placement, debiting the
    // replacement chunk from `to`. Used by post-failure recovery.
    void replace_placement_node(ItemId item_id, int from, int to);

private:
    std::vector<StorageNode> nodes_;
    std::map<ItemId, Placement> placements_;
    double clock_ = 0.0;
};

} // namespace drex

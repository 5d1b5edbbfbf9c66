#include "drex/types.hpp"

#include <algorithm>
#include <set>

namespace drex {

const Placement& ClusterState::placement(ItemId id) const {
    auto it = placements_.find(id);
    if (it == placements_.end()) throw UnknownItem(id);
    return it->second;
}

std::size_t ClusterState::live_count() const {
    return static_cast<std::size_t>(
        std::count_if(nodes_.begin(), nodes_.end(), [](const StorageNode& n) { return n.alive; }));
}

Bytes ClusterState::total_live_capacity() const {
    Bytes total = 0;
    for (const auto& n : nodes_)
        if (n.alive) total += n.capacity;
    return total;
}

Bytes ClusterState::total_live_used() const {
    Bytes total = 0;
    for (const auto& n : nodes_)
        if (n.alive) total += n.used();
    return total;
}

void ClusterState::apply_placement(const Placement& placement) {
    std::set<int> distinct(placement.nodes.begin(), placement.nodes.end());
    if (distinct.size() != placement.nodes.size())
        throw ConfigInvalid("placement maps the same node twice");
    if (placement.nodes.size() != static_cast<std::size_t>(placement.k + placement.p))
        throw ConfigInvalid("placement node count does not equal k + p");

    // Validate all nodes before mutating any.
    for (int id : placement.nodes) {
        const StorageNode& n = node(id);
        if (!n.alive) throw DeadNode(id);
        if (n.free < placement.chunk_size) throw CapacityExceeded(id);
    }
    for (int id : placement.nodes) node(id).free -= placement.chunk_size;
    placements_[placement.item_id] = placement;
}

void ClusterState::remove_placement(ItemId item_id) {
    auto it = placements_.find(item_id);
    if (it == placements_.end()) throw UnknownItem(item_id);
    for (int id : it->second.nodes) {
        StorageNode& n = node(id);
        if (n.alive) n.free += it->second.chunk_size;
    }
    placements_.erase(it);
}

void ClusterState::replace_placement_node(ItemId item_id, int from, int to) {
    auto it = placements_.find(item_id);
    if (it == placements_.end()) throw UnknownItem(item_id);
    Placement& pl = it->second;
    auto pos = std::find(pl.nodes.begin(), pl.nodes.end(), from);
    if (pos == pl.nodes.end()) throw ConfigInvalid("node to replace is not in the mapping");
    StorageNode& dst = node(to);
    if (!dst.alive) throw DeadNode(to);
    if (dst.free < pl.chunk_size) throw CapacityExceeded(to);
    dst.free -= pl.chunk_size;
    *pos = to;
}

} // namespace drex

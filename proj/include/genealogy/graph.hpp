#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "genealogy/errors.hpp"
#include "genealogy/types.hpp"

namespace genealogy {

/// Dense node handle. Indices are assigned in ascending id order at build
/// time, so iterating indices 0..n-1 visits scholars in lexicographic id
/// order; every deterministic sweep in the library relies on that.
using NodeIndex = std::uint32_t;

/// Marker for "no directed path" in BFS distance arrays.
inline constexpr std::uint32_t kNoPath = std::numeric_limits<std::uint32_t>::max();

/// Orientation of a distance query relative to the queried node.
/// FromAncestors measures j -> i path lengths (how far upstream j sits);
/// ToDescendants measures i -> j path lengths.
enum class Direction { FromAncestors, ToDescendants };

struct ComponentInfo {
    std::vector<std::string> members; // sorted ascending
    std::size_t laureate_count = 0;
};

struct ComponentCensus {
    /// Ordered by laureate count descending, ties by smallest member id.
    std::vector<ComponentInfo> components;
    /// laureate count per component -> number of such components.
    std::map<std::size_t, std::size_t> histogram;
};

struct NcaResult {
    std::string id;
    std::uint32_t max_distance = 0;
    std::uint64_t sum_distance = 0;
};

/// Immutable advisor -> student DAG with forward/reverse adjacency indices.
///
/// Built once via build(); every query afterwards is read-only and safe to
/// run concurrently. Students may have several advisors (the structure is a
/// general DAG, not a tree). "Ancestry" always means the transitive closure
/// along reverse edges, "descent" along forward edges, excluding the node
/// itself.
class GenealogyGraph {
public:
    /// Validates and indexes the input. Throws DuplicateIdError,
    /// DanglingEdgeError or CycleError (with one offending cycle spelled
    /// out). Duplicate (advisor, student) pairs collapse to one edge.
    static GenealogyGraph build(std::vector<Scholar> scholars, const std::vector<Edge>& edges);

    std::size_t node_count() const noexcept { return scholars_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::size_t laureate_count() const noexcept { return laureates_.size(); }

    bool contains(std::string_view id) const noexcept;
    /// Throws UnknownIdError.
    const Scholar& scholar(std::string_view id) const;

    /// All ids, sorted ascending.
    const std::vector<std::string>& ids() const noexcept { return ids_; }
    /// Ids of scholars with at least one prize, sorted ascending.
    std::vector<std::string> laureate_ids() const;

    /// Length in edges of the longest directed path in the DAG. Zero for an
    /// edgeless graph. Upper bound for any generation index that can occur.
    int max_depth() const noexcept { return max_depth_; }

    /// Weakly connected components (edge direction ignored).
    ComponentCensus weak_components() const;

    /// Transitive closure along reverse edges, excluding id itself.
    std::set<std::string> ancestors(std::string_view id) const;
    /// Transitive closure along forward edges, excluding id itself.
    std::set<std::string> descendants(std::string_view id) const;

    /// Shortest directed distances between id and each member of targets,
    /// oriented per direction. Unreachable targets map to +infinity.
    std::map<std::string, double> distance_to_set(std::string_view id,
                                                  const std::set<std::string>& targets,
                                                  Direction direction) const;

    /// { k : shortest directed distance k -> id == n }. Requires n >= 1.
    std::set<std::string> generation_ancestors(std::string_view id, int n) const;

    /// Over the common proper ancestors of all of `ids`, picks the node
    /// minimizing the maximum distance to the set, ties broken by smaller
    /// distance sum, then lexicographic id. nullopt when no common ancestor
    /// exists. Requires |ids| >= 1.
    std::optional<NcaResult> nearest_common_ancestor(const std::set<std::string>& ids) const;

    /// For every node, the number of laureates in its descendant closure.
    std::map<std::string, std::size_t> laureate_descendant_counts() const;

    // --- index-level surface, shared with the metrics/stats modules ---

    /// Throws UnknownIdError.
    NodeIndex index_of(std::string_view id) const;
    const std::string& id_of(NodeIndex v) const { return ids_[v]; }
    const Scholar& scholar_at(NodeIndex v) const { return scholars_[v]; }

    std::span<const NodeIndex> students_of(NodeIndex v) const;
    std::span<const NodeIndex> advisors_of(NodeIndex v) const;

    /// Laureate indices, ascending.
    const std::vector<NodeIndex>& laureates() const noexcept { return laureates_; }
    bool is_laureate(NodeIndex v) const { return field_masks_[v] != 0; }

    /// Bitmask over PrizeField values (bit 1 << field set when the scholar
    /// holds a prize in that field).
    std::uint8_t field_mask(NodeIndex v) const { return field_masks_[v]; }
    /// Earliest prize year; kNoPrizeYear for non-laureates.
    int earliest_prize_year(NodeIndex v) const { return earliest_year_[v]; }
    static constexpr int kNoPrizeYear = std::numeric_limits<int>::max();

    std::uint32_t component_of(NodeIndex v) const { return component_[v]; }
    std::uint32_t component_count() const noexcept { return component_count_; }
    /// Node indices of one weak component, ascending.
    std::vector<NodeIndex> component_members(std::uint32_t comp) const;

    /// Per-node shortest distances to/from `source` (kNoPath when absent).
    /// FromAncestors walks reverse edges (result[k] = dist k -> source),
    /// ToDescendants walks forward edges (result[k] = dist source -> k).
    std::vector<std::uint32_t> bfs_distances(NodeIndex source, Direction direction) const;

private:
    GenealogyGraph() = default;

    std::vector<NodeIndex> closure_indices(NodeIndex v, Direction direction) const;

    std::vector<std::string> ids_;      // sorted; position == NodeIndex
    std::vector<Scholar> scholars_;     // aligned with ids_
    std::vector<std::uint8_t> field_masks_;
    std::vector<int> earliest_year_;
    std::vector<NodeIndex> laureates_;

    // CSR adjacency, neighbor lists sorted ascending.
    std::vector<std::uint32_t> fwd_offsets_, rev_offsets_;
    std::vector<NodeIndex> fwd_targets_, rev_targets_;

    std::vector<std::uint32_t> component_;
    std::uint32_t component_count_ = 0;
    std::size_t edge_count_ = 0;
    int max_depth_ = 0;

    // id -> index, parallel arrays for binary search over ids_.
    NodeIndex find(std::string_view id) const noexcept; // kNotFound when absent
    static constexpr NodeIndex kNotFound = std::numeric_limits<NodeIndex>::max();
};

} // namespace genealogy

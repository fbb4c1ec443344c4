#include "genealogy/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <unordered_map>

namespace genealogy {

namespace {

struct IndexedEdge {
    NodeIndex advisor;
    NodeIndex student;
    friend auto operator<=>(const IndexedEdge&, const IndexedEdge&) = default;
};

void build_csr(std::size_t n, const std::vector<IndexedEdge>& edges, bool forward,
               std::vector<std::uint32_t>& offsets, std::vector<NodeIndex>& targets) {
    offsets.assign(n + 1, 0);
    for (const auto& e : edges) ++offsets[(forward ? e.advisor : e.student) + 1];
    for (std::size_t i = 1; i <= n; ++i) offsets[i] += offsets[i - 1];
    targets.resize(edges.size());
    std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& e : edges) {
        const NodeIndex src = forward ? e.advisor : e.student;
        targets[cursor[src]++] = forward ? e.student : e.advisor;
    }
    for (std::size_t v = 0; v < n; ++v)
        std::sort(targets.begin() + offsets[v], targets.begin() + offsets[v + 1]);
}

} // namespace

GenealogyGraph GenealogyGraph::build(std::vector<Scholar> scholars,
                                     const std::vector<Edge>& edges) {
    GenealogyGraph g;

    std::sort(scholars.begin(), scholars.end(),
              [](const Scholar& a, const Scholar& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < scholars.size(); ++i)
        if (scholars[i].id == scholars[i - 1].id) throw DuplicateIdError(scholars[i].id);

    const std::size_t n = scholars.size();
    g.ids_.reserve(n);
    for (const auto& s : scholars) g.ids_.push_back(s.id);
    g.scholars_ = std::move(scholars);

    g.field_masks_.assign(n, 0);
    g.earliest_year_.assign(n, kNoPrizeYear);
    for (std::size_t v = 0; v < n; ++v) {
        for (const Prize& p : g.scholars_[v].prizes) {
            g.field_masks_[v] |= static_cast<std::uint8_t>(1u << static_cast<unsigned>(p.field));
            g.earliest_year_[v] = std::min(g.earliest_year_[v], p.year);
        }
        if (g.field_masks_[v] != 0) g.laureates_.push_back(static_cast<NodeIndex>(v));
    }

    std::vector<IndexedEdge> indexed;
    indexed.reserve(edges.size());
    for (const Edge& e : edges) {
        const NodeIndex a = g.find(e.advisor);
        if (a == kNotFound) throw DanglingEdgeError(e.advisor, e.advisor, e.student);
        const NodeIndex s = g.find(e.student);
        if (s == kNotFound) throw DanglingEdgeError(e.student, e.advisor, e.student);
        if (a == s) throw CycleError({e.advisor});
        indexed.push_back({a, s});
    }
    std::sort(indexed.begin(), indexed.end());
    indexed.erase(std::unique(indexed.begin(), indexed.end()), indexed.end());
    g.edge_count_ = indexed.size();

    build_csr(n, indexed, true, g.fwd_offsets_, g.fwd_targets_);
    build_csr(n, indexed, false, g.rev_offsets_, g.rev_targets_);

    // Kahn's algorithm; leftover nodes sit on at least one directed cycle.
    std::vector<std::uint32_t> indegree(n, 0);
    for (std::size_t v = 0; v < n; ++v)
        indegree[v] = g.rev_offsets_[v + 1] - g.rev_offsets_[v];
    std::vector<NodeIndex> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (indegree[v] == 0) ready.push_back(static_cast<NodeIndex>(v));
    std::vector<NodeIndex> topo;
    topo.reserve(n);
    while (!ready.empty()) {
        const NodeIndex v = ready.back();
        ready.pop_back();
        topo.push_back(v);
        for (const NodeIndex w : g.students_of(v))
            if (--indegree[w] == 0) ready.push_back(w);
    }
    if (topo.size() != n) {
        // Undrained nodes (indegree still > 0) each keep an undrained
        // advisor, so a backward walk inside that set must close a cycle.
        NodeIndex start = 0;
        while (indegree[start] == 0) ++start;
        std::vector<NodeIndex> path;
        std::unordered_map<NodeIndex, std::size_t> pos;
        NodeIndex cur = start;
        while (!pos.contains(cur)) {
            pos.emplace(cur, path.size());
            path.push_back(cur);
            for (const NodeIndex w : g.advisors_of(cur))
                if (indegree[w] > 0) {
                    cur = w;
                    break;
                }
        }
        std::vector<std::string> cycle; // reverse the backward walk
        for (std::size_t i = path.size(); i-- > pos.at(cur);) cycle.push_back(g.ids_[path[i]]);
        throw CycleError(std::move(cycle));
    }

    // longest directed path via DP in topological order
    std::vector<int> depth(n, 0);
    for (const NodeIndex v : topo)
        for (const NodeIndex w : g.students_of(v)) depth[w] = std::max(depth[w], depth[v] + 1);
    g.max_depth_ = n == 0 ? 0 : *std::max_element(depth.begin(), depth.end());

    // weak components by BFS over the union adjacency
    g.component_.assign(n, 0);
    std::vector<bool> seen(n, false);
    std::uint32_t comp = 0;
    std::vector<NodeIndex> stack;
    for (std::size_t v0 = 0; v0 < n; ++v0) {
        if (seen[v0]) continue;
        stack.push_back(static_cast<NodeIndex>(v0));
        seen[v0] = true;
        while (!stack.empty()) {
            const NodeIndex v = stack.back();
            stack.pop_back();
            g.component_[v] = comp;
            for (const NodeIndex w : g.students_of(v))
                if (!seen[w]) seen[w] = true, stack.push_back(w);
            for (const NodeIndex w : g.advisors_of(v))
                if (!seen[w]) seen[w] = true, stack.push_back(w);
        }
        ++comp;
    }
    g.component_count_ = comp;

    return g;
}

NodeIndex GenealogyGraph::find(std::string_view id) const noexcept {
    const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return kNotFound;
    return static_cast<NodeIndex>(it - ids_.begin());
}

bool GenealogyGraph::contains(std::string_view id) const noexcept {
    return find(id) != kNotFound;
}

const Scholar& GenealogyGraph::scholar(std::string_view id) const {
    return scholars_[index_of(id)];
}

NodeIndex GenealogyGraph::index_of(std::string_view id) const {
    const NodeIndex v = find(id);
    if (v == kNotFound) throw UnknownIdError(std::string(id));
    return v;
}

std::vector<std::string> GenealogyGraph::laureate_ids() const {
    std::vector<std::string> out;
    out.reserve(laureates_.size());
    for (const NodeIndex v : laureates_) out.push_back(ids_[v]);
    return out;
}

std::span<const NodeIndex> GenealogyGraph::students_of(NodeIndex v) const {
    return {fwd_targets_.data() + fwd_offsets_[v], fwd_targets_.data() + fwd_offsets_[v + 1]};
}

std::span<const NodeIndex> GenealogyGraph::advisors_of(NodeIndex v) const {
    return {rev_targets_.data() + rev_offsets_[v], rev_targets_.data() + rev_offsets_[v + 1]};
}

std::vector<NodeIndex> GenealogyGraph::component_members(std::uint32_t comp) const {
    std::vector<NodeIndex> out;
    for (std::size_t v = 0; v < component_.size(); ++v)
        if (component_[v] == comp) out.push_back(static_cast<NodeIndex>(v));
    return out;
}

std::vector<std::uint32_t> GenealogyGraph::bfs_distances(NodeIndex source,
                                                         Direction direction) const {
    std::vector<std::uint32_t> dist(node_count(), kNoPath);
    dist[source] = 0;
    std::queue<NodeIndex> queue;
    queue.push(source);
    while (!queue.empty()) {
        const NodeIndex v = queue.front();
        queue.pop();
        const auto next =
            direction == Direction::FromAncestors ? advisors_of(v) : students_of(v);
        for (const NodeIndex w : next)
            if (dist[w] == kNoPath) {
                dist[w] = dist[v] + 1;
                queue.push(w);
            }
    }
    return dist;
}

ComponentCensus GenealogyGraph::weak_components() const {
    std::vector<ComponentInfo> infos(component_count_);
    for (std::size_t v = 0; v < node_count(); ++v) {
        ComponentInfo& info = infos[component_[v]];
        info.members.push_back(ids_[v]); // ids_ is sorted, so members stay sorted
        if (field_masks_[v] != 0) ++info.laureate_count;
    }
    std::sort(infos.begin(), infos.end(), [](const ComponentInfo& a, const ComponentInfo& b) {
        if (a.laureate_count != b.laureate_count) return a.laureate_count > b.laureate_count;
        return a.members.front() < b.members.front();
    });

    ComponentCensus census;
    for (const auto& info : infos) ++census.histogram[info.laureate_count];
    census.components = std::move(infos);
    return census;
}

std::vector<NodeIndex> GenealogyGraph::closure_indices(NodeIndex v, Direction direction) const {
    const auto dist = bfs_distances(v, direction);
    std::vector<NodeIndex> out;
    for (std::size_t k = 0; k < dist.size(); ++k)
        if (k != v && dist[k] != kNoPath) out.push_back(static_cast<NodeIndex>(k));
    return out;
}

std::set<std::string> GenealogyGraph::ancestors(std::string_view id) const {
    std::set<std::string> out;
    for (const NodeIndex k : closure_indices(index_of(id), Direction::FromAncestors))
        out.insert(ids_[k]);
    return out;
}

std::set<std::string> GenealogyGraph::descendants(std::string_view id) const {
    std::set<std::string> out;
    for (const NodeIndex k : closure_indices(index_of(id), Direction::ToDescendants))
        out.insert(ids_[k]);
    return out;
}

std::map<std::string, double> GenealogyGraph::distance_to_set(std::string_view id,
                                                              const std::set<std::string>& targets,
                                                              Direction direction) const {
    const auto dist = bfs_distances(index_of(id), direction);
    std::map<std::string, double> out;
    for (const auto& t : targets) {
        const NodeIndex k = index_of(t);
        out[t] = dist[k] == kNoPath ? std::numeric_limits<double>::infinity()
                                    : static_cast<double>(dist[k]);
    }
    return out;
}

std::set<std::string> GenealogyGraph::generation_ancestors(std::string_view id, int n) const {
    if (n < 1) throw InvalidArgumentError("generation index must be >= 1");
    const auto dist = bfs_distances(index_of(id), Direction::FromAncestors);
    std::set<std::string> out;
    for (std::size_t k = 0; k < dist.size(); ++k)
        if (dist[k] == static_cast<std::uint32_t>(n)) out.insert(ids_[k]);
    return out;
}

std::optional<NcaResult> GenealogyGraph::nearest_common_ancestor(
    const std::set<std::string>& ids) const {
    if (ids.empty()) throw InvalidArgumentError("nearest_common_ancestor requires >= 1 id");
    // accumulate per candidate instead of keeping one distance row per member
    std::vector<std::uint32_t> max_d(node_count(), 0), hits(node_count(), 0);
    std::vector<std::uint64_t> sum_d(node_count(), 0);
    for (const auto& id : ids) {
        const auto dist = bfs_distances(index_of(id), Direction::FromAncestors);
        for (std::size_t k = 0; k < dist.size(); ++k) {
            const std::uint32_t d = dist[k];
            if (d == kNoPath || d == 0) continue; // d == 0: the member itself
            ++hits[k];
            sum_d[k] += d;
            max_d[k] = std::max(max_d[k], d);
        }
    }
    std::optional<NcaResult> best;
    for (std::size_t k = 0; k < node_count(); ++k) {
        if (hits[k] != ids.size()) continue; // not a common proper ancestor
        // ids_ is sorted, so strict improvement keeps the smallest id on ties
        if (!best || max_d[k] < best->max_distance ||
            (max_d[k] == best->max_distance && sum_d[k] < best->sum_distance))
            best = NcaResult{ids_[k], max_d[k], sum_d[k]};
    }
    return best;
}

std::map<std::string, std::size_t> GenealogyGraph::laureate_descendant_counts() const {
    std::vector<std::size_t> counts(node_count(), 0);
    for (const NodeIndex l : laureates_)
        for (const NodeIndex a : closure_indices(l, Direction::FromAncestors)) ++counts[a];
    std::map<std::string, std::size_t> out;
    for (std::size_t v = 0; v < node_count(); ++v) out[ids_[v]] = counts[v];
    return out;
}

} // namespace genealogy

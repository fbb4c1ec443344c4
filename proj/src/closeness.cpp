#include "genealogy/closeness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <unordered_map>

namespace genealogy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_exponent(double h) {
    if (h == 0.0) throw InvalidArgumentError("exponent h must be nonzero (geometric-mean limit unsupported)");
    if (!std::isfinite(h)) throw InvalidArgumentError("exponent h must be finite");
}

/// Final step of the Hölder mean. `sum` holds pow(D, h) over the `reached`
/// finite distances; `n` is |J'|. Under h < 0 unreachable members contribute
/// nothing, so an all-unreachable node has sum == 0 and mean +inf; under
/// h > 0 a single unreachable member already forces +inf.
double holder_from_sum(double sum, std::size_t reached, std::size_t n, double h) {
    if (n == 0) return kInf;
    if (h > 0 && reached < n) return kInf;
    if (h < 0 && sum == 0) return kInf;
    return std::pow(sum / static_cast<double>(n), 1.0 / h);
}

double closeness_of(double distance) {
    if (std::isinf(distance)) return 0.0;
    if (distance == 0) return kInf; // only reachable with exclude_self == false
    return 1.0 / distance;
}

std::vector<NodeIndex> subset_indices(const GenealogyGraph& g,
                                      const std::set<std::string>& subset) {
    std::vector<NodeIndex> out;
    out.reserve(subset.size());
    // std::set iterates in id order, which equals index order
    for (const auto& id : subset) out.push_back(g.index_of(id));
    return out;
}

/// Generation frontiers A_1 .. A_max_n of `i` (sorted), stopping early once
/// a frontier comes up empty.
std::vector<std::vector<NodeIndex>> ancestor_levels(const GenealogyGraph& g, NodeIndex i,
                                                    int max_n) {
    std::vector<std::vector<NodeIndex>> levels;
    std::vector<char> seen(g.node_count(), 0);
    seen[i] = 1;
    std::vector<NodeIndex> frontier{i};
    for (int n = 1; n <= max_n && !frontier.empty(); ++n) {
        std::vector<NodeIndex> next;
        for (const NodeIndex v : frontier)
            for (const NodeIndex a : g.advisors_of(v))
                if (!seen[a]) {
                    seen[a] = 1;
                    next.push_back(a);
                }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        levels.push_back(std::move(next));
        frontier = levels.back();
    }
    return levels;
}

std::size_t sorted_intersection_size(const std::vector<NodeIndex>& a,
                                     const std::vector<NodeIndex>& b) {
    std::size_t count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else
            ++count, ++ia, ++ib;
    }
    return count;
}

double horizontal_at(const std::vector<std::vector<NodeIndex>>& li,
                     const std::vector<std::vector<NodeIndex>>& lj, int n) {
    if (static_cast<int>(li.size()) < n || static_cast<int>(lj.size()) < n) return 0.0;
    const auto& ai = li[n - 1];
    const auto& aj = lj[n - 1];
    const std::size_t shared = sorted_intersection_size(ai, aj);
    return static_cast<double>(shared) / static_cast<double>(std::max(ai.size(), aj.size()));
}

double cross_distance_idx(const GenealogyGraph& g, NodeIndex i, NodeIndex j, int max_n) {
    const auto li = ancestor_levels(g, i, max_n);
    const auto lj = ancestor_levels(g, j, max_n);
    const int depth = static_cast<int>(std::min(li.size(), lj.size()));
    double best = kInf;
    for (int n = 1; n <= depth; ++n) {
        if (n >= best) break; // n / H >= n cannot improve anymore
        const double h = horizontal_at(li, lj, n);
        if (h > 0) best = std::min(best, n / h);
    }
    return best;
}

int effective_max_n(const GenealogyGraph& g, int max_n) {
    if (max_n <= 0) max_n = g.max_depth();
    return std::max(1, max_n);
}

unsigned worker_count(unsigned requested, std::size_t items) {
    unsigned t = requested != 0 ? requested : std::thread::hardware_concurrency();
    if (t == 0) t = 1;
    if (items < t) t = static_cast<unsigned>(std::max<std::size_t>(1, items));
    return t;
}

/// Runs fn(item, thread_id) over items 0..count-1 on `threads` workers.
/// Work is stolen via a shared cursor; correctness must not depend on which
/// thread runs which item.
template <typename Fn>
void parallel_items(std::size_t count, unsigned threads, Fn&& fn) {
    if (count == 0) return;
    std::atomic<std::size_t> cursor{0};
    auto worker = [&](unsigned tid) {
        for (;;) {
            const std::size_t item = cursor.fetch_add(1, std::memory_order_relaxed);
            if (item >= count) return;
            fn(item, tid);
        }
    };
    if (threads <= 1) {
        worker(0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
    worker(0);
    for (auto& th : pool) th.join();
}

/// Inverted per-generation index over the subset's ancestor levels:
/// buckets[n-1] maps node k (CSR) to the subset positions having k in A_n.
struct CrossIndex {
    int max_n = 0;
    std::vector<std::vector<std::uint32_t>> offsets; // [n-1], size V+1
    std::vector<std::vector<std::uint32_t>> entries; // [n-1], subset positions
    std::vector<std::vector<std::uint32_t>> level_size; // [pos][n-1] = |A_n(j_pos)|
};

CrossIndex build_cross_index(const GenealogyGraph& g, const std::vector<NodeIndex>& subset,
                             int max_n) {
    CrossIndex ix;
    ix.max_n = max_n;
    ix.level_size.resize(subset.size());
    std::vector<std::vector<std::pair<NodeIndex, std::uint32_t>>> collect(max_n);
    int used_levels = 0;
    for (std::uint32_t pos = 0; pos < subset.size(); ++pos) {
        const auto levels = ancestor_levels(g, subset[pos], max_n);
        used_levels = std::max(used_levels, static_cast<int>(levels.size()));
        for (std::size_t li = 0; li < levels.size(); ++li) {
            ix.level_size[pos].push_back(static_cast<std::uint32_t>(levels[li].size()));
            for (const NodeIndex k : levels[li]) collect[li].emplace_back(k, pos);
        }
    }
    collect.resize(used_levels); // deeper generations have no members, drop them

    const std::size_t v_count = g.node_count();
    ix.offsets.resize(collect.size());
    ix.entries.resize(collect.size());
    for (std::size_t li = 0; li < collect.size(); ++li) {
        auto& offsets = ix.offsets[li];
        offsets.assign(v_count + 1, 0);
        for (const auto& [k, pos] : collect[li]) ++offsets[k + 1];
        for (std::size_t v = 1; v <= v_count; ++v) offsets[v] += offsets[v - 1];
        ix.entries[li].resize(collect[li].size());
        std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
        // insertion order is ascending pos, kept stable by the counting sort
        for (const auto& [k, pos] : collect[li]) ix.entries[li][cursor[k]++] = pos;
    }
    return ix;
}

} // namespace

double holder_mean_distance(const GenealogyGraph& g, std::string_view id,
                            const HolderParams& params, ClosenessDirection direction) {
    check_exponent(params.h);
    const NodeIndex i = g.index_of(id);
    const auto subset = subset_indices(g, params.subset);
    const auto dist = g.bfs_distances(i, direction == ClosenessDirection::Out
                                             ? Direction::FromAncestors
                                             : Direction::ToDescendants);
    double sum = 0;
    std::size_t reached = 0, n = 0;
    for (const NodeIndex j : subset) {
        if (params.exclude_self && j == i) continue;
        ++n;
        if (dist[j] == kNoPath) continue;
        sum += std::pow(static_cast<double>(dist[j]), params.h);
        ++reached;
    }
    if (n == 0) throw EmptySubsetError();
    return holder_from_sum(sum, reached, n, params.h);
}

double horizontal_distance(const GenealogyGraph& g, std::string_view i, std::string_view j,
                           int n) {
    const NodeIndex vi = g.index_of(i);
    const NodeIndex vj = g.index_of(j);
    if (vi == vj) throw SameNodeError(std::string(i));
    if (n < 1) throw InvalidArgumentError("generation index must be >= 1");
    return horizontal_at(ancestor_levels(g, vi, n), ancestor_levels(g, vj, n), n);
}

double pairwise_cross_distance(const GenealogyGraph& g, std::string_view i, std::string_view j,
                               int max_n) {
    const NodeIndex vi = g.index_of(i);
    const NodeIndex vj = g.index_of(j);
    if (vi == vj) throw SameNodeError(std::string(i));
    if (max_n < 1) throw InvalidArgumentError("max_n must be >= 1");
    return cross_distance_idx(g, vi, vj, max_n);
}

double crosscloseness(const GenealogyGraph& g, std::string_view id, const HolderParams& params,
                      int max_n) {
    check_exponent(params.h);
    const NodeIndex i = g.index_of(id);
    const auto subset = subset_indices(g, params.subset);
    max_n = effective_max_n(g, max_n);

    double sum = 0;
    std::size_t reached = 0, n = 0;
    for (const NodeIndex j : subset) {
        if (params.exclude_self && j == i) continue;
        ++n;
        const double d = j == i ? 0.0 : cross_distance_idx(g, i, j, max_n);
        if (std::isinf(d)) continue;
        sum += std::pow(d, params.h);
        ++reached;
    }
    if (n == 0) throw EmptySubsetError();
    return closeness_of(holder_from_sum(sum, reached, n, params.h));
}

ClosenessReport closeness_report(const GenealogyGraph& g, const HolderParams& params,
                                 const ReportOptions& options) {
    check_exponent(params.h);
    if (params.subset.empty()) throw EmptySubsetError();
    const auto subset = subset_indices(g, params.subset);
    const int max_n = effective_max_n(g, options.max_n);
    const std::size_t v_count = g.node_count();
    const double h = params.h;

    // requested rows, ascending by id (== ascending index)
    std::vector<NodeIndex> wanted;
    if (options.ids) {
        for (const auto& id : *options.ids) wanted.push_back(g.index_of(id));
        std::sort(wanted.begin(), wanted.end());
        wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
    } else {
        wanted.resize(v_count);
        for (std::size_t v = 0; v < v_count; ++v) wanted[v] = static_cast<NodeIndex>(v);
    }

    std::vector<char> in_subset(v_count, 0);
    for (const NodeIndex j : subset) in_subset[j] = 1;

    // --- vertical sweeps: one forward + one reverse BFS per subset member,
    // parallel over weak components so every node is written by exactly one
    // worker and sums accumulate in ascending-j order ---
    std::vector<double> out_sum(v_count, 0), in_sum(v_count, 0);
    std::vector<std::uint32_t> out_cnt(v_count, 0), in_cnt(v_count, 0);

    std::vector<std::vector<NodeIndex>> subset_by_comp(g.component_count());
    for (const NodeIndex j : subset) subset_by_comp[g.component_of(j)].push_back(j);

    const unsigned vertical_threads = worker_count(options.threads, g.component_count());
    {
        struct Scratch {
            std::vector<std::uint32_t> stamp;
            std::uint32_t epoch = 0;
        };
        std::vector<Scratch> scratch(vertical_threads);
        parallel_items(g.component_count(), vertical_threads, [&](std::size_t comp, unsigned tid) {
            auto& sc = scratch[tid];
            if (sc.stamp.empty()) sc.stamp.assign(v_count, 0);
            std::vector<NodeIndex> cur, next;
            for (const NodeIndex j : subset_by_comp[comp]) {
                for (int pass = 0; pass < 2; ++pass) {
                    const bool forward = pass == 0; // forward feeds out-closeness
                    auto& sums = forward ? out_sum : in_sum;
                    auto& cnts = forward ? out_cnt : in_cnt;
                    ++sc.epoch;
                    sc.stamp[j] = sc.epoch;
                    cur.assign(1, j);
                    std::uint32_t d = 0;
                    if (!params.exclude_self) {
                        sums[j] += std::pow(0.0, h);
                        ++cnts[j];
                    }
                    while (!cur.empty()) {
                        ++d;
                        const double term = std::pow(static_cast<double>(d), h);
                        next.clear();
                        for (const NodeIndex v : cur) {
                            const auto adj = forward ? g.students_of(v) : g.advisors_of(v);
                            for (const NodeIndex w : adj)
                                if (sc.stamp[w] != sc.epoch) {
                                    sc.stamp[w] = sc.epoch;
                                    sums[w] += term;
                                    ++cnts[w];
                                    next.push_back(w);
                                }
                        }
                        cur.swap(next);
                    }
                }
            }
        });
    }

    // --- cross sweep: shared-ancestor counting against the subset's
    // per-generation index, parallel over requested nodes ---
    std::vector<double> cross_dist(v_count, kInf);
    const CrossIndex ix = build_cross_index(g, subset, max_n);

    std::unordered_map<NodeIndex, std::uint32_t> subset_pos;
    subset_pos.reserve(subset.size() * 2);
    for (std::uint32_t pos = 0; pos < subset.size(); ++pos) subset_pos.emplace(subset[pos], pos);

    const unsigned cross_threads = worker_count(options.threads, wanted.size());
    {
        struct Scratch {
            std::vector<std::uint32_t> stamp;
            std::uint32_t epoch = 0;
            std::vector<std::uint32_t> shared;
            std::vector<std::uint32_t> touched_shared;
            std::vector<double> best;
            std::vector<std::uint32_t> touched_best;
        };
        std::vector<Scratch> scratch(cross_threads);
        parallel_items(wanted.size(), cross_threads, [&](std::size_t item, unsigned tid) {
            auto& sc = scratch[tid];
            if (sc.stamp.empty()) {
                sc.stamp.assign(v_count, 0);
                sc.shared.assign(subset.size(), 0);
                sc.best.assign(subset.size(), kInf);
            }
            const NodeIndex i = wanted[item];

            ++sc.epoch;
            sc.stamp[i] = sc.epoch;
            std::vector<NodeIndex> cur{i}, next;
            const int levels = static_cast<int>(ix.offsets.size());
            for (int n = 1; n <= levels && !cur.empty(); ++n) {
                next.clear();
                for (const NodeIndex v : cur)
                    for (const NodeIndex a : g.advisors_of(v))
                        if (sc.stamp[a] != sc.epoch) {
                            sc.stamp[a] = sc.epoch;
                            next.push_back(a);
                        }
                if (next.empty()) break;
                const auto& offsets = ix.offsets[n - 1];
                const auto& entries = ix.entries[n - 1];
                for (const NodeIndex k : next)
                    for (std::uint32_t e = offsets[k]; e < offsets[k + 1]; ++e) {
                        const std::uint32_t pos = entries[e];
                        if (sc.shared[pos]++ == 0) sc.touched_shared.push_back(pos);
                    }
                const auto frontier_size = static_cast<std::uint32_t>(next.size());
                for (const std::uint32_t pos : sc.touched_shared) {
                    const std::uint32_t denom = std::max(frontier_size, ix.level_size[pos][n - 1]);
                    const double hval =
                        static_cast<double>(sc.shared[pos]) / static_cast<double>(denom);
                    const double cand = n / hval;
                    if (cand < sc.best[pos]) {
                        if (std::isinf(sc.best[pos])) sc.touched_best.push_back(pos);
                        sc.best[pos] = cand;
                    }
                    sc.shared[pos] = 0;
                }
                sc.touched_shared.clear();
                cur.swap(next);
            }

            // fold pairwise distances in ascending subset order
            std::sort(sc.touched_best.begin(), sc.touched_best.end());
            const auto self_it = subset_pos.find(i);
            const bool self_in_subset = self_it != subset_pos.end();
            const std::size_t n_prime =
                subset.size() - (self_in_subset && params.exclude_self ? 1 : 0);
            double sum = 0;
            std::size_t reached = 0;
            for (const std::uint32_t pos : sc.touched_best) {
                if (self_in_subset && pos == self_it->second) continue;
                sum += std::pow(sc.best[pos], h);
                ++reached;
            }
            if (self_in_subset && !params.exclude_self) {
                sum += std::pow(0.0, h);
                ++reached;
            }
            cross_dist[i] = holder_from_sum(sum, reached, n_prime, h);
            for (const std::uint32_t pos : sc.touched_best) sc.best[pos] = kInf;
            sc.touched_best.clear();
        });
    }

    ClosenessReport report;
    report.params = params;
    report.max_n = max_n;
    report.rows.reserve(wanted.size());
    for (const NodeIndex v : wanted) {
        const std::size_t n_prime =
            subset.size() - (in_subset[v] && params.exclude_self ? 1 : 0);
        ClosenessRow row;
        row.id = g.id_of(v);
        row.out_distance = holder_from_sum(out_sum[v], out_cnt[v], n_prime, h);
        row.in_distance = holder_from_sum(in_sum[v], in_cnt[v], n_prime, h);
        row.cross_distance = cross_dist[v];
        row.out_closeness = closeness_of(row.out_distance);
        row.in_closeness = closeness_of(row.in_distance);
        row.cross_closeness = closeness_of(row.cross_distance);
        row.total_closeness = row.out_closeness + row.in_closeness + row.cross_closeness;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::vector<KinshipEntry> kinship_neighborhood(const GenealogyGraph& g, std::string_view id,
                                               int max_n, bool laureate_lineage_only) {
    const NodeIndex i = g.index_of(id);
    if (max_n < 1) throw InvalidArgumentError("max_n must be >= 1");

    const auto levels = ancestor_levels(g, i, max_n);
    std::map<NodeIndex, std::pair<int, double>> found; // j -> (n, H)
    std::vector<std::uint32_t> down(g.node_count(), kNoPath);
    for (int n = 1; n <= static_cast<int>(levels.size()); ++n) {
        const auto& frontier = levels[n - 1];
        std::map<NodeIndex, std::size_t> shared;
        for (const NodeIndex k : frontier) {
            // depth-limited forward BFS: nodes whose shortest distance from k is exactly n
            std::fill(down.begin(), down.end(), kNoPath);
            down[k] = 0;
            std::vector<NodeIndex> cur{k}, next;
            for (int d = 1; d <= n && !cur.empty(); ++d) {
                next.clear();
                for (const NodeIndex v : cur)
                    for (const NodeIndex w : g.students_of(v))
                        if (down[w] == kNoPath) {
                            down[w] = static_cast<std::uint32_t>(d);
                            next.push_back(w);
                        }
                cur.swap(next);
            }
            for (const NodeIndex j : cur) ++shared[j];
        }
        for (const auto& [j, count] : shared) {
            if (j == i || found.contains(j)) continue;
            const auto levels_j = ancestor_levels(g, j, n);
            const std::size_t size_j = levels_j[n - 1].size(); // nonempty: k reached j at level n
            const double hval = static_cast<double>(count) /
                                static_cast<double>(std::max(frontier.size(), size_j));
            found.emplace(j, std::make_pair(n, hval));
        }
    }

    std::vector<char> keep(g.node_count(), 1);
    if (laureate_lineage_only) {
        std::fill(keep.begin(), keep.end(), 0);
        for (const NodeIndex l : g.laureates()) {
            keep[l] = 1;
            const auto dist = g.bfs_distances(l, Direction::FromAncestors);
            for (std::size_t v = 0; v < dist.size(); ++v)
                if (dist[v] != kNoPath) keep[v] = 1;
        }
    }

    std::vector<KinshipEntry> out;
    for (const auto& [j, tag] : found)
        if (keep[j]) out.push_back({g.id_of(j), tag.first, tag.second});
    std::sort(out.begin(), out.end(), [](const KinshipEntry& a, const KinshipEntry& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.h != b.h) return a.h > b.h;
        return a.id < b.id;
    });
    return out;
}

} // namespace genealogy
